#include "coarse/structures.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <string>

namespace coarse {

namespace {

// chain whose level i collects all pairs first seen at index <= i
CoarseChain accumulate_levels(Window w, std::vector<Entourage> deltas, std::string label) {
  for (int i = 1; i < static_cast<int>(deltas.size()); ++i) {
    deltas[i] = unite(deltas[i], deltas[i - 1]);
  }
  CoarseChain c;
  c.window = std::move(w);
  c.levels = std::move(deltas);
  c.label = std::move(label);
  return c;
}

}  // namespace

CoarseChain from_graph(const Graph& g, int radius) {
  if (radius < 0) throw std::invalid_argument("from_graph: negative radius");
  if (auto bad = unreachable_pair(g)) {
    throw std::invalid_argument("from_graph: graph disconnected, vertices " +
                                std::to_string(bad->first) + " and " +
                                std::to_string(bad->second) + " unreachable");
  }
  const int n = g.points();
  std::vector<Entourage> levels(radius + 1, Entourage(n));
  for (int src = 0; src < n; ++src) {
    auto dist = bfs_distances(g, src);
    for (int v = 0; v < n; ++v) {
      if (dist[v] > 0 && dist[v] <= radius) levels[dist[v]].add(src, v);
    }
  }
  return accumulate_levels(g.window, std::move(levels), "graph");
}

CoarseChain from_metric(const MetricWindow& m, int radius) {
  if (radius < 0) throw std::invalid_argument("from_metric: negative radius");
  require_valid_metric(m, "from_metric");
  const int n = m.points();
  std::vector<Entourage> levels(radius + 1, Entourage(n));
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (x == y) continue;
      long long num = m.num_at(x, y);
      // smallest integer i with d <= i
      long long idx = (num + m.den - 1) / m.den;
      if (idx <= radius) levels[static_cast<int>(idx)].add(x, y);
    }
  }
  return accumulate_levels(m.window, std::move(levels), "metric");
}

CoarseChain from_ideal(const Window& w, const IdealSpec& spec, int radius) {
  if (radius < 0) throw std::invalid_argument("from_ideal: negative radius");
  const int n = w.size;
  std::vector<char> in_a(n, 0);
  for (int x : spec.a) {
    require_point(w, x, "from_ideal");
    in_a[x] = 1;
  }
  std::vector<int> extras;  // non-A points in id order
  for (int x = 0; x < n; ++x) {
    if (!in_a[x]) extras.push_back(x);
  }
  std::vector<Entourage> levels;
  levels.reserve(radius + 1);
  levels.emplace_back(n);
  for (int i = 1; i <= radius; ++i) {
    Entourage e(n);
    std::vector<int> cls;
    for (int x = 0; x < n; ++x) {
      if (in_a[x]) cls.push_back(x);
    }
    int take = std::min<int>(i - 1, static_cast<int>(extras.size()));
    for (int k = 0; k < take; ++k) cls.push_back(extras[k]);
    for (int x : cls) {
      for (int y : cls) e.add(x, y);
    }
    levels.push_back(std::move(e));
  }
  CoarseChain c;
  c.window = w;
  c.levels = std::move(levels);
  c.label = "ideal";
  return c;
}

CoarseChain from_permutations(const Window& w, const PermutationSet& ps, int radius) {
  if (radius < 0) throw std::invalid_argument("from_permutations: negative radius");
  const int n = w.size;
  for (const auto& perm : ps.perms) {
    if (static_cast<int>(perm.size()) != n) {
      throw std::invalid_argument("from_permutations: permutation on wrong window");
    }
    std::vector<char> hit(n, 0);
    for (int x = 0; x < n; ++x) {
      if (perm[x] < 0 || perm[x] >= n || hit[perm[x]]) {
        throw std::invalid_argument("from_permutations: not a bijection at point " +
                                    std::to_string(x));
      }
      hit[perm[x]] = 1;
    }
  }
  Entourage step(n);
  for (const auto& perm : ps.perms) {
    for (int x = 0; x < n; ++x) step.add_symmetric(x, perm[x]);
  }
  CoarseChain c;
  c.window = w;
  c.levels.emplace_back(n);
  if (radius >= 1) c.levels.push_back(step);
  for (int i = 2; i <= radius; ++i) c.levels.push_back(compose(c.levels.back(), step));
  c.label = "permutation";
  return c;
}

TranspositionRealization entourage_to_permutations(const Entourage& e) {
  const int n = e.points();
  std::vector<std::pair<int, int>> pairs;
  for (int x = 0; x < n; ++x) {
    e.for_each_in_row(x, [&](int y) {
      if (y != x) pairs.emplace_back(std::min(x, y), std::max(x, y));
    });
  }
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());

  TranspositionRealization out;
  out.set.perms.reserve(pairs.size());
  for (auto [x, y] : pairs) {
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    std::swap(perm[x], perm[y]);
    out.set.perms.push_back(std::move(perm));
  }
  Entourage sym = unite(e, inverse(e));
  int bound = 0;
  for (int x = 0; x < n; ++x) {
    bound = std::max(bound, static_cast<int>(sym.row_members(x).size()));
  }
  out.uniform_ball_bound = bound;
  return out;
}

CoarseChain meet(const CoarseChain& a, const CoarseChain& b) {
  require_same_window(a.window, b.window, "meet");
  // diagonal index pairing: since both chains ascend, the intersections
  // a_i n b_i are cofinal among all a_i n b_j
  const int r = std::min(a.radius(), b.radius());
  CoarseChain c;
  c.window = a.window;
  c.levels.reserve(r + 1);
  for (int i = 0; i <= r; ++i) c.levels.push_back(intersect(a.at(i), b.at(i)));
  c.label = "meet";
  return c;
}

std::optional<JoinWitness> join_member(std::pair<int, int> pair, const CoarseChain& e1,
                                       const CoarseChain& e2, int maxlen) {
  require_same_window(e1.window, e2.window, "join_member");
  require_point(e1.window, pair.first, "join_member");
  require_point(e1.window, pair.second, "join_member");
  if (maxlen < 1) throw std::invalid_argument("join_member: word budget must be >= 1");

  const auto [x, y] = pair;
  const int n = e1.window.size;
  const Entourage* tops[2] = {&e1.top(), &e2.top()};
  const int top_index[2] = {e1.radius(), e2.radius()};

  if (x == y) {
    JoinWitness w;
    w.word.letters.push_back({0, top_index[0]});
    w.points = {x, x};
    return w;
  }

  std::vector<int> dist(n, -1), parent(n, -1), letter(n, -1);
  std::deque<int> queue;
  dist[x] = 0;
  queue.push_back(x);
  while (!queue.empty() && dist[y] == -1) {
    int v = queue.front();
    queue.pop_front();
    if (dist[v] >= maxlen) continue;
    for (int tag = 0; tag < 2; ++tag) {
      tops[tag]->for_each_in_row(v, [&](int u) {
        if (dist[u] == -1) {
          dist[u] = dist[v] + 1;
          parent[u] = v;
          letter[u] = tag;
          queue.push_back(u);
        }
      });
    }
  }
  if (dist[y] == -1) return std::nullopt;

  JoinWitness w;
  std::vector<int> rev;
  std::vector<int> tags;
  for (int v = y; v != x; v = parent[v]) {
    rev.push_back(v);
    tags.push_back(letter[v]);
  }
  rev.push_back(x);
  std::reverse(rev.begin(), rev.end());
  std::reverse(tags.begin(), tags.end());
  w.points = std::move(rev);
  for (int t : tags) w.word.letters.push_back({t, top_index[t]});
  return w;
}

ContainsResult contains(const CoarseChain& outer, const CoarseChain& inner) {
  require_same_window(outer.window, inner.window, "contains");
  ContainsResult res;
  res.modulus.assign(inner.radius() + 1, 0);
  int j = 0;  // moduli are monotone since the inner chain ascends
  for (int i = 0; i <= inner.radius(); ++i) {
    while (j <= outer.radius() && !inner.at(i).subset_of(outer.at(j))) ++j;
    if (j > outer.radius()) {
      res.contained = false;
      res.fail_index = i;
      // first pair of inner.at(i) outside outer's top
      const Entourage& top = outer.top();
      for (auto [x, y] : inner.at(i).off_diagonal_pairs()) {
        if (!top.contains(x, y)) {
          res.fail_pair = {x, y};
          break;
        }
      }
      res.modulus.clear();
      return res;
    }
    res.modulus[i] = j;
  }
  res.contained = true;
  return res;
}

CoarseChain generated_by(const Entourage& equivalence, int max_radius) {
  Partition p = partition_from_equivalence(equivalence);
  const int k = p.class_count();
  int top = (max_radius < 0) ? k : std::min(max_radius, k);
  CoarseChain c;
  c.window.size = equivalence.points();
  c.levels.emplace_back(equivalence.points());
  if (top >= 1) c.levels.push_back(equivalence);
  for (int i = 2; i <= top; ++i) {
    std::vector<int> first(i);
    for (int j = 0; j < i; ++j) first[j] = j;
    c.levels.push_back(equivalence_from_partition(merge_classes(p, first)));
  }
  c.label = "cellular";
  return c;
}

TransversalComplement transversal_complement(const CoarseChain& cellular, int eps_index) {
  if (eps_index < 0 || eps_index > cellular.radius()) {
    throw std::invalid_argument("transversal_complement: bad designated index");
  }
  Partition p = partition_from_equivalence(cellular.at(eps_index));
  TransversalComplement out;
  out.degenerate = p.class_count() < 2;
  out.representative.assign(p.points(), -1);
  for (const auto& cls : p.classes) {
    out.ideal.a.push_back(cls.front());  // classes are min-id sorted
    for (int x : cls) out.representative[x] = cls.front();
  }
  Entourage ea(p.points());
  for (int x : out.ideal.a) {
    for (int y : out.ideal.a) ea.add(x, y);
  }
  out.eps_a = std::move(ea);
  return out;
}

}  // namespace coarse
