#include "coarse/verify.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>
#include <string>

namespace coarse {

namespace {

std::string pair_str(int x, int y) {
  return "(" + std::to_string(x) + "," + std::to_string(y) + ")";
}

}  // namespace

VerificationReport verify_certificate(const CoarseChain& e,
                                      const DecompositionCertificate& cert) {
  VerificationReport rep;
  auto fail = [&](std::string why) {
    rep.pass = false;
    rep.first_failure = std::move(why);
    return rep;
  };

  const int n = e.window.size;
  if (cert.window_size != n) {
    return fail("window mismatch: certificate on " + std::to_string(cert.window_size) +
                " points, structure on " + std::to_string(n));
  }
  if (e.radius() < 1) {
    return fail("chain has no generator level");
  }

  // (a) both partitions valid; rebuild rather than trust class_of
  Partition parts[2];
  for (int t = 0; t < 2; ++t) {
    try {
      parts[t] = Partition::from_classes(n, (t == 0 ? cert.p0 : cert.p1).classes);
    } catch (const std::invalid_argument& ex) {
      return fail("p" + std::to_string(t) + " is not a partition: " + ex.what());
    }
  }

  // (b) one diameter witness per class, replayed against chain balls
  std::map<std::pair<int, int>, DiameterWitness> seen;
  for (const auto& w : cert.diameter_witnesses) {
    if (w.partition != 0 && w.partition != 1) return fail("diameter witness: bad partition tag");
    const Partition& p = parts[w.partition];
    if (w.cls < 0 || w.cls >= p.class_count()) {
      return fail("diameter witness: class index " + std::to_string(w.cls) +
                  " out of range");
    }
    if (!seen.emplace(std::make_pair(w.partition, w.cls), w).second) {
      return fail("diameter witness: duplicate for p" + std::to_string(w.partition) +
                  " class " + std::to_string(w.cls));
    }
    if (w.center < 0 || w.center >= n) return fail("diameter witness: center outside window");
    if (w.index < 0 || w.index > e.radius()) {
      return fail("diameter witness: index " + std::to_string(w.index) +
                  " beyond chain radius " + std::to_string(e.radius()));
    }
    for (int m : p.classes[w.cls]) {
      if (!e.at(w.index).contains(w.center, m)) {
        return fail("diameter witness: point " + std::to_string(m) + " of p" +
                    std::to_string(w.partition) + " class " + std::to_string(w.cls) +
                    " outside ball(" + std::to_string(w.index) + ", " +
                    std::to_string(w.center) + ")");
      }
    }
    rep.max_diameter_index = std::max(rep.max_diameter_index, w.index);
    ++rep.checked_classes;
  }
  for (int t = 0; t < 2; ++t) {
    for (int c = 0; c < parts[t].class_count(); ++c) {
      if (!seen.count({t, c})) {
        return fail("p" + std::to_string(t) + " class " + std::to_string(c) +
                    " has no diameter witness");
      }
    }
  }

  // (c) witness chains replay and cover every generator pair
  std::map<std::pair<int, int>, const EdgeWitness*> wmap;
  for (const auto& w : cert.edge_witnesses) {
    auto [u, v] = w.pair;
    if (u < 0 || u >= n || v < 0 || v >= n) return fail("edge witness: pair outside window");
    auto key = std::minmax(u, v);
    if (!wmap.emplace(std::make_pair(key.first, key.second), &w).second) {
      return fail("edge witness: duplicate for pair " + pair_str(u, v));
    }
    if (w.pattern.empty() || w.chain.size() != w.pattern.size() + 1) {
      return fail("edge witness " + pair_str(u, v) + ": chain/pattern length mismatch");
    }
    if (w.chain.front() != u || w.chain.back() != v) {
      return fail("edge witness " + pair_str(u, v) + ": chain endpoints differ from pair");
    }
    for (std::size_t j = 0; j < w.pattern.size(); ++j) {
      int tag = w.pattern[j];
      if (tag != 0 && tag != 1) {
        return fail("edge witness " + pair_str(u, v) + ": bad pattern tag");
      }
      int az = w.chain[j], bz = w.chain[j + 1];
      if (az < 0 || az >= n || bz < 0 || bz >= n) {
        return fail("edge witness " + pair_str(u, v) + ": chain point outside window");
      }
      if (parts[tag].class_of[az] != parts[tag].class_of[bz]) {
        return fail("edge witness " + pair_str(u, v) + ": hop " + std::to_string(j) +
                    " leaves its p" + std::to_string(tag) + " class");
      }
    }
    rep.max_pattern_len = std::max(rep.max_pattern_len,
                                   static_cast<int>(w.pattern.size()));
    ++rep.checked_witnesses;
  }
  for (auto [x, y] : e.generator().off_diagonal_pairs()) {
    if (x > y) continue;
    ++rep.checked_edges;
    if (!wmap.count({x, y})) {
      return fail("missing witness for generator pair " + pair_str(x, y));
    }
  }

  rep.pass = true;
  return rep;
}

OracleResult oracle_join_covers(const CoarseChain& e, const Partition& p0,
                                const Partition& p1, int maxlen, int size_cap) {
  const int n = e.window.size;
  if (n > size_cap) {
    throw std::invalid_argument("oracle_join_covers: window of " + std::to_string(n) +
                                " points exceeds cap " + std::to_string(size_cap));
  }
  if (maxlen < 1) throw std::invalid_argument("oracle_join_covers: maxlen must be >= 1");
  if (p0.points() != n || p1.points() != n) {
    throw std::invalid_argument("oracle_join_covers: partition on wrong window");
  }
  Entourage base = unite(equivalence_from_partition(p0), equivalence_from_partition(p1));
  Entourage closure = base;
  for (int step = 2; step <= maxlen; ++step) closure = compose(closure, base);

  OracleResult out;
  for (auto [x, y] : e.generator().off_diagonal_pairs()) {
    if (!closure.contains(x, y)) {
      out.pass = false;
      out.counterexample = {x, y};
      return out;
    }
  }
  out.pass = true;
  return out;
}

bool transversal_covers(const Entourage& eps, const TransversalComplement& tc,
                        std::pair<int, int>* failing) {
  const int n = eps.points();
  for (int x = 0; x < n; ++x) {
    int rx = tc.representative[x];
    if (rx < 0 || !eps.contains(x, rx)) {
      if (failing) *failing = {x, x};
      return false;
    }
    for (int y = 0; y < n; ++y) {
      int ry = tc.representative[y];
      if (!tc.eps_a.contains(rx, ry) || !eps.contains(ry, y)) {
        if (failing) *failing = {x, y};
        return false;
      }
    }
  }
  return true;
}

HypothesisReport check_prop9(const Graph& g, int v0, int claimed_k) {
  require_point(g.window, v0, "check_prop9");
  HypothesisReport rep;
  rep.proposition = "prop9";
  auto layer = bfs_distances(g, v0);
  const int n = g.points();
  int max_layer = 0;
  for (int v = 0; v < n; ++v) max_layer = std::max(max_layer, layer[v]);

  DistanceOracle dist(g);
  int k_measured = 0;
  int worst_m = -1, worst_vertex = -1;
  for (int m = 0; m <= max_layer; ++m) {
    std::vector<char> in_block(n, 0), visited(n, 0);
    for (int v = 0; v < n; ++v) {
      if (layer[v] == m || layer[v] == m + 1) in_block[v] = 1;
    }
    for (int s = 0; s < n; ++s) {
      if (!in_block[s] || visited[s]) continue;
      std::vector<int> comp;
      std::deque<int> queue{s};
      visited[s] = 1;
      while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        comp.push_back(v);
        for (int u : g.adj[v]) {
          if (in_block[u] && !visited[u]) {
            visited[u] = 1;
            queue.push_back(u);
          }
        }
      }
      EnclosingBall eb = min_enclosing_ball(g, comp, dist);
      if (eb.radius > k_measured) {
        k_measured = eb.radius;
        worst_m = m;
        worst_vertex = s;
      }
    }
  }
  rep.set_constant("k_measured", k_measured);
  rep.set_constant("k_claimed", claimed_k);
  rep.pass = claimed_k < 0 || k_measured <= claimed_k;
  if (!rep.pass) {
    rep.failing_vertex = worst_vertex;
    rep.failing_object = "component of layer graph " + std::to_string(worst_m) +
                         " containing vertex " + std::to_string(worst_vertex) +
                         " needs radius " + std::to_string(k_measured);
  }
  return rep;
}

HypothesisReport check_prop10(const Graph& g, const Partition& p, int r) {
  if (p.points() != g.points()) {
    throw std::invalid_argument("check_prop10: partition on wrong window");
  }
  HypothesisReport rep;
  rep.proposition = "prop10";
  rep.set_constant("r", r);

  DistanceOracle dist(g);
  int r_measured = 0;
  for (int c = 0; c < p.class_count(); ++c) {
    EnclosingBall eb = min_enclosing_ball(g, p.classes[c], dist);
    r_measured = std::max(r_measured, eb.radius);
    if (eb.radius > r) {
      rep.pass = false;
      rep.failing_class = c;
      rep.failing_object = "condition (i): class " + std::to_string(c) +
                           " needs radius " + std::to_string(eb.radius);
      rep.set_constant("r_measured", eb.radius);
      return rep;
    }
  }
  rep.set_constant("r_measured", r_measured);

  const int k = p.class_count();
  std::vector<std::vector<char>> seen(k);
  for (int a = 0; a < k; ++a) seen[a].assign(k, 0);
  std::vector<int> nbr_count(k, 0);
  for (auto [u, v] : g.edges) {
    int a = p.class_of[u], b = p.class_of[v];
    if (a != b && !seen[a][b]) {
      seen[a][b] = seen[b][a] = 1;
      ++nbr_count[a];
      ++nbr_count[b];
    }
  }
  int excess_class = -1;
  for (int c = 0; c < k; ++c) {
    if (nbr_count[c] > static_cast<int>(p.classes[c].size())) {
      excess_class = c;
      break;
    }
  }
  if (excess_class >= 0) {
    rep.pass = false;
    rep.failing_class = excess_class;
    rep.failing_object = "condition (ii): class " + std::to_string(excess_class) +
                         " has " + std::to_string(nbr_count[excess_class]) +
                         " neighbor classes but only " +
                         std::to_string(p.classes[excess_class].size()) + " points";
    rep.set_constant("neighbors", nbr_count[excess_class]);
    rep.set_constant("class_size",
                     static_cast<long long>(p.classes[excess_class].size()));
    return rep;
  }
  rep.pass = true;
  return rep;
}

HypothesisReport check_prop11_net(const Graph& g, int r, const std::vector<int>& net) {
  HypothesisReport rep;
  rep.proposition = "prop11";
  rep.set_constant("r", r);
  rep.set_constant("net_size", static_cast<long long>(net.size()));
  DistanceOracle dist(g);
  for (std::size_t i = 0; i < net.size(); ++i) {
    const auto& row = dist.from(net[i]);
    for (std::size_t j = i + 1; j < net.size(); ++j) {
      if (row[net[j]] <= 2 * r) {
        rep.pass = false;
        rep.failing_vertex = net[j];
        rep.failing_object = "balls of net points " + std::to_string(net[i]) + " and " +
                             std::to_string(net[j]) + " overlap at radius " +
                             std::to_string(r);
        return rep;
      }
    }
  }
  rep.pass = true;
  return rep;
}

HypothesisReport check_uniform_local_finiteness(const Graph& g) {
  HypothesisReport rep;
  rep.proposition = "comment5_ulf";
  int m = 0;
  for (int v = 0; v < g.points(); ++v) m = std::max(m, g.degree(v));
  rep.set_constant("max_degree", m);
  rep.pass = true;
  return rep;
}

}  // namespace coarse
