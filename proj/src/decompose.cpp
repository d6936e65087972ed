#include "coarse/decompose.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>
#include <string>

#include "coarse/verify.hpp"

namespace coarse {

namespace {

long long fdiv(long long a, long long b) {
  return a >= 0 ? a / b : -((-a + b - 1) / b);
}

void require_connected(const Graph& g, const char* where) {
  if (auto bad = unreachable_pair(g)) {
    throw std::invalid_argument(std::string(where) + ": graph disconnected, vertices " +
                                std::to_string(bad->first) + " and " +
                                std::to_string(bad->second) + " unreachable");
  }
}

// smallest chain index i with members within ball(e.at(i), center), or -1
int covering_index(const CoarseChain& e, int center, const std::vector<int>& members) {
  int needed = 0;
  for (int m : members) {
    int i = needed;
    while (i <= e.radius() && !e.at(i).contains(center, m)) ++i;
    if (i > e.radius()) return -1;
    needed = i;
  }
  return needed;
}

}  // namespace

GridDecomposition grid_decomposition(int dim, int halfwidth, int scale) {
  if (scale < 1 || (scale & (scale - 1)) != 0) {
    throw std::invalid_argument("grid_decomposition: scale must be a power of two");
  }
  if (halfwidth % (2 * scale) != 0) {
    throw std::invalid_argument(
        "grid_decomposition: boundary misalignment, half-width " +
        std::to_string(halfwidth) + " is not a multiple of " + std::to_string(2 * scale));
  }
  Graph g = grid_graph(dim, halfwidth);
  const int n = g.points();
  const int side = 2 * halfwidth;
  const long long cell = 2LL * scale;

  std::vector<long long> stride(dim, 1);
  for (int i = dim - 2; i >= 0; --i) stride[i] = stride[i + 1] * side;
  auto id_of = [&](const std::vector<int>& c) {
    long long id = 0;
    for (int i = 0; i < dim; ++i) id += (c[i] + halfwidth) * stride[i];
    return static_cast<int>(id);
  };

  auto tile = [&](int shift) {
    std::map<std::vector<long long>, std::vector<int>> cells;
    for (int id = 0; id < n; ++id) {
      std::vector<long long> key(dim);
      for (int i = 0; i < dim; ++i) {
        key[i] = fdiv(g.window.coords[id][i] + halfwidth - shift, cell);
      }
      cells[key].push_back(id);
    }
    std::vector<std::vector<int>> classes;
    for (auto& [key, members] : cells) classes.push_back(std::move(members));
    return Partition::from_classes(n, std::move(classes));
  };
  Partition p0 = tile(0);
  Partition p1 = tile(scale);

  DecompositionCertificate cert;
  cert.window_size = n;
  cert.method = "example1";
  cert.pattern = {0};
  cert.p0 = p0;
  cert.p1 = p1;

  int max_index = 1;
  for (int part = 0; part < 2; ++part) {
    const Partition& p = part == 0 ? p0 : p1;
    for (int c = 0; c < p.class_count(); ++c) {
      const auto& members = p.classes[c];
      std::vector<int> lo = g.window.coords[members.front()];
      std::vector<int> hi = lo;
      for (int m : members) {
        for (int i = 0; i < dim; ++i) {
          lo[i] = std::min(lo[i], g.window.coords[m][i]);
          hi[i] = std::max(hi[i], g.window.coords[m][i]);
        }
      }
      std::vector<int> center(dim);
      int radius = 0;
      for (int i = 0; i < dim; ++i) {
        center[i] = lo[i] + (hi[i] - lo[i]) / 2;
        radius += hi[i] - center[i];  // = ceil(span/2)
      }
      cert.diameter_witnesses.push_back({part, c, id_of(center), radius});
      max_index = std::max(max_index, radius);
    }
  }

  for (auto [u, v] : g.edges) {
    EdgeWitness w;
    w.pair = {u, v};
    if (p0.class_of[u] == p0.class_of[v]) {
      w.pattern = {0};
    } else if (p1.class_of[u] == p1.class_of[v]) {
      w.pattern = {1};
    } else {
      throw std::logic_error("grid_decomposition: unit step not covered");
    }
    w.chain = {u, v};
    cert.edge_witnesses.push_back(std::move(w));
  }

  cert.budget_radius = max_index;
  cert.budget_maxlen = 1;
  cert.meta = {{"dimension", dim}, {"half_width", halfwidth}, {"scale", scale}};

  // interior = points whose shifted cell is unclipped
  for (int id = 0; id < n; ++id) {
    bool inside = true;
    for (int i = 0; i < dim; ++i) {
      int c = g.window.coords[id][i];
      if (c < -halfwidth + scale || c >= halfwidth - scale) inside = false;
    }
    if (inside) g.window.interior.push_back(id);
  }

  return GridDecomposition{std::move(g), std::move(cert)};
}

DecompositionOutcome sphere_decomposition(const Graph& g, int v0, int claimed_k) {
  require_connected(g, "sphere_decomposition");
  require_point(g.window, v0, "sphere_decomposition");

  DecompositionOutcome out;
  out.report = check_prop9(g, v0, claimed_k);
  if (!out.report.pass) return out;

  const int n = g.points();
  auto layer = bfs_distances(g, v0);

  // components of the induced graph on one layer-pair block
  auto components = [&](auto block_of) {
    std::vector<std::vector<int>> classes;
    std::vector<char> seen(n, 0);
    for (int s = 0; s < n; ++s) {
      if (seen[s] || block_of(s) < 0) continue;
      std::vector<int> comp;
      std::deque<int> queue{s};
      seen[s] = 1;
      while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        comp.push_back(v);
        for (int u : g.adj[v]) {
          if (!seen[u] && block_of(u) == block_of(v)) {
            seen[u] = 1;
            queue.push_back(u);
          }
        }
      }
      classes.push_back(std::move(comp));
    }
    return classes;
  };

  auto even_classes = components([&](int v) { return layer[v] / 2; });
  auto odd_classes = components([&](int v) {
    return layer[v] >= 1 ? (layer[v] - 1) / 2 : -1;
  });
  odd_classes.push_back({v0});

  DecompositionCertificate cert;
  cert.window_size = n;
  cert.method = "prop9";
  cert.pattern = {0};
  cert.p0 = Partition::from_classes(n, std::move(even_classes));
  cert.p1 = Partition::from_classes(n, std::move(odd_classes));

  DistanceOracle dist(g);
  int max_index = 1;
  for (int part = 0; part < 2; ++part) {
    const Partition& p = part == 0 ? cert.p0 : cert.p1;
    for (int c = 0; c < p.class_count(); ++c) {
      EnclosingBall eb = min_enclosing_ball(g, p.classes[c], dist);
      cert.diameter_witnesses.push_back({part, c, eb.center, eb.radius});
      max_index = std::max(max_index, eb.radius);
    }
  }

  for (auto [u, v] : g.edges) {
    int m = std::min(layer[u], layer[v]);
    int tag = (layer[u] == layer[v] || m % 2 == 0) ? 0 : 1;
    const Partition& p = tag == 0 ? cert.p0 : cert.p1;
    if (p.class_of[u] != p.class_of[v]) {
      throw std::logic_error("sphere_decomposition: edge left its layer block");
    }
    cert.edge_witnesses.push_back({{u, v}, {tag}, {u, v}});
  }

  cert.budget_radius = max_index;
  cert.budget_maxlen = 1;
  cert.meta = {{"v0", v0}, {"k_measured", out.report.constant("k_measured")}};
  out.certificate = std::move(cert);
  return out;
}

DecompositionOutcome linking_pair_decomposition(const Graph& g, const Partition& p,
                                                int r) {
  if (p.points() != g.points()) {
    throw std::invalid_argument("linking_pair_decomposition: partition on wrong window");
  }
  DecompositionOutcome out;
  out.report = check_prop10(g, p, r);
  if (!out.report.pass) return out;

  const int k = p.class_count();
  // neighbor classes: share an edge
  std::vector<std::vector<int>> nbr(k);
  {
    std::vector<std::vector<char>> seen(k);
    for (int a = 0; a < k; ++a) seen[a].assign(k, 0);
    for (auto [u, v] : g.edges) {
      int a = p.class_of[u], b = p.class_of[v];
      if (a != b && !seen[a][b]) {
        seen[a][b] = seen[b][a] = 1;
        nbr[a].push_back(b);
        nbr[b].push_back(a);
      }
    }
    for (auto& list : nbr) std::sort(list.begin(), list.end());
  }

  // injections: neighbor classes in ascending index -> members in ascending id
  std::vector<std::vector<int>> inj(k);  // inj[a][rank of b in nbr[a]] = member
  for (int a = 0; a < k; ++a) {
    if (static_cast<int>(nbr[a].size()) > static_cast<int>(p.classes[a].size())) {
      throw std::logic_error("linking_pair_decomposition: (ii) violated after check");
    }
    inj[a].assign(nbr[a].size(), -1);
    for (int t = 0; t < static_cast<int>(nbr[a].size()); ++t) {
      inj[a][t] = p.classes[a][t];
    }
  }
  auto linked = [&](int a, int b) {
    auto it = std::lower_bound(nbr[a].begin(), nbr[a].end(), b);
    return inj[a][static_cast<int>(it - nbr[a].begin())];
  };

  std::vector<std::vector<int>> pair_cells;
  std::vector<char> used(g.points(), 0);
  for (int a = 0; a < k; ++a) {
    for (int b : nbr[a]) {
      if (b >= a) break;
      int x = linked(b, a);  // f_beta(P_alpha), lives in class b
      int y = linked(a, b);  // f_alpha(P_beta), lives in class a
      if (used[x] || used[y]) {
        throw std::logic_error("linking_pair_decomposition: linking pairs not disjoint");
      }
      used[x] = used[y] = 1;
      pair_cells.push_back({std::min(x, y), std::max(x, y)});
    }
  }
  std::vector<std::vector<int>> gamma_classes = pair_cells;
  for (int v = 0; v < g.points(); ++v) {
    if (!used[v]) gamma_classes.push_back({v});
  }

  DecompositionCertificate cert;
  cert.window_size = g.points();
  cert.method = "prop10";
  cert.pattern = {0, 1, 0};
  cert.p0 = p;
  cert.p1 = Partition::from_classes(g.points(), std::move(gamma_classes));

  DistanceOracle dist(g);
  int max_index = 1;
  for (int c = 0; c < cert.p0.class_count(); ++c) {
    EnclosingBall eb = min_enclosing_ball(g, cert.p0.classes[c], dist);
    cert.diameter_witnesses.push_back({0, c, eb.center, eb.radius});
    max_index = std::max(max_index, eb.radius);
  }
  for (int c = 0; c < cert.p1.class_count(); ++c) {
    const auto& cls = cert.p1.classes[c];
    int radius = 0;
    if (cls.size() == 2) radius = dist.from(cls[0])[cls[1]];
    cert.diameter_witnesses.push_back({1, c, cls.front(), radius});
    max_index = std::max(max_index, radius);
  }

  bool crossed = false;
  for (auto [u, v] : g.edges) {
    int a = p.class_of[u], b = p.class_of[v];
    EdgeWitness w;
    w.pair = {u, v};
    if (a == b) {
      w.pattern = {0};
      w.chain = {u, v};
    } else {
      crossed = true;
      w.pattern = {0, 1, 0};
      w.chain = {u, linked(a, b), linked(b, a), v};
    }
    cert.edge_witnesses.push_back(std::move(w));
  }

  cert.budget_radius = max_index;
  cert.budget_maxlen = crossed ? 3 : 1;
  cert.meta = {{"r", r}, {"linking_pairs", static_cast<long long>(pair_cells.size())}};
  out.certificate = std::move(cert);
  return out;
}

DecompositionOutcome net_decomposition(const Graph& g, int r) {
  if (r < 1) throw std::invalid_argument("net_decomposition: radius must be positive");
  require_connected(g, "net_decomposition");
  const int n = g.points();

  DistanceOracle dist(g);
  std::vector<int> net;
  for (int v = 0; v < n; ++v) {
    bool ok = true;
    for (int x : net) {
      if (dist.from(x)[v] <= 2 * r) {
        ok = false;
        break;
      }
    }
    if (ok) net.push_back(v);
  }

  // nearest net point, ties to the smaller net id
  std::vector<std::vector<int>> cells(net.size());
  for (int v = 0; v < n; ++v) {
    int best = -1, best_d = -1;
    for (int i = 0; i < static_cast<int>(net.size()); ++i) {
      int d = dist.from(net[i])[v];
      if (best == -1 || d < best_d) {
        best = i;
        best_d = d;
      }
    }
    if (best_d > 2 * r) {
      throw std::logic_error("net_decomposition: maximality violated");
    }
    cells[best].push_back(v);
  }
  Partition p = Partition::from_classes(n, std::move(cells));

  DecompositionOutcome out = linking_pair_decomposition(g, p, 2 * r);
  out.report.proposition = "prop11";
  out.report.set_constant("r", r);
  out.report.set_constant("net_size", static_cast<long long>(net.size()));
  if (out.certificate) {
    out.certificate->method = "prop11";
    out.certificate->meta = {{"r", r},
                             {"net_size", static_cast<long long>(net.size())}};
  }
  return out;
}

Subdivision subdivide(const Graph& g) {
  require_connected(g, "subdivide");
  const int n = g.points();
  const int m = static_cast<int>(g.edges.size());
  std::vector<std::pair<int, int>> edges;
  std::vector<std::vector<int>> cells(n);
  for (int v = 0; v < n; ++v) cells[v] = {v};
  for (int k = 0; k < m; ++k) {
    auto [u, v] = g.edges[k];
    int x = n + 2 * k, y = n + 2 * k + 1;
    edges.emplace_back(u, x);
    edges.emplace_back(x, y);
    edges.emplace_back(y, v);
    cells[u].push_back(x);
    cells[v].push_back(y);
  }
  Subdivision out;
  out.graph = make_graph(n + 2 * m, std::move(edges));
  out.cells = Partition::from_classes(n + 2 * m, std::move(cells));
  return out;
}

PullbackResult pullback_decomposition(const CoarseChain& e, const std::vector<int>& y,
                                      const DecompositionCertificate& cert_on_y) {
  const int n = e.window.size;
  std::vector<int> ys = y;
  std::sort(ys.begin(), ys.end());
  ys.erase(std::unique(ys.begin(), ys.end()), ys.end());
  if (ys.empty()) throw std::invalid_argument("pullback: empty subset");
  if (ys.front() < 0 || ys.back() >= n) {
    throw std::invalid_argument("pullback: subset point outside window");
  }
  if (cert_on_y.window_size != static_cast<int>(ys.size())) {
    throw std::invalid_argument("pullback: certificate window does not match subset");
  }

  // smallest symmetric index with X = B(Y, eps)
  int large = -1;
  int uncovered = -1;
  for (int i = 0; i <= e.radius() && large < 0; ++i) {
    if (!e.at(i).symmetric()) continue;
    uncovered = -1;
    std::vector<char> covered(n, 0);
    for (int p : ys) {
      e.at(i).for_each_in_row(p, [&](int x) { covered[x] = 1; });
    }
    for (int x = 0; x < n; ++x) {
      if (!covered[x]) {
        uncovered = x;
        break;
      }
    }
    if (uncovered < 0) large = i;
  }
  if (large < 0) {
    throw std::invalid_argument("pullback: subset not large at any index, point " +
                                std::to_string(uncovered) + " uncovered");
  }

  std::vector<int> to_local(n, -1);
  for (int i = 0; i < static_cast<int>(ys.size()); ++i) to_local[ys[i]] = i;

  std::vector<int> f(n, -1);
  for (int x = 0; x < n; ++x) {
    if (to_local[x] >= 0) {
      f[x] = x;
      continue;
    }
    for (int p : ys) {
      if (e.at(large).contains(x, p)) {
        f[x] = p;
        break;
      }
    }
  }

  auto pull = [&](const Partition& py) {
    std::vector<std::vector<int>> classes(py.class_count());
    for (int x = 0; x < n; ++x) {
      classes[py.class_of[to_local[f[x]]]].push_back(x);
    }
    return Partition::from_classes(n, std::move(classes));
  };

  DecompositionCertificate cert;
  cert.window_size = n;
  cert.method = "prop13";
  cert.seed = cert_on_y.seed;
  cert.p0 = pull(cert_on_y.p0);
  cert.p1 = pull(cert_on_y.p1);

  // witness lookup and generator adjacency on the subset, local ids
  std::map<std::pair<int, int>, const EdgeWitness*> wmap;
  std::vector<std::vector<int>> yadj(ys.size());
  for (const auto& w : cert_on_y.edge_witnesses) {
    auto key = std::minmax(w.pair.first, w.pair.second);
    wmap[{key.first, key.second}] = &w;
    yadj[w.pair.first].push_back(w.pair.second);
    yadj[w.pair.second].push_back(w.pair.first);
  }
  for (auto& list : yadj) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
  }

  auto local_path = [&](int a, int b) {
    std::vector<int> parent(ys.size(), -1);
    std::deque<int> queue{a};
    parent[a] = a;
    while (!queue.empty() && parent[b] == -1) {
      int v = queue.front();
      queue.pop_front();
      for (int u : yadj[v]) {
        if (parent[u] == -1) {
          parent[u] = v;
          queue.push_back(u);
        }
      }
    }
    if (parent[b] == -1) {
      throw std::logic_error("pullback: no witness path between retraction images");
    }
    std::vector<int> path;
    for (int v = b; v != a; v = parent[v]) path.push_back(v);
    path.push_back(a);
    std::reverse(path.begin(), path.end());
    return path;
  };

  int maxlen = 1;
  for (auto [u, v] : e.generator().off_diagonal_pairs()) {
    if (u > v) continue;
    EdgeWitness w;
    w.pair = {u, v};
    int a = to_local[f[u]], b = to_local[f[v]];
    if (a == b) {
      w.pattern = {0};
      w.chain = {u, v};
    } else {
      auto path = local_path(a, b);
      w.chain = {u};
      for (std::size_t s = 0; s + 1 < path.size(); ++s) {
        int p = path[s], q = path[s + 1];
        const EdgeWitness* seg = wmap.at(std::minmax(p, q));
        std::vector<int> chain = seg->chain;
        std::vector<int> pattern = seg->pattern;
        if (seg->pair.first != p) {
          std::reverse(chain.begin(), chain.end());
          std::reverse(pattern.begin(), pattern.end());
        }
        for (std::size_t t = 1; t < chain.size(); ++t) w.chain.push_back(ys[chain[t]]);
        w.pattern.insert(w.pattern.end(), pattern.begin(), pattern.end());
      }
      w.chain.back() = v;
    }
    maxlen = std::max(maxlen, static_cast<int>(w.pattern.size()));
    cert.edge_witnesses.push_back(std::move(w));
  }

  int max_index = 1;
  for (int part = 0; part < 2; ++part) {
    const Partition& p = part == 0 ? cert.p0 : cert.p1;
    for (int c = 0; c < p.class_count(); ++c) {
      int best_center = -1, best_index = -1;
      for (int cand : p.classes[c]) {
        int idx = covering_index(e, cand, p.classes[c]);
        if (idx >= 0 && (best_index < 0 || idx < best_index)) {
          best_index = idx;
          best_center = cand;
        }
      }
      if (best_index < 0) {
        throw std::invalid_argument("pullback: pulled-back class exceeds chain radius");
      }
      cert.diameter_witnesses.push_back({part, c, best_center, best_index});
      max_index = std::max(max_index, best_index);
    }
  }

  cert.pattern = cert_on_y.pattern;
  cert.budget_radius = e.radius();
  cert.budget_maxlen = maxlen;
  cert.meta = {{"largeness_index", large},
               {"subset_size", static_cast<long long>(ys.size())},
               {"max_diameter_index", max_index}};

  PullbackResult out;
  out.largeness_index = large;
  out.retraction = std::move(f);
  out.certificate = std::move(cert);
  return out;
}

UnitGraphResult unit_graph(const MetricWindow& m, int radius) {
  require_valid_metric(m, "unit_graph");
  const int n = m.points();
  std::vector<std::pair<int, int>> edges;
  for (int x = 0; x < n; ++x) {
    for (int y = x + 1; y < n; ++y) {
      long long d = m.num_at(x, y);
      if (d > 0 && d <= m.den) edges.emplace_back(x, y);
    }
  }
  Graph g = make_graph(m.window, std::move(edges));
  if (auto bad = unreachable_pair(g)) {
    throw std::invalid_argument("unit_graph: geodesic hypothesis violated by sample, "
                                "vertices " +
                                std::to_string(bad->first) + " and " +
                                std::to_string(bad->second) + " disconnected");
  }
  UnitGraphResult out;
  CoarseChain cg = from_graph(g, radius);
  CoarseChain cm = from_metric(m, radius);
  out.metric_in_graph = contains(cg, cm);
  out.graph_in_metric = contains(cm, cg);
  out.graph = std::move(g);
  return out;
}

}  // namespace coarse
