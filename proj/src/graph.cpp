#include "coarse/graph.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <stdexcept>
#include <string>

namespace coarse {

Graph make_graph(Window w, std::vector<std::pair<int, int>> edges) {
  for (auto& [u, v] : edges) {
    if (u == v) {
      throw std::invalid_argument("make_graph: loop at vertex " + std::to_string(u));
    }
    if (u < 0 || v < 0 || u >= w.size || v >= w.size) {
      throw std::invalid_argument("make_graph: edge endpoint outside window");
    }
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) {
    throw std::invalid_argument("make_graph: duplicate edge");
  }
  Graph g;
  g.window = std::move(w);
  g.edges = std::move(edges);
  g.adj.assign(g.window.size, {});
  for (auto [u, v] : g.edges) {
    g.adj[u].push_back(v);
    g.adj[v].push_back(u);
  }
  for (auto& nb : g.adj) std::sort(nb.begin(), nb.end());
  return g;
}

Graph make_graph(int n, std::vector<std::pair<int, int>> edges) {
  Window w;
  w.size = n;
  return make_graph(std::move(w), std::move(edges));
}

Graph path_graph(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return make_graph(n, std::move(edges));
}

Graph cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("cycle_graph: need at least 3 vertices");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  edges.emplace_back(0, n - 1);
  return make_graph(n, std::move(edges));
}

Graph complete_graph(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  }
  return make_graph(n, std::move(edges));
}

Graph star_graph(int leaves) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i <= leaves; ++i) edges.emplace_back(0, i);
  return make_graph(leaves + 1, std::move(edges));
}

Graph grid_graph(int dim, int halfwidth) {
  if (dim < 1) throw std::invalid_argument("grid_graph: dimension must be positive");
  if (halfwidth < 1) throw std::invalid_argument("grid_graph: half-width must be positive");
  const int side = 2 * halfwidth;
  long long total = 1;
  for (int i = 0; i < dim; ++i) {
    total *= side;
    if (total > 2'000'000) throw std::invalid_argument("grid_graph: window too large");
  }
  const int n = static_cast<int>(total);

  Window w;
  w.size = n;
  w.coords.resize(n);
  std::vector<long long> stride(dim, 1);
  for (int i = dim - 2; i >= 0; --i) stride[i] = stride[i + 1] * side;
  for (int id = 0; id < n; ++id) {
    std::vector<int> c(dim);
    int rest = id;
    for (int i = 0; i < dim; ++i) {
      c[i] = static_cast<int>(rest / stride[i]) - halfwidth;
      rest = static_cast<int>(rest % stride[i]);
    }
    w.coords[id] = std::move(c);
  }

  std::vector<std::pair<int, int>> edges;
  for (int id = 0; id < n; ++id) {
    for (int i = 0; i < dim; ++i) {
      if (w.coords[id][i] + 1 < halfwidth) {
        edges.emplace_back(id, id + static_cast<int>(stride[i]));
      }
    }
  }
  return make_graph(std::move(w), std::move(edges));
}

std::vector<int> bfs_distances(const Graph& g, int src) {
  return multi_source_distances(g, {src});
}

std::vector<int> multi_source_distances(const Graph& g, const std::vector<int>& srcs) {
  std::vector<int> dist(g.points(), -1);
  std::deque<int> queue;
  for (int s : srcs) {
    require_point(g.window, s, "bfs");
    if (dist[s] == -1) {
      dist[s] = 0;
      queue.push_back(s);
    }
  }
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (int u : g.adj[v]) {
      if (dist[u] == -1) {
        dist[u] = dist[v] + 1;
        queue.push_back(u);
      }
    }
  }
  return dist;
}

std::optional<std::pair<int, int>> unreachable_pair(const Graph& g) {
  if (g.points() == 0) return std::nullopt;
  auto dist = bfs_distances(g, 0);
  for (int v = 0; v < g.points(); ++v) {
    if (dist[v] == -1) return std::make_pair(0, v);
  }
  return std::nullopt;
}

const std::vector<int>& DistanceOracle::from(int src) {
  if (rows_[src].empty()) rows_[src] = bfs_distances(*g_, src);
  return rows_[src];
}

EnclosingBall min_enclosing_ball(const Graph& g, const std::vector<int>& members,
                                 DistanceOracle& dist) {
  if (members.empty()) {
    throw std::invalid_argument("min_enclosing_ball: empty member set");
  }
  EnclosingBall best;
  best.radius = std::numeric_limits<int>::max();
  auto consider = [&](int v) {
    const auto& row = dist.from(v);
    int ecc = 0;
    for (int m : members) {
      if (row[m] < 0) return;  // unreachable, cannot cover
      ecc = std::max(ecc, row[m]);
    }
    if (ecc < best.radius || (ecc == best.radius && v < best.center)) {
      best.radius = ecc;
      best.center = v;
    }
  };
  for (int v : members) consider(v);
  // a vertex farther from the set than the best radius cannot improve it
  auto to_set = multi_source_distances(g, members);
  for (int v = 0; v < g.points(); ++v) {
    if (to_set[v] > 0 && to_set[v] < best.radius) consider(v);
  }
  return best;
}

}  // namespace coarse
