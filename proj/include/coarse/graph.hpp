#ifndef COARSE_GRAPH_HPP
#define COARSE_GRAPH_HPP

#include <optional>
#include <utility>
#include <vector>

#include "coarse/window.hpp"

namespace coarse {

// Simple undirected graph on a window. Edges are stored with u < v,
// sorted lexicographically, no loops or duplicates.
struct Graph {
  Window window;
  std::vector<std::pair<int, int>> edges;
  std::vector<std::vector<int>> adj;

  int points() const { return window.size; }
  int degree(int v) const { return static_cast<int>(adj[v].size()); }
};

Graph make_graph(Window w, std::vector<std::pair<int, int>> edges);
Graph make_graph(int n, std::vector<std::pair<int, int>> edges);
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph star_graph(int leaves);  // center 0, leaves 1..leaves
Graph grid_graph(int dim, int halfwidth);  // [-N, N)^dim, unit l1 steps

std::vector<int> bfs_distances(const Graph& g, int src);
std::vector<int> multi_source_distances(const Graph& g, const std::vector<int>& srcs);
// nullopt when connected; otherwise a pair of mutually unreachable vertices
std::optional<std::pair<int, int>> unreachable_pair(const Graph& g);

// Cached single-source BFS rows.
class DistanceOracle {
 public:
  explicit DistanceOracle(const Graph& g) : g_(&g), rows_(g.points()) {}
  const std::vector<int>& from(int src);

 private:
  const Graph* g_;
  std::vector<std::vector<int>> rows_;
};

struct EnclosingBall {
  int center = -1;
  int radius = -1;
};

// Smallest path-metric ball containing `members`; the center may be any
// vertex of the graph. Ties break to the smaller center id.
EnclosingBall min_enclosing_ball(const Graph& g, const std::vector<int>& members,
                                 DistanceOracle& dist);

}  // namespace coarse

#endif
