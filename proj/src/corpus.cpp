#include "coarse/corpus.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace coarse {

std::uint64_t Rng::below(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("Rng::below: empty range");
  std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
  std::uint64_t r;
  do {
    r = eng();
  } while (r >= limit);
  return r % n;
}

int Rng::range(int lo, int hi) {
  return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo) + 1));
}

Graph random_tree(int n, Rng& rng) {
  std::vector<std::pair<int, int>> edges;
  for (int v = 1; v < n; ++v) {
    edges.emplace_back(static_cast<int>(rng.below(v)), v);
  }
  return make_graph(n, std::move(edges));
}

Graph random_bounded_degree_tree(int n, int max_degree, Rng& rng) {
  if (max_degree < 2) throw std::invalid_argument("random_bounded_degree_tree: degree cap too small");
  std::vector<int> deg(n, 0);
  std::vector<std::pair<int, int>> edges;
  for (int v = 1; v < n; ++v) {
    std::vector<int> eligible;
    for (int u = 0; u < v; ++u) {
      if (deg[u] < max_degree - (u == 0 ? 0 : 1)) eligible.push_back(u);
    }
    int parent = eligible[rng.below(eligible.size())];
    edges.emplace_back(parent, v);
    ++deg[parent];
    ++deg[v];
  }
  return make_graph(n, std::move(edges));
}

Graph random_connected_graph(int n, int extra_edges, Rng& rng) {
  Graph tree = random_tree(n, rng);
  std::set<std::pair<int, int>> have(tree.edges.begin(), tree.edges.end());
  int added = 0, attempts = 0;
  while (added < extra_edges && attempts < extra_edges * 20 + 100) {
    ++attempts;
    int u = static_cast<int>(rng.below(n));
    int v = static_cast<int>(rng.below(n));
    if (u == v) continue;
    if (u > v) std::swap(u, v);
    if (have.insert({u, v}).second) ++added;
  }
  return make_graph(n, {have.begin(), have.end()});
}

Partition random_partition(int n, int max_classes, Rng& rng) {
  int k = 1 + static_cast<int>(rng.below(std::min(n, max_classes)));
  std::vector<std::vector<int>> buckets(k);
  for (int x = 0; x < n; ++x) buckets[rng.below(k)].push_back(x);
  std::vector<std::vector<int>> classes;
  for (auto& b : buckets) {
    if (!b.empty()) classes.push_back(std::move(b));
  }
  return Partition::from_classes(n, std::move(classes));
}

Entourage random_sparse_entourage(int n, int extra_pairs, Rng& rng) {
  Entourage e(n);
  for (int t = 0; t < extra_pairs; ++t) {
    e.add(static_cast<int>(rng.below(n)), static_cast<int>(rng.below(n)));
  }
  return e;
}

MetricWindow random_locally_finite_metric(int n, Rng& rng, long long scale) {
  Graph tree = random_bounded_degree_tree(n, 3, rng);
  MetricWindow m = graph_metric(tree);
  if (scale != 1) {
    for (auto& v : m.num) v *= scale;
  }
  return m;
}

}  // namespace coarse
