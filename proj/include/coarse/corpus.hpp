#ifndef COARSE_CORPUS_HPP
#define COARSE_CORPUS_HPP

#include <cstdint>
#include <random>

#include "coarse/entourage.hpp"
#include "coarse/graph.hpp"
#include "coarse/metric.hpp"
#include "coarse/partition.hpp"

namespace coarse {

// Seeded generator with implementation-independent draws (std library
// distributions are not portable across standard libraries).
struct Rng {
  std::mt19937_64 eng;
  explicit Rng(std::uint64_t seed) : eng(seed) {}

  std::uint64_t below(std::uint64_t n);  // uniform over [0, n)
  int range(int lo, int hi);             // uniform over [lo, hi]
};

Graph random_tree(int n, Rng& rng);
Graph random_bounded_degree_tree(int n, int max_degree, Rng& rng);
Graph random_connected_graph(int n, int extra_edges, Rng& rng);
Partition random_partition(int n, int max_classes, Rng& rng);
Entourage random_sparse_entourage(int n, int extra_pairs, Rng& rng);
// path metric of a random bounded-degree tree, optionally scaled
MetricWindow random_locally_finite_metric(int n, Rng& rng, long long scale = 1);

}  // namespace coarse

#endif
