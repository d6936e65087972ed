#include <doctest.h>

#include <set>

#include "coarse/corpus.hpp"
#include "coarse/entourage.hpp"
#include "coarse/partition.hpp"
#include "oracles.hpp"

using namespace coarse;
using oracle::PairSet;

namespace {

Entourage from_pairs(int n, std::initializer_list<std::pair<int, int>> pairs) {
  Entourage e(n);
  for (auto [x, y] : pairs) e.add(x, y);
  return e;
}

}  // namespace

TEST_CASE("compose: diagonal is a two-sided identity") {
  Rng rng(11);
  for (int t = 0; t < 20; ++t) {
    int n = rng.range(1, 40);
    Entourage e = random_sparse_entourage(n, rng.range(0, 3 * n), rng);
    Entourage d = Entourage::diagonal(n);
    CHECK(compose(d, e) == e);
    CHECK(compose(e, d) == e);
  }
}

TEST_CASE("compose: forced pairs on a three-point window") {
  Entourage a = from_pairs(3, {{0, 1}});
  Entourage b = from_pairs(3, {{1, 2}});
  Entourage expect = from_pairs(3, {{0, 1}, {1, 2}, {0, 2}});
  CHECK(compose(a, b) == expect);
}

TEST_CASE("operations reject mismatched windows") {
  Entourage a(3), b(4);
  CHECK_THROWS_AS(compose(a, b), std::invalid_argument);
  CHECK_THROWS_AS(unite(a, b), std::invalid_argument);
  CHECK_THROWS_AS(intersect(a, b), std::invalid_argument);
}

TEST_CASE("compose: contains diagonal and both factors") {
  Rng rng(12);
  for (int t = 0; t < 20; ++t) {
    int n = rng.range(2, 40);
    Entourage e = random_sparse_entourage(n, rng.range(0, 2 * n), rng);
    Entourage c = compose(e, inverse(e));
    CHECK(Entourage::diagonal(n).subset_of(c));
    CHECK(e.subset_of(c));
  }
}

TEST_CASE("compose agrees with the naive pair-set oracle") {
  Rng rng(13);
  for (int t = 0; t < 30; ++t) {
    int n = rng.range(2, 30);
    Entourage a = random_sparse_entourage(n, rng.range(0, 2 * n), rng);
    Entourage b = random_sparse_entourage(n, rng.range(0, 2 * n), rng);
    PairSet want = oracle::compose(oracle::from_entourage(a), oracle::from_entourage(b));
    CHECK(oracle::from_entourage(compose(a, b)) == want);
  }
}

TEST_CASE("compose is associative") {
  Rng rng(14);
  for (int t = 0; t < 25; ++t) {
    int n = rng.range(2, 40);
    Entourage a = random_sparse_entourage(n, rng.range(0, 2 * n), rng);
    Entourage b = random_sparse_entourage(n, rng.range(0, 2 * n), rng);
    Entourage c = random_sparse_entourage(n, rng.range(0, 2 * n), rng);
    CHECK(compose(a, compose(b, c)) == compose(compose(a, b), c));
  }
}

TEST_CASE("compose is monotone in both arguments") {
  Rng rng(15);
  for (int t = 0; t < 20; ++t) {
    int n = rng.range(2, 40);
    Entourage small = random_sparse_entourage(n, rng.range(0, n), rng);
    Entourage big = unite(small, random_sparse_entourage(n, rng.range(0, n), rng));
    Entourage other = random_sparse_entourage(n, rng.range(0, n), rng);
    CHECK(compose(small, other).subset_of(compose(big, other)));
    CHECK(compose(other, small).subset_of(compose(other, big)));
  }
}

TEST_CASE("inverse: involution and basics") {
  CHECK(inverse(Entourage::diagonal(4)) == Entourage::diagonal(4));
  CHECK(inverse(from_pairs(2, {{0, 1}})) == from_pairs(2, {{1, 0}}));
  Rng rng(16);
  for (int t = 0; t < 20; ++t) {
    int n = rng.range(1, 40);
    Entourage e = random_sparse_entourage(n, rng.range(0, 3 * n), rng);
    CHECK(inverse(inverse(e)) == e);
  }
}

TEST_CASE("inverse of a composition swaps the factors") {
  Rng rng(17);
  for (int t = 0; t < 20; ++t) {
    int n = rng.range(2, 40);
    Entourage a = random_sparse_entourage(n, rng.range(0, 2 * n), rng);
    Entourage b = random_sparse_entourage(n, rng.range(0, 2 * n), rng);
    CHECK(inverse(compose(a, b)) == compose(inverse(b), inverse(a)));
  }
}

TEST_CASE("ball: diagonal, BFS depth, and partition classes") {
  CHECK(ball(Entourage::diagonal(5), 2).members == std::vector<int>{2});

  // path 0-1-2-3-4, radius-2 entourage: ball around 0 from independent BFS
  std::vector<std::pair<int, int>> edges{{0, 1}, {1, 2}, {2, 3}, {3, 4}};
  auto adj = oracle::adjacency(5, edges);
  Entourage eps(5);
  for (int x = 0; x < 5; ++x) {
    for (int y = 0; y < 5; ++y) {
      auto dist = oracle::bfs(adj, x);
      if (dist[y] <= 2) eps.add(x, y);
    }
  }
  CHECK(oracle::bfs_ball(adj, 0, 2) == std::vector<int>{0, 1, 2});
  CHECK(ball(eps, 0).members == std::vector<int>{0, 1, 2});

  Partition p = Partition::from_classes(4, {{0, 1}, {2, 3}});
  Entourage ep = equivalence_from_partition(p);
  CHECK(ball(ep, 1).members == std::vector<int>{0, 1});
  CHECK_THROWS_AS(ball(ep, 7), std::invalid_argument);
}

TEST_CASE("balls grow with the entourage") {
  Rng rng(18);
  for (int t = 0; t < 20; ++t) {
    int n = rng.range(2, 40);
    Entourage a = random_sparse_entourage(n, rng.range(0, n), rng);
    Entourage b = unite(a, random_sparse_entourage(n, rng.range(0, n), rng));
    for (int x = 0; x < n; ++x) {
      auto ma = ball(a, x).members;
      auto mb = ball(b, x).members;
      CHECK(std::includes(mb.begin(), mb.end(), ma.begin(), ma.end()));
    }
  }
}

TEST_CASE("partition/equivalence round trips") {
  Partition p = Partition::from_classes(3, {{0, 1}, {2}});
  Entourage e = equivalence_from_partition(p);
  CHECK(e == from_pairs(3, {{0, 1}, {1, 0}}));
  CHECK(partition_from_equivalence(e).classes == p.classes);

  CHECK(partition_from_equivalence(Entourage::diagonal(4)).classes ==
        Partition::singletons(4).classes);

  CHECK_THROWS_AS(partition_from_equivalence(from_pairs(3, {{0, 1}})), NotAnEquivalence);

  // transitivity violation carries a triple
  Entourage bad = from_pairs(4, {{0, 1}, {1, 0}, {1, 2}, {2, 1}});
  try {
    partition_from_equivalence(bad);
    CHECK(false);
  } catch (const NotAnEquivalence& ex) {
    CHECK(ex.z >= 0);
  }

  Rng rng(19);
  for (int t = 0; t < 20; ++t) {
    int n = rng.range(1, 40);
    Partition q = random_partition(n, 6, rng);
    CHECK(partition_from_equivalence(equivalence_from_partition(q)).classes == q.classes);
  }
}

TEST_CASE("merge_classes") {
  Partition p = Partition::singletons(3);
  CHECK(merge_classes(p, {0, 1}).classes == std::vector<std::vector<int>>{{0, 1}, {2}});
  CHECK(merge_classes(p, {0, 1, 2}).classes == std::vector<std::vector<int>>{{0, 1, 2}});
  CHECK_THROWS_AS(merge_classes(p, {5}), std::invalid_argument);
  CHECK_THROWS_AS(merge_classes(p, {}), std::invalid_argument);

  // merged base elements dominate the original equivalence
  Rng rng(20);
  for (int t = 0; t < 15; ++t) {
    int n = rng.range(2, 30);
    Partition q = random_partition(n, 5, rng);
    std::vector<int> which;
    for (int c = 0; c < q.class_count(); ++c) {
      if (rng.below(2)) which.push_back(c);
    }
    if (which.empty()) which.push_back(0);
    CHECK(equivalence_from_partition(q).subset_of(
        equivalence_from_partition(merge_classes(q, which))));
  }
}

TEST_CASE("restrict_to") {
  Rng rng(21);
  Entourage e = random_sparse_entourage(10, 20, rng);
  std::vector<int> all(10);
  for (int i = 0; i < 10; ++i) all[i] = i;
  CHECK(restrict_to(e, all).relation == e);

  Entourage sym = from_pairs(3, {{0, 1}, {1, 0}});
  auto r = restrict_to(sym, {0, 2});
  CHECK(r.relation == Entourage::diagonal(2));
  CHECK(r.parent == std::vector<int>{0, 2});

  CHECK_THROWS_AS(restrict_to(sym, {}), std::invalid_argument);

  // restriction of an equivalence is an equivalence
  for (int t = 0; t < 15; ++t) {
    int n = rng.range(2, 30);
    Partition q = random_partition(n, 5, rng);
    std::vector<int> s;
    for (int x = 0; x < n; ++x) {
      if (rng.below(2)) s.push_back(x);
    }
    if (s.empty()) s.push_back(0);
    CHECK(is_equivalence(restrict_to(equivalence_from_partition(q), s).relation));
  }
}
