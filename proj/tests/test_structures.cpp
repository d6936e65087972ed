#include <doctest.h>

#include <algorithm>

#include "coarse/corpus.hpp"
#include "coarse/decompose.hpp"
#include "coarse/structures.hpp"
#include "oracles.hpp"

using namespace coarse;

TEST_CASE("from_graph: path graphs") {
  Graph p3 = path_graph(3);
  CoarseChain c = from_graph(p3, 2);
  validate_chain(c);

  Entourage expect1(3);
  expect1.add_symmetric(0, 1);
  expect1.add_symmetric(1, 2);
  CHECK(c.at(1) == expect1);
  CHECK(c.at(2) == Entourage::full(3));  // BFS closure of a 3-path

  // level 1 is always adjacency plus diagonal
  Rng rng(31);
  for (int t = 0; t < 10; ++t) {
    Graph g = random_connected_graph(rng.range(2, 40), rng.range(0, 20), rng);
    CoarseChain cg = from_graph(g, 3);
    Entourage adj(g.points());
    for (auto [u, v] : g.edges) adj.add_symmetric(u, v);
    CHECK(cg.at(1) == adj);
    validate_chain(cg);
  }
}

TEST_CASE("from_graph: disconnected input names two unreachable vertices") {
  Graph g = make_graph(4, {{0, 1}, {2, 3}});
  CHECK_THROWS_WITH_AS(from_graph(g, 1),
                       doctest::Contains("unreachable"), std::invalid_argument);
}

TEST_CASE("from_graph: path-metric triangle inequality as composition bound") {
  Rng rng(32);
  for (int t = 0; t < 8; ++t) {
    Graph g = random_connected_graph(rng.range(3, 30), rng.range(0, 10), rng);
    CoarseChain c = from_graph(g, 6);
    for (int i = 1; i <= 3; ++i) {
      for (int j = 1; i + j <= 6; ++j) {
        CHECK(compose(c.at(i), c.at(j)).subset_of(c.at(i + j)));
      }
    }
  }
}

TEST_CASE("from_metric: thresholds and balls") {
  // two points at distance 5
  MetricWindow two = metric_from_ints(2, {0, 5, 5, 0});
  CHECK(from_metric(two, 4).top() == Entourage::diagonal(2));
  CHECK(from_metric(two, 5).top() == Entourage::full(2));

  // integer line 0..9: ball of radius 3 around 5, derived by enumeration
  MetricWindow line = line_metric(10);
  CoarseChain c = from_metric(line, 3);
  std::vector<int> expect;
  for (int y = 0; y < 10; ++y) {
    if (std::abs(5 - y) <= 3) expect.push_back(y);
  }
  CHECK(expect == std::vector<int>{2, 3, 4, 5, 6, 7, 8});
  CHECK(ball(c.at(3), 5).members == expect);

  MetricWindow bad = line;
  bad.num[0 * 10 + 9] = 1;
  bad.num[9 * 10 + 0] = 1;  // breaks the triangle inequality through 9
  CHECK_THROWS_WITH_AS(from_metric(bad, 2), doctest::Contains("triangle"),
                       std::invalid_argument);
}

TEST_CASE("from_ideal: balls at level 1 and canonical growth") {
  Window w;
  w.size = 4;
  CoarseChain c = from_ideal(w, IdealSpec{{0, 1}}, 3);
  validate_chain(c);
  CHECK(ball(c.at(1), 0).members == std::vector<int>{0, 1});
  CHECK(ball(c.at(1), 2).members == std::vector<int>{2});
  // level 2 merges the first non-A point
  CHECK(ball(c.at(2), 0).members == std::vector<int>{0, 1, 2});

  CoarseChain empty = from_ideal(w, IdealSpec{{}}, 3);
  CHECK(empty.at(1) == Entourage::diagonal(4));   // A empty: only finite merges
  CHECK(ball(empty.at(3), 0).members == std::vector<int>{0, 1});

  CoarseChain full = from_ideal(w, IdealSpec{{0, 1, 2, 3}}, 1);
  CHECK(full.at(1) == Entourage::full(4));
}

TEST_CASE("from_permutations") {
  Window w;
  w.size = 3;
  PermutationSet swap01{{{1, 0, 2}}};
  CoarseChain c = from_permutations(w, swap01, 1);
  Entourage expect(3);
  expect.add_symmetric(0, 1);
  CHECK(c.at(1) == expect);

  // cyclic shift on Z_5: two steps in either direction reach everything
  Window w5;
  w5.size = 5;
  PermutationSet shift{{{1, 2, 3, 4, 0}}};
  CoarseChain c5 = from_permutations(w5, shift, 2);
  CHECK(ball(c5.at(2), 0).members == std::vector<int>{0, 1, 2, 3, 4});

  CoarseChain none = from_permutations(w5, PermutationSet{}, 3);
  CHECK(none.top() == Entourage::diagonal(5));

  PermutationSet broken{{{0, 0, 2}}};
  CHECK_THROWS_AS(from_permutations(w, broken, 1), std::invalid_argument);
}

TEST_CASE("entourage_to_permutations realizes the symmetrization") {
  Entourage e(3);
  e.add_symmetric(1, 2);
  TranspositionRealization r = entourage_to_permutations(e);
  REQUIRE(r.set.perms.size() == 1);
  CHECK(r.set.perms[0] == std::vector<int>{0, 2, 1});
  Window w;
  w.size = 3;
  CHECK(from_permutations(w, r.set, 1).at(1) == e);

  CHECK(entourage_to_permutations(Entourage::diagonal(4)).set.perms.empty());

  // a one-directional pair symmetrizes
  Entourage half(2);
  half.add(0, 1);
  TranspositionRealization rh = entourage_to_permutations(half);
  Entourage sym(2);
  sym.add_symmetric(0, 1);
  CHECK(from_permutations(Window{2, {}, {}}, rh.set, 1).at(1) == sym);

  Rng rng(33);
  for (int t = 0; t < 25; ++t) {
    int n = rng.range(2, 80);
    Entourage random = random_sparse_entourage(n, rng.range(0, 3 * n), rng);
    TranspositionRealization rr = entourage_to_permutations(random);
    Window wn;
    wn.size = n;
    CHECK(from_permutations(wn, rr.set, 1).at(1) == unite(random, inverse(random)));
    CHECK(rr.uniform_ball_bound >= 1);
  }
}

TEST_CASE("meet: idempotent, bottoms out at the diagonal chain") {
  Graph p9 = path_graph(9);
  CoarseChain e = from_graph(p9, 4);
  CoarseChain m = meet(e, e);
  for (int i = 0; i <= m.radius(); ++i) CHECK(m.at(i) == e.at(i));

  CoarseChain bottom;
  bottom.window = e.window;
  bottom.levels.assign(5, Entourage::diagonal(9));
  CoarseChain mb = meet(e, bottom);
  for (int i = 0; i <= mb.radius(); ++i) CHECK(mb.at(i) == Entourage::diagonal(9));
}

TEST_CASE("meet: level-wise intersection against the oracle") {
  // P_9 against P_9 with reversed ids
  Graph p9 = path_graph(9);
  std::vector<std::pair<int, int>> rev_edges;
  for (auto [u, v] : p9.edges) rev_edges.emplace_back(8 - v, 8 - u);
  Graph p9r = make_graph(9, rev_edges);
  CoarseChain a = from_graph(p9, 3), b = from_graph(p9r, 3);
  CoarseChain m = meet(a, b);
  for (int i = 0; i <= 3; ++i) {
    oracle::PairSet want;
    auto sa = oracle::from_entourage(a.at(i));
    for (auto pr : oracle::from_entourage(b.at(i))) {
      if (sa.count(pr)) want.insert(pr);
    }
    CHECK(oracle::from_entourage(m.at(i)) == want);
  }
}

TEST_CASE("meet is the greatest lower bound on cellular chains") {
  Rng rng(34);
  for (int t = 0; t < 20; ++t) {
    int n = rng.range(4, 40);
    CoarseChain e1 = generated_by(equivalence_from_partition(random_partition(n, 6, rng)));
    CoarseChain e2 = generated_by(equivalence_from_partition(random_partition(n, 6, rng)));
    CoarseChain m = meet(e1, e2);
    CHECK(contains(e1, m).contained);
    CHECK(contains(e2, m).contained);

    // a random refinement of a meet level is below both, hence below the meet
    int level = rng.range(0, m.radius());
    Partition base = partition_from_equivalence(m.at(level));
    std::vector<std::vector<int>> split;
    for (const auto& cls : base.classes) {
      if (cls.size() >= 2 && rng.below(2)) {
        split.push_back({cls.begin(), cls.begin() + cls.size() / 2});
        split.push_back({cls.begin() + cls.size() / 2, cls.end()});
      } else {
        split.push_back(cls);
      }
    }
    CoarseChain e3 = generated_by(
        equivalence_from_partition(Partition::from_classes(n, split)), 1);
    if (contains(e1, e3).contained && contains(e2, e3).contained) {
      CHECK(contains(m, e3).contained);
    }
  }
}

TEST_CASE("join_member") {
  Graph p5 = path_graph(5);
  CoarseChain a = from_graph(p5, 2);
  CoarseChain b = from_graph(p5, 1);

  // pair already inside a top entourage: single letter
  auto w = join_member({0, 2}, a, b, 4);
  REQUIRE(w.has_value());
  CHECK(w->word.letters.size() == 1);
  CHECK(w->points.front() == 0);
  CHECK(w->points.back() == 2);

  // diagonal chains admit nothing off-diagonal
  CoarseChain bottom;
  bottom.window = a.window;
  bottom.levels.assign(2, Entourage::diagonal(5));
  CHECK_FALSE(join_member({0, 1}, bottom, bottom, 5).has_value());

  // replay: every hop must lie in the letter's entourage
  Rng rng(35);
  for (int t = 0; t < 10; ++t) {
    int n = rng.range(3, 30);
    CoarseChain c1 = from_graph(random_connected_graph(n, rng.range(0, 8), rng), 2);
    CoarseChain c2 = generated_by(equivalence_from_partition(random_partition(n, 4, rng)));
    int x = rng.range(0, n - 1), y = rng.range(0, n - 1);
    auto witness = join_member({x, y}, c1, c2, 6);
    if (!witness) continue;
    const CoarseChain* chains[2] = {&c1, &c2};
    REQUIRE(witness->points.size() == witness->word.letters.size() + 1);
    for (std::size_t j = 0; j < witness->word.letters.size(); ++j) {
      auto [tag, index] = witness->word.letters[j];
      CHECK(chains[tag]->at(index).contains(witness->points[j], witness->points[j + 1]));
    }
  }
}

TEST_CASE("join_member: grid pair through the two cube partitions") {
  GridDecomposition gd = grid_decomposition(2, 4, 1);
  CoarseChain e0 = generated_by(equivalence_from_partition(gd.certificate.p0), 1);
  CoarseChain e1 = generated_by(equivalence_from_partition(gd.certificate.p1), 1);

  auto id_of = [&](int cx, int cy) {
    for (int id = 0; id < gd.graph.points(); ++id) {
      if (gd.graph.window.coords[id] == std::vector<int>{cx, cy}) return id;
    }
    return -1;
  };
  int from = id_of(0, 0), to = id_of(2, 1);
  REQUIRE(from >= 0);
  REQUIRE(to >= 0);
  auto w = join_member({from, to}, e0, e1, 5);
  REQUIRE(w.has_value());
  CHECK(w->word.letters.size() <= 3);
}

TEST_CASE("contains") {
  Graph p5 = path_graph(5);
  CoarseChain e = from_graph(p5, 3);
  ContainsResult self = contains(e, e);
  REQUIRE(self.contained);
  for (int i = 0; i <= 3; ++i) CHECK(self.modulus[i] == i);

  // ideal structure of a set with known graph diameter
  Window w;
  w.size = 5;
  IdealSpec spec{{0, 3}};  // diameter 3 on the path
  CoarseChain ideal = from_ideal(w, spec, 1);
  ContainsResult r = contains(e, ideal);
  REQUIRE(r.contained);
  CHECK(r.modulus[1] == 3);

  CoarseChain bottom;
  bottom.window = e.window;
  bottom.levels.assign(4, Entourage::diagonal(5));
  ContainsResult bad = contains(bottom, e);
  REQUIRE_FALSE(bad.contained);
  CHECK(bad.fail_index == 1);
  CHECK(bad.fail_pair.first >= 0);
}

TEST_CASE("generated_by") {
  CoarseChain d = generated_by(Entourage::diagonal(3));
  validate_chain(d);
  CHECK(d.at(1) == Entourage::diagonal(3));
  CHECK(d.top() == Entourage::full(3));  // all singleton classes merged

  Partition p = Partition::from_classes(4, {{0, 1}, {2, 3}});
  CoarseChain c = generated_by(equivalence_from_partition(p));
  CHECK(ball(c.at(1), 0).members == std::vector<int>{0, 1});
  CHECK(ball(c.at(1), 2).members == std::vector<int>{2, 3});
  CHECK(c.top() == Entourage::full(4));

  Entourage notequiv(3);
  notequiv.add(0, 1);
  CHECK_THROWS_AS(generated_by(notequiv), NotAnEquivalence);
}

TEST_CASE("transversal_complement") {
  Partition p = Partition::from_classes(4, {{0, 1}, {2, 3}});
  CoarseChain c = generated_by(equivalence_from_partition(p));
  TransversalComplement tc = transversal_complement(c);
  CHECK(tc.ideal.a == std::vector<int>{0, 2});
  CHECK_FALSE(tc.degenerate);
  // witness chain for (1,3) is [1, 0, 2, 3]
  CHECK(tc.representative[1] == 0);
  CHECK(tc.representative[3] == 2);
  CHECK(c.at(1).contains(1, 0));
  CHECK(tc.eps_a.contains(0, 2));
  CHECK(c.at(1).contains(2, 3));

  Partition q = Partition::from_classes(3, {{0, 1}, {2}});
  CoarseChain cq = generated_by(equivalence_from_partition(q));
  TransversalComplement tq = transversal_complement(cq);
  CHECK(tq.ideal.a == std::vector<int>{0, 2});
  CHECK(tq.representative[1] == 0);
  CHECK(tq.representative[2] == 2);

  TransversalComplement ts = transversal_complement(generated_by(
      equivalence_from_partition(Partition::singletons(4))));
  CHECK(ts.ideal.a == std::vector<int>{0, 1, 2, 3});
  CHECK(ts.eps_a == Entourage::full(4));

  TransversalComplement td = transversal_complement(generated_by(Entourage::full(3)));
  CHECK(td.degenerate);
}

TEST_CASE("every constructor and meet produce valid ascending chains") {
  Rng rng(36);
  for (int t = 0; t < 10; ++t) {
    int n = rng.range(2, 30);
    Graph g = random_connected_graph(n, rng.range(0, 10), rng);
    CoarseChain cg = from_graph(g, rng.range(0, 5));
    validate_chain(cg);

    CoarseChain cm = from_metric(random_locally_finite_metric(n, rng), rng.range(0, 5));
    validate_chain(cm);

    IdealSpec spec;
    for (int x = 0; x < n; ++x) {
      if (rng.below(3) == 0) spec.a.push_back(x);
    }
    CoarseChain ci = from_ideal(g.window, spec, rng.range(0, 5));
    validate_chain(ci);

    Entourage e = random_sparse_entourage(n, rng.range(0, 2 * n), rng);
    CoarseChain cp = from_permutations(g.window, entourage_to_permutations(e).set,
                                       rng.range(0, 4));
    validate_chain(cp);

    CoarseChain cc = generated_by(
        equivalence_from_partition(random_partition(n, 5, rng)));
    validate_chain(cc);

    validate_chain(meet(cg, cm));
    validate_chain(meet(ci, cc));
  }
}

TEST_CASE("example 3: complementary ideals meet near the bottom and join to the top") {
  Window w;
  w.size = 10;
  IdealSpec a{{0, 1, 2, 3, 4}};
  IdealSpec b{{5, 6, 7, 8, 9}};
  CoarseChain ca = from_ideal(w, a, 4);
  CoarseChain cb = from_ideal(w, b, 4);
  CoarseChain m = meet(ca, cb);
  // the meet's off-diagonal pairs come only from the canonical finite merges:
  // at level i each side donates at most i-1 points to the common class
  for (int i = 0; i <= m.radius(); ++i) {
    std::size_t off = m.at(i).pair_count() - 10;
    std::size_t s = i >= 1 ? 2 * (i - 1) : 0;
    CHECK(off <= s * (s == 0 ? 0 : s - 1));
  }
  // any cross pair joins within two letters
  auto witness = join_member({0, 9}, ca, cb, 2);
  REQUIRE(witness.has_value());
  CHECK(witness->word.letters.size() <= 2);
}
