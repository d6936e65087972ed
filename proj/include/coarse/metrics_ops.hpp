#ifndef COARSE_METRICS_OPS_HPP
#define COARSE_METRICS_OPS_HPP

#include <stdexcept>
#include <utility>
#include <vector>

#include "coarse/chain.hpp"
#include "coarse/metric.hpp"

namespace coarse {

// (x0, y0, r)-join: keeps both metrics and bridges cross pairs through
// d(x,x0) + r + rho(y,y0). Points of m2 are re-indexed after m1's.
MetricWindow join_metric(const MetricWindow& m1, const MetricWindow& m2, int x0, int y0,
                         const Rational& r);

// Base chain of a metric augmented by one equivalence delta that merges Y.
struct AugmentedBase {
  MetricWindow metric;
  CoarseChain chain;
  std::vector<int> y;
  Entourage delta;
};

AugmentedBase augment(const MetricWindow& m, const CoarseChain& mchain,
                      const std::vector<int>& y);

struct AugLetter {
  bool is_delta = false;
  int index = 0;  // chain index when not delta
};
using AugWord = std::vector<AugLetter>;

std::vector<int> expand_word_ball(const AugmentedBase& ab, int x, const AugWord& word);
bool word_member(const AugmentedBase& ab, int x, int xp, const AugWord& word);

struct BallGrowth {
  Rational bound;         // minimal m with ball within B_d(Y, m)
  std::vector<int> ball;  // the expanded ball
};

BallGrowth ball_growth_certificate(const AugmentedBase& ab, int y0, const AugWord& word);

struct GapWitnesses {
  std::vector<std::pair<int, int>> pairs;  // pairs[k]: d > k+1, mu < bound
  int exhausted_at = -1;                   // first n with no witness, -1 if none
};

GapWitnesses gap_witnesses(const MetricWindow& m1, const MetricWindow& m2,
                           const Rational& bound);

struct DepthError : std::runtime_error {
  int feasible;
  DepthError(const std::string& what, int feasible)
      : std::runtime_error(what), feasible(feasible) {}
};

struct InterleaveResult {
  std::vector<int> f;        // bijection; mu(x,y) = rho(f(x), f(y))
  MetricWindow mu;
  std::vector<std::vector<int>> exceptional;  // exceptional[n] = F_n, n = 0..depth
  std::vector<int> a_centers;
  std::vector<int> b_targets;
  std::vector<int> numeration;  // x_k order used by the assignment
  std::vector<char> standard;   // per point: 1 if it received its step's b-target
  int depth = 0;
};

// Interleaving bijection: outside F_n, the d-ball and mu-ball of radius n
// meet only in the center, for every n <= depth.
InterleaveResult interleave(const MetricWindow& md, const MetricWindow& mrho, int depth);

}  // namespace coarse

#endif
