#ifndef COARSE_METRIC_HPP
#define COARSE_METRIC_HPP

#include <optional>
#include <string>
#include <vector>

#include "coarse/graph.hpp"
#include "coarse/window.hpp"

namespace coarse {

// Exact rational, normalized: den > 0, gcd(|num|, den) = 1.
struct Rational {
  long long num = 0;
  long long den = 1;
};

Rational make_rational(long long num, long long den);
Rational rat_add(const Rational& a, const Rational& b);
int rat_cmp(const Rational& a, const Rational& b);  // -1, 0, 1
std::string rat_str(const Rational& r);

// Metric on a window with exact distances: dist(x,y) = num[x*n+y] / den.
// A single positive denominator is shared by all pairs, so threshold
// comparisons are integer arithmetic.
struct MetricWindow {
  Window window;
  long long den = 1;
  std::vector<long long> num;

  int points() const { return window.size; }
  long long num_at(int x, int y) const {
    return num[static_cast<std::size_t>(x) * window.size + y];
  }
  Rational dist(int x, int y) const { return make_rational(num_at(x, y), den); }
  // d(x,y) <= radius for an integer radius
  bool within(int x, int y, long long radius) const {
    return num_at(x, y) <= radius * den;
  }
};

struct MetricViolation {
  std::string kind;  // "negative", "self", "zero", "symmetry", "triangle"
  int x = -1, y = -1, z = -1;
};

std::optional<MetricViolation> validate_metric(const MetricWindow& m);
void require_valid_metric(const MetricWindow& m, const char* where);

MetricWindow metric_from_ints(int n, std::vector<long long> num, long long den = 1);
// d(i,j) = |i-j| * scale_num/scale_den on points 0..n-1
MetricWindow line_metric(int n, long long scale_num = 1, long long scale_den = 1);
// integer points lo..hi with coords recorded, d = |x-y|
MetricWindow line_metric_over(long long lo, long long hi);
MetricWindow graph_metric(const Graph& g);  // path metric; graph must be connected
MetricWindow capped_metric(const MetricWindow& m, long long cap);  // min(d, cap)

}  // namespace coarse

#endif
