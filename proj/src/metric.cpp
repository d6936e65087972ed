#include "coarse/metric.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace coarse {

namespace {

using int128 = __int128;

long long checked_mul(long long a, long long b, const char* where) {
  int128 r = static_cast<int128>(a) * b;
  if (r > static_cast<int128>(1) << 62 || r < -(static_cast<int128>(1) << 62)) {
    throw std::overflow_error(std::string(where) + ": rational overflow");
  }
  return static_cast<long long>(r);
}

}  // namespace

Rational make_rational(long long num, long long den) {
  if (den == 0) throw std::invalid_argument("make_rational: zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  long long g = std::gcd(num < 0 ? -num : num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  return Rational{num, den};
}

Rational rat_add(const Rational& a, const Rational& b) {
  long long g = std::gcd(a.den, b.den);
  long long den = checked_mul(a.den / g, b.den, "rat_add");
  long long num = checked_mul(a.num, b.den / g, "rat_add") +
                  checked_mul(b.num, a.den / g, "rat_add");
  return make_rational(num, den);
}

int rat_cmp(const Rational& a, const Rational& b) {
  int128 lhs = static_cast<int128>(a.num) * b.den;
  int128 rhs = static_cast<int128>(b.num) * a.den;
  if (lhs < rhs) return -1;
  if (lhs > rhs) return 1;
  return 0;
}

std::string rat_str(const Rational& r) {
  if (r.den == 1) return std::to_string(r.num);
  return std::to_string(r.num) + "/" + std::to_string(r.den);
}

std::optional<MetricViolation> validate_metric(const MetricWindow& m) {
  const int n = m.points();
  if (m.den <= 0) return MetricViolation{"negative", -1, -1, -1};
  for (int x = 0; x < n; ++x) {
    if (m.num_at(x, x) != 0) return MetricViolation{"self", x, x, -1};
    for (int y = x + 1; y < n; ++y) {
      if (m.num_at(x, y) != m.num_at(y, x)) return MetricViolation{"symmetry", x, y, -1};
      if (m.num_at(x, y) < 0) return MetricViolation{"negative", x, y, -1};
      if (m.num_at(x, y) == 0) return MetricViolation{"zero", x, y, -1};
    }
  }
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (y == x) continue;
      for (int z = 0; z < n; ++z) {
        if (m.num_at(x, z) > m.num_at(x, y) + m.num_at(y, z)) {
          return MetricViolation{"triangle", x, y, z};
        }
      }
    }
  }
  return std::nullopt;
}

void require_valid_metric(const MetricWindow& m, const char* where) {
  if (auto bad = validate_metric(m)) {
    std::string msg = std::string(where) + ": metric axiom '" + bad->kind +
                      "' violated at (" + std::to_string(bad->x) + "," +
                      std::to_string(bad->y);
    if (bad->z >= 0) msg += "," + std::to_string(bad->z);
    throw std::invalid_argument(msg + ")");
  }
}

MetricWindow metric_from_ints(int n, std::vector<long long> num, long long den) {
  if (static_cast<long long>(num.size()) != static_cast<long long>(n) * n) {
    throw std::invalid_argument("metric_from_ints: wrong matrix size");
  }
  MetricWindow m;
  m.window.size = n;
  m.den = den;
  m.num = std::move(num);
  require_valid_metric(m, "metric_from_ints");
  return m;
}

MetricWindow line_metric(int n, long long scale_num, long long scale_den) {
  std::vector<long long> num(static_cast<std::size_t>(n) * n, 0);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      num[static_cast<std::size_t>(x) * n + y] =
          checked_mul(std::abs(x - y), scale_num, "line_metric");
    }
  }
  return metric_from_ints(n, std::move(num), scale_den);
}

MetricWindow line_metric_over(long long lo, long long hi) {
  if (hi < lo) throw std::invalid_argument("line_metric_over: empty range");
  const int n = static_cast<int>(hi - lo + 1);
  MetricWindow m = line_metric(n);
  m.window.coords.resize(n);
  for (int i = 0; i < n; ++i) m.window.coords[i] = {static_cast<int>(lo + i)};
  return m;
}

MetricWindow graph_metric(const Graph& g) {
  if (auto bad = unreachable_pair(g)) {
    throw std::invalid_argument("graph_metric: vertices " + std::to_string(bad->first) +
                                " and " + std::to_string(bad->second) + " unreachable");
  }
  const int n = g.points();
  std::vector<long long> num(static_cast<std::size_t>(n) * n, 0);
  for (int x = 0; x < n; ++x) {
    auto dist = bfs_distances(g, x);
    for (int y = 0; y < n; ++y) num[static_cast<std::size_t>(x) * n + y] = dist[y];
  }
  MetricWindow m;
  m.window = g.window;
  m.den = 1;
  m.num = std::move(num);
  return m;
}

MetricWindow capped_metric(const MetricWindow& m, long long cap) {
  if (cap <= 0) throw std::invalid_argument("capped_metric: cap must be positive");
  MetricWindow out = m;
  long long lim = checked_mul(cap, m.den, "capped_metric");
  for (auto& v : out.num) v = std::min(v, lim);
  return out;
}

}  // namespace coarse
