#include "coarse/metrics_ops.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace coarse {

namespace {

long long checked_lcm(long long a, long long b, const char* where) {
  long long g = std::gcd(a, b);
  __int128 r = static_cast<__int128>(a / g) * b;
  if (r > (static_cast<__int128>(1) << 56)) {
    throw std::overflow_error(std::string(where) + ": denominator overflow");
  }
  return static_cast<long long>(r);
}

}  // namespace

MetricWindow join_metric(const MetricWindow& m1, const MetricWindow& m2, int x0, int y0,
                         const Rational& r) {
  require_valid_metric(m1, "join_metric");
  require_valid_metric(m2, "join_metric");
  require_point(m1.window, x0, "join_metric");
  require_point(m2.window, y0, "join_metric");
  if (r.num <= 0) throw std::invalid_argument("join_metric: r must be positive");

  const int n1 = m1.points(), n2 = m2.points();
  const int n = n1 + n2;
  long long den = checked_lcm(checked_lcm(m1.den, m2.den, "join_metric"), r.den,
                              "join_metric");
  const long long s1 = den / m1.den, s2 = den / m2.den, sr = den / r.den;

  MetricWindow m;
  m.window.size = n;
  m.den = den;
  m.num.assign(static_cast<std::size_t>(n) * n, 0);
  auto set = [&](int x, int y, long long v) {
    m.num[static_cast<std::size_t>(x) * n + y] = v;
    m.num[static_cast<std::size_t>(y) * n + x] = v;
  };
  for (int x = 0; x < n1; ++x) {
    for (int y = x + 1; y < n1; ++y) set(x, y, m1.num_at(x, y) * s1);
  }
  for (int x = 0; x < n2; ++x) {
    for (int y = x + 1; y < n2; ++y) set(n1 + x, n1 + y, m2.num_at(x, y) * s2);
  }
  for (int x = 0; x < n1; ++x) {
    for (int y = 0; y < n2; ++y) {
      set(x, n1 + y, m1.num_at(x, x0) * s1 + r.num * sr + m2.num_at(y, y0) * s2);
    }
  }
  if (validate_metric(m)) {
    throw std::logic_error("join_metric: construction produced a non-metric");
  }
  return m;
}

AugmentedBase augment(const MetricWindow& m, const CoarseChain& mchain,
                      const std::vector<int>& y) {
  require_same_window(m.window, mchain.window, "augment");
  std::vector<int> ys = y;
  std::sort(ys.begin(), ys.end());
  ys.erase(std::unique(ys.begin(), ys.end()), ys.end());
  if (ys.size() < 2) throw std::invalid_argument("augment: need at least two points in Y");
  for (int p : ys) require_point(m.window, p, "augment");

  AugmentedBase ab;
  ab.metric = m;
  ab.chain = mchain;
  ab.delta = Entourage(m.points());
  for (int a : ys) {
    for (int b : ys) ab.delta.add(a, b);
  }
  ab.y = std::move(ys);
  return ab;
}

std::vector<int> expand_word_ball(const AugmentedBase& ab, int x, const AugWord& word) {
  require_point(ab.metric.window, x, "expand_word_ball");
  if (word.empty()) throw std::invalid_argument("expand_word_ball: empty word");
  const int n = ab.metric.points();
  std::vector<char> cur(n, 0);
  cur[x] = 1;
  for (const auto& letter : word) {
    if (letter.is_delta) {
      bool touches = false;
      for (int p : ab.y) {
        if (cur[p]) {
          touches = true;
          break;
        }
      }
      if (touches) {
        for (int p : ab.y) cur[p] = 1;
      }
    } else {
      if (letter.index < 0 || letter.index > ab.chain.radius()) {
        throw std::invalid_argument("expand_word_ball: letter index out of range");
      }
      std::vector<char> next(n, 0);
      const Entourage& e = ab.chain.at(letter.index);
      for (int z = 0; z < n; ++z) {
        if (!cur[z]) continue;
        e.for_each_in_row(z, [&](int q) { next[q] = 1; });
      }
      cur = std::move(next);
    }
  }
  std::vector<int> out;
  for (int v = 0; v < n; ++v) {
    if (cur[v]) out.push_back(v);
  }
  return out;
}

bool word_member(const AugmentedBase& ab, int x, int xp, const AugWord& word) {
  auto members = expand_word_ball(ab, x, word);
  return std::binary_search(members.begin(), members.end(), xp);
}

BallGrowth ball_growth_certificate(const AugmentedBase& ab, int y0, const AugWord& word) {
  if (!std::binary_search(ab.y.begin(), ab.y.end(), y0)) {
    throw std::invalid_argument("ball_growth_certificate: y0 not in Y");
  }
  BallGrowth out;
  out.ball = expand_word_ball(ab, y0, word);
  long long worst = 0;
  for (int p : out.ball) {
    long long best = -1;
    for (int q : ab.y) {
      long long d = ab.metric.num_at(p, q);
      if (best < 0 || d < best) best = d;
    }
    worst = std::max(worst, best);
  }
  out.bound = make_rational(worst, ab.metric.den);
  return out;
}

GapWitnesses gap_witnesses(const MetricWindow& m1, const MetricWindow& m2,
                           const Rational& bound) {
  require_same_window(m1.window, m2.window, "gap_witnesses");
  require_valid_metric(m1, "gap_witnesses");
  require_valid_metric(m2, "gap_witnesses");
  const int n = m1.points();
  GapWitnesses out;
  for (long long step = 1;; ++step) {
    bool found = false;
    for (int a = 0; a < n && !found; ++a) {
      for (int c = a + 1; c < n && !found; ++c) {
        if (m1.num_at(a, c) > step * m1.den &&
            rat_cmp(m2.dist(a, c), bound) < 0) {
          out.pairs.emplace_back(a, c);
          found = true;
        }
      }
    }
    if (!found) {
      out.exhausted_at = static_cast<int>(step);
      return out;
    }
  }
}

InterleaveResult interleave(const MetricWindow& md, const MetricWindow& mrho, int depth) {
  require_same_window(md.window, mrho.window, "interleave");
  require_valid_metric(md, "interleave");
  require_valid_metric(mrho, "interleave");
  if (depth < 1) throw std::invalid_argument("interleave: depth must be positive");
  const int n = md.points();

  // greedy sequence of centers with pairwise disjoint balls of radius = index
  auto greedy = [&](const MetricWindow& m) {
    std::vector<int> centers;
    std::vector<char> used_region(n, 0);
    for (int radius = 0;; ++radius) {
      int pick = -1;
      for (int p = 0; p < n && pick < 0; ++p) {
        bool clear = true;
        for (int q = 0; q < n && clear; ++q) {
          if (used_region[q] && m.within(p, q, radius)) clear = false;
        }
        if (clear) pick = p;
      }
      if (pick < 0) return centers;
      centers.push_back(pick);
      for (int q = 0; q < n; ++q) {
        if (m.within(pick, q, radius)) used_region[q] = 1;
      }
    }
  };
  std::vector<int> a = greedy(md);
  std::vector<int> b = greedy(mrho);
  int feasible = static_cast<int>(std::min(a.size(), b.size())) - 1;
  if (feasible < depth) {
    throw DepthError("interleave: window too small for depth " + std::to_string(depth) +
                         ", largest feasible depth is " + std::to_string(feasible),
                     feasible);
  }

  // numeration: ball blocks in sequence order, center first, then the rest
  std::vector<int> center_step(n, -1);
  for (int j = 0; j < static_cast<int>(a.size()); ++j) center_step[a[j]] = j;
  std::vector<int> numeration;
  std::vector<char> placed(n, 0);
  for (int j = 0; j < static_cast<int>(a.size()); ++j) {
    numeration.push_back(a[j]);
    placed[a[j]] = 1;
    for (int q = 0; q < n; ++q) {
      if (!placed[q] && md.within(a[j], q, j)) {
        numeration.push_back(q);
        placed[q] = 1;
      }
    }
  }
  for (int q = 0; q < n; ++q) {
    if (!placed[q]) numeration.push_back(q);
  }

  const int kb = static_cast<int>(b.size());
  // suffix[i] = union of the rho-balls of b_t, t >= i
  std::vector<std::vector<char>> suffix(kb + 1, std::vector<char>(n, 0));
  for (int i = kb - 1; i >= 0; --i) {
    suffix[i] = suffix[i + 1];
    for (int q = 0; q < n; ++q) {
      if (mrho.within(b[i], q, i)) suffix[i][q] = 1;
    }
  }
  const std::vector<char> empty_set(n, 0);

  InterleaveResult res;
  res.depth = depth;
  res.a_centers = a;
  res.b_targets = b;
  res.numeration = numeration;
  res.f.assign(n, -1);
  res.standard.assign(n, 0);
  std::vector<char> used(n, 0);

  for (int k = 0; k < n; ++k) {
    int x = numeration[k];
    const std::vector<char>& future = (k + 1 <= kb) ? suffix[k + 1] : empty_set;
    auto leftover = [&]() {
      for (int j = 0; j < n; ++j) {
        int cand = numeration[j];
        if (!used[cand] && !future[cand]) return cand;
      }
      for (int j = 0; j < n; ++j) {
        int cand = numeration[j];
        if (!used[cand]) return cand;
      }
      return -1;
    };
    int target = -1;
    bool std_assign = false;
    if (center_step[x] < 0 && k < kb && !used[b[k]]) {
      target = b[k];
      std_assign = true;
    } else if (center_step[x] >= 0) {
      target = leftover();
      if (target < 0 && k < kb && !used[b[k]]) {
        target = b[k];
        std_assign = true;
      }
    } else {
      target = leftover();
    }
    if (target < 0) throw std::logic_error("interleave: ran out of targets");
    used[target] = 1;
    res.f[x] = target;
    res.standard[x] = std_assign ? 1 : 0;
  }

  res.mu = mrho;
  res.mu.window = md.window;
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      res.mu.num[static_cast<std::size_t>(x) * n + y] =
          mrho.num_at(res.f[x], res.f[y]);
    }
  }

  res.exceptional.assign(depth + 1, {});
  for (int level = 0; level <= depth; ++level) {
    std::vector<char> region(n, 0);
    for (int k = 0; k <= level && k < n; ++k) region[numeration[k]] = 1;
    for (int x = 0; x < n; ++x) {
      if (!res.standard[x]) region[x] = 1;
    }
    for (int x = 0; x < n; ++x) {
      bool touched = false;
      for (int q = 0; q < n && !touched; ++q) {
        if (region[q] && md.within(x, q, level)) touched = true;
      }
      if (touched) res.exceptional[level].push_back(x);
    }
  }
  return res;
}

}  // namespace coarse
