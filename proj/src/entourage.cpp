#include "coarse/entourage.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace coarse {

namespace {

void require_same_size(const Entourage& a, const Entourage& b, const char* where) {
  if (a.points() != b.points()) {
    throw std::invalid_argument(std::string(where) + ": windows differ (" +
                                std::to_string(a.points()) + " vs " +
                                std::to_string(b.points()) + " points)");
  }
}

}  // namespace

Entourage::Entourage(int n) : n_(n), words_((n + 63) / 64) {
  if (n < 0) throw std::invalid_argument("Entourage: negative window size");
  bits_.assign(static_cast<std::size_t>(n_) * words_, 0);
  for (int x = 0; x < n_; ++x) add(x, x);
}

Entourage Entourage::full(int n) {
  Entourage e(n);
  for (int x = 0; x < n; ++x) {
    std::uint64_t* r = e.row(x);
    for (int w = 0; w < e.words_; ++w) r[w] = ~std::uint64_t{0};
    // clear the slack bits past n
    int tail = n % 64;
    if (tail) r[e.words_ - 1] &= (std::uint64_t{1} << tail) - 1;
  }
  return e;
}

bool Entourage::contains(int x, int y) const {
  return (row(x)[y >> 6] >> (y & 63)) & 1;
}

void Entourage::add(int x, int y) {
  if (x < 0 || x >= n_ || y < 0 || y >= n_) {
    throw std::invalid_argument("Entourage::add: point outside window");
  }
  row(x)[y >> 6] |= std::uint64_t{1} << (y & 63);
}

void Entourage::add_symmetric(int x, int y) {
  add(x, y);
  add(y, x);
}

bool Entourage::subset_of(const Entourage& other) const {
  require_same_size(*this, other, "subset_of");
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    if (bits_[i] & ~other.bits_[i]) return false;
  }
  return true;
}

bool Entourage::symmetric() const {
  for (int x = 0; x < n_; ++x) {
    bool ok = true;
    for_each_in_row(x, [&](int y) {
      if (!contains(y, x)) ok = false;
    });
    if (!ok) return false;
  }
  return true;
}

std::size_t Entourage::pair_count() const {
  std::size_t total = 0;
  for (std::uint64_t w : bits_) total += std::popcount(w);
  return total;
}

std::vector<int> Entourage::row_members(int x) const {
  std::vector<int> out;
  for_each_in_row(x, [&](int y) { out.push_back(y); });
  return out;
}

std::vector<std::pair<int, int>> Entourage::off_diagonal_pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int x = 0; x < n_; ++x) {
    for_each_in_row(x, [&](int y) {
      if (y != x) out.emplace_back(x, y);
    });
  }
  return out;
}

Entourage compose(const Entourage& a, const Entourage& b) {
  require_same_size(a, b, "compose");
  Entourage out(a.n_);
  for (int x = 0; x < a.n_; ++x) {
    std::uint64_t* dst = out.row(x);
    a.for_each_in_row(x, [&](int z) {
      const std::uint64_t* src = b.row(z);
      for (int w = 0; w < b.words_; ++w) dst[w] |= src[w];
    });
  }
  return out;
}

Entourage inverse(const Entourage& e) {
  Entourage out(e.n_);
  for (int x = 0; x < e.n_; ++x) {
    e.for_each_in_row(x, [&](int y) { out.add(y, x); });
  }
  return out;
}

Entourage unite(const Entourage& a, const Entourage& b) {
  require_same_size(a, b, "unite");
  Entourage out = a;
  for (std::size_t i = 0; i < out.bits_.size(); ++i) out.bits_[i] |= b.bits_[i];
  return out;
}

Entourage intersect(const Entourage& a, const Entourage& b) {
  require_same_size(a, b, "intersect");
  Entourage out = a;
  for (std::size_t i = 0; i < out.bits_.size(); ++i) out.bits_[i] &= b.bits_[i];
  return out;
}

bool operator==(const Entourage& a, const Entourage& b) {
  return a.n_ == b.n_ && a.bits_ == b.bits_;
}

Ball ball(const Entourage& e, int x) {
  if (x < 0 || x >= e.points()) {
    throw std::invalid_argument("ball: unknown point " + std::to_string(x));
  }
  return Ball{x, e.row_members(x)};
}

RestrictedEntourage restrict_to(const Entourage& e, const std::vector<int>& s) {
  if (s.empty()) throw std::invalid_argument("restrict_to: empty point set");
  std::vector<int> sub = s;
  std::sort(sub.begin(), sub.end());
  sub.erase(std::unique(sub.begin(), sub.end()), sub.end());
  if (sub.front() < 0 || sub.back() >= e.points()) {
    throw std::invalid_argument("restrict_to: point outside window");
  }
  std::vector<int> to_sub(e.points(), -1);
  for (int i = 0; i < static_cast<int>(sub.size()); ++i) to_sub[sub[i]] = i;

  RestrictedEntourage out;
  out.relation = Entourage(static_cast<int>(sub.size()));
  out.parent = sub;
  for (int i = 0; i < static_cast<int>(sub.size()); ++i) {
    e.for_each_in_row(sub[i], [&](int y) {
      if (to_sub[y] >= 0) out.relation.add(i, to_sub[y]);
    });
  }
  return out;
}

}  // namespace coarse
