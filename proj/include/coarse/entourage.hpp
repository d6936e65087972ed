#ifndef COARSE_ENTOURAGE_HPP
#define COARSE_ENTOURAGE_HPP

#include <bit>
#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "coarse/window.hpp"

namespace coarse {

// Reflexive relation on a window {0..n-1}, packed as bitset rows.
// The diagonal is set at construction and add() never clears bits, so
// every instance is an entourage of the diagonal.
class Entourage {
 public:
  Entourage() = default;
  explicit Entourage(int n);

  static Entourage diagonal(int n) { return Entourage(n); }
  static Entourage full(int n);

  int points() const { return n_; }
  bool contains(int x, int y) const;
  void add(int x, int y);
  void add_symmetric(int x, int y);

  bool subset_of(const Entourage& other) const;
  bool symmetric() const;
  std::size_t pair_count() const;  // set bits, diagonal included
  std::vector<int> row_members(int x) const;
  std::vector<std::pair<int, int>> off_diagonal_pairs() const;

  // calls fn(y) for every y with (x,y) in the relation, ascending
  template <typename F>
  void for_each_in_row(int x, F&& fn) const {
    const std::uint64_t* r = row(x);
    for (int w = 0; w < words_; ++w) {
      std::uint64_t m = r[w];
      while (m) {
        fn(w * 64 + std::countr_zero(m));
        m &= m - 1;
      }
    }
  }

  friend Entourage compose(const Entourage& a, const Entourage& b);
  friend Entourage inverse(const Entourage& e);
  friend Entourage unite(const Entourage& a, const Entourage& b);
  friend Entourage intersect(const Entourage& a, const Entourage& b);
  friend bool operator==(const Entourage& a, const Entourage& b);

 private:
  const std::uint64_t* row(int x) const {
    return bits_.data() + static_cast<std::size_t>(x) * words_;
  }
  std::uint64_t* row(int x) {
    return bits_.data() + static_cast<std::size_t>(x) * words_;
  }

  int n_ = 0;
  int words_ = 0;
  std::vector<std::uint64_t> bits_;
};

struct Ball {
  int center = -1;
  std::vector<int> members;
};

// restrict_to re-indexes points; `parent` maps sub-window ids back.
struct RestrictedEntourage {
  Entourage relation;
  std::vector<int> parent;
};

Entourage compose(const Entourage& a, const Entourage& b);
Entourage inverse(const Entourage& e);
Entourage unite(const Entourage& a, const Entourage& b);
Entourage intersect(const Entourage& a, const Entourage& b);
bool operator==(const Entourage& a, const Entourage& b);
Ball ball(const Entourage& e, int x);
RestrictedEntourage restrict_to(const Entourage& e, const std::vector<int>& s);

}  // namespace coarse

#endif
