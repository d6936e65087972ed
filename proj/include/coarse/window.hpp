#ifndef COARSE_WINDOW_HPP
#define COARSE_WINDOW_HPP

#include <vector>

namespace coarse {

// Finite ordered ground set. Points are dense integer IDs 0..size-1.
// Grid windows carry integer coordinates per point; `interior` marks the
// subset where boundary-sensitive guarantees apply.
struct Window {
  int size = 0;
  std::vector<std::vector<int>> coords;  // empty, or one vector per point
  std::vector<int> interior;             // empty = unspecified

  bool has_coords() const { return !coords.empty(); }
};

bool same_window(const Window& a, const Window& b);
void require_same_window(const Window& a, const Window& b, const char* where);
void require_point(const Window& w, int x, const char* where);

}  // namespace coarse

#endif
