#include "coarse/window.hpp"

#include <stdexcept>
#include <string>

namespace coarse {

bool same_window(const Window& a, const Window& b) { return a.size == b.size; }

void require_same_window(const Window& a, const Window& b, const char* where) {
  if (!same_window(a, b)) {
    throw std::invalid_argument(std::string(where) + ": windows differ (" +
                                std::to_string(a.size) + " vs " + std::to_string(b.size) +
                                " points)");
  }
}

void require_point(const Window& w, int x, const char* where) {
  if (x < 0 || x >= w.size) {
    throw std::invalid_argument(std::string(where) + ": unknown point " + std::to_string(x));
  }
}

}  // namespace coarse
