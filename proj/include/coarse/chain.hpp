#ifndef COARSE_CHAIN_HPP
#define COARSE_CHAIN_HPP

#include <string>
#include <vector>

#include "coarse/entourage.hpp"
#include "coarse/window.hpp"

namespace coarse {

// Truncated base of a coarse structure: an ascending chain of entourages
// indexed by radius, levels[0] = diagonal.
struct CoarseChain {
  Window window;
  std::vector<Entourage> levels;
  std::string label;

  int radius() const { return static_cast<int>(levels.size()) - 1; }
  const Entourage& at(int i) const { return levels.at(i); }
  const Entourage& top() const { return levels.back(); }
  const Entourage& generator() const { return levels.at(1); }
};

void validate_chain(const CoarseChain& c);  // throws std::logic_error

// Word over two chains: each letter names (structure tag, chain index).
struct CompositionWord {
  struct Letter {
    int structure;  // 0 or 1
    int index;
  };
  std::vector<Letter> letters;
};

}  // namespace coarse

#endif
