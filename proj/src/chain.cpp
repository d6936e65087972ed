#include "coarse/chain.hpp"

#include <stdexcept>
#include <string>

namespace coarse {

void validate_chain(const CoarseChain& c) {
  if (c.levels.empty()) throw std::logic_error("chain: no levels");
  if (!(c.levels[0] == Entourage::diagonal(c.window.size))) {
    throw std::logic_error("chain: level 0 is not the diagonal");
  }
  for (int i = 0; i < static_cast<int>(c.levels.size()); ++i) {
    if (c.levels[i].points() != c.window.size) {
      throw std::logic_error("chain: level " + std::to_string(i) + " on wrong window");
    }
    if (i > 0 && !c.levels[i - 1].subset_of(c.levels[i])) {
      throw std::logic_error("chain: not ascending at level " + std::to_string(i));
    }
  }
}

}  // namespace coarse
