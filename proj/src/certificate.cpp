#include "coarse/certificate.hpp"

#include <stdexcept>

namespace coarse {

long long HypothesisReport::constant(const std::string& key) const {
  for (const auto& [k, v] : constants) {
    if (k == key) return v;
  }
  throw std::out_of_range("HypothesisReport: no constant '" + key + "'");
}

void HypothesisReport::set_constant(const std::string& key, long long v) {
  for (auto& kv : constants) {
    if (kv.first == key) {
      kv.second = v;
      return;
    }
  }
  constants.emplace_back(key, v);
}

}  // namespace coarse
