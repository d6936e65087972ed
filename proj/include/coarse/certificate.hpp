#ifndef COARSE_CERTIFICATE_HPP
#define COARSE_CERTIFICATE_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "coarse/partition.hpp"

namespace coarse {

// class `cls` of partition 0/1 is contained in ball(chain[index], center)
struct DiameterWitness {
  int partition = 0;
  int cls = 0;
  int center = 0;
  int index = 0;
};

// Point chain for one generator pair; hop j stays inside one class of the
// partition named by pattern[j].
struct EdgeWitness {
  std::pair<int, int> pair;
  std::vector<int> pattern;
  std::vector<int> chain;
};

// Two partitions plus replayable evidence that the source structure equals
// the join of the two generated cellular structures, at the stated budget.
struct DecompositionCertificate {
  int window_size = 0;
  Partition p0, p1;
  std::vector<DiameterWitness> diameter_witnesses;
  std::vector<int> pattern;  // nominal word shape, e.g. {0,1,0}
  std::vector<EdgeWitness> edge_witnesses;
  int budget_radius = 0;
  int budget_maxlen = 0;
  std::uint64_t seed = 0;
  std::string method;
  std::vector<std::pair<std::string, long long>> meta;
};

struct HypothesisReport {
  std::string proposition;  // "prop9", "prop10", "prop11", "comment5_ulf"
  bool pass = false;
  std::string failing_object;
  int failing_class = -1;
  int failing_vertex = -1;
  std::vector<std::pair<std::string, long long>> constants;

  long long constant(const std::string& key) const;
  void set_constant(const std::string& key, long long v);
};

}  // namespace coarse

#endif
