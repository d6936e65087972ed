#ifndef COARSE_PARTITION_HPP
#define COARSE_PARTITION_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "coarse/entourage.hpp"

namespace coarse {

// Disjoint cover of a window. Classes are kept in canonical order:
// sorted by minimum member id, members ascending.
struct Partition {
  std::vector<std::vector<int>> classes;
  std::vector<int> class_of;

  int points() const { return static_cast<int>(class_of.size()); }
  int class_count() const { return static_cast<int>(classes.size()); }

  static Partition from_classes(int n, std::vector<std::vector<int>> classes);
  static Partition singletons(int n);
  // no validation, best-effort class_of; for untrusted certificate payloads
  // that the verifier re-checks from the class lists
  static Partition unchecked(int n, std::vector<std::vector<int>> classes);
};

struct NotAnEquivalence : std::runtime_error {
  int x, y, z;  // z < 0: violating pair (x,y); otherwise triple (x,y,z)
  NotAnEquivalence(const std::string& what, int x, int y, int z = -1)
      : std::runtime_error(what), x(x), y(y), z(z) {}
};

Entourage equivalence_from_partition(const Partition& p);
Partition partition_from_equivalence(const Entourage& e);  // throws NotAnEquivalence
Partition merge_classes(const Partition& p, const std::vector<int>& which);
bool is_equivalence(const Entourage& e);

}  // namespace coarse

#endif
