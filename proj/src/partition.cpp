#include "coarse/partition.hpp"

#include <algorithm>
#include <string>

namespace coarse {

Partition Partition::from_classes(int n, std::vector<std::vector<int>> classes) {
  Partition p;
  p.class_of.assign(n, -1);
  for (auto& cls : classes) {
    if (cls.empty()) throw std::invalid_argument("Partition: empty class");
    std::sort(cls.begin(), cls.end());
    if (std::adjacent_find(cls.begin(), cls.end()) != cls.end()) {
      throw std::invalid_argument("Partition: duplicate point inside a class");
    }
  }
  std::sort(classes.begin(), classes.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  for (int c = 0; c < static_cast<int>(classes.size()); ++c) {
    for (int x : classes[c]) {
      if (x < 0 || x >= n) {
        throw std::invalid_argument("Partition: point " + std::to_string(x) +
                                    " outside window");
      }
      if (p.class_of[x] != -1) {
        throw std::invalid_argument("Partition: point " + std::to_string(x) +
                                    " in two classes");
      }
      p.class_of[x] = c;
    }
  }
  for (int x = 0; x < n; ++x) {
    if (p.class_of[x] == -1) {
      throw std::invalid_argument("Partition: point " + std::to_string(x) +
                                  " not covered");
    }
  }
  p.classes = std::move(classes);
  return p;
}

Partition Partition::singletons(int n) {
  std::vector<std::vector<int>> classes(n);
  for (int x = 0; x < n; ++x) classes[x] = {x};
  return from_classes(n, std::move(classes));
}

Partition Partition::unchecked(int n, std::vector<std::vector<int>> classes) {
  Partition p;
  p.classes = std::move(classes);
  p.class_of.assign(n, -1);
  for (int c = 0; c < static_cast<int>(p.classes.size()); ++c) {
    for (int x : p.classes[c]) {
      if (x >= 0 && x < n) p.class_of[x] = c;
    }
  }
  return p;
}

Entourage equivalence_from_partition(const Partition& p) {
  Entourage e(p.points());
  for (const auto& cls : p.classes) {
    for (int x : cls) {
      for (int y : cls) e.add(x, y);
    }
  }
  return e;
}

Partition partition_from_equivalence(const Entourage& e) {
  const int n = e.points();
  for (int x = 0; x < n; ++x) {
    int bad = -1;
    e.for_each_in_row(x, [&](int y) {
      if (bad < 0 && !e.contains(y, x)) bad = y;
    });
    if (bad >= 0) {
      throw NotAnEquivalence("not symmetric: (" + std::to_string(x) + "," +
                                 std::to_string(bad) + ") without its transpose",
                             x, bad);
    }
  }
  for (int x = 0; x < n; ++x) {
    int by = -1, bz = -1;
    e.for_each_in_row(x, [&](int y) {
      if (by >= 0) return;
      e.for_each_in_row(y, [&](int z) {
        if (by < 0 && !e.contains(x, z)) {
          by = y;
          bz = z;
        }
      });
    });
    if (by >= 0) {
      throw NotAnEquivalence("not transitive: (" + std::to_string(x) + "," +
                                 std::to_string(by) + "," + std::to_string(bz) + ")",
                             x, by, bz);
    }
  }
  std::vector<std::vector<int>> classes;
  std::vector<char> seen(n, 0);
  for (int x = 0; x < n; ++x) {
    if (seen[x]) continue;
    auto members = e.row_members(x);
    for (int y : members) seen[y] = 1;
    classes.push_back(std::move(members));
  }
  return Partition::from_classes(n, std::move(classes));
}

bool is_equivalence(const Entourage& e) {
  try {
    partition_from_equivalence(e);
    return true;
  } catch (const NotAnEquivalence&) {
    return false;
  }
}

Partition merge_classes(const Partition& p, const std::vector<int>& which) {
  if (which.empty()) throw std::invalid_argument("merge_classes: empty selection");
  std::vector<char> chosen(p.class_count(), 0);
  for (int c : which) {
    if (c < 0 || c >= p.class_count()) {
      throw std::invalid_argument("merge_classes: invalid class index " +
                                  std::to_string(c));
    }
    chosen[c] = 1;
  }
  std::vector<std::vector<int>> classes;
  std::vector<int> merged;
  for (int c = 0; c < p.class_count(); ++c) {
    if (chosen[c]) {
      merged.insert(merged.end(), p.classes[c].begin(), p.classes[c].end());
    } else {
      classes.push_back(p.classes[c]);
    }
  }
  classes.push_back(std::move(merged));
  return Partition::from_classes(p.points(), std::move(classes));
}

}  // namespace coarse
