#pragma once
// Classification of vanishing sums of at most five roots of unity: every
// such sum is a disjoint union of complete p-th root groups, p in {2, 3, 5}
// (Mann; Poonen-Rubinstein).

#include <vector>

#include "cyclotome/rootsum.hpp"

namespace cyclotome {

struct VanishingGroup {
  long p;         // group size: a full set of p-th roots, scaled
  long base_exp;  // the group is { zeta_N^(base_exp + t*N/p) : 0 <= t < p }
};

// Partition the terms of a (all multiplicities +1, at most 5 terms, value 0)
// into complete p-th root groups. Throws std::invalid_argument when the
// preconditions fail and std::logic_error if no partition exists (impossible
// for <= 5 terms by Mann's theorem).
std::vector<VanishingGroup> classify_vanishing_sum(const RootSum& a);

}  // namespace cyclotome
