#pragma once

#include <string>
#include <vector>

#include "shoda/algebra.hpp"

namespace shoda {

// Primitive central idempotents of the commutative part of Q[G]: hat(G) plus
// epsilon(G, N) for every proper normal N above the derived subgroup with
// G/N cyclic. Independent of the search machinery.
std::vector<Idempotent> linear_pci_set(const FiniteGroup& G);

struct VerifyReport {
    std::size_t checked = 0;
    std::size_t dim_sum = 0;      // sum of exact ranks, when the oracle ran
    bool dims_checked = false;    // false when |G| exceeded the oracle cap
    bool sum_equals_one = false;
    std::vector<std::string> failures;
    bool ok() const { return failures.empty(); }
};

// Brute-force validation of a claimed set of primitive central idempotents:
// each element idempotent and central, pairwise orthogonal, exact ranks
// summing to at most |G|, and the sum equal to 1 exactly when the set is
// claimed complete.
VerifyReport verify_pci_set(const FiniteGroup& G, const std::vector<Idempotent>& es,
                            bool claimed_complete, const Limits& limits = {});

// Berman-Witt cross-check. Meaningful when G is normally monomial: the
// extremely strong pairs then biject with the rational conjugacy classes.
bool count_consistency(const FiniteGroup& G);

}  // namespace shoda
