#pragma once

#include <cstdint>
#include <vector>

#include "shoda/subgroup.hpp"

namespace shoda {

// The quotient H/K of two subgroups with K normal in H, materialized as a
// coset table. Cosets are indexed 0..order-1 in ascending order of their
// least parent ordinal, so the coset of the identity is 0.
class Quotient {
public:
    Quotient(const Subgroup& numerator, const Subgroup& modulus);  // checks K normal in H

    std::size_t order() const { return reps_.size(); }
    const Subgroup& numerator() const { return numerator_; }
    const Subgroup& modulus() const { return modulus_; }

    uint32_t coset_of(uint32_t parent_ordinal) const;  // ordinal must lie in the numerator
    uint32_t rep(uint32_t coset) const { return reps_[coset]; }
    uint32_t mult(uint32_t a, uint32_t b) const { return mult_table_[a * order() + b]; }
    uint32_t inv(uint32_t a) const { return inv_[a]; }
    std::size_t coset_order(uint32_t c) const;

    bool is_abelian() const;
    bool is_cyclic() const;  // maximal coset order equals the order
    std::vector<uint32_t> center() const;

    // Cosets met by a subgroup A with modulus <= A <= numerator; the result
    // is the subgroup A/K of the quotient, sorted.
    std::vector<uint32_t> image_of(const Subgroup& A) const;

    std::vector<uint32_t> centralizer_of(const std::vector<uint32_t>& cosets) const;
    bool image_is_cyclic(const std::vector<uint32_t>& cosets) const;
    bool image_is_abelian(const std::vector<uint32_t>& cosets) const;

private:
    Subgroup numerator_;
    Subgroup modulus_;
    std::vector<uint32_t> reps_;
    std::vector<uint32_t> coset_index_;  // parent ordinal -> coset, UINT32_MAX outside
    std::vector<uint32_t> mult_table_;
    std::vector<uint32_t> inv_;
};

// True iff the subgroup of Q spanned by `sub_cosets` is self-centralizing,
// i.e. a maximal abelian subgroup of Q. Throws if it is not abelian.
bool is_maximal_abelian_in(const Quotient& Q, const std::vector<uint32_t>& sub_cosets);

// Convenience overload mapping A through Q first.
bool is_maximal_abelian_in(const Quotient& Q, const Subgroup& A);

}  // namespace shoda
