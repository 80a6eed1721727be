#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "shoda/errors.hpp"
#include "shoda/permutation.hpp"

namespace shoda {

// A fully enumerated finite permutation group.
//
// Elements are stored sorted lexicographically by image array, so the
// identity is always ordinal 0 and every "least"/"first" tie-break in the
// library refers to this order. The instance is immutable after
// construction. Subgroups, quotients and algebra elements keep plain
// pointers to their parent group; the parent must outlive them.
class FiniteGroup {
public:
    // Dimino-style closure of the generators. Throws SizeLimitError when the
    // order exceeds limits.max_order and std::invalid_argument on degree
    // mismatch. An empty generator list yields the trivial group.
    static FiniteGroup generated(uint32_t degree, std::vector<Perm> generators,
                                 const Limits& limits = {});

    uint32_t degree() const { return degree_; }
    std::size_t order() const { return elements_.size(); }
    const std::vector<Perm>& elements() const { return elements_; }
    const std::vector<Perm>& generators() const { return generators_; }
    const std::vector<uint32_t>& generator_ordinals() const { return generator_ordinals_; }

    const Perm& element(uint32_t ordinal) const { return elements_[ordinal]; }
    std::optional<uint32_t> find(const Perm& p) const;
    uint32_t index_of(const Perm& p) const;  // throws std::invalid_argument if absent

    uint32_t mult(uint32_t a, uint32_t b) const {
        if (!mult_table_.empty()) return mult_table_[a * order() + b];
        return index_of(elements_[a] * elements_[b]);
    }
    uint32_t inverse(uint32_t a) const { return inverse_[a]; }
    uint32_t conjugate(uint32_t g, uint32_t x) const {  // g x g^-1
        return mult(mult(g, x), inverse_[g]);
    }
    uint32_t power(uint32_t a, uint64_t k) const;
    uint32_t element_order(uint32_t a) const;
    bool is_abelian() const;

    // Conjugacy classes of elements: each class sorted ascending, classes
    // ordered by their least member. Class 0 is {identity}.
    std::vector<std::vector<uint32_t>> conjugacy_classes() const;

private:
    FiniteGroup() = default;

    uint32_t degree_ = 0;
    std::vector<Perm> generators_;
    std::vector<uint32_t> generator_ordinals_;
    std::vector<Perm> elements_;
    std::vector<uint32_t> inverse_;
    std::vector<uint32_t> mult_table_;  // empty when the group is too large
};

// Number of orbits of conjugacy classes under the power maps g -> g^k with
// gcd(k, |g|) = 1. By Berman-Witt this equals the number of primitive
// central idempotents of the rational group algebra.
std::size_t rational_class_count(const FiniteGroup& G);

}  // namespace shoda
