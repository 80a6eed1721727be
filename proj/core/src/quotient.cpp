#include "shoda/quotient.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace shoda {

namespace {
constexpr uint32_t kOutside = std::numeric_limits<uint32_t>::max();
}

Quotient::Quotient(const Subgroup& numerator, const Subgroup& modulus)
    : numerator_(numerator), modulus_(modulus) {
    const FiniteGroup& G = numerator.parent();
    if (&G != &modulus.parent()) throw std::invalid_argument("subgroups of different groups");
    if (!numerator.contains(modulus))
        throw std::invalid_argument("modulus not contained in numerator");
    for (uint32_t h : numerator.witnesses())
        for (uint32_t k : modulus.witnesses())
            if (!modulus.contains(G.conjugate(h, k)))
                throw std::invalid_argument("modulus not normal in numerator");

    coset_index_.assign(G.order(), kOutside);
    // Ascending sweep assigns each coset at its least element, so reps_ is
    // automatically sorted and coset 0 contains the identity.
    for (uint32_t h : numerator.ordinals()) {
        if (coset_index_[h] != kOutside) continue;
        uint32_t c = static_cast<uint32_t>(reps_.size());
        reps_.push_back(h);
        for (uint32_t k : modulus.ordinals()) coset_index_[G.mult(h, k)] = c;
    }
    const std::size_t q = reps_.size();
    mult_table_.resize(q * q);
    for (uint32_t a = 0; a < q; ++a)
        for (uint32_t b = 0; b < q; ++b)
            mult_table_[a * q + b] = coset_index_[G.mult(reps_[a], reps_[b])];
    inv_.resize(q);
    for (uint32_t a = 0; a < q; ++a) inv_[a] = coset_index_[G.inverse(reps_[a])];
}

uint32_t Quotient::coset_of(uint32_t parent_ordinal) const {
    uint32_t c = coset_index_[parent_ordinal];
    if (c == kOutside) throw std::invalid_argument("element outside the numerator");
    return c;
}

std::size_t Quotient::coset_order(uint32_t c) const {
    uint32_t x = c;
    std::size_t k = 1;
    while (x != 0) {
        x = mult(x, c);
        ++k;
    }
    return k;
}

bool Quotient::is_abelian() const {
    for (uint32_t a = 0; a < order(); ++a)
        for (uint32_t b = a + 1; b < order(); ++b)
            if (mult(a, b) != mult(b, a)) return false;
    return true;
}

bool Quotient::is_cyclic() const {
    for (uint32_t c = 0; c < order(); ++c)
        if (coset_order(c) == order()) return true;
    return false;
}

std::vector<uint32_t> Quotient::center() const {
    std::vector<uint32_t> z;
    for (uint32_t a = 0; a < order(); ++a) {
        bool ok = true;
        for (uint32_t b = 0; b < order() && ok; ++b)
            if (mult(a, b) != mult(b, a)) ok = false;
        if (ok) z.push_back(a);
    }
    return z;
}

std::vector<uint32_t> Quotient::image_of(const Subgroup& A) const {
    if (!numerator_.contains(A) || !A.contains(modulus_))
        throw std::invalid_argument("subgroup not between modulus and numerator");
    std::vector<uint32_t> img;
    std::vector<bool> seen(order(), false);
    for (uint32_t a : A.ordinals()) {
        uint32_t c = coset_index_[a];
        if (!seen[c]) {
            seen[c] = true;
            img.push_back(c);
        }
    }
    std::sort(img.begin(), img.end());
    return img;
}

std::vector<uint32_t> Quotient::centralizer_of(const std::vector<uint32_t>& cosets) const {
    std::vector<uint32_t> result;
    for (uint32_t a = 0; a < order(); ++a) {
        bool ok = true;
        for (uint32_t s : cosets)
            if (mult(a, s) != mult(s, a)) {
                ok = false;
                break;
            }
        if (ok) result.push_back(a);
    }
    return result;
}

bool Quotient::image_is_cyclic(const std::vector<uint32_t>& cosets) const {
    for (uint32_t c : cosets)
        if (coset_order(c) == cosets.size()) return true;
    return false;
}

bool Quotient::image_is_abelian(const std::vector<uint32_t>& cosets) const {
    for (uint32_t a : cosets)
        for (uint32_t b : cosets)
            if (mult(a, b) != mult(b, a)) return false;
    return true;
}

bool is_maximal_abelian_in(const Quotient& Q, const std::vector<uint32_t>& sub_cosets) {
    if (!Q.image_is_abelian(sub_cosets))
        throw std::invalid_argument("subgroup is not abelian");
    return Q.centralizer_of(sub_cosets) == sub_cosets;
}

bool is_maximal_abelian_in(const Quotient& Q, const Subgroup& A) {
    return is_maximal_abelian_in(Q, Q.image_of(A));
}

}  // namespace shoda
