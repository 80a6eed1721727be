#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "shoda/rational.hpp"
#include "shoda/subgroup.hpp"

namespace shoda {

// Sparse element of the rational group algebra: a map from element ordinal
// to nonzero exact coefficient. Kept in normal form (no zero coefficients),
// so structural equality is semantic equality.
class AlgebraElement {
public:
    explicit AlgebraElement(const FiniteGroup& G) : group_(&G) {}
    static AlgebraElement zero(const FiniteGroup& G) { return AlgebraElement(G); }
    static AlgebraElement one(const FiniteGroup& G);
    static AlgebraElement basis(const FiniteGroup& G, uint32_t ordinal);

    const FiniteGroup& group() const { return *group_; }
    const std::map<uint32_t, Rational>& coeffs() const { return coeffs_; }
    Rational coeff(uint32_t ordinal) const;
    std::size_t support_size() const { return coeffs_.size(); }
    bool is_zero() const { return coeffs_.empty(); }

    AlgebraElement& add_term(uint32_t ordinal, const Rational& c);

    AlgebraElement operator+(const AlgebraElement& o) const;
    AlgebraElement operator-(const AlgebraElement& o) const;
    AlgebraElement operator-() const;
    AlgebraElement operator*(const AlgebraElement& o) const;  // convolution
    AlgebraElement scaled(const Rational& c) const;
    bool operator==(const AlgebraElement& o) const {
        return group_ == o.group_ && coeffs_ == o.coeffs_;
    }

    bool is_idempotent() const { return *this * *this == *this; }

private:
    const FiniteGroup* group_;
    std::map<uint32_t, Rational> coeffs_;
};

// Deterministic total order (support lexicographic, then coefficients);
// used only to sort idempotent lists for set comparison.
int compare(const AlgebraElement& a, const AlgebraElement& b);

// The averaging idempotent of a subgroup: coefficient 1/|H| on H.
AlgebraElement hat(const Subgroup& H);

// Coefficient transport along x -> g x g^-1.
AlgebraElement conjugate(const AlgebraElement& e, uint32_t g);

// hat(H) when H = K, otherwise the product of (hat(K) - hat(L)) over the
// minimal normal subgroups L of H properly containing K. Requires K normal
// in H. The factors commute, so their order does not matter.
AlgebraElement epsilon(const Subgroup& H, const Subgroup& K);

// An algebra element known to be idempotent, together with the construction
// that produced it.
class Idempotent {
public:
    Idempotent(AlgebraElement element, std::string label,
               std::optional<std::pair<Subgroup, Subgroup>> source = std::nullopt);

    const AlgebraElement& element() const { return element_; }
    const std::string& label() const { return label_; }
    const std::optional<std::pair<Subgroup, Subgroup>>& source() const { return source_; }

    bool operator==(const Idempotent& o) const { return element_ == o.element_; }

private:
    AlgebraElement element_;
    std::string label_;
    std::optional<std::pair<Subgroup, Subgroup>> source_;
};

// Sum of the distinct G-conjugates of epsilon(H, K). When (H, K) is a strong
// Shoda pair this is a primitive central idempotent. Requires K normal in H.
Idempotent e_of(const FiniteGroup& G, const Subgroup& H, const Subgroup& K);

// The distinct conjugates themselves (orbit under conjugation by G).
std::vector<AlgebraElement> distinct_conjugates(const FiniteGroup& G, const AlgebraElement& e);

// phi([H:K]) * [N_G(K):H] * [G:N_G(K)]^2 — the rational dimension of the
// simple component realized by a strong Shoda pair (H, K).
std::size_t dim_formula(const FiniteGroup& G, const Subgroup& H, const Subgroup& K);

// Exact rank over Q of span{g*e : g in G}, by Gaussian elimination on the
// |G| x |G| coefficient matrix. Test oracle only; throws SizeLimitError
// above limits.oracle_max_order.
std::size_t dim_direct(const FiniteGroup& G, const AlgebraElement& e, const Limits& limits = {});

bool is_central(const AlgebraElement& e);
bool are_orthogonal(const AlgebraElement& a, const AlgebraElement& b);
bool sum_is_one(const std::vector<Idempotent>& es);

std::size_t euler_phi(std::size_t n);

}  // namespace shoda
