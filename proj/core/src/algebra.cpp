#include "shoda/algebra.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

#include "shoda/errors.hpp"

namespace shoda {

AlgebraElement AlgebraElement::one(const FiniteGroup& G) { return basis(G, 0); }

AlgebraElement AlgebraElement::basis(const FiniteGroup& G, uint32_t ordinal) {
    AlgebraElement e(G);
    e.coeffs_[ordinal] = 1;
    return e;
}

Rational AlgebraElement::coeff(uint32_t ordinal) const {
    auto it = coeffs_.find(ordinal);
    return it == coeffs_.end() ? Rational(0) : it->second;
}

AlgebraElement& AlgebraElement::add_term(uint32_t ordinal, const Rational& c) {
    auto it = coeffs_.find(ordinal);
    if (it == coeffs_.end()) {
        if (c != 0) coeffs_.emplace(ordinal, c);
    } else {
        it->second += c;
        if (it->second == 0) coeffs_.erase(it);
    }
    return *this;
}

AlgebraElement AlgebraElement::operator+(const AlgebraElement& o) const {
    if (group_ != o.group_) throw std::invalid_argument("elements of different group algebras");
    AlgebraElement r = *this;
    for (const auto& [ord, c] : o.coeffs_) r.add_term(ord, c);
    return r;
}

AlgebraElement AlgebraElement::operator-(const AlgebraElement& o) const {
    if (group_ != o.group_) throw std::invalid_argument("elements of different group algebras");
    AlgebraElement r = *this;
    for (const auto& [ord, c] : o.coeffs_) r.add_term(ord, -c);
    return r;
}

AlgebraElement AlgebraElement::operator-() const {
    AlgebraElement r(*group_);
    for (const auto& [ord, c] : coeffs_) r.coeffs_.emplace(ord, -c);
    return r;
}

AlgebraElement AlgebraElement::operator*(const AlgebraElement& o) const {
    if (group_ != o.group_) throw std::invalid_argument("elements of different group algebras");
    AlgebraElement r(*group_);
    for (const auto& [a, ca] : coeffs_)
        for (const auto& [b, cb] : o.coeffs_) r.add_term(group_->mult(a, b), ca * cb);
    return r;
}

AlgebraElement AlgebraElement::scaled(const Rational& c) const {
    AlgebraElement r(*group_);
    if (c == 0) return r;
    for (const auto& [ord, v] : coeffs_) r.coeffs_.emplace(ord, v * c);
    return r;
}

int compare(const AlgebraElement& a, const AlgebraElement& b) {
    auto ia = a.coeffs().begin(), ib = b.coeffs().begin();
    for (; ia != a.coeffs().end() && ib != b.coeffs().end(); ++ia, ++ib) {
        if (ia->first != ib->first) return ia->first < ib->first ? -1 : 1;
        int c = cmp(ia->second, ib->second);
        if (c != 0) return c;
    }
    if (ia != a.coeffs().end()) return 1;
    if (ib != b.coeffs().end()) return -1;
    return 0;
}

AlgebraElement hat(const Subgroup& H) {
    AlgebraElement e(H.parent());
    Rational c(1, static_cast<unsigned long>(H.order()));
    c.canonicalize();
    for (uint32_t o : H.ordinals()) e.add_term(o, c);
    return e;
}

AlgebraElement conjugate(const AlgebraElement& e, uint32_t g) {
    const FiniteGroup& G = e.group();
    AlgebraElement r(G);
    for (const auto& [ord, c] : e.coeffs()) r.add_term(G.conjugate(g, ord), c);
    return r;
}

AlgebraElement epsilon(const Subgroup& H, const Subgroup& K) {
    if (H == K) return hat(H);
    AlgebraElement khat = hat(K);
    AlgebraElement result = AlgebraElement::one(H.parent());
    bool first = true;
    for (const Subgroup& L : minimal_normals_above(H, K)) {
        AlgebraElement factor = khat - hat(L);
        result = first ? factor : result * factor;
        first = false;
    }
    return result;
}

Idempotent::Idempotent(AlgebraElement element, std::string label,
                       std::optional<std::pair<Subgroup, Subgroup>> source)
    : element_(std::move(element)), label_(std::move(label)), source_(std::move(source)) {
    assert(element_.is_idempotent());
}

std::vector<AlgebraElement> distinct_conjugates(const FiniteGroup& G, const AlgebraElement& e) {
    std::vector<AlgebraElement> orbit{e};
    for (size_t qi = 0; qi < orbit.size(); ++qi)
        for (uint32_t g : G.generator_ordinals()) {
            AlgebraElement c = conjugate(orbit[qi], g);
            if (std::find(orbit.begin(), orbit.end(), c) == orbit.end())
                orbit.push_back(std::move(c));
        }
    return orbit;
}

namespace {

bool normal_in(const Subgroup& H, const Subgroup& N) {
    // is H normal in N (both subgroups of the same parent)
    const FiniteGroup& G = H.parent();
    for (uint32_t n : N.witnesses())
        for (uint32_t h : H.witnesses())
            if (!H.contains(G.conjugate(n, h))) return false;
    return true;
}

}  // namespace

Idempotent e_of(const FiniteGroup& G, const Subgroup& H, const Subgroup& K) {
    AlgebraElement eps = epsilon(H, K);
    std::vector<AlgebraElement> conjs;
    Subgroup N = normalizer(G, K);
    if (N.contains(H) && normal_in(H, N)) {
        // Conjugates of epsilon are constant on cosets of N_G(K), so a
        // transversal suffices.
        std::vector<bool> covered(G.order(), false);
        for (uint32_t g = 0; g < G.order(); ++g) {
            if (covered[g]) continue;
            for (uint32_t n : N.ordinals()) covered[G.mult(g, n)] = true;
            AlgebraElement c = conjugate(eps, g);
            if (std::find(conjs.begin(), conjs.end(), c) == conjs.end())
                conjs.push_back(std::move(c));
        }
    } else {
        conjs = distinct_conjugates(G, eps);
    }
    AlgebraElement sum = AlgebraElement::zero(G);
    for (const AlgebraElement& c : conjs) sum = sum + c;
    return Idempotent(std::move(sum), "e(G,H,K)", std::make_pair(H, K));
}

std::size_t euler_phi(std::size_t n) {
    std::size_t result = n;
    for (std::size_t p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        while (n % p == 0) n /= p;
        result -= result / p;
    }
    if (n > 1) result -= result / n;
    return result;
}

std::size_t dim_formula(const FiniteGroup& G, const Subgroup& H, const Subgroup& K) {
    Subgroup N = normalizer(G, K);
    std::size_t hk = H.order() / K.order();
    std::size_t nh = N.order() / H.order();
    std::size_t gn = G.order() / N.order();
    return euler_phi(hk) * nh * gn * gn;
}

std::size_t dim_direct(const FiniteGroup& G, const AlgebraElement& e, const Limits& limits) {
    const std::size_t n = G.order();
    if (n > limits.oracle_max_order)
        throw SizeLimitError("dim_direct oracle capped at order " +
                             std::to_string(limits.oracle_max_order));
    // Row g is the coefficient vector of g*e; the rank of the stack is the
    // dimension of the left ideal Q[G]e.
    std::vector<std::vector<Rational>> rows(n, std::vector<Rational>(n, Rational(0)));
    for (uint32_t g = 0; g < n; ++g)
        for (const auto& [ord, c] : e.coeffs()) rows[g][G.mult(g, ord)] = c;

    std::size_t rank = 0;
    for (std::size_t col = 0; col < n && rank < n; ++col) {
        std::size_t pivot = rank;
        while (pivot < n && rows[pivot][col] == 0) ++pivot;
        if (pivot == n) continue;
        std::swap(rows[rank], rows[pivot]);
        const Rational inv_p = 1 / rows[rank][col];
        for (std::size_t j = col; j < n; ++j) rows[rank][j] *= inv_p;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == rank || rows[i][col] == 0) continue;
            const Rational f = rows[i][col];
            for (std::size_t j = col; j < n; ++j) rows[i][j] -= f * rows[rank][j];
        }
        ++rank;
    }
    return rank;
}

bool is_central(const AlgebraElement& e) {
    const FiniteGroup& G = e.group();
    for (uint32_t g : G.generator_ordinals())
        if (!(conjugate(e, g) == e)) return false;
    return true;
}

bool are_orthogonal(const AlgebraElement& a, const AlgebraElement& b) {
    return (a * b).is_zero();
}

bool sum_is_one(const std::vector<Idempotent>& es) {
    if (es.empty()) return false;
    AlgebraElement sum = AlgebraElement::zero(es.front().element().group());
    for (const Idempotent& e : es) sum = sum + e.element();
    return sum == AlgebraElement::one(es.front().element().group());
}

}  // namespace shoda
