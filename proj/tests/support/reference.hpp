#pragma once

// Brute-force oracles for the test suite. Deliberately independent of the
// library's production code paths.

#include <cstdint>
#include <set>
#include <vector>

#include "shoda/algebra.hpp"
#include "shoda/group.hpp"

namespace shoda::testing {

// Naive double-loop convolution; reference for AlgebraElement::operator*.
inline AlgebraElement reference_mul(const AlgebraElement& x, const AlgebraElement& y) {
    const FiniteGroup& G = x.group();
    AlgebraElement r = AlgebraElement::zero(G);
    for (uint32_t a = 0; a < G.order(); ++a)
        for (uint32_t b = 0; b < G.order(); ++b) {
            Rational ca = x.coeff(a), cb = y.coeff(b);
            if (ca != 0 && cb != 0) r.add_term(G.index_of(G.element(a) * G.element(b)), ca * cb);
        }
    return r;
}

// Plain breadth-first closure of the generators over std::set, as a check on
// the Dimino enumeration.
inline std::size_t closure_order(uint32_t degree, const std::vector<Perm>& gens) {
    std::set<Perm> seen{Perm::identity(degree)};
    std::vector<Perm> todo(seen.begin(), seen.end());
    while (!todo.empty()) {
        Perm cur = todo.back();
        todo.pop_back();
        for (const Perm& g : gens) {
            for (const Perm& prod : {cur * g, g * cur}) {
                if (seen.insert(prod).second) todo.push_back(prod);
            }
        }
    }
    return seen.size();
}

// Every subgroup by subset enumeration; only sensible for |G| <= 16.
inline std::set<std::vector<uint32_t>> subgroups_bruteforce(const FiniteGroup& G) {
    const uint32_t n = static_cast<uint32_t>(G.order());
    std::set<std::vector<uint32_t>> found;
    for (uint64_t mask = 1; mask < (1ull << n); ++mask) {
        if (!(mask & 1)) continue;  // must contain the identity
        std::vector<uint32_t> members;
        for (uint32_t i = 0; i < n; ++i)
            if (mask & (1ull << i)) members.push_back(i);
        if (G.order() % members.size() != 0) continue;
        bool closed = true;
        for (uint32_t a : members) {
            for (uint32_t b : members)
                if (!(mask & (1ull << G.mult(a, b)))) {
                    closed = false;
                    break;
                }
            if (!closed) break;
        }
        if (closed) found.insert(members);
    }
    return found;
}

}  // namespace shoda::testing
