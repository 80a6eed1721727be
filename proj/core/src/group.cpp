#include "shoda/group.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace shoda {

namespace {

uint64_t gcd64(uint64_t a, uint64_t b) { return std::gcd(a, b); }

}  // namespace

FiniteGroup FiniteGroup::generated(uint32_t degree, std::vector<Perm> generators,
                                   const Limits& limits) {
    for (const Perm& g : generators)
        if (g.degree() != degree) throw std::invalid_argument("generator degree mismatch");

    // Dimino's inductive coset enumeration: after step i the prefix
    // elems[0 .. order_i) is exactly <g_0, ..., g_i>, and new elements are
    // appended in whole cosets of the previous subgroup.
    std::set<Perm> seen;
    std::vector<Perm> elems;
    auto push = [&](Perm p) -> bool {
        if (!seen.insert(p).second) return false;
        if (elems.size() >= limits.max_order)
            throw SizeLimitError("group order exceeds cap of " +
                                 std::to_string(limits.max_order));
        elems.push_back(std::move(p));
        return true;
    };
    push(Perm::identity(degree));
    for (size_t i = 0; i < generators.size(); ++i) {
        const Perm& s = generators[i];
        if (seen.count(s)) continue;
        const size_t prev_order = elems.size();
        push(s);
        for (size_t j = 1; j < prev_order; ++j) push(elems[j] * s);
        for (size_t rep_pos = prev_order; rep_pos < elems.size(); rep_pos += prev_order) {
            const Perm rep = elems[rep_pos];
            for (size_t k = 0; k <= i; ++k) {
                Perm t = rep * generators[k];
                if (seen.count(t)) continue;
                push(t);
                for (size_t j = 1; j < prev_order; ++j) push(elems[j] * t);
            }
        }
    }

    FiniteGroup G;
    G.degree_ = degree;
    G.generators_ = std::move(generators);
    G.elements_.assign(seen.begin(), seen.end());  // sorted: std::set order
    const size_t n = G.elements_.size();

    G.generator_ordinals_.reserve(G.generators_.size());
    for (const Perm& g : G.generators_) {
        uint32_t idx = G.index_of(g);
        if (std::find(G.generator_ordinals_.begin(), G.generator_ordinals_.end(), idx) ==
            G.generator_ordinals_.end())
            G.generator_ordinals_.push_back(idx);
    }

    G.inverse_.resize(n);
    for (uint32_t i = 0; i < n; ++i) G.inverse_[i] = G.index_of(G.elements_[i].inverse());

    // A full multiplication table pays off everywhere downstream; skip it
    // only when it would be too large to build or store.
    if (n <= limits.mult_table_max_order &&
        static_cast<uint64_t>(n) * n * degree <= 400000000ull) {
        G.mult_table_.resize(n * n);
        for (uint32_t a = 0; a < n; ++a)
            for (uint32_t b = 0; b < n; ++b)
                G.mult_table_[a * n + b] = G.index_of(G.elements_[a] * G.elements_[b]);
    }
    return G;
}

std::optional<uint32_t> FiniteGroup::find(const Perm& p) const {
    auto it = std::lower_bound(elements_.begin(), elements_.end(), p);
    if (it == elements_.end() || !(*it == p)) return std::nullopt;
    return static_cast<uint32_t>(it - elements_.begin());
}

uint32_t FiniteGroup::index_of(const Perm& p) const {
    auto idx = find(p);
    if (!idx) throw std::invalid_argument("permutation is not a group element");
    return *idx;
}

uint32_t FiniteGroup::power(uint32_t a, uint64_t k) const {
    uint32_t acc = 0;  // identity
    uint32_t base = a;
    while (k > 0) {
        if (k & 1) acc = mult(acc, base);
        base = mult(base, base);
        k >>= 1;
    }
    return acc;
}

uint32_t FiniteGroup::element_order(uint32_t a) const {
    uint32_t x = a;
    uint32_t k = 1;
    while (x != 0) {
        x = mult(x, a);
        ++k;
    }
    return k;
}

bool FiniteGroup::is_abelian() const {
    for (uint32_t a : generator_ordinals_)
        for (uint32_t b : generator_ordinals_)
            if (mult(a, b) != mult(b, a)) return false;
    return true;
}

std::vector<std::vector<uint32_t>> FiniteGroup::conjugacy_classes() const {
    const uint32_t n = static_cast<uint32_t>(order());
    std::vector<bool> visited(n, false);
    std::vector<std::vector<uint32_t>> classes;
    for (uint32_t x = 0; x < n; ++x) {
        if (visited[x]) continue;
        std::vector<uint32_t> cls{x};
        visited[x] = true;
        for (size_t qi = 0; qi < cls.size(); ++qi) {
            for (uint32_t g : generator_ordinals_) {
                uint32_t y = conjugate(g, cls[qi]);
                if (!visited[y]) {
                    visited[y] = true;
                    cls.push_back(y);
                }
            }
        }
        std::sort(cls.begin(), cls.end());
        classes.push_back(std::move(cls));
    }
    return classes;
}

std::size_t rational_class_count(const FiniteGroup& G) {
    auto classes = G.conjugacy_classes();
    std::vector<uint32_t> class_of(G.order());
    for (uint32_t c = 0; c < classes.size(); ++c)
        for (uint32_t x : classes[c]) class_of[x] = c;

    std::vector<uint32_t> root(classes.size());
    std::iota(root.begin(), root.end(), 0u);
    auto find_root = [&](uint32_t a) {
        while (root[a] != a) a = root[a] = root[root[a]];
        return a;
    };

    for (uint32_t c = 0; c < classes.size(); ++c) {
        uint32_t rep = classes[c][0];
        uint64_t m = G.element_order(rep);
        for (uint64_t k = 2; k < m; ++k) {
            if (gcd64(k, m) != 1) continue;
            uint32_t d = class_of[G.power(rep, k)];
            uint32_t ra = find_root(c), rb = find_root(d);
            if (ra != rb) root[std::max(ra, rb)] = std::min(ra, rb);
        }
    }
    std::size_t count = 0;
    for (uint32_t c = 0; c < classes.size(); ++c)
        if (find_root(c) == c) ++count;
    return count;
}

}  // namespace shoda
