#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace shoda {

// A permutation of {0, ..., n-1}, stored as its image array.
// Composition is function composition: (p * q)(x) = p(q(x)).
class Perm {
public:
    Perm() = default;
    explicit Perm(std::vector<uint32_t> images);  // validates bijection
    static Perm identity(uint32_t degree);

    uint32_t degree() const { return static_cast<uint32_t>(images_.size()); }
    uint32_t operator()(uint32_t point) const { return images_[point]; }
    const std::vector<uint32_t>& images() const { return images_; }

    bool is_identity() const;
    Perm operator*(const Perm& rhs) const;
    Perm inverse() const;
    uint32_t order() const;  // lcm of cycle lengths

    // Lexicographic order on image arrays; this is the canonical element
    // order used for all deterministic tie-breaks.
    auto operator<=>(const Perm&) const = default;

private:
    std::vector<uint32_t> images_;
};

// Cycle notation with 0-based points, e.g. "(0 1 2)(3 4)". The identity
// prints as "()". Fixed points are omitted.
std::string to_cycle_string(const Perm& p);

// Parses cycle notation; throws ParseError on malformed input, points out of
// range, or repeated points.
Perm perm_from_cycles(const std::string& text, uint32_t degree);

}  // namespace shoda
