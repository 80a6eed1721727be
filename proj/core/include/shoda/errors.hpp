#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace shoda {

// Raised when an enumeration or lattice computation exceeds a configured cap.
class SizeLimitError : public std::runtime_error {
public:
    explicit SizeLimitError(const std::string& what) : std::runtime_error(what) {}
};

// Raised on malformed group specs, cycle notation or group files.
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// Caps for the computations that can blow up. Everything is exact, so the
// only defence against oversized inputs is to refuse them early.
struct Limits {
    std::size_t max_order = 20000;            // element enumeration cap
    std::size_t mult_table_max_order = 2048;  // above this, multiply by composing
    std::size_t max_subgroups = 100000;       // subgroup lattice cap
    std::size_t oracle_max_order = 200;       // exact-rank oracle cap
};

}  // namespace shoda
