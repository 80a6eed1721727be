#include "shoda/permutation.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

#include "shoda/errors.hpp"

namespace shoda {

Perm::Perm(std::vector<uint32_t> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size(), false);
    for (uint32_t v : images_) {
        if (v >= images_.size() || seen[v])
            throw std::invalid_argument("image array is not a permutation");
        seen[v] = true;
    }
}

Perm Perm::identity(uint32_t degree) {
    std::vector<uint32_t> img(degree);
    std::iota(img.begin(), img.end(), 0u);
    Perm p;
    p.images_ = std::move(img);
    return p;
}

bool Perm::is_identity() const {
    for (uint32_t i = 0; i < degree(); ++i)
        if (images_[i] != i) return false;
    return true;
}

Perm Perm::operator*(const Perm& rhs) const {
    if (degree() != rhs.degree()) throw std::invalid_argument("degree mismatch");
    std::vector<uint32_t> img(degree());
    for (uint32_t i = 0; i < degree(); ++i) img[i] = images_[rhs.images_[i]];
    Perm p;
    p.images_ = std::move(img);
    return p;
}

Perm Perm::inverse() const {
    std::vector<uint32_t> img(degree());
    for (uint32_t i = 0; i < degree(); ++i) img[images_[i]] = i;
    Perm p;
    p.images_ = std::move(img);
    return p;
}

uint32_t Perm::order() const {
    uint64_t result = 1;
    std::vector<bool> done(degree(), false);
    for (uint32_t i = 0; i < degree(); ++i) {
        if (done[i]) continue;
        uint64_t len = 0;
        for (uint32_t j = i; !done[j]; j = images_[j]) {
            done[j] = true;
            ++len;
        }
        result = std::lcm(result, len);
    }
    return static_cast<uint32_t>(result);
}

std::string to_cycle_string(const Perm& p) {
    std::ostringstream out;
    std::vector<bool> done(p.degree(), false);
    bool any = false;
    for (uint32_t i = 0; i < p.degree(); ++i) {
        if (done[i] || p(i) == i) continue;
        any = true;
        out << '(' << i;
        done[i] = true;
        for (uint32_t j = p(i); j != i; j = p(j)) {
            out << ' ' << j;
            done[j] = true;
        }
        out << ')';
    }
    if (!any) return "()";
    return out.str();
}

Perm perm_from_cycles(const std::string& text, uint32_t degree) {
    std::vector<uint32_t> img(degree);
    std::iota(img.begin(), img.end(), 0u);
    std::vector<bool> used(degree, false);

    size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    skip_ws();
    if (pos == text.size()) throw ParseError("empty permutation");
    while (pos < text.size()) {
        skip_ws();
        if (pos == text.size()) break;
        if (text[pos] != '(')
            throw ParseError("expected '(' at column " + std::to_string(pos + 1));
        ++pos;
        std::vector<uint32_t> cycle;
        for (;;) {
            skip_ws();
            if (pos == text.size()) throw ParseError("unterminated cycle");
            if (text[pos] == ')') {
                ++pos;
                break;
            }
            if (!std::isdigit(static_cast<unsigned char>(text[pos])))
                throw ParseError("expected point at column " + std::to_string(pos + 1));
            uint64_t v = 0;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
                v = v * 10 + (text[pos] - '0');
                if (v > degree) break;
                ++pos;
            }
            if (v >= degree)
                throw ParseError("point " + std::to_string(v) + " out of range for degree " +
                                 std::to_string(degree));
            if (used[v]) throw ParseError("point " + std::to_string(v) + " repeated");
            used[v] = true;
            cycle.push_back(static_cast<uint32_t>(v));
        }
        for (size_t i = 0; i < cycle.size(); ++i)
            img[cycle[i]] = cycle[(i + 1) % cycle.size()];
    }
    return Perm(std::move(img));
}

}  // namespace shoda
