#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "splitscope/rational.hpp"

namespace splitscope {

// Sign pattern over the points of a configuration, indexed by label position.
// Circuits and cocircuits are defined only up to negation; the canonical
// representative gives the smallest-position support element a '+'.
struct SignVector {
    std::vector<int8_t> s;

    SignVector() = default;
    explicit SignVector(std::size_t n) : s(n, 0) {}

    std::size_t size() const { return s.size(); }
    int operator[](std::size_t i) const { return s[i]; }

    SignVector negated() const {
        SignVector r = *this;
        for (auto& x : r.s) x = static_cast<int8_t>(-x);
        return r;
    }

    SignVector canonical() const {
        for (auto x : s) {
            if (x > 0) return *this;
            if (x < 0) return negated();
        }
        return *this;
    }

    bool is_zero() const {
        for (auto x : s)
            if (x != 0) return false;
        return true;
    }

    std::uint32_t plus_mask() const {
        std::uint32_t m = 0;
        for (std::size_t i = 0; i < s.size(); ++i)
            if (s[i] > 0) m |= 1u << i;
        return m;
    }
    std::uint32_t minus_mask() const {
        std::uint32_t m = 0;
        for (std::size_t i = 0; i < s.size(); ++i)
            if (s[i] < 0) m |= 1u << i;
        return m;
    }
    std::uint32_t support_mask() const { return plus_mask() | minus_mask(); }
    std::uint32_t zero_mask() const {
        return ~support_mask() & ((s.size() == 32 ? 0u : (1u << s.size())) - 1u);
    }

    std::size_t support_size() const {
        std::size_t k = 0;
        for (auto x : s) k += (x != 0);
        return k;
    }

    std::string str() const {
        std::string out = "(";
        for (std::size_t i = 0; i < s.size(); ++i) {
            if (i) out += ",";
            out += s[i] > 0 ? "+" : (s[i] < 0 ? "-" : "0");
        }
        return out + ")";
    }

    bool operator==(const SignVector&) const = default;
    bool operator<(const SignVector& o) const { return s < o.s; }
};

} // namespace splitscope
