#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>
#include <vector>

#include "splitscope/errors.hpp"

namespace splitscope {

// All arithmetic in this library is exact.  Rationals are kept canonical
// (coprime, positive denominator) by the backend.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

using QVector = std::vector<Rational>;
using ZVector = std::vector<Integer>;

inline int sign_of(const Rational& x) { return x.sign(); }
inline int sign_of(const Integer& x) { return x.sign(); }

inline Integer numerator_of(const Rational& x) { return boost::multiprecision::numerator(x); }
inline Integer denominator_of(const Rational& x) { return boost::multiprecision::denominator(x); }

inline std::string to_string(const Integer& x) { return x.str(); }

// Serialized as "p/q", or just "p" when q = 1.
inline std::string to_string(const Rational& x) {
    Integer q = denominator_of(x);
    if (q == 1) return numerator_of(x).str();
    return numerator_of(x).str() + "/" + q.str();
}

inline Rational parse_rational(std::string_view text) {
    auto bad = [&] { throw InputError("invalid rational: '" + std::string(text) + "'"); };
    if (text.empty()) bad();
    std::size_t slash = text.find('/');
    try {
        if (slash == std::string_view::npos) return Rational(Integer(std::string(text)));
        Integer p{std::string(text.substr(0, slash))};
        Integer q{std::string(text.substr(slash + 1))};
        if (q == 0) bad();
        return Rational(p) / Rational(q);
    } catch (const std::exception&) {
        bad();
    }
    return Rational(0); // unreachable
}

inline Rational dot(const QVector& a, const QVector& b) {
    Rational r = 0;
    for (std::size_t i = 0; i < a.size(); ++i) r += a[i] * b[i];
    return r;
}

inline bool is_zero(const QVector& v) {
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

inline Integer gcd_of(const Integer& a, const Integer& b) {
    return boost::multiprecision::gcd(a, b);
}

inline Integer lcm_of(const Integer& a, const Integer& b) {
    return boost::multiprecision::lcm(a, b);
}

// Positive scaling of a rational vector to coprime integers.  The zero
// vector maps to the zero vector.
inline ZVector primitive_vector(const QVector& v) {
    Integer l = 1;
    for (const auto& x : v) l = lcm_of(l, denominator_of(x));
    ZVector w(v.size());
    Integer g = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        w[i] = numerator_of(v[i]) * (l / denominator_of(v[i]));
        g = gcd_of(g, w[i]);
    }
    if (g > 1)
        for (auto& x : w) x /= g;
    return w;
}

} // namespace splitscope
