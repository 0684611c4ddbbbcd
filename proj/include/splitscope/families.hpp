#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "splitscope/errors.hpp"
#include "splitscope/point_configuration.hpp"
#include "splitscope/rational.hpp"

namespace splitscope {

// Canonical generators for the polytope families used throughout: exact
// rational coordinates only, deterministic output, labels "1".."n".
struct FamilySpec {
    enum class Kind {
        Simplex,
        CrossPolytope,
        Polygon,
        SimplexPrism,
        Cube,
        Join,
        Pyramid,
        PerturbedOctahedron,
        PrismPlusPoint,
        PentagonPaper,
    };
    Kind kind{};
    long param = 0; // dimension / vertex count / seed
    std::vector<FamilySpec> children;

    std::string str() const {
        switch (kind) {
            case Kind::Simplex: return "simplex:" + std::to_string(param);
            case Kind::CrossPolytope: return "crosspolytope:" + std::to_string(param);
            case Kind::Polygon: return "polygon:" + std::to_string(param);
            case Kind::SimplexPrism: return "simplex_prism:" + std::to_string(param);
            case Kind::Cube: return "cube:" + std::to_string(param);
            case Kind::Join: return "join(" + children[0].str() + "," + children[1].str() + ")";
            case Kind::Pyramid: return "pyramid(" + children[0].str() + ")";
            case Kind::PerturbedOctahedron:
                return "perturbed_octahedron:" + std::to_string(param);
            case Kind::PrismPlusPoint: return "prism_plus_point";
            case Kind::PentagonPaper: return "pentagon_paper";
        }
        return "?";
    }
};

namespace detail {

struct FamilyParser {
    std::string_view text;
    std::size_t pos = 0;

    [[noreturn]] void fail(const std::string& why) {
        throw UnsupportedParameter("bad family spec '" + std::string(text) + "': " + why);
    }

    bool eat(char c) {
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    std::string ident() {
        std::size_t start = pos;
        while (pos < text.size() && (std::isalnum(text[pos]) || text[pos] == '_')) ++pos;
        if (pos == start) fail("identifier expected");
        return std::string(text.substr(start, pos - start));
    }

    long number() {
        std::size_t start = pos;
        if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
        while (pos < text.size() && std::isdigit(text[pos])) ++pos;
        if (pos == start) fail("number expected");
        return std::stol(std::string(text.substr(start, pos - start)));
    }

    FamilySpec parse() {
        FamilySpec s = parse_spec();
        if (pos != text.size()) fail("trailing input");
        return s;
    }

    FamilySpec parse_spec() {
        std::string name = ident();
        FamilySpec s;
        if (name == "join") {
            s.kind = FamilySpec::Kind::Join;
            if (!eat('(')) fail("expected (");
            s.children.push_back(parse_spec());
            if (!eat(',')) fail("expected ,");
            s.children.push_back(parse_spec());
            if (!eat(')')) fail("expected )");
            return s;
        }
        if (name == "pyramid") {
            s.kind = FamilySpec::Kind::Pyramid;
            if (!eat('(')) fail("expected (");
            s.children.push_back(parse_spec());
            if (!eat(')')) fail("expected )");
            return s;
        }
        if (name == "simplex") s.kind = FamilySpec::Kind::Simplex;
        else if (name == "crosspolytope") s.kind = FamilySpec::Kind::CrossPolytope;
        else if (name == "polygon") s.kind = FamilySpec::Kind::Polygon;
        else if (name == "simplex_prism") s.kind = FamilySpec::Kind::SimplexPrism;
        else if (name == "cube") s.kind = FamilySpec::Kind::Cube;
        else if (name == "perturbed_octahedron") s.kind = FamilySpec::Kind::PerturbedOctahedron;
        else if (name == "prism_plus_point") s.kind = FamilySpec::Kind::PrismPlusPoint;
        else if (name == "pentagon_paper") s.kind = FamilySpec::Kind::PentagonPaper;
        else fail("unknown family '" + name + "'");
        if (eat(':')) s.param = number();
        return s;
    }
};

inline std::vector<std::string> numbered_labels(std::size_t n) {
    std::vector<std::string> l(n);
    for (std::size_t i = 0; i < n; ++i) l[i] = std::to_string(i + 1);
    return l;
}

inline PointConfiguration make_config(std::vector<QVector> pts, std::string name) {
    auto labels = numbered_labels(pts.size());
    return PointConfiguration::create(std::move(labels), std::move(pts), std::move(name));
}

} // namespace detail

inline FamilySpec parse_family(std::string_view text) {
    detail::FamilyParser p{text};
    return p.parse();
}

inline PointConfiguration generate(const FamilySpec& spec);

namespace detail {

inline void check_range(bool ok, const std::string& what) {
    if (!ok) throw UnsupportedParameter("unsupported parameter: " + what);
}

inline PointConfiguration gen_simplex(long d, const std::string& name) {
    check_range(d >= 1 && d <= 6, "simplex dimension " + std::to_string(d));
    std::vector<QVector> pts(std::size_t(d) + 1, QVector(std::size_t(d), Rational(0)));
    for (long i = 1; i <= d; ++i) pts[std::size_t(i)][std::size_t(i - 1)] = 1;
    return make_config(std::move(pts), name);
}

inline PointConfiguration gen_crosspolytope(long d, const std::string& name) {
    check_range(d >= 2 && d <= 6, "crosspolytope dimension " + std::to_string(d));
    std::vector<QVector> pts;
    for (int s = 0; s < 2; ++s)
        for (long i = 0; i < d; ++i) {
            QVector p(std::size_t(d), Rational(0));
            p[std::size_t(i)] = s == 0 ? 1 : -1;
            pts.push_back(std::move(p));
        }
    return make_config(std::move(pts), name);
}

// Rational points on the unit circle via t -> ((1-t^2)/(1+t^2), 2t/(1+t^2)),
// with t chosen so the angles strictly increase: convex position is exact.
inline PointConfiguration gen_polygon(long n, const std::string& name) {
    check_range(n >= 3 && n <= 16, "polygon size " + std::to_string(n));
    const long q = n / 4;    // points on the lower arc (t < 0)
    const long p = n - q;    // points on the upper arc (t >= 0)
    std::vector<Rational> ts;
    for (long i = 0; i < p; ++i) ts.push_back(Rational(i) / Rational(p - i));
    for (long j = 0; j < q; ++j) ts.push_back(Rational(-(q - j)) / Rational(j + 1));
    std::vector<QVector> pts;
    for (const Rational& t : ts) {
        Rational w = 1 + t * t;
        pts.push_back({(1 - t * t) / w, 2 * t / w});
    }
    return make_config(std::move(pts), name);
}

inline PointConfiguration gen_simplex_prism(long d, const std::string& name) {
    check_range(d >= 2 && d <= 6, "prism dimension " + std::to_string(d));
    std::vector<QVector> pts;
    for (long k = 0; k < d; ++k) {
        QVector p(std::size_t(d), Rational(0));
        p[std::size_t(k)] = 1;
        pts.push_back(std::move(p));
    }
    for (long k = 0; k < d; ++k) {
        QVector p(std::size_t(d), Rational(-1));
        p[std::size_t(k)] = 0;
        pts.push_back(std::move(p));
    }
    return make_config(std::move(pts), name);
}

inline PointConfiguration gen_cube(long d, const std::string& name) {
    check_range(d >= 1 && d <= 4, "cube dimension " + std::to_string(d));
    std::vector<QVector> pts;
    for (long v = 0; v < (1L << d); ++v) {
        QVector p(std::size_t(d), Rational(0));
        for (long j = 0; j < d; ++j) p[std::size_t(j)] = (v >> j) & 1;
        pts.push_back(std::move(p));
    }
    return make_config(std::move(pts), name);
}

inline PointConfiguration gen_join(const PointConfiguration& a, const PointConfiguration& b,
                                   const std::string& name) {
    const std::size_t da = a.dim(), db = b.dim();
    std::vector<QVector> pts;
    for (std::size_t i = 0; i < a.n(); ++i) {
        QVector p(da + db + 1, Rational(0));
        for (std::size_t j = 0; j < da; ++j) p[j] = a.point(i)[j];
        pts.push_back(std::move(p));
    }
    for (std::size_t i = 0; i < b.n(); ++i) {
        QVector p(da + db + 1, Rational(0));
        for (std::size_t j = 0; j < db; ++j) p[da + j] = b.point(i)[j];
        p[da + db] = 1;
        pts.push_back(std::move(p));
    }
    return make_config(std::move(pts), name);
}

inline PointConfiguration gen_pyramid(const PointConfiguration& base, const std::string& name) {
    const std::size_t d = base.dim();
    std::vector<QVector> pts;
    for (std::size_t i = 0; i < base.n(); ++i) {
        QVector p(d + 1, Rational(0));
        for (std::size_t j = 0; j < d; ++j) p[j] = base.point(i)[j];
        pts.push_back(std::move(p));
    }
    QVector apex(d + 1, Rational(0));
    for (std::size_t i = 0; i < base.n(); ++i)
        for (std::size_t j = 0; j < d; ++j) apex[j] += base.point(i)[j];
    for (std::size_t j = 0; j < d; ++j) apex[j] /= int(base.n());
    apex[d] = 1;
    pts.push_back(std::move(apex));
    return make_config(std::move(pts), name);
}

// +/- e_i with every vertex nudged off its coordinate hyperplanes by
// reciprocals of distinct primes: deterministic general position, which
// destroys every split.
inline PointConfiguration gen_perturbed_octahedron(long seed, const std::string& name) {
    check_range(seed >= 0, "seed " + std::to_string(seed));
    static const int primes[12] = {101, 103, 107, 109, 113, 127, 131, 137, 139, 149, 151, 157};
    PointConfiguration base = gen_crosspolytope(3, "crosspolytope:3");
    std::vector<QVector> pts;
    for (std::size_t k = 0; k < 6; ++k) {
        QVector p = base.point(k);
        std::size_t axis = k % 3;
        std::size_t t = 0;
        for (std::size_t j = 0; j < 3; ++j) {
            if (j == axis) continue;
            p[j] += Rational(1) / primes[(2 * k + t + std::size_t(seed)) % 12];
            ++t;
        }
        pts.push_back(std::move(p));
    }
    return make_config(std::move(pts), name);
}

inline PointConfiguration gen_prism_plus_point(const std::string& name) {
    std::vector<QVector> pts = {
        {1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {0, -1, -1}, {-1, 0, -1}, {-1, -1, 0}, {1, 1, -1},
    };
    return make_config(std::move(pts), name);
}

inline PointConfiguration gen_pentagon_paper(const std::string& name) {
    std::vector<QVector> pts = {{1, 0}, {0, 2}, {-1, 1}, {-1, 0}, {0, -1}};
    return make_config(std::move(pts), name);
}

} // namespace detail

inline PointConfiguration generate(const FamilySpec& spec) {
    const std::string name = spec.str();
    using K = FamilySpec::Kind;
    switch (spec.kind) {
        case K::Simplex: return detail::gen_simplex(spec.param, name);
        case K::CrossPolytope: return detail::gen_crosspolytope(spec.param, name);
        case K::Polygon: return detail::gen_polygon(spec.param, name);
        case K::SimplexPrism: return detail::gen_simplex_prism(spec.param, name);
        case K::Cube: return detail::gen_cube(spec.param, name);
        case K::Join:
            return detail::gen_join(generate(spec.children[0]), generate(spec.children[1]), name);
        case K::Pyramid: return detail::gen_pyramid(generate(spec.children[0]), name);
        case K::PerturbedOctahedron:
            return detail::gen_perturbed_octahedron(spec.param, name);
        case K::PrismPlusPoint: return detail::gen_prism_plus_point(name);
        case K::PentagonPaper: return detail::gen_pentagon_paper(name);
    }
    throw UnsupportedParameter("unknown family");
}

inline PointConfiguration generate(std::string_view family_text) {
    return generate(parse_family(family_text));
}

} // namespace splitscope
