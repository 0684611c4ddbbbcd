#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "splitscope/errors.hpp"
#include "splitscope/matrix.hpp"
#include "splitscope/oriented_matroid.hpp"
#include "splitscope/point_configuration.hpp"
#include "splitscope/rational.hpp"

namespace splitscope {

// Gale dual of a point configuration.  Rays are the rows of a kernel basis
// of the homogenized matrix, scaled to primitive integer vectors (the
// paper's unit-sphere points become rays here: every spherical statement is
// scale-invariant).  A zero ray marks a pyramid apex.
struct GaleDiagram {
    std::vector<std::string> labels;
    std::vector<ZVector> rays;
    std::size_t primal_dim = 0;

    std::size_t n() const { return rays.size(); }
    std::size_t dual_dim() const { return rays.empty() ? 0 : rays.front().size(); }

    bool ray_is_zero(std::size_t i) const {
        for (const auto& x : rays[i])
            if (x != 0) return false;
        return true;
    }

    bool proper() const {
        for (std::size_t i = 0; i < n(); ++i)
            if (ray_is_zero(i)) return false;
        return true;
    }

    std::size_t index_of(const std::string& label) const {
        for (std::size_t i = 0; i < labels.size(); ++i)
            if (labels[i] == label) return i;
        throw UnknownLabel(label);
    }

    RationalMatrix ray_matrix() const {
        RationalMatrix m(n(), dual_dim());
        for (std::size_t i = 0; i < n(); ++i)
            for (std::size_t j = 0; j < dual_dim(); ++j) m.at(i, j) = Rational(rays[i][j]);
        return m;
    }
};

inline GaleDiagram gale_dual(const PointConfiguration& config) {
    RationalMatrix k = kernel_basis(config.homogeneous());
    GaleDiagram g;
    g.labels = config.labels();
    g.primal_dim = config.dim();
    g.rays.reserve(config.n());
    for (std::size_t i = 0; i < config.n(); ++i) g.rays.push_back(primitive_vector(k.row(i)));
    return g;
}

// Circuits of the diagram are the cocircuits of the primal configuration and
// conversely.
inline std::vector<SignVector> circuits_of(const GaleDiagram& g) {
    if (g.dual_dim() == 0) return {};
    return circuits_of_rows(g.ray_matrix());
}

inline std::vector<SignVector> cocircuits_of(const GaleDiagram& g) {
    if (g.dual_dim() == 0) return {};
    return cocircuits_of_rows(g.ray_matrix());
}

// Multiplicity and antipodality structure of the ray multiset.
struct GaleStructure {
    bool proper = false;
    std::vector<std::vector<int>> coincidence_classes; // partition by equal rays
    std::vector<std::pair<int, int>> antipodal_pairs;  // i<j with ray_i = -ray_j != 0
    std::map<int, int> sibling_map;                    // both ways, for classes of size 2
    std::size_t max_multiplicity = 0;
    bool every_point_double = false;    // all classes have size exactly 2
    bool every_point_antipodal = false; // each ray's negation occurs
};

inline GaleStructure structure_profile(const GaleDiagram& g) {
    GaleStructure s;
    s.proper = g.proper();
    const std::size_t n = g.n();
    std::vector<bool> seen(n, false);
    for (std::size_t i = 0; i < n; ++i) {
        if (seen[i]) continue;
        std::vector<int> cls{int(i)};
        for (std::size_t j = i + 1; j < n; ++j)
            if (!seen[j] && g.rays[j] == g.rays[i]) {
                cls.push_back(int(j));
                seen[j] = true;
            }
        seen[i] = true;
        s.coincidence_classes.push_back(std::move(cls));
    }
    for (const auto& cls : s.coincidence_classes) {
        s.max_multiplicity = std::max(s.max_multiplicity, cls.size());
        if (cls.size() == 2) {
            s.sibling_map[cls[0]] = cls[1];
            s.sibling_map[cls[1]] = cls[0];
        }
    }
    s.every_point_double = s.proper;
    for (const auto& cls : s.coincidence_classes)
        if (cls.size() != 2) s.every_point_double = false;

    auto negate = [](const ZVector& v) {
        ZVector w = v;
        for (auto& x : w) x = -x;
        return w;
    };
    std::vector<bool> has_antipode(n, false);
    for (std::size_t i = 0; i < n; ++i) {
        if (g.ray_is_zero(i)) continue;
        ZVector neg = negate(g.rays[i]);
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i || g.rays[j] != neg) continue;
            has_antipode[i] = true;
            if (i < j) s.antipodal_pairs.emplace_back(int(i), int(j));
        }
    }
    s.every_point_antipodal = s.proper;
    for (std::size_t i = 0; i < n; ++i)
        if (!has_antipode[i]) s.every_point_antipodal = false;
    return s;
}

// Contraction minor G/ray(label): project the other rays along ray(label).
// This is the Gale diagram of the primal deletion conv(V \ {label}).
inline GaleDiagram contract(const GaleDiagram& g, const std::string& label) {
    const std::size_t v = g.index_of(label);
    if (g.ray_is_zero(v))
        throw ZeroRay("cannot contract apex '" + label + "'; delete it in the primal instead");
    const std::size_t k = g.dual_dim();

    // basis of R^k whose first vector is the contracted ray
    std::vector<QVector> basis_rows;
    QVector rv(k);
    for (std::size_t j = 0; j < k; ++j) rv[j] = Rational(g.rays[v][j]);
    basis_rows.push_back(rv);
    for (std::size_t j = 0; j < k && basis_rows.size() < k; ++j) {
        QVector e(k, Rational(0));
        e[j] = 1;
        basis_rows.push_back(e);
        if (rank(RationalMatrix::from_rows(basis_rows)) != basis_rows.size())
            basis_rows.pop_back();
    }
    RationalMatrix bt = RationalMatrix::from_rows(basis_rows).transposed(); // columns = basis

    GaleDiagram out;
    out.primal_dim = g.primal_dim;
    for (std::size_t i = 0; i < g.n(); ++i) {
        if (i == v) continue;
        QVector y(k);
        for (std::size_t j = 0; j < k; ++j) y[j] = Rational(g.rays[i][j]);
        auto c = solve(bt, y);
        if (!c) throw std::logic_error("contract: basis does not span");
        QVector proj(c->begin() + 1, c->end());
        out.labels.push_back(g.labels[i]);
        out.rays.push_back(primitive_vector(proj));
    }
    return out;
}

} // namespace splitscope
