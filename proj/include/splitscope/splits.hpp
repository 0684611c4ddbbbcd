#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "splitscope/cut_complex.hpp"
#include "splitscope/errors.hpp"
#include "splitscope/gale.hpp"
#include "splitscope/lp.hpp"
#include "splitscope/point_configuration.hpp"

namespace splitscope {

// A split: a subdivision with exactly two maximal cells.  Its hyperplane is
// spanned by vertices, leaves vertices on both open sides, and cuts no edge.
// The two cells share the vertices on the hyperplane (the cocircuit's
// cosupport).
struct Split {
    AffineHyperplane hyperplane;
    SignVector cocircuit; // canonical
    std::uint32_t cell_plus = 0;
    std::uint32_t cell_minus = 0;

    bool operator==(const Split& o) const { return cocircuit == o.cocircuit; }
    bool operator<(const Split& o) const {
        if (!(hyperplane == o.hyperplane)) return hyperplane < o.hyperplane;
        return cocircuit < o.cocircuit;
    }
};

namespace detail {

inline std::optional<Split> split_from_cocircuit(const PointConfiguration& config,
                                                 const PointConfiguration::Cocircuit& c) {
    const std::uint32_t pm = c.sv.plus_mask(), mm = c.sv.minus_mask();
    if (pm == 0 || mm == 0) return std::nullopt; // supporting hyperplane, not a split
    for (auto [i, j] : config.edges())
        if (c.sv[std::size_t(i)] * c.sv[std::size_t(j)] < 0) return std::nullopt; // cuts an edge
    Split s;
    s.hyperplane = c.plane;
    s.cocircuit = c.sv;
    s.cell_plus = config.full_mask() & ~mm;
    s.cell_minus = config.full_mask() & ~pm;
    return s;
}

inline void require_split(const PointConfiguration& config, const Split& s) {
    for (const auto& c : config.cocircuits()) {
        if (!(c.sv == s.cocircuit)) continue;
        auto rebuilt = split_from_cocircuit(config, c);
        if (rebuilt && rebuilt->cell_plus == s.cell_plus && rebuilt->cell_minus == s.cell_minus &&
            rebuilt->hyperplane == s.hyperplane)
            return;
        break;
    }
    throw NotASplit("sign vector " + s.cocircuit.str() + " is not a split of " + config.name());
}

} // namespace detail

// All splits, in canonical order.  Both cells are automatically
// full-dimensional: each contains the cosupport (spanning the hyperplane)
// plus a vertex strictly off it.
inline std::vector<Split> enumerate_splits(const PointConfiguration& config) {
    std::vector<Split> out;
    for (const auto& c : config.cocircuits())
        if (auto s = detail::split_from_cocircuit(config, c)) {
            // full-dimensionality sanity check on both cells
            for (std::uint32_t cell : {s->cell_plus, s->cell_minus}) {
                std::vector<QVector> rows;
                for (std::size_t i = 0; i < config.n(); ++i)
                    if (cell & (1u << i)) rows.push_back(config.homogeneous().row(i));
                if (rank(RationalMatrix::from_rows(rows)) != config.dim() + 1)
                    throw std::logic_error("split cell is not full-dimensional");
            }
            out.push_back(std::move(*s));
        }
    std::sort(out.begin(), out.end());
    return out;
}

// The split separating vertex v alone from the rest, if its neighbors lie on
// a common hyperplane that yields one.
inline std::optional<Split> vertex_split(const PointConfiguration& config,
                                         const std::string& label) {
    const std::size_t v = config.index_of(label);
    const auto& nb = config.neighbors(v);
    std::vector<QVector> pts;
    for (int i : nb) pts.push_back(config.point(std::size_t(i)));
    AffineHyperplane h;
    try {
        h = hyperplane_through(pts);
    } catch (const DegenerateSpan&) {
        return std::nullopt; // neighbors affinely span R^d
    }
    int sv_v = h.side(config.point(v));
    if (sv_v == 0) throw std::logic_error("vertex lies on the span of its neighbors");
    SignVector sv(config.n());
    bool has_far = false;
    for (std::size_t i = 0; i < config.n(); ++i) {
        int s = h.side(config.point(i)) * sv_v; // orient v positive
        if (i != v && s > 0) return std::nullopt; // hyperplane does not isolate v
        if (s < 0) has_far = true;
        sv.s[i] = static_cast<int8_t>(s);
    }
    if (!has_far) return std::nullopt; // apex of a pyramid: nothing on the far side
    SignVector canon = sv.canonical();
    for (const auto& c : config.cocircuits())
        if (c.sv == canon) return detail::split_from_cocircuit(config, c);
    throw std::logic_error("vertex split cocircuit not found");
}

// Compatibility: the split hyperplanes do not meet in the interior.  Decided
// combinatorially (the interior intersection, if any, is generated by shared
// wall vertices and by circuits stretching between the two walls; it misses
// the interior iff one facet contains all generators) and cross-checked by
// exact Fourier-Motzkin feasibility of {x in H1 and H2, x strictly inside}.
// The two routes must agree.
inline bool compatible(const PointConfiguration& config, const Split& s1, const Split& s2) {
    detail::require_split(config, s1);
    detail::require_split(config, s2);

    const std::uint32_t z1 = s1.cocircuit.zero_mask(), z2 = s2.cocircuit.zero_mask();
    const std::uint32_t shared = z1 & z2;
    std::vector<std::uint32_t> stretchers;
    for (const auto& [pm, mm] : config.circuit_masks()) {
        if (((pm & ~z1) == 0 && (mm & ~z2) == 0) || ((pm & ~z2) == 0 && (mm & ~z1) == 0))
            stretchers.push_back(pm | mm);
    }
    bool combinatorial;
    if (shared == 0 && stretchers.empty()) {
        combinatorial = true; // the walls do not even meet
    } else {
        combinatorial = false;
        for (const auto& f : config.facets()) {
            if ((shared & ~f.members) != 0) continue;
            bool all = true;
            for (auto sup : stretchers)
                if ((sup & ~f.members) != 0) {
                    all = false;
                    break;
                }
            if (all) {
                combinatorial = true;
                break;
            }
        }
    }

    // geometric route over (x, t), t the homogenizing coordinate
    const std::size_t d = config.dim();
    std::vector<QVector> strict, eqs;
    for (const auto& f : config.facets()) {
        QVector row(d + 1);
        for (std::size_t j = 0; j < d; ++j) row[j] = f.interior_side * f.plane.normal[j];
        row[d] = -Rational(f.interior_side) * f.plane.offset;
        strict.push_back(std::move(row));
    }
    QVector t(d + 1, Rational(0));
    t[d] = 1;
    strict.push_back(std::move(t));
    for (const Split* s : {&s1, &s2}) {
        QVector row(d + 1);
        for (std::size_t j = 0; j < d; ++j) row[j] = s->hyperplane.normal[j];
        row[d] = -s->hyperplane.offset;
        eqs.push_back(std::move(row));
    }
    bool geometric = !lp::fm_strict_feasible(strict, eqs, d + 1);

    if (combinatorial != geometric)
        throw std::logic_error("compatibility criteria disagree on " + s1.cocircuit.str() +
                               " vs " + s2.cocircuit.str());
    return combinatorial;
}

// Weak compatibility of a set of splits: their common refinement exists
// without new vertices, i.e. cutting P by all hyperplanes introduces no new
// cell vertex.
inline bool weakly_compatible(const PointConfiguration& config, const std::vector<Split>& splits) {
    std::vector<AffineHyperplane> planes;
    for (const auto& s : splits) {
        detail::require_split(config, s);
        planes.push_back(s.hyperplane);
    }
    return cut_complex(config, planes).all_vertices_original;
}

struct SplitComplexOptions {
    std::size_t max_splits = 20;
    std::size_t max_weak_card = 12;
};

// The split complex is the flag complex of the compatibility graph; the weak
// split complex is realized by its faces: all jointly refinable subsets (up
// to the configured cardinality).
struct SplitComplexReport {
    std::vector<Split> splits;
    std::vector<std::pair<int, int>> compatibility_edges;
    std::vector<std::vector<int>> weak_faces; // sorted index sets, by (size, lex)
    std::size_t max_weak_card_used = 0;
};

inline SplitComplexReport split_complexes(const PointConfiguration& config,
                                          const SplitComplexOptions& opts = {}) {
    SplitComplexReport rep;
    rep.splits = enumerate_splits(config);
    if (rep.splits.size() > opts.max_splits)
        throw BudgetExceeded("split count " + std::to_string(rep.splits.size()) +
                             " exceeds bound " + std::to_string(opts.max_splits));
    const std::size_t m = rep.splits.size();
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j)
            if (compatible(config, rep.splits[i], rep.splits[j]))
                rep.compatibility_edges.emplace_back(int(i), int(j));

    // level-wise enumeration; weak faces are closed under taking subsets
    std::vector<std::vector<int>> level;
    for (std::size_t i = 0; i < m; ++i) {
        if (weakly_compatible(config, {rep.splits[i]})) level.push_back({int(i)});
    }
    rep.weak_faces = level;
    std::set<std::vector<int>> known(level.begin(), level.end());
    std::size_t card = 1;
    while (!level.empty() && card < opts.max_weak_card) {
        ++card;
        std::vector<std::vector<int>> next;
        for (const auto& face : level) {
            for (int add = face.back() + 1; add < int(m); ++add) {
                std::vector<int> cand = face;
                cand.push_back(add);
                bool subsets_ok = true;
                for (std::size_t drop = 0; drop + 1 < cand.size() && subsets_ok; ++drop) {
                    std::vector<int> sub = cand;
                    sub.erase(sub.begin() + long(drop));
                    subsets_ok = known.count(sub) > 0;
                }
                if (!subsets_ok) continue;
                std::vector<Split> ss;
                for (int i : cand) ss.push_back(rep.splits[std::size_t(i)]);
                if (weakly_compatible(config, ss)) next.push_back(cand);
            }
        }
        known.insert(next.begin(), next.end());
        rep.weak_faces.insert(rep.weak_faces.end(), next.begin(), next.end());
        level = std::move(next);
    }
    rep.max_weak_card_used = card;
    return rep;
}

namespace detail {

// All minimal supports T with x in pos(rays of T), as masks.  A minimal
// support consists of linearly independent rays carrying x with strictly
// positive (hence unique) coefficients, so supports of size up to dual_dim
// suffice and no found support contains another.
inline std::vector<std::uint32_t> minimal_positive_supports(const GaleDiagram& g,
                                                            const QVector& x) {
    const std::size_t k = g.dual_dim();
    std::vector<std::uint32_t> found;
    for (std::size_t size = 1; size <= k; ++size) {
        for_each_subset(g.n(), size, [&](const std::vector<std::size_t>& idx) {
            RationalMatrix cols(k, size);
            for (std::size_t j = 0; j < size; ++j)
                for (std::size_t t = 0; t < k; ++t) cols.at(t, j) = Rational(g.rays[idx[j]][t]);
            if (rank(cols) != size) return;
            auto coeff = solve(cols, x);
            if (!coeff) return;
            for (const auto& v : *coeff)
                if (v <= 0) return;
            std::uint32_t m = 0;
            for (auto i : idx) m |= 1u << i;
            found.push_back(m);
        });
    }
    return found;
}

} // namespace detail

// Split detection on the Gale side (the dual route to enumerate_splits).  A
// mixed circuit C of the diagram yields the ray x carried by both of its
// sides; x is dual to a coarsest subdivision whose maximal cells are the
// complements of the minimal supports positively spanning x.  That
// subdivision is a split with cocircuit C exactly when those minimal
// supports are C+ and C- and nothing else (this also forces C to be the
// unique circuit producing the ray).
inline std::vector<SignVector> splits_via_gale(const GaleDiagram& g) {
    if (g.dual_dim() == 0) return {};
    if (!g.proper()) throw ImproperDiagram("Gale diagram has a zero ray");
    const std::size_t k = g.dual_dim();
    auto circuits = circuits_of(g);

    std::vector<SignVector> out;
    for (const auto& c : circuits) {
        if (c.plus_mask() == 0 || c.minus_mask() == 0) continue; // positive circuit: a facet

        std::vector<std::size_t> supp;
        for (std::size_t i = 0; i < g.n(); ++i)
            if (c[i] != 0) supp.push_back(i);
        RationalMatrix sub(supp.size(), k);
        for (std::size_t i = 0; i < supp.size(); ++i)
            for (std::size_t j = 0; j < k; ++j) sub.at(i, j) = Rational(g.rays[supp[i]][j]);
        RationalMatrix dep = null_space(sub.transposed());
        if (dep.cols != 1) throw std::logic_error("circuit without unique dependence");
        int flip = sign_of(dep.at(0, 0)) == c[supp[0]] ? 1 : -1;

        QVector x(k, Rational(0));
        for (std::size_t i = 0; i < supp.size(); ++i) {
            Rational coeff = dep.at(i, 0) * flip;
            if (coeff > 0)
                for (std::size_t j = 0; j < k; ++j) x[j] += coeff * Rational(g.rays[supp[i]][j]);
        }
        if (is_zero(x)) continue; // the two cones meet only in the origin

        auto supports = detail::minimal_positive_supports(g, x);
        if (supports.size() != 2) continue;
        std::uint32_t a = supports[0], b = supports[1];
        if ((a == c.plus_mask() && b == c.minus_mask()) ||
            (a == c.minus_mask() && b == c.plus_mask()))
            out.push_back(c);
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace splitscope
