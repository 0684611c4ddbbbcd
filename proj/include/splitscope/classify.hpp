#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "splitscope/errors.hpp"
#include "splitscope/families.hpp"
#include "splitscope/gale.hpp"
#include "splitscope/point_configuration.hpp"
#include "splitscope/splits.hpp"
#include "splitscope/triangulation.hpp"

namespace splitscope {

// Recognizer for totally splittable polytopes: decompose into join factors
// and identify each factor as a simplex, polygon, regular crosspolytope, or
// prism over a simplex (in the oriented-matroid sense), or reject with a
// witness.

enum class FactorKind { Simplex, Polygon, CrossPolytope, SimplexPrism };

inline std::string to_string(FactorKind k) {
    switch (k) {
        case FactorKind::Simplex: return "Simplex";
        case FactorKind::Polygon: return "Polygon";
        case FactorKind::CrossPolytope: return "CrossPolytope";
        case FactorKind::SimplexPrism: return "SimplexPrism";
    }
    return "?";
}

struct Factor {
    FactorKind kind{};
    std::size_t parameter = 0;             // dimension, or vertex count for polygons
    std::vector<std::string> labels;       // original labels of the factor
    std::map<std::string, std::string> om_bijection; // factor label -> canonical model label
};

struct ClassificationResult {
    bool totally_splittable = false;
    std::vector<Factor> factors; // meaningful when totally splittable
    std::string witness_kind;    // empty when totally splittable
    std::vector<std::string> witness_labels;
    std::optional<Triangulation> witness_triangulation;
    bool witness_structural_only = false; // true if the brute-force budget was exceeded
};

// Apexes are the labels with zero Gale rays (each is a pyramid apex, i.e. a
// 0-simplex join factor); the core diagram keeps the other rays unchanged.
inline std::pair<std::set<std::string>, GaleDiagram> strip_apexes(const GaleDiagram& g) {
    std::set<std::string> apexes;
    GaleDiagram core;
    core.primal_dim = g.primal_dim;
    for (std::size_t i = 0; i < g.n(); ++i) {
        if (g.ray_is_zero(i)) {
            apexes.insert(g.labels[i]);
        } else {
            core.labels.push_back(g.labels[i]);
            core.rays.push_back(g.rays[i]);
        }
    }
    core.primal_dim = g.primal_dim - apexes.size();
    return {std::move(apexes), std::move(core)};
}

struct JoinDecomposition {
    std::vector<std::vector<std::string>> parts; // finest partition into join factors
    bool rank_certified = false; // homogenized ranks add up across the parts
};

// Finest join decomposition.  P is a join along a vertex partition exactly
// when the homogenized spans of the parts are independent, so the finest
// partition consists of the connected components of the circuit hypergraph
// (labels in no circuit are coloops = pyramid apexes and stay singletons).
// Vertex-split compatibility components refine this partition; they can be
// strictly finer on quadrangle-shaped factors, which is why the components
// here are taken from the circuits.
inline JoinDecomposition join_decompose(const PointConfiguration& config) {
    const std::size_t n = config.n();
    std::vector<std::size_t> parent(n);
    for (std::size_t i = 0; i < n; ++i) parent[i] = i;
    std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& [pm, mm] : config.circuit_masks()) {
        std::uint32_t sup = pm | mm;
        std::size_t first = std::size_t(std::countr_zero(sup));
        for (std::size_t i = first + 1; i < n; ++i)
            if (sup & (1u << i)) parent[find(i)] = find(first);
    }
    std::map<std::size_t, std::vector<std::string>> comp;
    for (std::size_t i = 0; i < n; ++i) comp[find(i)].push_back(config.label(i));

    JoinDecomposition out;
    for (auto& [root, labels] : comp) out.parts.push_back(std::move(labels));
    std::sort(out.parts.begin(), out.parts.end(),
              [&](const auto& a, const auto& b) {
                  return config.index_of(a.front()) < config.index_of(b.front());
              });

    std::size_t rank_sum = 0;
    for (const auto& part : out.parts) {
        std::vector<QVector> rows;
        for (const auto& l : part) rows.push_back(config.homogeneous().row(config.index_of(l)));
        rank_sum += rank(RationalMatrix::from_rows(rows));
    }
    out.rank_certified = rank_sum == config.dim() + 1;
    return out;
}

namespace detail {

inline std::map<std::string, std::string> bijection_to_map(const PointConfiguration& a,
                                                           const PointConfiguration& b,
                                                           const std::vector<int>& perm) {
    std::map<std::string, std::string> m;
    for (std::size_t i = 0; i < a.n(); ++i) m[a.label(i)] = b.label(std::size_t(perm[i]));
    return m;
}

// Exact solution set of the intersection of all vertex-split hyperplanes;
// empty optional when inconsistent.
inline std::optional<QVector> perp_intersection_point(const PointConfiguration& config,
                                                      const std::vector<Split>& vsplits,
                                                      bool* unique = nullptr) {
    std::vector<QVector> rows;
    QVector rhs;
    for (const auto& s : vsplits) {
        rows.push_back(s.hyperplane.normal);
        rhs.push_back(s.hyperplane.offset);
    }
    RationalMatrix a = RationalMatrix::from_rows(rows);
    auto x = solve(a, rhs);
    if (unique) *unique = x && null_space(a).cols == 0;
    return x;
}

} // namespace detail

struct PerpIntersection {
    bool nonempty = false;
    bool unique = false;   // a single point
    QVector point;         // valid when nonempty and unique
};

// Exact intersection of the vertex-split hyperplanes v-perp over all
// vertices.  Nonempty on a proper totally splittable polytope iff it is a
// regular crosspolytope.
inline PerpIntersection perp_intersection(const PointConfiguration& config) {
    std::vector<Split> vsplits;
    for (const auto& l : config.labels()) {
        auto s = vertex_split(config, l);
        if (!s) throw MissingVertexSplit(l);
        vsplits.push_back(std::move(*s));
    }
    PerpIntersection out;
    bool unique = false;
    auto x = detail::perp_intersection_point(config, vsplits, &unique);
    out.nonempty = x.has_value();
    out.unique = unique;
    if (x) out.point = *x;
    return out;
}

// Decision ladder for a proper join-indecomposable configuration in which
// every vertex admits a vertex split.  Returns the recognized factor kind
// with its certificate, or nothing.
inline std::optional<Factor> recognize_factor(const PointConfiguration& config) {
    const std::size_t n = config.n(), d = config.dim();
    Factor f;
    f.labels = config.labels();
    if (n == d + 1) {
        f.kind = FactorKind::Simplex;
        f.parameter = d;
        return f;
    }
    if (d == 1) {
        f.kind = FactorKind::Simplex;
        f.parameter = 1;
        return f;
    }
    if (d == 2) {
        // any configuration in convex position (validation guarantees it)
        f.kind = FactorKind::Polygon;
        f.parameter = n;
        return f;
    }

    std::vector<Split> vsplits;
    for (const auto& l : config.labels()) {
        auto s = vertex_split(config, l);
        if (!s) return std::nullopt; // precondition violated; caller rejects earlier
        vsplits.push_back(std::move(*s));
    }

    // crosspolytope: the split hyperplanes meet
    if (detail::perp_intersection_point(config, vsplits).has_value()) {
        if (n != 2 * d) return std::nullopt;
        auto model = generate("crosspolytope:" + std::to_string(d));
        auto bij = oriented_matroid_equal(config, model);
        if (!bij) return std::nullopt;
        f.kind = FactorKind::CrossPolytope;
        f.parameter = d;
        f.om_bijection = detail::bijection_to_map(config, model, *bij);
        return f;
    }

    // prism over a simplex: fully antipodal Gale diagram
    auto st = structure_profile(gale_dual(config));
    if (st.every_point_antipodal && n == 2 * d) {
        auto model = generate("simplex_prism:" + std::to_string(d));
        auto bij = oriented_matroid_equal(config, model);
        if (!bij) return std::nullopt;
        f.kind = FactorKind::SimplexPrism;
        f.parameter = d;
        f.om_bijection = detail::bijection_to_map(config, model, *bij);
        return f;
    }
    return std::nullopt;
}

inline ClassificationResult classify(const PointConfiguration& config,
                                     const TriangulationOptions& brute_opts = {}) {
    ClassificationResult res;

    auto reject = [&](std::string kind, std::vector<std::string> labels) {
        res.totally_splittable = false;
        res.factors.clear();
        res.witness_kind = std::move(kind);
        res.witness_labels = std::move(labels);
        try {
            auto rep = is_totally_splittable_bruteforce(config, brute_opts);
            if (rep.witness) res.witness_triangulation = rep.witness;
            res.witness_structural_only = false;
        } catch (const BudgetExceeded&) {
            res.witness_structural_only = true;
        }
        return res;
    };

    auto decomposition = join_decompose(config);
    if (!decomposition.rank_certified)
        throw std::logic_error("join decomposition failed rank certification");

    // coloops (labels in no circuit) are the apexes; together they form one
    // simplex joined onto everything else
    std::vector<std::string> apex_labels;
    std::vector<const std::vector<std::string>*> nontrivial;
    std::uint32_t circuit_support = 0;
    for (const auto& [pm, mm] : config.circuit_masks()) circuit_support |= pm | mm;
    for (const auto& part : decomposition.parts) {
        std::size_t i = config.index_of(part.front());
        if (part.size() == 1 && !(circuit_support & (1u << i)))
            apex_labels.push_back(part.front());
        else
            nontrivial.push_back(&part);
    }

    res.totally_splittable = true;
    if (!apex_labels.empty()) {
        Factor f;
        f.kind = FactorKind::Simplex;
        f.parameter = apex_labels.size() - 1;
        f.labels = apex_labels;
        res.factors.push_back(std::move(f));
    }

    for (const auto* partp : nontrivial) {
        const auto& part = *partp;
        std::uint32_t mask = config.mask_of(part);
        auto sub = restrict_to_affine_hull(config, mask, config.name() + "/factor");

        // Every vertex of a proper totally splittable polytope admits a
        // vertex split; factors of the decomposition are proper.
        for (const auto& l : sub.labels())
            if (sub.dim() >= 2 && !vertex_split(sub, l).has_value())
                return reject("missing-vertex-split", {l});

        // a repeated Gale ray of multiplicity three or more contradicts the
        // uniqueness of split circuits on a non-join
        if (sub.dim() >= 3) {
            auto st = structure_profile(gale_dual(sub));
            if (st.max_multiplicity >= 3)
                return reject("gale-multiplicity", part);
        }

        auto factor = recognize_factor(sub);
        if (!factor) return reject("unrecognized-factor", part);
        res.factors.push_back(std::move(*factor));
    }

    // deterministic order: by smallest contained label
    std::sort(res.factors.begin(), res.factors.end(), [&](const Factor& a, const Factor& b) {
        return config.index_of(a.labels.front()) < config.index_of(b.labels.front());
    });
    return res;
}

} // namespace splitscope
