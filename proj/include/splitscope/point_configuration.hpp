#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "splitscope/errors.hpp"
#include "splitscope/hyperplane.hpp"
#include "splitscope/matrix.hpp"
#include "splitscope/oriented_matroid.hpp"
#include "splitscope/rational.hpp"
#include "splitscope/sign_vector.hpp"

namespace splitscope {

// Labeled rational points, all of which must be vertices of their convex
// hull, spanning R^d.  The oriented-matroid data (circuits, cocircuits with
// their affine hyperplanes, edges, facets) is computed once at construction;
// instances are immutable afterwards and safe to share across threads.
class PointConfiguration {
public:
    struct Cocircuit {
        SignVector sv; // canonical
        AffineHyperplane plane;
    };
    struct Facet {
        AffineHyperplane plane;
        std::uint32_t members;
        int interior_side; // side of plane containing the off-facet vertices
    };

    static PointConfiguration create(std::vector<std::string> labels, std::vector<QVector> points,
                                     std::string name = "") {
        PointConfiguration c;
        c.labels_ = std::move(labels);
        c.points_ = std::move(points);
        c.name_ = std::move(name);
        c.validate_and_index();
        return c;
    }

    const std::string& name() const { return name_; }
    std::size_t n() const { return points_.size(); }
    std::size_t dim() const { return dim_; }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(std::size_t i) const { return labels_[i]; }
    const QVector& point(std::size_t i) const { return points_[i]; }
    const std::vector<QVector>& points() const { return points_; }
    std::uint32_t full_mask() const { return (n() == 32 ? ~0u : (1u << n()) - 1u); }

    std::size_t index_of(const std::string& label) const {
        for (std::size_t i = 0; i < labels_.size(); ++i)
            if (labels_[i] == label) return i;
        throw UnknownLabel(label);
    }

    const RationalMatrix& homogeneous() const { return homog_; }

    const std::vector<SignVector>& circuits() const { return circuits_; }
    const std::vector<Cocircuit>& cocircuits() const { return cocircuits_; }

    std::vector<SignVector> cocircuit_sign_vectors() const {
        std::vector<SignVector> out;
        out.reserve(cocircuits_.size());
        for (const auto& c : cocircuits_) out.push_back(c.sv);
        return out;
    }

    // Circuit criterion: a subset is the vertex set of a face iff no circuit
    // has its positive part inside and its negative part not inside (in
    // either orientation).
    bool is_face(std::uint32_t subset) const {
        for (const auto& c : circuit_masks_) {
            const bool pin = (c.first & ~subset) == 0;
            const bool nin = (c.second & ~subset) == 0;
            if (pin != nin) return false;
        }
        return true;
    }

    bool is_face(const std::vector<std::string>& subset) const { return is_face(mask_of(subset)); }

    std::uint32_t mask_of(const std::vector<std::string>& subset) const {
        std::uint32_t m = 0;
        for (const auto& l : subset) m |= 1u << index_of(l);
        return m;
    }

    std::vector<std::string> labels_of(std::uint32_t mask) const {
        std::vector<std::string> out;
        for (std::size_t i = 0; i < n(); ++i)
            if (mask & (1u << i)) out.push_back(labels_[i]);
        return out;
    }

    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    const std::vector<int>& neighbors(std::size_t i) const { return neighbors_[i]; }
    bool adjacent(std::size_t i, std::size_t j) const {
        return (adjacency_[i] >> j) & 1u;
    }

    const std::vector<Facet>& facets() const { return facets_; }

    const std::vector<std::pair<std::uint32_t, std::uint32_t>>& circuit_masks() const {
        return circuit_masks_;
    }

private:
    void validate_and_index() {
        const std::size_t m = points_.size();
        if (m == 0) throw InvalidConfiguration("empty configuration");
        if (m > 31) throw InvalidConfiguration("more than 31 points is out of scope");
        if (labels_.size() != m) throw InvalidConfiguration("labels/points length mismatch");
        {
            std::set<std::string> unique(labels_.begin(), labels_.end());
            if (unique.size() != m) throw InvalidConfiguration("duplicate labels");
        }
        dim_ = points_.front().size();
        if (dim_ == 0) throw InvalidConfiguration("points must have positive dimension");
        for (const auto& p : points_)
            if (p.size() != dim_) throw InvalidConfiguration("inconsistent point dimensions");
        if (m < dim_ + 1) throw InvalidConfiguration("need at least d+1 points");

        homog_ = RationalMatrix(m, dim_ + 1);
        for (std::size_t i = 0; i < m; ++i) {
            homog_.at(i, 0) = 1;
            for (std::size_t j = 0; j < dim_; ++j) homog_.at(i, j + 1) = points_[i][j];
        }
        if (rank(homog_) != dim_ + 1)
            throw InvalidConfiguration("configuration is not full-dimensional");

        circuits_ = circuits_of_rows(homog_);
        circuit_masks_.clear();
        for (const auto& c : circuits_) circuit_masks_.emplace_back(c.plus_mask(), c.minus_mask());

        for (std::size_t i = 0; i < m; ++i)
            if (!is_face(1u << i))
                throw InvalidConfiguration("point '" + labels_[i] + "' is not a vertex of the hull");

        for (const auto& g : cocircuits_of_rows_geom(homog_)) {
            QVector normal(dim_);
            for (std::size_t j = 0; j < dim_; ++j) normal[j] = g.functional[j + 1];
            cocircuits_.push_back({g.sv, AffineHyperplane::canonical(normal, -g.functional[0])});
        }

        adjacency_.assign(m, 0);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = i + 1; j < m; ++j)
                if (is_face((1u << i) | (1u << j))) {
                    edges_.emplace_back(int(i), int(j));
                    adjacency_[i] |= 1u << j;
                    adjacency_[j] |= 1u << i;
                }
        neighbors_.assign(m, {});
        for (auto [i, j] : edges_) {
            neighbors_[i].push_back(j);
            neighbors_[j].push_back(i);
        }

        for (const auto& c : cocircuits_) {
            // canonical cocircuits with empty negative part are the facets
            if (c.sv.minus_mask() != 0) continue;
            int side = 0;
            for (std::size_t i = 0; i < m && side == 0; ++i)
                if (c.sv[i] != 0) side = c.plane.side(points_[i]);
            facets_.push_back({c.plane, c.sv.zero_mask(), side});
        }
    }

    std::vector<std::string> labels_;
    std::vector<QVector> points_;
    std::string name_;
    std::size_t dim_ = 0;
    RationalMatrix homog_;
    std::vector<SignVector> circuits_;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> circuit_masks_;
    std::vector<Cocircuit> cocircuits_;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::uint32_t> adjacency_;
    std::vector<std::vector<int>> neighbors_;
    std::vector<Facet> facets_;
};

// Sub-configuration on a label subset, re-coordinatized in an exact basis of
// its affine hull (so it is full-dimensional again).
inline PointConfiguration restrict_to_affine_hull(const PointConfiguration& config,
                                                  std::uint32_t subset, std::string name = "") {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < config.n(); ++i)
        if (subset & (1u << i)) idx.push_back(i);
    if (idx.empty()) throw InvalidConfiguration("empty subset");
    const QVector& origin = config.point(idx.front());
    const std::size_t d = config.dim();

    // greedy affine basis
    std::vector<QVector> basis;
    std::vector<QVector> span_rows;
    for (std::size_t t = 1; t < idx.size(); ++t) {
        QVector diff(d);
        for (std::size_t j = 0; j < d; ++j) diff[j] = config.point(idx[t])[j] - origin[j];
        span_rows.push_back(diff);
        if (rank(RationalMatrix::from_rows(span_rows)) == basis.size() + 1)
            basis.push_back(diff);
        else
            span_rows.pop_back();
    }
    RationalMatrix bt(d, basis.size());
    for (std::size_t j = 0; j < basis.size(); ++j)
        for (std::size_t i = 0; i < d; ++i) bt.at(i, j) = basis[j][i];

    std::vector<QVector> coords;
    std::vector<std::string> labels;
    for (std::size_t t : idx) {
        QVector rhs(d);
        for (std::size_t j = 0; j < d; ++j) rhs[j] = config.point(t)[j] - origin[j];
        auto c = solve(bt, rhs);
        if (!c) throw std::logic_error("point outside its own affine hull");
        coords.push_back(*c);
        labels.push_back(config.label(t));
    }
    return PointConfiguration::create(std::move(labels), std::move(coords), std::move(name));
}

// conv(V \ {label}); re-coordinatized only if deleting the vertex drops the
// dimension (that happens exactly when it is a pyramid apex).
inline PointConfiguration delete_vertex(const PointConfiguration& config,
                                        const std::string& label) {
    const std::size_t v = config.index_of(label);
    std::uint32_t rest = config.full_mask() & ~(1u << v);
    std::vector<QVector> pts;
    std::vector<std::string> labels;
    RationalMatrix h(config.n() - 1, config.dim() + 1);
    std::size_t r = 0;
    for (std::size_t i = 0; i < config.n(); ++i) {
        if (i == v) continue;
        pts.push_back(config.point(i));
        labels.push_back(config.label(i));
        h.at(r, 0) = 1;
        for (std::size_t j = 0; j < config.dim(); ++j) h.at(r, j + 1) = config.point(i)[j];
        ++r;
    }
    if (rank(h) == config.dim() + 1)
        return PointConfiguration::create(std::move(labels), std::move(pts),
                                          config.name() + "/del-" + label);
    return restrict_to_affine_hull(config, rest, config.name() + "/del-" + label);
}

// Label bijection under which the canonical cocircuit sets coincide, if one
// exists (backtracking pruned by per-label sign profiles and adjacency).
inline std::optional<std::vector<int>> oriented_matroid_equal(const PointConfiguration& a,
                                                              const PointConfiguration& b) {
    const std::size_t m = a.n();
    if (m != b.n() || a.dim() != b.dim()) return std::nullopt;
    auto ca = a.cocircuit_sign_vectors();
    auto cb = b.cocircuit_sign_vectors();
    if (ca.size() != cb.size()) return std::nullopt;
    if (a.circuits().size() != b.circuits().size()) return std::nullopt;

    // per-label profile, invariant under relabeling and per-cocircuit negation
    using Key = std::tuple<int, std::size_t, std::size_t, std::size_t>;
    auto profile = [m](const std::vector<SignVector>& cs) {
        std::vector<std::vector<Key>> prof(m);
        for (const auto& c : cs) {
            std::size_t np = 0, nm = 0, nz = 0;
            for (std::size_t i = 0; i < m; ++i) {
                if (c[i] > 0) ++np;
                else if (c[i] < 0) ++nm;
                else ++nz;
            }
            for (std::size_t i = 0; i < m; ++i) {
                if (c[i] == 0)
                    prof[i].emplace_back(0, nz, std::min(np, nm), std::max(np, nm));
                else if (c[i] > 0)
                    prof[i].emplace_back(1, nz, np, nm);
                else
                    prof[i].emplace_back(1, nz, nm, np);
            }
        }
        for (auto& p : prof) std::sort(p.begin(), p.end());
        return prof;
    };
    auto pa = profile(ca), pb = profile(cb);

    std::vector<std::vector<int>> candidates(m);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j)
            if (pa[i] == pb[j]) candidates[i].push_back(int(j));
        if (candidates[i].empty()) return std::nullopt;
    }

    std::set<SignVector> bset(cb.begin(), cb.end());
    std::vector<int> perm(m, -1);
    std::vector<bool> used(m, false);

    auto full_check = [&]() {
        for (const auto& c : ca) {
            SignVector img(m);
            for (std::size_t i = 0; i < m; ++i) img.s[perm[i]] = c.s[i];
            if (!bset.count(img.canonical())) return false;
        }
        return true;
    };

    std::function<bool(std::size_t)> dfs = [&](std::size_t i) -> bool {
        if (i == m) return full_check();
        for (int j : candidates[i]) {
            if (used[j]) continue;
            bool ok = true;
            for (std::size_t k = 0; k < i && ok; ++k)
                if (a.adjacent(k, i) != b.adjacent(std::size_t(perm[k]), std::size_t(j))) ok = false;
            if (!ok) continue;
            perm[i] = j;
            used[j] = true;
            if (dfs(i + 1)) return true;
            used[j] = false;
            perm[i] = -1;
        }
        return false;
    };
    if (!dfs(0)) return std::nullopt;
    return perm;
}

} // namespace splitscope
