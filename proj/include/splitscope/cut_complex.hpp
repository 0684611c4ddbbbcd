#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "splitscope/hyperplane.hpp"
#include "splitscope/lp.hpp"
#include "splitscope/point_configuration.hpp"

namespace splitscope {

// One cell of the arrangement of cutting hyperplanes inside the polytope:
// the closure of a full-dimensional region with a fixed strict sign per cut.
struct CutCell {
    std::vector<std::pair<AffineHyperplane, int>> constraints; // side*(n.x - o) >= 0
    std::vector<QVector> vertices;                             // exact, sorted
    std::optional<std::uint32_t> vertex_labels; // set iff all vertices are configuration points
};

struct CutComplex {
    std::vector<CutCell> cells;
    bool all_vertices_original = true;
};

namespace detail {

inline bool region_has_interior(const std::vector<std::pair<AffineHyperplane, int>>& cons,
                                std::size_t dim) {
    lp::System sys;
    sys.dim = dim + 1; // homogenizing coordinate t last
    for (const auto& [h, side] : cons) {
        QVector row(dim + 1);
        for (std::size_t j = 0; j < dim; ++j) row[j] = side * h.normal[j];
        row[dim] = -Rational(side) * h.offset;
        sys.strict.push_back(std::move(row));
    }
    QVector t(dim + 1, Rational(0));
    t[dim] = 1;
    sys.strict.push_back(std::move(t));
    return lp::feasible(sys);
}

} // namespace detail

// Cut the polytope by the given hyperplanes; cells are enumerated with their
// exact vertices (brute force over d-subsets of the defining hyperplane
// pool, as the sizes here stay small).
inline CutComplex cut_complex(const PointConfiguration& config,
                              const std::vector<AffineHyperplane>& cuts) {
    const std::size_t d = config.dim();

    std::vector<std::pair<AffineHyperplane, int>> base;
    for (const auto& f : config.facets()) base.emplace_back(f.plane, f.interior_side);

    std::vector<std::vector<std::pair<AffineHyperplane, int>>> regions{base};
    for (const auto& h : cuts) {
        std::vector<std::vector<std::pair<AffineHyperplane, int>>> next;
        for (const auto& r : regions) {
            for (int side : {+1, -1}) {
                auto cand = r;
                cand.emplace_back(h, side);
                if (detail::region_has_interior(cand, d)) next.push_back(std::move(cand));
            }
        }
        regions = std::move(next);
    }

    // hyperplane pool for vertex enumeration
    std::set<AffineHyperplane> pool_set;
    for (const auto& f : config.facets()) pool_set.insert(f.plane);
    for (const auto& h : cuts) pool_set.insert(h);
    std::vector<AffineHyperplane> pool(pool_set.begin(), pool_set.end());

    std::vector<QVector> candidates;
    {
        detail::for_each_subset(pool.size(), d, [&](const std::vector<std::size_t>& idx) {
            RationalMatrix a(d, d);
            QVector b(d);
            for (std::size_t i = 0; i < d; ++i) {
                for (std::size_t j = 0; j < d; ++j) a.at(i, j) = pool[idx[i]].normal[j];
                b[i] = pool[idx[i]].offset;
            }
            if (rank(a) != d) return;
            auto x = solve(a, b);
            if (x) candidates.push_back(*x);
        });
        std::sort(candidates.begin(), candidates.end());
        candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    }

    CutComplex out;
    for (auto& r : regions) {
        CutCell cell;
        cell.constraints = std::move(r);
        for (const auto& x : candidates) {
            bool inside = true;
            for (const auto& [h, side] : cell.constraints)
                if (side * h.side(x) < 0) {
                    inside = false;
                    break;
                }
            if (inside) cell.vertices.push_back(x);
        }
        std::sort(cell.vertices.begin(), cell.vertices.end());

        std::uint32_t labels = 0;
        bool all_points = true;
        for (const auto& x : cell.vertices) {
            bool found = false;
            for (std::size_t i = 0; i < config.n(); ++i)
                if (config.point(i) == x) {
                    labels |= 1u << i;
                    found = true;
                    break;
                }
            if (!found) all_points = false;
        }
        if (all_points)
            cell.vertex_labels = labels;
        else
            out.all_vertices_original = false;
        out.cells.push_back(std::move(cell));
    }
    return out;
}

} // namespace splitscope
