#pragma once

// Independent test oracles.  These deliberately avoid the library's circuit
// machinery and decide questions by exact LP separation / direct hyperplane
// search, so they can cross-check the combinatorial implementations.

#include <cstdint>
#include <set>
#include <vector>

#include "splitscope/hyperplane.hpp"
#include "splitscope/lp.hpp"
#include "splitscope/point_configuration.hpp"

namespace oracles {

using namespace splitscope;

// Supporting-hyperplane test: subset S is a face iff some (a,b) satisfies
// a.p = b on S and a.p < b strictly off S.
inline bool is_face_lp(const PointConfiguration& c, std::uint32_t subset) {
    lp::System sys;
    sys.dim = c.dim() + 1;
    for (std::size_t i = 0; i < c.n(); ++i) {
        QVector row(c.dim() + 1);
        for (std::size_t j = 0; j < c.dim(); ++j) row[j] = c.point(i)[j];
        row[c.dim()] = -1;
        if (subset & (1u << i)) {
            sys.equal.push_back(row);
        } else {
            for (auto& x : row) x = -x;
            sys.strict.push_back(row);
        }
    }
    return lp::feasible(sys);
}

inline std::vector<std::pair<int, int>> edges_lp(const PointConfiguration& c) {
    std::vector<std::pair<int, int>> out;
    for (std::size_t i = 0; i < c.n(); ++i)
        for (std::size_t j = i + 1; j < c.n(); ++j)
            if (is_face_lp(c, (1u << i) | (1u << j))) out.emplace_back(int(i), int(j));
    return out;
}

// All hyperplanes spanned by d of the configuration's points (brute force
// over d-subsets, deduplicated by canonical form).
inline std::set<AffineHyperplane> spanned_hyperplanes(const PointConfiguration& c) {
    std::set<AffineHyperplane> out;
    std::vector<std::size_t> idx(c.dim());
    const std::size_t n = c.n(), d = c.dim();
    std::vector<std::size_t> comb(d);
    for (std::size_t i = 0; i < d; ++i) comb[i] = i;
    if (d > n) return out;
    while (true) {
        std::vector<QVector> pts;
        for (auto i : comb) pts.push_back(c.point(i));
        try {
            out.insert(hyperplane_through(pts));
        } catch (const DegenerateSpan&) {
        }
        std::size_t i = d;
        bool done = true;
        while (i-- > 0) {
            if (comb[i] + (d - i) < n) {
                ++comb[i];
                for (std::size_t j = i + 1; j < d; ++j) comb[j] = comb[j - 1] + 1;
                done = false;
                break;
            }
        }
        if (done) break;
    }
    return out;
}

// Split enumeration from first principles: spanned hyperplanes with vertices
// on both open sides and no LP-oracle edge crossing strictly.
inline std::vector<AffineHyperplane> splits_lp(const PointConfiguration& c) {
    auto edges = edges_lp(c);
    std::vector<AffineHyperplane> out;
    for (const auto& h : spanned_hyperplanes(c)) {
        bool has_plus = false, has_minus = false;
        std::vector<int> side(c.n());
        for (std::size_t i = 0; i < c.n(); ++i) {
            side[i] = h.side(c.point(i));
            has_plus |= side[i] > 0;
            has_minus |= side[i] < 0;
        }
        if (!has_plus || !has_minus) continue;
        bool cut = false;
        for (auto [i, j] : edges)
            if (side[std::size_t(i)] * side[std::size_t(j)] < 0) cut = true;
        if (!cut) out.push_back(h);
    }
    return out;
}

} // namespace oracles
