#pragma once

#include <cassert>
#include <set>
#include <vector>

#include "splitscope/matrix.hpp"
#include "splitscope/sign_vector.hpp"

namespace splitscope {

// Circuit/cocircuit enumeration for a vector configuration given as the rows
// of a matrix of full column rank.  Point configurations enter through their
// homogenized matrices, Gale diagrams through their ray matrices.

namespace detail {

template <typename F>
void for_each_subset(std::size_t n, std::size_t k, F&& f) {
    if (k > n) return;
    if (k == 0) {
        std::vector<std::size_t> empty;
        f(empty);
        return;
    }
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        f(idx);
        std::size_t i = k;
        while (i-- > 0) {
            if (idx[i] + (k - i) < n) {
                ++idx[i];
                for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
                break;
            }
            if (i == 0) return;
        }
    }
}

inline RationalMatrix select_rows(const RationalMatrix& m, const std::vector<std::size_t>& idx) {
    RationalMatrix s(idx.size(), m.cols);
    for (std::size_t i = 0; i < idx.size(); ++i)
        for (std::size_t j = 0; j < m.cols; ++j) s.at(i, j) = m.at(idx[i], j);
    return s;
}

} // namespace detail

// Minimal-support linear dependences among the rows, canonical, sorted.
// A dependence of support k lives inside a k-subset whose rank is k-1 and
// whose unique (up to scale) kernel vector has full support; supports never
// exceed rank+1.
inline std::vector<SignVector> circuits_of_rows(const RationalMatrix& rows) {
    const std::size_t n = rows.rows;
    const std::size_t r = rows.cols; // assumes full column rank
    std::set<SignVector> found;
    // k = 1 catches loops (zero vectors), which occur in Gale diagrams of
    // pyramids; point configurations have none.
    for (std::size_t k = 1; k <= r + 1 && k <= n; ++k) {
        detail::for_each_subset(n, k, [&](const std::vector<std::size_t>& idx) {
            RationalMatrix sub = detail::select_rows(rows, idx);
            RationalMatrix dep = null_space(sub.transposed());
            if (dep.cols != 1) return;
            SignVector sv(n);
            for (std::size_t i = 0; i < k; ++i) {
                int sg = sign_of(dep.at(i, 0));
                if (sg == 0) return; // support smaller than the subset
                sv.s[idx[i]] = static_cast<int8_t>(sg);
            }
            found.insert(sv.canonical());
        });
    }
    return {found.begin(), found.end()};
}

struct CocircuitGeom {
    SignVector sv;      // canonical
    QVector functional; // c with sv = +/- sign(rows . c)
};

// Sign patterns of the linear hyperplanes spanned by the rows.
inline std::vector<CocircuitGeom> cocircuits_of_rows_geom(const RationalMatrix& rows) {
    const std::size_t n = rows.rows;
    const std::size_t r = rows.cols;
    assert(r > 0);
    std::set<SignVector> seen;
    std::vector<CocircuitGeom> out;
    detail::for_each_subset(n, r - 1, [&](const std::vector<std::size_t>& idx) {
        RationalMatrix sub = detail::select_rows(rows, idx);
        RationalMatrix nsp = null_space(sub);
        if (nsp.cols != 1) return; // subset does not span a hyperplane
        QVector c = nsp.col(0);
        SignVector sv(n);
        bool flip_needed = false;
        for (std::size_t i = 0; i < n; ++i) sv.s[i] = static_cast<int8_t>(sign_of(dot(rows.row(i), c)));
        SignVector canon = sv.canonical();
        flip_needed = !(canon == sv);
        if (canon.is_zero()) return; // cannot happen at full rank
        if (seen.insert(canon).second) {
            if (flip_needed)
                for (auto& x : c) x = -x;
            out.push_back({canon, std::move(c)});
        }
    });
    std::sort(out.begin(), out.end(),
              [](const CocircuitGeom& a, const CocircuitGeom& b) { return a.sv < b.sv; });
    return out;
}

inline std::vector<SignVector> cocircuits_of_rows(const RationalMatrix& rows) {
    std::vector<SignVector> out;
    for (auto& g : cocircuits_of_rows_geom(rows)) out.push_back(g.sv);
    return out;
}

} // namespace splitscope
