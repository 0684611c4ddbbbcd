#pragma once

#include <algorithm>
#include <vector>

#include "splitscope/errors.hpp"
#include "splitscope/matrix.hpp"
#include "splitscope/rational.hpp"

namespace splitscope {

// Affine hyperplane {x : normal . x = offset}.  The stored representative is
// canonical: the normal is a primitive integer vector whose first nonzero
// entry is positive.  This makes equality and ordering meaningful.
struct AffineHyperplane {
    QVector normal;
    Rational offset;

    static AffineHyperplane canonical(const QVector& normal, const Rational& offset) {
        if (is_zero(normal)) throw DegenerateSpan("hyperplane normal must be nonzero");
        ZVector prim = primitive_vector(normal);
        // primitive_vector preserves direction; recover the exact scale factor
        // from the first nonzero coordinate.
        std::size_t j = 0;
        while (normal[j] == 0) ++j;
        Rational factor = Rational(prim[j]) / normal[j]; // positive
        int s = 1;
        if (prim[j] < 0) s = -1;
        AffineHyperplane h;
        h.normal.resize(normal.size());
        for (std::size_t i = 0; i < normal.size(); ++i) h.normal[i] = Rational(prim[i] * s);
        h.offset = offset * factor * s;
        return h;
    }

    Rational eval(const QVector& p) const { return dot(normal, p) - offset; }
    int side(const QVector& p) const { return sign_of(eval(p)); }

    bool operator==(const AffineHyperplane&) const = default;
    bool operator<(const AffineHyperplane& o) const {
        if (normal != o.normal)
            return std::lexicographical_compare(normal.begin(), normal.end(),
                                                o.normal.begin(), o.normal.end());
        return offset < o.offset;
    }
};

// The canonical hyperplane through points that affinely span exactly a
// (d-1)-flat of R^d.
inline AffineHyperplane hyperplane_through(const std::vector<QVector>& points) {
    if (points.empty()) throw DegenerateSpan("no points");
    const std::size_t d = points.front().size();
    RationalMatrix h(points.size(), d + 1);
    for (std::size_t i = 0; i < points.size(); ++i) {
        h.at(i, 0) = 1;
        for (std::size_t j = 0; j < d; ++j) h.at(i, j + 1) = points[i][j];
    }
    RationalMatrix k = null_space(h);
    if (k.cols != 1) throw DegenerateSpan("points do not span a hyperplane");
    QVector normal(d);
    for (std::size_t j = 0; j < d; ++j) normal[j] = k.at(j + 1, 0);
    if (is_zero(normal)) throw DegenerateSpan("points do not span a hyperplane");
    return AffineHyperplane::canonical(normal, -k.at(0, 0));
}

} // namespace splitscope
