#pragma once

#include <cassert>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "splitscope/rational.hpp"

namespace splitscope {

// Dense row-major matrix of exact rationals.  Sizes in this library stay at
// desk scale (n <= ~16), so no sparsity or blocking.
struct RationalMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<Rational> entries; // rows*cols, row-major

    RationalMatrix() = default;
    RationalMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), entries(r * c, Rational(0)) {}

    Rational& at(std::size_t i, std::size_t j) { return entries[i * cols + j]; }
    const Rational& at(std::size_t i, std::size_t j) const { return entries[i * cols + j]; }

    static RationalMatrix identity(std::size_t n) {
        RationalMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    static RationalMatrix from_rows(const std::vector<QVector>& rws) {
        RationalMatrix m(rws.size(), rws.empty() ? 0 : rws.front().size());
        for (std::size_t i = 0; i < rws.size(); ++i) {
            assert(rws[i].size() == m.cols);
            for (std::size_t j = 0; j < m.cols; ++j) m.at(i, j) = rws[i][j];
        }
        return m;
    }

    QVector row(std::size_t i) const {
        QVector r(cols);
        for (std::size_t j = 0; j < cols; ++j) r[j] = at(i, j);
        return r;
    }

    QVector col(std::size_t j) const {
        QVector c(rows);
        for (std::size_t i = 0; i < rows; ++i) c[i] = at(i, j);
        return c;
    }

    RationalMatrix transposed() const {
        RationalMatrix t(cols, rows);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) t.at(j, i) = at(i, j);
        return t;
    }

    bool operator==(const RationalMatrix&) const = default;
};

inline RationalMatrix multiply(const RationalMatrix& a, const RationalMatrix& b) {
    assert(a.cols == b.rows);
    RationalMatrix c(a.rows, b.cols);
    for (std::size_t i = 0; i < a.rows; ++i)
        for (std::size_t k = 0; k < a.cols; ++k) {
            const Rational& aik = a.at(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < b.cols; ++j) c.at(i, j) += aik * b.at(k, j);
        }
    return c;
}

inline bool is_zero(const RationalMatrix& m) {
    for (const auto& x : m.entries)
        if (x != 0) return false;
    return true;
}

namespace detail {

// Scale all entries by the lcm of the denominators.  A global positive
// factor changes neither rank nor kernel.
inline std::pair<std::vector<Integer>, Integer> cleared_integer_entries(const RationalMatrix& m) {
    Integer l = 1;
    for (const auto& x : m.entries) l = lcm_of(l, denominator_of(x));
    std::vector<Integer> out(m.entries.size());
    for (std::size_t i = 0; i < m.entries.size(); ++i)
        out[i] = numerator_of(m.entries[i]) * (l / denominator_of(m.entries[i]));
    return {std::move(out), l};
}

struct BareissEchelon {
    std::vector<Integer> a; // row-major, rows x cols
    std::size_t rows = 0, cols = 0;
    std::vector<std::size_t> pivot_cols;
    int sign = 1; // sign flip from row swaps
    Integer last_pivot = 1;

    Integer& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
};

// Fraction-free (Bareiss) forward elimination on an integer matrix.
// Entry growth stays polynomial (entries are minors of the input).
inline BareissEchelon bareiss_echelon(std::vector<Integer> a, std::size_t rows, std::size_t cols) {
    BareissEchelon e;
    e.a = std::move(a);
    e.rows = rows;
    e.cols = cols;
    Integer prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && e.at(p, c) == 0) ++p;
        if (p == rows) continue;
        if (p != r) {
            for (std::size_t j = 0; j < cols; ++j) std::swap(e.at(p, j), e.at(r, j));
            e.sign = -e.sign;
        }
        const Integer pivot = e.at(r, c);
        for (std::size_t i = r + 1; i < rows; ++i) {
            const Integer f = e.at(i, c);
            for (std::size_t j = 0; j < cols; ++j) {
                Integer t = e.at(i, j) * pivot - f * e.at(r, j);
                assert(t % prev == 0);
                e.at(i, j) = t / prev;
            }
        }
        prev = pivot;
        e.last_pivot = pivot;
        e.pivot_cols.push_back(c);
        ++r;
    }
    return e;
}

} // namespace detail

inline std::size_t rank(const RationalMatrix& m) {
    if (m.rows == 0 || m.cols == 0) return 0;
    auto [ints, scale] = detail::cleared_integer_entries(m);
    (void)scale;
    return detail::bareiss_echelon(std::move(ints), m.rows, m.cols).pivot_cols.size();
}

inline Rational determinant(const RationalMatrix& m) {
    assert(m.rows == m.cols);
    if (m.rows == 0) return 1;
    auto [ints, scale] = detail::cleared_integer_entries(m);
    auto e = detail::bareiss_echelon(std::move(ints), m.rows, m.cols);
    if (e.pivot_cols.size() < m.rows) return 0;
    // Bareiss: the final pivot equals det of the integer matrix.
    Rational det(e.last_pivot * e.sign);
    Rational s(scale);
    for (std::size_t i = 0; i < m.rows; ++i) det /= s;
    return det;
}

// Basis of the right null space {x : m x = 0}, returned as the columns of a
// cols x (cols - rank) matrix.  Columns are scaled to primitive integer
// vectors, so the output is canonical for a fixed input.
inline RationalMatrix null_space(const RationalMatrix& m) {
    const std::size_t n = m.cols;
    if (m.rows == 0 || n == 0) {
        RationalMatrix k = RationalMatrix::identity(n);
        return k;
    }
    auto [ints, scale] = detail::cleared_integer_entries(m);
    (void)scale;
    auto e = detail::bareiss_echelon(std::move(ints), m.rows, m.cols);
    const std::size_t r = e.pivot_cols.size();

    // Back-substitute over the rationals on the echelon form.
    RationalMatrix k(n, n - r);
    std::vector<bool> is_pivot(n, false);
    for (auto c : e.pivot_cols) is_pivot[c] = true;
    std::size_t out = 0;
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        QVector x(n, Rational(0));
        x[f] = 1;
        for (std::size_t ri = r; ri-- > 0;) {
            const std::size_t pc = e.pivot_cols[ri];
            Rational s = 0;
            for (std::size_t j = pc + 1; j < n; ++j)
                if (x[j] != 0) s += Rational(e.at(ri, j)) * x[j];
            x[pc] = -s / Rational(e.at(ri, pc));
        }
        ZVector prim = primitive_vector(x);
        // keep the free coordinate positive for a canonical basis
        if (prim[f] < 0)
            for (auto& v : prim) v = -v;
        for (std::size_t i = 0; i < n; ++i) k.at(i, out) = Rational(prim[i]);
        ++out;
    }
    return k;
}

// Basis of the kernel of transpose(m): an m.rows x (m.rows - rank) matrix K
// with transpose(m) * K = 0.
inline RationalMatrix kernel_basis(const RationalMatrix& m) { return null_space(m.transposed()); }

// One solution of A x = b, if consistent.  Plain rational elimination.
inline std::optional<QVector> solve(const RationalMatrix& a, const QVector& b) {
    assert(b.size() == a.rows);
    const std::size_t rows = a.rows, cols = a.cols;
    RationalMatrix w(rows, cols + 1);
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) w.at(i, j) = a.at(i, j);
        w.at(i, cols) = b[i];
    }
    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && w.at(p, c) == 0) ++p;
        if (p == rows) continue;
        if (p != r)
            for (std::size_t j = 0; j <= cols; ++j) std::swap(w.at(p, j), w.at(r, j));
        const Rational piv = w.at(r, c);
        for (std::size_t j = 0; j <= cols; ++j) w.at(r, j) /= piv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || w.at(i, c) == 0) continue;
            const Rational f = w.at(i, c);
            for (std::size_t j = 0; j <= cols; ++j) w.at(i, j) -= f * w.at(r, j);
        }
        pivot_col.push_back(c);
        ++r;
    }
    for (std::size_t i = r; i < rows; ++i)
        if (w.at(i, cols) != 0) return std::nullopt;
    QVector x(cols, Rational(0));
    for (std::size_t i = 0; i < pivot_col.size(); ++i) x[pivot_col[i]] = w.at(i, cols);
    return x;
}

inline RationalMatrix inverse(const RationalMatrix& a) {
    assert(a.rows == a.cols);
    const std::size_t n = a.rows;
    RationalMatrix w(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) w.at(i, j) = a.at(i, j);
        w.at(i, n + i) = 1;
    }
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && w.at(p, c) == 0) ++p;
        assert(p < n && "inverse of singular matrix");
        if (p != c)
            for (std::size_t j = 0; j < 2 * n; ++j) std::swap(w.at(p, j), w.at(c, j));
        const Rational piv = w.at(c, c);
        for (std::size_t j = 0; j < 2 * n; ++j) w.at(c, j) /= piv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || w.at(i, c) == 0) continue;
            const Rational f = w.at(i, c);
            for (std::size_t j = 0; j < 2 * n; ++j) w.at(i, j) -= f * w.at(c, j);
        }
    }
    RationalMatrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = w.at(i, n + j);
    return inv;
}

} // namespace splitscope
