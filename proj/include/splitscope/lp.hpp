#pragma once

#include <cassert>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "splitscope/matrix.hpp"
#include "splitscope/rational.hpp"

namespace splitscope::lp {

// Homogeneous feasibility problem: find y with
//   a . y >  0   for every row a in `strict`
//   b . y >= 0   for every row b in `weak`
//   c . y ==  0  for every row c in `equal`
// Decided exactly by maximizing a slack e with a.y >= e, e <= 1; by scale
// invariance the optimum is 1 iff the strict system is feasible.  Bland's
// rule guards against cycling on the (heavily degenerate) all-zero rhs.
struct System {
    std::size_t dim = 0;
    std::vector<QVector> strict;
    std::vector<QVector> weak;
    std::vector<QVector> equal;
};

namespace detail {

class SimplexTableau {
public:
    SimplexTableau(std::size_t nrows, std::size_t ncols) : rows_(nrows), cols_(ncols) {
        t_.assign(nrows * (ncols + 1), Rational(0));
        basis_.assign(nrows, 0);
        cost_.assign(ncols + 1, Rational(0));
    }

    Rational& at(std::size_t i, std::size_t j) { return t_[i * (cols_ + 1) + j]; }
    Rational& rhs(std::size_t i) { return at(i, cols_); }
    Rational& cost(std::size_t j) { return cost_[j]; }
    Rational& cost_rhs() { return cost_[cols_]; }
    void set_basis(std::size_t row, std::size_t var) { basis_[row] = var; }

    // maximize; returns when all reduced costs <= 0
    void solve() {
        while (true) {
            std::size_t enter = cols_;
            for (std::size_t j = 0; j < cols_; ++j)
                if (cost_[j] > 0) { enter = j; break; } // Bland: smallest index
            if (enter == cols_) return;
            std::size_t leave = rows_;
            Rational best;
            for (std::size_t i = 0; i < rows_; ++i) {
                if (at(i, enter) <= 0) continue;
                Rational ratio = rhs(i) / at(i, enter);
                if (leave == rows_ || ratio < best ||
                    (ratio == best && basis_[i] < basis_[leave])) {
                    leave = i;
                    best = ratio;
                }
            }
            if (leave == rows_) throw std::logic_error("unbounded feasibility LP");
            pivot(leave, enter);
        }
    }

    Rational basic_value(std::size_t var) const {
        for (std::size_t i = 0; i < rows_; ++i)
            if (basis_[i] == var) return t_[i * (cols_ + 1) + cols_];
        return Rational(0);
    }

private:
    void pivot(std::size_t r, std::size_t c) {
        const Rational p = at(r, c);
        for (std::size_t j = 0; j <= cols_; ++j) at(r, j) /= p;
        for (std::size_t i = 0; i < rows_; ++i) {
            if (i == r || at(i, c) == 0) continue;
            const Rational f = at(i, c);
            for (std::size_t j = 0; j <= cols_; ++j) at(i, j) -= f * at(r, j);
        }
        if (cost_[c] != 0) {
            const Rational f = cost_[c];
            for (std::size_t j = 0; j <= cols_; ++j) cost_[j] -= f * at(r, j);
        }
        basis_[r] = c;
    }

    std::size_t rows_, cols_;
    std::vector<Rational> t_;
    std::vector<Rational> cost_;
    std::vector<std::size_t> basis_;
};

} // namespace detail

// Returns a witness y (with a.y >= 1 on strict rows) or nullopt.
inline std::optional<QVector> feasible_point(const System& sys) {
    std::vector<QVector> strict = sys.strict;
    std::vector<QVector> weak = sys.weak;
    std::size_t k = sys.dim;
    RationalMatrix basis_change; // dim x k
    if (!sys.equal.empty()) {
        basis_change = null_space(RationalMatrix::from_rows(sys.equal));
        k = basis_change.cols;
        auto transform = [&](const QVector& r) {
            QVector out(k, Rational(0));
            for (std::size_t j = 0; j < k; ++j)
                for (std::size_t i = 0; i < sys.dim; ++i) out[j] += r[i] * basis_change.at(i, j);
            return out;
        };
        for (auto& r : strict) r = transform(r);
        for (auto& r : weak) r = transform(r);
    }
    auto lift = [&](const QVector& y) {
        if (sys.equal.empty()) return y;
        QVector out(sys.dim, Rational(0));
        for (std::size_t i = 0; i < sys.dim; ++i)
            for (std::size_t j = 0; j < k; ++j) out[i] += basis_change.at(i, j) * y[j];
        return out;
    };

    for (const auto& r : strict)
        if (is_zero(r)) return std::nullopt;
    if (strict.empty()) return lift(QVector(k, Rational(0)));

    // columns: u(k) | v(k) | e | slacks(strict)+slacks(weak)+cap
    const std::size_t m = strict.size() + weak.size() + 1;
    const std::size_t ncols = 2 * k + 1 + m;
    const std::size_t e_col = 2 * k;
    detail::SimplexTableau t(m, ncols);
    std::size_t row = 0;
    for (const auto& a : strict) {
        for (std::size_t j = 0; j < k; ++j) {
            t.at(row, j) = -a[j];
            t.at(row, k + j) = a[j];
        }
        t.at(row, e_col) = 1;
        t.at(row, e_col + 1 + row) = 1;
        t.set_basis(row, e_col + 1 + row);
        ++row;
    }
    for (const auto& b : weak) {
        for (std::size_t j = 0; j < k; ++j) {
            t.at(row, j) = -b[j];
            t.at(row, k + j) = b[j];
        }
        t.at(row, e_col + 1 + row) = 1;
        t.set_basis(row, e_col + 1 + row);
        ++row;
    }
    t.at(row, e_col) = 1;
    t.at(row, e_col + 1 + row) = 1;
    t.rhs(row) = 1;
    t.set_basis(row, e_col + 1 + row);

    t.cost(e_col) = 1;
    t.solve();

    if (t.basic_value(e_col) <= 0) return std::nullopt;
    QVector y(k);
    for (std::size_t j = 0; j < k; ++j) y[j] = t.basic_value(j) - t.basic_value(k + j);
    // rescale so strict rows clear 1 (scale invariance)
    Rational mn;
    bool first = true;
    for (const auto& a : strict) {
        Rational val = dot(a, y);
        if (first || val < mn) mn = val, first = false;
    }
    assert(mn > 0);
    for (auto& x : y) x /= mn;
    return lift(y);
}

inline bool feasible(const System& sys) { return feasible_point(sys).has_value(); }

// Fourier-Motzkin elimination on a homogeneous system of strict inequalities
// (plus equalities removed up front by substitution).  Kept as an
// independent second route for interior-intersection questions; the simplex
// above must always agree with it.
inline bool fm_strict_feasible(std::vector<QVector> strict, std::vector<QVector> equal,
                               std::size_t dim) {
    std::vector<bool> alive(dim, true);
    for (std::size_t e = 0; e < equal.size(); ++e) {
        std::size_t piv = dim;
        for (std::size_t j = dim; j-- > 0;)
            if (alive[j] && equal[e][j] != 0) { piv = j; break; }
        if (piv == dim) continue; // redundant equality
        const QVector eq = equal[e];
        auto subst = [&](QVector& r) {
            if (r[piv] == 0) return;
            const Rational f = r[piv] / eq[piv];
            for (std::size_t j = 0; j < dim; ++j) r[j] -= f * eq[j];
        };
        for (auto& r : strict) subst(r);
        for (std::size_t e2 = e + 1; e2 < equal.size(); ++e2) subst(equal[e2]);
        alive[piv] = false;
    }

    auto canon = [&](const QVector& r) { return primitive_vector(r); };
    std::set<ZVector> rows;
    for (const auto& r : strict) {
        if (is_zero(r)) return false; // 0 > 0
        rows.insert(canon(r));
    }

    for (std::size_t v = dim; v-- > 0;) {
        if (!alive[v]) continue;
        std::vector<ZVector> pos, neg, keep;
        for (const auto& r : rows) {
            if (r[v] > 0) pos.push_back(r);
            else if (r[v] < 0) neg.push_back(r);
            else keep.push_back(r);
        }
        std::set<ZVector> next(keep.begin(), keep.end());
        for (const auto& p : pos)
            for (const auto& q : neg) {
                QVector comb(dim, Rational(0));
                bool zero = true;
                for (std::size_t j = 0; j < dim; ++j) {
                    comb[j] = Rational(p[v]) * Rational(q[j]) - Rational(q[v]) * Rational(p[j]);
                    if (comb[j] != 0) zero = false;
                }
                if (zero) return false;
                next.insert(canon(comb));
            }
        rows = std::move(next);
        alive[v] = false;
    }
    return rows.empty();
}

} // namespace splitscope::lp
