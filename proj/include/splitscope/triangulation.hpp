#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "splitscope/cut_complex.hpp"
#include "splitscope/errors.hpp"
#include "splitscope/lp.hpp"
#include "splitscope/point_configuration.hpp"
#include "splitscope/splits.hpp"

namespace splitscope {

// A triangulation without new vertices: full-dimensional simplices given as
// label masks, sorted.  Cells cover the polytope exactly (volumes add up)
// and intersect pairwise in common faces.
struct Triangulation {
    std::vector<std::uint32_t> cells;

    bool operator==(const Triangulation&) const = default;
    bool operator<(const Triangulation& o) const { return cells < o.cells; }

    std::vector<std::vector<std::string>> cell_labels(const PointConfiguration& c) const {
        std::vector<std::vector<std::string>> out;
        for (auto m : cells) out.push_back(c.labels_of(m));
        return out;
    }
};

struct TriangulationOptions {
    std::size_t max_n = 10;
    std::size_t max_dim = 4;
};

namespace detail {

// d! times the Euclidean volume of the simplex on the masked vertices.
inline Rational normalized_volume(const PointConfiguration& config, std::uint32_t cell) {
    const std::size_t d = config.dim();
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < config.n(); ++i)
        if (cell & (1u << i)) idx.push_back(i);
    if (idx.size() != d + 1) return 0;
    RationalMatrix m(d, d);
    for (std::size_t r = 0; r < d; ++r)
        for (std::size_t j = 0; j < d; ++j)
            m.at(r, j) = config.point(idx[r + 1])[j] - config.point(idx[0])[j];
    Rational det = determinant(m);
    return det < 0 ? -det : det;
}

// Proper intersection of two cells: no circuit stretches from one to the
// other (then conv(a) meets conv(b) exactly in conv(a & b)).
inline bool cells_proper(const PointConfiguration& config, std::uint32_t a, std::uint32_t b) {
    for (const auto& [pm, mm] : config.circuit_masks()) {
        if ((pm & ~a) == 0 && (mm & ~b) == 0) return false;
        if ((pm & ~b) == 0 && (mm & ~a) == 0) return false;
    }
    return true;
}

} // namespace detail

// Incremental placing: each vertex is added by coning over the boundary
// facets it sees; while the affine hull still grows, the new vertex is
// joined to every cell.  Every point is a vertex of the full hull, so each
// insertion happens outside the current hull.
inline Triangulation placing_triangulation(const PointConfiguration& config,
                                           const std::vector<std::string>& order) {
    const std::size_t n = config.n(), d = config.dim();
    if (order.size() != n) throw InputError("order must be a permutation of all labels");
    std::vector<std::size_t> perm;
    std::set<std::size_t> seen;
    for (const auto& l : order) {
        std::size_t i = config.index_of(l);
        if (!seen.insert(i).second) throw InputError("order repeats label " + l);
        perm.push_back(i);
    }

    std::vector<std::size_t> basis;            // affine basis of the placed set
    std::vector<std::uint32_t> cells;

    auto in_hull_span = [&](std::size_t v) {
        std::vector<QVector> rows;
        for (auto b : basis) rows.push_back(config.homogeneous().row(b));
        rows.push_back(config.homogeneous().row(v));
        return rank(RationalMatrix::from_rows(rows)) == basis.size();
    };

    // coordinates of a point in the affine chart spanned by `basis`
    auto chart = [&](std::size_t v) {
        const std::size_t k = basis.size() - 1;
        RationalMatrix bt(d, k);
        for (std::size_t j = 0; j < k; ++j)
            for (std::size_t r = 0; r < d; ++r)
                bt.at(r, j) = config.point(basis[j + 1])[r] - config.point(basis[0])[r];
        QVector rhs(d);
        for (std::size_t r = 0; r < d; ++r)
            rhs[r] = config.point(v)[r] - config.point(basis[0])[r];
        auto c = solve(bt, rhs);
        if (!c) throw std::logic_error("placing chart: point outside hull span");
        return *c;
    };

    for (std::size_t step = 0; step < n; ++step) {
        const std::size_t v = perm[step];
        if (step == 0) {
            basis = {v};
            cells = {1u << v};
            continue;
        }
        if (!in_hull_span(v)) {
            for (auto& c : cells) c |= 1u << v;
            basis.push_back(v);
            continue;
        }
        // v lies in the current affine hull, strictly outside the hull itself
        std::map<std::uint32_t, std::pair<int, std::uint32_t>> ridge; // ridge -> (count, one cell)
        for (auto c : cells)
            for (std::size_t i = 0; i < n; ++i)
                if (c & (1u << i)) {
                    auto r = c & ~(1u << i);
                    auto& e = ridge[r];
                    ++e.first;
                    e.second = c;
                }
        QVector vc = chart(v);
        std::vector<std::uint32_t> added;
        for (const auto& [r, info] : ridge) {
            if (info.first != 1) continue; // interior wall
            std::vector<QVector> pts;
            for (std::size_t i = 0; i < n; ++i)
                if (r & (1u << i)) pts.push_back(chart(i));
            AffineHyperplane h = hyperplane_through(pts);
            std::uint32_t inner = info.second & ~r;
            std::size_t inner_i = std::size_t(std::countr_zero(inner));
            int si = h.side(chart(inner_i));
            int sv = h.side(vc);
            if (sv != 0 && sv == -si) added.push_back(r | (1u << v));
        }
        if (added.empty()) throw std::logic_error("placing: no facet visible from new vertex");
        cells.insert(cells.end(), added.begin(), added.end());
    }
    std::sort(cells.begin(), cells.end());
    return Triangulation{cells};
}

inline Rational total_volume(const PointConfiguration& config) {
    auto t = placing_triangulation(config, config.labels());
    Rational v = 0;
    for (auto c : t.cells) v += detail::normalized_volume(config, c);
    return v;
}

// All triangulations without new vertices.  Depth-first cover search: the
// first cell is the one containing a fixed generic interior witness point,
// then open interior walls are filled one at a time; exact volumes and
// pairwise proper intersection prune the search.  Each triangulation is
// reached exactly once because the popped wall is determined by the state.
inline std::vector<Triangulation> enumerate_triangulations(const PointConfiguration& config,
                                                           const TriangulationOptions& opts = {}) {
    const std::size_t n = config.n(), d = config.dim();
    if (n > opts.max_n)
        throw BudgetExceeded("triangulation enumeration limited to n <= " +
                             std::to_string(opts.max_n));
    if (d > opts.max_dim)
        throw BudgetExceeded("triangulation enumeration limited to d <= " +
                             std::to_string(opts.max_dim));

    // candidate cells
    std::vector<std::uint32_t> cand;
    std::map<std::uint32_t, Rational> vol;
    detail::for_each_subset(n, d + 1, [&](const std::vector<std::size_t>& idx) {
        std::uint32_t m = 0;
        for (auto i : idx) m |= 1u << i;
        Rational v = detail::normalized_volume(config, m);
        if (v != 0) {
            cand.push_back(m);
            vol[m] = v;
        }
    });
    const Rational total = total_volume(config);

    // generic interior witness: inside the first placing cell, off every
    // spanned hyperplane
    QVector witness;
    {
        std::uint32_t c0 = placing_triangulation(config, config.labels()).cells.front();
        std::vector<std::size_t> idx;
        for (std::size_t i = 0; i < n; ++i)
            if (c0 & (1u << i)) idx.push_back(i);
        for (Integer t = 2;; ++t) {
            QVector w(d, Rational(0));
            Rational wsum = 0;
            Rational coeff = 1;
            for (auto i : idx) {
                for (std::size_t j = 0; j < d; ++j) w[j] += coeff * config.point(i)[j];
                wsum += coeff;
                coeff *= Rational(t);
            }
            for (auto& x : w) x /= wsum;
            bool generic = true;
            for (const auto& cc : config.cocircuits())
                if (cc.plane.side(w) == 0) {
                    generic = false;
                    break;
                }
            if (generic) {
                witness = std::move(w);
                break;
            }
        }
    }

    // boundary walls: ridges whose hyperplane supports the polytope
    std::map<std::uint32_t, bool> boundary_cache;
    std::map<std::uint32_t, AffineHyperplane> ridge_plane;
    auto ridge_info = [&](std::uint32_t r) {
        auto it = boundary_cache.find(r);
        if (it != boundary_cache.end()) return it->second;
        std::vector<QVector> pts;
        for (std::size_t i = 0; i < n; ++i)
            if (r & (1u << i)) pts.push_back(config.point(i));
        AffineHyperplane h = hyperplane_through(pts);
        bool plus = false, minus = false;
        for (std::size_t i = 0; i < n; ++i) {
            int s = h.side(config.point(i));
            plus |= s > 0;
            minus |= s < 0;
        }
        ridge_plane[r] = h;
        bool b = !(plus && minus);
        boundary_cache[r] = b;
        return b;
    };

    std::vector<std::uint32_t> cells_with_witness;
    for (auto c : cand) {
        bool inside = true;
        for (std::size_t i = 0; i < n && inside; ++i) {
            if (!(c & (1u << i))) continue;
            std::uint32_t r = c & ~(1u << i);
            if (!ridge_plane.count(r)) ridge_info(r);
            const auto& h = ridge_plane[r];
            if (h.side(witness) != h.side(config.point(i))) inside = false;
        }
        if (inside) cells_with_witness.push_back(c);
    }

    std::vector<Triangulation> out;
    std::vector<std::uint32_t> chosen;
    // open walls: ridge -> the cell that already carries it
    std::map<std::uint32_t, std::uint32_t> open;

    auto add_cell = [&](std::uint32_t c) -> bool {
        for (auto prev : chosen)
            if (!detail::cells_proper(config, prev, c)) return false;
        chosen.push_back(c);
        for (std::size_t i = 0; i < n; ++i) {
            if (!(c & (1u << i))) continue;
            std::uint32_t r = c & ~(1u << i);
            if (ridge_info(r)) continue;
            auto it = open.find(r);
            if (it == open.end()) open[r] = c;
            else open.erase(it);
        }
        return true;
    };
    auto remove_cell = [&](std::uint32_t c) {
        chosen.pop_back(); // LIFO: c was the last cell added
        for (std::size_t i = 0; i < n; ++i) {
            if (!(c & (1u << i))) continue;
            std::uint32_t r = c & ~(1u << i);
            if (ridge_info(r)) continue;
            auto it = open.find(r);
            if (it != open.end()) {
                // c was the only incident cell
                open.erase(it);
                continue;
            }
            // the wall was closed by c; reopen it for the surviving cell
            for (auto cc : chosen)
                if ((r & ~cc) == 0) {
                    open[r] = cc;
                    break;
                }
        }
    };

    std::function<void()> dfs = [&]() {
        if (open.empty()) {
            Rational v = 0;
            for (auto c : chosen) v += vol[c];
            if (v != total) throw std::logic_error("closed complex does not fill the polytope");
            Triangulation t;
            t.cells = chosen;
            std::sort(t.cells.begin(), t.cells.end());
            out.push_back(std::move(t));
            return;
        }
        auto [r, owner] = *open.begin();
        const auto& h = ridge_plane[r];
        std::uint32_t inner = owner & ~r;
        int si = h.side(config.point(std::size_t(std::countr_zero(inner))));
        for (std::size_t x = 0; x < n; ++x) {
            if (r & (1u << x)) continue;
            if (h.side(config.point(x)) != -si) continue;
            std::uint32_t c = r | (1u << x);
            if (!vol.count(c)) continue;
            if (add_cell(c)) {
                dfs();
                remove_cell(c);
            }
        }
    };

    for (auto c0 : cells_with_witness) {
        add_cell(c0);
        dfs();
        remove_cell(c0);
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Regularity: exact strict feasibility for heights that lift every cell to
// a lower facet of the lifted polytope (every non-member vertex strictly
// above each cell's lifted hull).
inline bool is_regular(const PointConfiguration& config, const Triangulation& t) {
    const std::size_t n = config.n(), d = config.dim();
    lp::System sys;
    sys.dim = n;
    for (auto cell : t.cells) {
        std::vector<std::size_t> idx;
        for (std::size_t i = 0; i < n; ++i)
            if (cell & (1u << i)) idx.push_back(i);
        // affine coordinates of w in terms of the cell's vertices
        RationalMatrix a(d + 1, idx.size());
        for (std::size_t j = 0; j < idx.size(); ++j) {
            a.at(0, j) = 1;
            for (std::size_t r = 0; r < d; ++r) a.at(r + 1, j) = config.point(idx[j])[r];
        }
        for (std::size_t w = 0; w < n; ++w) {
            if (cell & (1u << w)) continue;
            QVector rhs(d + 1);
            rhs[0] = 1;
            for (std::size_t r = 0; r < d; ++r) rhs[r + 1] = config.point(w)[r];
            auto lambda = solve(a, rhs);
            if (!lambda) throw std::logic_error("cell does not span");
            QVector row(n, Rational(0));
            row[w] = 1;
            for (std::size_t j = 0; j < idx.size(); ++j) row[idx[j]] -= (*lambda)[j];
            sys.strict.push_back(std::move(row));
        }
    }
    return lp::feasible(sys);
}

// Possibly-rescaled lifting heights witnessing regularity, if any.
inline std::optional<QVector> regularity_heights(const PointConfiguration& config,
                                                 const Triangulation& t) {
    const std::size_t n = config.n(), d = config.dim();
    lp::System sys;
    sys.dim = n;
    for (auto cell : t.cells) {
        std::vector<std::size_t> idx;
        for (std::size_t i = 0; i < n; ++i)
            if (cell & (1u << i)) idx.push_back(i);
        RationalMatrix a(d + 1, idx.size());
        for (std::size_t j = 0; j < idx.size(); ++j) {
            a.at(0, j) = 1;
            for (std::size_t r = 0; r < d; ++r) a.at(r + 1, j) = config.point(idx[j])[r];
        }
        for (std::size_t w = 0; w < n; ++w) {
            if (cell & (1u << w)) continue;
            QVector rhs(d + 1);
            rhs[0] = 1;
            for (std::size_t r = 0; r < d; ++r) rhs[r + 1] = config.point(w)[r];
            auto lambda = solve(a, rhs);
            QVector row(n, Rational(0));
            row[w] = 1;
            for (std::size_t j = 0; j < idx.size(); ++j) row[idx[j]] -= (*lambda)[j];
            sys.strict.push_back(std::move(row));
        }
    }
    return lp::feasible_point(sys);
}

// Interior walls of a triangulation: cell facets whose hyperplane does not
// support the polytope.
inline std::set<AffineHyperplane> interior_wall_planes(const PointConfiguration& config,
                                                       const Triangulation& t) {
    std::set<AffineHyperplane> out;
    std::set<std::uint32_t> seen;
    for (auto c : t.cells)
        for (std::size_t i = 0; i < config.n(); ++i) {
            if (!(c & (1u << i))) continue;
            std::uint32_t r = c & ~(1u << i);
            if (!seen.insert(r).second) continue;
            std::vector<QVector> pts;
            for (std::size_t j = 0; j < config.n(); ++j)
                if (r & (1u << j)) pts.push_back(config.point(j));
            AffineHyperplane h = hyperplane_through(pts);
            bool plus = false, minus = false;
            for (std::size_t j = 0; j < config.n(); ++j) {
                int s = h.side(config.point(j));
                plus |= s > 0;
                minus |= s < 0;
            }
            if (plus && minus) out.insert(h);
        }
    return out;
}

// Is t induced by splits?  Stage 1: every interior wall spans a split
// hyperplane.  Stage 2: cutting by exactly the split hyperplanes that occur
// reproduces the cells of t (a strict refinement of the cut fails here).
inline bool is_split_triangulation(const PointConfiguration& config, const Triangulation& t,
                                   const std::vector<Split>& splits) {
    auto walls = interior_wall_planes(config, t);
    std::vector<AffineHyperplane> used;
    for (const auto& h : walls) {
        bool found = false;
        for (const auto& s : splits)
            if (s.hyperplane == h) {
                found = true;
                break;
            }
        if (!found) return false; // stage 1: wall is not a split hyperplane
    }
    for (const auto& s : splits)
        if (walls.count(s.hyperplane)) used.push_back(s.hyperplane);

    auto cut = cut_complex(config, used);
    std::multiset<std::uint32_t> cut_cells;
    for (const auto& cell : cut.cells) {
        if (!cell.vertex_labels) return false; // refinement introduced a new vertex
        cut_cells.insert(*cell.vertex_labels);
    }
    std::multiset<std::uint32_t> t_cells(t.cells.begin(), t.cells.end());
    return cut_cells == t_cells;
}

// Face counts f_0..f_d of the simplicial complex.
inline std::vector<long long> f_vector(const PointConfiguration& config, const Triangulation& t) {
    std::set<std::uint32_t> faces;
    for (auto c : t.cells) {
        // all nonzero submasks
        for (std::uint32_t s = c; s; s = (s - 1) & c) faces.insert(s);
    }
    std::vector<long long> f(config.dim() + 1, 0);
    for (auto s : faces) {
        int k = std::popcount(s) - 1;
        if (k >= 0 && k <= int(config.dim())) ++f[std::size_t(k)];
    }
    return f;
}

// Dual graph: cells adjacent iff they share d labels (then the shared set is
// a common facet by proper intersection).
inline std::vector<std::pair<int, int>> dual_graph(const PointConfiguration& config,
                                                   const Triangulation& t) {
    std::vector<std::pair<int, int>> edges;
    for (std::size_t i = 0; i < t.cells.size(); ++i)
        for (std::size_t j = i + 1; j < t.cells.size(); ++j)
            if (std::popcount(t.cells[i] & t.cells[j]) == int(config.dim()))
                edges.emplace_back(int(i), int(j));
    return edges;
}

inline bool is_foldable(const PointConfiguration& config, const Triangulation& t) {
    auto edges = dual_graph(config, t);
    std::vector<int> color(t.cells.size(), -1);
    std::vector<std::vector<int>> adj(t.cells.size());
    for (auto [i, j] : edges) {
        adj[std::size_t(i)].push_back(j);
        adj[std::size_t(j)].push_back(i);
    }
    for (std::size_t s = 0; s < t.cells.size(); ++s) {
        if (color[s] != -1) continue;
        color[s] = 0;
        std::vector<std::size_t> stack{s};
        while (!stack.empty()) {
            auto u = stack.back();
            stack.pop_back();
            for (int v : adj[u]) {
                if (color[std::size_t(v)] == -1) {
                    color[std::size_t(v)] = 1 - color[u];
                    stack.push_back(std::size_t(v));
                } else if (color[std::size_t(v)] == color[u]) {
                    return false;
                }
            }
        }
    }
    return true;
}

// Brute-force total splittability: every regular triangulation must be
// split-induced (the paper's definition quantifies over regular
// triangulations; the all-triangulations verdict is reported alongside).
struct SplittabilityReport {
    bool totally_splittable = false;      // regular-only verdict
    bool all_triangulations_split = false;
    std::optional<Triangulation> witness; // first regular non-split triangulation
    std::size_t n_triangulations = 0;
    std::size_t n_regular = 0;
};

inline SplittabilityReport is_totally_splittable_bruteforce(const PointConfiguration& config,
                                                            const TriangulationOptions& opts = {}) {
    SplittabilityReport rep;
    auto splits = enumerate_splits(config);
    auto all = enumerate_triangulations(config, opts);
    rep.n_triangulations = all.size();
    rep.totally_splittable = true;
    rep.all_triangulations_split = true;
    for (const auto& t : all) {
        bool split = is_split_triangulation(config, t, splits);
        bool regular = is_regular(config, t);
        rep.n_regular += regular;
        if (!split) {
            rep.all_triangulations_split = false;
            if (regular && rep.totally_splittable) {
                rep.totally_splittable = false;
                rep.witness = t;
            }
        }
    }
    return rep;
}

} // namespace splitscope
