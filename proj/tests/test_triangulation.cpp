#include <catch2/catch_amalgamated.hpp>

#include "splitscope/families.hpp"
#include "splitscope/triangulation.hpp"

#include <algorithm>

using namespace splitscope;

namespace {

std::vector<long long> fv(std::initializer_list<long long> xs) { return {xs}; }

} // namespace

TEST_CASE("placing the pentagon in label order gives the fan from vertex 1") {
    auto pentagon = generate("pentagon_paper");
    auto t = placing_triangulation(pentagon, {"1", "2", "3", "4", "5"});
    REQUIRE(t.cells.size() == 3);
    auto cl = t.cell_labels(pentagon);
    std::vector<std::vector<std::string>> expect = {
        {"1", "2", "3"}, {"1", "3", "4"}, {"1", "4", "5"}};
    CHECK(cl == expect);
    CHECK(f_vector(pentagon, t) == fv({5, 7, 3}));
}

TEST_CASE("placing a simplex gives the single cell") {
    auto s = generate("simplex:4");
    auto t = placing_triangulation(s, s.labels());
    REQUIRE(t.cells.size() == 1);
    CHECK(t.cells[0] == s.full_mask());
}

TEST_CASE("placing the octahedron gives four cells") {
    auto oct = generate("crosspolytope:3");
    auto t = placing_triangulation(oct, oct.labels());
    CHECK(t.cells.size() == 4);
    // reversed order also yields a valid 4-cell triangulation
    std::vector<std::string> rev(oct.labels().rbegin(), oct.labels().rend());
    CHECK(placing_triangulation(oct, rev).cells.size() == 4);
}

TEST_CASE("placing rejects bad orders") {
    auto s = generate("simplex:2");
    CHECK_THROWS_AS(placing_triangulation(s, {"1", "2"}), InputError);
    CHECK_THROWS_AS(placing_triangulation(s, {"1", "2", "2"}), InputError);
}

TEST_CASE("pentagon has five triangulations") {
    auto pentagon = generate("pentagon_paper");
    auto all = enumerate_triangulations(pentagon);
    CHECK(all.size() == 5); // Catalan number C_3
    for (const auto& t : all) {
        CHECK(t.cells.size() == 3);
        CHECK(is_regular(pentagon, t));
        CHECK(f_vector(pentagon, t) == fv({5, 7, 3}));
    }
}

TEST_CASE("octahedron has exactly three triangulations, four cells each") {
    auto oct = generate("crosspolytope:3");
    auto all = enumerate_triangulations(oct);
    REQUIRE(all.size() == 3);
    for (const auto& t : all) {
        CHECK(t.cells.size() == 4);
        CHECK(is_regular(oct, t));
    }
}

TEST_CASE("triangle prism has six triangulations whose dual graphs are paths") {
    auto prism = generate("simplex_prism:3");
    auto all = enumerate_triangulations(prism);
    REQUIRE(all.size() == 6); // vertices of the 2-dimensional permutohedron
    for (const auto& t : all) {
        CHECK(t.cells.size() == 3);
        auto dg = dual_graph(prism, t);
        REQUIRE(dg.size() == 2); // path with 3 nodes
        std::vector<int> deg(3, 0);
        for (auto [i, j] : dg) {
            deg[std::size_t(i)]++;
            deg[std::size_t(j)]++;
        }
        std::sort(deg.begin(), deg.end());
        CHECK(deg == std::vector<int>{1, 1, 2});
    }
}

TEST_CASE("volume conservation across all enumerated triangulations") {
    for (const char* family :
         {"pentagon_paper", "crosspolytope:3", "simplex_prism:3", "cube:3", "prism_plus_point"}) {
        auto c = generate(family);
        INFO(family);
        Rational total = total_volume(c);
        auto all = enumerate_triangulations(c);
        CHECK(!all.empty());
        for (const auto& t : all) {
            Rational v = 0;
            for (auto cell : t.cells) v += detail::normalized_volume(c, cell);
            CHECK(v == total);
        }
    }
}

TEST_CASE("placing triangulations appear in the enumeration and are regular") {
    for (const char* family : {"pentagon_paper", "crosspolytope:3", "simplex_prism:3"}) {
        auto c = generate(family);
        INFO(family);
        auto all = enumerate_triangulations(c);
        auto t = placing_triangulation(c, c.labels());
        CHECK(std::find(all.begin(), all.end(), t) != all.end());
        CHECK(is_regular(c, t));
        // lifting heights certify it independently
        auto h = regularity_heights(c, t);
        REQUIRE(h.has_value());
        for (auto cell : t.cells) {
            std::vector<std::size_t> idx;
            for (std::size_t i = 0; i < c.n(); ++i)
                if (cell & (1u << i)) idx.push_back(i);
            RationalMatrix a(c.dim() + 1, idx.size());
            for (std::size_t j = 0; j < idx.size(); ++j) {
                a.at(0, j) = 1;
                for (std::size_t r = 0; r < c.dim(); ++r) a.at(r + 1, j) = c.point(idx[j])[r];
            }
            for (std::size_t w = 0; w < c.n(); ++w) {
                if (cell & (1u << w)) continue;
                QVector rhs(c.dim() + 1);
                rhs[0] = 1;
                for (std::size_t r = 0; r < c.dim(); ++r) rhs[r + 1] = c.point(w)[r];
                auto lambda = solve(a, rhs);
                REQUIRE(lambda.has_value());
                Rational lifted = 0;
                for (std::size_t j = 0; j < idx.size(); ++j) lifted += (*lambda)[j] * (*h)[idx[j]];
                CHECK((*h)[w] > lifted); // strictly above the lifted cell
            }
        }
    }
}

TEST_CASE("enumeration budget") {
    auto c = generate("polygon:6");
    TriangulationOptions opts;
    opts.max_n = 5;
    CHECK_THROWS_AS(enumerate_triangulations(c, opts), BudgetExceeded);
}

TEST_CASE("cut complex of the octahedron") {
    auto oct = generate("crosspolytope:3");
    AffineHyperplane x0 = AffineHyperplane::canonical({1, 0, 0}, 0);
    AffineHyperplane y0 = AffineHyperplane::canonical({0, 1, 0}, 0);
    AffineHyperplane z0 = AffineHyperplane::canonical({0, 0, 1}, 0);

    auto two = cut_complex(oct, {x0});
    CHECK(two.cells.size() == 2);
    CHECK(two.all_vertices_original);

    auto eight = cut_complex(oct, {x0, y0, z0});
    CHECK(eight.cells.size() == 8);
    CHECK(!eight.all_vertices_original); // the origin appears
    QVector origin(3, Rational(0));
    for (const auto& cell : eight.cells)
        CHECK(std::find(cell.vertices.begin(), cell.vertices.end(), origin) !=
              cell.vertices.end());
}

TEST_CASE("cutting the pentagon along two diagonals gives the fan") {
    auto pentagon = generate("pentagon_paper");
    auto d13 = hyperplane_through({pentagon.point(0), pentagon.point(2)});
    auto d14 = hyperplane_through({pentagon.point(0), pentagon.point(3)});
    auto cc = cut_complex(pentagon, {d13, d14});
    REQUIRE(cc.cells.size() == 3);
    CHECK(cc.all_vertices_original);
    std::multiset<std::uint32_t> cells;
    for (const auto& cell : cc.cells) {
        REQUIRE(cell.vertex_labels.has_value());
        cells.insert(*cell.vertex_labels);
    }
    auto fan = placing_triangulation(pentagon, {"1", "2", "3", "4", "5"});
    std::multiset<std::uint32_t> expect(fan.cells.begin(), fan.cells.end());
    CHECK(cells == expect);
}

TEST_CASE("split-induced triangulations of the octahedron") {
    auto oct = generate("crosspolytope:3");
    auto splits = enumerate_splits(oct);
    auto all = enumerate_triangulations(oct);
    for (const auto& t : all) CHECK(is_split_triangulation(oct, t, splits));
}

TEST_CASE("the simplex triangulation is vacuously split-induced") {
    auto s = generate("simplex:3");
    Triangulation t{{s.full_mask()}};
    CHECK(is_split_triangulation(s, t, enumerate_splits(s)));
}

TEST_CASE("the cube has triangulations that are not split-induced") {
    auto cube = generate("cube:3");
    auto splits = enumerate_splits(cube);
    auto all = enumerate_triangulations(cube);
    CHECK(all.size() == 74);
    bool witness = false, some_split = false;
    for (const auto& t : all) {
        if (!is_split_triangulation(cube, t, splits)) witness = true;
        else some_split = true;
    }
    CHECK(witness);
    CHECK(some_split);
}

TEST_CASE("foldability") {
    auto s = generate("simplex:3");
    CHECK(is_foldable(s, Triangulation{{s.full_mask()}}));
    // every split-induced triangulation in reach is foldable
    for (const char* family : {"pentagon_paper", "crosspolytope:3", "simplex_prism:3", "cube:3"}) {
        auto c = generate(family);
        INFO(family);
        auto splits = enumerate_splits(c);
        for (const auto& t : enumerate_triangulations(c))
            if (is_split_triangulation(c, t, splits)) CHECK(is_foldable(c, t));
    }
}

TEST_CASE("brute-force total splittability") {
    auto oct = generate("crosspolytope:3");
    auto r1 = is_totally_splittable_bruteforce(oct);
    CHECK(r1.totally_splittable);
    CHECK(r1.all_triangulations_split);
    CHECK(!r1.witness.has_value());
    CHECK(r1.n_triangulations == 3);
    CHECK(r1.n_regular == 3);

    auto cube = generate("cube:3");
    auto r2 = is_totally_splittable_bruteforce(cube);
    CHECK(!r2.totally_splittable);
    REQUIRE(r2.witness.has_value());
    CHECK(is_regular(cube, *r2.witness));
    CHECK(!is_split_triangulation(cube, *r2.witness, enumerate_splits(cube)));

    auto ppp = generate("prism_plus_point");
    auto r3 = is_totally_splittable_bruteforce(ppp);
    CHECK(!r3.totally_splittable);
    CHECK(r3.witness.has_value());
}
