#include <catch2/catch_amalgamated.hpp>

#include "splitscope/hyperplane.hpp"
#include "splitscope/matrix.hpp"
#include "splitscope/rational.hpp"

#include <algorithm>
#include <random>

using namespace splitscope;

namespace {

RationalMatrix pentagon_homogeneous() {
    // homogenized vertices of the pentagon (1,0),(0,2),(-1,1),(-1,0),(0,-1)
    return RationalMatrix::from_rows({
        {1, 1, 0},
        {1, 0, 2},
        {1, -1, 1},
        {1, -1, 0},
        {1, 0, -1},
    });
}

QVector qv(std::initializer_list<int> xs) {
    QVector v;
    for (int x : xs) v.emplace_back(x);
    return v;
}

} // namespace

TEST_CASE("rational string round trip") {
    CHECK(to_string(Rational(5)) == "5");
    CHECK(to_string(Rational(-3) / 6) == "-1/2");
    CHECK(parse_rational("22/7") == Rational(22) / 7);
    CHECK(parse_rational("-4") == Rational(-4));
    CHECK(parse_rational("-4/6") == Rational(-2) / 3);
    CHECK_THROWS_AS(parse_rational("1/0"), InputError);
    CHECK_THROWS_AS(parse_rational("x"), InputError);
    CHECK_THROWS_AS(parse_rational(""), InputError);
}

TEST_CASE("rank") {
    CHECK(rank(pentagon_homogeneous()) == 3);
    CHECK(rank(RationalMatrix::identity(4)) == 4);
    CHECK(rank(RationalMatrix::from_rows({{1, 2}, {1, 2}})) == 1);
    CHECK(rank(RationalMatrix()) == 0);
}

TEST_CASE("kernel basis of the pentagon matrix") {
    RationalMatrix v = pentagon_homogeneous();
    RationalMatrix k = kernel_basis(v);
    REQUIRE(k.rows == 5);
    REQUIRE(k.cols == 2);
    CHECK(rank(k) == 2);
    CHECK(is_zero(multiply(v.transposed(), k)));
}

TEST_CASE("kernel basis trivial cases") {
    RationalMatrix k3 = kernel_basis(RationalMatrix::identity(3));
    CHECK(k3.rows == 3);
    CHECK(k3.cols == 0);

    RationalMatrix m(2, 1);
    m.at(0, 0) = 1;
    m.at(1, 0) = 1;
    RationalMatrix k = kernel_basis(m);
    REQUIRE(k.cols == 1);
    // column proportional to (1,-1)
    CHECK(k.at(0, 0) == -k.at(1, 0));
    CHECK(k.at(0, 0) != 0);
}

TEST_CASE("kernel rank identity on random matrices") {
    std::mt19937 rng(20240817);
    std::uniform_int_distribution<int> num(-4, 4), den(1, 3), sz(1, 6);
    for (int trial = 0; trial < 60; ++trial) {
        std::size_t r = sz(rng), c = sz(rng);
        RationalMatrix m(r, c);
        for (auto& x : m.entries) x = Rational(num(rng)) / den(rng);
        RationalMatrix k = kernel_basis(m);
        CHECK(rank(m) + k.cols == m.rows);
        CHECK(is_zero(multiply(m.transposed(), k)));
        if (k.cols > 0) CHECK(rank(k) == k.cols);
    }
}

TEST_CASE("determinant") {
    CHECK(determinant(RationalMatrix::identity(5)) == 1);
    RationalMatrix m = RationalMatrix::from_rows({{0, 1}, {1, 0}});
    CHECK(determinant(m) == -1);
    RationalMatrix f = RationalMatrix::from_rows({
        {Rational(1) / 2, Rational(1) / 3},
        {Rational(1) / 4, Rational(1) / 5},
    });
    CHECK(determinant(f) == Rational(1) / 10 - Rational(1) / 12);
    RationalMatrix s = RationalMatrix::from_rows({{1, 2}, {2, 4}});
    CHECK(determinant(s) == 0);
}

TEST_CASE("solve and inverse") {
    RationalMatrix a = RationalMatrix::from_rows({{2, 1}, {1, -1}});
    auto x = solve(a, qv({3, 0}));
    REQUIRE(x.has_value());
    CHECK((*x)[0] == 1);
    CHECK((*x)[1] == 1);

    RationalMatrix sing = RationalMatrix::from_rows({{1, 1}, {1, 1}});
    CHECK(!solve(sing, qv({0, 1})).has_value());
    CHECK(solve(sing, qv({1, 1})).has_value());

    RationalMatrix inv = inverse(a);
    CHECK(multiply(a, inv) == RationalMatrix::identity(2));
}

TEST_CASE("hyperplane through symmetric plane") {
    auto h = hyperplane_through({qv({1, 0, 0}), qv({0, 1, 0}), qv({0, 0, 1})});
    CHECK(h.normal == qv({1, 1, 1}));
    CHECK(h.offset == 1);
}

TEST_CASE("hyperplane through prism neighbors of e1") {
    // neighbors of e1 in the prism over a triangle: e2, e3, f1 = (0,-1,-1)
    auto h = hyperplane_through({qv({0, 1, 0}), qv({0, 0, 1}), qv({0, -1, -1})});
    CHECK(h.normal == qv({1, 0, 0}));
    CHECK(h.offset == 0);
}

TEST_CASE("hyperplane through collinear points in the plane") {
    auto h = hyperplane_through({qv({0, 0}), qv({1, 1}), qv({2, 2})});
    CHECK(h.normal == qv({1, -1}));
    CHECK(h.offset == 0);
}

TEST_CASE("hyperplane degenerate spans") {
    CHECK_THROWS_AS(hyperplane_through({qv({0, 0, 0}), qv({1, 0, 0})}), DegenerateSpan);
    CHECK_THROWS_AS(hyperplane_through(
                        {qv({0, 0, 0}), qv({1, 0, 0}), qv({0, 1, 0}), qv({0, 0, 1})}),
                    DegenerateSpan);
}

TEST_CASE("hyperplane canonical form is permutation invariant") {
    std::vector<QVector> pts = {qv({2, 0, 1}), qv({0, 3, 1}), qv({1, 1, -2})};
    auto h0 = hyperplane_through(pts);
    std::sort(pts.begin(), pts.end());
    do {
        auto h = hyperplane_through(pts);
        CHECK(h.normal == h0.normal);
        CHECK(h.offset == h0.offset);
    } while (std::next_permutation(pts.begin(), pts.end()));
}

TEST_CASE("hyperplane canonicalization clears denominators and fixes sign") {
    auto h = AffineHyperplane::canonical({Rational(-1) / 2, Rational(0), Rational(3) / 4},
                                         Rational(5) / 8);
    CHECK(h.normal == qv({2, 0, -3}));
    CHECK(h.offset == Rational(-5) / 2);
    // scaling the input changes nothing
    auto g = AffineHyperplane::canonical({Rational(-2), Rational(0), Rational(3)},
                                         Rational(5) / 2);
    CHECK(g == h);
}
