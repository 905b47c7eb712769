#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "berezin/matrix.hpp"
#include "berezin/rng.hpp"

using namespace berezin;

namespace {

PolyMatrix random_int_matrix(Rng& rng, int n, int lo = -4, int hi = 4) {
    PolyMatrix m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m.at(i, j) = MultiPoly(rng.uniform_int(lo, hi));
    return m;
}

// random matrix over <= 2 variables with small integer coefficients
PolyMatrix random_poly_matrix(Rng& rng, int n) {
    PolyMatrix m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            MultiPoly e(rng.uniform_int(-2, 2));
            if (rng.coin()) e += Rational(rng.uniform_int(1, 2)) * MultiPoly::variable("x1");
            if (rng.coin()) e += Rational(rng.uniform_int(1, 2)) * MultiPoly::variable("x2");
            m.at(i, j) = e;
        }
    return m;
}

} // namespace

TEST_CASE("determinant examples") {
    PolyMatrix one(1, 1);
    one.at(0, 0) = MultiPoly::variable("a");
    CHECK(det_poly(one).str() == "a");
    CHECK(det_poly(PolyMatrix::identity(4)) == MultiPoly(1));
    PolyMatrix loop(1, 1);
    loop.at(0, 0) = MultiPoly(1) - MultiPoly::variable("w_1_1_1");
    CHECK(det_poly(loop).str() == "-w_1_1_1 + 1");
    CHECK(det_poly(PolyMatrix(0, 0)) == MultiPoly(1));
}

TEST_CASE("determinant of a non-square matrix is a shape error") {
    CHECK_THROWS_AS(det_poly(PolyMatrix(2, 3)), shape_error);
    CHECK_THROWS_AS(det_cofactor(PolyMatrix(1, 2)), shape_error);
    CHECK_THROWS_AS(det_bareiss(PolyMatrix(3, 1)), shape_error);
}

TEST_CASE("dispatch path agrees with the cofactor oracle on random 4x4") {
    Rng rng(411);
    for (int t = 0; t < 25; ++t) {
        PolyMatrix m = random_poly_matrix(rng, 4);
        CHECK(det_poly(m) == det_cofactor(m));
    }
}

TEST_CASE("fraction-free elimination agrees with cofactor expansion") {
    Rng rng(512);
    for (int t = 0; t < 10; ++t) {
        PolyMatrix m = random_int_matrix(rng, 5);
        CHECK(det_bareiss(m) == det_cofactor(m));
    }
    for (int t = 0; t < 5; ++t) {
        PolyMatrix m = random_poly_matrix(rng, 5);
        CHECK(det_bareiss(m) == det_cofactor(m));
    }
    for (int t = 0; t < 3; ++t) {
        PolyMatrix m = random_int_matrix(rng, 6);
        CHECK(det_bareiss(m) == det_cofactor(m));
    }
}

TEST_CASE("singular polynomial matrices") {
    PolyMatrix m(3, 3); // zero row
    m.at(0, 0) = MultiPoly::variable("x1");
    m.at(0, 1) = MultiPoly(2);
    m.at(2, 2) = MultiPoly(1);
    CHECK(det_bareiss(m).is_zero());
    CHECK(det_cofactor(m).is_zero());

    PolyMatrix d(4, 4); // two equal rows
    Rng rng(3);
    d = random_int_matrix(rng, 4);
    for (int j = 0; j < 4; ++j) d.at(2, j) = d.at(1, j);
    CHECK(det_bareiss(d).is_zero());
}

TEST_CASE("bareiss handles a zero pivot via row swap") {
    PolyMatrix m(5, 5);
    // anti-diagonal permutation-like matrix with polynomial corners
    for (int i = 0; i < 5; ++i) m.at(i, 4 - i) = MultiPoly(i + 1);
    m.at(0, 0) = MultiPoly();
    m.at(4, 4) = MultiPoly::variable("x1");
    CHECK(det_bareiss(m) == det_cofactor(m));
}

TEST_CASE("rational inverse examples") {
    CHECK(RationalMatrix::identity(3).inverse() == RationalMatrix::identity(3));

    RationalMatrix u(2, 2);
    u.at(0, 0) = 1;
    u.at(0, 1) = -1;
    u.at(1, 1) = 1;
    RationalMatrix ui = u.inverse();
    CHECK(ui.at(0, 0) == Rational(1));
    CHECK(ui.at(0, 1) == Rational(1));
    CHECK(ui.at(1, 0) == Rational(0));
    CHECK(ui.at(1, 1) == Rational(1));

    RationalMatrix two(1, 1);
    two.at(0, 0) = 2;
    CHECK(two.inverse().at(0, 0) == Rational(1, 2));
}

TEST_CASE("inverse times matrix is the identity, exactly") {
    Rng rng(600);
    for (int t = 0; t < 20; ++t) {
        int n = rng.uniform_int(1, 5);
        RationalMatrix m(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) m.at(i, j) = rng.sample_weight_value();
        if (m.det() == 0) continue;
        CHECK(m.inverse() * m == RationalMatrix::identity(n));
    }
}

TEST_CASE("singular rational matrix raises") {
    RationalMatrix z(2, 2);
    CHECK_THROWS_AS(z.inverse(), singular_error);
    CHECK(z.det() == Rational(0));
}

TEST_CASE("adjugate identity m * adj(m) = det(m) * I") {
    Rng rng(77);
    for (int t = 0; t < 5; ++t) {
        int n = rng.uniform_int(1, 3);
        PolyMatrix m = random_poly_matrix(rng, n);
        PolyMatrix prod = m * adjugate(m);
        MultiPoly d = det_poly(m);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                CHECK(prod.at(i, j) == (i == j ? d : MultiPoly()));
    }
}

TEST_CASE("select and without") {
    PolyMatrix m(3, 3);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m.at(i, j) = MultiPoly(3 * i + j);
    PolyMatrix s = m.without({0}, {1});
    CHECK(s.rows() == 2);
    CHECK(s.at(0, 0) == MultiPoly(3));
    CHECK(s.at(0, 1) == MultiPoly(5));
    CHECK(s.at(1, 1) == MultiPoly(8));
    CHECK_THROWS_AS(m.select({5}, {0}), argument_error);
}
