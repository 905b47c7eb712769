#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <bit>

#include "berezin/grassmann.hpp"
#include "berezin/rng.hpp"

using namespace berezin;

namespace {

GrassmannElement gen(int m, int i) { return GrassmannElement::generator(m, i); }

GrassmannElement random_element(Rng& rng, int m, bool even_no_constant) {
    GrassmannElement e(m);
    int terms = rng.uniform_int(1, 4);
    std::uint64_t full = (std::uint64_t{1} << m) - 1;
    for (int t = 0; t < terms; ++t) {
        std::uint64_t mask = rng.next() & full;
        if (even_no_constant) {
            if (std::popcount(mask) % 2 != 0) mask &= mask - 1;
            if (mask == 0) continue;
        }
        int c = rng.uniform_int(-3, 3);
        e.add_term(mask, MultiPoly(c == 0 ? 1 : c));
    }
    return e;
}

PolyMatrix symbolic_matrix(int n) {
    PolyMatrix m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            m.at(i, j) = MultiPoly::variable("m_" + std::to_string(i + 1) + "_" +
                                             std::to_string(j + 1));
    return m;
}

} // namespace

TEST_CASE("product rule examples") {
    auto c1 = gen(2, 1), c2 = gen(2, 2);
    GrassmannElement c12(2);
    c12.add_term(0b11, MultiPoly(1));
    CHECK(c1 * c2 == c12);
    CHECK(c2 * c1 == -c12);
    CHECK((c1 * c1).is_zero());
    CHECK_THROWS_AS(gen(2, 1) * gen(3, 1), algebra_error);
}

TEST_CASE("anti-commutation and nilpotency, exhaustively for m <= 6") {
    for (int m = 1; m <= 6; ++m)
        for (int i = 1; i <= m; ++i)
            for (int j = 1; j <= m; ++j) {
                if (i == j)
                    CHECK((gen(m, i) * gen(m, i)).is_zero());
                else
                    CHECK(gen(m, i) * gen(m, j) == -(gen(m, j) * gen(m, i)));
            }
}

TEST_CASE("associativity on random elements") {
    Rng rng(1001);
    for (int m = 1; m <= 6; ++m)
        for (int t = 0; t < 8; ++t) {
            auto a = random_element(rng, m, false);
            auto b = random_element(rng, m, false);
            auto c = random_element(rng, m, false);
            CHECK((a * b) * c == a * (b * c));
        }
}

TEST_CASE("exponential examples") {
    auto c12 = gen(2, 1) * gen(2, 2);
    CHECK(gexp(c12) == GrassmannElement::unit(2) + c12);
    CHECK(gexp(GrassmannElement(3)) == GrassmannElement::unit(3));

    // exp(c1 c2 + c3 c4) = 1 + c1c2 + c3c4 + c1c2c3c4: the square contributes
    // 2 * c1c2c3c4 / 2!
    auto f = gen(4, 1) * gen(4, 2) + gen(4, 3) * gen(4, 4);
    GrassmannElement want = GrassmannElement::unit(4) + gen(4, 1) * gen(4, 2) +
                            gen(4, 3) * gen(4, 4);
    GrassmannElement top(4);
    top.add_term(0b1111, MultiPoly(1));
    want += top;
    CHECK(gexp(f) == want);

    CHECK_THROWS_AS(gexp(GrassmannElement::unit(2)), algebra_error);
}

TEST_CASE("exponential is a morphism on even elements") {
    Rng rng(1002);
    for (int m = 2; m <= 6; ++m)
        for (int t = 0; t < 8; ++t) {
            auto a = random_element(rng, m, true);
            auto b = random_element(rng, m, true);
            CHECK(gexp(a + b) == gexp(a) * gexp(b));
        }
}

TEST_CASE("Berezin integral examples") {
    GeneratorOrder o21{{2, 1}};
    CHECK(integrate(gen(2, 1) * gen(2, 2), o21) == MultiPoly(1));
    CHECK(integrate(gen(2, 2) * gen(2, 1), o21) == MultiPoly(-1));
    CHECK(integrate(gen(2, 1), o21).is_zero());
    // sign rule over a permuted measure
    GeneratorOrder o12{{1, 2}};
    CHECK(integrate(gen(2, 1) * gen(2, 2), o12) == MultiPoly(-1));
    CHECK_THROWS_AS(integrate(gen(2, 1), GeneratorOrder{{1, 1}}), algebra_error);
    CHECK_THROWS_AS(integrate(gen(2, 1), GeneratorOrder{{1}}), algebra_error);
}

TEST_CASE("Berezin integral is linear") {
    Rng rng(1003);
    GeneratorOrder order = GeneratorOrder::descending(4);
    for (int t = 0; t < 10; ++t) {
        auto f = random_element(rng, 4, false);
        auto g = random_element(rng, 4, false);
        Rational alpha = rng.sample_weight_value();
        Rational beta = rng.sample_weight_value();
        GrassmannElement combo = f;
        combo *= alpha;
        GrassmannElement gb = g;
        gb *= beta;
        combo += gb;
        CHECK(integrate(combo, order) ==
              alpha * integrate(f, order) + beta * integrate(g, order));
    }
}

TEST_CASE("partial integration leaves the remaining generators intact") {
    // integral over generator 1 of c1 c3 is c3 (sign +: c1 already leftmost)
    auto e = gen(3, 1) * gen(3, 3);
    auto r = integrate_partial(e, {1});
    CHECK(r == gen(3, 3));
    // integral over generator 3 of c1 c3: moving c3 to the front crosses c1
    auto r2 = integrate_partial(e, {3});
    CHECK(r2 == -gen(3, 1));
}

TEST_CASE("Gaussian representation of the determinant") {
    PolyMatrix m1(1, 1);
    m1.at(0, 0) = MultiPoly::variable("a");
    CHECK(berezin_det(m1).str() == "a");
    CHECK(berezin_det(PolyMatrix::identity(3)) == MultiPoly(1));

    Rng rng(1004);
    for (int t = 0; t < 5; ++t) {
        PolyMatrix m(3, 3);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) m.at(i, j) = MultiPoly(rng.uniform_int(-4, 4));
        CHECK(berezin_det(m) == det_cofactor(m));
    }
    for (int n = 1; n <= 3; ++n) {
        auto m = symbolic_matrix(n);
        CHECK(berezin_det(m) == det_cofactor(m));
    }
    for (int n = 4; n <= 5; ++n) {
        PolyMatrix m(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) m.at(i, j) = MultiPoly(rng.sample_weight_value());
        CHECK(berezin_det(m) == det_cofactor(m));
    }
    CHECK_THROWS_AS(berezin_det(PolyMatrix(2, 3)), shape_error);
}

TEST_CASE("Gaussian representation of minors") {
    auto m2 = symbolic_matrix(2);
    CHECK(berezin_minor(m2, {}, {}) == det_cofactor(m2));
    CHECK(berezin_minor(m2, {1, 2}, {1, 2}) == MultiPoly(1));
    CHECK(berezin_minor(m2, {1}, {2}) == m2.at(1, 0)); // delete row 1, column 2

    Rng rng(1005);
    for (int t = 0; t < 5; ++t) {
        PolyMatrix m(2, 2);
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) m.at(i, j) = MultiPoly(rng.sample_weight_value());
        for (int i = 1; i <= 2; ++i)
            for (int j = 1; j <= 2; ++j)
                CHECK(berezin_minor(m, {i}, {j}) ==
                      det_poly(m.without({i - 1}, {j - 1})));
    }

    auto m4 = symbolic_matrix(4);
    std::vector<std::vector<int>> idx{{}, {1}, {2}, {3}, {4}, {1, 2}, {1, 3}, {1, 4},
                                      {2, 3}, {2, 4}, {3, 4}};
    for (const auto& I : idx)
        for (const auto& J : idx) {
            if (I.size() != J.size()) continue;
            std::vector<int> I0, J0;
            for (int v : I) I0.push_back(v - 1);
            for (int v : J) J0.push_back(v - 1);
            CHECK(berezin_minor(m4, I, J) == det_poly(m4.without(I0, J0)));
        }

    CHECK_THROWS_AS(berezin_minor(m2, {1}, {}), argument_error);
    CHECK_THROWS_AS(berezin_minor(m2, {0}, {1}), argument_error);
    CHECK_THROWS_AS(berezin_minor(m2, {3}, {1}), argument_error);
    CHECK_THROWS_AS(berezin_minor(m2, {2, 1}, {1, 2}), argument_error);
}

TEST_CASE("Gaussian integral formula, symbolic and rational") {
    PolyMatrix m1(1, 1);
    m1.at(0, 0) = MultiPoly::variable("m_1_1");
    CHECK(gaussian_identity_check(m1).equal);

    CHECK(gaussian_identity_check(PolyMatrix::identity(2)).equal);

    Rng rng(1006);
    for (int t = 0; t < 3; ++t) {
        PolyMatrix m(2, 2);
        do {
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 2; ++j) m.at(i, j) = MultiPoly(rng.sample_weight_value());
        } while (det_poly(m).is_zero());
        CHECK(gaussian_identity_check(m).equal);
    }

    // fully symbolic 2x2, stronger than the rational spot checks
    CHECK(gaussian_identity_check(symbolic_matrix(2)).equal);

    PolyMatrix sing(2, 2);
    sing.at(0, 0) = MultiPoly(1);
    CHECK_THROWS_AS(gaussian_identity_check(sing), singular_error);
}

TEST_CASE("parity bookkeeping") {
    CHECK(GrassmannElement(3).is_even());
    CHECK((gen(4, 1) * gen(4, 2)).is_even());
    CHECK(!gen(4, 1).is_even());
    CHECK(GrassmannElement::unit(2).is_even());
}
