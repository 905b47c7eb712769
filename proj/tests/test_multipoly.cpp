#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "berezin/multipoly.hpp"
#include "berezin/rng.hpp"

using namespace berezin;

namespace {

MultiPoly var(const std::string& n) { return MultiPoly::variable(n); }

MultiPoly random_poly(Rng& rng, const std::vector<std::string>& vars, int max_terms) {
    MultiPoly p;
    int terms = rng.uniform_int(0, max_terms);
    for (int t = 0; t < terms; ++t) {
        std::vector<int> exps;
        for (size_t i = 0; i < vars.size(); ++i) exps.push_back(rng.uniform_int(0, 3));
        int c = rng.uniform_int(-5, 5);
        if (c == 0) c = 1;
        p += MultiPoly::term(Rational(c), vars, exps);
    }
    return p;
}

} // namespace

TEST_CASE("rational parsing and rendering") {
    CHECK(parse_rational("3") == Rational(3));
    CHECK(parse_rational("-3/4") == Rational(-3, 4));
    CHECK(parse_rational("6/4") == Rational(3, 2)); // canonicalized
    CHECK(rational_str(Rational(-3, 4)) == "-3/4");
    CHECK(rational_str(Rational(5)) == "5");
    CHECK_THROWS_AS(parse_rational("1/0"), argument_error);
    CHECK_THROWS_AS(parse_rational("x"), argument_error);
    CHECK_THROWS_AS(parse_rational("1.5"), argument_error);
}

TEST_CASE("variable ordering: parameters, lattice, weights, rest") {
    CHECK(variable_less("a", "b"));
    CHECK(variable_less("a", "x1"));
    CHECK(variable_less("b", "x1"));
    CHECK(variable_less("x1", "x2"));
    CHECK(variable_less("x2", "x10")); // numeric, not lexicographic
    CHECK(variable_less("x3", "w_1_2_1"));
    CHECK(variable_less("w_1_2_1", "w_1_10_1"));
    CHECK(variable_less("w_9_9_9", "m_1_1"));
    CHECK(variable_less("w_1_1_1", "u"));
}

TEST_CASE("arithmetic examples") {
    CHECK((var("x1") + var("x2")).str() == "x1 + x2");
    CHECK((var("x1") + var("x2")) * (var("x1") - var("x2")) ==
          poly_pow(var("x1"), 2) - poly_pow(var("x2"), 2));
    MultiPoly a = var("a");
    MultiPoly cube = poly_pow(MultiPoly(1) + a, 3);
    MultiPoly expect = MultiPoly(1) + Rational(3) * a + Rational(3) * poly_pow(a, 2) +
                       poly_pow(a, 3);
    CHECK(cube == expect);
    CHECK(cube.str() == "a^3 + 3*a^2 + 3*a + 1");
}

TEST_CASE("evaluation examples and errors") {
    MultiPoly p = poly_pow(var("x1"), 2) + var("x2");
    std::map<std::string, Rational> pt{{"x1", Rational(2)}, {"x2", Rational(3)}};
    CHECK(p.eval(pt) == Rational(7));
    CHECK(MultiPoly(5).eval({}) == Rational(5));
    MultiPoly ax = var("a") * var("x1");
    CHECK(ax.eval({{"a", Rational(1, 2)}, {"x1", Rational(4)}}) == Rational(2));
    CHECK_THROWS_AS(p.eval({{"x1", Rational(1)}}), evaluation_error);
}

TEST_CASE("canonical rendering") {
    MultiPoly a = var("a"), x1 = var("x1");
    MultiPoly p = Rational(1, 3) * poly_pow(a, 3) * poly_pow(x1, 3) -
                  Rational(1, 3) * a * poly_pow(x1, 3);
    CHECK(p.str() == "1/3*a^3*x1^3 - 1/3*a*x1^3");
    CHECK(MultiPoly().str() == "0");
    CHECK(MultiPoly(-7).str() == "-7");
    CHECK((-(var("x1")) + var("x2")).str() == "-x1 + x2");
    MultiPoly q = poly_pow(var("x1"), 2) * var("x2") + var("x1") * poly_pow(var("x2"), 2);
    CHECK(q.str() == "x1^2*x2 + x1*x2^2");
}

TEST_CASE("zero and constant handling stays canonical") {
    MultiPoly x = var("x1");
    MultiPoly z = x - x;
    CHECK(z.is_zero());
    CHECK(z.vars().empty()); // unused variables are pruned
    CHECK(z == MultiPoly());
    MultiPoly c = (x + MultiPoly(1)) - x;
    CHECK(c.is_constant());
    CHECK(c.constant_value() == Rational(1));
}

TEST_CASE("ring properties on random polynomials") {
    Rng rng(20240817);
    std::vector<std::string> vars{"a", "x1", "x2"};
    for (int t = 0; t < 50; ++t) {
        MultiPoly p = random_poly(rng, vars, 4);
        MultiPoly q = random_poly(rng, vars, 4);
        MultiPoly r = random_poly(rng, vars, 4);
        CHECK(p + q == q + p);
        CHECK(p * q == q * p);
        CHECK((p + q) + r == p + (q + r));
        CHECK((p * q) * r == p * (q * r));
        CHECK(p * (q + r) == p * q + p * r);
    }
}

TEST_CASE("evaluation is a ring homomorphism") {
    Rng rng(7);
    std::vector<std::string> vars{"x1", "x2", "u"};
    for (int t = 0; t < 30; ++t) {
        MultiPoly p = random_poly(rng, vars, 4);
        MultiPoly q = random_poly(rng, vars, 4);
        auto pt = rng.sample_point(vars);
        CHECK((p * q).eval(pt) == p.eval(pt) * q.eval(pt));
        CHECK((p + q).eval(pt) == p.eval(pt) + q.eval(pt));
    }
}

TEST_CASE("alignment across different variable universes") {
    MultiPoly p = var("x1") + var("w_1_2_1");
    MultiPoly q = var("a") * var("x1");
    MultiPoly s = p + q;
    CHECK(s.vars() == std::vector<std::string>{"a", "x1", "w_1_2_1"});
    CHECK(s == q + p);
}

TEST_CASE("exact division") {
    Rng rng(99);
    std::vector<std::string> vars{"x1", "x2"};
    for (int t = 0; t < 30; ++t) {
        MultiPoly p = random_poly(rng, vars, 3);
        MultiPoly q = random_poly(rng, vars, 3);
        if (q.is_zero()) continue;
        CHECK(divexact(p * q, q) == p);
    }
    CHECK_THROWS_AS(divexact(var("x1") + MultiPoly(1), var("x2")), evaluation_error);
    CHECK_THROWS_AS(divexact(var("x1"), MultiPoly()), singular_error);
}

TEST_CASE("degrees") {
    MultiPoly p = poly_pow(var("x1"), 3) * var("a") + var("x2");
    CHECK(p.total_degree() == 4);
    CHECK(p.degree_in("x1") == 3);
    CHECK(p.degree_in("x2") == 1);
    CHECK(p.degree_in("zz") == 0);
    CHECK(MultiPoly().total_degree() == -1);
}
