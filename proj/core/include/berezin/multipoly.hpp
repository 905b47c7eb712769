#ifndef BEREZIN_MULTIPOLY_HPP
#define BEREZIN_MULTIPOLY_HPP

#include <map>
#include <string>
#include <vector>

#include "berezin/rational.hpp"

namespace berezin {

// Canonical ordering of indeterminate names. Parameters come first, then
// lattice variables x1 < x2 < ..., then edge weights w_*, then everything
// else; numeric fragments inside a name compare numerically so that x2 < x10.
bool variable_less(const std::string& a, const std::string& b);

// Graded lexicographic order on exponent vectors, descending, so that a
// term map iterates leading term first.
struct GrlexDesc {
    bool operator()(const std::vector<int>& a, const std::vector<int>& b) const;
};

// Sparse exact multivariate polynomial over the rationals.
//
// Canonical form: the variable list is sorted by variable_less and contains
// only variables that actually occur with a positive exponent; no stored
// term has a zero coefficient; term keys are exponent vectors parallel to
// the variable list, kept in descending graded-lex order. Two equal
// polynomials therefore have identical representations.
class MultiPoly {
public:
    using TermMap = std::map<std::vector<int>, Rational, GrlexDesc>;

    MultiPoly() = default; // zero
    explicit MultiPoly(const Rational& c);
    explicit MultiPoly(long c);

    static MultiPoly variable(const std::string& name);
    // A single term c * prod vars[i]^exps[i].
    static MultiPoly term(const Rational& c, const std::vector<std::string>& vars,
                          const std::vector<int>& exps);

    const std::vector<std::string>& vars() const { return vars_; }
    const TermMap& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return vars_.empty(); }
    // Constant part of the polynomial (0 if none).
    Rational constant_value() const;
    int total_degree() const; // -1 for the zero polynomial
    int degree_in(const std::string& var) const;

    MultiPoly& operator+=(const MultiPoly& rhs);
    MultiPoly& operator-=(const MultiPoly& rhs);
    MultiPoly& operator*=(const MultiPoly& rhs);
    MultiPoly& operator*=(const Rational& c);
    MultiPoly operator-() const;

    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(MultiPoly a, const MultiPoly& b) { return a *= b; }
    friend MultiPoly operator*(MultiPoly a, const Rational& c) { return a *= c; }
    friend MultiPoly operator*(const Rational& c, MultiPoly a) { return a *= c; }

    bool operator==(const MultiPoly& rhs) const {
        return vars_ == rhs.vars_ && terms_ == rhs.terms_;
    }
    bool operator!=(const MultiPoly& rhs) const { return !(*this == rhs); }

    // Exact evaluation. The point must cover every variable of the
    // polynomial; extra entries are ignored. Throws evaluation_error.
    Rational eval(const std::map<std::string, Rational>& point) const;

    // Canonical text rendering, e.g. "1/3*a^3*x1^3 - 1/3*a*x1^3".
    std::string str() const;

private:
    std::vector<std::string> vars_;
    TermMap terms_;

    void normalize();
    friend MultiPoly poly_pow(const MultiPoly&, unsigned);
    friend MultiPoly divexact(const MultiPoly&, const MultiPoly&);
    friend void align(const MultiPoly& a, const MultiPoly& b,
                      std::vector<std::string>& vars, MultiPoly::TermMap& ta,
                      MultiPoly::TermMap& tb);
};

// p^e for e >= 0 (p^0 = 1).
MultiPoly poly_pow(const MultiPoly& p, unsigned e);

// Exact quotient p / q. Throws evaluation_error if the division is not
// exact and singular_error if q is zero.
MultiPoly divexact(const MultiPoly& p, const MultiPoly& q);

} // namespace berezin

#endif
