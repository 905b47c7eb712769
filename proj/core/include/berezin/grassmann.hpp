#ifndef BEREZIN_GRASSMANN_HPP
#define BEREZIN_GRASSMANN_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "berezin/matrix.hpp"

namespace berezin {

// Element of the exterior algebra on m anti-commuting generators, with
// MultiPoly coefficients. A monomial is a bitmask over generator indices
// {1..m} (bit i-1 set <=> generator i present); the bitmask IS the
// canonical strictly-increasing product, any other ordering is absorbed
// into the coefficient's sign at construction time.
class GrassmannElement {
public:
    using TermMap = std::map<std::uint64_t, MultiPoly>;

    GrassmannElement() = default; // zero element of an unsized algebra
    explicit GrassmannElement(int algebra_size);

    static GrassmannElement scalar(int algebra_size, MultiPoly c);
    static GrassmannElement unit(int algebra_size) {
        return scalar(algebra_size, MultiPoly(1));
    }
    // The generator chi_i, 1 <= i <= algebra_size.
    static GrassmannElement generator(int algebra_size, int i);

    int algebra_size() const { return size_; }
    const TermMap& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    // True when every monomial has even length (the zero element is even).
    bool is_even() const;
    MultiPoly coefficient(std::uint64_t mask) const;
    MultiPoly constant_term() const { return coefficient(0); }

    // Adds c on the canonical monomial described by the bitmask.
    void add_term(std::uint64_t mask, MultiPoly c);

    GrassmannElement& operator+=(const GrassmannElement& rhs);
    GrassmannElement& operator-=(const GrassmannElement& rhs);
    GrassmannElement& operator*=(const GrassmannElement& rhs);
    GrassmannElement& operator*=(const MultiPoly& c);
    GrassmannElement& operator*=(const Rational& c);
    GrassmannElement operator-() const;

    friend GrassmannElement operator+(GrassmannElement a, const GrassmannElement& b) {
        return a += b;
    }
    friend GrassmannElement operator-(GrassmannElement a, const GrassmannElement& b) {
        return a -= b;
    }
    friend GrassmannElement operator*(GrassmannElement a, const GrassmannElement& b) {
        return a *= b;
    }
    friend GrassmannElement operator*(const MultiPoly& c, GrassmannElement a) {
        return a *= c;
    }

    bool operator==(const GrassmannElement& rhs) const {
        return size_ == rhs.size_ && terms_ == rhs.terms_;
    }
    bool operator!=(const GrassmannElement& rhs) const { return !(*this == rhs); }

    // Monomials in bitmask order, canonical coefficient rendering.
    std::string str() const;

private:
    int size_ = 0;
    TermMap terms_;

    void insert(std::uint64_t mask, MultiPoly c);
};

// exp(f) as a terminating series; f must have zero constant term.
GrassmannElement gexp(const GrassmannElement& f);

// Integration order: the measure d chi_{measure[0]} d chi_{measure[1]} ...,
// written left to right exactly as in the integral sign; the rightmost
// factor acts first.
struct GeneratorOrder {
    std::vector<int> measure;

    // d chi_m ... d chi_1
    static GeneratorOrder descending(int m);
};

// Integrates out the listed generators only (a partial Berezin integral);
// the result lives in the same algebra but no longer involves them.
GrassmannElement integrate_partial(const GrassmannElement& f,
                                   const std::vector<int>& measure);

// Full Berezin integral: `order.measure` must be a permutation of {1..m}.
// Picks out the top monomial's coefficient with the sign induced by the
// integration order; lower monomials contribute nothing.
MultiPoly integrate(const GrassmannElement& f, const GeneratorOrder& order);

// det(M) written as a Gaussian Grassmann integral over 2N generators laid
// out as chi_1, chibar_1, ..., chi_N, chibar_N and integrated with the
// measure d chibar_N d chi_N ... d chibar_1 d chi_1.
MultiPoly berezin_det(const PolyMatrix& m);

// (-1)^{sum I + sum J} * integral of chi_J chibar_I exp(-chibar M chi),
// which equals det of M with rows I and columns J deleted. I, J are
// 1-based, strictly increasing, of equal size.
MultiPoly berezin_minor(const PolyMatrix& m, const std::vector<int>& I,
                        const std::vector<int>& J);

struct GaussianCheckReport {
    bool equal = false;
    std::string lhs; // rendering of the integrated-out left side
    std::string rhs;
    std::string mismatch; // first differing monomial, empty when equal
};

// Verifies the Gaussian integral identity
//   int d eta d etabar exp(etabar M^{-1} eta + psibar eta + etabar psi)
//     = det(M^{-1}) exp(-psibar M psi)
// symbolically, as elements of the psi-algebra. Both sides are scaled by
// det(M)^N so the whole computation stays polynomial; M may have symbolic
// entries. Throws singular_error when det(M) = 0.
GaussianCheckReport gaussian_identity_check(const PolyMatrix& m);

} // namespace berezin

#endif
