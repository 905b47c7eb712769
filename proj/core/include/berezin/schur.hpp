#ifndef BEREZIN_SCHUR_HPP
#define BEREZIN_SCHUR_HPP

#include <string>
#include <vector>

#include "berezin/multipoly.hpp"
#include "berezin/partition.hpp"

namespace berezin {

// x1..xn
std::vector<std::string> lattice_variables(int nvars);

// Tableau sum: for every semistandard filling, the product of x_m^(number
// of m's in the filling). The independent combinatorial route to a skew
// Schur polynomial.
MultiPoly schur_ssyt(const SkewShape& shape, int nvars);
MultiPoly schur_ssyt(const SkewShape& shape, const std::vector<std::string>& vars);

// Complete homogeneous polynomial h_k: the sum of all degree-k monomials.
// h_0 = 1, h_k = 0 for k < 0.
MultiPoly complete_homogeneous(int k, int nvars);
MultiPoly complete_homogeneous(int k, const std::vector<std::string>& vars);

// One-parameter family S_k(a, x): each monomial x^(k_1..k_n) carries the
// coefficient prod_m a(a+1)...(a+k_m-1) / k_m!. The parameter is passed as
// a polynomial so symbolic a, numeric a, and a+b all go through one code
// path. S_0 = 1, S_k = 0 for k < 0; S_k(1, x) = h_k(x).
MultiPoly ext_complete(int k, const MultiPoly& param, int nvars);
MultiPoly ext_complete(int k, const MultiPoly& param,
                       const std::vector<std::string>& vars);

// r x r determinant det(gen_{lambda_j - mu_i + i - j}) with r = rows of the
// outer partition; gen is h_* or S_*(param).
MultiPoly jacobi_trudi_h(const SkewShape& shape, int nvars);
MultiPoly jacobi_trudi_h(const SkewShape& shape, const std::vector<std::string>& vars);
MultiPoly jacobi_trudi_ext(const SkewShape& shape, const MultiPoly& param, int nvars);

struct IdentityReport {
    bool pass = false;
    std::string detail;
};

// s_{lambda/mu}(a+b, x) = sum over nu between mu and lambda of
// s_{lambda/nu}(a, x) * s_{nu/mu}(b, x), with a and b independent symbolic
// variables; also checks the kernel identity
// S_k(a+b) = sum_{p+q=k} S_p(a) S_q(b) for k <= 2|lambda|.
IdentityReport convolution_check(const SkewShape& shape, int nvars);

// s_{lambda/mu}(x_1..x_n) = sum over nu of s_{lambda/nu}(x_{k+1}..x_n) *
// s_{nu/mu}(x_1..x_k), checked against the tableau sum; both variable-split
// orders are verified (the polynomials are symmetric).
IdentityReport vertical_split_check(const SkewShape& shape, int nvars, int split);

// s_{lambda*/mu*}(a, x) = (-1)^(|lambda|-|mu|) s_{lambda/mu}(-a, x) with
// symbolic a.
IdentityReport conjugate_check(const SkewShape& shape, int nvars);

// Smallest translation l that keeps every start coordinate mu_i - i + l
// positive (l = rows + 1), and a window just wide enough for the end
// coordinates plus one column of slack (L = lambda_1 + l).
int default_translation(const SkewShape& shape);
int default_width(const SkewShape& shape, int translation);

// Signed weighted sum over non-intersecting lattice path systems
// P_i: (mu_i - i + l, 1) -> (lambda_i - i + l, n) on the n-layer chained
// lattice whose layer matrices realize (1 - x_m T)^param on a width-L
// window (T = right shift, nilpotent there, so the binomial expansion is
// exact). A horizontal jump of length d in layer m carries the weight
// (-1)^(d+1) * param(param-1)...(param-d+1)/d! * x_m^d. Equals
// jacobi_trudi_ext(shape, param, nvars) (tested); throws truncation_error
// when an endpoint falls outside 1..L.
MultiPoly lattice_path_schur(const SkewShape& shape, const MultiPoly& param,
                             int nvars, int translation, int width);

} // namespace berezin

#endif
