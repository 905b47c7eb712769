#ifndef BEREZIN_MATRIX_HPP
#define BEREZIN_MATRIX_HPP

#include <vector>

#include "berezin/multipoly.hpp"

namespace berezin {

// Dense matrix of MultiPoly entries.
class PolyMatrix {
public:
    PolyMatrix() = default;
    PolyMatrix(int rows, int cols);

    static PolyMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    MultiPoly& at(int r, int c) { return data_[static_cast<size_t>(r) * cols_ + c]; }
    const MultiPoly& at(int r, int c) const {
        return data_[static_cast<size_t>(r) * cols_ + c];
    }

    PolyMatrix operator-(const PolyMatrix& rhs) const;
    PolyMatrix operator*(const PolyMatrix& rhs) const;
    bool operator==(const PolyMatrix& rhs) const;

    // Matrix with the listed rows and columns removed (0-based, strictly
    // increasing).
    PolyMatrix without(const std::vector<int>& rows, const std::vector<int>& cols) const;
    // Matrix restricted to the listed rows and columns (0-based).
    PolyMatrix select(const std::vector<int>& rows, const std::vector<int>& cols) const;

private:
    int rows_ = 0, cols_ = 0;
    std::vector<MultiPoly> data_;
};

// Laplace expansion along the first row. Exponential, but trustworthy; this
// is the oracle the fraction-free path is tested against.
MultiPoly det_cofactor(const PolyMatrix& m);

// Fraction-free (Bareiss) elimination; every division is exact.
MultiPoly det_bareiss(const PolyMatrix& m);

// Cofactor expansion for n <= 4, Bareiss for larger matrices.
MultiPoly det_poly(const PolyMatrix& m);

// adj(m), so that m * adj(m) = det(m) * Id.
PolyMatrix adjugate(const PolyMatrix& m);

// Dense matrix of exact rationals.
class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(int rows, int cols);

    static RationalMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rational& at(int r, int c) { return data_[static_cast<size_t>(r) * cols_ + c]; }
    const Rational& at(int r, int c) const {
        return data_[static_cast<size_t>(r) * cols_ + c];
    }

    RationalMatrix operator*(const RationalMatrix& rhs) const;
    RationalMatrix operator-(const RationalMatrix& rhs) const;
    bool operator==(const RationalMatrix& rhs) const;

    RationalMatrix select(const std::vector<int>& rows, const std::vector<int>& cols) const;

    Rational det() const;
    // Exact inverse; throws singular_error when det = 0.
    RationalMatrix inverse() const;

private:
    int rows_ = 0, cols_ = 0;
    std::vector<Rational> data_;
};

} // namespace berezin

#endif
