#include "berezin/matrix.hpp"

#include "berezin/errors.hpp"

namespace berezin {

PolyMatrix::PolyMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw shape_error("negative matrix dimension");
    data_.resize(static_cast<size_t>(rows) * cols);
}

PolyMatrix PolyMatrix::identity(int n) {
    PolyMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = MultiPoly(1);
    return m;
}

PolyMatrix PolyMatrix::operator-(const PolyMatrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
        throw shape_error("matrix subtraction: shape mismatch");
    PolyMatrix r(rows_, cols_);
    for (size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] - rhs.data_[i];
    return r;
}

PolyMatrix PolyMatrix::operator*(const PolyMatrix& rhs) const {
    if (cols_ != rhs.rows_) throw shape_error("matrix product: shape mismatch");
    PolyMatrix r(rows_, rhs.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const MultiPoly& aik = at(i, k);
            if (aik.is_zero()) continue;
            for (int j = 0; j < rhs.cols_; ++j) r.at(i, j) += aik * rhs.at(k, j);
        }
    return r;
}

bool PolyMatrix::operator==(const PolyMatrix& rhs) const {
    return rows_ == rhs.rows_ && cols_ == rhs.cols_ && data_ == rhs.data_;
}

namespace {
std::vector<int> complement(const std::vector<int>& idx, int n) {
    std::vector<int> out;
    size_t k = 0;
    for (int i = 0; i < n; ++i) {
        if (k < idx.size() && idx[k] == i)
            ++k;
        else
            out.push_back(i);
    }
    return out;
}
} // namespace

PolyMatrix PolyMatrix::without(const std::vector<int>& rows,
                               const std::vector<int>& cols) const {
    return select(complement(rows, rows_), complement(cols, cols_));
}

PolyMatrix PolyMatrix::select(const std::vector<int>& rows,
                              const std::vector<int>& cols) const {
    PolyMatrix r(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < cols.size(); ++j) {
            if (rows[i] < 0 || rows[i] >= rows_ || cols[j] < 0 || cols[j] >= cols_)
                throw argument_error("matrix select: index out of range");
            r.at(static_cast<int>(i), static_cast<int>(j)) = at(rows[i], cols[j]);
        }
    return r;
}

MultiPoly det_cofactor(const PolyMatrix& m) {
    if (m.rows() != m.cols()) throw shape_error("determinant of a non-square matrix");
    const int n = m.rows();
    if (n == 0) return MultiPoly(1);
    if (n == 1) return m.at(0, 0);
    MultiPoly acc;
    for (int j = 0; j < n; ++j) {
        if (m.at(0, j).is_zero()) continue;
        MultiPoly sub = m.at(0, j) * det_cofactor(m.without({0}, {j}));
        if (j % 2 == 0)
            acc += sub;
        else
            acc -= sub;
    }
    return acc;
}

MultiPoly det_bareiss(const PolyMatrix& m) {
    if (m.rows() != m.cols()) throw shape_error("determinant of a non-square matrix");
    const int n = m.rows();
    if (n == 0) return MultiPoly(1);
    PolyMatrix w = m;
    int sign = 1;
    MultiPoly prev(1);
    for (int k = 0; k < n - 1; ++k) {
        if (w.at(k, k).is_zero()) {
            int p = -1;
            for (int i = k + 1; i < n; ++i)
                if (!w.at(i, k).is_zero()) {
                    p = i;
                    break;
                }
            if (p < 0) return MultiPoly(); // whole column zero
            for (int j = 0; j < n; ++j) std::swap(w.at(k, j), w.at(p, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                MultiPoly num = w.at(i, j) * w.at(k, k) - w.at(i, k) * w.at(k, j);
                w.at(i, j) = num.is_zero() ? MultiPoly() : divexact(num, prev);
            }
            w.at(i, k) = MultiPoly();
        }
        prev = w.at(k, k);
    }
    MultiPoly d = w.at(n - 1, n - 1);
    if (sign < 0) d = -d;
    return d;
}

MultiPoly det_poly(const PolyMatrix& m) {
    if (m.rows() != m.cols()) throw shape_error("determinant of a non-square matrix");
    return m.rows() <= 4 ? det_cofactor(m) : det_bareiss(m);
}

PolyMatrix adjugate(const PolyMatrix& m) {
    if (m.rows() != m.cols()) throw shape_error("adjugate of a non-square matrix");
    const int n = m.rows();
    PolyMatrix adj(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            MultiPoly c = det_poly(m.without({j}, {i}));
            adj.at(i, j) = ((i + j) % 2 == 0) ? c : -c;
        }
    return adj;
}

RationalMatrix::RationalMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw shape_error("negative matrix dimension");
    data_.resize(static_cast<size_t>(rows) * cols, Rational(0));
}

RationalMatrix RationalMatrix::identity(int n) {
    RationalMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& rhs) const {
    if (cols_ != rhs.rows_) throw shape_error("matrix product: shape mismatch");
    RationalMatrix r(rows_, rhs.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Rational& aik = at(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < rhs.cols_; ++j) r.at(i, j) += aik * rhs.at(k, j);
        }
    return r;
}

RationalMatrix RationalMatrix::operator-(const RationalMatrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
        throw shape_error("matrix subtraction: shape mismatch");
    RationalMatrix r(rows_, cols_);
    for (size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] - rhs.data_[i];
    return r;
}

bool RationalMatrix::operator==(const RationalMatrix& rhs) const {
    return rows_ == rhs.rows_ && cols_ == rhs.cols_ && data_ == rhs.data_;
}

RationalMatrix RationalMatrix::select(const std::vector<int>& rows,
                                      const std::vector<int>& cols) const {
    RationalMatrix r(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < cols.size(); ++j) {
            if (rows[i] < 0 || rows[i] >= rows_ || cols[j] < 0 || cols[j] >= cols_)
                throw argument_error("matrix select: index out of range");
            r.at(static_cast<int>(i), static_cast<int>(j)) = at(rows[i], cols[j]);
        }
    return r;
}

Rational RationalMatrix::det() const {
    if (rows_ != cols_) throw shape_error("determinant of a non-square matrix");
    const int n = rows_;
    RationalMatrix w = *this;
    Rational d(1);
    for (int k = 0; k < n; ++k) {
        int p = -1;
        for (int i = k; i < n; ++i)
            if (w.at(i, k) != 0) {
                p = i;
                break;
            }
        if (p < 0) return Rational(0);
        if (p != k) {
            for (int j = k; j < n; ++j) std::swap(w.at(k, j), w.at(p, j));
            d = -d;
        }
        d *= w.at(k, k);
        for (int i = k + 1; i < n; ++i) {
            if (w.at(i, k) == 0) continue;
            Rational f = w.at(i, k) / w.at(k, k);
            for (int j = k; j < n; ++j) w.at(i, j) -= f * w.at(k, j);
        }
    }
    return d;
}

RationalMatrix RationalMatrix::inverse() const {
    if (rows_ != cols_) throw shape_error("inverse of a non-square matrix");
    const int n = rows_;
    RationalMatrix w = *this;
    RationalMatrix inv = identity(n);
    for (int k = 0; k < n; ++k) {
        int p = -1;
        for (int i = k; i < n; ++i)
            if (w.at(i, k) != 0) {
                p = i;
                break;
            }
        if (p < 0) throw singular_error("matrix is singular");
        if (p != k)
            for (int j = 0; j < n; ++j) {
                std::swap(w.at(k, j), w.at(p, j));
                std::swap(inv.at(k, j), inv.at(p, j));
            }
        Rational piv = w.at(k, k);
        for (int j = 0; j < n; ++j) {
            w.at(k, j) /= piv;
            inv.at(k, j) /= piv;
        }
        for (int i = 0; i < n; ++i) {
            if (i == k || w.at(i, k) == 0) continue;
            Rational f = w.at(i, k);
            for (int j = 0; j < n; ++j) {
                w.at(i, j) -= f * w.at(k, j);
                inv.at(i, j) -= f * inv.at(k, j);
            }
        }
    }
    return inv;
}

} // namespace berezin
