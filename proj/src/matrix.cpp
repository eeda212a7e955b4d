#include "crmoser/matrix.hpp"

#include <stdexcept>
#include <utility>

namespace crmoser {

CMatrix::CMatrix(std::initializer_list<std::initializer_list<GaussianRational>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw std::invalid_argument("ragged matrix literal");
        data_.insert(data_.end(), r.begin(), r.end());
    }
}

CMatrix CMatrix::identity(std::size_t n) {
    CMatrix m(n, n);
    for (std::size_t k = 0; k < n; ++k) m(k, k) = 1;
    return m;
}

CMatrix CMatrix::diagonal(const CVector& d) {
    CMatrix m(d.size(), d.size());
    for (std::size_t k = 0; k < d.size(); ++k) m(k, k) = d[k];
    return m;
}

CMatrix CMatrix::transpose() const {
    CMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

CMatrix CMatrix::conj() const {
    CMatrix t(*this);
    for (auto& z : t.data_) z = z.conj();
    return t;
}

bool CMatrix::is_zero() const {
    for (const auto& z : data_)
        if (!z.is_zero()) return false;
    return true;
}

bool CMatrix::is_identity() const { return is_square() && *this == identity(rows_); }

GaussianRational CMatrix::determinant() const {
    if (!is_square()) throw std::invalid_argument("determinant of a non-square matrix");
    CMatrix a(*this);
    GaussianRational det(1);
    const std::size_t n = rows_;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a(piv, col).is_zero()) ++piv;
        if (piv == n) return GaussianRational(0);
        if (piv != col) {
            for (std::size_t c = 0; c < n; ++c) std::swap(a(piv, c), a(col, c));
            det = -det;
        }
        det *= a(col, col);
        GaussianRational inv = a(col, col).inverse();
        for (std::size_t r = col + 1; r < n; ++r) {
            if (a(r, col).is_zero()) continue;
            GaussianRational f = a(r, col) * inv;
            for (std::size_t c = col; c < n; ++c) a(r, c) -= f * a(col, c);
        }
    }
    return det;
}

CMatrix CMatrix::inverse() const {
    if (!is_square()) throw std::invalid_argument("inverse of a non-square matrix");
    const std::size_t n = rows_;
    CMatrix a(*this);
    CMatrix inv = identity(n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a(piv, col).is_zero()) ++piv;
        if (piv == n) throw std::domain_error("matrix is singular");
        if (piv != col) {
            for (std::size_t c = 0; c < n; ++c) {
                std::swap(a(piv, c), a(col, c));
                std::swap(inv(piv, c), inv(col, c));
            }
        }
        GaussianRational s = a(col, col).inverse();
        for (std::size_t c = 0; c < n; ++c) {
            a(col, c) *= s;
            inv(col, c) *= s;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || a(r, col).is_zero()) continue;
            GaussianRational f = a(r, col);
            for (std::size_t c = 0; c < n; ++c) {
                a(r, c) -= f * a(col, c);
                inv(r, c) -= f * inv(col, c);
            }
        }
    }
    return inv;
}

CVector CMatrix::apply(const CVector& v) const {
    if (v.size() != cols_) throw std::invalid_argument("matrix-vector dimension mismatch");
    CVector out(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            if (!(*this)(r, c).is_zero() && !v[c].is_zero()) out[r] += (*this)(r, c) * v[c];
    return out;
}

CMatrix& CMatrix::operator+=(const CMatrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix sum dimension mismatch");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
    return *this;
}

CMatrix& CMatrix::operator-=(const CMatrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix difference dimension mismatch");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
    return *this;
}

CMatrix& CMatrix::operator*=(const GaussianRational& s) {
    for (auto& z : data_) z *= s;
    return *this;
}

CMatrix operator*(const CMatrix& a, const CMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product dimension mismatch");
    CMatrix p(a.rows_, b.cols_);
    for (std::size_t r = 0; r < a.rows_; ++r)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const auto& x = a(r, k);
            if (x.is_zero()) continue;
            for (std::size_t c = 0; c < b.cols_; ++c)
                if (!b(k, c).is_zero()) p(r, c) += x * b(k, c);
        }
    return p;
}

void QMatrix::append_row(const std::vector<Rational>& row) {
    if (rows_ == 0 && cols_ == 0) cols_ = row.size();
    if (row.size() != cols_) throw std::invalid_argument("row length mismatch");
    data_.insert(data_.end(), row.begin(), row.end());
    ++rows_;
}

std::vector<std::size_t> QMatrix::rref() {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
        // smallest-index nonzero pivot
        std::size_t piv = row;
        while (piv < rows_ && sgn((*this)(piv, col)) == 0) ++piv;
        if (piv == rows_) continue;
        if (piv != row)
            for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(piv, c), (*this)(row, c));
        Rational inv = 1 / (*this)(row, col);
        for (std::size_t c = col; c < cols_; ++c) (*this)(row, c) *= inv;
        for (std::size_t r = 0; r < rows_; ++r) {
            if (r == row || sgn((*this)(r, col)) == 0) continue;
            Rational f = (*this)(r, col);
            for (std::size_t c = col; c < cols_; ++c)
                if (sgn((*this)(row, c)) != 0) (*this)(r, c) -= f * (*this)(row, c);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

std::size_t QMatrix::rank() const {
    QMatrix copy(*this);
    return copy.rref().size();
}

std::vector<std::vector<Rational>> QMatrix::nullspace() const {
    QMatrix red(*this);
    auto pivots = red.rref();
    std::vector<bool> is_pivot(cols_, false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<std::vector<Rational>> basis;
    for (std::size_t free = 0; free < cols_; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rational> v(cols_);
        v[free] = 1;
        for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -red(k, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace crmoser
