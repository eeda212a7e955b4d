#pragma once

#include "crmoser/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <vector>

namespace crmoser {

using CVector = std::vector<GaussianRational>;

/// Dense row-major matrix over Q(i).
class CMatrix {
public:
    CMatrix() = default;
    CMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    CMatrix(std::initializer_list<std::initializer_list<GaussianRational>> rows);

    static CMatrix identity(std::size_t n);
    static CMatrix diagonal(const CVector& d);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    GaussianRational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const GaussianRational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    CMatrix transpose() const;
    CMatrix conj() const;
    CMatrix adjoint() const { return transpose().conj(); }

    bool is_zero() const;
    bool is_identity() const;

    GaussianRational determinant() const;
    // Throws std::domain_error when singular.
    CMatrix inverse() const;

    CVector apply(const CVector& v) const;

    CMatrix& operator+=(const CMatrix& o);
    CMatrix& operator-=(const CMatrix& o);
    CMatrix& operator*=(const GaussianRational& s);

    friend CMatrix operator+(CMatrix a, const CMatrix& b) { return a += b; }
    friend CMatrix operator-(CMatrix a, const CMatrix& b) { return a -= b; }
    friend CMatrix operator*(CMatrix a, const GaussianRational& s) { return a *= s; }
    friend CMatrix operator*(const GaussianRational& s, CMatrix a) { return a *= s; }
    friend CMatrix operator*(const CMatrix& a, const CMatrix& b);
    CMatrix operator-() const { return *this * GaussianRational(-1); }

    friend bool operator==(const CMatrix& a, const CMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }
    friend bool operator!=(const CMatrix& a, const CMatrix& b) { return !(a == b); }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<GaussianRational> data_;
};

/// Dense row-major matrix over Q, used for the real-coordinate linear systems.
class QMatrix {
public:
    QMatrix() = default;
    QMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    void append_row(const std::vector<Rational>& row);

    // In-place reduced row echelon form; returns the pivot columns.
    std::vector<std::size_t> rref();
    std::size_t rank() const;

    // Basis of {x : A x = 0}, one vector per free column, with a 1 in that column.
    std::vector<std::vector<Rational>> nullspace() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

}  // namespace crmoser
