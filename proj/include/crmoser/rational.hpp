#pragma once

#include <gmpxx.h>

#include <optional>
#include <ostream>
#include <string>

namespace crmoser {

// Arbitrary precision rational, always canonical (reduced, positive denominator).
using Rational = mpq_class;

Rational parse_rational(const std::string& text);
std::string to_string(const Rational& q);

// Exact square root when q is the square of a rational.
std::optional<Rational> rational_sqrt(const Rational& q);

// Exact value of base^(num/den) when it is rational; base > 0.
std::optional<Rational> rational_power(const Rational& base, const Rational& exponent);

inline int sign(const Rational& q) { return sgn(q); }

/// Element of Q(i).
class GaussianRational {
public:
    GaussianRational() = default;
    GaussianRational(Rational re) : re_(std::move(re)) {}
    GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}
    GaussianRational(long v) : re_(v) {}
    GaussianRational(int v) : re_(v) {}

    static GaussianRational i() { return {0, 1}; }

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }

    bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_real() const { return sgn(im_) == 0; }

    GaussianRational conj() const { return {re_, -im_}; }
    Rational norm() const { return re_ * re_ + im_ * im_; }
    GaussianRational inverse() const;

    GaussianRational& operator+=(const GaussianRational& o) {
        re_ += o.re_;
        im_ += o.im_;
        return *this;
    }
    GaussianRational& operator-=(const GaussianRational& o) {
        re_ -= o.re_;
        im_ -= o.im_;
        return *this;
    }
    GaussianRational& operator*=(const GaussianRational& o);
    GaussianRational& operator/=(const GaussianRational& o) { return *this *= o.inverse(); }

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
    GaussianRational operator-() const { return {-re_, -im_}; }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

    std::string to_string() const;

private:
    Rational re_{0};
    Rational im_{0};
};

std::ostream& operator<<(std::ostream& os, const GaussianRational& z);

}  // namespace crmoser
