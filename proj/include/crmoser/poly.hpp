#pragma once

#include "crmoser/matrix.hpp"
#include "crmoser/rational.hpp"

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

namespace crmoser {

inline constexpr std::size_t kMaxDim = 8;

/// Exponent vector for z_1..z_n, zbar_1..zbar_n and one extra variable.
///
/// The extra slot is u for functions on a hypersurface and w for holomorphic
/// map components. Storage order is (extra, z, zbar), so comparing the raw arrays
/// gives the canonical (uExp, zExp, zbarExp) lexicographic order.
class Monomial {
public:
    Monomial() { exps_.fill(0); }

    unsigned z(std::size_t a) const { return exps_[1 + a]; }
    unsigned zbar(std::size_t a) const { return exps_[1 + kMaxDim + a]; }
    unsigned u() const { return exps_[0]; }

    void set_z(std::size_t a, unsigned e) { exps_[1 + a] = narrow(e); }
    void set_zbar(std::size_t a, unsigned e) { exps_[1 + kMaxDim + a] = narrow(e); }
    void set_u(unsigned e) { exps_[0] = narrow(e); }

    unsigned z_degree() const;
    unsigned zbar_degree() const;
    unsigned weight() const { return z_degree() + zbar_degree() + 2 * u(); }

    // z <-> zbar
    Monomial swapped() const;

    friend Monomial operator*(const Monomial& a, const Monomial& b);
    friend bool operator<(const Monomial& a, const Monomial& b) { return a.exps_ < b.exps_; }
    friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps_ == b.exps_; }
    friend bool operator!=(const Monomial& a, const Monomial& b) { return a.exps_ != b.exps_; }

    std::size_t hash() const;

private:
    static std::uint8_t narrow(unsigned e);
    std::array<std::uint8_t, 1 + 2 * kMaxDim> exps_;
};

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

/// Variable selector for formal differentiation.
struct Var {
    enum class Kind { Z, Zbar, U };
    Kind kind;
    std::size_t index = 0;  // zero-based, ignored for U

    static Var z(std::size_t a) { return {Kind::Z, a}; }
    static Var zbar(std::size_t a) { return {Kind::Zbar, a}; }
    static Var u() { return {Kind::U, 0}; }
};

/// Sparse polynomial in z, zbar and u (or w) with coefficients in Q(i).
///
/// Zero coefficients are never stored, so the zero polynomial is the empty map.
class Poly {
public:
    using TermMap = std::map<Monomial, GaussianRational>;

    Poly() = default;
    explicit Poly(std::size_t n);

    static Poly constant(std::size_t n, const GaussianRational& c);
    static Poly z(std::size_t n, std::size_t a);
    static Poly zbar(std::size_t n, std::size_t a);
    static Poly u(std::size_t n);
    static Poly monomial(std::size_t n, const Monomial& m, const GaussianRational& c);

    std::size_t n() const { return n_; }
    const TermMap& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    GaussianRational coefficient(const Monomial& m) const;
    void add_term(const Monomial& m, const GaussianRational& c);

    // swap z and zbar, conjugate every coefficient
    Poly conj() const;
    bool is_real() const { return *this == conj(); }
    Poly real_part() const;  // (P + conj P) / 2
    Poly imag_part() const;  // (P - conj P) / 2i

    // Smallest / largest weight; 0 for the zero polynomial.
    unsigned min_weight() const;
    unsigned max_weight() const;
    unsigned max_u_degree() const;

    Poly truncated(unsigned max_weight) const;
    Poly weight_component(unsigned j) const;
    Poly bidegree_component(unsigned k, unsigned l) const;
    // Coefficient polynomial of u^r (u removed).
    Poly u_coefficient(unsigned r) const;

    Poly partial(Var v) const;
    Poly mul_u_power(unsigned r) const;

    // Terms whose monomial satisfies keep.
    Poly filtered(const std::function<bool(const Monomial&)>& keep) const;

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const GaussianRational& s);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(Poly a, const GaussianRational& s) { return a *= s; }
    friend Poly operator*(const GaussianRational& s, Poly a) { return a *= s; }
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly operator-() const;

    friend bool operator==(const Poly& a, const Poly& b) { return a.n_ == b.n_ && a.terms_ == b.terms_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    std::string to_string() const;

private:
    std::size_t n_ = 0;
    TermMap terms_;
};

// Product keeping only terms of weight <= max_weight.
Poly mul_truncated(const Poly& a, const Poly& b, unsigned max_weight);
Poly pow_truncated(const Poly& p, unsigned k, unsigned max_weight);
Poly pow(const Poly& p, unsigned k);

/// Successive truncated powers p^0 .. p^k, computed lazily.
class PowerCache {
public:
    PowerCache(Poly base, unsigned max_weight);
    const Poly& operator[](unsigned k);

private:
    Poly base_;
    unsigned max_weight_;
    std::vector<Poly> powers_;
};

/// Polynomial satisfying coefficient(a, b, r) = conj(coefficient(b, a, r)).
class RealPoly {
public:
    RealPoly() = default;
    explicit RealPoly(std::size_t n) : p_(n) {}
    // Throws std::invalid_argument if p is not real.
    explicit RealPoly(Poly p);

    const Poly& poly() const { return p_; }
    std::size_t n() const { return p_.n(); }
    bool is_zero() const { return p_.is_zero(); }

    RealPoly& operator+=(const RealPoly& o) {
        p_ += o.p_;
        return *this;
    }
    RealPoly& operator-=(const RealPoly& o) {
        p_ -= o.p_;
        return *this;
    }
    friend RealPoly operator+(RealPoly a, const RealPoly& b) { return a += b; }
    friend RealPoly operator-(RealPoly a, const RealPoly& b) { return a -= b; }
    friend RealPoly operator*(const RealPoly& a, const RealPoly& b);
    friend RealPoly operator*(const Rational& s, const RealPoly& a);

    friend bool operator==(const RealPoly& a, const RealPoly& b) { return a.p_ == b.p_; }
    friend bool operator!=(const RealPoly& a, const RealPoly& b) { return a.p_ != b.p_; }

private:
    struct Trusted {};
    RealPoly(Poly p, Trusted) : p_(std::move(p)) {}
    friend RealPoly trusted_real(Poly p);

    Poly p_;
};

// For results real by construction (e.g. P + conj P); skips the symmetry check.
RealPoly trusted_real(Poly p);

// Sum of the terms with |zExp| = k and |zbarExp| = l.
Poly bidegree_component(const RealPoly& p, unsigned k, unsigned l);

// Weight grading with z, zbar of weight 1 and u of weight 2.
std::map<unsigned, RealPoly> weight_decompose(const RealPoly& p);

// P(Az, conj(A) zbar, u_scale * u).
Poly substitute_linear(const Poly& p, const CMatrix& a, const Rational& u_scale);
RealPoly substitute_linear(const RealPoly& p, const CMatrix& a, const Rational& u_scale);

Poly partial(const RealPoly& p, Var v);

}  // namespace crmoser
