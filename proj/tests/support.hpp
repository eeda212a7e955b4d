#pragma once

// Test-side oracles and generators. Nothing here calls the library routine it is used to check.

#include "crmoser/models.hpp"

#include <cstdint>
#include <random>

namespace testing {

using namespace crmoser;

class Gen {
public:
    explicit Gen(std::uint64_t seed) : engine_(seed) {}

    long between(long lo, long hi) { return lo + long(engine_() % std::uint64_t(hi - lo + 1)); }
    bool coin() { return engine_() % 2 == 0; }

    Rational small_rational() {
        long num = between(-4, 4);
        long den = between(1, 3);
        Rational q(num, den);
        q.canonicalize();
        return q;
    }
    Rational nonzero_rational() {
        for (;;) {
            Rational q = small_rational();
            if (sgn(q) != 0) return q;
        }
    }
    GaussianRational gaussian() { return {small_rational(), small_rational()}; }
    GaussianRational nonzero_gaussian() {
        for (;;) {
            GaussianRational g = gaussian();
            if (!g.is_zero()) return g;
        }
    }
    CVector vector(std::size_t n) {
        CVector v(n);
        for (auto& x : v) x = gaussian();
        return v;
    }

    // Random real polynomial: conjugate pairs of monomials with k, l >= 2, weight <= max_weight.
    RealPoly real_poly(std::size_t n, unsigned max_weight, std::size_t pairs) {
        Poly p(n);
        for (std::size_t t = 0; t < pairs; ++t) {
            unsigned k = unsigned(between(2, max_weight - 2));
            unsigned l = unsigned(between(2, max_weight - k));
            unsigned r = unsigned(between(0, (max_weight - k - l) / 2));
            Monomial m;
            std::vector<unsigned> za(n, 0), zb(n, 0);
            for (unsigned i = 0; i < k; ++i) ++za[std::size_t(between(0, long(n) - 1))];
            for (unsigned i = 0; i < l; ++i) ++zb[std::size_t(between(0, long(n) - 1))];
            for (std::size_t a = 0; a < n; ++a) {
                m.set_z(a, za[a]);
                m.set_zbar(a, zb[a]);
            }
            m.set_u(r);
            GaussianRational c = nonzero_gaussian();
            if (m == m.swapped()) {
                p += Poly::monomial(n, m, GaussianRational(c.re() == 0 ? Rational(1) : c.re()));
            } else {
                Poly one = Poly::monomial(n, m, c);
                p += one + one.conj();
            }
        }
        return RealPoly(p);
    }

    // Random element of u(H) for real symmetric H: X = H^{-1} M^T with M skew-Hermitian.
    CMatrix lie_element(const CMatrix& h) {
        const std::size_t n = h.rows();
        CMatrix m(n, n);
        for (std::size_t a = 0; a < n; ++a) {
            m(a, a) = GaussianRational(0, small_rational());
            for (std::size_t b = a + 1; b < n; ++b) {
                m(a, b) = gaussian();
                m(b, a) = -m(a, b).conj();
            }
        }
        return h.inverse() * m.transpose();
    }

    // Random element of U(H) via a Cayley transform, retrying on singular E - X.
    CMatrix pseudounitary(const CMatrix& h) {
        const std::size_t n = h.rows();
        for (;;) {
            CMatrix x = lie_element(h);
            CMatrix e = CMatrix::identity(n);
            if ((e - x).determinant().is_zero()) continue;
            return (e + x) * (e - x).inverse();
        }
    }

    SElement s_element(std::size_t n, std::size_t m) {
        SElement e;
        e.n = n;
        e.m = m;
        e.mu = nonzero_gaussian();
        CMatrix hp = central_block(n, m);
        e.A = n > 2 ? pseudounitary(hp) : CMatrix(0, 0);
        e.x = vector(n - 2);
        GaussianRational xx;
        for (std::size_t a = 0; a < n - 2; ++a)
            for (std::size_t b = 0; b < n - 2; ++b) xx += e.x[a] * hp(a, b) * e.x[b].conj();
        // Re(c/mu) = -xx/2
        e.c = e.mu * GaussianRational(-xx.re() / 2, small_rational());
        return e;
    }

private:
    std::mt19937_64 engine_;
};

// Evaluates P at z, zbar = conj(z), u by direct summation over terms.
inline GaussianRational evaluate(const Poly& p, const CVector& z, const GaussianRational& u) {
    GaussianRational total;
    for (const auto& [mono, c] : p.terms()) {
        GaussianRational v = c;
        for (unsigned e = 0; e < mono.u(); ++e) v *= u;
        for (std::size_t a = 0; a < z.size(); ++a) {
            for (unsigned e = 0; e < mono.z(a); ++e) v *= z[a];
            for (unsigned e = 0; e < mono.zbar(a); ++e) v *= z[a].conj();
        }
        total += v;
    }
    return total;
}

// <z,z> for a standard form evaluated numerically.
inline GaussianRational form_value(const CMatrix& h, const CVector& z) {
    GaussianRational s;
    for (std::size_t a = 0; a < z.size(); ++a)
        for (std::size_t b = 0; b < z.size(); ++b) s += h(a, b) * z[a] * z[b].conj();
    return s;
}

inline bool pseudounitary_by_product(const CMatrix& u, const CMatrix& h) {
    return u.transpose() * h * u.conj() == h;
}

}  // namespace testing
