#include "crmoser/poly.hpp"

#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace crmoser {

// ---------------------------------------------------------------- Monomial

std::uint8_t Monomial::narrow(unsigned e) {
    if (e > 255) throw std::overflow_error("monomial exponent exceeds 255");
    return static_cast<std::uint8_t>(e);
}

unsigned Monomial::z_degree() const {
    unsigned d = 0;
    for (std::size_t a = 0; a < kMaxDim; ++a) d += exps_[1 + a];
    return d;
}

unsigned Monomial::zbar_degree() const {
    unsigned d = 0;
    for (std::size_t a = 0; a < kMaxDim; ++a) d += exps_[1 + kMaxDim + a];
    return d;
}

Monomial Monomial::swapped() const {
    Monomial m;
    m.exps_[0] = exps_[0];
    for (std::size_t a = 0; a < kMaxDim; ++a) {
        m.exps_[1 + a] = exps_[1 + kMaxDim + a];
        m.exps_[1 + kMaxDim + a] = exps_[1 + a];
    }
    return m;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial m;
    for (std::size_t k = 0; k < a.exps_.size(); ++k) {
        m.exps_[k] = Monomial::narrow(unsigned(a.exps_[k]) + unsigned(b.exps_[k]));
    }
    return m;
}

std::size_t Monomial::hash() const {
    // FNV-1a over the exponent bytes
    std::size_t h = 1469598103934665603ull;
    for (auto e : exps_) {
        h ^= e;
        h *= 1099511628211ull;
    }
    return h;
}

// ---------------------------------------------------------------- Poly

Poly::Poly(std::size_t n) : n_(n) {
    if (n > kMaxDim) throw std::invalid_argument("dimension exceeds supported maximum");
}

Poly Poly::constant(std::size_t n, const GaussianRational& c) { return monomial(n, Monomial{}, c); }

Poly Poly::z(std::size_t n, std::size_t a) {
    if (a >= n) throw std::out_of_range("z index out of range");
    Monomial m;
    m.set_z(a, 1);
    return monomial(n, m, 1);
}

Poly Poly::zbar(std::size_t n, std::size_t a) {
    if (a >= n) throw std::out_of_range("zbar index out of range");
    Monomial m;
    m.set_zbar(a, 1);
    return monomial(n, m, 1);
}

Poly Poly::u(std::size_t n) {
    Monomial m;
    m.set_u(1);
    return monomial(n, m, 1);
}

Poly Poly::monomial(std::size_t n, const Monomial& m, const GaussianRational& c) {
    Poly p(n);
    p.add_term(m, c);
    return p;
}

GaussianRational Poly::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? GaussianRational(0) : it->second;
}

void Poly::add_term(const Monomial& m, const GaussianRational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Poly Poly::conj() const {
    Poly p(n_);
    for (const auto& [m, c] : terms_) p.terms_.emplace(m.swapped(), c.conj());
    return p;
}

Poly Poly::real_part() const { return (*this + conj()) * GaussianRational(Rational(1, 2)); }

Poly Poly::imag_part() const { return (*this - conj()) * GaussianRational(0, Rational(-1, 2)); }

unsigned Poly::min_weight() const {
    if (terms_.empty()) return 0;
    unsigned w = ~0u;
    for (const auto& [m, c] : terms_) w = std::min(w, m.weight());
    return w;
}

unsigned Poly::max_weight() const {
    unsigned w = 0;
    for (const auto& [m, c] : terms_) w = std::max(w, m.weight());
    return w;
}

unsigned Poly::max_u_degree() const {
    unsigned d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.u());
    return d;
}

Poly Poly::filtered(const std::function<bool(const Monomial&)>& keep) const {
    Poly p(n_);
    for (const auto& [m, c] : terms_)
        if (keep(m)) p.terms_.emplace_hint(p.terms_.end(), m, c);
    return p;
}

Poly Poly::truncated(unsigned max_weight) const {
    return filtered([max_weight](const Monomial& m) { return m.weight() <= max_weight; });
}

Poly Poly::weight_component(unsigned j) const {
    return filtered([j](const Monomial& m) { return m.weight() == j; });
}

Poly Poly::bidegree_component(unsigned k, unsigned l) const {
    return filtered([k, l](const Monomial& m) { return m.z_degree() == k && m.zbar_degree() == l; });
}

Poly Poly::u_coefficient(unsigned r) const {
    Poly p(n_);
    for (const auto& [m, c] : terms_) {
        if (m.u() != r) continue;
        Monomial mm = m;
        mm.set_u(0);
        p.terms_.emplace(mm, c);
    }
    return p;
}

Poly Poly::partial(Var v) const {
    if (v.kind != Var::Kind::U && v.index >= n_) throw std::out_of_range("partial: variable index out of range");
    Poly p(n_);
    for (const auto& [m, c] : terms_) {
        Monomial mm = m;
        unsigned e = 0;
        switch (v.kind) {
            case Var::Kind::Z:
                e = m.z(v.index);
                if (e) mm.set_z(v.index, e - 1);
                break;
            case Var::Kind::Zbar:
                e = m.zbar(v.index);
                if (e) mm.set_zbar(v.index, e - 1);
                break;
            case Var::Kind::U:
                e = m.u();
                if (e) mm.set_u(e - 1);
                break;
        }
        if (e) p.add_term(mm, c * GaussianRational(Rational(e)));
    }
    return p;
}

Poly Poly::mul_u_power(unsigned r) const {
    if (r == 0) return *this;
    Poly p(n_);
    for (const auto& [m, c] : terms_) {
        Monomial mm = m;
        mm.set_u(m.u() + r);
        p.terms_.emplace(mm, c);
    }
    return p;
}

Poly& Poly::operator+=(const Poly& o) {
    if (n_ != o.n_ && !o.is_zero()) {
        if (is_zero()) n_ = o.n_;
        else throw std::invalid_argument("polynomial dimension mismatch");
    }
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (n_ != o.n_ && !o.is_zero()) {
        if (is_zero()) n_ = o.n_;
        else throw std::invalid_argument("polynomial dimension mismatch");
    }
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Poly& Poly::operator*=(const GaussianRational& s) {
    if (s.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, c] : terms_) c *= s;
    return *this;
}

Poly Poly::operator-() const { return *this * GaussianRational(-1); }

Poly operator*(const Poly& a, const Poly& b) { return mul_truncated(a, b, ~0u); }

std::string Poly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c << ")";
        if (m.u()) os << "*u^" << m.u();
        for (std::size_t a = 0; a < n_; ++a)
            if (m.z(a)) os << "*z" << a + 1 << "^" << m.z(a);
        for (std::size_t a = 0; a < n_; ++a)
            if (m.zbar(a)) os << "*~z" << a + 1 << "^" << m.zbar(a);
    }
    return os.str();
}

Poly mul_truncated(const Poly& a, const Poly& b, unsigned max_weight) {
    if (a.n() != b.n() && !a.is_zero() && !b.is_zero())
        throw std::invalid_argument("polynomial dimension mismatch");
    std::size_t n = a.is_zero() ? b.n() : a.n();
    Poly out(n);
    if (a.is_zero() || b.is_zero()) return out;

    // bucket the right factor by weight so each left term only visits admissible partners
    std::vector<std::vector<std::pair<const Monomial*, const GaussianRational*>>> buckets;
    for (const auto& [m, c] : b.terms()) {
        unsigned w = m.weight();
        if (w > max_weight) continue;
        if (buckets.size() <= w) buckets.resize(w + 1);
        buckets[w].emplace_back(&m, &c);
    }
    std::unordered_map<Monomial, GaussianRational, MonomialHash> acc;
    for (const auto& [ma, ca] : a.terms()) {
        unsigned wa = ma.weight();
        if (wa > max_weight) continue;
        unsigned limit = max_weight - wa;
        for (unsigned w = 0; w < buckets.size() && w <= limit; ++w) {
            for (const auto& [mb, cb] : buckets[w]) {
                acc[ma * *mb] += ca * *cb;
            }
        }
    }
    for (auto& [m, c] : acc) out.add_term(m, c);
    return out;
}

Poly pow_truncated(const Poly& p, unsigned k, unsigned max_weight) {
    Poly result = Poly::constant(p.n(), 1);
    Poly base = p.truncated(max_weight);
    while (k) {
        if (k & 1u) result = mul_truncated(result, base, max_weight);
        k >>= 1u;
        if (k) base = mul_truncated(base, base, max_weight);
    }
    return result;
}

Poly pow(const Poly& p, unsigned k) { return pow_truncated(p, k, ~0u); }

PowerCache::PowerCache(Poly base, unsigned max_weight)
    : base_(base.truncated(max_weight)), max_weight_(max_weight) {
    powers_.push_back(Poly::constant(base_.n(), 1));
}

const Poly& PowerCache::operator[](unsigned k) {
    while (powers_.size() <= k) {
        powers_.push_back(mul_truncated(powers_.back(), base_, max_weight_));
    }
    return powers_[k];
}

// ---------------------------------------------------------------- RealPoly

RealPoly::RealPoly(Poly p) : p_(std::move(p)) {
    for (const auto& [m, c] : p_.terms()) {
        if (p_.coefficient(m.swapped()) != c.conj()) {
            throw std::invalid_argument("polynomial violates the reality symmetry at " +
                                        Poly::monomial(p_.n(), m, c).to_string());
        }
    }
}

RealPoly trusted_real(Poly p) { return RealPoly(std::move(p), RealPoly::Trusted{}); }

RealPoly operator*(const RealPoly& a, const RealPoly& b) { return trusted_real(a.p_ * b.p_); }

RealPoly operator*(const Rational& s, const RealPoly& a) { return trusted_real(a.p_ * GaussianRational(s)); }

Poly bidegree_component(const RealPoly& p, unsigned k, unsigned l) { return p.poly().bidegree_component(k, l); }

std::map<unsigned, RealPoly> weight_decompose(const RealPoly& p) {
    std::map<unsigned, Poly> parts;
    for (const auto& [m, c] : p.poly().terms()) {
        auto [it, inserted] = parts.try_emplace(m.weight(), p.n());
        it->second.add_term(m, c);
    }
    std::map<unsigned, RealPoly> out;
    // swapping z and zbar preserves weight, so each component inherits the symmetry
    for (auto& [w, q] : parts) out.emplace(w, trusted_real(std::move(q)));
    return out;
}

Poly substitute_linear(const Poly& p, const CMatrix& a, const Rational& u_scale) {
    const std::size_t n = p.n();
    if (a.rows() != n || a.cols() != n) throw std::invalid_argument("substitute_linear: dimension mismatch");
    std::vector<PowerCache> zpow, zbarpow;
    zpow.reserve(n);
    zbarpow.reserve(n);
    for (std::size_t r = 0; r < n; ++r) {
        Poly lz(n), lzb(n);
        for (std::size_t c = 0; c < n; ++c) {
            lz += Poly::z(n, c) * a(r, c);
            lzb += Poly::zbar(n, c) * a(r, c).conj();
        }
        zpow.emplace_back(lz, ~0u);
        zbarpow.emplace_back(lzb, ~0u);
    }
    Poly out(n);
    for (const auto& [m, c] : p.terms()) {
        Poly term = Poly::constant(n, c);
        Rational scale = 1;
        for (unsigned k = 0; k < m.u(); ++k) scale *= u_scale;
        term *= GaussianRational(scale);
        for (std::size_t r = 0; r < n; ++r) {
            if (m.z(r)) term = term * zpow[r][m.z(r)];
            if (m.zbar(r)) term = term * zbarpow[r][m.zbar(r)];
        }
        out += term.mul_u_power(m.u());
    }
    return out;
}

RealPoly substitute_linear(const RealPoly& p, const CMatrix& a, const Rational& u_scale) {
    // zbar is substituted by the conjugate matrix, so conjugation commutes with the map
    return trusted_real(substitute_linear(p.poly(), a, u_scale));
}

Poly partial(const RealPoly& p, Var v) { return p.poly().partial(v); }

}  // namespace crmoser
