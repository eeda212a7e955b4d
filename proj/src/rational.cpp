#include "crmoser/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace crmoser {

Rational parse_rational(const std::string& text) {
    std::string s;
    for (char c : text) {
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    }
    if (s.empty()) throw std::invalid_argument("empty rational");
    auto valid_int = [](const std::string& t) {
        std::size_t start = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
        if (start >= t.size()) return false;
        for (std::size_t k = start; k < t.size(); ++k) {
            if (!std::isdigit(static_cast<unsigned char>(t[k]))) return false;
        }
        return true;
    };
    auto slash = s.find('/');
    std::string num = s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!num.empty() && num[0] == '+') num.erase(0, 1);
    if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+') {
        throw std::invalid_argument("malformed rational '" + text + "'");
    }
    mpz_class n(num, 10), d(den, 10);
    if (d == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
    Rational q(n, d);
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q) { return q.get_str(10); }

std::optional<Rational> rational_sqrt(const Rational& q) {
    if (sgn(q) < 0) return std::nullopt;
    const mpz_class& n = q.get_num();
    const mpz_class& d = q.get_den();
    if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) {
        return std::nullopt;
    }
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
    Rational r(rn, rd);
    r.canonicalize();
    return r;
}

namespace {

std::optional<mpz_class> exact_root(const mpz_class& v, unsigned long k) {
    mpz_class r;
    if (mpz_root(r.get_mpz_t(), v.get_mpz_t(), k) == 0) return std::nullopt;
    return r;
}

mpz_class ipow(const mpz_class& b, unsigned long e) {
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
    return r;
}

}  // namespace

std::optional<Rational> rational_power(const Rational& base, const Rational& exponent) {
    if (sgn(base) <= 0) throw std::invalid_argument("rational_power needs a positive base");
    if (base == 1) return Rational(1);
    const mpz_class& p = exponent.get_num();
    const mpz_class& q = exponent.get_den();
    if (!q.fits_ulong_p() || !p.fits_slong_p()) return std::nullopt;
    unsigned long k = q.get_ui();
    auto rn = exact_root(base.get_num(), k);
    auto rd = exact_root(base.get_den(), k);
    if (!rn || !rd) return std::nullopt;
    long e = p.get_si();
    unsigned long ae = static_cast<unsigned long>(e < 0 ? -e : e);
    Rational r(ipow(*rn, ae), ipow(*rd, ae));
    r.canonicalize();
    if (e < 0) r = 1 / r;
    return r;
}

GaussianRational GaussianRational::inverse() const {
    Rational nrm = norm();
    if (sgn(nrm) == 0) throw std::domain_error("division by zero in Q(i)");
    return {re_ / nrm, -im_ / nrm};
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
    if (sgn(im_) == 0 && sgn(o.im_) == 0) {
        re_ *= o.re_;
        return *this;
    }
    Rational r = re_ * o.re_ - im_ * o.im_;
    Rational i = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    im_ = std::move(i);
    return *this;
}

std::string GaussianRational::to_string() const {
    if (is_real()) return crmoser::to_string(re_);
    if (sgn(re_) == 0) return crmoser::to_string(im_) + "i";
    std::string imag = crmoser::to_string(im_);
    if (imag[0] != '-') imag = "+" + imag;
    return crmoser::to_string(re_) + imag + "i";
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& z) { return os << z.to_string(); }

}  // namespace crmoser
