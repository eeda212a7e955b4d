#include "crmoser/parser.hpp"

#include <cctype>
#include <sstream>

namespace crmoser {

namespace {

class Parser {
public:
    Parser(const std::string& text, const HermitianForm& form)
        : text_(text), n_(form.n()), q_(inner_poly(form).poly()) {}

    Poly parse() {
        skip_space();
        if (at_end()) throw ParseError("empty expression", pos_);
        Poly out(n_);
        bool negate = false;
        if (peek() == '-' || peek() == '+') {
            negate = peek() == '-';
            ++pos_;
        }
        for (;;) {
            Poly t = term();
            out += negate ? -t : t;
            skip_space();
            if (at_end()) break;
            char c = peek();
            if (c != '+' && c != '-') throw ParseError(std::string("unexpected '") + c + "'", pos_);
            negate = c == '-';
            ++pos_;
        }
        return out;
    }

private:
    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }

    void skip_space() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }

    void expect(char c) {
        if (at_end() || peek() != c) throw ParseError(std::string("expected '") + c + "'", pos_);
        ++pos_;
    }

    unsigned integer() {
        std::size_t start = pos_;
        unsigned long v = 0;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
            v = v * 10 + unsigned(peek() - '0');
            if (v > 100000) throw ParseError("integer too large", start);
            ++pos_;
        }
        if (pos_ == start) throw ParseError("expected integer", start);
        return unsigned(v);
    }

    Rational rational() {
        std::size_t start = pos_;
        std::string digits;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) digits += text_[pos_++];
        Rational r(mpz_class(digits), 1);
        if (!at_end() && peek() == '/') {
            ++pos_;
            std::string den;
            while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) den += text_[pos_++];
            if (den.empty()) throw ParseError("expected denominator", pos_);
            mpz_class d(den);
            if (d == 0) throw ParseError("zero denominator", start);
            r = Rational(mpz_class(digits), d);
            r.canonicalize();
        }
        return r;
    }

    unsigned power() {
        skip_space();
        if (at_end() || peek() != '^') return 1;
        ++pos_;
        skip_space();
        return integer();
    }

    std::size_t index() {
        std::size_t start = pos_;
        unsigned i = integer();
        if (i < 1 || i > n_) throw ParseError("variable index " + std::to_string(i) + " out of range 1.." + std::to_string(n_), start);
        return i - 1;
    }

    bool factor_starts() const {
        if (at_end()) return false;
        char c = peek();
        return c == 'u' || c == 'Q' || c == '|' || c == 'z' || c == '~';
    }

    Poly factor() {
        skip_space();
        if (at_end()) throw ParseError("expected factor", pos_);
        std::size_t start = pos_;
        char c = peek();
        Monomial mono;
        switch (c) {
            case 'u': {
                ++pos_;
                mono.set_u(power());
                return Poly::monomial(n_, mono, 1);
            }
            case 'Q': {
                ++pos_;
                return pow(q_, power());
            }
            case '|': {
                ++pos_;
                expect('z');
                std::size_t a = index();
                expect('|');
                expect('^');
                std::size_t epos = pos_;
                unsigned e = integer();
                if (e % 2 != 0) throw ParseError("exponent of |z" + std::to_string(a + 1) + "| must be even", epos);
                mono.set_z(a, e / 2);
                mono.set_zbar(a, e / 2);
                return Poly::monomial(n_, mono, 1);
            }
            case 'z': {
                ++pos_;
                std::size_t a = index();
                mono.set_z(a, power());
                return Poly::monomial(n_, mono, 1);
            }
            case '~': {
                ++pos_;
                expect('z');
                std::size_t a = index();
                mono.set_zbar(a, power());
                return Poly::monomial(n_, mono, 1);
            }
            default: throw ParseError(std::string("unexpected '") + c + "'", start);
        }
    }

    Poly term() {
        skip_space();
        Rational coef(1);
        if (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
            std::size_t start = pos_;
            coef = rational();
            skip_space();
            if (!factor_starts() && (at_end() || peek() != '*')) {
                if (sgn(coef) == 0) return Poly(n_);
                throw ParseError("constant term is not allowed", start);
            }
            if (!at_end() && peek() == '*') {
                ++pos_;
                skip_space();
            }
        }
        Poly p = factor();
        for (;;) {
            skip_space();
            if (!at_end() && peek() == '*') {
                ++pos_;
                p = p * factor();
                continue;
            }
            if (factor_starts()) {
                p = p * factor();
                continue;
            }
            break;
        }
        return p * GaussianRational(coef);
    }

    const std::string& text_;
    std::size_t n_;
    Poly q_;
    std::size_t pos_ = 0;
};

std::string monomial_text(const Monomial& mono, std::size_t n) {
    std::ostringstream os;
    bool first = true;
    auto sep = [&] {
        if (!first) os << ' ';
        first = false;
    };
    if (mono.u() > 0) {
        sep();
        os << 'u';
        if (mono.u() > 1) os << '^' << mono.u();
    }
    for (std::size_t a = 0; a < n; ++a) {
        if (mono.z(a) > 0) {
            sep();
            os << 'z' << a + 1;
            if (mono.z(a) > 1) os << '^' << mono.z(a);
        }
        if (mono.zbar(a) > 0) {
            sep();
            os << "~z" << a + 1;
            if (mono.zbar(a) > 1) os << '^' << mono.zbar(a);
        }
    }
    return os.str();
}

}  // namespace

Poly parse_expression(const std::string& text, const HermitianForm& form) { return Parser(text, form).parse(); }

Hypersurface parse_surface(const std::string& text, const HermitianForm& form, unsigned max_weight) {
    Poly p = parse_expression(text, form);
    for (const auto& [mono, c] : p.terms()) {
        if (p.coefficient(mono.swapped()) != c.conj())
            throw ParseError("coefficient symmetry broken at monomial " + monomial_text(mono, form.n()), 0);
        if (mono.z_degree() < 2 || mono.zbar_degree() < 2)
            throw ParseError("harmonic or low-degree term " + monomial_text(mono, form.n()) + " (bidegree (" +
                                 std::to_string(mono.z_degree()) + ", " + std::to_string(mono.zbar_degree()) +
                                 "), need k, l >= 2)",
                             0);
    }
    return Hypersurface(form, RealPoly(std::move(p)), max_weight);
}

std::string serialize_expression(const Poly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [mono, c] : p.terms()) {
        if (!c.is_real()) throw std::invalid_argument("serialize_expression: coefficient " + c.to_string() + " is not rational");
        Rational v = c.re();
        if (first) {
            if (sgn(v) < 0) os << "-";
        } else {
            os << (sgn(v) < 0 ? " - " : " + ");
        }
        first = false;
        Rational a = abs(v);
        std::string body = monomial_text(mono, p.n());
        if (body.empty()) throw std::invalid_argument("serialize_expression: constant term is not expressible");
        if (a != 1) os << to_string(a) << ' ';
        os << body;
    }
    return os.str();
}

}  // namespace crmoser
