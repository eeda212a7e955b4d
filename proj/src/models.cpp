#include "crmoser/models.hpp"

#include <stdexcept>
#include <utility>

namespace crmoser {

namespace {

void check_s_range(std::size_t n, std::size_t m) {
    if (n < 2 || m < 1 || 2 * m > n) throw std::invalid_argument("group S needs n >= 2m, m >= 1");
}

// x^T H' conj(y)
GaussianRational central_pair(const CMatrix& hp, const CVector& x, const CVector& y) {
    GaussianRational s;
    for (std::size_t a = 0; a < x.size(); ++a)
        for (std::size_t b = 0; b < y.size(); ++b)
            if (!hp(a, b).is_zero()) s += x[a] * hp(a, b) * y[b].conj();
    return s;
}

Poly abs_zn_power(std::size_t n, unsigned p) {
    Monomial mono;
    mono.set_z(n - 1, p);
    mono.set_zbar(n - 1, p);
    return Poly::monomial(n, mono, 1);
}

Poly abs_z1_power(std::size_t n, unsigned p) {
    Monomial mono;
    mono.set_z(0, p);
    mono.set_zbar(0, p);
    return Poly::monomial(n, mono, 1);
}

}  // namespace

CMatrix central_block(std::size_t n, std::size_t m) {
    check_s_range(n, m);
    const std::size_t k = n - 2;
    CMatrix hp(k, k);
    for (std::size_t j = 0; j + 1 < m; ++j) {
        hp(j, k - 1 - j) = 1;
        hp(k - 1 - j, j) = 1;
    }
    for (std::size_t j = m - 1; j + (m - 1) < k; ++j) hp(j, j) = 1;
    return hp;
}

void SElement::validate() const {
    check_s_range(n, m);
    if (mu.is_zero()) throw std::invalid_argument("S element needs mu != 0");
    const std::size_t k = n - 2;
    if (x.size() != k) throw std::invalid_argument("S element: x must have length n-2");
    if (A.rows() != k || A.cols() != k) throw std::invalid_argument("S element: A must be (n-2)x(n-2)");
    CMatrix hp = central_block(n, m);
    if (A.transpose() * hp * A.conj() != hp) throw std::invalid_argument("S element: A is not in U(H')");
    GaussianRational corner = (c / mu) * GaussianRational(2);
    Rational defect = corner.re() + central_pair(hp, x, x).re();
    if (sgn(defect) != 0) throw std::invalid_argument("S element: 2Re(c/mu) + x^T H' conj(x) != 0");
}

CMatrix s_to_matrix(const SElement& e) {
    e.validate();
    const std::size_t n = e.n, k = n - 2;
    CMatrix hp = central_block(n, e.m);
    CMatrix u(n, n);
    u(0, 0) = e.mu;
    u(0, n - 1) = e.c;
    u(n - 1, n - 1) = e.mu.conj().inverse();
    // top row: -mu conj(x)^T H' A
    for (std::size_t j = 0; j < k; ++j) {
        GaussianRational s;
        for (std::size_t a = 0; a < k; ++a)
            for (std::size_t b = 0; b < k; ++b)
                if (!hp(a, b).is_zero() && !e.A(b, j).is_zero()) s += e.x[a].conj() * hp(a, b) * e.A(b, j);
        u(0, 1 + j) = -(e.mu * s);
    }
    for (std::size_t a = 0; a < k; ++a) {
        for (std::size_t b = 0; b < k; ++b) u(1 + a, 1 + b) = e.A(a, b);
        u(1 + a, n - 1) = e.x[a];
    }
    return u;
}

std::optional<SElement> decompose_s(const CMatrix& u, std::size_t m) {
    if (!u.is_square() || u.rows() < 2 || m < 1 || 2 * m > u.rows()) return std::nullopt;
    const std::size_t n = u.rows(), k = n - 2;
    for (std::size_t r = 1; r < n; ++r)
        if (!u(r, 0).is_zero()) return std::nullopt;
    for (std::size_t c = 0; c + 1 < n; ++c)
        if (!u(n - 1, c).is_zero()) return std::nullopt;
    SElement e;
    e.n = n;
    e.m = m;
    e.mu = u(0, 0);
    if (e.mu.is_zero()) return std::nullopt;
    e.c = u(0, n - 1);
    e.x.resize(k);
    e.A = CMatrix(k, k);
    for (std::size_t a = 0; a < k; ++a) {
        e.x[a] = u(1 + a, n - 1);
        for (std::size_t b = 0; b < k; ++b) e.A(a, b) = u(1 + a, 1 + b);
    }
    try {
        e.validate();
    } catch (const std::invalid_argument&) {
        return std::nullopt;
    }
    if (s_to_matrix(e) != u) return std::nullopt;
    return e;
}

bool is_in_S(const CMatrix& u, std::size_t m) { return decompose_s(u, m).has_value(); }

std::size_t s_dimension(std::size_t n, std::size_t m) {
    check_s_range(n, m);
    HermitianForm form = standard_form(n, m, FormKind::Antidiagonal);
    const std::size_t unknowns = 2 * n * n;
    QMatrix system;
    // infinitesimal pseudounitarity: X^T H + H conj(X) = 0
    std::vector<std::vector<Rational>> images;
    for (std::size_t j = 0; j < unknowns; ++j) {
        std::vector<Rational> e(unknowns);
        e[j] = 1;
        CMatrix x = from_real_coordinates(e, n, n);
        images.push_back(real_coordinates(x.transpose() * form.matrix() + form.matrix() * x.conj()));
    }
    for (std::size_t i = 0; i < images[0].size(); ++i) {
        std::vector<Rational> row(unknowns);
        for (std::size_t j = 0; j < unknowns; ++j) row[j] = images[j][i];
        system.append_row(row);
    }
    // block pattern: first column below the corner and last row left of the corner vanish
    auto pin_zero = [&](std::size_t r, std::size_t c) {
        for (std::size_t part = 0; part < 2; ++part) {
            std::vector<Rational> row(unknowns);
            row[2 * (r * n + c) + part] = 1;
            system.append_row(row);
        }
    };
    for (std::size_t r = 1; r < n; ++r) pin_zero(r, 0);
    for (std::size_t c = 1; c + 1 < n; ++c) pin_zero(n - 1, c);
    return unknowns - system.rank();
}

SElement s_subgroup_I(std::size_t n, std::size_t m, const Rational& t) {
    check_s_range(n, m);
    Rational d = 1 + t * t;
    SElement e;
    e.n = n;
    e.m = m;
    e.mu = GaussianRational((1 - t * t) / d, 2 * t / d);
    e.x = CVector(n - 2);
    e.A = CMatrix::identity(n - 2);
    e.validate();
    return e;
}

SElement s_subgroup_J(std::size_t n, std::size_t m, const CVector& x, const Rational& im_c) {
    check_s_range(n, m);
    SElement e;
    e.n = n;
    e.m = m;
    e.x = x;
    e.A = CMatrix::identity(n - 2);
    if (x.size() != n - 2) throw std::invalid_argument("subgroup J: x must have length n-2");
    Rational re_c = -central_pair(central_block(n, m), x, x).re() / 2;
    e.c = GaussianRational(re_c, im_c);
    e.validate();
    return e;
}

SElement s_subgroup_K(std::size_t n, std::size_t m, const Rational& t) {
    check_s_range(n, m);
    if (sgn(t) <= 0) throw std::invalid_argument("subgroup K needs mu > 0");
    SElement e;
    e.n = n;
    e.m = m;
    e.mu = GaussianRational(t);
    e.x = CVector(n - 2);
    e.A = CMatrix::identity(n - 2);
    e.validate();
    return e;
}

std::optional<Rational> ScaledSAuto::rational_scale() const { return rational_power(scale_base(), scale_exponent()); }

// ---------------------------------------------------------------- model surfaces

Hypersurface model_umbilic(std::size_t n, std::size_t m, FormKind kind, const std::vector<UmbilicTerm>& terms) {
    HermitianForm form = standard_form(n, m, kind);
    const Poly q = inner_poly(form).poly();
    Poly f(n);
    for (const auto& t : terms) {
        if (t.k < 4) throw std::invalid_argument("umbilic model needs k >= 4 (trace conditions force F22 = F33 = 0)");
        f += pow(q, t.k).mul_u_power(t.r) * GaussianRational(t.c);
    }
    if (f.is_zero()) throw std::invalid_argument("umbilic model needs a nonzero coefficient");
    return Hypersurface(std::move(form), RealPoly(std::move(f)));
}

Hypersurface model_theorem1(std::size_t n, const std::vector<Theorem1Term>& terms) {
    if (n < 2) throw std::invalid_argument("theorem-1 model needs n >= 2");
    HermitianForm form = standard_form(n, 0, FormKind::Diagonal);
    const Poly q = inner_poly(form).poly();
    Poly f(n);
    bool has_p = false;
    for (const auto& t : terms) {
        if (t.p + t.q < 4) throw std::invalid_argument("theorem-1 model needs p + q >= 4");
        if (sgn(t.c) != 0 && t.p >= 1) has_p = true;
        f += (abs_z1_power(n, t.p) * pow(q, t.q)).mul_u_power(t.r) * GaussianRational(t.c);
    }
    if (!has_p || f.is_zero()) throw std::invalid_argument("theorem-1 model needs a nonzero coefficient with p >= 1");
    Hypersurface surface(std::move(form), RealPoly(std::move(f)));
    if (!check_normal_form(surface).passed()) throw std::invalid_argument("theorem-1 model violates the trace conditions");
    return surface;
}

Theorem2Model model_theorem2(std::size_t n, std::size_t m, const Rational& s, const std::vector<Theorem2Term>& terms) {
    if (m < 1) throw std::invalid_argument("theorem-2 model needs m >= 1");
    if (s < Rational(-1, 2)) throw std::invalid_argument("theorem-2 model needs s >= -1/2");
    HermitianForm form = standard_form(n, m, FormKind::Antidiagonal);
    const Poly q = inner_poly(form).poly();
    Poly f(n);
    std::vector<Theorem2Term> kept;
    for (const auto& t : terms) {
        if (sgn(t.c) == 0) continue;
        if (t.p < 1) throw std::invalid_argument("theorem-2 model needs p >= 1");
        if (Rational(int(t.r) + int(t.q) - 1) != s * t.p)
            throw std::invalid_argument("exponent relation (r+q-1)/p = s violated by term (r=" + std::to_string(t.r) +
                                        ", p=" + std::to_string(t.p) + ", q=" + std::to_string(t.q) + ")");
        if (t.p + t.q < 2) throw std::invalid_argument("theorem-2 model term has bidegree below (2,2)");
        f += (abs_zn_power(n, t.p) * pow(q, t.q)).mul_u_power(t.r) * GaussianRational(t.c);
        kept.push_back(t);
    }
    if (kept.empty() || f.is_zero()) throw std::invalid_argument("theorem-2 model needs a nonzero coefficient");
    Hypersurface surface(std::move(form), RealPoly(std::move(f)));
    auto report = check_normal_form(surface);
    if (!report.passed())
        throw std::invalid_argument("theorem-2 model violates the trace condition " +
                                    to_string(report.violations.front().condition));
    return Theorem2Model{std::move(surface), s, std::move(kept)};
}

Theorem2Model model_corollary2(std::size_t n, std::size_t m, int sign) {
    if (sign != 1 && sign != -1) throw std::invalid_argument("corollary-2 model sign must be +1 or -1");
    if (m < 1 || 2 * m > n) throw std::invalid_argument("corollary-2 model needs m >= 1 and n >= 2m");
    return model_theorem2(n, m, Rational(-1, 2), {Theorem2Term{0, 2, 0, Rational(sign)}});
}

bool verify_scaled_automorphism(const Theorem2Model& model, const ScaledSAuto& sa) {
    if (sa.s != model.s) throw std::invalid_argument("scaled automorphism and model use different s");
    const auto& surface = model.surface;
    const std::size_t n = surface.n();
    if (sa.element.n != n || sa.element.m != surface.m()) throw std::invalid_argument("S element has the wrong shape");
    CMatrix u = s_to_matrix(sa.element);

    // <Uz,Uz> = <z,z>
    auto sigma = is_pseudounitary(u, surface.form());
    if (!sigma || *sigma != 1) return false;
    // |(Uz)_n|^2 = |z_n|^2 / |mu|^2
    for (std::size_t c = 0; c + 1 < n; ++c)
        if (!u(n - 1, c).is_zero()) return false;
    if (u(n - 1, n - 1) != sa.element.mu.conj().inverse()) return false;

    // the table must describe F exactly
    const Poly q = inner_poly(surface.form()).poly();
    Poly rebuilt(n);
    for (const auto& t : model.terms)
        rebuilt += (abs_zn_power(n, t.p) * pow(q, t.q)).mul_u_power(t.r) * GaussianRational(t.c);
    if (rebuilt != surface.F().poly()) return false;

    // lambda^{r+p+q-1} = |mu|^p with lambda^{s+1} = |mu|
    for (const auto& t : model.terms) {
        if (sgn(t.c) == 0) continue;
        Rational lhs = Rational(int(t.r + t.p + t.q) - 1) / (sa.s + 1);
        if (lhs != Rational(t.p)) return false;
    }

    if (auto lambda = sa.rational_scale()) {
        if (!is_linear_automorphism(surface, u, *lambda, 1)) return false;
    }
    return true;
}

// ---------------------------------------------------------------- classification

std::string to_string(CaseLabel label) {
    switch (label) {
        case CaseLabel::Full: return "FULL";
        case CaseLabel::T1Case: return "T1_CASE";
        case CaseLabel::T2Case: return "T2_CASE";
        case CaseLabel::Other: return "OTHER";
    }
    return "OTHER";
}

Classification classify(const Hypersurface& surface) {
    if (surface.is_spherical()) throw std::domain_error("classify: spherical surface (F = 0)");
    if (!check_normal_form(surface).passed()) throw std::domain_error("classify: surface is not in normal form");
    const std::size_t n = surface.n(), m = surface.m();
    const std::size_t full = n * n;
    const std::size_t t1 = n * n - 2 * n + 2;
    const std::size_t t2 = n * n - 2 * n + 3;

    Classification out;
    out.dim = stabilizer_algebra(surface).dim;
    out.function_of_form = is_function_of_form_and_u(surface);

    if (out.dim == full) {
        out.label = CaseLabel::Full;
        out.gap_ok = out.function_of_form;
    } else if (m == 0 && out.dim == t1) {
        out.label = CaseLabel::T1Case;
    } else if (m >= 1 && out.dim == t2) {
        out.label = CaseLabel::T2Case;
    } else {
        out.label = CaseLabel::Other;
        std::size_t band_start = m == 0 ? t2 : t2 + 1;
        if (out.dim >= band_start) out.gap_ok = false;
    }
    if (out.function_of_form && out.dim != full) out.gap_ok = false;
    return out;
}

}  // namespace crmoser
