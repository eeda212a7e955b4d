#include "crmoser/autgroup.hpp"

#include <stdexcept>
#include <utility>

namespace crmoser {

namespace {

Monomial w_power(unsigned k) {
    Monomial m;
    m.set_u(k);
    return m;
}

Monomial z_single(std::size_t a) {
    Monomial m;
    m.set_z(a, 1);
    return m;
}

void require_holomorphic(const Poly& p, const char* what) {
    for (const auto& [m, c] : p.terms()) {
        if (m.zbar_degree() != 0) throw std::invalid_argument(std::string(what) + " depends on zbar");
    }
}

}  // namespace

void AutoParams::validate(const HermitianForm& form) const {
    if (sgn(lambda) <= 0) throw std::invalid_argument("lambda must be positive");
    if (sigma != 1 && sigma != -1) throw std::invalid_argument("sigma must be +1 or -1");
    if (a.size() != form.n()) throw std::invalid_argument("parameter a has the wrong dimension");
    auto s = is_pseudounitary(U, form);
    if (!s || *s != sigma) throw std::domain_error("U not pseudounitary with the given sigma");
}

// ---------------------------------------------------------------- JetMap

JetMap::JetMap(std::vector<Poly> f, Poly g, unsigned degree) : degree_(degree) {
    const std::size_t n = f.size();
    if (n == 0 || n > kMaxDim) throw std::invalid_argument("jet map needs 1..8 z-components");
    for (auto& p : f) {
        if (p.is_zero()) p = Poly(n);
        if (p.n() != n) throw std::invalid_argument("jet component dimension mismatch");
        require_holomorphic(p, "f");
        if (!p.coefficient(Monomial{}).is_zero()) throw std::invalid_argument("jet map must fix the origin");
        f_.push_back(p.truncated(degree));
    }
    if (g.is_zero()) g = Poly(n);
    if (g.n() != n) throw std::invalid_argument("jet component dimension mismatch");
    require_holomorphic(g, "g");
    if (!g.coefficient(Monomial{}).is_zero()) throw std::invalid_argument("jet map must fix the origin");
    g_ = g.truncated(degree);
}

JetMap JetMap::identity(std::size_t n, unsigned degree) {
    return linear(CMatrix::identity(n), 1, 1, degree);
}

JetMap JetMap::linear(const CMatrix& u, const Rational& lambda, int sigma, unsigned degree) {
    const std::size_t n = u.rows();
    if (!u.is_square()) throw std::invalid_argument("linear jet needs a square matrix");
    std::vector<Poly> f;
    for (std::size_t i = 0; i < n; ++i) {
        Poly p(n);
        for (std::size_t j = 0; j < n; ++j) p.add_term(z_single(j), u(i, j) * GaussianRational(lambda));
        f.push_back(std::move(p));
    }
    Poly g = Poly::monomial(n, w_power(1), GaussianRational(Rational(sigma) * lambda * lambda));
    return JetMap(std::move(f), std::move(g), degree);
}

// ---------------------------------------------------------------- parameters

AutoParams extract_params(const JetMap& jet, const HermitianForm& form) {
    const std::size_t n = jet.n();
    if (form.n() != n) throw std::invalid_argument("extract_params: dimension mismatch");
    if (jet.degree() < 4) throw std::domain_error("jet must be exact through weight 4 to determine r");

    GaussianRational gw = jet.g().coefficient(w_power(1));
    if (!gw.is_real() || gw.is_zero()) throw std::domain_error("dg/dw(0) must be real and nonzero");
    for (std::size_t a = 0; a < n; ++a)
        if (!jet.g().coefficient(z_single(a)).is_zero()) throw std::domain_error("dg/dz(0) must vanish");

    AutoParams p;
    p.sigma = sgn(gw.re()) > 0 ? 1 : -1;
    auto lam = rational_sqrt(abs(gw.re()));
    if (!lam) throw std::domain_error("irrational scale: supply parameters directly");
    p.lambda = *lam;

    GaussianRational inv_lambda(1 / p.lambda);
    p.U = CMatrix(n, n);
    CVector b(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) p.U(i, j) = jet.f()[i].coefficient(z_single(j)) * inv_lambda;
        b[i] = jet.f()[i].coefficient(w_power(1)) * inv_lambda;
    }
    if (p.U.determinant().is_zero()) throw std::domain_error("df/dz(0) is not invertible");
    p.a = p.U.inverse().apply(b);

    GaussianRational gww = jet.g().coefficient(w_power(2));
    p.r = gww.re() / (Rational(p.sigma) * p.lambda * p.lambda);

    auto s = is_pseudounitary(p.U, form);
    if (!s || *s != p.sigma) throw std::domain_error("U not pseudounitary");
    return p;
}

JetMap quadric_automorphism(const AutoParams& p, const HermitianForm& form, unsigned degree) {
    p.validate(form);
    const std::size_t n = form.n();
    const Poly w = Poly::u(n);

    GaussianRational aa = form.pair(p.a, p.a);
    // 1 - delta
    Poly t = inner_with_vector(form, p.a) * GaussianRational(0, 2) + w * GaussianRational(p.r, aa.re());
    Poly geometric = Poly::constant(n, 1);
    Poly power = Poly::constant(n, 1);
    for (unsigned k = 1; k <= degree; ++k) {
        power = mul_truncated(power, t, degree);
        if (power.is_zero()) break;
        geometric += power;
    }

    std::vector<Poly> f;
    for (std::size_t i = 0; i < n; ++i) {
        Poly num(n);
        for (std::size_t j = 0; j < n; ++j) {
            if (p.U(i, j).is_zero()) continue;
            num += (Poly::z(n, j) + w * p.a[j]) * (p.U(i, j) * GaussianRational(p.lambda));
        }
        f.push_back(mul_truncated(num, geometric, degree));
    }
    Poly g = mul_truncated(w * GaussianRational(Rational(p.sigma) * p.lambda * p.lambda), geometric, degree);
    return JetMap(std::move(f), std::move(g), degree);
}

bool is_linear_automorphism(const Hypersurface& surface, const CMatrix& u, const Rational& lambda, int sigma) {
    auto s = is_pseudounitary(u, surface.form());
    if (!s || *s != sigma) throw std::invalid_argument("is_linear_automorphism: U is not pseudounitary with this sigma");
    if (sgn(lambda) <= 0) throw std::invalid_argument("lambda must be positive");
    Rational scale = Rational(sigma) * lambda * lambda;
    RealPoly image = substitute_linear(surface.F(), u * GaussianRational(lambda), scale);
    return image == scale * surface.F();
}

// ---------------------------------------------------------------- stabilizer

Poly infinitesimal_action(const RealPoly& f, const CMatrix& x, const Rational& rho) {
    const std::size_t n = f.n();
    const Poly& p = f.poly();
    Poly holo(n);
    for (std::size_t j = 0; j < n; ++j) {
        Poly dj = p.partial(Var::z(j));
        if (dj.is_zero()) continue;
        Poly xz(n);
        for (std::size_t k = 0; k < n; ++k) {
            GaussianRational c = x(j, k);
            if (k == j) c += GaussianRational(rho);
            if (!c.is_zero()) xz += Poly::z(n, k) * c;
        }
        holo += xz * dj;
    }
    Poly out = holo + holo.conj();
    if (sgn(rho) != 0) {
        out += (Poly::u(n) * p.partial(Var::u())) * GaussianRational(2 * rho);
        out -= p * GaussianRational(2 * rho);
    }
    return out;
}

StabilizerAlgebra stabilizer_algebra(const Hypersurface& surface) {
    const auto& form = surface.form();
    const std::size_t n = form.n();
    auto xs = u_basis(form);
    StabilizerAlgebra result;

    if (surface.is_spherical()) {
        result.spherical = true;
        result.dim = n * n + 1;
        for (const auto& x : xs) result.basis.push_back({x, 0});
        result.basis.push_back({LieElement(CMatrix(n, n), form), 1});
        return result;
    }

    std::vector<Poly> columns;
    for (const auto& x : xs) columns.push_back(infinitesimal_action(surface.F(), x.matrix(), 0));
    columns.push_back(infinitesimal_action(surface.F(), CMatrix(n, n), 1));

    // Each column is real, so one monomial of every conjugate pair carries all constraints.
    std::map<Monomial, std::size_t> row_of;
    for (const auto& col : columns)
        for (const auto& [m, c] : col.terms())
            if (!(m.swapped() < m)) row_of.try_emplace(m, 0);
    std::size_t next = 0;
    for (auto& [m, idx] : row_of) idx = next++;

    QMatrix system(2 * row_of.size(), columns.size());
    for (std::size_t j = 0; j < columns.size(); ++j) {
        for (const auto& [m, c] : columns[j].terms()) {
            auto it = row_of.find(m);
            if (it == row_of.end()) continue;
            system(2 * it->second, j) = c.re();
            system(2 * it->second + 1, j) = c.im();
        }
    }

    for (const auto& v : system.nullspace()) {
        CMatrix x(n, n);
        for (std::size_t k = 0; k < xs.size(); ++k)
            if (sgn(v[k]) != 0) x += xs[k].matrix() * GaussianRational(v[k]);
        result.basis.push_back({LieElement(std::move(x), form), v.back()});
    }
    result.dim = result.basis.size();
    return result;
}

// ---------------------------------------------------------------- T operator

RealPoly T_operator(const RealPoly& fg, const CVector& a, const HermitianForm& form) {
    const std::size_t n = form.n();
    if (!fg.is_zero() && fg.n() != n) throw std::invalid_argument("T_operator: dimension mismatch");
    if (a.size() != n) throw std::invalid_argument("T_operator: vector dimension mismatch");
    const Poly& f = fg.poly();
    const GaussianRational i(0, 1);

    Poly za = inner_with_vector(form, a);
    Poly uq = Poly::u(n) + inner_poly(form).poly() * i;  // u + i<z,z>

    Poly sum_a(n), euler(n);
    for (std::size_t j = 0; j < n; ++j) {
        Poly dj = f.partial(Var::z(j));
        if (dj.is_zero()) continue;
        sum_a += dj * a[j];
        euler += Poly::z(n, j) * dj;
    }
    Poly inner = za * f * GaussianRational(0, -2);
    inner += uq * sum_a;
    inner += za * euler * GaussianRational(0, 2);
    inner += za * uq * f.partial(Var::u()) * i;
    return trusted_real(inner + inner.conj());
}

// ---------------------------------------------------------------- verification

Poly restrict_to_surface(const Poly& holo, const Hypersurface& surface, unsigned max_weight) {
    const std::size_t n = surface.n();
    require_holomorphic(holo, "holomorphic series");
    Poly wsub = Poly::u(n) + (inner_poly(surface.form()).poly() + surface.F().poly()) * GaussianRational(0, 1);
    PowerCache wpow(wsub, max_weight);

    std::map<unsigned, Poly> by_w;
    for (const auto& [m, c] : holo.terms()) {
        if (m.weight() > max_weight) continue;
        Monomial zm = m;
        zm.set_u(0);
        auto [it, inserted] = by_w.try_emplace(m.u(), n);
        it->second.add_term(zm, c);
    }
    Poly out(n);
    for (const auto& [k, zpart] : by_w) out += mul_truncated(zpart, wpow[k], max_weight);
    return out;
}

namespace {

// F(phi, conj phi, re_g) through weight max_weight.
Poly compose_F(const RealPoly& f, const std::vector<Poly>& phi, const Poly& re_g, unsigned max_weight) {
    const std::size_t n = phi.size();
    Poly out(n);
    if (f.is_zero()) return out;
    std::vector<PowerCache> zp, zbp;
    for (const auto& p : phi) {
        zp.emplace_back(p, max_weight);
        zbp.emplace_back(p.conj(), max_weight);
    }
    PowerCache up(re_g, max_weight);
    for (const auto& [m, c] : f.poly().terms()) {
        if (m.weight() > max_weight) continue;
        Poly term = Poly::constant(n, c);
        for (std::size_t a = 0; a < n && !term.is_zero(); ++a) {
            if (m.z(a)) term = mul_truncated(term, zp[a][m.z(a)], max_weight);
            if (m.zbar(a)) term = mul_truncated(term, zbp[a][m.zbar(a)], max_weight);
        }
        if (m.u() && !term.is_zero()) term = mul_truncated(term, up[m.u()], max_weight);
        out += term;
    }
    return out;
}

// <p, q> = sum h_ab p_a conj(q_b) for vectors of functions
Poly pair_functions(const HermitianForm& form, const std::vector<Poly>& p, const std::vector<Poly>& q,
                    unsigned max_weight) {
    const std::size_t n = form.n();
    Poly out(n);
    for (std::size_t a = 0; a < n; ++a) {
        Poly k(n);
        for (std::size_t b = 0; b < n; ++b) {
            const GaussianRational& h = form.matrix()(a, b);
            if (!h.is_zero()) k += q[b].conj() * h;
        }
        out += mul_truncated(p[a], k, max_weight);
    }
    return out;
}

}  // namespace

Poly mapping_residual(const Hypersurface& source, const Hypersurface& target, const JetMap& jet, unsigned max_weight) {
    if (source.n() != jet.n() || target.n() != jet.n()) throw std::invalid_argument("mapping_residual: dimension mismatch");
    if (max_weight > jet.degree())
        throw std::domain_error("truncation insufficient: weight " + std::to_string(max_weight) +
                                " exceeds the jet degree " + std::to_string(jet.degree()));
    std::vector<Poly> fs;
    for (const auto& fi : jet.f()) fs.push_back(restrict_to_surface(fi, source, max_weight));
    Poly gs = restrict_to_surface(jet.g(), source, max_weight);

    Poly residual = gs.imag_part();
    residual -= pair_functions(target.form(), fs, fs, max_weight);
    residual -= compose_F(target.F(), fs, gs.real_part(), max_weight);
    return residual.truncated(max_weight);
}

bool verify_automorphism(const Hypersurface& surface, const JetMap& jet, unsigned max_weight) {
    return mapping_residual(surface, surface, jet, max_weight).is_zero();
}

Poly moser_weight_identity(const Hypersurface& surface, const JetMap& jet) {
    const auto& form = surface.form();
    const std::size_t n = surface.n();
    if (surface.is_spherical()) throw std::domain_error("weight identity needs a non-spherical surface");
    const unsigned gamma = surface.F().poly().min_weight();
    if (jet.degree() < gamma + 1) throw std::domain_error("jet too short for the weight identity");

    AutoParams p = extract_params(jet, form);
    JetMap quad = quadric_automorphism(p, form, jet.degree());

    // (f~, g~) = jet - quadric automorphism with the same parameters
    std::vector<Poly> ft;
    for (std::size_t a = 0; a < n; ++a) ft.push_back((jet.f()[a] - quad.f()[a]).weight_component(gamma));
    Poly gt = (jet.g() - quad.g()).weight_component(gamma + 1);

    // lambda^{-1} U^{-1} f~_gamma
    CMatrix scaled = p.U.inverse() * GaussianRational(1 / p.lambda);
    std::vector<Poly> v(n, Poly(n));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            if (!scaled(a, b).is_zero()) v[a] += ft[b] * scaled(a, b);

    // evaluation on v = <z,z>: substitute w = u + i<z,z>
    Hypersurface quadric(form, RealPoly(n));
    const unsigned top = gamma + 1;
    Poly x = restrict_to_surface(gt, quadric, top) * GaussianRational(0, 1);
    for (std::size_t a = 0; a < n; ++a) {
        Poly va = restrict_to_surface(v[a], quadric, top);
        Poly k(n);
        for (std::size_t b = 0; b < n; ++b) {
            const GaussianRational& h = form.matrix()(a, b);
            if (!h.is_zero()) k += Poly::zbar(n, b) * h;
        }
        x += (va * k) * GaussianRational(2);
    }
    Poly lhs = x.real_part() + T_operator(trusted_real(surface.F().poly().weight_component(gamma)), p.a, form).poly();

    RealPoly f_next = trusted_real(surface.F().poly().weight_component(gamma + 1));
    Rational scale = Rational(p.sigma) * p.lambda * p.lambda;
    RealPoly moved = substitute_linear(f_next, p.U * GaussianRational(p.lambda), scale);
    Poly rhs = f_next.poly() - moved.poly() * GaussianRational(1 / scale);
    return (lhs - rhs).weight_component(gamma + 1);
}

// ---------------------------------------------------------------- reparametrization

Hypersurface reparametrize(const Hypersurface& surface, const Rational& q, unsigned max_weight) {
    const std::size_t n = surface.n();
    if (!surface.is_spherical() && max_weight > surface.max_weight())
        throw std::invalid_argument("reparametrize: weight exceeds the surface's declared truncation");
    if (surface.is_spherical() || sgn(q) == 0)
        return Hypersurface(surface.form(), trusted_real(surface.F().poly().truncated(max_weight)), max_weight);

    const Poly qpoly = inner_poly(surface.form()).poly();
    const GaussianRational i(0, 1);
    const GaussianRational one(1);
    const GaussianRational qc(q);

    // v' = <z',z'> + |1 - q w'|^2 F(z'/(1 - q w'), conj, Re(w'/(1 - q w'))), solved weight by weight
    Poly phi(n);
    for (unsigned iter = 0; iter <= max_weight + 2; ++iter) {
        Poly w = Poly::u(n) + (qpoly + phi) * i;
        Poly qw = w * qc;
        Poly inv(n);  // 1/(1 - q w)
        {
            Poly power = Poly::constant(n, 1);
            inv += power;
            for (unsigned k = 1; k <= max_weight; ++k) {
                power = mul_truncated(power, qw, max_weight);
                if (power.is_zero()) break;
                inv += power;
            }
        }
        std::vector<Poly> zs;
        for (std::size_t a = 0; a < n; ++a) zs.push_back(mul_truncated(Poly::z(n, a), inv, max_weight));
        Poly re_w = mul_truncated(w, inv, max_weight).real_part();
        Poly modulus = mul_truncated(Poly::constant(n, one) - qw, Poly::constant(n, one) - qw.conj(), max_weight);
        Poly next = mul_truncated(modulus, compose_F(surface.F(), zs, re_w, max_weight), max_weight);
        if (next == phi) return Hypersurface(surface.form(), RealPoly(std::move(next)), max_weight);
        phi = std::move(next);
    }
    throw std::logic_error("reparametrize: weight-graded iteration did not settle");
}

}  // namespace crmoser
