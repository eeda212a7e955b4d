#include "support.hpp"

#include <doctest.h>

using namespace crmoser;
using testing::evaluate;
using testing::Gen;

namespace {

Poly abs_power(std::size_t n, std::size_t a, unsigned p) {
    Monomial m;
    m.set_z(a, p);
    m.set_zbar(a, p);
    return Poly::monomial(n, m, 1);
}

Hypersurface surface(std::size_t n, std::size_t m, FormKind kind, const Poly& f, unsigned max_weight = 0) {
    return Hypersurface(standard_form(n, m, kind), RealPoly(f), max_weight);
}

Hypersurface q4(std::size_t n, std::size_t m) {
    HermitianForm form = standard_form(n, m, m ? FormKind::Antidiagonal : FormKind::Diagonal);
    Poly q = inner_poly(form).poly();
    return Hypersurface(form, RealPoly(pow(q, 4)));
}

// w as the extra variable of a holomorphic component
Poly w_poly(std::size_t n) { return Poly::u(n); }

AutoParams random_params(Gen& gen, const HermitianForm& form) {
    AutoParams p;
    p.U = gen.pseudounitary(form.matrix());
    p.a = gen.vector(form.n());
    p.lambda = Rational(gen.between(1, 3), gen.between(1, 2));
    p.lambda.canonicalize();
    p.sigma = 1;
    p.r = gen.small_rational();
    return p;
}

}  // namespace

TEST_CASE("parameters of a dilation") {
    HermitianForm form = standard_form(2, 0, FormKind::Diagonal);
    JetMap jet = JetMap::linear(CMatrix::identity(2), 2, 1, 4);
    CHECK(jet.f()[0] == Poly::z(2, 0) * GaussianRational(2));
    CHECK(jet.g() == w_poly(2) * GaussianRational(4));
    AutoParams p = extract_params(jet, form);
    CHECK(p.U.is_identity());
    CHECK(p.a == CVector(2));
    CHECK(p.lambda == 2);
    CHECK(p.sigma == 1);
    CHECK(p.r == 0);
}

TEST_CASE("parameter extraction errors") {
    HermitianForm diag11 = standard_form(2, 1, FormKind::Diagonal);
    std::vector<Poly> f{Poly::z(2, 0), Poly::z(2, 1)};
    JetMap flip(f, w_poly(2) * GaussianRational(-1), 4);
    CHECK_THROWS_WITH_AS(extract_params(flip, diag11), doctest::Contains("U not pseudounitary"), std::domain_error);
    JetMap irrational(f, w_poly(2) * GaussianRational(2), 4);
    CHECK_THROWS_WITH_AS(extract_params(irrational, diag11), doctest::Contains("irrational scale"), std::domain_error);
    JetMap flat(f, Poly(2), 4);
    CHECK_THROWS_AS(extract_params(flat, diag11), std::domain_error);
    JetMap complex_scale(f, w_poly(2) * GaussianRational(1, 1), 4);
    CHECK_THROWS_AS(extract_params(complex_scale, diag11), std::domain_error);
    CHECK_THROWS_AS(JetMap({Poly::z(2, 0) + Poly::constant(2, 1), Poly::z(2, 1)}, w_poly(2), 4), std::invalid_argument);
}

TEST_CASE("hyperquadric automorphism special cases") {
    HermitianForm form = standard_form(2, 0, FormKind::Diagonal);
    AutoParams id{CMatrix::identity(2), CVector(2), 1, 1, 0};
    CHECK(quadric_automorphism(id, form, 6) == JetMap::identity(2, 6));

    // r = -q gives z -> z/(1 + q w), w -> w/(1 + q w)
    Rational q(3, 2);
    AutoParams p{CMatrix::identity(2), CVector(2), 1, 1, -q};
    JetMap jet = quadric_automorphism(p, form, 7);
    Poly expected(2);
    for (unsigned k = 0; 1 + 2 * k <= 7; ++k) {
        Rational c = 1;
        for (unsigned j = 0; j < k; ++j) c *= -q;
        Monomial m;
        m.set_z(0, 1);
        m.set_u(k);
        expected.add_term(m, GaussianRational(c));
    }
    CHECK(jet.f()[0] == expected);

    AutoParams round{CMatrix::identity(2), CVector(2), 1, 1, 1};
    CHECK(extract_params(quadric_automorphism(round, form, 4), form) == round);
}

TEST_CASE("hyperquadric automorphisms preserve the quadric and round-trip") {
    Gen gen(61);
    for (auto [n, m] : {std::pair{2, 0}, {2, 1}, {3, 1}}) {
        HermitianForm form = standard_form(n, m, m ? FormKind::Antidiagonal : FormKind::Diagonal);
        Hypersurface quadric(form, RealPoly(n), 6);
        for (int trial = 0; trial < 4; ++trial) {
            AutoParams p = random_params(gen, form);
            JetMap jet = quadric_automorphism(p, form, 6);
            CHECK(verify_automorphism(quadric, jet, 5));
            CHECK(extract_params(jet, form) == p);
        }
    }
    HermitianForm form = standard_form(2, 1, FormKind::Antidiagonal);
    AutoParams p{CMatrix::identity(2), {1, 0}, 1, 1, 0};
    CHECK_THROWS_WITH_AS(verify_automorphism(Hypersurface(form, RealPoly(2), 6), quadric_automorphism(p, form, 4), 5),
                         doctest::Contains("truncation insufficient"), std::domain_error);
}

TEST_CASE("sigma = -1 automorphisms of the split quadric") {
    HermitianForm form = standard_form(2, 1, FormKind::Diagonal);
    CMatrix swap{{0, 1}, {1, 0}};
    AutoParams p{swap, {GaussianRational(1, 2), 1}, 2, -1, Rational(1, 3)};
    p.validate(form);
    JetMap jet = quadric_automorphism(p, form, 6);
    CHECK(verify_automorphism(Hypersurface(form, RealPoly(2), 6), jet, 5));
    CHECK(extract_params(jet, form) == p);
    AutoParams bad{CMatrix::identity(2), CVector(2), 1, -1, 0};
    CHECK_THROWS(bad.validate(form));
}

TEST_CASE("linear automorphisms") {
    Hypersurface c2 = surface(2, 1, FormKind::Antidiagonal, abs_power(2, 1, 2));
    CHECK(is_linear_automorphism(c2, CMatrix::diagonal({2, Rational(1, 2)}), 4, 1));
    Hypersurface t1 = surface(2, 0, FormKind::Diagonal, abs_power(2, 0, 4));
    CHECK(is_linear_automorphism(t1, CMatrix::diagonal({GaussianRational(0, 1), 1}), 1, 1));
    CHECK_FALSE(is_linear_automorphism(t1, CMatrix{{0, 1}, {1, 0}}, 1, 1));
    CHECK_THROWS(is_linear_automorphism(t1, CMatrix::diagonal({2, 1}), 1, 1));
}

TEST_CASE("automorphism verification on models") {
    Hypersurface t1 = surface(2, 0, FormKind::Diagonal, abs_power(2, 0, 4));
    JetMap rot = JetMap::linear(CMatrix::diagonal({GaussianRational(0, 1), 1}), 1, 1, 9);
    CHECK(verify_automorphism(t1, rot, 8));
    JetMap swap = JetMap::linear(CMatrix{{0, 1}, {1, 0}}, 1, 1, 9);
    CHECK_FALSE(verify_automorphism(t1, swap, 8));
    CHECK(mapping_residual(t1, t1, swap, 8).min_weight() == 8);
    CHECK(verify_automorphism(t1, swap, 7));
}

TEST_CASE("stabilizer dimensions of the basic models") {
    CHECK(stabilizer_algebra(q4(2, 0)).dim == 4);
    CHECK(stabilizer_algebra(surface(2, 0, FormKind::Diagonal, abs_power(2, 0, 4))).dim == 2);
    for (std::size_t n : {2u, 3u}) {
        for (std::size_t m = 0; 2 * m <= n; ++m) {
            auto alg = stabilizer_algebra(Hypersurface(standard_form(n, m, FormKind::Antidiagonal), RealPoly(n)));
            CHECK(alg.dim == n * n + 1);
            CHECK(alg.spherical);
        }
    }
}

TEST_CASE("stabilizer basis of the simplest indefinite model") {
    Hypersurface c2 = surface(2, 1, FormKind::Antidiagonal, abs_power(2, 1, 2));
    auto alg = stabilizer_algebra(c2);
    REQUIRE(alg.dim == 3);
    REQUIRE(alg.basis.size() == 3);
    QMatrix span;
    for (const auto& b : alg.basis) {
        const CMatrix& x = b.X.matrix();
        CHECK(x(1, 0).is_zero());
        CHECK(x(0, 0).re() == b.rho / 2);
        CHECK(x(1, 1) == -x(0, 0).conj());
        CHECK(x(0, 1).re() == 0);
        CHECK(infinitesimal_action(c2.F(), x, b.rho).is_zero());
        auto row = real_coordinates(x);
        row.push_back(b.rho);
        span.append_row(row);
    }
    CHECK(span.rank() == 3);
}

TEST_CASE("stabilizer dimension is invariant under pseudounitary coordinate changes") {
    Gen gen(67);
    struct Case {
        std::size_t n, m;
        Poly f;
    };
    std::vector<Case> cases{{2, 0, abs_power(2, 0, 4)}, {3, 0, abs_power(3, 0, 4)}, {2, 1, abs_power(2, 1, 2)}, {3, 1, abs_power(3, 2, 2)}};
    for (const auto& c : cases) {
        HermitianForm form = standard_form(c.n, c.m, c.m ? FormKind::Antidiagonal : FormKind::Diagonal);
        std::size_t base = stabilizer_algebra(Hypersurface(form, RealPoly(c.f))).dim;
        for (int trial = 0; trial < 2; ++trial) {
            CMatrix u = gen.pseudounitary(form.matrix());
            RealPoly moved = substitute_linear(RealPoly(c.f), u, 1);
            Hypersurface s(form, moved);
            CHECK(check_normal_form(s).passed());
            CHECK(stabilizer_algebra(s).dim == base);
        }
    }
}

TEST_CASE("stabilizer solutions form a Lie subalgebra") {
    for (const Hypersurface& s : {surface(3, 0, FormKind::Diagonal, abs_power(3, 0, 4)), surface(3, 1, FormKind::Antidiagonal, abs_power(3, 2, 2))}) {
        auto alg = stabilizer_algebra(s);
        for (const auto& a : alg.basis) {
            for (const auto& b : alg.basis) {
                CMatrix c = a.X.matrix() * b.X.matrix() - b.X.matrix() * a.X.matrix();
                CHECK(infinitesimal_action(s.F(), c, 0).is_zero());
            }
        }
    }
}

TEST_CASE("common symmetries of two functions are symmetries of their sum") {
    HermitianForm form = standard_form(2, 0, FormKind::Diagonal);
    RealPoly f(abs_power(2, 0, 4)), g(abs_power(2, 0, 2) * abs_power(2, 1, 2));
    auto fa = stabilizer_algebra(Hypersurface(form, f));
    for (const auto& b : fa.basis) {
        if (infinitesimal_action(g, b.X.matrix(), b.rho).is_zero())
            CHECK(infinitesimal_action(f + g, b.X.matrix(), b.rho).is_zero());
    }
    // adding terms can enlarge the algebra: (Q^4 - |z1|^8) + |z1|^8 = Q^4
    Poly q = inner_poly(form).poly();
    std::size_t before = stabilizer_algebra(Hypersurface(form, RealPoly(pow(q, 4) - abs_power(2, 0, 4)))).dim;
    CHECK(before < stabilizer_algebra(q4(2, 0)).dim);
}

TEST_CASE("operator T") {
    HermitianForm form = standard_form(2, 1, FormKind::Antidiagonal);
    RealPoly fg(abs_power(2, 1, 2));
    CHECK(T_operator(fg, CVector(2), form).is_zero());
    RealPoly t = T_operator(fg, {1, 0}, form);
    REQUIRE_FALSE(t.is_zero());
    CHECK(t.poly().min_weight() == 5);
    CHECK(t.poly().max_weight() == 5);

    Gen gen(71);
    for (int trial = 0; trial < 5; ++trial) {
        RealPoly p = gen.real_poly(2, 8, 2);
        RealPoly pw = trusted_real(p.poly().weight_component(p.poly().max_weight()));
        RealPoly q = gen.real_poly(2, 8, 2);
        CVector a = gen.vector(2), b = gen.vector(2);
        CVector ab{a[0] + b[0], a[1] + b[1]};
        Rational s = gen.small_rational();
        CHECK(T_operator(p + q, a, form) == T_operator(p, a, form) + T_operator(q, a, form));
        CHECK(T_operator(s * p, a, form) == s * T_operator(p, a, form));
        CHECK(T_operator(p, ab, form) == T_operator(p, a, form) + T_operator(p, b, form));
        RealPoly tw = T_operator(pw, a, form);
        if (!tw.is_zero()) {
            CHECK(tw.poly().min_weight() == pw.poly().max_weight() + 1);
            CHECK(tw.poly().max_weight() == pw.poly().max_weight() + 1);
        }
    }
}

TEST_CASE("operator T against pointwise evaluation") {
    // 2Re(-2i<z,a>F + (u + iQ) sum a_j F_j + 2i<z,a> sum z_j F_j + i<z,a>(u + iQ) F_u)
    Gen gen(73);
    HermitianForm form = standard_form(2, 1, FormKind::Antidiagonal);
    const GaussianRational i(0, 1);
    for (int trial = 0; trial < 5; ++trial) {
        RealPoly f = gen.real_poly(2, 8, 2);
        CVector a = gen.vector(2);
        CVector z = gen.vector(2);
        GaussianRational u(gen.small_rational());
        GaussianRational za = form.pair(z, a);
        GaussianRational q = form.pair(z, z);
        GaussianRational fz = evaluate(f.poly(), z, u);
        GaussianRational sum_a, sum_z;
        for (std::size_t j = 0; j < 2; ++j) {
            GaussianRational dj = evaluate(f.poly().partial(Var::z(j)), z, u);
            sum_a += a[j] * dj;
            sum_z += z[j] * dj;
        }
        GaussianRational du = evaluate(f.poly().partial(Var::u()), z, u);
        GaussianRational inner = GaussianRational(-2) * i * za * fz + (u + i * q) * sum_a + GaussianRational(2) * i * za * sum_z +
                                 i * za * (u + i * q) * du;
        GaussianRational expected(2 * inner.re());
        CHECK(evaluate(T_operator(f, a, form).poly(), z, u) == expected);
    }
}

TEST_CASE("weight identity for linear automorphisms and the identity") {
    Hypersurface c2 = surface(2, 1, FormKind::Antidiagonal, abs_power(2, 1, 2));
    CHECK(moser_weight_identity(c2, JetMap::identity(2, 8)).is_zero());
    CHECK(moser_weight_identity(c2, JetMap::linear(CMatrix::diagonal({2, Rational(1, 2)}), 4, 1, 8)).is_zero());
    Hypersurface t1 = surface(2, 0, FormKind::Diagonal, abs_power(2, 0, 4));
    CHECK(moser_weight_identity(t1, JetMap::linear(CMatrix::diagonal({GaussianRational(0, 1), 1}), 1, 1, 10)).is_zero());
    Gen gen(79);
    Hypersurface u4 = q4(3, 1);
    for (int trial = 0; trial < 3; ++trial) {
        CMatrix u = gen.pseudounitary(u4.form().matrix());
        CHECK(moser_weight_identity(u4, JetMap::linear(u, 1, 1, 10)).is_zero());
    }
}

TEST_CASE("reparametrization") {
    HermitianForm form = standard_form(2, 1, FormKind::Antidiagonal);
    Hypersurface quadric(form, RealPoly(2), 8);
    CHECK(reparametrize(quadric, Rational(2, 3), 8).is_spherical());

    Hypersurface c2 = surface(2, 1, FormKind::Antidiagonal, abs_power(2, 1, 2), 8);
    CHECK(reparametrize(c2, 0, 8).F() == c2.F());
    CHECK_THROWS_AS(reparametrize(c2, 1, 9), std::invalid_argument);

    Rational q(1, 2), q2(-1, 3);
    Hypersurface once = reparametrize(c2, q, 8);
    CHECK_FALSE(once.F() == c2.F());
    CHECK(reparametrize(once, q2, 8).F() == reparametrize(c2, q + q2, 8).F());
    CHECK(reparametrize(once, -q, 8).F() == c2.F());

    // the reparametrized surface is the image under z/(1+qw), w/(1+qw)
    AutoParams p{CMatrix::identity(2), CVector(2), 1, 1, -q};
    CHECK(mapping_residual(c2, once, quadric_automorphism(p, form, 8), 8).is_zero());
}
