#pragma once

#include "crmoser/forms.hpp"
#include "crmoser/normal_form.hpp"

#include <vector>

namespace crmoser {

/// Parameters (U, a, lambda, sigma, r) of a stability-group element.
struct AutoParams {
    CMatrix U;
    CVector a;
    Rational lambda{1};
    int sigma = 1;
    Rational r{0};

    // Checks lambda > 0, sigma = +-1 and is_pseudounitary(U) == sigma.
    void validate(const HermitianForm& form) const;

    friend bool operator==(const AutoParams& x, const AutoParams& y) {
        return x.U == y.U && x.a == y.a && x.lambda == y.lambda && x.sigma == y.sigma && x.r == y.r;
    }
};

/// Truncated map z -> f(z, w), w -> g(z, w) fixing the origin.
///
/// Components are holomorphic polynomials stored in Poly with the extra slot
/// holding the power of w. The map is exact through weight D, where z has
/// weight 1 and w weight 2; terms above weight D are dropped on construction.
class JetMap {
public:
    JetMap(std::vector<Poly> f, Poly g, unsigned degree);

    static JetMap identity(std::size_t n, unsigned degree);
    // z -> lambda U z, w -> sigma lambda^2 w
    static JetMap linear(const CMatrix& u, const Rational& lambda, int sigma, unsigned degree);

    std::size_t n() const { return f_.size(); }
    unsigned degree() const { return degree_; }
    const std::vector<Poly>& f() const { return f_; }
    const Poly& g() const { return g_; }

    friend bool operator==(const JetMap& a, const JetMap& b) {
        return a.degree_ == b.degree_ && a.f_ == b.f_ && a.g_ == b.g_;
    }

private:
    std::vector<Poly> f_;
    Poly g_;
    unsigned degree_;
};

// Reads (U, a, lambda, sigma, r) off the 1- and 2-jets.
// Throws std::domain_error for a non-real or zero dg/dw(0), an irrational scale,
// a non-invertible dz-block or a U that is not pseudounitary with the extracted sigma.
AutoParams extract_params(const JetMap& jet, const HermitianForm& form);

// z -> lambda U (z + a w) / delta, w -> sigma lambda^2 w / delta,
// delta = 1 - 2i<z,a> - (r + i<a,a>) w, expanded through weight `degree`.
JetMap quadric_automorphism(const AutoParams& p, const HermitianForm& form, unsigned degree);

// F(lambda U z, ., sigma lambda^2 u) == sigma lambda^2 F. Requires is_pseudounitary(U) == sigma.
bool is_linear_automorphism(const Hypersurface& surface, const CMatrix& u, const Rational& lambda, int sigma);

struct InfSym {
    LieElement X;
    Rational rho;
};

struct StabilizerAlgebra {
    std::size_t dim = 0;
    std::vector<InfSym> basis;
    bool spherical = false;
};

// Solutions (X, rho) of 2Re[sum ((rho E + X) z)_j dF/dz_j] + 2 rho u dF/du - 2 rho F = 0.
StabilizerAlgebra stabilizer_algebra(const Hypersurface& surface);

// Image of F under the infinitesimal symmetry (X, rho); zero iff it is a solution.
Poly infinitesimal_action(const RealPoly& f, const CMatrix& x, const Rational& rho);

RealPoly T_operator(const RealPoly& fg, const CVector& a, const HermitianForm& form);

// Holomorphic series h(z, w) restricted to w = u + i(<z,z> + F), through weight max_weight.
Poly restrict_to_surface(const Poly& holo, const Hypersurface& surface, unsigned max_weight);

// Im g - <f,f> - F_target(f, conj f, Re g) on the source surface, through weight max_weight.
Poly mapping_residual(const Hypersurface& source, const Hypersurface& target, const JetMap& jet, unsigned max_weight);

// True iff all terms of weight <= max_weight in the defining-equation residual vanish.
// Throws std::domain_error if max_weight exceeds the jet's truncation degree.
bool verify_automorphism(const Hypersurface& surface, const JetMap& jet, unsigned max_weight);

// Left side minus right side of the weight-(gamma+1) identity for an automorphism.
Poly moser_weight_identity(const Hypersurface& surface, const JetMap& jet);

// Image of the surface under z -> z/(1+qw), w -> w/(1+qw), re-solved through weight max_weight.
Hypersurface reparametrize(const Hypersurface& surface, const Rational& q, unsigned max_weight);

}  // namespace crmoser
