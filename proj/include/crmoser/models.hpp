#pragma once

#include "crmoser/autgroup.hpp"
#include "crmoser/forms.hpp"
#include "crmoser/normal_form.hpp"

#include <optional>
#include <string>
#include <vector>

namespace crmoser {

// Central (n-2)x(n-2) block of the antidiagonal form of signature (n-m, m).
CMatrix central_block(std::size_t n, std::size_t m);

/// Parameters (mu, c, x, A) of an element of the group S.
///
///     [ mu  -mu conj(x)^T H' A   c         ]
///     [ 0    A                   x         ]
///     [ 0    0                   1/conj(mu)]
///
/// with A^T H' conj(A) = H' and 2Re(c/mu) + x^T H' conj(x) = 0.
struct SElement {
    std::size_t n = 2;
    std::size_t m = 1;
    GaussianRational mu{1};
    GaussianRational c{0};
    CVector x;
    CMatrix A;

    // Throws std::invalid_argument on any violated constraint.
    void validate() const;
};

CMatrix s_to_matrix(const SElement& e);
std::optional<SElement> decompose_s(const CMatrix& u, std::size_t m);
bool is_in_S(const CMatrix& u, std::size_t m);

// Dimension of Lie(S) from the exact nullspace of the linearized constraints.
std::size_t s_dimension(std::size_t n, std::size_t m);

// I: |mu| = 1 via mu = (1 - t^2 + 2it)/(1 + t^2), c = 0, x = 0, A = E.
SElement s_subgroup_I(std::size_t n, std::size_t m, const Rational& t);
// J: mu = 1, A = E, Re c fixed by the constraint.
SElement s_subgroup_J(std::size_t n, std::size_t m, const CVector& x, const Rational& im_c);
// K: mu = t > 0, c = 0, x = 0, A = E.
SElement s_subgroup_K(std::size_t n, std::size_t m, const Rational& t);

/// z -> lambda U z, w -> lambda^2 w with U in S and lambda = |mu|^{1/(s+1)}.
///
/// lambda is kept symbolic as base^exponent with base = |mu|^2 and
/// exponent = 1/(2(s+1)).
struct ScaledSAuto {
    Rational s;
    SElement element;

    Rational scale_base() const { return element.mu.norm(); }
    Rational scale_exponent() const { return Rational(1) / (2 * (s + 1)); }
    // lambda when it happens to be rational.
    std::optional<Rational> rational_scale() const;
};

struct UmbilicTerm {
    unsigned k;
    unsigned r;
    Rational c;
};
struct Theorem1Term {
    unsigned p;
    unsigned q;
    unsigned r;
    Rational c;
};
struct Theorem2Term {
    unsigned r;
    unsigned p;
    unsigned q;
    Rational c;
};

/// Surface sum C_rpq u^r |z_n|^{2p} <z,z>^q together with its coefficient table.
struct Theorem2Model {
    Hypersurface surface;
    Rational s;
    std::vector<Theorem2Term> terms;
};

// F = sum c u^r <z,z>^k with k >= 4.
Hypersurface model_umbilic(std::size_t n, std::size_t m, FormKind kind, const std::vector<UmbilicTerm>& terms);
// F = sum c u^r |z_1|^{2p} <z,z>^q over the diagonal form, p + q >= 4.
Hypersurface model_theorem1(std::size_t n, const std::vector<Theorem1Term>& terms);
// Antidiagonal form, every nonzero term with p >= 1 and (r + q - 1)/p = s; trace conditions enforced.
Theorem2Model model_theorem2(std::size_t n, std::size_t m, const Rational& s, const std::vector<Theorem2Term>& terms);
// <z,z> +- |z_n|^4 over the antidiagonal form.
Theorem2Model model_corollary2(std::size_t n, std::size_t m, int sign);

// Exponent identity per monomial plus the two geometric facts on U; when lambda is
// rational the invariance is also checked by direct substitution.
bool verify_scaled_automorphism(const Theorem2Model& model, const ScaledSAuto& sa);

enum class CaseLabel { Full, T1Case, T2Case, Other };
std::string to_string(CaseLabel label);

struct Classification {
    CaseLabel label = CaseLabel::Other;
    std::size_t dim = 0;
    bool function_of_form = false;
    // false when dim lands in the forbidden band, or when dim = n^2 and "F is a function of <z,z> and u" disagree
    bool gap_ok = true;
};

// Throws std::domain_error for spherical input or a surface not in normal form.
Classification classify(const Hypersurface& surface);

}  // namespace crmoser
