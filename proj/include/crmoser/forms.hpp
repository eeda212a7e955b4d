#pragma once

#include "crmoser/matrix.hpp"
#include "crmoser/poly.hpp"

#include <optional>
#include <string>
#include <vector>

namespace crmoser {

enum class FormKind { Diagonal, Antidiagonal, Explicit };

std::string to_string(FormKind kind);
FormKind form_kind_from_string(const std::string& s);

struct Inertia {
    std::size_t positive = 0;
    std::size_t negative = 0;
    std::size_t zero = 0;
};

// Sylvester inertia by symmetric (congruence) elimination; pivots chosen by smallest index.
Inertia hermitian_inertia(const CMatrix& h);

/// Non-degenerate Hermitian form <z,z> = sum h_ab z_a conj(z_b) of signature (n-m, m), n >= 2m.
class HermitianForm {
public:
    // Validates Hermitian symmetry, invertibility and the declared signature.
    HermitianForm(std::size_t m, CMatrix h, FormKind kind = FormKind::Explicit);

    std::size_t n() const { return h_.rows(); }
    std::size_t m() const { return m_; }
    FormKind kind() const { return kind_; }
    const CMatrix& matrix() const { return h_; }
    const CMatrix& inverse() const { return h_inv_; }

    // <x, y> = sum h_ab x_a conj(y_b)
    GaussianRational pair(const CVector& x, const CVector& y) const;

private:
    std::size_t m_;
    FormKind kind_;
    CMatrix h_;
    CMatrix h_inv_;
};

HermitianForm standard_form(std::size_t n, std::size_t m, FormKind kind);

// sum h_ab z_a zbar_b
RealPoly inner_poly(const HermitianForm& form);

// <z, a> = sum h_ab z_a conj(a_b), holomorphic linear in z.
Poly inner_with_vector(const HermitianForm& form, const CVector& a);

// +1 if U^T H conj(U) = H, -1 if it equals -H, nullopt otherwise.
std::optional<int> is_pseudounitary(const CMatrix& u, const HermitianForm& form);

/// Element X of u(H): X^T H + H conj(X) = 0.
class LieElement {
public:
    // Throws std::invalid_argument if x is not in u(H).
    LieElement(CMatrix x, const HermitianForm& form);

    const CMatrix& matrix() const { return x_; }

private:
    CMatrix x_;
};

bool in_lie_algebra(const CMatrix& x, const HermitianForm& form);

// Real basis of u(H), n^2 elements, from the exact nullspace on the 2n^2 real coordinates.
std::vector<LieElement> u_basis(const HermitianForm& form);

// Cayley transform (E + X)(E - X)^{-1}; pseudounitary whenever X is in u(H) and E - X is invertible.
CMatrix cayley(const CMatrix& x);

// Real coordinates of a complex matrix: (Re x_00, Im x_00, Re x_01, ...).
std::vector<Rational> real_coordinates(const CMatrix& x);
CMatrix from_real_coordinates(const std::vector<Rational>& v, std::size_t rows, std::size_t cols);

}  // namespace crmoser
