#pragma once

#include "crmoser/forms.hpp"
#include "crmoser/poly.hpp"

#include <string>
#include <vector>

namespace crmoser {

/// v = <z,z> + F(z, zbar, u) with every monomial of F of bidegree (k, l), k, l >= 2.
class Hypersurface {
public:
    // max_weight = 0 means "the largest weight present in F".
    Hypersurface(HermitianForm form, RealPoly f, unsigned max_weight = 0);

    std::size_t n() const { return form_.n(); }
    std::size_t m() const { return form_.m(); }
    const HermitianForm& form() const { return form_; }
    const RealPoly& F() const { return f_; }
    unsigned max_weight() const { return max_weight_; }
    bool is_spherical() const { return f_.is_zero(); }

private:
    HermitianForm form_;
    RealPoly f_;
    unsigned max_weight_;
};

// sum (H^{-1})_{ba} d^2 P / dz_a dzbar_b
Poly trace_op(const HermitianForm& form, const Poly& p);

enum class TraceCondition { TrF22, Tr2F23, Tr3F33 };
std::string to_string(TraceCondition c);

struct NormalFormViolation {
    TraceCondition condition;
    Poly residual;
};

struct NormalFormReport {
    std::vector<NormalFormViolation> violations;
    bool passed() const { return violations.empty(); }
};

NormalFormReport check_normal_form(const Hypersurface& surface);

// F_{2 2bar}(z, zbar, 0) == 0. Throws std::domain_error unless the surface is in normal form.
bool is_umbilic_origin(const Hypersurface& surface);

// Whether F is a polynomial in <z,z> and u.
bool is_function_of_form_and_u(const Hypersurface& surface);

}  // namespace crmoser
