#include "crmoser/normal_form.hpp"

#include <stdexcept>
#include <utility>

namespace crmoser {

Hypersurface::Hypersurface(HermitianForm form, RealPoly f, unsigned max_weight)
    : form_(std::move(form)), f_(std::move(f)), max_weight_(max_weight) {
    if (!f_.is_zero() && f_.n() != form_.n()) throw std::invalid_argument("F and the Hermitian form differ in dimension");
    if (f_.is_zero()) f_ = RealPoly(form_.n());
    for (const auto& [mono, c] : f_.poly().terms()) {
        if (mono.z_degree() < 2 || mono.zbar_degree() < 2) {
            throw std::invalid_argument("F contains a term of bidegree (" + std::to_string(mono.z_degree()) + ", " +
                                        std::to_string(mono.zbar_degree()) + "); normal form needs k, l >= 2");
        }
    }
    unsigned w = f_.poly().max_weight();
    if (max_weight_ == 0) max_weight_ = w;
    if (w > max_weight_) throw std::invalid_argument("F has terms above the declared maximal weight");
}

Poly trace_op(const HermitianForm& form, const Poly& p) {
    const std::size_t n = form.n();
    if (!p.is_zero() && p.n() != n) throw std::invalid_argument("trace_op: dimension mismatch");
    Poly out(n);
    const CMatrix& inv = form.inverse();
    for (std::size_t b = 0; b < n; ++b) {
        Poly db = p.partial(Var::zbar(b));
        if (db.is_zero()) continue;
        for (std::size_t a = 0; a < n; ++a) {
            const GaussianRational& c = inv(b, a);
            if (c.is_zero()) continue;
            out += db.partial(Var::z(a)) * c;
        }
    }
    return out;
}

std::string to_string(TraceCondition c) {
    switch (c) {
        case TraceCondition::TrF22: return "trF22";
        case TraceCondition::Tr2F23: return "tr2F23";
        case TraceCondition::Tr3F33: return "tr3F33";
    }
    return "";
}

NormalFormReport check_normal_form(const Hypersurface& surface) {
    const auto& form = surface.form();
    const Poly& f = surface.F().poly();
    NormalFormReport report;

    Poly t22 = trace_op(form, f.bidegree_component(2, 2));
    if (!t22.is_zero()) report.violations.push_back({TraceCondition::TrF22, std::move(t22)});

    Poly t23 = trace_op(form, trace_op(form, f.bidegree_component(2, 3)));
    if (!t23.is_zero()) report.violations.push_back({TraceCondition::Tr2F23, std::move(t23)});

    Poly t33 = trace_op(form, trace_op(form, trace_op(form, f.bidegree_component(3, 3))));
    if (!t33.is_zero()) report.violations.push_back({TraceCondition::Tr3F33, std::move(t33)});
    return report;
}

bool is_umbilic_origin(const Hypersurface& surface) {
    if (!check_normal_form(surface).passed())
        throw std::domain_error("umbilicity is only defined here for surfaces in normal form");
    return surface.F().poly().bidegree_component(2, 2).u_coefficient(0).is_zero();
}

bool is_function_of_form_and_u(const Hypersurface& surface) {
    const Poly& f = surface.F().poly();
    if (f.is_zero()) return true;
    const Poly q = inner_poly(surface.form()).poly();

    PowerCache qpow(q, ~0u);
    for (unsigned r = 0; r <= f.max_u_degree(); ++r) {
        Poly rest = f.u_coefficient(r);
        while (!rest.is_zero()) {
            // peel off the top bidegree against the matching power of <z,z>
            unsigned k = 0, l = 0;
            for (const auto& [mono, c] : rest.terms()) {
                unsigned d = mono.z_degree() + mono.zbar_degree();
                if (d > k + l) {
                    k = mono.z_degree();
                    l = mono.zbar_degree();
                }
            }
            if (k != l) return false;
            Poly comp = rest.bidegree_component(k, k);
            const Poly& qk = qpow[k];
            const auto& [lead, lead_c] = *qk.terms().begin();
            GaussianRational c = comp.coefficient(lead) / lead_c;
            if (c.is_zero()) return false;
            Poly reduced = comp - qk * c;
            if (!reduced.is_zero()) return false;
            rest -= comp;
        }
    }
    return true;
}

}  // namespace crmoser
