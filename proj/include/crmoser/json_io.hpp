#pragma once

#include "crmoser/autgroup.hpp"
#include "crmoser/models.hpp"

#include <json.hpp>

#include <optional>
#include <string>

namespace crmoser {

using Json = nlohmann::ordered_json;

/// Malformed or inconsistent JSON input.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

Json to_json(const Rational& q);
Rational rational_from_json(const Json& j);

// {"n", "terms": [{"z", "zbar", "u", "re", "im"}]} in canonical order.
Json poly_to_json(const Poly& p);
Poly poly_from_json(const Json& j);

// Holomorphic series in (z, w): terms carry "z" and "w" only.
Json holo_to_json(const Poly& p);
Poly holo_from_json(const Json& j, std::size_t n);

Json matrix_to_json(const CMatrix& m);
CMatrix matrix_from_json(const Json& j);
Json vector_to_json(const CVector& v);
CVector vector_from_json(const Json& j);

// {"n", "m", "kind", "matrix"?}
Json form_to_json(const HermitianForm& form);
HermitianForm form_from_json(const Json& j);

/// Surface file: {"form": {...}, "F": "text" | {poly}, "max_weight"?}.
/// n, m and kind may also sit at top level; a model descriptor (with "family") is accepted too.
Json surface_to_json(const Hypersurface& surface);
Hypersurface surface_from_json(const Json& j);

Json jet_to_json(const JetMap& jet);
JetMap jet_from_json(const Json& j);

Json params_to_json(const AutoParams& p);
AutoParams params_from_json(const Json& j, std::size_t n);

Json s_element_to_json(const SElement& e);
SElement s_element_from_json(const Json& j);

/// {"family": "umbilic"|"theorem1"|"theorem2"|"corollary2", "n", "m", "s", "sign", "kind"?, "coeffs": [...]}
struct ModelDescriptor {
    std::string family;
    std::size_t n = 2;
    std::size_t m = 0;
    FormKind kind = FormKind::Diagonal;
    Rational s{0};
    int sign = 1;
    struct Coeff {
        unsigned k = 0, r = 0, p = 0, q = 0;
        Rational c;
    };
    std::vector<Coeff> coeffs;
};

ModelDescriptor model_from_json(const Json& j);
Json model_to_json(const ModelDescriptor& d);
Hypersurface build_model(const ModelDescriptor& d);
// For theorem2 and corollary2 descriptors.
Theorem2Model build_theorem2(const ModelDescriptor& d);

Json normal_form_report_to_json(const NormalFormReport& r);

Json classification_to_json(const Classification& c);

}  // namespace crmoser
