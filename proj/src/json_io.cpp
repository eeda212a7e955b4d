#include "crmoser/json_io.hpp"

#include "crmoser/parser.hpp"

namespace crmoser {

namespace {

const Json& need(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw InputError(std::string("missing field \"") + key + "\"");
    return j.at(key);
}

unsigned exponent_from_json(const Json& j) {
    if (!j.is_number_integer() || j.get<long long>() < 0) throw InputError("exponents must be non-negative integers");
    return unsigned(j.get<long long>());
}

std::size_t size_from_json(const Json& j, const char* key) {
    const Json& v = need(j, key);
    if (!v.is_number_integer() || v.get<long long>() < 0) throw InputError(std::string("\"") + key + "\" must be a non-negative integer");
    return std::size_t(v.get<long long>());
}

GaussianRational gaussian_from_json(const Json& t) {
    Rational re = t.contains("re") ? rational_from_json(t.at("re")) : Rational(0);
    Rational im = t.contains("im") ? rational_from_json(t.at("im")) : Rational(0);
    return {re, im};
}

Json gaussian_to_json(const GaussianRational& c) { return Json{{"re", to_json(c.re())}, {"im", to_json(c.im())}}; }

std::vector<unsigned> exps(const Monomial& mono, std::size_t n, bool bar) {
    std::vector<unsigned> v(n);
    for (std::size_t a = 0; a < n; ++a) v[a] = bar ? mono.zbar(a) : mono.z(a);
    return v;
}

void read_multi_index(const Json& j, std::size_t n, Monomial& mono, bool bar) {
    if (!j.is_array() || j.size() != n) throw InputError("multi-index must have length n");
    for (std::size_t a = 0; a < n; ++a) {
        unsigned e = exponent_from_json(j[a]);
        if (bar)
            mono.set_zbar(a, e);
        else
            mono.set_z(a, e);
    }
}

}  // namespace

Json to_json(const Rational& q) { return to_string(q); }

Rational rational_from_json(const Json& j) {
    if (j.is_number_integer()) return Rational(j.get<long>());
    if (!j.is_string()) throw InputError("rationals are encoded as \"p/q\" strings");
    try {
        return parse_rational(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
    }
}

Json poly_to_json(const Poly& p) {
    Json terms = Json::array();
    for (const auto& [mono, c] : p.terms()) {
        terms.push_back(Json{{"z", exps(mono, p.n(), false)},
                             {"zbar", exps(mono, p.n(), true)},
                             {"u", mono.u()},
                             {"re", to_json(c.re())},
                             {"im", to_json(c.im())}});
    }
    return Json{{"n", p.n()}, {"terms", terms}};
}

Poly poly_from_json(const Json& j) {
    std::size_t n = size_from_json(j, "n");
    if (n < 1 || n > kMaxDim) throw InputError("n must lie in 1.." + std::to_string(kMaxDim));
    Poly p(n);
    for (const auto& t : need(j, "terms")) {
        Monomial mono;
        read_multi_index(need(t, "z"), n, mono, false);
        read_multi_index(need(t, "zbar"), n, mono, true);
        mono.set_u(t.contains("u") ? exponent_from_json(t.at("u")) : 0);
        p.add_term(mono, gaussian_from_json(t));
    }
    return p;
}

Json holo_to_json(const Poly& p) {
    Json terms = Json::array();
    for (const auto& [mono, c] : p.terms())
        terms.push_back(
            Json{{"z", exps(mono, p.n(), false)}, {"w", mono.u()}, {"re", to_json(c.re())}, {"im", to_json(c.im())}});
    return terms;
}

Poly holo_from_json(const Json& j, std::size_t n) {
    if (!j.is_array()) throw InputError("map components are arrays of terms");
    Poly p(n);
    for (const auto& t : j) {
        Monomial mono;
        read_multi_index(need(t, "z"), n, mono, false);
        if (t.contains("zbar")) throw InputError("map components must be holomorphic (no zbar)");
        mono.set_u(t.contains("w") ? exponent_from_json(t.at("w")) : 0);
        p.add_term(mono, gaussian_from_json(t));
    }
    return p;
}

Json matrix_to_json(const CMatrix& m) {
    Json rows = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(gaussian_to_json(m(r, c)));
        rows.push_back(row);
    }
    return rows;
}

CMatrix matrix_from_json(const Json& j) {
    if (!j.is_array()) throw InputError("matrix must be an array of rows");
    std::size_t rows = j.size();
    std::size_t cols = rows ? j[0].size() : 0;
    CMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        if (!j[r].is_array() || j[r].size() != cols) throw InputError("matrix rows differ in length");
        for (std::size_t c = 0; c < cols; ++c) {
            const Json& e = j[r][c];
            m(r, c) = e.is_object() ? gaussian_from_json(e) : GaussianRational(rational_from_json(e));
        }
    }
    return m;
}

Json vector_to_json(const CVector& v) {
    Json out = Json::array();
    for (const auto& c : v) out.push_back(gaussian_to_json(c));
    return out;
}

CVector vector_from_json(const Json& j) {
    if (!j.is_array()) throw InputError("vector must be an array");
    CVector v;
    for (const auto& e : j) v.push_back(e.is_object() ? gaussian_from_json(e) : GaussianRational(rational_from_json(e)));
    return v;
}

Json form_to_json(const HermitianForm& form) {
    Json j{{"n", form.n()}, {"m", form.m()}, {"kind", to_string(form.kind())}};
    if (form.kind() == FormKind::Explicit) j["matrix"] = matrix_to_json(form.matrix());
    return j;
}

HermitianForm form_from_json(const Json& j) {
    std::size_t n = size_from_json(j, "n");
    std::size_t m = j.contains("m") ? size_from_json(j, "m") : 0;
    std::string kind_name = j.contains("kind") ? j.at("kind").get<std::string>() : (m == 0 ? "diagonal" : "antidiagonal");
    FormKind kind;
    try {
        kind = form_kind_from_string(kind_name);
    } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
    }
    if (n < 1 || n > kMaxDim) throw InputError("n must lie in 1.." + std::to_string(kMaxDim));
    if (kind == FormKind::Explicit) {
        CMatrix h = matrix_from_json(need(j, "matrix"));
        if (h.rows() != n || h.cols() != n) throw InputError("form matrix must be n x n");
        return HermitianForm(m, std::move(h), FormKind::Explicit);
    }
    return standard_form(n, m, kind);
}

Json surface_to_json(const Hypersurface& surface) {
    return Json{{"form", form_to_json(surface.form())},
                {"F", poly_to_json(surface.F().poly())},
                {"max_weight", surface.max_weight()}};
}

Hypersurface surface_from_json(const Json& j) {
    if (!j.is_object()) throw InputError("surface must be a JSON object");
    if (j.contains("family")) return build_model(model_from_json(j));
    HermitianForm form = form_from_json(j.contains("form") ? j.at("form") : j);
    unsigned max_weight = j.contains("max_weight") ? exponent_from_json(j.at("max_weight")) : 0;
    if (!j.contains("F")) return Hypersurface(std::move(form), RealPoly(form.n()), max_weight);
    const Json& f = j.at("F");
    if (f.is_string()) return parse_surface(f.get<std::string>(), form, max_weight);
    Poly p = poly_from_json(f);
    if (p.n() != form.n()) throw InputError("F and the form differ in dimension");
    return Hypersurface(std::move(form), RealPoly(std::move(p)), max_weight);
}

Json jet_to_json(const JetMap& jet) {
    Json f = Json::array();
    for (const auto& c : jet.f()) f.push_back(holo_to_json(c));
    return Json{{"n", jet.n()}, {"D", jet.degree()}, {"f", f}, {"g", holo_to_json(jet.g())}};
}

JetMap jet_from_json(const Json& j) {
    const Json& f = need(j, "f");
    if (!f.is_array() || f.empty()) throw InputError("\"f\" must be a non-empty array of components");
    std::size_t n = f.size();
    if (j.contains("n") && size_from_json(j, "n") != n) throw InputError("\"n\" disagrees with the number of f components");
    std::vector<Poly> comps;
    for (const auto& c : f) comps.push_back(holo_from_json(c, n));
    return JetMap(std::move(comps), holo_from_json(need(j, "g"), n), exponent_from_json(need(j, "D")));
}

Json params_to_json(const AutoParams& p) {
    return Json{{"U", matrix_to_json(p.U)},
                {"a", vector_to_json(p.a)},
                {"lambda", to_json(p.lambda)},
                {"sigma", p.sigma},
                {"r", to_json(p.r)}};
}

AutoParams params_from_json(const Json& j, std::size_t n) {
    AutoParams p;
    p.U = j.contains("U") ? matrix_from_json(j.at("U")) : CMatrix::identity(n);
    p.a = j.contains("a") ? vector_from_json(j.at("a")) : CVector(n);
    p.lambda = j.contains("lambda") ? rational_from_json(j.at("lambda")) : Rational(1);
    p.sigma = j.contains("sigma") ? j.at("sigma").get<int>() : 1;
    p.r = j.contains("r") ? rational_from_json(j.at("r")) : Rational(0);
    if (p.U.rows() != n || p.U.cols() != n || p.a.size() != n) throw InputError("parameter sizes do not match n");
    return p;
}

Json s_element_to_json(const SElement& e) {
    return Json{{"n", e.n},
                {"m", e.m},
                {"mu", gaussian_to_json(e.mu)},
                {"c", gaussian_to_json(e.c)},
                {"x", vector_to_json(e.x)},
                {"A", matrix_to_json(e.A)}};
}

SElement s_element_from_json(const Json& j) {
    SElement e;
    e.n = size_from_json(j, "n");
    e.m = size_from_json(j, "m");
    if (e.n < 2) throw InputError("S elements need n >= 2");
    const Json& mu = need(j, "mu");
    e.mu = mu.is_object() ? gaussian_from_json(mu) : GaussianRational(rational_from_json(mu));
    if (j.contains("c")) {
        const Json& c = j.at("c");
        e.c = c.is_object() ? gaussian_from_json(c) : GaussianRational(rational_from_json(c));
    }
    e.x = j.contains("x") ? vector_from_json(j.at("x")) : CVector(e.n - 2);
    e.A = j.contains("A") ? matrix_from_json(j.at("A")) : CMatrix::identity(e.n - 2);
    if (e.n == 2) e.A = CMatrix(0, 0);
    return e;
}

ModelDescriptor model_from_json(const Json& j) {
    ModelDescriptor d;
    d.family = need(j, "family").get<std::string>();
    if (d.family != "umbilic" && d.family != "theorem1" && d.family != "theorem2" && d.family != "corollary2")
        throw InputError("unknown model family \"" + d.family + "\"");
    d.n = size_from_json(j, "n");
    d.m = j.contains("m") ? size_from_json(j, "m") : 0;
    if (d.n < 2 || d.n > kMaxDim) throw InputError("n must lie in 2.." + std::to_string(kMaxDim));
    std::string kind = j.contains("kind") ? j.at("kind").get<std::string>() : (d.m == 0 ? "diagonal" : "antidiagonal");
    try {
        d.kind = form_kind_from_string(kind);
    } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
    }
    if (j.contains("s")) d.s = rational_from_json(j.at("s"));
    if (j.contains("sign")) d.sign = j.at("sign").get<int>();
    if (j.contains("coeffs")) {
        for (const auto& c : j.at("coeffs")) {
            ModelDescriptor::Coeff k;
            if (c.contains("k")) k.k = exponent_from_json(c.at("k"));
            if (c.contains("r")) k.r = exponent_from_json(c.at("r"));
            if (c.contains("p")) k.p = exponent_from_json(c.at("p"));
            if (c.contains("q")) k.q = exponent_from_json(c.at("q"));
            k.c = rational_from_json(need(c, "c"));
            d.coeffs.push_back(k);
        }
    }
    return d;
}

Json model_to_json(const ModelDescriptor& d) {
    Json j{{"family", d.family}, {"n", d.n}, {"m", d.m}};
    if (d.family == "umbilic") j["kind"] = to_string(d.kind);
    if (d.family == "theorem2") j["s"] = to_json(d.s);
    if (d.family == "corollary2") j["sign"] = d.sign;
    Json coeffs = Json::array();
    for (const auto& c : d.coeffs) {
        Json e;
        if (d.family == "umbilic") e["k"] = c.k;
        e["r"] = c.r;
        if (d.family != "umbilic") {
            e["p"] = c.p;
            e["q"] = c.q;
        }
        e["c"] = to_json(c.c);
        coeffs.push_back(e);
    }
    if (d.family != "corollary2") j["coeffs"] = coeffs;
    return j;
}

Hypersurface build_model(const ModelDescriptor& d) {
    if (d.family == "umbilic") {
        std::vector<UmbilicTerm> t;
        for (const auto& c : d.coeffs) t.push_back({c.k, c.r, c.c});
        return model_umbilic(d.n, d.m, d.kind, t);
    }
    if (d.family == "theorem1") {
        if (d.m != 0) throw std::invalid_argument("theorem-1 models are definite (m = 0)");
        std::vector<Theorem1Term> t;
        for (const auto& c : d.coeffs) t.push_back({c.p, c.q, c.r, c.c});
        return model_theorem1(d.n, t);
    }
    return build_theorem2(d).surface;
}

Theorem2Model build_theorem2(const ModelDescriptor& d) {
    if (d.family == "corollary2") return model_corollary2(d.n, d.m, d.sign);
    if (d.family != "theorem2") throw std::invalid_argument("descriptor is not a theorem-2 family model");
    std::vector<Theorem2Term> t;
    for (const auto& c : d.coeffs) t.push_back({c.r, c.p, c.q, c.c});
    return model_theorem2(d.n, d.m, d.s, t);
}

Json normal_form_report_to_json(const NormalFormReport& r) {
    Json v = Json::array();
    for (const auto& x : r.violations) v.push_back(Json{{"condition", to_string(x.condition)}, {"residual", poly_to_json(x.residual)}});
    return Json{{"passed", r.passed()}, {"violations", v}};
}

Json classification_to_json(const Classification& c) {
    return Json{{"case", to_string(c.label)},
                {"dim", c.dim},
                {"function_of_form_and_u", c.function_of_form},
                {"gap_ok", c.gap_ok}};
}

}  // namespace crmoser
