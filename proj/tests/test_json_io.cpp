#include "crmoser/json_io.hpp"

#include "support.hpp"

#include <doctest.h>

using namespace crmoser;
using testing::Gen;

TEST_CASE("polynomial JSON layout") {
    Monomial m;
    m.set_z(0, 2);
    m.set_zbar(1, 3);
    m.set_u(1);
    Poly p = Poly::monomial(2, m, GaussianRational(Rational(1, 2), Rational(-3)));
    Json j = poly_to_json(p);
    CHECK(j.dump() == R"({"n":2,"terms":[{"z":[2,0],"zbar":[0,3],"u":1,"re":"1/2","im":"-3"}]})");
    CHECK(poly_from_json(j) == p);
    CHECK_THROWS_AS(poly_from_json(Json::parse(R"({"n":2,"terms":[{"z":[2],"zbar":[0,3]}]})")), InputError);
    CHECK_THROWS_AS(poly_from_json(Json::parse(R"({"terms":[]})")), InputError);
    CHECK_THROWS_AS(poly_from_json(Json::parse(R"({"n":2,"terms":[{"z":[1,0],"zbar":[0,1],"re":"x"}]})")), InputError);
}

TEST_CASE("terms are serialized in canonical order") {
    Gen gen(103);
    RealPoly p = gen.real_poly(3, 9, 6);
    Json j = poly_to_json(p.poly());
    for (std::size_t i = 1; i < j["terms"].size(); ++i) {
        const Json& a = j["terms"][i - 1];
        const Json& b = j["terms"][i];
        auto key = [](const Json& t) {
            std::vector<unsigned> k{t["u"].get<unsigned>()};
            for (auto& e : t["z"]) k.push_back(e.get<unsigned>());
            for (auto& e : t["zbar"]) k.push_back(e.get<unsigned>());
            return k;
        };
        CHECK(key(a) < key(b));
    }
}

TEST_CASE("surfaces round trip through JSON") {
    Gen gen(107);
    for (auto [n, m, kind] : {std::tuple{2, 0, FormKind::Diagonal}, {3, 1, FormKind::Antidiagonal}, {3, 1, FormKind::Diagonal}}) {
        HermitianForm form = standard_form(n, m, kind);
        for (int trial = 0; trial < 5; ++trial) {
            Hypersurface s(form, gen.real_poly(n, 9, 4), 10);
            Hypersurface back = surface_from_json(Json::parse(surface_to_json(s).dump()));
            CHECK(back.F() == s.F());
            CHECK(back.form().matrix() == s.form().matrix());
            CHECK(back.form().kind() == s.form().kind());
            CHECK(back.max_weight() == s.max_weight());
            CHECK(surface_to_json(back) == surface_to_json(s));
        }
    }
    HermitianForm explicit_form(1, CMatrix{{0, GaussianRational(0, 1)}, {GaussianRational(0, -1), 0}});
    Hypersurface s(explicit_form, RealPoly(2));
    CHECK(surface_from_json(surface_to_json(s)).form().matrix() == explicit_form.matrix());
}

TEST_CASE("surface files accept text, shorthand and model descriptors") {
    Hypersurface a = surface_from_json(Json::parse(R"({"n":2,"m":1,"kind":"antidiagonal","F":"|z2|^4"})"));
    Hypersurface b = surface_from_json(Json::parse(R"({"family":"corollary2","n":2,"m":1,"sign":1})"));
    CHECK(a.F() == b.F());
    CHECK(a.form().matrix() == b.form().matrix());
    Hypersurface c = surface_from_json(Json::parse(R"({"form":{"n":3,"m":0},"F":"Q^4","max_weight":12})"));
    CHECK(c.max_weight() == 12);
    CHECK(surface_from_json(Json::parse(R"({"n":2})")).is_spherical());
    CHECK_THROWS_AS(surface_from_json(Json::parse(R"({"n":2,"kind":"weird"})")), InputError);
    CHECK_THROWS_AS(surface_from_json(Json::parse(R"({"family":"nope","n":2})")), InputError);
    CHECK_THROWS_AS(surface_from_json(Json::parse(R"([1,2])")), InputError);
}

TEST_CASE("jets, parameters and S elements round trip") {
    Gen gen(109);
    HermitianForm form = standard_form(3, 1, FormKind::Antidiagonal);
    AutoParams p{gen.pseudounitary(form.matrix()), gen.vector(3), Rational(3, 2), 1, Rational(-1, 3)};
    CHECK(params_from_json(params_to_json(p), 3) == p);
    JetMap jet = quadric_automorphism(p, form, 5);
    CHECK(jet_from_json(Json::parse(jet_to_json(jet).dump())) == jet);
    CHECK_THROWS_AS(jet_from_json(Json::parse(R"({"D":3,"f":[[{"z":[1],"zbar":[1]}]],"g":[]})")), InputError);

    SElement e = gen.s_element(4, 2);
    SElement back = s_element_from_json(s_element_to_json(e));
    CHECK(s_to_matrix(back) == s_to_matrix(e));
    SElement two = s_element_from_json(Json::parse(R"({"n":2,"m":1,"mu":"2"})"));
    CHECK(s_to_matrix(two) == CMatrix::diagonal({2, Rational(1, 2)}));
}

TEST_CASE("model descriptors") {
    ModelDescriptor d = model_from_json(Json::parse(
        R"({"family":"theorem2","n":3,"m":1,"s":"1","coeffs":[{"r":3,"p":2,"q":0,"c":"-1/2"}]})"));
    CHECK(d.s == 1);
    auto model = build_theorem2(d);
    CHECK(model.terms.size() == 1);
    ModelDescriptor again = model_from_json(model_to_json(d));
    CHECK(build_model(again).F() == model.surface.F());

    ModelDescriptor u = model_from_json(Json::parse(R"({"family":"umbilic","n":2,"m":0,"coeffs":[{"k":4,"r":0,"c":"1"}]})"));
    CHECK(build_model(u).F().poly() == pow(inner_poly(standard_form(2, 0, FormKind::Diagonal)).poly(), 4));
    CHECK_THROWS_AS(build_theorem2(u), std::invalid_argument);
    CHECK_THROWS_AS(build_model(model_from_json(Json::parse(R"({"family":"theorem1","n":2,"m":1,"coeffs":[]})"))),
                    std::invalid_argument);
}

TEST_CASE("report fragments") {
    HermitianForm e = standard_form(2, 0, FormKind::Diagonal);
    Poly q = inner_poly(e).poly();
    Json r = normal_form_report_to_json(check_normal_form(Hypersurface(e, RealPoly(q * q))));
    CHECK(r["passed"] == false);
    CHECK(r["violations"][0]["condition"] == "trF22");
    CHECK(poly_from_json(r["violations"][0]["residual"]) == q * GaussianRational(6));
    Json c = classification_to_json(classify(model_corollary2(2, 1, 1).surface));
    CHECK(c["case"] == "T2_CASE");
    CHECK(c["dim"] == 3);
}
