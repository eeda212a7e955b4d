#include "crmoser/matrix.hpp"

#include <doctest.h>

using namespace crmoser;

TEST_CASE("parse_rational canonicalizes") {
    CHECK(parse_rational("3/6") == Rational(1, 2));
    CHECK(parse_rational("-4") == Rational(-4));
    CHECK(parse_rational(" +2 / 4 ") == Rational(1, 2));
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1/-2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
    Rational q = parse_rational("-12/18");
    CHECK(q.get_den() > 0);
    CHECK(to_string(q) == "-2/3");
}

TEST_CASE("exact roots") {
    CHECK(rational_sqrt(Rational(9, 4)).value() == Rational(3, 2));
    CHECK_FALSE(rational_sqrt(Rational(2)).has_value());
    CHECK_FALSE(rational_sqrt(Rational(-4)).has_value());
    CHECK(rational_power(Rational(16), Rational(1, 4)).value() == 2);
    CHECK(rational_power(Rational(4), Rational(3, 2)).value() == 8);
    CHECK(rational_power(Rational(4), Rational(-1, 2)).value() == Rational(1, 2));
    CHECK(rational_power(Rational(1, 8), Rational(1, 3)).value() == Rational(1, 2));
    CHECK_FALSE(rational_power(Rational(2), Rational(1, 2)).has_value());
    CHECK_THROWS_AS(rational_power(Rational(0), Rational(1)), std::invalid_argument);
}

TEST_CASE("Gaussian rational field operations") {
    GaussianRational a(Rational(1), Rational(2)), b(Rational(-3), Rational(1, 2));
    CHECK(a * b == GaussianRational(Rational(-4), Rational(-11, 2)));
    CHECK(a * a.inverse() == GaussianRational(1));
    CHECK((a / b) * b == a);
    CHECK(a.norm() == 5);
    CHECK(a.conj() == GaussianRational(Rational(1), Rational(-2)));
    CHECK(GaussianRational::i() * GaussianRational::i() == GaussianRational(-1));
    CHECK_THROWS_AS(GaussianRational(0).inverse(), std::domain_error);
    CHECK(a.to_string() == "1+2i");
    CHECK(GaussianRational(Rational(0), Rational(-1, 3)).to_string() == "-1/3i");
}

TEST_CASE("matrix inverse and determinant") {
    CMatrix m{{1, GaussianRational(0, 1)}, {2, 3}};
    CHECK(m.determinant() == GaussianRational(Rational(3), Rational(-2)));
    CHECK((m * m.inverse()).is_identity());
    CMatrix singular{{1, 2}, {2, 4}};
    CHECK_THROWS_AS(singular.inverse(), std::domain_error);
    CHECK(m.adjoint() == CMatrix{{1, 2}, {GaussianRational(0, -1), 3}});
}

TEST_CASE("rational nullspace") {
    QMatrix a;
    a.append_row({1, 2, 3});
    a.append_row({2, 4, 6});
    CHECK(a.rank() == 1);
    auto ns = a.nullspace();
    REQUIRE(ns.size() == 2);
    for (const auto& v : ns) CHECK(v[0] + 2 * v[1] + 3 * v[2] == 0);
}
