#include "doctest.h"

#include "ffdyn/serialize.hpp"

using namespace ffdyn;
using ffdyn::json::Json;

TEST_CASE("json: polynomials and field elements") {
    FieldRef F = GaloisField::prime(5);
    Poly p = Poly::x(F).pow(2) + Poly::constant(F, 2);
    CHECK(json::poly(p) == Json::parse("[2, 0, 1]"));
    CHECK(json::ratfunc(RatFunc::t_pow(F, -1)) == Json::parse(R"({"num": [1], "den": [0, 1]})"));
    FieldRef Q = GaloisField::parse("q=25;modulus=2,1,1");
    Elem g = Q->generator();
    CHECK(json::elem(*Q, Q->add(g, Q->from_int(3))) == Json::parse("[3, 1]"));
    CHECK(json::rational(Rational(-3, 6)) == Json::parse(R"({"num": -1, "den": 2})"));
    ZPoly z = ZPoly::z(F);
    CHECK(json::zpoly(z) == Json::parse(R"([{"num": [], "den": [1]}, {"num": [1], "den": [1]}])"));
}

TEST_CASE("json: series triples") {
    FieldRef F = GaloisField::prime(5);
    RatFunc r = RatFunc::t(F) + RatFunc::from_int(F, 3) + RatFunc::t_pow(F, -2);
    Json s = json::series(LaurentSeries::from_ratfunc(r, 1, 10));
    CHECK(s["terms"] == Json::parse("[[1, 1, 1], [0, 1, 3], [-2, 1, 1]]"));
    CHECK(s["prec"] == "exact");  // a finite expansion stays exact
    Json w = json::series(LaurentSeries::from_ratfunc(RatFunc::t(F).inv() + RatFunc::from_int(F, 1), 1, 10).with_prec(6));
    CHECK(w["prec"] == Json::parse(R"({"num": 6, "den": 1})"));
    CHECK(w["terms"] == Json::parse("[[0, 1, 1], [-1, 1, 1]]"));
    Json h = json::series(LaurentSeries::monomial(F, 2, -1, 2));  // 2 t^(1/2)
    CHECK(h["terms"] == Json::parse("[[1, 2, 2]]"));
    CHECK(h["ram"] == 2);
    CHECK(h["prec"] == "exact");
}

TEST_CASE("json: Berkovich points") {
    FieldRef F = GaloisField::prime(5);
    RatFunc zero(F);
    CHECK(json::berk(BerkPoint::disc(zero, Rational(-2))) ==
          Json::parse(R"({"kind": "type2", "center": {"num": [], "den": [1]}, "logdiam": {"num": -2, "den": 1}})"));
    CHECK(json::berk(BerkPoint::type1(RatFunc::t(F)))["logdiam"] == "-inf");
    CHECK(json::berk(BerkPoint::type1(RatFunc::t(F)))["kind"] == "type1");
    CHECK(json::berk(BerkPoint::infinity())["logdiam"] == "+inf");
    CHECK(json::berk(BerkPoint::infinity())["kind"] == "infinity");
}

TEST_CASE("json: factorization certificate and continued fraction") {
    FieldRef F = GaloisField::prime(5);
    ZPoly z = ZPoly::z(F);
    ZPoly G = z.pow(4) - ZPoly::constant(RatFunc::t_pow(F, 2));
    Json fj = json::factorization(G, factor_bivariate(G));
    CHECK(fj["factors"].size() == 2);
    CHECK(fj["certificate"]["product_identity"] == true);
    BiPoly B = BiPoly::from_zpoly(G);
    Json bj = json::factorization(B, factor_bipoly(B));
    CHECK(bj["certificate"]["product_identity"] == true);
    // t + 1/t = [t; t]
    LaurentSeries a = LaurentSeries::from_ratfunc(RatFunc::t(F) + RatFunc::t_pow(F, -1), 1, 20);
    Json c = json::cf(continued_fraction(a, 5));
    REQUIRE(c["partial_quotients"].size() >= 2);
    CHECK(c["partial_quotients"][0] == Json::parse("[0, 1]"));
    CHECK(c["partial_quotients"][1] == Json::parse("[0, 1]"));
}

TEST_CASE("json: limit audit rows") {
    FieldRef F = GaloisField::prime(5);
    ZPoly z = ZPoly::z(F);
    RationalMap phi = RationalMap::polynomial(z * z + ZPoly::constant(RatFunc::t(F)));
    LimitAudit la = orbit_proximity_audit(phi, ProjPoint::affine(RatFunc(F)), {ProjPoint::infinity(F)}, 1, 3);
    Json j = json::limit_audit(la);
    CHECK(j["rows"][2] == Json::parse(R"({"n": 3, "deg_a": 4, "deg_b": 0, "h": 4, "lambda": {"inf": {"num": 4, "den": 1}}})"));
    CHECK(j["verdict"]["max_tail_ratio"]["inf"] == Json::parse(R"({"num": 1, "den": 1})"));
    CHECK(j["verdict"]["window_violations"] == 3);
    CHECK(j["verdict"].contains("fitted_constants"));
}
