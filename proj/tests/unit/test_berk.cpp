#include "doctest.h"

#include "ffdyn/error.hpp"
#include "gen.hpp"

using namespace ffdyn;

namespace {

struct Ctx {
    FieldRef F = GaloisField::prime(5);
    RatFunc c(std::int64_t v) const { return RatFunc::from_int(F, v); }
    RatFunc t(int k = 1) const { return RatFunc::t_pow(F, k); }
};

LogVal L(std::int64_t n, std::int64_t d = 1) { return LogVal(Rational(n, d)); }

}  // namespace

TEST_CASE("log values") {
    CHECK(LogVal::neg_inf() < L(-100));
    CHECK(L(100) < LogVal::pos_inf());
    CHECK(L(1, 2) < L(2, 3));
    CHECK(max(LogVal::neg_inf(), L(0)) == L(0));
    CHECK(min(LogVal::neg_inf(), L(0)) == LogVal::neg_inf());
    CHECK(L(1, 2) + L(1, 3) == L(5, 6));
    CHECK(L(3) + LogVal::neg_inf() == LogVal::neg_inf());
    CHECK_THROWS_AS(LogVal::pos_inf() + LogVal::neg_inf(), Error);
    CHECK(L(-7, 3).to_string() == "-7/3");
}

TEST_CASE("diameter examples") {
    Ctx k;
    CHECK(diam(BerkPoint::type1(k.t())) == LogVal::neg_inf());
    CHECK(diam(BerkPoint::disc(k.c(0), Rational(-2))) == L(-2));
    CHECK(diam(BerkPoint::infinity()) == LogVal::pos_inf());
    CHECK(BerkPoint::type1(k.t()).type() == 1);
    CHECK(BerkPoint::disc(k.c(0), Rational(1, 2)).type() == 2);
}

TEST_CASE("join examples") {
    Ctx k;
    BerkPoint a = BerkPoint::disc(k.c(0), Rational(-1)), b = BerkPoint::disc(k.c(0), Rational(-3));
    CHECK(join(a, b) == a);
    BerkPoint j = join(BerkPoint::type1(k.c(0)), BerkPoint::type1(k.t()));
    CHECK(j == BerkPoint::disc(k.c(0), Rational(1)));
    CHECK(j == BerkPoint::disc(k.t(), Rational(1)));
    CHECK(join(a, BerkPoint::infinity()).is_infinity());
    CHECK(join(BerkPoint::infinity(), BerkPoint::type1(k.t())).is_infinity());
}

TEST_CASE("canonical equality of discs") {
    Ctx k;
    CHECK(BerkPoint::disc(k.c(0), Rational(0)) == BerkPoint::disc(k.c(3), Rational(0)));
    CHECK(BerkPoint::disc(k.c(0), Rational(0)) != BerkPoint::disc(k.t(), Rational(0)));
    CHECK(BerkPoint::disc(k.t(-1), Rational(-1)) == BerkPoint::disc(k.c(0), Rational(-1)));
    CHECK(BerkPoint::disc(k.t(-1), Rational(-2)) != BerkPoint::disc(k.c(0), Rational(-2)));
    CHECK(BerkPoint::type1(k.t()) != BerkPoint::disc(k.t(), Rational(-5)));
}

TEST_CASE("hsia examples") {
    Ctx k;
    BerkPoint a = BerkPoint::type1(k.t(2) + k.c(1)), b = BerkPoint::type1(k.t(2) + k.t());
    CHECK(hsia(a, b) == L(1));  // |t - 1| = p
    CHECK(hsia(BerkPoint::disc(k.c(0), Rational(1, 2)), BerkPoint::disc(k.c(0), Rational(-3))) == L(1, 2));
    BerkPoint z = BerkPoint::disc(k.t(), Rational(2, 3));
    CHECK(hsia(z, z) == L(2, 3));
    CHECK(hsia(a, a) == LogVal::neg_inf());
    CHECK_THROWS_AS(hsia(a, BerkPoint::infinity()), Error);
}

TEST_CASE("cross-ratio examples") {
    Ctx k;
    BerkPoint z0 = BerkPoint::type1(k.c(0)), z1 = BerkPoint::type1(k.t()), z2 = BerkPoint::type1(k.t(2)),
              z3 = BerkPoint::type1(k.t(3));
    CHECK(cross_ratio_log(z0, z1, z2, z3) == L(0));
    try {
        cross_ratio_log(z0, z1, z2, z0);
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NotDistinct);
    }
    CHECK_THROWS_AS(cross_ratio_log(z0, z1, z2, BerkPoint::infinity()), Error);
    // Type I cross-ratio agrees with the classical one
    RatFunc a = k.t(), b = k.c(1), c = k.t(-2), d = k.t(3) + k.c(2);
    RatFunc cr = ((a - d) * (b - c)) / ((a - c) * (b - d));
    CHECK(cross_ratio_log(BerkPoint::type1(a), BerkPoint::type1(b), BerkPoint::type1(c), BerkPoint::type1(d)) ==
          L(-ord_inf(cr)));
}

TEST_CASE("series centers") {
    Ctx k;
    LaurentSeries s = LaurentSeries::from_ratfunc(k.t() + k.t(-2), 1, 30);
    BerkPoint a = BerkPoint::type1(s), b = BerkPoint::type1(k.t());
    CHECK(hsia(a, b) == L(-2));
    // sqrt(t): u = t^(-1/2), series u^(-1)
    LaurentSeries r = LaurentSeries::monomial(k.F, 1, -1, 2);
    CHECK(hsia(BerkPoint::type1(r), BerkPoint::type1(k.c(0))) == L(1, 2));
    CHECK(hsia(BerkPoint::type1(r), BerkPoint::type1(-r)) == L(1, 2));
    // 1/(1-t) and -1/t agree to precision 10 but differ at t^-11
    LaurentSeries g = LaurentSeries::from_ratfunc((k.c(1) - k.t()).inv(), 1, 10);
    LaurentSeries h = LaurentSeries::from_ratfunc(-k.t().inv() - k.t(-2) - k.t(-3) - k.t(-4) - k.t(-5) - k.t(-6) -
                                                      k.t(-7) - k.t(-8) - k.t(-9) - k.t(-10),
                                                  1, 10);
    try {
        hsia(BerkPoint::type1(g), BerkPoint::type1(h));
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::PrecisionExhausted);
    }
}

TEST_CASE("property: ultrametric kernel") {
    Ctx k;
    std::mt19937_64 rng(31);
    int strict = 0;
    for (int i = 0; i < 2000; ++i) {
        BerkPoint a = gen::berk(k.F, rng), b = gen::berk(k.F, rng), c = gen::berk(k.F, rng);
        LogVal ab = hsia(a, b), bc = hsia(b, c), ac = hsia(a, c);
        CHECK(ac <= max(ab, bc));
        if (ab != bc) {
            ++strict;
            CHECK(ac == max(ab, bc));
        }
        CHECK(hsia(a, b) == hsia(b, a));
        CHECK(join(a, b) == join(b, a));
        CHECK(join(a, a) == a);
        CHECK(hsia(a, a) == diam(a));
        CHECK(hsia(a, b) >= max(diam(a), diam(b)));
    }
    CHECK(strict > 500);
}

TEST_CASE("property: separated pairs keep their kernel") {
    Ctx k;
    std::mt19937_64 rng(32);
    int hits = 0;
    for (int i = 0; i < 2000; ++i) {
        BerkPoint z1 = gen::berk(k.F, rng), z2 = gen::berk(k.F, rng);
        // perturb to land near z1, z2 half the time
        auto near = [&](const BerkPoint& z) {
            if (rng() % 2) return gen::berk(k.F, rng);
            RatFunc c = std::get<RatFunc>(z.center()) + gen::laurent(k.F, 3, 0, rng);
            return rng() % 3 == 0 ? BerkPoint::type1(c) : BerkPoint::disc(c, gen::small_rational(-3, 1, rng));
        };
        BerkPoint e1 = near(z1), e2 = near(z2);
        if (max(hsia(z1, e1), hsia(z2, e2)) < hsia(z1, z2)) {
            ++hits;
            CHECK(hsia(e1, e2) == hsia(z1, z2));
        }
    }
    CHECK(hits > 200);
}

TEST_CASE("property: kernel balls are open discs") {
    Ctx k;
    std::mt19937_64 rng(33);
    for (int i = 0; i < 2000; ++i) {
        BerkPoint z = gen::berk(k.F, rng), eta = gen::berk(k.F, rng);
        LogVal r = LogVal(gen::small_rational(-3, 4, rng));
        if (!(r > diam(z))) continue;
        CHECK((hsia(z, eta) < r) == in_open_disc(eta, z.center(), r));
    }
}

TEST_CASE("property: Type I cross-ratio under Moebius maps") {
    Ctx k;
    std::mt19937_64 rng(34);
    for (int i = 0; i < 100; ++i) {
        std::array<RatFunc, 4> x;
        for (auto& v : x) v = gen::rat(k.F, 3, rng);
        bool distinct = true;
        for (int a = 0; a < 4; ++a)
            for (int b = a + 1; b < 4; ++b) distinct = distinct && x[a] != x[b];
        if (!distinct) continue;
        LogVal base = cross_ratio_log(BerkPoint::type1(x[0]), BerkPoint::type1(x[1]), BerkPoint::type1(x[2]),
                                      BerkPoint::type1(x[3]));
        for (int j = 0; j < 10; ++j) {
            gen::Mobius m = gen::mobius(k.F, rng);
            std::array<BerkPoint, 4> y;
            bool finite = true;
            for (int a = 0; a < 4; ++a) {
                auto im = m(x[a]);
                if (!im) finite = false;
                else y[a] = BerkPoint::type1(*im);
            }
            if (!finite) continue;
            CHECK(cross_ratio_log(y[0], y[1], y[2], y[3]) == base);
        }
    }
}

TEST_CASE("quadruple selection: concentric scenario") {
    Ctx k;
    std::array<BerkPoint, 4> zeta;
    for (int i = 0; i < 4; ++i) zeta[i] = BerkPoint::disc(k.c(0), Rational(i + 1));
    std::vector<BerkPoint> S;
    for (int j : {3, 5, 7, 9}) S.push_back(BerkPoint::disc(k.c(0), Rational(j, 2)));
    QuadrupleSelection q = select_quadruple(zeta, S);
    REQUIRE(q.found);
    CHECK(q.case_no == 1);
    CHECK(q.value > L(0));
    // z1 in (1,2), z2 in (3,4), z3 in (2,3), z4 beyond 4: (9/2 + 7/2) - (5/2 + 9/2)
    CHECK(q.value == L(1));
    CHECK(q.index == std::array<int, 4>{0, 2, 1, 3});
}

TEST_CASE("quadruple selection: separated pair scenario") {
    Ctx k;
    // zeta1 v zeta2 = zeta(0, 0)
    std::array<BerkPoint, 4> zeta = {BerkPoint::disc(k.c(0), Rational(-2)), BerkPoint::disc(k.c(1), Rational(-1)),
                                     BerkPoint::disc(k.t(2), Rational(-1)), BerkPoint::disc(k.t(3), Rational(-1))};
    std::vector<BerkPoint> S = {BerkPoint::type1(k.t(-1)), BerkPoint::type1(k.c(1) + k.t(-2)),
                                BerkPoint::type1(k.t(-3)), BerkPoint::type1(k.c(1) + k.t(-1))};
    QuadrupleSelection q = select_quadruple(zeta, S);
    REQUIRE(q.found);
    CHECK(q.case_no == 2);
    CHECK(q.value > L(0));
    // hsia(z1,z4) = hsia(z2,z3) = 0, hsia(z1,z3) = -1, hsia(z2,z4) = -1
    CHECK(q.value == L(2));
    CHECK(!select_quadruple(zeta, {}).found);
    CHECK(!select_quadruple(zeta, {}).reason.empty());
}

TEST_CASE("quadruple selection: hypotheses") {
    Ctx k;
    std::array<BerkPoint, 4> zeta = {BerkPoint::disc(k.c(0), Rational(1)), BerkPoint::type1(k.t()),
                                     BerkPoint::disc(k.c(0), Rational(3)), BerkPoint::disc(k.c(0), Rational(4))};
    CHECK(!select_quadruple(zeta, {}).found);
    zeta[1] = zeta[0];
    CHECK(select_quadruple(zeta, {}).reason == "base points not distinct");
}

TEST_CASE("property: randomized selection scenarios") {
    Ctx k;
    std::mt19937_64 rng(35);
    for (int i = 0; i < 100; ++i) {
        gen::Scenario a = gen::concentric(k.F, rng);
        QuadrupleSelection q = select_quadruple(a.zeta, a.S);
        REQUIRE(q.found);
        CHECK(q.case_no == 1);
        CHECK(cross_ratio_log(q.z[0], q.z[1], q.z[2], q.z[3]) > L(0));
        gen::Scenario b = gen::separated(k.F, rng);
        q = select_quadruple(b.zeta, b.S);
        REQUIRE(q.found);
        CHECK(q.case_no == 2);
        CHECK(cross_ratio_log(q.z[0], q.z[1], q.z[2], q.z[3]) > L(0));
    }
}
