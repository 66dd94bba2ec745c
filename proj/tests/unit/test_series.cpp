#include "doctest.h"

#include <random>

#include "ffdyn/error.hpp"
#include "ffdyn/series.hpp"

using namespace ffdyn;

namespace {

Poly rand_poly(const FieldRef& F, int deg, std::mt19937_64& rng) {
    std::vector<Elem> v(deg + 1);
    for (auto& c : v) c = F->random(rng);
    if (v.back() == 0) v.back() = 1;
    return Poly(F, v);
}

}  // namespace

TEST_CASE("expansion of 1/(t - 1) at infinity") {
    auto F = GaloisField::prime(5);
    auto r = RatFunc::normalize(Poly::from_ints(F, {1}), Poly::from_ints(F, {-1, 1}));
    auto s = LaurentSeries::from_ratfunc(r, 1, 10);
    // 1/(t-1) = t^-1 + t^-2 + ...
    CHECK(s.val() == 1);
    CHECK(s.prec() == 10);
    for (int k = 1; k < 10; ++k) CHECK(s.coeff(k) == 1);
    CHECK(s.ord() == Rational(1));
}

TEST_CASE("series arithmetic is consistent with K") {
    std::mt19937_64 rng(21);
    auto F = GaloisField::prime(5);
    for (int i = 0; i < 200; ++i) {
        RatFunc a = RatFunc::normalize(rand_poly(F, static_cast<int>(rng() % 5), rng), rand_poly(F, static_cast<int>(rng() % 5), rng));
        RatFunc b = RatFunc::normalize(rand_poly(F, static_cast<int>(rng() % 5), rng), rand_poly(F, static_cast<int>(rng() % 5), rng));
        int e = 1 + static_cast<int>(rng() % 3);
        int prec = 20 * e;
        auto sa = LaurentSeries::from_ratfunc(a, e, prec), sb = LaurentSeries::from_ratfunc(b, e, prec);
        CHECK(agrees(sa * sb, LaurentSeries::from_ratfunc(a * b, e, prec)));
        CHECK(agrees(sa + sb, LaurentSeries::from_ratfunc(a + b, e, prec)));
        // an exact numerator must be given a precision before dividing by a non-monomial
        CHECK(agrees(sa.with_prec(prec) / sb, LaurentSeries::from_ratfunc(a / b, e, prec)));
        CHECK(sa.ord() == Rational(ord_inf(a)));
        CHECK(agrees(sa.frobenius(), sa.pow(5)));
        // precision loss of inversion is 2*val
        auto ia = sa.inv(prec);
        if (!sa.is_exact()) CHECK(ia.prec() == sa.prec() - 2 * sa.val());
        CHECK(agrees(ia * sa, LaurentSeries::constant(F, 1, e)));
    }
}

TEST_CASE("ramification and precision bookkeeping") {
    auto F = GaloisField::prime(3);
    auto s = LaurentSeries(F, 1, -1, {1, 2, 0, 1}, 5);
    auto r = s.ramified(2);
    CHECK(r.ram() == 2);
    CHECK(r.val() == -2);
    CHECK(r.prec() == 10);
    CHECK(r.coeff(0) == 2);
    CHECK(r.ord() == s.ord());
    CHECK(s.polynomial_part() == Poly::from_ints(F, {2, 1}));
    CHECK(s.fractional_part().val() == 2);
    auto z = LaurentSeries(F, 1, 0, {0, 0}, 2);
    CHECK(z.is_zero());
    CHECK_THROWS_AS(z.inv(), Error);
}

TEST_CASE("series in an extension field") {
    auto F = GaloisField::prime(5);
    auto E = F->extension(2);
    auto a = LaurentSeries(E, 1, 0, {E->generator(), 1}, 6);
    auto b = LaurentSeries::from_ratfunc(RatFunc::t(F), 2, 6);
    auto c = a * b;
    CHECK(c.ram() == 2);
    CHECK(same_field(c.field(), E));
    CHECK(c.val() == -2);
}
