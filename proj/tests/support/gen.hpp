#pragma once
// Hand-rolled generators shared by the unit and acceptance suites.

#include <algorithm>
#include <random>

#include "ffdyn/berk.hpp"
#include "ffdyn/dynmap.hpp"

namespace gen {

using namespace ffdyn;

inline Poly poly(const FieldRef& F, int deg, std::mt19937_64& rng) {
    std::vector<Elem> v(deg + 1);
    for (auto& c : v) c = F->random(rng);
    return Poly(F, v);
}

inline RatFunc rat(const FieldRef& F, int deg, std::mt19937_64& rng) {
    Poly d = poly(F, static_cast<int>(rng() % (deg + 1)), rng);
    if (d.is_zero()) d = Poly::constant(F, 1);
    return RatFunc::normalize(poly(F, static_cast<int>(rng() % (deg + 1)), rng), d);
}

// Laurent polynomial sum_{k=-lo}^{hi} c_k t^k: |a - b| spreads over [-lo, hi].
inline RatFunc laurent(const FieldRef& F, int lo, int hi, std::mt19937_64& rng) {
    RatFunc r(F);
    for (int k = -lo; k <= hi; ++k)
        if (rng() % 2) r += RatFunc::t_pow(F, k).scaled(F->random(rng));
    return r;
}

inline Rational small_rational(int lo, int hi, std::mt19937_64& rng) {
    std::int64_t den = 1 + static_cast<std::int64_t>(rng() % 3);
    std::int64_t span = (hi - lo) * den;
    return Rational(lo * den + static_cast<std::int64_t>(rng() % (span + 1)), den);
}

// Finite point with center in a small lattice and radius in [-3, 3] or -inf.
inline BerkPoint berk(const FieldRef& F, std::mt19937_64& rng) {
    RatFunc a = laurent(F, 3, 3, rng);
    if (rng() % 4 == 0) return BerkPoint::type1(a);
    return BerkPoint::disc(a, small_rational(-3, 3, rng));
}

// Random map of degree exactly d with polynomial coefficients of t-degree <= cdeg.
inline RationalMap map(const FieldRef& F, int d, int cdeg, std::mt19937_64& rng) {
    for (;;) {
        std::vector<RatFunc> f(d + 1, RatFunc(F)), g(d + 1, RatFunc(F));
        int dg = static_cast<int>(rng() % (d + 1));
        for (int i = 0; i <= d; ++i) f[i] = RatFunc(poly(F, cdeg, rng));
        for (int i = 0; i <= dg; ++i) g[i] = RatFunc(poly(F, cdeg, rng));
        ZPoly fz(F, f), gz(F, g);
        if (gz.is_zero() || fz.is_zero()) continue;
        if (gcd(fz, gz).degree() > 0) continue;
        if (std::max(fz.degree(), gz.degree()) != d) continue;
        return RationalMap(fz, gz);
    }
}

struct Mobius {
    RatFunc a, b, c, d;
    // nullopt when the image is infinity
    std::optional<RatFunc> operator()(const RatFunc& x) const {
        RatFunc den = c * x + d;
        if (den.is_zero()) return std::nullopt;
        return (a * x + b) / den;
    }
};

inline Mobius mobius(const FieldRef& F, std::mt19937_64& rng) {
    for (;;) {
        Mobius m{RatFunc(poly(F, 2, rng)), RatFunc(poly(F, 2, rng)), RatFunc(poly(F, 2, rng)), RatFunc(poly(F, 2, rng))};
        if (!(m.a * m.d - m.b * m.c).is_zero()) return m;
    }
}

// Concentric scenario: zeta_i = zeta(a, r_i), S holding one point per annulus plus noise.
struct Scenario {
    std::array<BerkPoint, 4> zeta;
    std::vector<BerkPoint> S;
};

inline Scenario concentric(const FieldRef& F, std::mt19937_64& rng) {
    Scenario sc;
    RatFunc a = laurent(F, 2, 2, rng);
    Rational r = small_rational(-4, 0, rng);
    std::array<Rational, 5> rs;
    for (auto& x : rs) {
        x = r;
        r += Rational(1, 2) + small_rational(0, 2, rng);
    }
    for (int i = 0; i < 4; ++i) sc.zeta[i] = BerkPoint::disc(a, rs[i]);
    for (int i = 0; i < 8; ++i) sc.S.push_back(berk(F, rng));
    for (int i = 0; i < 4; ++i) {
        Rational s = (rs[i] + rs[i + 1]) / Rational(2);
        // an integer k strictly inside the annulus allows a Type I point a + t^k
        std::int64_t k = boost::rational_cast<std::int64_t>(rs[i]) + 1;
        if (Rational(k) < rs[i + 1] && rng() % 2)
            sc.S.push_back(BerkPoint::type1(a + RatFunc::t_pow(F, static_cast<int>(k))));
        else
            sc.S.push_back(BerkPoint::disc(a, s));
    }
    std::shuffle(sc.S.begin(), sc.S.end(), rng);
    std::shuffle(sc.zeta.begin(), sc.zeta.end(), rng);
    return sc;
}

// Separated pair: zeta_1, zeta_2 at distance p^D above both radii; two S points near each.
inline Scenario separated(const FieldRef& F, std::mt19937_64& rng) {
    Scenario sc;
    int D = static_cast<int>(rng() % 4);
    RatFunc a1 = laurent(F, 3, D - 1, rng);
    RatFunc a2 = a1 + RatFunc::t_pow(F, D).scaled(1 + static_cast<Elem>(rng() % (F->order() - 1)));
    auto radius = [&]() { return Rational(D - 1) - small_rational(0, 2, rng); };
    bool type1 = rng() % 2;
    auto make = [&](const RatFunc& c) { return type1 ? BerkPoint::type1(c) : BerkPoint::disc(c, radius()); };
    sc.zeta[0] = make(a1);
    sc.zeta[1] = make(a2);
    sc.zeta[2] = make(a1 + RatFunc::t_pow(F, D + 2));
    sc.zeta[3] = make(a2 + RatFunc::t_pow(F, D + 3));
    for (int i = 0; i < 6; ++i) sc.S.push_back(berk(F, rng));
    for (const RatFunc& c : {a1, a2})
        for (int j = 0; j < 2; ++j) {
            int k = D - 1 - j - 2 * static_cast<int>(rng() % 2);
            RatFunc near = c + RatFunc::t_pow(F, k).scaled(1 + static_cast<Elem>(rng() % (F->order() - 1)));
            if (rng() % 2) sc.S.push_back(BerkPoint::type1(near));
            else sc.S.push_back(BerkPoint::disc(near, Rational(k) - Rational(1, 2)));
        }
    std::shuffle(sc.S.begin(), sc.S.end(), rng);
    return sc;
}

}  // namespace gen
