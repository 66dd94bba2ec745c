#include <algorithm>

#include "ffdyn/error.hpp"
#include "ffdyn/laurent.hpp"

namespace ffdyn {

CFExpansion continued_fraction(const LaurentSeries& alpha, int budget) {
    if (alpha.ram() != 1) fail(ErrorKind::InvalidArgument, "continued fractions need an unramified series");
    FieldRef F = alpha.field();
    CFExpansion cf;
    Poly pm1 = Poly::constant(F, 1), qm1(F), pm2(F), qm2 = Poly::constant(F, 1);
    if (alpha.is_exact()) {
        // a Laurent polynomial in 1/t is a rational function: run Euclid exactly
        Poly num(F), den = Poly::monomial(F, 1, 0);
        int v = alpha.val();
        if (!alpha.is_zero()) {
            int top = v + static_cast<int>(alpha.coeffs().size()) - 1;
            int sh = std::max(top, 0);
            den = Poly::monomial(F, 1, static_cast<std::size_t>(sh));
            for (int k = v; k <= top; ++k) num.set(static_cast<std::size_t>(sh - k), alpha.coeff(k));
        }
        Poly a_num = num, a_den = den;
        while (true) {
            auto [a, r] = divmod(a_num, a_den);
            Poly pn = a * pm1 + pm2, qn = a * qm1 + qm2;
            if (qn.degree() > budget) break;
            cf.partial_quotients.push_back(a);
            cf.p.push_back(pn);
            cf.q.push_back(qn);
            cf.convergents.push_back(RatFunc::normalize(pn, qn));
            pm2 = std::move(pm1);
            qm2 = std::move(qm1);
            pm1 = pn;
            qm1 = qn;
            if (r.is_zero()) {
                cf.terminated = true;
                break;
            }
            a_num = std::move(a_den);
            a_den = std::move(r);
        }
    }
    LaurentSeries x = alpha;
    while (!alpha.is_exact()) {
        if (x.prec() <= 0) {
            cf.exhausted = true;
            break;
        }
        Poly a = x.polynomial_part();
        Poly pn = a * pm1 + pm2, qn = a * qm1 + qm2;
        if (qn.degree() > budget) break;
        cf.partial_quotients.push_back(a);
        cf.p.push_back(pn);
        cf.q.push_back(qn);
        cf.convergents.push_back(RatFunc::normalize(pn, qn));
        pm2 = std::move(pm1);
        qm2 = std::move(qm1);
        pm1 = pn;
        qm1 = qn;
        LaurentSeries f = x.fractional_part();
        if (f.is_zero()) {
            if (f.is_exact())
                cf.terminated = true;
            else
                cf.exhausted = true;
            break;
        }
        x = f.inv();
    }
    // ord(alpha - p_n/q_n) = ord(q_n alpha - p_n) + deg q_n, checked against deg q_n + deg q_{n+1}
    for (std::size_t n = 0; n < cf.q.size(); ++n) {
        LaurentSeries s = LaurentSeries::from_ratfunc(RatFunc(cf.q[n]), 1, LaurentSeries::kExact) * alpha -
                          LaurentSeries::from_ratfunc(RatFunc(cf.p[n]), 1, LaurentSeries::kExact);
        int dq = cf.q[n].degree();
        if (s.is_zero()) {
            if (s.is_exact()) {
                cf.approx_order.push_back(Rational(LaurentSeries::kExact));
                cf.verified.push_back(true);
            } else {
                cf.approx_order.push_back(Rational(s.prec() + dq));
                cf.verified.push_back(false);
            }
            continue;
        }
        Rational w(s.val() + dq);
        if (n + 1 < cf.q.size() && w != Rational(dq + cf.q[n + 1].degree()))
            fail(ErrorKind::InvalidArgument, "internal: continued fraction identity failed");
        cf.approx_order.push_back(w);
        cf.verified.push_back(true);
    }
    return cf;
}

ExponentReport exponent_estimate(const ZPoly& G, int budget, const PuiseuxOptions& opt) {
    if (G.degree() < 2) fail(ErrorKind::DegreeTooLow, "exponent needs an algebraic element of degree at least 2");
    if (budget < 1) fail(ErrorKind::InvalidArgument, "budget must be positive");
    ExponentReport rep;
    rep.degree = G.degree();
    Rational prec(2 * static_cast<std::int64_t>(G.degree()) * budget + 16);
    auto roots = newton_puiseux_roots(G, prec, opt);
    if (roots.empty()) fail(ErrorKind::NoEmbedding, "no embedding at infinity");
    rep.best = Rational(0);
    rep.tail = Rational(0);
    int tail_from = (budget + 1) / 2;
    for (std::size_t i = 0; i < roots.size(); ++i) {
        EmbeddingInfo info;
        info.index = static_cast<int>(i);
        info.ram = roots[i].ram;
        info.ord = roots[i].series.ord();
        info.series = roots[i].series;
        if (roots[i].ram != 1) {
            info.note = "ramified: |alpha - r| is bounded below for r in K";
            rep.embeddings.push_back(info);
            continue;
        }
        info.used = true;
        CFExpansion cf = continued_fraction(roots[i].series, budget);
        info.exhausted = cf.exhausted;
        for (std::size_t n = 0; n < cf.convergents.size(); ++n) {
            if (!cf.verified[n] || cf.approx_order[n] >= Rational(LaurentSeries::kExact)) continue;
            int h = height(cf.convergents[n]);
            if (h < 1 || h > budget) continue;
            Witness wt{cf.convergents[n], cf.approx_order[n], h, static_cast<int>(i)};
            rep.best = std::max(rep.best, wt.w / Rational(h));
            if (h >= tail_from) rep.tail = std::max(rep.tail, wt.w / Rational(h));
            rep.witnesses.push_back(std::move(wt));
        }
        rep.embeddings.push_back(info);
    }
    return rep;
}

const char* to_string(AuditVerdict v) {
    switch (v) {
        case AuditVerdict::Pass: return "PASS";
        case AuditVerdict::Fail: return "FAIL";
        case AuditVerdict::Fitted: return "FITTED";
        case AuditVerdict::NotApplicable: return "NOT_APPLICABLE";
    }
    return "?";
}

}  // namespace ffdyn
