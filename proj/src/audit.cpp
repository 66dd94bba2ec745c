#include <algorithm>

#include "ffdyn/algext.hpp"
#include "ffdyn/error.hpp"
#include "ffdyn/laurent.hpp"

namespace ffdyn {

namespace {

// Lower bound for ord of a series in t-units.
Rational ord_lower(const LaurentSeries& s) {
    return s.is_zero() ? s.prec_t() : s.ord();
}

// C with w(alpha - r) <= d h(r) + C for every r in K: from
// G(r) = sum_{i>=1} G^[i](alpha) (r - alpha)^i and ord G(r) <= d h(r) for integral G.
Rational certified_constant(const ZPoly& Gint, const LaurentSeries& alpha) {
    Rational c(0);
    int prec = alpha.prec() + 8 * alpha.ram();
    for (int i = 1; i <= Gint.degree(); ++i) {
        ZPoly h = Gint.hasse(i);
        if (h.is_zero()) continue;
        Rational o = ord_lower(eval_at(h, alpha, prec));
        Rational neg = -o;
        if (i == 1)
            c = std::max(c, neg);
        else if (neg > 0)
            c = std::max(c, neg / Rational(i));
    }
    return c;
}

}  // namespace

BoundAudit bound_audit(const ZPoly& G, const ExponentReport& report) {
    BoundAudit a;
    int d = G.degree();
    a.degree = d;
    ZPoly Gint = BiPoly::from_zpoly(G).to_zpoly();
    std::vector<Rational> cert(report.embeddings.size(), Rational(0));
    for (auto& e : report.embeddings)
        if (e.used) cert[e.index] = certified_constant(Gint, e.series);
    a.liouville_fitted = Rational(0);
    a.liouville_certified = Rational(0);
    for (auto& c : cert) a.liouville_certified = std::max(a.liouville_certified, c);
    bool fail_seen = false;
    for (auto& w : report.witnesses) {
        Rational excess = w.w - Rational(d) * Rational(w.h);
        a.liouville_fitted = std::max(a.liouville_fitted, excess);
        if (excess > cert[w.embedding]) fail_seen = true;
    }
    a.liouville = report.witnesses.empty() ? AuditVerdict::NotApplicable
                  : fail_seen                ? AuditVerdict::Fail
                                             : AuditVerdict::Pass;

    a.ov_exponent = (d + 1) / 2 + 1;
    if (d < 4) {
        a.ov_note = "degree below 4";
        return a;
    }
    std::vector<PuiseuxRoot> roots;
    try {
        roots = newton_puiseux_roots(G, Rational(16));
    } catch (const Error& e) {
        a.ov_note = std::string("conjugates unavailable: ") + e.what();
        return a;
    }
    if (roots.size() < 4) {
        a.ov_note = "fewer than four conjugates embed at infinity";
        return a;
    }
    int n = std::min<int>(static_cast<int>(roots.size()), 6);
    bool found = false;
    for (int i = 0; i < n && !found; ++i)
        for (int j = i + 1; j < n && !found; ++j)
            for (int k = j + 1; k < n && !found; ++k)
                for (int l = k + 1; l < n && !found; ++l) {
                    try {
                        auto v = cross_ratio_of(G, roots, {i, j, k, l});
                        if (v.status == Constancy::NonConstant) {
                            found = true;
                            a.ov_note = "nonconstant cross-ratio of conjugates " + std::to_string(i) + "," +
                                        std::to_string(j) + "," + std::to_string(k) + "," + std::to_string(l);
                        }
                    } catch (const Error&) {
                    }
                }
    if (!found) {
        a.ov_note = "no nonconstant conjugate cross-ratio certified";
        return a;
    }
    a.ov_fitted = Rational(0);
    for (auto& w : report.witnesses)
        a.ov_fitted = std::max(a.ov_fitted, w.w - Rational(a.ov_exponent) * Rational(w.h));
    a.osgood_voloch = AuditVerdict::Fitted;
    return a;
}

}  // namespace ffdyn
