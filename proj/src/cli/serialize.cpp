#include <numeric>

#include "ffdyn/serialize.hpp"

namespace ffdyn::json {

Json rational(const Rational& r) { return {{"num", r.numerator()}, {"den", r.denominator()}}; }

Json elem(const GaloisField& F, Elem a) {
    if (F.degree() == 1) return a;
    Json d = Json::array();
    for (unsigned i = 0; i < F.degree(); ++i) {
        d.push_back(a % F.characteristic());
        a /= F.characteristic();
    }
    return d;
}

Json poly(const Poly& p) {
    Json out = Json::array();
    for (Elem c : p.coeffs()) out.push_back(elem(*p.field(), c));
    return out;
}

Json ratfunc(const RatFunc& r) { return {{"num", poly(r.num())}, {"den", poly(r.den())}}; }

Json zpoly(const ZPoly& p) {
    Json out = Json::array();
    for (const RatFunc& c : p.coeffs()) out.push_back(ratfunc(c));
    return out;
}

Json bipoly(const BiPoly& p) {
    Json out = Json::array();
    for (const Poly& c : p.coeffs()) out.push_back(poly(c));
    return out;
}

Json series(const LaurentSeries& s) {
    Json terms = Json::array();
    const auto& c = s.coeffs();
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (!c[i]) continue;
        // coefficient of u^k with u = t^(-1/ram)
        Rational e(-(s.val() + static_cast<int>(i)), s.ram());
        terms.push_back({e.numerator(), e.denominator(), elem(*s.field(), c[i])});
    }
    Json j;
    j["field"] = s.field()->spec();
    j["ram"] = s.ram();
    j["terms"] = terms;
    if (s.is_exact()) j["prec"] = "exact";
    else j["prec"] = rational(s.prec_t());
    return j;
}

Json cf(const CFExpansion& e) {
    Json j;
    Json pq = Json::array(), q = Json::array(), ord = Json::array();
    for (const Poly& a : e.partial_quotients) pq.push_back(poly(a));
    for (const Poly& d : e.q) q.push_back(poly(d));
    for (std::size_t i = 0; i < e.approx_order.size(); ++i)
        ord.push_back({{"order", rational(e.approx_order[i])}, {"verified", e.verified[i]}});
    j["partial_quotients"] = pq;
    j["denominators"] = q;
    j["approx_order"] = ord;
    j["exhausted"] = e.exhausted;
    j["terminated"] = e.terminated;
    return j;
}

Json point(const ProjPoint& P) {
    if (P.is_infinity()) return "inf";
    return ratfunc(P.value());
}

Json logval(const LogVal& v) {
    if (v.is_neg_inf()) return "-inf";
    if (v.is_pos_inf()) return "+inf";
    return rational(v.value());
}

Json berk(const BerkPoint& z) {
    Json j;
    if (z.is_infinity()) {
        j["kind"] = "infinity";
        j["center"] = nullptr;
        j["logdiam"] = "+inf";
        return j;
    }
    j["kind"] = z.type() == 1 ? "type1" : "type2";
    if (const auto* r = std::get_if<RatFunc>(&z.center())) j["center"] = ratfunc(*r);
    else j["center"] = series(std::get<LaurentSeries>(z.center()));
    j["logdiam"] = logval(z.logdiam());
    return j;
}

Json factorization(const BiPoly& B, const std::vector<BiFactor>& factors) {
    Json fs = Json::array();
    BiPoly prod = BiPoly::constant(Poly::constant(B.field(), 1));
    for (const BiFactor& f : factors) {
        fs.push_back({{"factor", bipoly(f.factor)}, {"multiplicity", f.multiplicity}});
        prod = prod * f.factor.pow(static_cast<unsigned>(f.multiplicity));
    }
    const GaloisField& F = *B.field();
    Elem unit = B.is_zero() || prod.is_zero() ? 0 : F.div(B.lead().lead(), prod.lead().lead());
    Json j;
    j["input"] = bipoly(B);
    j["unit"] = elem(F, unit);
    j["factors"] = fs;
    j["certificate"] = {{"product_identity", !B.is_zero() && prod.scaled(unit) == B}};
    return j;
}

Json factorization(const ZPoly& P, const std::vector<ZFactor>& factors) {
    Json fs = Json::array();
    ZPoly prod = ZPoly::constant(RatFunc::from_int(P.field(), 1));
    for (const ZFactor& f : factors) {
        fs.push_back({{"factor", zpoly(f.factor)}, {"multiplicity", f.multiplicity}});
        prod = prod * f.factor.pow(static_cast<unsigned>(f.multiplicity));
    }
    Json j;
    j["input"] = zpoly(P);
    bool ok = !P.is_zero();
    if (ok) {
        RatFunc unit = P.lead() / prod.lead();
        j["unit"] = ratfunc(unit);
        ok = prod.scaled(unit) == P;
    }
    j["factors"] = fs;
    j["certificate"] = {{"product_identity", ok}};
    return j;
}

Json verdict(const ConstancyVerdict& v) {
    Json j;
    j["status"] = to_string(v.status);
    j["precision"] = rational(v.precision);
    j["threshold"] = rational(v.threshold);
    j["certificate"] = v.certificate ? zpoly(*v.certificate) : Json(nullptr);
    j["value"] = v.value ? series(*v.value) : Json(nullptr);
    j["note"] = v.note;
    return j;
}

Json verdict(const RiccatiResult& r) {
    Json j;
    j["riccati"] = r.yes;
    j["evidence"] = r.evidence;
    if (r.yes) j["certificate"] = {{"a", ratfunc(r.a)}, {"b", ratfunc(r.b)}, {"c", ratfunc(r.c)}};
    return j;
}

Json verdict(const FrobeniusResult& r) {
    Json j;
    j["frobenius"] = r.yes;
    if (r.yes) {
        j["n"] = r.n;
        j["certificate"] = {{"a", ratfunc(r.a)}, {"b", ratfunc(r.b)}, {"c", ratfunc(r.c)}, {"d", ratfunc(r.d)}};
    }
    return j;
}

Json exponent(const ExponentReport& rep, const BoundAudit& au) {
    Json j;
    j["degree"] = rep.degree;
    j["best"] = rational(rep.best);
    j["tail"] = rational(rep.tail);
    Json ws = Json::array();
    for (const Witness& w : rep.witnesses)
        ws.push_back({{"embedding", w.embedding}, {"r", ratfunc(w.r)}, {"h", w.h}, {"w", rational(w.w)}});
    j["witnesses"] = ws;
    Json es = Json::array();
    for (const EmbeddingInfo& e : rep.embeddings)
        es.push_back({{"index", e.index}, {"ram", e.ram}, {"used", e.used}, {"exhausted", e.exhausted}, {"ord", rational(e.ord)},
                      {"series", series(e.series)}, {"note", e.note}});
    j["embeddings"] = es;
    j["liouville"] = {{"verdict", to_string(au.liouville)}, {"fitted_C", rational(au.liouville_fitted)},
                      {"certified_C", rational(au.liouville_certified)}};
    j["osgood_voloch"] = {{"verdict", to_string(au.osgood_voloch)}, {"exponent", au.ov_exponent},
                          {"fitted_C", rational(au.ov_fitted)}, {"note", au.ov_note}};
    return j;
}

Json limit_audit(const LimitAudit& a, const Json& fitted_constants) {
    Json rows = Json::array();
    for (const OrbitRow& r : a.rows) {
        Json lam = Json::object();
        for (std::size_t i = 0; i < r.lambda.size(); ++i)
            lam[a.targets[i].to_string()] = r.hit[i] ? Json("hit") : rational(r.lambda[i]);
        rows.push_back({{"n", r.n}, {"deg_a", r.deg_a}, {"deg_b", r.deg_b}, {"h", r.h}, {"lambda", lam}});
    }
    Json mt = Json::object();
    for (std::size_t i = 0; i < a.targets.size(); ++i) mt[a.targets[i].to_string()] = rational(a.max_tail_ratio[i]);
    Json j;
    j["rows"] = rows;
    j["verdict"] = {{"max_tail_ratio", mt},
                    {"window_violations", a.window_violations},
                    {"window", {rational(Rational(1) / (Rational(2) + a.delta)), rational(Rational(2) + a.delta)}},
                    {"fitted_constants", fitted_constants},
                    {"advisory", true}};
    return j;
}

}  // namespace ffdyn::json
