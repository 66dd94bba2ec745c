#pragma once

#include "json.hpp"

#include "ffdyn/algext.hpp"
#include "ffdyn/berk.hpp"
#include "ffdyn/dynmap.hpp"
#include "ffdyn/laurent.hpp"

// JSON forms. Polynomials are ascending coefficient lists; a field element is
// an integer over a prime field and an ascending list of F_p digits otherwise.

namespace ffdyn::json {

using Json = nlohmann::ordered_json;

Json rational(const Rational& r);  // {num, den}
Json elem(const GaloisField& F, Elem a);
Json poly(const Poly& p);
Json ratfunc(const RatFunc& r);  // {num, den}
Json zpoly(const ZPoly& p);
Json bipoly(const BiPoly& p);
// {field, ram, terms: [[exp_num, exp_den, c], ...] with t-exponents, prec: {num, den} | "exact"}
Json series(const LaurentSeries& s);
Json cf(const CFExpansion& cf);
Json point(const ProjPoint& P);
// {kind, center, logdiam: {num, den} | "-inf" | "+inf"}
Json berk(const BerkPoint& z);
Json logval(const LogVal& v);

// Factorization of B with the product identity recomputed as a certificate.
Json factorization(const BiPoly& B, const std::vector<BiFactor>& factors);
Json factorization(const ZPoly& F, const std::vector<ZFactor>& factors);
Json verdict(const ConstancyVerdict& v);
Json verdict(const RiccatiResult& r);
Json verdict(const FrobeniusResult& r);
Json exponent(const ExponentReport& rep, const BoundAudit& audit);
// rows {n, deg_a, deg_b, h, lambda: {target: value}} plus a verdict block.
Json limit_audit(const LimitAudit& a, const Json& fitted_constants = Json::object());

}  // namespace ffdyn::json
