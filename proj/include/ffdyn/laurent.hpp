#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ffdyn/bipoly.hpp"
#include "ffdyn/series.hpp"

namespace ffdyn {

struct PuiseuxOptions {
    int max_depth = 64;
    int max_ram = 32;
};

struct PuiseuxRoot {
    LaurentSeries series;
    int ram = 1;
    bool wild = false;   // a ramification step had index divisible by p
    bool exact = false;  // the root is a finite sum, found exactly
};

// Expansions at infinity of the roots of G in z, each known modulo t^(-prec)
// and verified by substitution. All series share one constant field (the
// smallest extension of G's field built by extension() that holds every
// leading coefficient).
std::vector<PuiseuxRoot> newton_puiseux_roots(const ZPoly& G, Rational prec, const PuiseuxOptions& opt = {});
std::vector<PuiseuxRoot> newton_puiseux_roots(const BiPoly& G, Rational prec, const PuiseuxOptions& opt = {});

struct CFExpansion {
    std::vector<Poly> partial_quotients;
    std::vector<Poly> p, q;               // convergent numerators/denominators, p[0]/q[0] = a_0/1
    std::vector<RatFunc> convergents;
    // ord(alpha - p_n/q_n), exact where verified, else a lower bound.
    std::vector<Rational> approx_order;
    std::vector<bool> verified;
    bool exhausted = false;   // stopped because the series ran out of precision
    bool terminated = false;  // alpha is rational and the expansion is complete
};

// Continued fraction of an unramified series, stopping once a denominator
// would exceed degree `budget`.
CFExpansion continued_fraction(const LaurentSeries& alpha, int budget);

struct Witness {
    RatFunc r;
    Rational w;  // ord(alpha - r)
    int h = 0;   // height of r
    int embedding = 0;
};

struct EmbeddingInfo {
    int index = 0;
    int ram = 1;
    bool used = false;  // an unramified embedding whose convergents were examined
    bool exhausted = false;
    Rational ord;       // ord of the root itself
    LaurentSeries series;
    std::string note;
};

struct ExponentReport {
    int degree = 0;
    Rational best;  // max of w/h over all witnesses; nondecreasing in the budget
    Rational tail;  // max of w/h over witnesses with h >= ceil(budget/2), a limsup estimate
    std::vector<Witness> witnesses;
    std::vector<EmbeddingInfo> embeddings;
};

ExponentReport exponent_estimate(const ZPoly& G, int budget, const PuiseuxOptions& opt = {});

enum class AuditVerdict { Pass, Fail, Fitted, NotApplicable };
const char* to_string(AuditVerdict v);

struct BoundAudit {
    int degree = 0;
    AuditVerdict liouville = AuditVerdict::NotApplicable;
    Rational liouville_fitted;     // smallest C with w <= d h + C on the witnesses
    Rational liouville_certified;  // a constant for which the inequality is proven
    AuditVerdict osgood_voloch = AuditVerdict::NotApplicable;
    int ov_exponent = 0;           // ceil(d/2) + 1
    Rational ov_fitted;
    std::string ov_note;
};

// Liouville audit plus, when d >= 4 and a nonconstant conjugate cross-ratio is
// certified, the fitted constant for the improved exponent.
BoundAudit bound_audit(const ZPoly& G, const ExponentReport& report);

// Kernel search for G with deg_z <= degz, coefficient degree <= degt and
// G(alpha) = 0 to the available precision. The result is primitive in
// F_q[t][z], descended to `base` when given and possible.
std::optional<ZPoly> minpoly_reconstruct(const LaurentSeries& alpha, int degz, int degt, FieldRef base = nullptr);

}  // namespace ffdyn
