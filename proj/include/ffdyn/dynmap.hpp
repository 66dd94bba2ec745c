#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "ffdyn/algext.hpp"

namespace ffdyn {

// A point of P^1(K): either infinity or an affine value x.
class ProjPoint {
public:
    ProjPoint() = default;
    static ProjPoint affine(const RatFunc& x) { return ProjPoint(x, false); }
    static ProjPoint infinity(FieldRef F) { return ProjPoint(RatFunc(std::move(F)), true); }
    // [X : Y] with X, Y not both zero.
    static ProjPoint from_homog(const Poly& X, const Poly& Y);

    bool is_infinity() const { return inf_; }
    const RatFunc& value() const { return x_; }
    const FieldRef& field() const { return x_.field(); }
    // Coprime integral coordinates (a, b) with the point equal to [a : b].
    std::pair<Poly, Poly> integral() const;
    int height() const;

    friend bool operator==(const ProjPoint& a, const ProjPoint& b) { return a.inf_ == b.inf_ && (a.inf_ || a.x_ == b.x_); }
    friend bool operator!=(const ProjPoint& a, const ProjPoint& b) { return !(a == b); }
    friend bool operator<(const ProjPoint& a, const ProjPoint& b);
    std::string to_string() const;

private:
    ProjPoint(RatFunc x, bool inf) : x_(std::move(x)), inf_(inf) {}
    RatFunc x_;
    bool inf_ = false;
};

// phi(z) = f(z)/g(z) in K(z), stored reduced with g monic, together with an
// integral pair (F, G) in F_q[t][z] of joint content 1 representing the same map.
class RationalMap {
public:
    RationalMap() = default;
    // Cancels common factors. Degree-1 maps are allowed; audits require d >= 2.
    RationalMap(const ZPoly& f, const ZPoly& g);
    static RationalMap identity(FieldRef F);
    static RationalMap polynomial(const ZPoly& f);

    const FieldRef& field() const { return F_.field(); }
    int degree() const { return d_; }
    // f and g over K with g monic (built on first use).
    const ZPoly& f() const { return over_k().first; }
    const ZPoly& g() const { return over_k().second; }
    const BiPoly& F() const { return F_; }
    const BiPoly& G() const { return G_; }

    ProjPoint operator()(const ProjPoint& P) const;
    // phi(psi(z))
    friend RationalMap compose(const RationalMap& phi, const RationalMap& psi);
    friend bool operator==(const RationalMap& a, const RationalMap& b) { return a.F_ == b.F_ && a.G_ == b.G_; }
    // The map in the chart w = 1/z at both ends: 1/phi(1/w).
    RationalMap conjugate_by_inversion() const;

    std::string to_string() const;

private:
    // (F, G) already coprime in z: strip the joint content and normalize the scalar.
    void set_integral(BiPoly F, BiPoly G);
    const std::pair<ZPoly, ZPoly>& over_k() const;
    struct OverK {
        std::once_flag once;
        std::pair<ZPoly, ZPoly> fg;
    };
    BiPoly F_, G_;
    int d_ = 0;
    std::shared_ptr<OverK> over_;
};

// n-fold iterate (identity for n = 0); cached per map instance value.
RationalMap iterate(const RationalMap& phi, int n);

// Wronskian F'G - FG' of the integral pair.
BiPoly wronskian(const RationalMap& phi);

// A point of P^1(K-bar) given by an irreducible minimal polynomial, or infinity.
struct AlgPoint {
    bool at_infinity = false;
    ZPoly minpoly;  // monic irreducible over K when finite
    static AlgPoint infinity() { return {true, ZPoly()}; }
    static AlgPoint of(const ProjPoint& P);
    int degree() const { return at_infinity ? 1 : minpoly.degree(); }
    std::optional<ProjPoint> rational(const FieldRef& F) const;
    std::string to_string() const;
};

int ramification_index(const RationalMap& phi, const AlgPoint& a);
inline int ramification_index(const RationalMap& phi, const ProjPoint& P) { return ramification_index(phi, AlgPoint::of(P)); }

struct CritDatum {
    AlgPoint point;
    int e = 0;
};

struct CriticalPoints {
    bool inseparable = false;
    std::vector<CritDatum> points;  // one entry per Galois orbit
};
CriticalPoints critical_points(const RationalMap& phi);

// max(max coefficient t-degree of F, G; deg_t of the homogeneous resultant).
int height_discrepancy_bound(const RationalMap& phi);
// Provable bound for |h(phi P) - d h(P)| on P^1(K-bar): max(C_phi, (2d-1) * max coefficient degree).
int certified_height_constant(const RationalMap& phi);
// deg_t of Res(F^hom, G^hom) (degree d forms).
int resultant_degree(const RationalMap& phi);
// Places of naive bad reduction: irreducible factors of the resultant, plus infinity when
// the coefficient degrees are positive.
std::vector<Poly> bad_reduction_places(const RationalMap& phi, bool& at_infinity);

struct CanonicalHeight {
    Rational estimate;
    Rational error_bound;
};
CanonicalHeight canonical_height(const RationalMap& phi, const ProjPoint& P, int n);

// lambda = -log_p of the chordal distance at infinity. EqualPoints if P == Q.
Rational proximity(const ProjPoint& P, const ProjPoint& Q);
// Proximity to a point given by its expansion at infinity. `exact` is false when the
// value is only a lower bound because the series ran out of precision.
Rational proximity(const ProjPoint& P, const LaurentSeries& alpha, bool& exact);

enum class PostcriticalStatus { Postcritical, NotPostcritical, NotUpTo, InseparableAll };
const char* to_string(PostcriticalStatus s);

struct PostcriticalResult {
    PostcriticalStatus status = PostcriticalStatus::NotUpTo;
    int crit_index = -1;  // witness critical point
    int steps = 0;        // gamma = phi^steps(c)
    int limit = 0;        // N for NotUpTo
    Rational cutoff;
};
PostcriticalResult postcritical_test(const RationalMap& phi, const ProjPoint& gamma, int max_steps = 64);

enum class OrbitStatus { Wandering, Preperiodic, Undetermined };
const char* to_string(OrbitStatus s);

struct OrbitResult {
    OrbitStatus status = OrbitStatus::Undetermined;
    int preperiod = 0;
    int period = 0;
    std::vector<ProjPoint> orbit;  // points computed, starting with a
};
OrbitResult is_wandering(const RationalMap& phi, const ProjPoint& a, int max_steps = 64);

struct FiberFactor {
    AlgPoint point;  // minimal polynomial of the preimage (or infinity)
    int degree = 1;
    int e = 1;
    bool separable = true;
};

struct FiberData {
    std::vector<FiberFactor> factors;
    bool squarefree = true;
    int total = 0;  // sum of e * degree, equals d^m
};
FiberData preimage_field_data(const RationalMap& phi, int m, const ProjPoint& gamma);

enum class FiberStatus { SmallDegree, NonconstantFound, AllConstant, Undetermined, Gap };
const char* to_string(FiberStatus s);

struct FiberAuditEntry {
    FiberFactor factor;
    FiberStatus status = FiberStatus::Undetermined;
    int quadruples_checked = 0;
    std::string note;
};

struct CrossRatioAudit {
    int fiber_size = 0;
    int dm = 0;
    std::vector<FiberAuditEntry> entries;
};
CrossRatioAudit preimage_crossratio_audit(const RationalMap& phi, const ProjPoint& gamma, int m,
                                          Rational prec = Rational(24), int max_quadruples = 200);

struct InverseSample {
    ProjPoint P;
    Rational lhs;   // lambda(phi^m P, gamma)
    Rational rhs;   // max over the fiber of lambda(P, alpha)
    bool rhs_exact = true;
};

struct InverseBoundReport {
    int e = 1;  // max ramification index over the fiber
    Rational fitted_C;
    std::vector<InverseSample> samples;
};
InverseBoundReport inverse_bound_audit(const RationalMap& phi, int m, const ProjPoint& gamma,
                                       const std::vector<ProjPoint>& samples);

struct OrbitRow {
    int n = 0;
    int deg_a = 0, deg_b = 0, h = 0;
    std::vector<Rational> lambda;  // one per target
    std::vector<bool> hit;         // the orbit point equals the target (lambda undefined)
};

struct LimitAudit {
    std::vector<ProjPoint> targets;
    std::vector<PostcriticalResult> target_status;
    std::vector<OrbitRow> rows;
    std::vector<Rational> max_tail_ratio;  // per target, max of lambda/h over the rows
    int window_violations = 0;             // rows with deg_a/deg_b outside [1/(2+delta), 2+delta]
    Rational delta;
};
LimitAudit orbit_proximity_audit(const RationalMap& phi, const ProjPoint& a, const std::vector<ProjPoint>& targets,
                               int n_from, int n_to, Rational delta = Rational(1));

struct ProximityPairCheck {
    bool hypothesis = false;  // lambda(x, inf) + log_p 2 <= lambda(x, y)
    bool conclusion = false;  // lambda(x, y) <= ord(x - y) + 2 lambda(x, inf) + log_p 2
};
ProximityPairCheck proximity_pair_check(const RatFunc& x, const RatFunc& y);

}  // namespace ffdyn
