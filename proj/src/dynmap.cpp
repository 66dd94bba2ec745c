#include "ffdyn/dynmap.hpp"

#include <algorithm>
#include <set>

#include "ffdyn/error.hpp"

namespace ffdyn {

// ---------------------------------------------------------------- points

ProjPoint ProjPoint::from_homog(const Poly& X, const Poly& Y) {
    if (X.is_zero() && Y.is_zero()) fail(ErrorKind::IdenticallyUndefined, "[0 : 0] is not a point");
    if (Y.is_zero()) return infinity(X.field());
    return affine(RatFunc::normalize(X, Y));
}

std::pair<Poly, Poly> ProjPoint::integral() const {
    const FieldRef& F = field();
    if (inf_) return {Poly::constant(F, 1), Poly(F)};
    return {x_.num(), x_.den()};
}

int ProjPoint::height() const { return inf_ ? 0 : ffdyn::height(x_); }

bool operator<(const ProjPoint& a, const ProjPoint& b) {
    if (a.inf_ != b.inf_) return b.inf_;
    if (a.inf_) return false;
    return a.x_ < b.x_;
}

std::string ProjPoint::to_string() const { return inf_ ? "inf" : x_.to_string(); }

// ---------------------------------------------------------------- maps

namespace {

Poly lcm(const Poly& a, const Poly& b) { return (a / gcd(a, b)) * b; }

int max_coeff_degree(const BiPoly& B) {
    int m = 0;
    for (const Poly& c : B.coeffs()) m = std::max(m, c.degree());
    return m;
}

// A^i B^(d-i) for i = 0..d
std::vector<BiPoly> homog_monomials(int d, const BiPoly& A, const BiPoly& B) {
    const FieldRef& F = A.field();
    std::vector<BiPoly> Ap(d + 1), Bp(d + 1), out(d + 1);
    Ap[0] = Bp[0] = BiPoly::constant(Poly::constant(F, 1));
    for (int i = 1; i <= d; ++i) {
        Ap[i] = Ap[i - 1] * A;
        Bp[i] = Bp[i - 1] * B;
    }
    for (int i = 0; i <= d; ++i) out[i] = Ap[i] * Bp[d - i];
    return out;
}

BiPoly combine(const BiPoly& P, const std::vector<BiPoly>& mono) {
    BiPoly out(mono[0].field());
    for (int i = 0; i <= P.degree(); ++i)
        if (!P[i].is_zero()) out += mono[i].scaled(P[i]);
    return out;
}

ExtElem eval_ext(const ZPoly& f, const ExtElem& x) {
    ExtElem acc = ExtElem::from_base(x.parent(), RatFunc(f.field()));
    for (int i = f.degree(); i >= 0; --i) acc = acc * x + ExtElem::from_base(x.parent(), f[i]);
    return acc;
}

// Charpoly of an n x n matrix over K via Hessenberg reduction.
ZPoly charpoly(std::vector<std::vector<RatFunc>> H, const FieldRef& F) {
    int n = static_cast<int>(H.size());
    for (int c = 0; c + 2 < n; ++c) {
        int piv = -1;
        for (int i = c + 1; i < n; ++i)
            if (!H[i][c].is_zero()) { piv = i; break; }
        if (piv < 0) continue;
        if (piv != c + 1) {
            std::swap(H[piv], H[c + 1]);
            for (int r = 0; r < n; ++r) std::swap(H[r][piv], H[r][c + 1]);
        }
        for (int r = c + 2; r < n; ++r) {
            if (H[r][c].is_zero()) continue;
            RatFunc u = H[r][c] / H[c + 1][c];
            for (int k = 0; k < n; ++k) H[r][k] -= u * H[c + 1][k];
            for (int k = 0; k < n; ++k) H[k][c + 1] += u * H[k][r];
        }
    }
    ZPoly z = ZPoly::z(F);
    std::vector<ZPoly> p(n + 1);
    p[0] = ZPoly::constant(RatFunc::constant(F, 1));
    for (int m = 1; m <= n; ++m) {
        p[m] = (z - ZPoly::constant(H[m - 1][m - 1])) * p[m - 1];
        RatFunc t = RatFunc::constant(F, 1);
        for (int i = 1; i < m; ++i) {
            t *= H[m - i][m - i - 1];
            if (t.is_zero()) break;
            p[m] -= p[m - i - 1].scaled(t * H[m - i - 1][m - 1]);
        }
    }
    return p[n];
}

// Absolute (Weil) height of an element of K(alpha).
Rational ext_height(const ExtElem& b) {
    const AlgRef& A = b.parent();
    int n = A->degree();
    const FieldRef& F = A->field();
    std::vector<std::vector<RatFunc>> M(n, std::vector<RatFunc>(n, RatFunc(F)));
    ExtElem col = b;
    ExtElem gen = ExtElem::generator(A);
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < n; ++i) M[i][j] = col.coords()[i];
        col = col * gen;
    }
    BiPoly chi = BiPoly::from_zpoly(charpoly(std::move(M), F));
    return Rational(chi.degree_t(), n);
}

bool is_base(const ExtElem& b) {
    for (std::size_t i = 1; i < b.coords().size(); ++i)
        if (!b.coords()[i].is_zero()) return false;
    return true;
}

// Order of vanishing at the root alpha of Q of f - phi(alpha) g.
int local_multiplicity(const ZPoly& f, const ZPoly& g, const ZPoly& Q) {
    AlgRef A = AlgElem::create_unchecked(Q);
    ExtElem ga = ExtElem::from_zpoly(A, g);
    int d = std::max(f.degree(), g.degree());
    if (ga.is_zero()) {
        for (int k = 1; k <= g.degree(); ++k)
            if (!ExtElem::from_zpoly(A, g.hasse(k)).is_zero()) return k;
        fail(ErrorKind::InvalidArgument, "ramification index undefined");
    }
    ExtElem beta = ExtElem::from_zpoly(A, f) / ga;
    for (int k = 1; k <= d; ++k) {
        ExtElem v = ExtElem::from_zpoly(A, f.hasse(k)) - beta * ExtElem::from_zpoly(A, g.hasse(k));
        if (!v.is_zero()) return k;
    }
    fail(ErrorKind::InvalidArgument, "ramification index undefined");
}

}  // namespace

RationalMap::RationalMap(const ZPoly& f0, const ZPoly& g0) {
    if (g0.is_zero()) fail(ErrorKind::ZeroDenominator, "map denominator is zero");
    if (f0.is_zero()) fail(ErrorKind::DegreeTooLow, "constant map");
    ZPoly f = f0, g = g0;
    ZPoly h = gcd(f, g);
    if (h.degree() > 0) {
        f = f / h;
        g = g / h;
    }
    const FieldRef& Fd = f.field();
    Poly L = Poly::constant(Fd, 1);
    for (const RatFunc& c : f.coeffs()) L = lcm(L, c.den());
    for (const RatFunc& c : g.coeffs()) L = lcm(L, c.den());
    auto clear = [&](const ZPoly& p) {
        std::vector<Poly> cs;
        for (const RatFunc& c : p.coeffs()) cs.push_back(c.num() * (L / c.den()));
        return BiPoly(Fd, cs);
    };
    set_integral(clear(f), clear(g));
}

void RationalMap::set_integral(BiPoly F, BiPoly G) {
    const FieldRef& Fd = F.field();
    if (G.is_zero()) fail(ErrorKind::ZeroDenominator, "map denominator is zero");
    if (F.is_zero()) fail(ErrorKind::DegreeTooLow, "constant map");
    Poly content = gcd(F.content(), G.content());
    if (!content.is_one()) {
        std::vector<Poly> a, b;
        for (const Poly& c : F.coeffs()) a.push_back(c / content);
        for (const Poly& c : G.coeffs()) b.push_back(c / content);
        F = BiPoly(Fd, a);
        G = BiPoly(Fd, b);
    }
    Elem s = Fd->inv(G.lead().lead());
    F_ = F.scaled(s);
    G_ = G.scaled(s);
    d_ = std::max(F_.degree(), G_.degree());
    if (d_ < 1) fail(ErrorKind::DegreeTooLow, "constant map");
    over_ = std::make_shared<OverK>();
}

const std::pair<ZPoly, ZPoly>& RationalMap::over_k() const {
    if (!over_) fail(ErrorKind::InvalidArgument, "empty map");
    std::call_once(over_->once, [this] {
        const Poly& lg = G_.lead();
        auto over = [&](const BiPoly& B) {
            std::vector<RatFunc> cs;
            for (const Poly& c : B.coeffs()) cs.push_back(RatFunc::normalize(c, lg));
            return ZPoly(F_.field(), cs);
        };
        over_->fg = {over(F_), over(G_)};
    });
    return over_->fg;
}

RationalMap RationalMap::identity(FieldRef F) {
    return RationalMap(ZPoly::z(F), ZPoly::constant(RatFunc::constant(F, 1)));
}

RationalMap RationalMap::polynomial(const ZPoly& f) {
    return RationalMap(f, ZPoly::constant(RatFunc::constant(f.field(), 1)));
}

ProjPoint RationalMap::operator()(const ProjPoint& P) const {
    if (!same_field(P.field(), field())) fail(ErrorKind::FieldMismatch, "point and map over different fields");
    auto [a, b] = P.integral();
    return ProjPoint::from_homog(F_.eval_homog(d_, a, b), G_.eval_homog(d_, a, b));
}

RationalMap compose(const RationalMap& phi, const RationalMap& psi) {
    std::vector<BiPoly> mono = homog_monomials(phi.d_, psi.F_, psi.G_);
    BiPoly A = combine(phi.F_, mono), B = combine(phi.G_, mono);
    RationalMap out;
    out.set_integral(std::move(A), std::move(B));
    return out;
}

RationalMap RationalMap::conjugate_by_inversion() const {
    return RationalMap(G_.reversed(d_).to_zpoly(), F_.reversed(d_).to_zpoly());
}

std::string RationalMap::to_string() const {
    if (g().degree() == 0) return f().to_string();
    return "(" + f().to_string() + ")/(" + g().to_string() + ")";
}

RationalMap iterate(const RationalMap& phi, int n) {
    if (n < 0) fail(ErrorKind::InvalidArgument, "negative iterate");
    static std::mutex mu;
    static std::map<std::string, std::vector<RationalMap>> cache;
    std::string key = phi.field()->spec() + "|" + phi.to_string();
    std::vector<RationalMap> have;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto& v = cache[key];
        if (v.empty()) {
            v.push_back(RationalMap::identity(phi.field()));
            v.push_back(phi);
        }
        if (n < static_cast<int>(v.size())) return v[n];
        have = v;
    }
    while (static_cast<int>(have.size()) <= n) have.push_back(compose(phi, have.back()));
    std::lock_guard<std::mutex> lock(mu);
    auto& v = cache[key];
    if (v.size() < have.size()) v = have;
    return have[n];
}

BiPoly wronskian(const RationalMap& phi) {
    return phi.F().derivative() * phi.G() - phi.F() * phi.G().derivative();
}

// ---------------------------------------------------------------- ramification

AlgPoint AlgPoint::of(const ProjPoint& P) {
    if (P.is_infinity()) return infinity();
    return {false, ZPoly::z(P.field()) - ZPoly::constant(P.value())};
}

std::optional<ProjPoint> AlgPoint::rational(const FieldRef& F) const {
    if (at_infinity) return ProjPoint::infinity(F);
    if (minpoly.degree() != 1) return std::nullopt;
    return ProjPoint::affine(-minpoly[0]);
}

std::string AlgPoint::to_string() const {
    if (at_infinity) return "inf";
    if (minpoly.degree() == 1) return (-minpoly[0]).to_string();
    return "root of " + minpoly.to_string();
}

int ramification_index(const RationalMap& phi, const AlgPoint& a) {
    if (a.at_infinity) {
        int d = phi.degree();
        ZPoly f = phi.F().reversed(d).to_zpoly();
        ZPoly g = phi.G().reversed(d).to_zpoly();
        return local_multiplicity(f, g, ZPoly::z(phi.field()));
    }
    return local_multiplicity(phi.f(), phi.g(), a.minpoly);
}

CriticalPoints critical_points(const RationalMap& phi) {
    CriticalPoints out;
    BiPoly W = wronskian(phi);
    if (W.is_zero()) {
        out.inseparable = true;
        return out;
    }
    for (const ZFactor& zf : factor_bivariate(W.to_zpoly())) {
        AlgPoint P{false, zf.factor};
        int e = ramification_index(phi, P);
        if (e >= 2) out.points.push_back({P, e});
    }
    int einf = ramification_index(phi, AlgPoint::infinity());
    if (einf >= 2) out.points.push_back({AlgPoint::infinity(), einf});
    return out;
}

// ---------------------------------------------------------------- heights

namespace {

Poly homog_resultant(const RationalMap& phi) {
    const BiPoly& F = phi.F();
    const BiPoly& G = phi.G();
    int d = phi.degree();
    Poly r;
    if (F.degree() == 0) r = F[0].pow(G.degree());
    else if (G.degree() == 0) r = G[0].pow(F.degree());
    else r = resultant_z(F, G);
    // Res as forms of degree d picks up the leading coefficient of the full-degree side.
    if (F.degree() < d) r *= G.lead().pow(d - F.degree());
    if (G.degree() < d) r *= F.lead().pow(d - G.degree());
    return r;
}

}  // namespace

int resultant_degree(const RationalMap& phi) { return homog_resultant(phi).degree(); }

int height_discrepancy_bound(const RationalMap& phi) {
    int c = std::max(max_coeff_degree(phi.F()), max_coeff_degree(phi.G()));
    return std::max(c, resultant_degree(phi));
}

int certified_height_constant(const RationalMap& phi) {
    int c = std::max(max_coeff_degree(phi.F()), max_coeff_degree(phi.G()));
    return std::max(height_discrepancy_bound(phi), (2 * phi.degree() - 1) * c);
}

std::vector<Poly> bad_reduction_places(const RationalMap& phi, bool& at_infinity) {
    at_infinity = std::max(max_coeff_degree(phi.F()), max_coeff_degree(phi.G())) > 0;
    std::vector<Poly> out;
    for (const PolyFactor& pf : factor_univariate(homog_resultant(phi))) out.push_back(pf.factor);
    return out;
}

CanonicalHeight canonical_height(const RationalMap& phi, const ProjPoint& P, int n) {
    int d = phi.degree();
    if (d < 2) fail(ErrorKind::DegreeTooLow, "canonical height needs degree >= 2");
    if (n < 0 || n > 40) fail(ErrorKind::InvalidArgument, "iteration count out of range");
    ProjPoint Q = P;
    std::int64_t dn = 1;
    for (int i = 0; i < n; ++i) {
        Q = phi(Q);
        dn *= d;
    }
    return {Rational(Q.height(), dn), Rational(height_discrepancy_bound(phi), dn * (d - 1))};
}

Rational proximity(const ProjPoint& P, const ProjPoint& Q) {
    if (P == Q) fail(ErrorKind::EqualPoints, "proximity of a point to itself");
    auto [a0, a1] = P.integral();
    auto [b0, b1] = Q.integral();
    Poly cross = a0 * b1 - a1 * b0;
    return Rational(P.height() + Q.height() - cross.degree());
}

Rational proximity(const ProjPoint& P, const LaurentSeries& alpha, bool& exact) {
    auto [a0, a1] = P.integral();
    int e = alpha.ram();
    LaurentSeries A0 = LaurentSeries::from_ratfunc(RatFunc(a0), e, LaurentSeries::kExact);
    LaurentSeries A1 = LaurentSeries::from_ratfunc(RatFunc(a1), e, LaurentSeries::kExact);
    LaurentSeries x = alpha;
    A0 = A0.lifted(x.field());
    A1 = A1.lifted(x.field());
    LaurentSeries diff = A0 - A1 * x;
    exact = !diff.is_zero();
    Rational ord_alpha = x.is_zero() ? Rational(0) : x.ord();
    Rational m = ord_alpha < Rational(0) ? ord_alpha : Rational(0);
    return diff.ord() + Rational(P.height()) - m;
}

// ---------------------------------------------------------------- orbits

const char* to_string(PostcriticalStatus s) {
    switch (s) {
        case PostcriticalStatus::Postcritical: return "POSTCRITICAL";
        case PostcriticalStatus::NotPostcritical: return "NOT_POSTCRITICAL";
        case PostcriticalStatus::NotUpTo: return "NOT_UP_TO";
        case PostcriticalStatus::InseparableAll: return "INSEPARABLE_ALL";
    }
    return "?";
}

const char* to_string(OrbitStatus s) {
    switch (s) {
        case OrbitStatus::Wandering: return "WANDERING";
        case OrbitStatus::Preperiodic: return "PREPERIODIC";
        case OrbitStatus::Undetermined: return "UNDETERMINED";
    }
    return "?";
}

namespace {

enum class Walk { Hit, Escaped, Cycled, Limit };

// Follows the forward orbit of P (starting from phi(P)) looking for gamma.
Walk walk_rational(const RationalMap& phi, ProjPoint P, const ProjPoint& gamma, const Rational& cutoff,
                   int max_steps, int first_step, int& steps) {
    std::set<ProjPoint> seen;
    for (int n = first_step; n <= max_steps; ++n) {
        P = phi(P);
        if (P == gamma) {
            steps = n;
            return Walk::Hit;
        }
        if (!seen.insert(P).second) return Walk::Cycled;
        if (Rational(P.height()) > cutoff) return Walk::Escaped;
    }
    return Walk::Limit;
}

}  // namespace

PostcriticalResult postcritical_test(const RationalMap& phi, const ProjPoint& gamma, int max_steps) {
    int d = phi.degree();
    if (d < 2) fail(ErrorKind::DegreeTooLow, "post-critical test needs degree >= 2");
    PostcriticalResult out;
    out.limit = max_steps;
    CriticalPoints cp = critical_points(phi);
    if (cp.inseparable) {
        out.status = PostcriticalStatus::InseparableAll;
        return out;
    }
    out.cutoff = Rational(gamma.height()) + Rational(2 * certified_height_constant(phi), d - 1);
    bool undecided = false;
    for (std::size_t i = 0; i < cp.points.size(); ++i) {
        const AlgPoint& c = cp.points[i].point;
        Walk w;
        int steps = 0;
        if (auto r = c.rational(phi.field())) {
            w = walk_rational(phi, *r, gamma, out.cutoff, max_steps, 1, steps);
        } else {
            AlgRef A = AlgElem::create_unchecked(c.minpoly);
            ExtElem beta = ExtElem::generator(A);
            std::vector<ExtElem> seen;
            w = Walk::Limit;
            for (int n = 1; n <= max_steps; ++n) {
                ExtElem den = eval_ext(phi.g(), beta);
                ExtElem num = eval_ext(phi.f(), beta);
                if (den.is_zero() || is_base(num / den)) {
                    ProjPoint P = den.is_zero() ? ProjPoint::infinity(phi.field())
                                                : ProjPoint::affine((num / den).coords()[0]);
                    if (P == gamma) {
                        w = Walk::Hit;
                        steps = n;
                    } else if (Rational(P.height()) > out.cutoff) {
                        w = Walk::Escaped;
                    } else {
                        w = walk_rational(phi, P, gamma, out.cutoff, max_steps, n + 1, steps);
                    }
                    break;
                }
                beta = num / den;
                if (std::find(seen.begin(), seen.end(), beta) != seen.end()) {
                    w = Walk::Cycled;
                    break;
                }
                seen.push_back(beta);
                if (ext_height(beta) > out.cutoff) {
                    w = Walk::Escaped;
                    break;
                }
            }
        }
        if (w == Walk::Hit) {
            out.status = PostcriticalStatus::Postcritical;
            out.crit_index = static_cast<int>(i);
            out.steps = steps;
            return out;
        }
        if (w == Walk::Limit) undecided = true;
    }
    out.status = undecided ? PostcriticalStatus::NotUpTo : PostcriticalStatus::NotPostcritical;
    return out;
}

OrbitResult is_wandering(const RationalMap& phi, const ProjPoint& a, int max_steps) {
    OrbitResult out;
    int d = phi.degree();
    Rational cut = d >= 2 ? Rational(certified_height_constant(phi), d - 1) : Rational(0);
    std::map<ProjPoint, int> index;
    ProjPoint P = a;
    for (int n = 0; n <= max_steps; ++n) {
        out.orbit.push_back(P);
        auto it = index.find(P);
        if (it != index.end()) {
            out.status = OrbitStatus::Preperiodic;
            out.preperiod = it->second;
            out.period = n - it->second;
            out.orbit.pop_back();
            return out;
        }
        index.emplace(P, n);
        // preperiodic points have canonical height 0 >= h - C/(d-1)
        if (d >= 2 && Rational(P.height()) > cut) {
            out.status = OrbitStatus::Wandering;
            return out;
        }
        if (n < max_steps) P = phi(P);
    }
    out.status = OrbitStatus::Undetermined;
    return out;
}

// ---------------------------------------------------------------- fibers

FiberData preimage_field_data(const RationalMap& phi, int m, const ProjPoint& gamma) {
    if (m < 1) fail(ErrorKind::InvalidArgument, "m must be >= 1");
    RationalMap Phi = iterate(phi, m);
    BiPoly H;
    if (gamma.is_infinity()) {
        H = Phi.G();
    } else {
        auto [a, b] = gamma.integral();
        H = Phi.F().scaled(b) - Phi.G().scaled(a);
    }
    FiberData out;
    for (const ZFactor& zf : factor_bivariate(H.to_zpoly())) {
        FiberFactor ff;
        ff.point = {false, zf.factor};
        ff.degree = zf.factor.degree();
        ff.e = zf.multiplicity;
        ff.separable = !zf.factor.derivative().is_zero();
        out.factors.push_back(ff);
        out.total += ff.e * ff.degree;
        if (ff.e > 1 || !ff.separable) out.squarefree = false;
    }
    int einf = Phi.degree() - H.degree();
    if (einf > 0) {
        out.factors.push_back({AlgPoint::infinity(), 1, einf, true});
        out.total += einf;
        if (einf > 1) out.squarefree = false;
    }
    return out;
}

const char* to_string(FiberStatus s) {
    switch (s) {
        case FiberStatus::SmallDegree: return "SMALL_DEGREE";
        case FiberStatus::NonconstantFound: return "NONCONSTANT_FOUND";
        case FiberStatus::AllConstant: return "ALL_CONSTANT";
        case FiberStatus::Undetermined: return "UNDETERMINED";
        case FiberStatus::Gap: return "GAP";
    }
    return "?";
}

CrossRatioAudit preimage_crossratio_audit(const RationalMap& phi, const ProjPoint& gamma, int m, Rational prec,
                                          int max_quadruples) {
    FiberData fd = preimage_field_data(phi, m, gamma);
    CrossRatioAudit out;
    out.dm = fd.total;
    for (const FiberFactor& f : fd.factors) out.fiber_size += f.degree;
    if (out.fiber_size < 4) fail(ErrorKind::FiberTooSmall, "fewer than 4 distinct preimages");
    for (const FiberFactor& f : fd.factors) {
        FiberAuditEntry en;
        en.factor = f;
        if (2 * f.degree <= out.dm) {
            en.status = FiberStatus::SmallDegree;
        } else if (f.degree < 4) {
            en.status = FiberStatus::Gap;
            en.note = "degree above d^m/2 but below 4";
        } else {
            std::vector<PuiseuxRoot> roots;
            try {
                roots = newton_puiseux_roots(f.point.minpoly, prec);
            } catch (const Error& e) {
                en.status = FiberStatus::Undetermined;
                en.note = e.what();
                out.entries.push_back(en);
                continue;
            }
            int n = static_cast<int>(roots.size());
            bool complete = n == f.degree;
            bool found = false, all_const = true;
            for (int i = 0; i < n && !found; ++i)
                for (int j = i + 1; j < n && !found; ++j)
                    for (int k = j + 1; k < n && !found; ++k)
                        for (int l = k + 1; l < n && !found; ++l) {
                            if (en.quadruples_checked >= max_quadruples) {
                                complete = false;
                                break;
                            }
                            ConstancyVerdict v = cross_ratio_of(f.point.minpoly, roots, {i, j, k, l});
                            ++en.quadruples_checked;
                            if (v.status == Constancy::NonConstant) found = true;
                            else if (v.status != Constancy::Constant) all_const = false;
                        }
            if (found) en.status = FiberStatus::NonconstantFound;
            else if (all_const && complete && n >= 4) en.status = FiberStatus::AllConstant;
            else en.status = FiberStatus::Undetermined;
            if (n < f.degree) en.note = "only " + std::to_string(n) + " roots embedded";
        }
        out.entries.push_back(en);
    }
    return out;
}

InverseBoundReport inverse_bound_audit(const RationalMap& phi, int m, const ProjPoint& gamma,
                                       const std::vector<ProjPoint>& samples) {
    RationalMap Phi = iterate(phi, m);
    FiberData fd = preimage_field_data(phi, m, gamma);
    InverseBoundReport out;
    for (const FiberFactor& f : fd.factors) out.e = std::max(out.e, f.e);

    Rational maxL(0);
    int maxh = 0;
    for (const ProjPoint& P : samples) {
        ProjPoint Q = Phi(P);
        if (Q == gamma) fail(ErrorKind::InvalidArgument, "sample maps onto the target: " + P.to_string());
        InverseSample s;
        s.P = P;
        s.lhs = proximity(Q, gamma);
        maxL = std::max(maxL, s.lhs);
        maxh = std::max(maxh, P.height());
        out.samples.push_back(s);
    }
    Rational prec = maxL + Rational(2 * maxh + 16);
    std::vector<LaurentSeries> fiber;
    bool fiber_inf = false;
    for (const FiberFactor& f : fd.factors) {
        if (f.point.at_infinity) {
            fiber_inf = true;
            continue;
        }
        for (const PuiseuxRoot& r : newton_puiseux_roots(f.point.minpoly, prec)) fiber.push_back(r.series);
    }
    bool first = true;
    for (InverseSample& s : out.samples) {
        bool have = false;
        if (fiber_inf) {
            s.rhs = proximity(s.P, ProjPoint::infinity(phi.field()));
            have = true;
        }
        for (const LaurentSeries& a : fiber) {
            bool exact = true;
            Rational v = proximity(s.P, a, exact);
            if (!have || v > s.rhs) {
                s.rhs = v;
                s.rhs_exact = exact;
                have = true;
            }
        }
        Rational gap = s.lhs - Rational(out.e) * s.rhs;
        if (first || gap > out.fitted_C) out.fitted_C = gap;
        first = false;
    }
    if (out.fitted_C < Rational(0)) out.fitted_C = Rational(0);
    return out;
}

LimitAudit orbit_proximity_audit(const RationalMap& phi, const ProjPoint& a, const std::vector<ProjPoint>& targets,
                               int n_from, int n_to, Rational delta) {
    if (phi.degree() < 2) fail(ErrorKind::DegreeTooLow, "limit audit needs degree >= 2");
    if (n_from < 0 || n_to < n_from) fail(ErrorKind::InvalidArgument, "bad iteration range");
    OrbitResult orb = is_wandering(phi, a);
    if (orb.status != OrbitStatus::Wandering)
        fail(ErrorKind::NotWandering, std::string("orbit status ") + to_string(orb.status));
    LimitAudit out;
    out.targets = targets;
    out.delta = delta;
    for (const ProjPoint& g : targets) out.target_status.push_back(postcritical_test(phi, g));
    out.max_tail_ratio.assign(targets.size(), Rational(0));
    Rational lo = Rational(1) / (Rational(2) + delta), hi = Rational(2) + delta;
    ProjPoint P = a;
    for (int n = 0; n <= n_to; ++n) {
        if (n >= n_from) {
            OrbitRow row;
            row.n = n;
            auto [A, B] = P.integral();
            row.deg_a = std::max(A.degree(), 0);
            row.deg_b = std::max(B.degree(), 0);
            row.h = P.height();
            for (std::size_t j = 0; j < targets.size(); ++j) {
                if (P == targets[j]) {
                    row.lambda.push_back(Rational(0));
                    row.hit.push_back(true);
                    continue;
                }
                Rational l = proximity(P, targets[j]);
                row.lambda.push_back(l);
                row.hit.push_back(false);
                if (row.h > 0) out.max_tail_ratio[j] = std::max(out.max_tail_ratio[j], l / Rational(row.h));
            }
            if (row.h > 0) {
                bool ok = row.deg_b > 0 && Rational(row.deg_a, row.deg_b) >= lo && Rational(row.deg_a, row.deg_b) <= hi;
                if (!ok) ++out.window_violations;
            }
            out.rows.push_back(row);
        }
        if (n < n_to) P = phi(P);
    }
    return out;
}

ProximityPairCheck proximity_pair_check(const RatFunc& x, const RatFunc& y) {
    ProjPoint X = ProjPoint::affine(x), Y = ProjPoint::affine(y);
    int lxy = boost::rational_cast<int>(proximity(X, Y));
    int lxi = boost::rational_cast<int>(proximity(X, ProjPoint::infinity(x.field())));
    int ord = ord_inf(x - y);
    std::uint32_t p = x.field()->characteristic();
    // integer exponents: p^D >= 2 iff D >= 1, and p^D <= 2 iff D <= 0 or (p = 2, D = 1)
    ProximityPairCheck out;
    out.hypothesis = lxy - lxi >= 1;
    int D = lxy - ord - 2 * lxi;
    out.conclusion = D <= 0 || (p == 2 && D == 1);
    return out;
}

}  // namespace ffdyn
