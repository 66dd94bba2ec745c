#include <algorithm>

#include "ffdyn/algext.hpp"
#include "ffdyn/error.hpp"
#include "ffdyn/linalg.hpp"

namespace ffdyn {

AlgRef AlgElem::create_unchecked(const ZPoly& G, Rational embedding_prec) {
    if (G.degree() < 1) fail(ErrorKind::DegreeTooLow, "minimal polynomial must have degree >= 1");
    std::shared_ptr<AlgElem> a(new AlgElem());
    a->G_ = G.monic();
    ZPoly d = a->G_.derivative();
    a->separable_ = !d.is_zero() && gcd(a->G_, d).degree() == 0;
    a->prec_ = embedding_prec;
    return a;
}

AlgRef AlgElem::create(const ZPoly& G, Rational embedding_prec) {
    if (G.degree() < 1) fail(ErrorKind::DegreeTooLow, "minimal polynomial must have degree >= 1");
    if (!is_irreducible(G)) fail(ErrorKind::NotIrreducible, "minimal polynomial is reducible over K");
    return create_unchecked(G, embedding_prec);
}

const std::vector<PuiseuxRoot>& AlgElem::embeddings() const {
    std::call_once(once_, [this] { emb_ = newton_puiseux_roots(G_, prec_); });
    return emb_;
}

ExtElem::ExtElem(AlgRef parent, std::vector<RatFunc> coords) : parent_(std::move(parent)), c_(std::move(coords)) {
    int d = parent_->degree();
    if (static_cast<int>(c_.size()) > d) {
        *this = from_zpoly(parent_, ZPoly(parent_->field(), c_));
        return;
    }
    c_.resize(d, RatFunc(parent_->field()));
}

ExtElem ExtElem::from_base(AlgRef parent, const RatFunc& c) {
    return ExtElem(parent, std::vector<RatFunc>{c});
}

ExtElem ExtElem::generator(AlgRef parent) {
    return from_zpoly(parent, ZPoly::z(parent->field()));
}

ExtElem ExtElem::from_zpoly(AlgRef parent, const ZPoly& f) {
    ZPoly r = f % parent->minpoly();
    std::vector<RatFunc> c(parent->degree(), RatFunc(parent->field()));
    for (int i = 0; i <= r.degree(); ++i) c[i] = r[i];
    ExtElem e;
    e.parent_ = std::move(parent);
    e.c_ = std::move(c);
    return e;
}

ZPoly ExtElem::to_zpoly() const { return ZPoly(parent_->field(), c_); }

bool ExtElem::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const RatFunc& x) { return x.is_zero(); });
}

void ExtElem::check(const ExtElem& o) const {
    if (parent_ != o.parent_ && parent_->minpoly() != o.parent_->minpoly())
        fail(ErrorKind::FieldMismatch, "elements of different extensions");
}

ExtElem operator+(const ExtElem& a, const ExtElem& b) {
    a.check(b);
    ExtElem r = a;
    for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = r.c_[i] + b.c_[i];
    return r;
}

ExtElem operator-(const ExtElem& a, const ExtElem& b) {
    a.check(b);
    ExtElem r = a;
    for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = r.c_[i] - b.c_[i];
    return r;
}

ExtElem ExtElem::operator-() const {
    ExtElem r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

ExtElem operator*(const ExtElem& a, const ExtElem& b) {
    a.check(b);
    return ExtElem::from_zpoly(a.parent_, a.to_zpoly() * b.to_zpoly());
}

bool operator==(const ExtElem& a, const ExtElem& b) {
    a.check(b);
    return a.c_ == b.c_;
}

ExtElem ExtElem::inv() const {
    if (is_zero()) fail(ErrorKind::ZeroDenominator, "inverse of zero in K(alpha)");
    ZPoly g, s, t;
    xgcd(to_zpoly(), parent_->minpoly(), g, s, t);
    if (g.degree() > 0)
        fail(ErrorKind::NotInvertible, "element shares the factor " + g.to_string() + " with the modulus");
    return from_zpoly(parent_, s);
}

ExtElem ExtElem::pow(std::uint64_t e) const {
    ExtElem r = from_base(parent_, RatFunc::constant(parent_->field(), 1)), b = *this;
    while (e) {
        if (e & 1) r = r * b;
        e >>= 1;
        if (e) b = b * b;
    }
    return r;
}

ExtElem ExtElem::scaled(const RatFunc& c) const {
    ExtElem r = *this;
    for (auto& x : r.c_) x = x * c;
    return r;
}

std::string ExtElem::to_string() const { return to_zpoly().to_string("alpha"); }

ExtElem derivative_of_generator(const AlgRef& a) {
    const ZPoly& G = a->minpoly();
    ZPoly gz = G.derivative();
    if (gz.is_zero() || !a->separable()) fail(ErrorKind::Inseparable, "G is inseparable in z");
    ExtElem num = ExtElem::from_zpoly(a, G.derivative_t());
    ExtElem den = ExtElem::from_zpoly(a, gz);
    return -(num / den);
}

namespace {

// Solve sum_j x_j cols[j] = rhs over K; free variables are set to zero.
std::optional<std::vector<RatFunc>> solve_k(const FieldRef& F, const std::vector<ExtElem>& cols, const ExtElem& rhs) {
    std::size_t n = cols.size(), d = rhs.coords().size();
    std::vector<std::vector<RatFunc>> M(d, std::vector<RatFunc>(n + 1, RatFunc(F)));
    for (std::size_t r = 0; r < d; ++r) {
        for (std::size_t j = 0; j < n; ++j) M[r][j] = cols[j].coords()[r];
        M[r][n] = rhs.coords()[r];
    }
    KOps ops{F};
    auto piv = row_reduce(M, n + 1, ops);
    std::vector<RatFunc> x(n, RatFunc(F));
    for (std::size_t r = 0; r < piv.size(); ++r) {
        if (piv[r] == n) return std::nullopt;
        x[piv[r]] = M[r][n];
    }
    return x;
}

}  // namespace

RiccatiResult riccati_test(const ZPoly& G) {
    AlgRef a = AlgElem::create_unchecked(G);
    ExtElem da = derivative_of_generator(a);
    ExtElem al = ExtElem::generator(a);
    ExtElem one = ExtElem::from_base(a, RatFunc::constant(G.field(), 1));
    RiccatiResult res;
    res.evidence = a->degree() >= 4;
    auto x = solve_k(G.field(), {al * al, al, one}, da);
    if (!x) return res;
    res.yes = true;
    res.a = (*x)[0];
    res.b = (*x)[1];
    res.c = (*x)[2];
    return res;
}

FrobeniusResult frobenius_test(const ZPoly& G, int nmax) {
    AlgRef a = AlgElem::create(G);
    FieldRef F = G.field();
    ExtElem al = ExtElem::generator(a);
    ExtElem one = ExtElem::from_base(a, RatFunc::constant(F, 1));
    ExtElem beta = al;
    unsigned p = F->characteristic();
    KOps ops{F};
    for (int n = 1; n <= nmax; ++n) {
        beta = beta.pow(p);
        // a beta + b - c alpha beta - d alpha = 0
        std::vector<ExtElem> cols{beta, one, -(al * beta), -al};
        std::size_t d = a->degree();
        std::vector<std::vector<RatFunc>> M(d, std::vector<RatFunc>(4, RatFunc(F)));
        for (std::size_t r = 0; r < d; ++r)
            for (std::size_t j = 0; j < 4; ++j) M[r][j] = cols[j].coords()[r];
        auto ker = nullspace(M, 4, ops);
        auto det = [](const std::vector<RatFunc>& v) { return v[0] * v[3] - v[1] * v[2]; };
        std::vector<std::vector<RatFunc>> cands = ker;
        for (std::size_t i = 0; i < ker.size(); ++i)
            for (std::size_t j = i + 1; j < ker.size(); ++j) {
                std::vector<RatFunc> s(4, RatFunc(F));
                for (int k = 0; k < 4; ++k) s[k] = ker[i][k] + ker[j][k];
                cands.push_back(s);
            }
        // prefer relations with d != 0, i.e. alpha = (a beta + b)/(c beta + 1) when c = 0
        std::stable_partition(cands.begin(), cands.end(), [](const std::vector<RatFunc>& v) { return !v[3].is_zero(); });
        for (auto& v : cands) {
            if (det(v).is_zero()) continue;
            RatFunc scale = !v[3].is_zero() ? v[3] : !v[2].is_zero() ? v[2] : !v[1].is_zero() ? v[1] : v[0];
            FrobeniusResult r;
            r.yes = true;
            r.n = n;
            r.a = v[0] / scale;
            r.b = v[1] / scale;
            r.c = v[2] / scale;
            r.d = v[3] / scale;
            return r;
        }
    }
    return {};
}

const char* to_string(Constancy c) {
    switch (c) {
        case Constancy::Constant: return "CONSTANT";
        case Constancy::NonConstant: return "NONCONSTANT";
        case Constancy::Undetermined: return "UNDETERMINED";
    }
    return "?";
}

LaurentSeries cross_ratio_series(const LaurentSeries& a1, const LaurentSeries& a2, const LaurentSeries& a3,
                                 const LaurentSeries& a4) {
    LaurentSeries num = (a1 - a4) * (a2 - a3), den = (a1 - a3) * (a2 - a4);
    if (num.is_zero() || den.is_zero())
        fail(ErrorKind::PrecisionExhausted, "root differences vanish to the available precision");
    if (den.is_exact() && den.coeffs().size() > 1 && num.is_exact())
        return num.with_prec(num.val() + 64 * num.ram()) / den;
    return num / den;
}

Rational constancy_threshold(const ZPoly& F) {
    std::int64_t n = F.degree();
    std::int64_t N = n * (n - 1) * (n - 2) * (n - 3);
    std::int64_t T = BiPoly::from_zpoly(F).degree_t();
    // deg of the minimal polynomial of beta - c times its height, with
    // h(beta) <= 2 (h(a1) + ... + h(a4)) and h(ai) <= deg_t F
    return Rational(std::max<std::int64_t>(N, 1) * 8 * T);
}

ConstancyVerdict cross_ratio_of(const ZPoly& F, const std::vector<PuiseuxRoot>& roots, std::array<int, 4> idx) {
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (idx[i] == idx[j]) fail(ErrorKind::NotDistinct, "cross-ratio needs four distinct roots");
    for (int i : idx)
        if (i < 0 || i >= static_cast<int>(roots.size()))
            fail(ErrorKind::EmbeddingUnavailable, "root label " + std::to_string(i) + " has no embedding at infinity");
    ConstancyVerdict v;
    LaurentSeries b = cross_ratio_series(roots[idx[0]].series, roots[idx[1]].series, roots[idx[2]].series,
                                         roots[idx[3]].series);
    v.value = b;
    v.precision = b.prec_t();
    v.threshold = constancy_threshold(F);
    bool nonconst = false;
    for (int k = b.val(); k < b.prec() && k < b.val() + static_cast<int>(b.coeffs().size()); ++k)
        if (k != 0 && b.coeff(k) != 0) nonconst = true;
    if (nonconst) {
        v.status = Constancy::NonConstant;
        v.note = "nonconstant term in the expansion";
        int T = BiPoly::from_zpoly(F).degree_t();
        int dz = std::min(4, F.degree());
        for (int dt = std::min(8, 8 * T * dz); dt >= 0 && !v.certificate; dt /= 2) {
            try {
                auto m = minpoly_reconstruct(b, dz, dt, F.field());
                if (m && m->degree() >= 1) {
                    bool varies = false;
                    for (auto& c : m->coeffs()) varies = varies || !c.is_constant();
                    if (varies) v.certificate = m;
                }
                break;
            } catch (const Error&) {
                // window too short for these bounds
            }
            if (dt == 0) break;
        }
        return v;
    }
    if (b.is_exact() || b.prec_t() > v.threshold) {
        v.status = Constancy::Constant;
        Elem c = b.coeff(0);
        v.certificate = ZPoly(b.field(), {RatFunc::constant(b.field(), b.field()->neg(c)), RatFunc::constant(b.field(), 1)});
        v.note = b.is_exact() ? "exact constant" : "constant beyond the height bound";
        return v;
    }
    v.status = Constancy::Undetermined;
    v.note = "constant to the available precision, below the certification threshold";
    return v;
}

ConstancyVerdict cross_ratio_exact(const ZPoly& F, std::array<int, 4> idx, Rational prec, const PuiseuxOptions& opt) {
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (idx[i] == idx[j]) fail(ErrorKind::NotDistinct, "cross-ratio needs four distinct roots");
    return cross_ratio_of(F, newton_puiseux_roots(F, prec, opt), idx);
}

}  // namespace ffdyn
