#include <algorithm>
#include <map>
#include <numeric>

#include "ffdyn/error.hpp"
#include "ffdyn/laurent.hpp"

namespace ffdyn {

namespace {

// Laurent polynomial in w; c[i] is the coefficient of w^(low + i)
struct LPoly {
    int low = 0;
    std::vector<Elem> c;
    bool zero() const { return c.empty(); }
};

void norm(LPoly& a) {
    std::size_t lead = 0;
    while (lead < a.c.size() && a.c[lead] == 0) ++lead;
    if (lead == a.c.size()) {
        a.c.clear();
        a.low = 0;
        return;
    }
    a.c.erase(a.c.begin(), a.c.begin() + lead);
    a.low += static_cast<int>(lead);
    while (a.c.back() == 0) a.c.pop_back();
}

LPoly ladd(const GaloisField& F, const LPoly& a, const LPoly& b) {
    if (a.zero()) return b;
    if (b.zero()) return a;
    int lo = std::min(a.low, b.low);
    int hi = std::max(a.low + (int)a.c.size(), b.low + (int)b.c.size());
    LPoly r{lo, std::vector<Elem>(hi - lo, 0)};
    for (std::size_t i = 0; i < a.c.size(); ++i) r.c[a.low - lo + i] = a.c[i];
    for (std::size_t i = 0; i < b.c.size(); ++i) r.c[b.low - lo + i] = F.add(r.c[b.low - lo + i], b.c[i]);
    norm(r);
    return r;
}

LPoly lscale(const GaloisField& F, const LPoly& a, Elem s) {
    if (s == 0) return {};
    LPoly r = a;
    for (auto& x : r.c) x = F.mul(x, s);
    return r;
}

LPoly lshift(LPoly a, int k) {
    if (!a.zero()) a.low += k;
    return a;
}

LPoly lramify(const LPoly& a, int m) {
    if (a.zero() || m == 1) return a;
    LPoly r{a.low * m, std::vector<Elem>((a.c.size() - 1) * m + 1, 0)};
    for (std::size_t i = 0; i < a.c.size(); ++i) r.c[i * m] = a.c[i];
    return r;
}

// coefficients of a (low >= 0) as a power series truncated to n terms
std::vector<Elem> as_series(const LPoly& a, std::size_t n) {
    std::vector<Elem> v(n, 0);
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        std::size_t k = static_cast<std::size_t>(a.low) + i;
        if (k < n) v[k] = a.c[i];
    }
    return v;
}

struct NeedExtension {
    unsigned degree;
};

struct Branch {
    std::vector<LPoly> P;  // coefficients in the current unknown z_cur
    int E = 1;             // w = t^(-1/E)
    std::map<int, Elem> prefix;
    int shift = 0;         // z = prefix + w^shift * z_cur
    int depth = 0;
    bool wild = false;
};

struct Ctx {
    FieldRef F;
    Rational prec;
    PuiseuxOptions opt;
    BiPoly G;  // integral input, lifted to F
    std::vector<PuiseuxRoot> out;

    int target(int E) const {
        Rational x = prec * E;
        std::int64_t n = x.numerator() / x.denominator();
        if (n * x.denominator() < x.numerator()) ++n;
        return static_cast<int>(n);
    }
};

LaurentSeries eval_G(const Ctx& ctx, const LaurentSeries& x) {
    LaurentSeries acc = LaurentSeries::zero(ctx.F, x.ram());
    for (std::size_t i = ctx.G.coeffs().size(); i-- > 0;)
        acc = acc * x + LaurentSeries::from_ratfunc(RatFunc(ctx.G.coeffs()[i]), x.ram(), LaurentSeries::kExact);
    return acc;
}

void emit_exact(Ctx& ctx, const Branch& b) {
    LaurentSeries s = LaurentSeries::from_terms(ctx.F, b.E, b.prefix, LaurentSeries::kExact);
    if (!eval_G(ctx, s).is_zero()) fail(ErrorKind::InvalidArgument, "internal: exact Puiseux root does not verify");
    ctx.out.push_back({s, b.E, b.wild, true});
}

std::vector<Elem> eval_trunc(const GaloisField& F, const std::vector<LPoly>& P, const std::vector<Elem>& z, std::size_t n) {
    std::vector<Elem> acc;
    for (std::size_t k = P.size(); k-- > 0;) {
        if (!acc.empty()) {
            acc = multiply_coeffs(F, acc, z);
            acc.resize(n, 0);
        } else {
            acc.assign(n, 0);
        }
        auto pk = as_series(P[k], n);
        for (std::size_t i = 0; i < n; ++i) acc[i] = F.add(acc[i], pk[i]);
    }
    acc.resize(n, 0);
    return acc;
}

// Hensel/Newton lift of the simple root z1 = 0 mod w of P
std::vector<Elem> newton_lift(const GaloisField& F, const std::vector<LPoly>& P, std::size_t n) {
    std::vector<LPoly> D;
    for (std::size_t k = 1; k < P.size(); ++k) D.push_back(lscale(F, P[k], F.from_int(static_cast<std::int64_t>(k))));
    std::vector<Elem> z(1, 0);
    std::size_t k = 1;
    while (k < n) {
        std::size_t k2 = std::min(2 * k, n);
        z.resize(k2, 0);
        auto f = eval_trunc(F, P, z, k2);
        auto d = eval_trunc(F, D, z, k2);
        auto corr = multiply_coeffs(F, f, inverse_series(F, d, k2));
        for (std::size_t i = 0; i < k2; ++i) z[i] = F.sub(z[i], corr[i]);
        k = k2;
    }
    z.resize(n, 0);
    return z;
}

void finish(Ctx& ctx, const Branch& b) {
    if (b.P[0].zero()) {
        emit_exact(ctx, b);
        return;
    }
    const GaloisField& F = *ctx.F;
    int T = ctx.target(b.E);
    long long n = std::max<long long>(static_cast<long long>(T) - b.shift, 1) + 4;
    for (int attempt = 0; attempt < 16; ++attempt) {
        auto z1 = newton_lift(F, b.P, static_cast<std::size_t>(n));
        std::map<int, Elem> terms = b.prefix;
        for (std::size_t j = 1; j < z1.size(); ++j)
            if (z1[j]) terms[b.shift + static_cast<int>(j)] = z1[j];
        LaurentSeries s = LaurentSeries::from_terms(ctx.F, b.E, terms, b.shift + static_cast<int>(n));
        LaurentSeries res = eval_G(ctx, s);
        if (!res.is_zero()) fail(ErrorKind::InvalidArgument, "internal: Puiseux root does not verify");
        if (res.prec() >= T && s.prec() >= T) {
            ctx.out.push_back({s, b.E, b.wild, false});
            return;
        }
        n += std::max(T - res.prec(), T - s.prec()) + 1;
    }
    fail(ErrorKind::PrecisionExhausted, "Puiseux root could not reach the requested precision");
}

void process(Ctx& ctx, Branch b, bool first) {
    if (b.depth > ctx.opt.max_depth) fail(ErrorKind::WildUnsupported, "Newton-Puiseux recursion exceeded the depth cap");
    const GaloisField& F = *ctx.F;
    std::uint32_t p = F.characteristic();
    if (b.P[0].zero()) {
        emit_exact(ctx, b);
        std::size_t k = 0;
        while (k < b.P.size() && b.P[k].zero()) ++k;
        b.P.erase(b.P.begin(), b.P.begin() + k);
        if (b.P.size() <= 1) return;
    }
    int n = static_cast<int>(b.P.size()) - 1;
    // lower convex hull of (i, val P_i)
    std::vector<int> pts;
    for (int i = 0; i <= n; ++i)
        if (!b.P[i].zero()) pts.push_back(i);
    std::vector<int> hull;
    auto v = [&](int i) { return static_cast<long long>(b.P[i].low); };
    for (int i : pts) {
        while (hull.size() >= 2) {
            int a = hull[hull.size() - 2], c = hull.back();
            // drop c if it lies on or above segment a -> i
            if ((v(c) - v(a)) * (i - a) >= (v(i) - v(a)) * static_cast<long long>(c - a))
                hull.pop_back();
            else
                break;
        }
        hull.push_back(i);
    }
    for (std::size_t e = 0; e + 1 < hull.size(); ++e) {
        int i0 = hull[e], j0 = hull[e + 1];
        Rational gamma(v(i0) - v(j0), j0 - i0);
        if (!first && gamma <= 0) continue;
        int a = static_cast<int>(gamma.numerator()), m = static_cast<int>(gamma.denominator());
        Branch br = b;
        if (m > 1) {
            br.E *= m;
            if (br.E > ctx.opt.max_ram) fail(ErrorKind::WildUnsupported, "ramification index exceeds the configured cap");
            if (m % static_cast<int>(p) == 0) br.wild = true;
            for (auto& c : br.P) c = lramify(c, m);
            std::map<int, Elem> np;
            for (auto& [k, c] : br.prefix) np[k * m] = c;
            br.prefix = std::move(np);
            br.shift *= m;
        }
        long long minv = static_cast<long long>(br.P[i0].low) + static_cast<long long>(i0) * a;
        std::vector<Elem> chi(j0 - i0 + 1, 0);
        for (int i = i0; i <= j0; ++i) {
            if (br.P[i].zero()) continue;
            if (br.P[i].low + static_cast<long long>(i) * a == minv) chi[i - i0] = br.P[i].c[0];
        }
        auto factors = factor_univariate(Poly(ctx.F, chi));
        unsigned need = 1;
        for (auto& [f, mult] : factors)
            if (f.degree() > 1) need = std::lcm(need, static_cast<unsigned>(f.degree()));
        if (need > 1) throw NeedExtension{need};
        for (auto& [f, mult] : factors) {
            Elem c = F.neg(f[0]);
            Branch nb;
            nb.E = br.E;
            nb.wild = br.wild;
            nb.depth = br.depth + 1;
            nb.prefix = br.prefix;
            nb.prefix[br.shift + a] = c;
            nb.shift = br.shift + a;
            std::vector<LPoly> Q(br.P.size());
            for (int i = 0; i <= n; ++i) Q[i] = lshift(br.P[i], static_cast<int>(static_cast<long long>(i) * a - minv));
            // Taylor shift z -> c + z1
            for (int i = 0; i < n; ++i)
                for (int j = n - 1; j >= i; --j) Q[j] = ladd(F, Q[j], lscale(F, Q[j + 1], c));
            nb.P = std::move(Q);
            if (mult == 1)
                finish(ctx, nb);
            else
                process(ctx, std::move(nb), false);
        }
    }
}

}  // namespace

std::vector<PuiseuxRoot> newton_puiseux_roots(const BiPoly& G0, Rational prec, const PuiseuxOptions& opt) {
    if (G0.is_zero()) fail(ErrorKind::ZeroInput, "Puiseux expansion of the zero polynomial");
    if (G0.degree() < 1) return {};
    BiPoly G = G0.primitive();
    BiPoly dG = G.derivative();
    if (!dG.is_zero() && gcd(G.to_zpoly(), dG.to_zpoly()).degree() > 0)
        fail(ErrorKind::NotSquarefree, "polynomial is not squarefree in z");
    FieldRef base = G.field();
    unsigned ext = 1;
    while (true) {
        FieldRef F;
        try {
            F = base->extension(ext);
        } catch (const Error& e) {
            fail(ErrorKind::EmbeddingUnavailable, std::string("roots need constants beyond the field size cap: ") + e.what());
        }
        Ctx ctx{F, prec, opt, G.lifted(F), {}};
        Branch b;
        for (auto& gi : ctx.G.coeffs()) {
            LPoly l;
            if (!gi.is_zero()) {
                l.low = -gi.degree();
                l.c.assign(gi.coeffs().rbegin(), gi.coeffs().rend());
                norm(l);
            }
            b.P.push_back(l);
        }
        try {
            process(ctx, b, true);
            return ctx.out;
        } catch (const NeedExtension& ne) {
            ext *= ne.degree;
        }
    }
}

std::vector<PuiseuxRoot> newton_puiseux_roots(const ZPoly& G, Rational prec, const PuiseuxOptions& opt) {
    return newton_puiseux_roots(BiPoly::from_zpoly(G), prec, opt);
}

}  // namespace ffdyn
