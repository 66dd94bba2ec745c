#include <algorithm>

#include "ffdyn/algext.hpp"
#include "ffdyn/error.hpp"

namespace ffdyn {

namespace {

// Exchange the roles of t and z.
BiPoly swap_vars(const BiPoly& B) {
    FieldRef F = B.field();
    int dt = B.degree_t();
    std::vector<std::vector<Elem>> rows(dt + 1, std::vector<Elem>(B.degree() + 1, 0));
    for (int i = 0; i <= B.degree(); ++i) {
        const Poly& c = B.coeffs()[i];
        for (int j = 0; j <= c.degree(); ++j) rows[j][i] = c[j];
    }
    std::vector<Poly> out;
    for (auto& r : rows) out.emplace_back(F, r);
    return BiPoly(F, std::move(out));
}

// B(t, z) = C(t^p, z^p) = R(t, z)^p
BiPoly pth_root(const BiPoly& B) {
    FieldRef F = B.field();
    unsigned p = F->characteristic();
    std::vector<Poly> out;
    for (int i = 0; i <= B.degree(); i += p) {
        const Poly& c = B.coeffs()[i];
        std::vector<Elem> v;
        for (int j = 0; j <= c.degree(); j += p) v.push_back(F->pth_root(c[j]));
        out.emplace_back(F, v);
    }
    return BiPoly(F, std::move(out));
}

BiPoly normalize_factor(const BiPoly& f) {
    if (f.degree() == 0) return BiPoly::constant(f.coeffs()[0].monic());
    return f.primitive();
}

void merge(std::vector<BiFactor>& into, const std::vector<BiFactor>& more, int mult = 1) {
    for (auto& m : more) {
        BiPoly f = normalize_factor(m.factor);
        auto it = std::find_if(into.begin(), into.end(), [&](const BiFactor& x) { return x.factor == f; });
        if (it == into.end())
            into.push_back({f, m.multiplicity * mult});
        else
            it->multiplicity += m.multiplicity * mult;
    }
}

// Truncated power series in t with coefficients in F[z].
using TSeries = std::vector<Poly>;

// Monic (in z) factorization of Q mod t^N from the factorization of Q(0, z).
std::vector<TSeries> hensel_lift(const BiPoly& Q, const std::vector<Poly>& f0, int N) {
    FieldRef F = Q.field();
    int n = Q.degree();
    const Poly& L = Q.lead();
    std::vector<Elem> Linv = inverse_series(*F, L.coeffs(), N);
    // M = Q / L, as a series in t
    TSeries M(N, Poly(F));
    for (int i = 0; i <= n; ++i) {
        auto prod = multiply_coeffs(*F, Q.coeffs()[i].coeffs(), Linv);
        for (int j = 0; j < N && j < static_cast<int>(prod.size()); ++j)
            if (prod[j] != 0) M[j].set(i, prod[j]);
    }
    std::size_t r = f0.size();
    std::vector<Poly> e(r);
    for (std::size_t i = 0; i < r; ++i) {
        Poly g = Poly::constant(F, 1);
        for (std::size_t j = 0; j < r; ++j)
            if (j != i) g *= f0[j];
        Poly gg, s, tt;
        xgcd(g, f0[i], gg, s, tt);
        e[i] = s % f0[i];
    }
    std::vector<TSeries> fac(r, TSeries(N, Poly(F)));
    for (std::size_t i = 0; i < r; ++i) fac[i][0] = f0[i];
    for (int k = 1; k < N; ++k) {
        // coefficient of t^k in the current product
        TSeries prod(k + 1, Poly(F));
        prod[0] = Poly::constant(F, 1);
        for (std::size_t i = 0; i < r; ++i) {
            TSeries next(k + 1, Poly(F));
            for (int a = 0; a <= k; ++a) {
                if (prod[a].is_zero()) continue;
                for (int b = 0; a + b <= k; ++b)
                    if (!fac[i][b].is_zero()) next[a + b] += prod[a] * fac[i][b];
            }
            prod = std::move(next);
        }
        Poly E = M[k] - prod[k];
        if (E.is_zero()) continue;
        for (std::size_t i = 0; i < r; ++i) fac[i][k] = (e[i] * E) % f0[i];
    }
    return fac;
}

BiPoly series_product(const Poly& L, const std::vector<const TSeries*>& parts, int N) {
    FieldRef F = L.field();
    TSeries prod(N, Poly(F));
    for (int j = 0; j <= L.degree() && j < N; ++j) prod[j] = Poly::constant(F, L[j]);
    for (auto* s : parts) {
        TSeries next(N, Poly(F));
        for (int a = 0; a < N; ++a) {
            if (prod[a].is_zero()) continue;
            for (int b = 0; a + b < N; ++b)
                if (!(*s)[b].is_zero()) next[a + b] += prod[a] * (*s)[b];
        }
        prod = std::move(next);
    }
    int dz = 0;
    for (auto& c : prod) dz = std::max(dz, c.degree());
    std::vector<std::vector<Elem>> cz(dz + 1, std::vector<Elem>(N, 0));
    for (int j = 0; j < N; ++j)
        for (int i = 0; i <= prod[j].degree(); ++i) cz[i][j] = prod[j][i];
    std::vector<Poly> out;
    for (auto& v : cz) out.emplace_back(F, v);
    return BiPoly(F, std::move(out));
}

bool good_specialization(const BiPoly& P, Elem c) {
    if (P.lead().eval(c) == 0) return false;
    Poly s = P.eval_t(c);
    Poly ds = s.derivative();
    if (ds.is_zero()) return false;
    return gcd(s, ds).is_one();
}

// P primitive, squarefree and separable in z, degree >= 1.
std::vector<BiFactor> separable_factor(const BiPoly& P) {
    if (P.degree() == 1) return {{P, 1}};
    FieldRef F = P.field();
    FieldRef FE;
    Elem c = 0;
    std::uint64_t order = 1;
    for (unsigned k = 1; !FE; ++k) {
        order *= F->order();
        if (order > GaloisField::kMaxOrder)
            fail(ErrorKind::EmbeddingUnavailable, "no good specialization point within the field size limit");
        FieldRef cand = k == 1 ? F : F->extension(k);
        BiPoly PE = k == 1 ? P : P.lifted(cand);
        for (Elem x = 0; x < cand->order(); ++x)
            if (good_specialization(PE, x)) {
                FE = cand;
                c = x;
                break;
            }
    }
    BiPoly Q = (same_field(FE, F) ? P : P.lifted(FE)).shift_t(c);
    Poly f0 = Q.eval_t(0);
    auto uf = factor_univariate(f0);
    if (uf.size() == 1) return {{P, 1}};
    std::vector<Poly> locals;
    for (auto& x : uf) locals.push_back(x.factor);
    int N = Q.degree_t() + 1;
    auto lifted = hensel_lift(Q, locals, N);

    std::vector<BiFactor> out;
    std::vector<std::size_t> unused(lifted.size());
    for (std::size_t i = 0; i < unused.size(); ++i) unused[i] = i;
    BiPoly cur = P;
    BiPoly Qcur = Q;
    std::size_t s = 1;
    while (2 * s <= unused.size()) {
        bool found = false;
        std::vector<std::size_t> pick(s);
        for (std::size_t i = 0; i < s; ++i) pick[i] = i;
        while (true) {
            std::vector<const TSeries*> parts;
            for (auto i : pick) parts.push_back(&lifted[unused[i]]);
            BiPoly H = series_product(Qcur.lead(), parts, N).primitive().shift_t(FE->neg(c));
            BiPoly Hd;
            if (same_field(FE, F))
                Hd = H;
            else if (!H.descend(F, Hd))
                Hd = BiPoly();
            if (!Hd.is_zero() && Hd.degree() >= 1) {
                auto q = divide_exact(cur, Hd);
                if (q) {
                    out.push_back({Hd.primitive(), 1});
                    cur = q->primitive();
                    Qcur = (same_field(FE, F) ? cur : cur.lifted(FE)).shift_t(c);
                    std::vector<std::size_t> rest;
                    for (std::size_t i = 0; i < unused.size(); ++i)
                        if (std::find(pick.begin(), pick.end(), i) == pick.end()) rest.push_back(unused[i]);
                    unused = std::move(rest);
                    found = true;
                    break;
                }
            }
            // next combination
            int i = static_cast<int>(s) - 1;
            while (i >= 0 && pick[i] == unused.size() - s + i) --i;
            if (i < 0) break;
            ++pick[i];
            for (std::size_t j = i + 1; j < s; ++j) pick[j] = pick[j - 1] + 1;
        }
        if (!found) ++s;
    }
    if (cur.degree() >= 1) out.push_back({cur.primitive(), 1});
    return out;
}

std::vector<BiFactor> factor_full(const BiPoly& B) {
    if (B.is_zero()) fail(ErrorKind::ZeroInput, "cannot factor the zero polynomial");
    FieldRef F = B.field();
    std::vector<BiFactor> out;
    Poly cont = B.content();
    if (cont.degree() >= 1)
        for (auto& f : factor_univariate(cont)) out.push_back({BiPoly::constant(f.factor), f.multiplicity});
    if (B.degree() == 0) return out;
    BiPoly P = B.primitive();
    BiPoly D = P.derivative();
    if (!D.is_zero()) {
        BiPoly g = gcd(P, D).primitive();
        if (g.degree() > 0) {
            merge(out, factor_full(g));
            merge(out, factor_full(*divide_exact(P, g)));
            return out;
        }
        merge(out, separable_factor(P));
        return out;
    }
    if (!P.derivative_t().is_zero()) {
        auto sw = factor_full(swap_vars(P));
        for (auto& f : sw) f.factor = swap_vars(f.factor);
        merge(out, sw);
        return out;
    }
    merge(out, factor_full(pth_root(P)), static_cast<int>(F->characteristic()));
    return out;
}

}  // namespace

std::vector<BiFactor> factor_bipoly(const BiPoly& B) {
    auto out = factor_full(B);
    std::sort(out.begin(), out.end(), [](const BiFactor& a, const BiFactor& b) { return a.factor < b.factor; });
    return out;
}

std::vector<ZFactor> factor_bivariate(const ZPoly& F) {
    if (F.is_zero()) fail(ErrorKind::ZeroInput, "cannot factor the zero polynomial");
    if (F.degree() < 1) return {};
    std::vector<ZFactor> out;
    for (auto& f : factor_bipoly(BiPoly::from_zpoly(F)))
        if (f.factor.degree() >= 1) out.push_back({f.factor.to_zpoly().monic(), f.multiplicity});
    return out;
}

bool is_irreducible(const ZPoly& F) {
    if (F.degree() < 1) return false;
    auto f = factor_bivariate(F);
    return f.size() == 1 && f[0].multiplicity == 1;
}

}  // namespace ffdyn
