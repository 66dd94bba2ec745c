#include <algorithm>
#include <climits>

#include "ffdyn/bipoly.hpp"
#include "ffdyn/error.hpp"
#include "ffdyn/laurent.hpp"
#include "ffdyn/linalg.hpp"

namespace ffdyn {

namespace {

// Kernel of the coefficient window for fixed degree bounds. Returns the kernel
// basis (possibly empty); throws when the window is too short.
std::vector<std::vector<Elem>> window_kernel(const std::vector<LaurentSeries>& pw, int dz, int dt, int e) {
    const GaloisField& F = *pw[0].field();
    std::vector<LaurentSeries> terms;
    for (int i = 0; i <= dz; ++i)
        for (int j = 0; j <= dt; ++j) terms.push_back(pw[i].shifted(-e * j));
    int lo = INT_MAX, hi = INT_MIN;
    bool exact = true;
    for (auto& s : terms) {
        if (!s.is_zero()) lo = std::min(lo, s.val());
        if (s.is_exact()) {
            if (!s.is_zero()) hi = std::max(hi, s.val() + static_cast<int>(s.coeffs().size()) - 1);
        } else {
            exact = false;
        }
    }
    if (!exact) {
        hi = INT_MAX;
        for (auto& s : terms)
            if (!s.is_exact()) hi = std::min(hi, s.prec() - 1);
    }
    std::size_t n = terms.size();
    long rows = hi >= lo ? static_cast<long>(hi) - lo + 1 : 0;
    if (!exact && rows < static_cast<long>(n) + dt + 1)
        fail(ErrorKind::InsufficientPrecision, "series too short for the requested reconstruction bounds");
    std::vector<std::vector<Elem>> M;
    for (int k = lo; k <= hi; ++k) {
        std::vector<Elem> row(n);
        bool any = false;
        for (std::size_t c = 0; c < n; ++c) {
            row[c] = terms[c].coeff(k);
            any = any || row[c] != 0;
        }
        if (any) M.push_back(std::move(row));
    }
    return nullspace(std::move(M), n, FqOps{&F});
}

}  // namespace

std::optional<ZPoly> minpoly_reconstruct(const LaurentSeries& alpha, int degz, int degt, FieldRef base) {
    if (degz < 1 || degt < 0) fail(ErrorKind::InvalidArgument, "reconstruction bounds must be degz >= 1, degt >= 0");
    FieldRef F = alpha.field();
    int e = alpha.ram();
    std::vector<LaurentSeries> pw{LaurentSeries::constant(F, 1, e)};
    for (int i = 1; i <= degz; ++i) pw.push_back(pw.back() * alpha);
    // fewest unknowns first, then smallest z-degree
    std::vector<std::pair<int, int>> order;
    for (int dz = 1; dz <= degz; ++dz)
        for (int dt = 0; dt <= degt; ++dt) order.push_back({dz, dt});
    std::stable_sort(order.begin(), order.end(), [](auto a, auto b) {
        int ua = (a.first + 1) * (a.second + 1), ub = (b.first + 1) * (b.second + 1);
        return ua != ub ? ua < ub : a.first < b.first;
    });
    for (auto [dz, dt] : order) {
        auto ker = window_kernel(pw, dz, dt, e);
        if (ker.empty()) continue;
        if (ker.size() > 1) fail(ErrorKind::InsufficientPrecision, "relation not unique at the available precision");
        std::vector<Poly> cz;
        for (int i = 0; i <= dz; ++i)
            cz.emplace_back(F, std::vector<Elem>(ker[0].begin() + i * (dt + 1), ker[0].begin() + (i + 1) * (dt + 1)));
        BiPoly G = BiPoly(F, std::move(cz)).primitive();
        if (base) {
            BiPoly down;
            if (G.descend(base, down)) G = down;
        }
        return G.to_zpoly();
    }
    return std::nullopt;
}

}  // namespace ffdyn
