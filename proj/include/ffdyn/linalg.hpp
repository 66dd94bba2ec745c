#pragma once

#include <vector>

#include "ffdyn/ratfunc.hpp"

namespace ffdyn {

struct FqOps {
    const GaloisField* F;
    using T = Elem;
    T zero() const { return 0; }
    T one() const { return 1; }
    bool is_zero(T a) const { return a == 0; }
    T add(T a, T b) const { return F->add(a, b); }
    T sub(T a, T b) const { return F->sub(a, b); }
    T mul(T a, T b) const { return F->mul(a, b); }
    T div(T a, T b) const { return F->div(a, b); }
};

struct KOps {
    FieldRef F;
    using T = RatFunc;
    T zero() const { return RatFunc(F); }
    T one() const { return RatFunc::constant(F, 1); }
    bool is_zero(const T& a) const { return a.is_zero(); }
    T add(const T& a, const T& b) const { return a + b; }
    T sub(const T& a, const T& b) const { return a - b; }
    T mul(const T& a, const T& b) const { return a * b; }
    T div(const T& a, const T& b) const { return a / b; }
};

// Reduced row echelon form in place; returns the pivot column of each nonzero row.
template <class Ops>
std::vector<std::size_t> row_reduce(std::vector<std::vector<typename Ops::T>>& M, std::size_t ncols, const Ops& ops) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < ncols && row < M.size(); ++col) {
        std::size_t piv = row;
        while (piv < M.size() && ops.is_zero(M[piv][col])) ++piv;
        if (piv == M.size()) continue;
        std::swap(M[row], M[piv]);
        auto inv_scale = M[row][col];
        for (std::size_t j = col; j < ncols; ++j) M[row][j] = ops.div(M[row][j], inv_scale);
        for (std::size_t r = 0; r < M.size(); ++r) {
            if (r == row || ops.is_zero(M[r][col])) continue;
            auto f = M[r][col];
            for (std::size_t j = col; j < ncols; ++j)
                if (!ops.is_zero(M[row][j])) M[r][j] = ops.sub(M[r][j], ops.mul(f, M[row][j]));
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

// Basis of {x : M x = 0}.
template <class Ops>
std::vector<std::vector<typename Ops::T>> nullspace(std::vector<std::vector<typename Ops::T>> M, std::size_t ncols,
                                                    const Ops& ops) {
    auto pivots = row_reduce(M, ncols, ops);
    std::vector<bool> is_pivot(ncols, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<std::vector<typename Ops::T>> basis;
    for (std::size_t free = 0; free < ncols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<typename Ops::T> v(ncols, ops.zero());
        v[free] = ops.one();
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = ops.sub(ops.zero(), M[r][free]);
        basis.push_back(std::move(v));
    }
    return basis;
}

template <class Ops>
std::size_t rank(std::vector<std::vector<typename Ops::T>> M, std::size_t ncols, const Ops& ops) {
    return row_reduce(M, ncols, ops).size();
}

}  // namespace ffdyn
