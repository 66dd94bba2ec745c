#pragma once

#include <string>
#include <vector>

#include "ffdyn/ratfunc.hpp"

namespace ffdyn {

// Polynomial in z with coefficients in K = F_q(t), dense, ascending in z.
class ZPoly {
public:
    ZPoly() = default;
    explicit ZPoly(FieldRef field) : field_(std::move(field)) {}
    ZPoly(FieldRef field, std::vector<RatFunc> coeffs);

    static ZPoly z(FieldRef field);
    static ZPoly constant(const RatFunc& c);
    static ZPoly monomial(const RatFunc& c, std::size_t deg);

    const FieldRef& field() const { return field_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    bool is_monic() const { return !c_.empty() && c_.back().is_one(); }
    RatFunc operator[](std::size_t i) const { return i < c_.size() ? c_[i] : RatFunc(field_); }
    const RatFunc& lead() const { return c_.back(); }
    const std::vector<RatFunc>& coeffs() const { return c_; }
    void set(std::size_t i, const RatFunc& v);

    ZPoly& operator+=(const ZPoly& o);
    ZPoly& operator-=(const ZPoly& o);
    friend ZPoly operator+(ZPoly a, const ZPoly& b) { return a += b; }
    friend ZPoly operator-(ZPoly a, const ZPoly& b) { return a -= b; }
    friend ZPoly operator*(const ZPoly& a, const ZPoly& b);
    ZPoly operator-() const;
    friend bool operator==(const ZPoly& a, const ZPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const ZPoly& a, const ZPoly& b) { return !(a == b); }

    ZPoly scaled(const RatFunc& c) const;
    ZPoly monic() const;
    ZPoly derivative() const;      // d/dz
    ZPoly derivative_t() const;    // coefficientwise d/dt
    // k-th Hasse derivative in z: z^n -> binom(n,k) z^(n-k)
    ZPoly hasse(int k) const;
    ZPoly pow(unsigned e) const;
    RatFunc eval(const RatFunc& x) const;
    ZPoly compose(const ZPoly& inner) const;
    // z^n P(1/z)
    ZPoly reversed(int n) const;
    ZPoly lifted(const FieldRef& ext) const;
    bool descend(const FieldRef& to, ZPoly& out) const;
    // Largest t-degree of any numerator or denominator.
    int max_coeff_height() const;

    std::string to_string(const std::string& var = "z") const;

private:
    void trim();
    FieldRef field_;
    std::vector<RatFunc> c_;
};

std::pair<ZPoly, ZPoly> divmod(const ZPoly& a, const ZPoly& b);
ZPoly operator/(const ZPoly& a, const ZPoly& b);
ZPoly operator%(const ZPoly& a, const ZPoly& b);
// Monic gcd over K.
ZPoly gcd(const ZPoly& a, const ZPoly& b);
void xgcd(const ZPoly& a, const ZPoly& b, ZPoly& g, ZPoly& s, ZPoly& t);
// Resultant with respect to z, normalized as lc(g)^deg f * prod f(beta) over roots beta of g.
RatFunc resultant_z(const ZPoly& f, const ZPoly& g);

// binom(n, k) mod p via Lucas.
std::uint32_t binom_mod(std::uint64_t n, std::uint64_t k, std::uint32_t p);

}  // namespace ffdyn
