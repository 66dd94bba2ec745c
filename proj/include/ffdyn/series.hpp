#pragma once

#include <boost/rational.hpp>
#include <climits>
#include <map>
#include <string>
#include <vector>

#include "ffdyn/zpoly.hpp"

namespace ffdyn {

using Rational = boost::rational<std::int64_t>;

// Truncated Laurent series in u = t^(-1/e) over a finite field:
//   sum_{k >= val} c_k u^k  +  O(u^prec).
// The exponent of 1/t attached to u^k is k/e. An exact series (a finite sum
// with nothing unknown) has prec == kExact.
class LaurentSeries {
public:
    static constexpr int kExact = INT_MAX / 4;

    LaurentSeries() = default;
    // coeffs[i] is the coefficient of u^(val + i).
    LaurentSeries(FieldRef field, int ram, int val, std::vector<Elem> coeffs, int prec);

    static LaurentSeries zero(FieldRef field, int ram = 1, int prec = kExact);
    static LaurentSeries constant(FieldRef field, Elem c, int ram = 1);
    // u^k
    static LaurentSeries monomial(FieldRef field, Elem c, int k, int ram = 1);
    // Expansion of r at infinity, known modulo u^prec.
    static LaurentSeries from_ratfunc(const RatFunc& r, int ram, int prec);
    static LaurentSeries from_terms(FieldRef field, int ram, const std::map<int, Elem>& terms, int prec);

    const FieldRef& field() const { return field_; }
    int ram() const { return ram_; }
    // Valuation in u; equals prec() when nothing nonzero is known.
    int val() const { return val_; }
    int prec() const { return prec_; }
    bool is_exact() const { return prec_ >= kExact; }
    // No nonzero coefficient below prec.
    bool is_zero() const { return c_.empty(); }
    Elem coeff(int k) const;
    Elem lead_coeff() const { return c_.empty() ? 0 : c_[0]; }
    const std::vector<Elem>& coeffs() const { return c_; }
    // Valuation as an exponent of 1/t, i.e. ord_infinity.
    Rational ord() const { return Rational(val_, ram_); }
    // Precision as an exponent of 1/t.
    Rational prec_t() const { return Rational(prec_, ram_); }

    friend LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b);
    friend LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b);
    friend LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b);
    // Dividing by an exact non-monomial series needs a finite-precision numerator.
    friend LaurentSeries operator/(const LaurentSeries& a, const LaurentSeries& b);
    LaurentSeries operator-() const;
    LaurentSeries& operator+=(const LaurentSeries& o) { return *this = *this + o; }
    LaurentSeries& operator-=(const LaurentSeries& o) { return *this = *this - o; }
    LaurentSeries& operator*=(const LaurentSeries& o) { return *this = *this * o; }

    // Inverse; an exact non-monomial input is expanded modulo u^prec_if_exact.
    LaurentSeries inv(int prec_if_exact = 0) const;
    LaurentSeries scaled(Elem c) const;
    LaurentSeries pow(unsigned e) const;
    // x -> x^p, exact in characteristic p.
    LaurentSeries frobenius() const;
    // Drop everything from u^p on.
    LaurentSeries with_prec(int p) const;
    // Rewrite over u = v^m (ram becomes ram*m).
    LaurentSeries ramified(int m) const;
    LaurentSeries lifted(const FieldRef& ext) const;
    // Multiply by u^k.
    LaurentSeries shifted(int k) const;

    // For ram 1: the terms with nonpositive u-exponent as a polynomial in t.
    Poly polynomial_part() const;
    // For ram 1: the terms with positive u-exponent.
    LaurentSeries fractional_part() const;

    // Equality of the known parts (same field, ram, precision and coefficients).
    friend bool operator==(const LaurentSeries& a, const LaurentSeries& b);
    // a - b vanishes to the smaller precision of the two.
    friend bool agrees(const LaurentSeries& a, const LaurentSeries& b);

    std::string to_string(int max_terms = 8) const;

private:
    void normalize();
    FieldRef field_;
    int ram_ = 1;
    int val_ = kExact;
    int prec_ = kExact;
    std::vector<Elem> c_;
};

// Bring two series to a common ramification and constant field.
void unify(LaurentSeries& a, LaurentSeries& b);

// Evaluate a polynomial in z with coefficients in K at a series. Rational
// coefficients are expanded to `coeff_prec` (u-units).
LaurentSeries eval_at(const ZPoly& f, const LaurentSeries& x, int coeff_prec);

// Power series inverse of a unit (c[0] != 0) modulo x^n.
std::vector<Elem> inverse_series(const GaloisField& F, const std::vector<Elem>& c, std::size_t n);

}  // namespace ffdyn
