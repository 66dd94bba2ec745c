#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "ffdyn/field.hpp"

namespace ffdyn {

// Dense univariate polynomial over F_q. The zero polynomial has no
// coefficients and degree -1; otherwise the leading coefficient is nonzero.
class Poly {
public:
    Poly() = default;
    explicit Poly(FieldRef field) : field_(std::move(field)) {}
    Poly(FieldRef field, std::vector<Elem> coeffs);

    static Poly constant(FieldRef field, Elem c);
    static Poly monomial(FieldRef field, Elem c, std::size_t deg);
    static Poly x(FieldRef field) { return monomial(std::move(field), 1, 1); }
    static Poly from_ints(FieldRef field, const std::vector<std::int64_t>& ascending);

    const FieldRef& field() const { return field_; }
    const GaloisField& F() const { return *field_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
    bool is_constant() const { return c_.size() <= 1; }
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }
    Elem operator[](std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
    Elem lead() const { return c_.empty() ? 0 : c_.back(); }
    const std::vector<Elem>& coeffs() const { return c_; }
    // Number of trailing zero coefficients (t-adic valuation); -1 for zero.
    int low_degree() const;

    void set(std::size_t i, Elem v);

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Poly& o);
    Poly operator-() const;

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend bool operator==(const Poly& a, const Poly& b);
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }
    // Total order used for canonical sorting (degree, then coefficients from the top).
    friend bool operator<(const Poly& a, const Poly& b);

    Poly scaled(Elem c) const;
    Poly monic() const;
    Poly shifted(std::size_t n) const;  // times x^n
    Poly truncated(std::size_t n) const;  // mod x^n
    Poly reversed(std::size_t n) const;   // x^n p(1/x)
    Poly derivative() const;
    Poly pow(std::uint64_t e) const;
    Elem eval(Elem x) const;
    Poly compose(const Poly& inner) const;
    // p(x + c)
    Poly taylor_shift(Elem c) const;
    // Apply the p-power Frobenius to every coefficient.
    Poly frobenius_coeffs() const;
    // Lift into an extension of the coefficient field.
    Poly lifted(const FieldRef& ext) const;
    // Bring coefficients down to an ancestor field; false if impossible.
    bool descend(const FieldRef& to, Poly& out) const;

    std::string to_string(const std::string& var = "t") const;

private:
    void trim();
    FieldRef field_;
    std::vector<Elem> c_;
};

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
Poly operator/(const Poly& a, const Poly& b);
Poly operator%(const Poly& a, const Poly& b);
// Monic gcd (zero if both are zero).
Poly gcd(const Poly& a, const Poly& b);
// g = s a + t b with g monic.
void xgcd(const Poly& a, const Poly& b, Poly& g, Poly& s, Poly& t);
Poly powmod(const Poly& base, std::uint64_t e, const Poly& mod);
Poly mulmod(const Poly& a, const Poly& b, const Poly& mod);
// Multiplicity of the irreducible `pi` in `a` (a nonzero).
int multiplicity(const Poly& a, const Poly& pi);

// Raw product of coefficient vectors (Karatsuba above a threshold).
std::vector<Elem> multiply_coeffs(const GaloisField& F, const std::vector<Elem>& a, const std::vector<Elem>& b);

struct PolyFactor {
    Poly factor;  // monic irreducible
    int multiplicity;
};

// Factorization over F_q: squarefree decomposition, distinct-degree, then
// Cantor-Zassenhaus equal-degree splitting. Factors sorted canonically; the
// leading coefficient of `f` is not included.
std::vector<PolyFactor> factor_univariate(const Poly& f);
bool is_irreducible(const Poly& f);
// Distinct roots in F_q.
std::vector<Elem> roots(const Poly& f);
// Squarefree decomposition: f = lc * prod a_i^i, entries (a_i, i) with a_i != 1.
std::vector<PolyFactor> squarefree_decomposition(const Poly& f);

}  // namespace ffdyn
