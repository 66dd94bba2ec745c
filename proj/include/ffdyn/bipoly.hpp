#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ffdyn/zpoly.hpp"

namespace ffdyn {

// Polynomial in F_q[t][z]: dense in z, each coefficient a Poly in t.
class BiPoly {
public:
    BiPoly() = default;
    explicit BiPoly(FieldRef field) : field_(std::move(field)) {}
    BiPoly(FieldRef field, std::vector<Poly> coeffs);

    static BiPoly z(FieldRef field);
    static BiPoly constant(const Poly& c);
    static BiPoly monomial(const Poly& c, std::size_t deg);
    // Clears denominators: returns a primitive integral multiple of f.
    static BiPoly from_zpoly(const ZPoly& f);

    const FieldRef& field() const { return field_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    int degree_t() const;
    bool is_zero() const { return c_.empty(); }
    Poly operator[](std::size_t i) const { return i < c_.size() ? c_[i] : Poly(field_); }
    const Poly& lead() const { return c_.back(); }
    const std::vector<Poly>& coeffs() const { return c_; }
    void set(std::size_t i, const Poly& v);

    BiPoly& operator+=(const BiPoly& o);
    BiPoly& operator-=(const BiPoly& o);
    friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
    friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
    friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
    BiPoly operator-() const;
    friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const BiPoly& a, const BiPoly& b) { return !(a == b); }
    friend bool operator<(const BiPoly& a, const BiPoly& b);

    BiPoly scaled(const Poly& c) const;
    BiPoly scaled(Elem c) const;
    BiPoly pow(unsigned e) const;
    // Monic gcd of the t-coefficients.
    Poly content() const;
    // Divide by the content and make the leading z-coefficient have monic leading t-term.
    BiPoly primitive() const;
    BiPoly derivative() const;    // d/dz
    BiPoly derivative_t() const;  // d/dt
    // Specialize t = c, giving a polynomial in z over F_q.
    Poly eval_t(Elem c) const;
    // Substitute t -> t + c.
    BiPoly shift_t(Elem c) const;
    // Reduce every coefficient mod t^n.
    BiPoly truncated_t(std::size_t n) const;
    // z^n P(1/z)
    BiPoly reversed(int n) const;
    BiPoly compose(const BiPoly& inner) const;
    // Replace z by z^k.
    BiPoly inflate(unsigned k) const;
    // If every z-exponent is a multiple of k, the polynomial in z^k.
    std::optional<BiPoly> deflate(unsigned k) const;
    // Sum_i c_i a^i b^(n-i), the homogenization evaluated at [a : b].
    Poly eval_homog(int n, const Poly& a, const Poly& b) const;
    // Evaluate at z = x in F_q(t).
    RatFunc eval(const RatFunc& x) const;
    ZPoly to_zpoly() const;
    BiPoly lifted(const FieldRef& ext) const;
    bool descend(const FieldRef& to, BiPoly& out) const;
    BiPoly frobenius_coeffs() const;

    std::string to_string(const std::string& var = "z") const;

private:
    void trim();
    FieldRef field_;
    std::vector<Poly> c_;
};

// Exact quotient in F_q[t][z] if b divides a there.
std::optional<BiPoly> divide_exact(const BiPoly& a, const BiPoly& b);

// gcd in F_q[t][z]: gcd of contents times the primitive gcd.
BiPoly gcd(const BiPoly& a, const BiPoly& b);

// Resultant in z of two integral polynomials, as a polynomial in t.
Poly resultant_z(const BiPoly& f, const BiPoly& g);

}  // namespace ffdyn
