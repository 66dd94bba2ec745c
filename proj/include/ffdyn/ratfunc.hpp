#pragma once

#include <string>

#include "ffdyn/poly.hpp"

namespace ffdyn {

// Element of K = F_q(t) as a reduced fraction with monic denominator.
class RatFunc {
public:
    RatFunc() = default;
    explicit RatFunc(FieldRef field) : num_(field), den_(Poly::constant(field, 1)) {}
    // Polynomial embedding a -> a/1.
    RatFunc(const Poly& num);

    static RatFunc normalize(const Poly& num, const Poly& den);
    static RatFunc constant(FieldRef field, Elem c) { return RatFunc(Poly::constant(std::move(field), c)); }
    static RatFunc from_int(FieldRef field, std::int64_t v) { return constant(field, field->from_int(v)); }
    static RatFunc t(FieldRef field) { return RatFunc(Poly::x(std::move(field))); }
    // t^k for any integer k
    static RatFunc t_pow(FieldRef field, int k);

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    const FieldRef& field() const { return num_.field() ? num_.field() : den_.field(); }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_poly() const { return den_.is_one(); }
    bool is_constant() const { return den_.is_one() && num_.is_constant(); }
    // Constant value (requires is_constant()).
    Elem constant_value() const { return num_[0]; }

    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
    RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }
    friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
    RatFunc operator-() const;
    friend bool operator==(const RatFunc& a, const RatFunc& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
    friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }
    friend bool operator<(const RatFunc& a, const RatFunc& b) {
        if (a.den_ != b.den_) return a.den_ < b.den_;
        return a.num_ < b.num_;
    }

    RatFunc inv() const;
    RatFunc pow(long long e) const;
    RatFunc scaled(Elem c) const;
    // d/dt
    RatFunc derivative() const;
    // Apply the p-power Frobenius to the constants (t fixed).
    RatFunc frobenius_coeffs() const;
    RatFunc lifted(const FieldRef& ext) const;
    bool descend(const FieldRef& to, RatFunc& out) const;

    std::string to_string(const std::string& var = "t") const;

private:
    Poly num_, den_;
};

// max(deg num, deg den); zero has height 0.
int height(const RatFunc& r);
// deg den - deg num (positive means small at infinity). r must be nonzero.
int ord_inf(const RatFunc& r);

class Place {
public:
    enum class Kind { Finite, Infinity };
    static Place infinity() { return Place(); }
    // Verifies that pi is irreducible; stores it monic.
    static Place finite(const Poly& pi);

    Kind kind() const { return kind_; }
    bool is_infinity() const { return kind_ == Kind::Infinity; }
    const Poly& pi() const { return pi_; }
    int degree() const { return kind_ == Kind::Infinity ? 1 : pi_.degree(); }
    std::string to_string() const;

private:
    Place() = default;
    Kind kind_ = Kind::Infinity;
    Poly pi_;
};

int ord_at(const Place& v, const RatFunc& r);
// Every finite place where r has nonzero order, with that order.
std::vector<std::pair<Place, int>> support(const RatFunc& r);

}  // namespace ffdyn
