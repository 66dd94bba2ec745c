#include "ffdyn/ratfunc.hpp"

#include "ffdyn/error.hpp"

namespace ffdyn {

RatFunc::RatFunc(const Poly& num) : num_(num), den_(Poly::constant(num.field(), 1)) {}

RatFunc RatFunc::normalize(const Poly& num, const Poly& den) {
    if (den.is_zero()) fail(ErrorKind::ZeroDenominator, "rational function with zero denominator");
    RatFunc r;
    if (num.is_zero()) {
        r.num_ = Poly(den.field());
        r.den_ = Poly::constant(den.field(), 1);
        return r;
    }
    Poly g = gcd(num, den);
    Poly n = num, d = den;
    if (!g.is_one()) {
        n = num / g;
        d = den / g;
    }
    Elem li = d.F().inv(d.lead());
    r.num_ = n.scaled(li);
    r.den_ = d.scaled(li);
    return r;
}

RatFunc RatFunc::t_pow(FieldRef field, int k) {
    if (k >= 0) return RatFunc(Poly::monomial(field, 1, static_cast<std::size_t>(k)));
    return normalize(Poly::constant(field, 1), Poly::monomial(field, 1, static_cast<std::size_t>(-k)));
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.den_ == b.den_) return RatFunc::normalize(a.num_ + b.num_, a.den_);
    if (a.is_poly()) return RatFunc::normalize(a.num_ * b.den_ + b.num_, b.den_);
    if (b.is_poly()) return RatFunc::normalize(a.num_ + b.num_ * a.den_, a.den_);
    Poly g = gcd(a.den_, b.den_);
    Poly bd = b.den_ / g, ad = a.den_ / g;
    return RatFunc::normalize(a.num_ * bd + b.num_ * ad, a.den_ * bd);
}

RatFunc RatFunc::operator-() const {
    RatFunc r = *this;
    r.num_ = -num_;
    return r;
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero() || b.is_zero()) return RatFunc(a.field() ? a.field() : b.field());
    if (a.is_poly() && b.is_poly()) return RatFunc(a.num_ * b.num_);
    // cross-cancel before multiplying
    Poly g1 = gcd(a.num_, b.den_), g2 = gcd(b.num_, a.den_);
    Poly n = (a.num_ / g1) * (b.num_ / g2);
    Poly d = (a.den_ / g2) * (b.den_ / g1);
    Elem li = d.F().inv(d.lead());
    RatFunc r;
    r.num_ = n.scaled(li);
    r.den_ = d.scaled(li);
    return r;
}

RatFunc RatFunc::inv() const {
    if (is_zero()) fail(ErrorKind::ZeroDenominator, "inverse of zero in F_q(t)");
    RatFunc r;
    Elem li = num_.F().inv(num_.lead());
    r.num_ = den_.scaled(li);
    r.den_ = num_.scaled(li);
    return r;
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * b.inv(); }

RatFunc RatFunc::pow(long long e) const {
    if (e < 0) return inv().pow(-e);
    RatFunc r;
    r.num_ = num_.pow(static_cast<std::uint64_t>(e));
    r.den_ = den_.pow(static_cast<std::uint64_t>(e));
    return r;
}

RatFunc RatFunc::scaled(Elem c) const {
    RatFunc r = *this;
    r.num_ = num_.scaled(c);
    if (c == 0) r.den_ = Poly::constant(field(), 1);
    return r;
}

RatFunc RatFunc::derivative() const {
    if (is_poly()) return RatFunc(num_.derivative());
    return normalize(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

RatFunc RatFunc::frobenius_coeffs() const {
    RatFunc r;
    r.num_ = num_.frobenius_coeffs();
    r.den_ = den_.frobenius_coeffs();
    return r;
}

RatFunc RatFunc::lifted(const FieldRef& ext) const {
    RatFunc r;
    r.num_ = num_.lifted(ext);
    r.den_ = den_.lifted(ext);
    return r;
}

bool RatFunc::descend(const FieldRef& to, RatFunc& out) const {
    RatFunc r;
    if (!num_.descend(to, r.num_) || !den_.descend(to, r.den_)) return false;
    out = r;
    return true;
}

std::string RatFunc::to_string(const std::string& var) const {
    std::string n = num_.to_string(var);
    if (den_.is_one()) return n;
    std::string d = den_.to_string(var);
    bool nsimple = num_.degree() <= 0 || (num_.coeffs().size() > 0 && num_.low_degree() == num_.degree() && num_.lead() == 1);
    bool dsimple = den_.low_degree() == den_.degree() && den_.lead() == 1;
    return (nsimple ? n : "(" + n + ")") + "/" + (dsimple ? d : "(" + d + ")");
}

int height(const RatFunc& r) {
    if (r.is_zero()) return 0;
    return std::max(r.num().degree(), r.den().degree());
}

int ord_inf(const RatFunc& r) {
    if (r.is_zero()) fail(ErrorKind::ZeroInput, "order of zero");
    return r.den().degree() - r.num().degree();
}

Place Place::finite(const Poly& pi) {
    if (!is_irreducible(pi)) fail(ErrorKind::NotIrreducible, "place needs an irreducible polynomial, got " + pi.to_string());
    Place v;
    v.kind_ = Kind::Finite;
    v.pi_ = pi.monic();
    return v;
}

std::string Place::to_string() const { return is_infinity() ? "inf" : "(" + pi_.to_string() + ")"; }

int ord_at(const Place& v, const RatFunc& r) {
    if (r.is_zero()) fail(ErrorKind::ZeroInput, "order of zero");
    if (v.is_infinity()) return ord_inf(r);
    return multiplicity(r.num(), v.pi()) - multiplicity(r.den(), v.pi());
}

std::vector<std::pair<Place, int>> support(const RatFunc& r) {
    if (r.is_zero()) fail(ErrorKind::ZeroInput, "support of zero");
    std::vector<std::pair<Place, int>> out;
    for (auto& [g, m] : factor_univariate(r.num())) out.push_back({Place::finite(g), m});
    for (auto& [g, m] : factor_univariate(r.den())) out.push_back({Place::finite(g), -m});
    return out;
}

}  // namespace ffdyn
