#include "ffdyn/bipoly.hpp"

#include <sstream>

#include "ffdyn/error.hpp"

namespace ffdyn {

BiPoly::BiPoly(FieldRef field, std::vector<Poly> coeffs) : field_(std::move(field)), c_(std::move(coeffs)) { trim(); }

BiPoly BiPoly::z(FieldRef field) { return monomial(Poly::constant(field, 1), 1); }

BiPoly BiPoly::constant(const Poly& c) { return BiPoly(c.field(), {c}); }

BiPoly BiPoly::monomial(const Poly& c, std::size_t deg) {
    std::vector<Poly> v(deg + 1, Poly(c.field()));
    v[deg] = c;
    return BiPoly(c.field(), std::move(v));
}

BiPoly BiPoly::from_zpoly(const ZPoly& f) {
    FieldRef fld = f.field();
    if (f.is_zero()) return BiPoly(fld);
    Poly l = Poly::constant(fld, 1);
    for (auto& c : f.coeffs()) {
        if (c.is_zero()) continue;
        l = l / gcd(l, c.den()) * c.den();
    }
    std::vector<Poly> v;
    for (auto& c : f.coeffs()) v.push_back(c.is_zero() ? Poly(fld) : c.num() * (l / c.den()));
    return BiPoly(fld, std::move(v)).primitive();
}

void BiPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

int BiPoly::degree_t() const {
    int d = -1;
    for (auto& c : c_) d = std::max(d, c.degree());
    return d;
}

void BiPoly::set(std::size_t i, const Poly& v) {
    if (i >= c_.size()) {
        if (v.is_zero()) return;
        c_.resize(i + 1, Poly(field_));
    }
    c_[i] = v;
    trim();
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
    if (!field_) field_ = o.field_;
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Poly(field_));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o) {
    if (!field_) field_ = o.field_;
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Poly(field_));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
    FieldRef f = a.field_ ? a.field_ : b.field_;
    if (a.is_zero() || b.is_zero()) return BiPoly(f);
    if (a.c_.size() == 1 || b.c_.size() == 1) {
        const BiPoly& s = a.c_.size() == 1 ? a : b;
        const BiPoly& o = a.c_.size() == 1 ? b : a;
        return o.scaled(s.c_[0]);
    }
    // Kronecker substitution z -> t^D
    int D = std::max(a.degree_t(), 0) + std::max(b.degree_t(), 0) + 1;
    auto pack = [&](const BiPoly& x) {
        std::vector<Elem> v(x.c_.size() * D, 0);
        for (std::size_t i = 0; i < x.c_.size(); ++i)
            for (std::size_t j = 0; j < x.c_[i].coeffs().size(); ++j) v[i * D + j] = x.c_[i].coeffs()[j];
        return v;
    };
    std::vector<Elem> prod = multiply_coeffs(*f, pack(a), pack(b));
    std::size_t nz = a.c_.size() + b.c_.size() - 1;
    std::vector<Poly> out(nz, Poly(f));
    for (std::size_t i = 0; i < nz; ++i) {
        std::size_t lo = i * D, hi = std::min(prod.size(), lo + D);
        if (lo < hi) out[i] = Poly(f, std::vector<Elem>(prod.begin() + lo, prod.begin() + hi));
    }
    return BiPoly(f, std::move(out));
}

BiPoly BiPoly::operator-() const {
    BiPoly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

bool operator<(const BiPoly& a, const BiPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (std::size_t i = a.c_.size(); i-- > 0;) {
        if (a.c_[i] != b.c_[i]) return a.c_[i] < b.c_[i];
    }
    return false;
}

BiPoly BiPoly::scaled(const Poly& c) const {
    if (c.is_zero()) return BiPoly(field_);
    BiPoly r = *this;
    for (auto& x : r.c_) x = x * c;
    return r;
}

BiPoly BiPoly::scaled(Elem c) const {
    if (c == 0) return BiPoly(field_);
    BiPoly r = *this;
    for (auto& x : r.c_) x = x.scaled(c);
    return r;
}

BiPoly BiPoly::pow(unsigned e) const {
    BiPoly r = constant(Poly::constant(field_, 1)), b = *this;
    while (e) {
        if (e & 1) r = r * b;
        e >>= 1;
        if (e) b = b * b;
    }
    return r;
}

Poly BiPoly::content() const {
    Poly g(field_);
    for (auto& c : c_) {
        g = gcd(g, c);
        if (g.is_one()) break;
    }
    return g;
}

BiPoly BiPoly::primitive() const {
    if (is_zero()) return *this;
    Poly g = content();
    BiPoly r = *this;
    if (!g.is_one())
        for (auto& c : r.c_) c = c / g;
    Elem l = r.c_.back().lead();
    if (l != 1) r = r.scaled(field_->inv(l));
    return r;
}

BiPoly BiPoly::derivative() const {
    if (c_.size() <= 1) return BiPoly(field_);
    std::vector<Poly> v(c_.size() - 1, Poly(field_));
    for (std::size_t i = 1; i < c_.size(); ++i) v[i - 1] = c_[i].scaled(field_->from_int(static_cast<std::int64_t>(i)));
    return BiPoly(field_, std::move(v));
}

BiPoly BiPoly::derivative_t() const {
    BiPoly r = *this;
    for (auto& c : r.c_) c = c.derivative();
    r.trim();
    return r;
}

Poly BiPoly::eval_t(Elem c) const {
    std::vector<Elem> v;
    for (auto& x : c_) v.push_back(x.eval(c));
    return Poly(field_, std::move(v));
}

BiPoly BiPoly::shift_t(Elem c) const {
    BiPoly r = *this;
    for (auto& x : r.c_) x = x.taylor_shift(c);
    return r;
}

BiPoly BiPoly::truncated_t(std::size_t n) const {
    BiPoly r = *this;
    for (auto& x : r.c_) x = x.truncated(n);
    r.trim();
    return r;
}

BiPoly BiPoly::reversed(int n) const {
    std::vector<Poly> v(n + 1, Poly(field_));
    for (int i = 0; i <= degree() && i <= n; ++i) v[n - i] = c_[i];
    return BiPoly(field_, std::move(v));
}

BiPoly BiPoly::compose(const BiPoly& inner) const {
    BiPoly acc(field_);
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * inner + constant(c_[i]);
    return acc;
}

BiPoly BiPoly::inflate(unsigned k) const {
    if (is_zero()) return *this;
    std::vector<Poly> v((c_.size() - 1) * k + 1, Poly(field_));
    for (std::size_t i = 0; i < c_.size(); ++i) v[i * k] = c_[i];
    return BiPoly(field_, std::move(v));
}

std::optional<BiPoly> BiPoly::deflate(unsigned k) const {
    std::vector<Poly> v;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (i % k) {
            if (!c_[i].is_zero()) return std::nullopt;
        } else {
            v.push_back(c_[i]);
        }
    }
    return BiPoly(field_, std::move(v));
}

Poly BiPoly::eval_homog(int n, const Poly& a, const Poly& b) const {
    if (n < degree()) fail(ErrorKind::InvalidArgument, "homogenizing degree below the z-degree");
    Poly acc(field_);
    std::vector<Poly> bp(n + 1);
    bp[0] = Poly::constant(field_, 1);
    for (int i = 1; i <= n; ++i) bp[i] = bp[i - 1] * b;
    for (int i = degree(); i >= 0; --i) {
        acc = acc * a + c_[i] * bp[degree() - i];
    }
    // acc = sum c_i a^i b^(deg - i); scale up to degree n
    return acc * bp[n - degree()];
}

RatFunc BiPoly::eval(const RatFunc& x) const {
    if (is_zero()) return RatFunc(field_);
    Poly v = eval_homog(degree(), x.num(), x.den());
    return RatFunc::normalize(v, x.den().pow(degree()));
}

ZPoly BiPoly::to_zpoly() const {
    std::vector<RatFunc> v;
    for (auto& c : c_) v.push_back(RatFunc(c));
    return ZPoly(field_, std::move(v));
}

BiPoly BiPoly::lifted(const FieldRef& ext) const {
    std::vector<Poly> v;
    for (auto& c : c_) v.push_back(c.lifted(ext));
    return BiPoly(ext, std::move(v));
}

bool BiPoly::descend(const FieldRef& to, BiPoly& out) const {
    std::vector<Poly> v(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (!c_[i].descend(to, v[i])) return false;
    out = BiPoly(to, std::move(v));
    return true;
}

BiPoly BiPoly::frobenius_coeffs() const {
    BiPoly r = *this;
    for (auto& c : r.c_) c = c.frobenius_coeffs();
    return r;
}

std::string BiPoly::to_string(const std::string& var) const { return to_zpoly().to_string(var); }

std::optional<BiPoly> divide_exact(const BiPoly& a, const BiPoly& b) {
    if (b.is_zero()) fail(ErrorKind::ZeroDenominator, "division by zero in F_q[t][z]");
    FieldRef f = b.field();
    if (a.is_zero()) return BiPoly(f);
    if (a.degree() < b.degree()) return std::nullopt;
    std::vector<Poly> r = a.coeffs();
    const auto& bc = b.coeffs();
    std::size_t db = bc.size() - 1;
    std::vector<Poly> q(r.size() - db, Poly(f));
    for (std::size_t i = r.size(); i-- > db;) {
        if (r[i].is_zero()) continue;
        auto [c, rem] = divmod(r[i], bc.back());
        if (!rem.is_zero()) return std::nullopt;
        q[i - db] = c;
        for (std::size_t j = 0; j <= db; ++j)
            if (!bc[j].is_zero()) r[i - db + j] -= c * bc[j];
    }
    for (std::size_t i = 0; i < db; ++i)
        if (!r[i].is_zero()) return std::nullopt;
    return BiPoly(f, std::move(q));
}

BiPoly gcd(const BiPoly& a, const BiPoly& b) {
    FieldRef f = a.field() ? a.field() : b.field();
    if (a.is_zero()) return b.primitive();
    if (b.is_zero()) return a.primitive();
    Poly c = gcd(a.content(), b.content());
    ZPoly g = gcd(a.to_zpoly(), b.to_zpoly());
    return BiPoly::from_zpoly(g).scaled(c);
}

Poly resultant_z(const BiPoly& f, const BiPoly& g) {
    RatFunc r = resultant_z(f.to_zpoly(), g.to_zpoly());
    if (!r.is_poly()) fail(ErrorKind::InvalidArgument, "internal: resultant of integral polynomials not integral");
    return r.num();
}

}  // namespace ffdyn
