#include "ffdyn/zpoly.hpp"

#include <sstream>

#include "ffdyn/error.hpp"

namespace ffdyn {

std::uint32_t binom_mod(std::uint64_t n, std::uint64_t k, std::uint32_t p) {
    if (k > n) return 0;
    std::uint64_t r = 1;
    while (n || k) {
        std::uint64_t ni = n % p, ki = k % p;
        if (ki > ni) return 0;
        // small binomial by multiplicative formula mod p
        std::uint64_t num = 1, den = 1;
        for (std::uint64_t i = 0; i < ki; ++i) {
            num = num * ((ni - i) % p) % p;
            den = den * ((i + 1) % p) % p;
        }
        // den^(p-2)
        std::uint64_t inv = 1, b = den, e = p - 2;
        while (e) {
            if (e & 1) inv = inv * b % p;
            b = b * b % p;
            e >>= 1;
        }
        r = r * num % p * inv % p;
        n /= p;
        k /= p;
    }
    return static_cast<std::uint32_t>(r);
}

ZPoly::ZPoly(FieldRef field, std::vector<RatFunc> coeffs) : field_(std::move(field)), c_(std::move(coeffs)) { trim(); }

ZPoly ZPoly::z(FieldRef field) { return monomial(RatFunc::constant(field, 1), 1); }

ZPoly ZPoly::constant(const RatFunc& c) { return ZPoly(c.field(), {c}); }

ZPoly ZPoly::monomial(const RatFunc& c, std::size_t deg) {
    std::vector<RatFunc> v(deg + 1, RatFunc(c.field()));
    v[deg] = c;
    return ZPoly(c.field(), std::move(v));
}

void ZPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

void ZPoly::set(std::size_t i, const RatFunc& v) {
    if (i >= c_.size()) {
        if (v.is_zero()) return;
        c_.resize(i + 1, RatFunc(field_));
    }
    c_[i] = v;
    trim();
}

ZPoly& ZPoly::operator+=(const ZPoly& o) {
    if (!field_) field_ = o.field_;
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), RatFunc(field_));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

ZPoly& ZPoly::operator-=(const ZPoly& o) {
    if (!field_) field_ = o.field_;
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), RatFunc(field_));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

ZPoly operator*(const ZPoly& a, const ZPoly& b) {
    FieldRef f = a.field_ ? a.field_ : b.field_;
    if (a.is_zero() || b.is_zero()) return ZPoly(f);
    std::vector<RatFunc> v(a.c_.size() + b.c_.size() - 1, RatFunc(f));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            if (!b.c_[j].is_zero()) v[i + j] += a.c_[i] * b.c_[j];
    }
    return ZPoly(f, std::move(v));
}

ZPoly ZPoly::operator-() const {
    ZPoly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

ZPoly ZPoly::scaled(const RatFunc& c) const {
    if (c.is_zero()) return ZPoly(field_);
    ZPoly r = *this;
    for (auto& x : r.c_) x *= c;
    return r;
}

ZPoly ZPoly::monic() const {
    if (is_zero() || is_monic()) return *this;
    return scaled(lead().inv());
}

ZPoly ZPoly::derivative() const {
    if (c_.size() <= 1) return ZPoly(field_);
    std::vector<RatFunc> v(c_.size() - 1, RatFunc(field_));
    for (std::size_t i = 1; i < c_.size(); ++i) v[i - 1] = c_[i].scaled(field_->from_int(static_cast<std::int64_t>(i)));
    return ZPoly(field_, std::move(v));
}

ZPoly ZPoly::derivative_t() const {
    ZPoly r = *this;
    for (auto& c : r.c_) c = c.derivative();
    r.trim();
    return r;
}

ZPoly ZPoly::hasse(int k) const {
    if (k == 0) return *this;
    if (static_cast<int>(c_.size()) <= k) return ZPoly(field_);
    std::uint32_t p = field_->characteristic();
    std::vector<RatFunc> v(c_.size() - k, RatFunc(field_));
    for (std::size_t n = k; n < c_.size(); ++n) v[n - k] = c_[n].scaled(binom_mod(n, k, p));
    return ZPoly(field_, std::move(v));
}

ZPoly ZPoly::pow(unsigned e) const {
    ZPoly r = constant(RatFunc::constant(field_, 1)), b = *this;
    while (e) {
        if (e & 1) r = r * b;
        e >>= 1;
        if (e) b = b * b;
    }
    return r;
}

RatFunc ZPoly::eval(const RatFunc& x) const {
    RatFunc acc(field_);
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
}

ZPoly ZPoly::compose(const ZPoly& inner) const {
    ZPoly acc(field_);
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * inner + constant(c_[i]);
    return acc;
}

ZPoly ZPoly::reversed(int n) const {
    std::vector<RatFunc> v(n + 1, RatFunc(field_));
    for (int i = 0; i <= degree() && i <= n; ++i) v[n - i] = c_[i];
    return ZPoly(field_, std::move(v));
}

ZPoly ZPoly::lifted(const FieldRef& ext) const {
    std::vector<RatFunc> v;
    for (auto& c : c_) v.push_back(c.lifted(ext));
    return ZPoly(ext, std::move(v));
}

bool ZPoly::descend(const FieldRef& to, ZPoly& out) const {
    std::vector<RatFunc> v(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (!c_[i].descend(to, v[i])) return false;
    out = ZPoly(to, std::move(v));
    return true;
}

int ZPoly::max_coeff_height() const {
    int h = 0;
    for (auto& c : c_) h = std::max(h, height(c));
    return h;
}

std::string ZPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = c_.size(); i-- > 0;) {
        if (c_[i].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        std::string cs = c_[i].to_string();
        bool simple = c_[i].is_poly() && c_[i].num().low_degree() == c_[i].num().degree();
        if (i == 0) {
            os << cs;
            continue;
        }
        if (!c_[i].is_one()) os << (simple ? cs : "(" + cs + ")") << "*";
        os << var;
        if (i > 1) os << "^" << i;
    }
    return os.str();
}

std::pair<ZPoly, ZPoly> divmod(const ZPoly& a, const ZPoly& b) {
    if (b.is_zero()) fail(ErrorKind::ZeroDenominator, "division by the zero polynomial in z");
    FieldRef f = b.field();
    if (a.degree() < b.degree()) return {ZPoly(f), a};
    std::vector<RatFunc> r = a.coeffs();
    const auto& bc = b.coeffs();
    std::size_t db = bc.size() - 1;
    std::vector<RatFunc> q(r.size() - db, RatFunc(f));
    RatFunc il = bc.back().inv();
    for (std::size_t i = r.size(); i-- > db;) {
        if (r[i].is_zero()) continue;
        RatFunc c = r[i] * il;
        q[i - db] = c;
        for (std::size_t j = 0; j <= db; ++j)
            if (!bc[j].is_zero()) r[i - db + j] -= c * bc[j];
    }
    r.resize(db, RatFunc(f));
    return {ZPoly(f, std::move(q)), ZPoly(f, std::move(r))};
}

ZPoly operator/(const ZPoly& a, const ZPoly& b) { return divmod(a, b).first; }
ZPoly operator%(const ZPoly& a, const ZPoly& b) { return divmod(a, b).second; }

ZPoly gcd(const ZPoly& a, const ZPoly& b) {
    ZPoly x = a, y = b;
    while (!y.is_zero()) {
        ZPoly r = x % y;
        x = std::move(y);
        y = r.monic();
    }
    return x.monic();
}

void xgcd(const ZPoly& a, const ZPoly& b, ZPoly& g, ZPoly& s, ZPoly& t) {
    FieldRef f = a.field() ? a.field() : b.field();
    RatFunc one = RatFunc::constant(f, 1);
    ZPoly r0 = a, r1 = b, s0 = ZPoly::constant(one), s1(f), t0(f), t1 = ZPoly::constant(one);
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        ZPoly s2 = s0 - q * s1, t2 = t0 - q * t1;
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.is_zero()) {
        g = r0;
        s = s0;
        t = t0;
        return;
    }
    RatFunc li = r0.lead().inv();
    g = r0.scaled(li);
    s = s0.scaled(li);
    t = t0.scaled(li);
}

RatFunc resultant_z(const ZPoly& f0, const ZPoly& g0) {
    FieldRef fld = f0.field() ? f0.field() : g0.field();
    if (f0.is_zero() && g0.is_zero()) fail(ErrorKind::ZeroInput, "resultant of two zero polynomials");
    if (f0.is_zero() || g0.is_zero()) {
        const ZPoly& o = f0.is_zero() ? g0 : f0;
        return o.degree() == 0 ? RatFunc::constant(fld, 1) : RatFunc(fld);
    }
    // R(f, g) = lc(g)^deg f prod_{g(b)=0} f(b); Euclid on (g, f)
    RatFunc acc = RatFunc::constant(fld, 1);
    ZPoly a = g0, b = f0;  // R(f,g) equals the standard Res(g, f)
    while (true) {
        int m = a.degree(), n = b.degree();
        if (n == 0) return acc * b.lead().pow(m);
        if (m == 0) return acc * a.lead().pow(n);
        if (m < n) {
            // Res(a,b) = (-1)^{mn} Res(b,a)
            if ((m * n) % 2) acc = -acc;
            std::swap(a, b);
            continue;
        }
        ZPoly r = a % b;
        if (r.is_zero()) return RatFunc(fld);
        // Res(a,b) = (-1)^{mn} lc(b)^{m - deg r} Res(b, r)
        if ((m * n) % 2) acc = -acc;
        acc *= b.lead().pow(m - r.degree());
        a = std::move(b);
        b = std::move(r);
    }
}

}  // namespace ffdyn
