#include "ffdyn/series.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "ffdyn/error.hpp"

namespace ffdyn {

namespace {

int clamp_prec(long long p) { return p >= LaurentSeries::kExact ? LaurentSeries::kExact : static_cast<int>(p); }

bool needs_unify(const LaurentSeries& a, const LaurentSeries& b) {
    if (a.ram() != b.ram()) return true;
    if (a.field().get() == b.field().get()) return false;
    return !same_field(a.field(), b.field());
}

}  // namespace

std::vector<Elem> inverse_series(const GaloisField& F, const std::vector<Elem>& c, std::size_t n) {
    if (c.empty() || c[0] == 0) fail(ErrorKind::NotInvertible, "series inverse of a non-unit");
    std::vector<Elem> x{F.inv(c[0])};
    std::size_t k = 1;
    while (k < n) {
        std::size_t k2 = std::min(2 * k, n);
        std::vector<Elem> head(c.begin(), c.begin() + std::min(c.size(), k2));
        std::vector<Elem> e = multiply_coeffs(F, head, x);
        e.resize(k2, 0);
        // e <- 2 - e
        for (auto& v : e) v = F.neg(v);
        e[0] = F.add(e[0], F.from_int(2));
        x = multiply_coeffs(F, x, e);
        x.resize(k2, 0);
        k = k2;
    }
    x.resize(n, 0);
    return x;
}

LaurentSeries::LaurentSeries(FieldRef field, int ram, int val, std::vector<Elem> coeffs, int prec)
    : field_(std::move(field)), ram_(ram), val_(val), prec_(clamp_prec(prec)), c_(std::move(coeffs)) {
    if (ram_ < 1) fail(ErrorKind::InvalidArgument, "ramification index must be positive");
    normalize();
}

void LaurentSeries::normalize() {
    std::size_t lead = 0;
    while (lead < c_.size() && c_[lead] == 0) ++lead;
    if (lead == c_.size()) {
        c_.clear();
        val_ = prec_;
        return;
    }
    if (lead) {
        c_.erase(c_.begin(), c_.begin() + lead);
        val_ += static_cast<int>(lead);
    }
    if (!is_exact()) {
        if (val_ >= prec_) {
            c_.clear();
            val_ = prec_;
            return;
        }
        if (static_cast<long long>(c_.size()) > static_cast<long long>(prec_) - val_) c_.resize(prec_ - val_);
    }
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

LaurentSeries LaurentSeries::zero(FieldRef field, int ram, int prec) { return LaurentSeries(std::move(field), ram, prec, {}, prec); }

LaurentSeries LaurentSeries::constant(FieldRef field, Elem c, int ram) { return monomial(std::move(field), c, 0, ram); }

LaurentSeries LaurentSeries::monomial(FieldRef field, Elem c, int k, int ram) {
    return LaurentSeries(std::move(field), ram, k, {c}, kExact);
}

LaurentSeries LaurentSeries::from_ratfunc(const RatFunc& r, int ram, int prec) {
    FieldRef f = r.field();
    if (r.is_zero()) return zero(f, ram, kExact);
    const Poly& n = r.num();
    const Poly& d = r.den();
    int val = ram * (d.degree() - n.degree());
    std::vector<Elem> nrev(n.coeffs().rbegin(), n.coeffs().rend());
    bool exact = d.low_degree() == d.degree();
    std::vector<Elem> xs;
    int out_prec = kExact;
    if (exact) {
        // d = t^k (monic), so n/d = x^(k - deg n) * nrev(x)
        xs = nrev;
    } else {
        long long span = static_cast<long long>(prec) - val;
        if (span <= 0) return zero(f, ram, prec);
        std::size_t nterms = static_cast<std::size_t>((span + ram - 1) / ram);
        std::vector<Elem> drev(d.coeffs().rbegin(), d.coeffs().rend());
        drev.resize(std::min(drev.size(), nterms));
        nrev.resize(std::min(nrev.size(), nterms));
        xs = multiply_coeffs(*f, nrev, inverse_series(*f, drev, nterms));
        xs.resize(nterms, 0);
        out_prec = prec;
    }
    std::vector<Elem> us;
    if (ram == 1) {
        us = std::move(xs);
    } else {
        us.assign(xs.empty() ? 0 : (xs.size() - 1) * ram + 1, 0);
        for (std::size_t j = 0; j < xs.size(); ++j) us[j * ram] = xs[j];
    }
    return LaurentSeries(f, ram, val, std::move(us), out_prec);
}

LaurentSeries LaurentSeries::from_terms(FieldRef field, int ram, const std::map<int, Elem>& terms, int prec) {
    if (terms.empty()) return zero(field, ram, prec);
    int lo = terms.begin()->first, hi = terms.rbegin()->first;
    std::vector<Elem> v(hi - lo + 1, 0);
    for (auto& [k, c] : terms) v[k - lo] = c;
    return LaurentSeries(std::move(field), ram, lo, std::move(v), prec);
}

Elem LaurentSeries::coeff(int k) const {
    if (k < val_) return 0;
    std::size_t i = static_cast<std::size_t>(k - val_);
    return i < c_.size() ? c_[i] : 0;
}

void unify(LaurentSeries& a, LaurentSeries& b) {
    if (a.field().get() != b.field().get() && !same_field(a.field(), b.field())) {
        FieldRef big = larger_field(a.field(), b.field());
        a = a.lifted(big);
        b = b.lifted(big);
    }
    if (a.ram() != b.ram()) {
        int l = std::lcm(a.ram(), b.ram());
        a = a.ramified(l / a.ram());
        b = b.ramified(l / b.ram());
    }
}

LaurentSeries operator+(const LaurentSeries& a0, const LaurentSeries& b0) {
    if (needs_unify(a0, b0)) {
        LaurentSeries a = a0, b = b0;
        unify(a, b);
        return a + b;
    }
    const LaurentSeries& a = a0;
    const LaurentSeries& b = b0;
    int prec = std::min(a.prec_, b.prec_);
    if (a.is_zero()) return b.with_prec(prec);
    if (b.is_zero()) return a.with_prec(prec);
    int lo = std::min(a.val_, b.val_);
    if (lo >= prec) return LaurentSeries::zero(a.field_, a.ram_, prec);
    long long hi_a = a.val_ + static_cast<long long>(a.c_.size());
    long long hi_b = b.val_ + static_cast<long long>(b.c_.size());
    long long hi = std::min<long long>(std::max(hi_a, hi_b), prec);
    std::vector<Elem> v(static_cast<std::size_t>(std::max<long long>(hi - lo, 0)), 0);
    const GaloisField& F = *a.field_;
    for (std::size_t i = 0; i < a.c_.size() && a.val_ + (long long)i < hi; ++i) v[a.val_ - lo + i] = a.c_[i];
    for (std::size_t i = 0; i < b.c_.size() && b.val_ + (long long)i < hi; ++i)
        v[b.val_ - lo + i] = F.add(v[b.val_ - lo + i], b.c_[i]);
    return LaurentSeries(a.field_, a.ram_, lo, std::move(v), prec);
}

LaurentSeries LaurentSeries::operator-() const {
    LaurentSeries r = *this;
    for (auto& x : r.c_) x = field_->neg(x);
    return r;
}

LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b) { return a + (-b); }

LaurentSeries operator*(const LaurentSeries& a0, const LaurentSeries& b0) {
    if (needs_unify(a0, b0)) {
        LaurentSeries a = a0, b = b0;
        unify(a, b);
        return a * b;
    }
    const LaurentSeries& a = a0;
    const LaurentSeries& b = b0;
    long long pa = a.prec_, pb = b.prec_;
    long long p1 = a.is_exact() ? LaurentSeries::kExact : pa + (b.is_zero() ? b.prec_ : b.val_);
    long long p2 = b.is_exact() ? LaurentSeries::kExact : pb + (a.is_zero() ? a.prec_ : a.val_);
    long long prec = std::min(p1, p2);
    if (a.is_exact() && b.is_exact()) prec = LaurentSeries::kExact;
    if (a.is_zero() || b.is_zero()) return LaurentSeries::zero(a.field_, a.ram_, clamp_prec(prec));
    int val = a.val_ + b.val_;
    std::vector<Elem> ac = a.c_, bc = b.c_;
    if (prec < LaurentSeries::kExact) {
        long long len = prec - val;
        if (len <= 0) return LaurentSeries::zero(a.field_, a.ram_, clamp_prec(prec));
        if ((long long)ac.size() > len) ac.resize(len);
        if ((long long)bc.size() > len) bc.resize(len);
    }
    std::vector<Elem> v = multiply_coeffs(*a.field_, ac, bc);
    return LaurentSeries(a.field_, a.ram_, val, std::move(v), clamp_prec(prec));
}

LaurentSeries LaurentSeries::inv(int prec_if_exact) const {
    if (is_zero())
        fail(ErrorKind::PrecisionExhausted, "inverse of a series with no known nonzero term");
    int out_val = -val_;
    long long out_prec;
    if (is_exact()) {
        if (c_.size() == 1) return LaurentSeries(field_, ram_, out_val, {field_->inv(c_[0])}, kExact);
        if (prec_if_exact <= out_val)
            fail(ErrorKind::PrecisionExhausted, "inverse of an exact series needs a target precision");
        out_prec = prec_if_exact;
    } else {
        out_prec = static_cast<long long>(prec_) - 2LL * val_;
    }
    std::size_t n = static_cast<std::size_t>(out_prec - out_val);
    return LaurentSeries(field_, ram_, out_val, inverse_series(*field_, c_, n), static_cast<int>(out_prec));
}

LaurentSeries operator/(const LaurentSeries& a, const LaurentSeries& b) {
    if (b.is_exact() && b.c_.size() > 1) {
        if (a.is_exact())
            fail(ErrorKind::PrecisionExhausted, "exact quotient of series needs a target precision");
        long long want = static_cast<long long>(a.prec_) - (a.is_zero() ? a.prec_ : a.val_) - b.val_;
        return a * b.inv(static_cast<int>(want));
    }
    return a * b.inv();
}

LaurentSeries LaurentSeries::scaled(Elem c) const {
    if (c == 0) return zero(field_, ram_, prec_);
    LaurentSeries r = *this;
    for (auto& x : r.c_) x = field_->mul(x, c);
    return r;
}

LaurentSeries LaurentSeries::pow(unsigned e) const {
    LaurentSeries r = constant(field_, 1, ram_), b = *this;
    while (e) {
        if (e & 1) r = r * b;
        e >>= 1;
        if (e) b = b * b;
    }
    return r;
}

LaurentSeries LaurentSeries::frobenius() const {
    int p = static_cast<int>(field_->characteristic());
    if (is_zero()) return zero(field_, ram_, is_exact() ? kExact : clamp_prec(static_cast<long long>(prec_) * p));
    std::vector<Elem> v((c_.size() - 1) * p + 1, 0);
    for (std::size_t i = 0; i < c_.size(); ++i) v[i * p] = field_->frobenius(c_[i]);
    long long pr = is_exact() ? kExact : static_cast<long long>(prec_) * p;
    return LaurentSeries(field_, ram_, val_ * p, std::move(v), clamp_prec(pr));
}

LaurentSeries LaurentSeries::with_prec(int p) const {
    if (p >= prec_) return *this;
    LaurentSeries r = *this;
    r.prec_ = p;
    r.normalize();
    return r;
}

LaurentSeries LaurentSeries::ramified(int m) const {
    if (m == 1) return *this;
    long long pr = is_exact() ? kExact : static_cast<long long>(prec_) * m;
    if (is_zero()) return zero(field_, ram_ * m, clamp_prec(pr));
    std::vector<Elem> v((c_.size() - 1) * m + 1, 0);
    for (std::size_t i = 0; i < c_.size(); ++i) v[i * m] = c_[i];
    return LaurentSeries(field_, ram_ * m, val_ * m, std::move(v), clamp_prec(pr));
}

LaurentSeries LaurentSeries::lifted(const FieldRef& ext) const {
    if (ext.get() == field_.get()) return *this;
    LaurentSeries r = *this;
    r.field_ = ext;
    for (auto& x : r.c_) x = ext->lift_from(*field_, x);
    return r;
}

LaurentSeries LaurentSeries::shifted(int k) const {
    LaurentSeries r = *this;
    if (!is_exact()) r.prec_ = clamp_prec(static_cast<long long>(prec_) + k);
    r.val_ += k;
    if (r.is_zero()) r.val_ = r.prec_;
    return r;
}

Poly LaurentSeries::polynomial_part() const {
    if (ram_ != 1) fail(ErrorKind::InvalidArgument, "polynomial part needs an unramified series");
    if (prec_ <= 0) fail(ErrorKind::PrecisionExhausted, "polynomial part not determined at this precision");
    if (is_zero() || val_ > 0) return Poly(field_);
    std::vector<Elem> v(static_cast<std::size_t>(-val_) + 1, 0);
    for (int k = val_; k <= 0; ++k) v[-k] = coeff(k);
    return Poly(field_, std::move(v));
}

LaurentSeries LaurentSeries::fractional_part() const {
    if (is_zero() || val_ > 0) return *this;
    std::vector<Elem> v;
    for (std::size_t i = static_cast<std::size_t>(1 - val_); i < c_.size(); ++i) v.push_back(c_[i]);
    return LaurentSeries(field_, ram_, 1, std::move(v), prec_);
}

bool operator==(const LaurentSeries& a, const LaurentSeries& b) {
    return a.ram_ == b.ram_ && a.prec_ == b.prec_ && a.val_ == b.val_ && a.c_ == b.c_ &&
           (a.field_.get() == b.field_.get() || same_field(a.field_, b.field_));
}

bool agrees(const LaurentSeries& a, const LaurentSeries& b) { return (a - b).is_zero(); }

std::string LaurentSeries::to_string(int max_terms) const {
    std::ostringstream os;
    int shown = 0;
    for (std::size_t i = 0; i < c_.size() && shown < max_terms; ++i) {
        if (!c_[i]) continue;
        int k = val_ + static_cast<int>(i);
        if (shown) os << " + ";
        ++shown;
        std::string cs = field_->to_string(c_[i]);
        // exponent of t is -k/e
        Rational ex(-k, ram_);
        if (ex == Rational(0)) {
            os << cs;
            continue;
        }
        if (c_[i] != 1) os << cs << "*";
        os << "t";
        if (ex != Rational(1)) {
            if (ex.denominator() == 1)
                os << "^" << ex.numerator();
            else
                os << "^(" << ex.numerator() << "/" << ex.denominator() << ")";
        }
    }
    if (!shown) os << "0";
    if (!is_exact()) {
        Rational pt(prec_, ram_);
        os << " + O(t^" << (pt.denominator() == 1 ? std::to_string(-pt.numerator())
                                                   : "(" + std::to_string(-pt.numerator()) + "/" + std::to_string(pt.denominator()) + ")")
           << ")";
    }
    return os.str();
}

LaurentSeries eval_at(const ZPoly& f, const LaurentSeries& x, int coeff_prec) {
    FieldRef fld = x.field();
    LaurentSeries acc = LaurentSeries::zero(fld, x.ram());
    for (std::size_t i = f.coeffs().size(); i-- > 0;) {
        RatFunc c = f.coeffs()[i].lifted(fld);
        acc = acc * x + LaurentSeries::from_ratfunc(c, x.ram(), coeff_prec);
    }
    return acc;
}

}  // namespace ffdyn
