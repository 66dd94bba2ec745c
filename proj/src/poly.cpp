#include "ffdyn/poly.hpp"

#include <algorithm>
#include <sstream>

#include "ffdyn/error.hpp"

namespace ffdyn {

namespace {

void check_same(const Poly& a, const Poly& b) {
    if (a.field().get() == b.field().get()) return;
    if (!a.field() || !b.field() || !same_field(*a.field(), *b.field()))
        fail(ErrorKind::FieldMismatch, "polynomials over different fields");
}

constexpr std::size_t kKaratsubaCutoff = 40;

void school_prime(std::uint32_t p, const Elem* a, std::size_t na, const Elem* b, std::size_t nb, Elem* out) {
    // (p-1)^2 < 2^40, so up to 2^24 products fit in 64 bits
    std::vector<std::uint64_t> acc(na + nb - 1, 0);
    for (std::size_t i = 0; i < na; ++i) {
        if (!a[i]) continue;
        std::uint64_t ai = a[i];
        for (std::size_t j = 0; j < nb; ++j) acc[i + j] += ai * b[j];
    }
    for (std::size_t i = 0; i < acc.size(); ++i) out[i] = static_cast<Elem>(acc[i] % p);
}

void school_generic(const GaloisField& F, const Elem* a, std::size_t na, const Elem* b, std::size_t nb, Elem* out) {
    std::fill(out, out + na + nb - 1, 0);
    for (std::size_t i = 0; i < na; ++i) {
        if (!a[i]) continue;
        for (std::size_t j = 0; j < nb; ++j) {
            if (b[j]) out[i + j] = F.add(out[i + j], F.mul(a[i], b[j]));
        }
    }
}

void school(const GaloisField& F, const Elem* a, std::size_t na, const Elem* b, std::size_t nb, Elem* out) {
    if (F.degree() == 1 && std::min(na, nb) < (1u << 24))
        school_prime(F.characteristic(), a, na, b, nb, out);
    else
        school_generic(F, a, na, b, nb, out);
}

// out has length 2n-1; a, b have length n
void karatsuba(const GaloisField& F, const Elem* a, const Elem* b, std::size_t n, Elem* out) {
    if (n <= kKaratsubaCutoff) {
        school(F, a, n, b, n, out);
        return;
    }
    std::size_t h = n / 2, hh = n - h;
    std::vector<Elem> a01(hh), b01(hh);
    for (std::size_t i = 0; i < hh; ++i) {
        a01[i] = i < h ? F.add(a[i], a[h + i]) : a[h + i];
        b01[i] = i < h ? F.add(b[i], b[h + i]) : b[h + i];
    }
    std::vector<Elem> lo(2 * h - 1), hi(2 * hh - 1), mid(2 * hh - 1);
    karatsuba(F, a, b, h, lo.data());
    karatsuba(F, a + h, b + h, hh, hi.data());
    karatsuba(F, a01.data(), b01.data(), hh, mid.data());
    for (std::size_t i = 0; i < lo.size(); ++i) mid[i] = F.sub(mid[i], lo[i]);
    for (std::size_t i = 0; i < hi.size(); ++i) mid[i] = F.sub(mid[i], hi[i]);
    std::fill(out, out + 2 * n - 1, 0);
    for (std::size_t i = 0; i < lo.size(); ++i) out[i] = lo[i];
    for (std::size_t i = 0; i < hi.size(); ++i) out[2 * h + i] = F.add(out[2 * h + i], hi[i]);
    for (std::size_t i = 0; i < mid.size(); ++i) out[h + i] = F.add(out[h + i], mid[i]);
}


// Number-theoretic transform convolution over two word-size primes, for
// prime fields where the exact integer product fits under their product.
constexpr std::uint32_t kNttP1 = 998244353, kNttP2 = 469762049;  // both have primitive root 3

std::uint32_t pw(std::uint64_t a, std::uint64_t e, std::uint32_t m) {
    std::uint64_t r = 1;
    a %= m;
    for (; e; e >>= 1, a = a * a % m)
        if (e & 1) r = r * a % m;
    return static_cast<std::uint32_t>(r);
}

template <std::uint32_t m>
void ntt(std::vector<std::uint32_t>& a, bool invert) {
    std::size_t n = a.size();
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    for (std::size_t len = 2; len <= n; len <<= 1) {
        std::uint32_t w = pw(3, (m - 1) / len, m);
        if (invert) w = pw(w, m - 2, m);
        std::vector<std::uint32_t> ws(len / 2);
        ws[0] = 1;
        for (std::size_t k = 1; k < len / 2; ++k) ws[k] = static_cast<std::uint32_t>(std::uint64_t(ws[k - 1]) * w % m);
        for (std::size_t i = 0; i < n; i += len)
            for (std::size_t k = 0; k < len / 2; ++k) {
                std::uint32_t u = a[i + k];
                std::uint32_t v = static_cast<std::uint32_t>(std::uint64_t(a[i + k + len / 2]) * ws[k] % m);
                a[i + k] = u + v >= m ? u + v - m : u + v;
                a[i + k + len / 2] = u >= v ? u - v : u + m - v;
            }
    }
    if (invert) {
        std::uint64_t ninv = pw(n, m - 2, m);
        for (auto& x : a) x = static_cast<std::uint32_t>(x * ninv % m);
    }
}

template <std::uint32_t m>
std::vector<std::uint32_t> conv_mod(const std::vector<Elem>& a, const std::vector<Elem>& b, std::size_t n) {
    std::vector<std::uint32_t> fa(n, 0), fb(n, 0);
    for (std::size_t i = 0; i < a.size(); ++i) fa[i] = a[i] % m;
    for (std::size_t i = 0; i < b.size(); ++i) fb[i] = b[i] % m;
    ntt<m>(fa, false);
    ntt<m>(fb, false);
    for (std::size_t i = 0; i < n; ++i) fa[i] = static_cast<std::uint32_t>(std::uint64_t(fa[i]) * fb[i] % m);
    ntt<m>(fa, true);
    return fa;
}

bool ntt_applicable(const GaloisField& F, std::size_t na, std::size_t nb) {
    if (F.degree() != 1 || std::min(na, nb) < 256) return false;
    std::size_t n = 1;
    while (n < na + nb - 1) n <<= 1;
    if (n > (std::size_t(1) << 23)) return false;
    unsigned __int128 bound = static_cast<unsigned __int128>(std::min(na, nb)) * (F.characteristic() - 1) *
                              (F.characteristic() - 1);
    return bound < static_cast<unsigned __int128>(kNttP1) * kNttP2;
}

std::vector<Elem> ntt_multiply(const GaloisField& F, const std::vector<Elem>& a, const std::vector<Elem>& b) {
    std::size_t len = a.size() + b.size() - 1, n = 1;
    while (n < len) n <<= 1;
    auto r1 = conv_mod<kNttP1>(a, b, n);
    auto r2 = conv_mod<kNttP2>(a, b, n);
    // CRT: x = r1 + P1 * ((r2 - r1) / P1 mod P2)
    std::uint64_t inv = pw(kNttP1, kNttP2 - 2, kNttP2);
    std::uint32_t p = F.characteristic();
    std::vector<Elem> out(len);
    for (std::size_t i = 0; i < len; ++i) {
        std::uint64_t d = (r2[i] + std::uint64_t(kNttP2) - r1[i] % kNttP2) % kNttP2 * inv % kNttP2;
        unsigned __int128 x = static_cast<unsigned __int128>(d) * kNttP1 + r1[i];
        out[i] = static_cast<Elem>(x % p);
    }
    return out;
}

}  // namespace

std::vector<Elem> multiply_coeffs(const GaloisField& F, const std::vector<Elem>& a, const std::vector<Elem>& b) {
    if (a.empty() || b.empty()) return {};
    std::size_t na = a.size(), nb = b.size();
    std::vector<Elem> out(na + nb - 1, 0);
    if (std::min(na, nb) <= kKaratsubaCutoff) {
        school(F, a.data(), na, b.data(), nb, out.data());
        return out;
    }
    if (ntt_applicable(F, na, nb)) return ntt_multiply(F, a, b);
    // split the longer operand into blocks of the shorter length
    const std::vector<Elem>& lng = na >= nb ? a : b;
    const std::vector<Elem>& sht = na >= nb ? b : a;
    std::size_t n = sht.size();
    std::vector<Elem> block(n), prod(2 * n - 1);
    for (std::size_t off = 0; off < lng.size(); off += n) {
        std::size_t len = std::min(n, lng.size() - off);
        std::fill(block.begin(), block.end(), 0);
        std::copy(lng.begin() + off, lng.begin() + off + len, block.begin());
        karatsuba(F, block.data(), sht.data(), n, prod.data());
        for (std::size_t i = 0; i < prod.size() && off + i < out.size(); ++i)
            out[off + i] = F.add(out[off + i], prod[i]);
    }
    return out;
}

Poly::Poly(FieldRef field, std::vector<Elem> coeffs) : field_(std::move(field)), c_(std::move(coeffs)) { trim(); }

Poly Poly::constant(FieldRef field, Elem c) { return Poly(std::move(field), std::vector<Elem>{c}); }

Poly Poly::monomial(FieldRef field, Elem c, std::size_t deg) {
    std::vector<Elem> v(deg + 1, 0);
    v[deg] = c;
    return Poly(std::move(field), std::move(v));
}

Poly Poly::from_ints(FieldRef field, const std::vector<std::int64_t>& ascending) {
    std::vector<Elem> v;
    for (auto x : ascending) v.push_back(field->from_int(x));
    return Poly(std::move(field), std::move(v));
}

void Poly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

int Poly::low_degree() const {
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (c_[i]) return static_cast<int>(i);
    return -1;
}

void Poly::set(std::size_t i, Elem v) {
    if (i >= c_.size()) {
        if (v == 0) return;
        c_.resize(i + 1, 0);
    }
    c_[i] = v;
    trim();
}

Poly& Poly::operator+=(const Poly& o) {
    if (o.is_zero()) return *this;
    if (!field_) field_ = o.field_;
    check_same(*this, o);
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), 0);
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = field_->add(c_[i], o.c_[i]);
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (o.is_zero()) return *this;
    if (!field_) field_ = o.field_;
    check_same(*this, o);
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), 0);
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = field_->sub(c_[i], o.c_[i]);
    trim();
    return *this;
}

Poly& Poly::operator*=(const Poly& o) {
    *this = *this * o;
    return *this;
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& x : r.c_) x = field_->neg(x);
    return r;
}

Poly operator*(const Poly& a, const Poly& b) {
    FieldRef f = a.field() ? a.field() : b.field();
    if (a.is_zero() || b.is_zero()) return Poly(f);
    check_same(a, b);
    return Poly(f, multiply_coeffs(*f, a.c_, b.c_));
}

bool operator==(const Poly& a, const Poly& b) {
    if (a.c_ != b.c_) return false;
    if (a.is_zero()) return true;
    return a.field_.get() == b.field_.get() || same_field(*a.field_, *b.field_);
}

bool operator<(const Poly& a, const Poly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (std::size_t i = a.c_.size(); i-- > 0;)
        if (a.c_[i] != b.c_[i]) return a.c_[i] < b.c_[i];
    return false;
}

Poly Poly::scaled(Elem c) const {
    if (c == 0) return Poly(field_);
    Poly r = *this;
    for (auto& x : r.c_) x = field_->mul(x, c);
    return r;
}

Poly Poly::monic() const {
    if (is_zero() || lead() == 1) return *this;
    return scaled(field_->inv(lead()));
}

Poly Poly::shifted(std::size_t n) const {
    if (is_zero() || n == 0) return *this;
    std::vector<Elem> v(n, 0);
    v.insert(v.end(), c_.begin(), c_.end());
    return Poly(field_, std::move(v));
}

Poly Poly::truncated(std::size_t n) const {
    if (c_.size() <= n) return *this;
    return Poly(field_, std::vector<Elem>(c_.begin(), c_.begin() + n));
}

Poly Poly::reversed(std::size_t n) const {
    std::vector<Elem> v(n + 1, 0);
    for (std::size_t i = 0; i < c_.size() && i <= n; ++i) v[n - i] = c_[i];
    return Poly(field_, std::move(v));
}

Poly Poly::derivative() const {
    if (c_.size() <= 1) return Poly(field_);
    std::vector<Elem> v(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) v[i - 1] = field_->mul(c_[i], field_->from_int(static_cast<std::int64_t>(i)));
    return Poly(field_, std::move(v));
}

Poly Poly::pow(std::uint64_t e) const {
    Poly r = constant(field_, 1), b = *this;
    while (e) {
        if (e & 1) r = r * b;
        e >>= 1;
        if (e) b = b * b;
    }
    return r;
}

Elem Poly::eval(Elem x) const {
    Elem acc = 0;
    for (std::size_t i = c_.size(); i-- > 0;) acc = field_->add(field_->mul(acc, x), c_[i]);
    return acc;
}

Poly Poly::compose(const Poly& inner) const {
    Poly acc(field_);
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * inner + constant(field_, c_[i]);
    return acc;
}

Poly Poly::taylor_shift(Elem c) const {
    if (c == 0 || c_.size() <= 1) return *this;
    std::vector<Elem> v = c_;
    std::size_t n = v.size();
    for (std::size_t i = 0; i + 1 < n; ++i)
        for (std::size_t j = n - 1; j-- > i;) v[j] = field_->add(v[j], field_->mul(c, v[j + 1]));
    return Poly(field_, std::move(v));
}

Poly Poly::frobenius_coeffs() const {
    Poly r = *this;
    for (auto& x : r.c_) x = field_->frobenius(x);
    return r;
}

Poly Poly::lifted(const FieldRef& ext) const {
    if (!field_ || ext.get() == field_.get()) return Poly(ext, c_);
    std::vector<Elem> v(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) v[i] = ext->lift_from(*field_, c_[i]);
    return Poly(ext, std::move(v));
}

bool Poly::descend(const FieldRef& to, Poly& out) const {
    std::vector<Elem> v(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) {
        auto d = field_->descend_to(*to, c_[i]);
        if (!d) return false;
        v[i] = *d;
    }
    out = Poly(to, std::move(v));
    return true;
}

std::string Poly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = c_.size(); i-- > 0;) {
        if (!c_[i]) continue;
        if (!first) os << " + ";
        first = false;
        std::string cs = field_->to_string(c_[i]);
        if (i == 0) {
            os << cs;
            continue;
        }
        if (c_[i] != 1) os << cs << "*";
        os << var;
        if (i > 1) os << "^" << i;
    }
    return os.str();
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) fail(ErrorKind::ZeroDenominator, "polynomial division by zero");
    FieldRef f = b.field();
    if (a.degree() < b.degree()) return {Poly(f), a.field() ? a : Poly(f)};
    check_same(a, b);
    const GaloisField& F = *f;
    std::vector<Elem> r = a.coeffs();
    const auto& bc = b.coeffs();
    std::size_t db = bc.size() - 1;
    std::vector<Elem> q(r.size() - db, 0);
    Elem inv_lead = F.inv(bc.back());
    for (std::size_t i = r.size(); i-- > db;) {
        if (!r[i]) continue;
        Elem c = F.mul(r[i], inv_lead);
        q[i - db] = c;
        for (std::size_t j = 0; j <= db; ++j) r[i - db + j] = F.sub(r[i - db + j], F.mul(c, bc[j]));
    }
    r.resize(db);
    return {Poly(f, std::move(q)), Poly(f, std::move(r))};
}

Poly operator/(const Poly& a, const Poly& b) { return divmod(a, b).first; }
Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).second; }

Poly gcd(const Poly& a, const Poly& b) {
    Poly x = a, y = b;
    while (!y.is_zero()) {
        Poly r = x % y;
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

void xgcd(const Poly& a, const Poly& b, Poly& g, Poly& s, Poly& t) {
    FieldRef f = a.field() ? a.field() : b.field();
    Poly r0 = a, r1 = b;
    Poly s0 = Poly::constant(f, 1), s1(f), t0(f), t1 = Poly::constant(f, 1);
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        Poly s2 = s0 - q * s1, t2 = t0 - q * t1;
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
    Elem li = f->inv(r0.lead());
    g = r0.scaled(li);
    s = s0.scaled(li);
    t = t0.scaled(li);
}

Poly mulmod(const Poly& a, const Poly& b, const Poly& mod) { return (a * b) % mod; }

Poly powmod(const Poly& base, std::uint64_t e, const Poly& mod) {
    Poly r = Poly::constant(mod.field(), 1) % mod, b = base % mod;
    while (e) {
        if (e & 1) r = mulmod(r, b, mod);
        e >>= 1;
        if (e) b = mulmod(b, b, mod);
    }
    return r;
}

int multiplicity(const Poly& a, const Poly& pi) {
    if (a.is_zero()) fail(ErrorKind::ZeroInput, "multiplicity in the zero polynomial");
    int m = 0;
    Poly x = a;
    while (true) {
        auto [q, r] = divmod(x, pi);
        if (!r.is_zero()) return m;
        ++m;
        x = std::move(q);
    }
}

namespace {

// q-power map on a polynomial whose exponents are all multiples of p: returns
// the p-th root polynomial
Poly pth_root_poly(const Poly& f) {
    const GaloisField& F = f.F();
    std::uint32_t p = F.characteristic();
    std::vector<Elem> v(f.degree() / p + 1, 0);
    for (int i = 0; i <= f.degree(); i += static_cast<int>(p)) v[i / p] = F.pth_root(f[i]);
    return Poly(f.field(), std::move(v));
}

// x^(q^k) mod f via repeated q-th powering
Poly frob_power(const Poly& xq, const Poly& prev, const Poly& f) {
    // prev = x^(q^i) mod f; return prev composed with x^q, i.e. x^(q^(i+1))
    Poly acc(f.field());
    for (int i = prev.degree(); i >= 0; --i) acc = mulmod(acc, xq, f) + Poly::constant(f.field(), prev[i]);
    return acc;
}

std::vector<std::pair<Poly, int>> distinct_degree(Poly f) {
    // f monic squarefree
    std::vector<std::pair<Poly, int>> out;
    FieldRef fld = f.field();
    std::uint64_t q = fld->order();
    Poly x = Poly::x(fld);
    Poly xq = powmod(x, q, f);
    Poly h = xq;
    for (int d = 1; f.degree() >= 2 * d; ++d) {
        Poly g = gcd(f, h - x);
        if (!g.is_one()) {
            out.push_back({g, d});
            f = f / g;
            h = h % f;
            xq = xq % f;
        }
        if (f.degree() < 2 * (d + 1)) break;
        h = frob_power(xq, h, f);
    }
    if (f.degree() > 0) out.push_back({f, f.degree()});
    return out;
}

Poly random_poly(const FieldRef& fld, int deg, std::mt19937_64& rng) {
    std::vector<Elem> v(deg + 1);
    for (auto& c : v) c = fld->random(rng);
    return Poly(fld, std::move(v));
}

void equal_degree(const Poly& f, int d, std::mt19937_64& rng, std::vector<Poly>& out) {
    int n = f.degree();
    if (n == d) {
        out.push_back(f);
        return;
    }
    FieldRef fld = f.field();
    const GaloisField& F = *fld;
    std::uint64_t q = F.order();
    while (true) {
        Poly a = random_poly(fld, n - 1, rng);
        if (a.degree() < 1) continue;
        Poly b;
        if (F.characteristic() == 2) {
            // trace map a + a^2 + ... + a^(2^(k d - 1))
            unsigned m = F.degree() * static_cast<unsigned>(d);
            Poly t = a % f, acc = t;
            for (unsigned i = 1; i < m; ++i) {
                t = mulmod(t, t, f);
                acc += t;
            }
            b = acc;
        } else {
            // (q^d - 1)/2 may overflow; exponentiate in stages
            // a^((q^d-1)/2) = prod_{i<d} (a^((q-1)/2))^(q^i)
            Poly base = powmod(a, (q - 1) / 2, f);
            Poly acc = base;
            Poly cur = base;
            for (int i = 1; i < d; ++i) {
                cur = powmod(cur, q, f);
                acc = mulmod(acc, cur, f);
            }
            b = acc - Poly::constant(fld, 1);
        }
        Poly g = gcd(f, b);
        if (g.degree() > 0 && g.degree() < n) {
            equal_degree(g, d, rng, out);
            equal_degree(f / g, d, rng, out);
            return;
        }
    }
}

}  // namespace

std::vector<PolyFactor> squarefree_decomposition(const Poly& f0) {
    if (f0.is_zero()) fail(ErrorKind::ZeroInput, "squarefree decomposition of zero");
    std::vector<PolyFactor> out;
    Poly f = f0.monic();
    if (f.degree() <= 0) return out;
    std::uint32_t p = f.F().characteristic();
    Poly fd = f.derivative();
    if (fd.is_zero()) {
        for (auto& [g, m] : squarefree_decomposition(pth_root_poly(f))) out.push_back({g, m * static_cast<int>(p)});
        return out;
    }
    Poly c = gcd(f, fd);
    Poly w = f / c;
    int i = 1;
    while (!w.is_one()) {
        Poly y = gcd(w, c);
        Poly z = w / y;
        if (!z.is_one()) out.push_back({z, i});
        ++i;
        w = y;
        c = c / y;
    }
    if (!c.is_one()) {
        for (auto& [g, m] : squarefree_decomposition(pth_root_poly(c))) out.push_back({g, m * static_cast<int>(p)});
    }
    // merge duplicate multiplicities produced by the p-th root branch
    std::sort(out.begin(), out.end(), [](const PolyFactor& a, const PolyFactor& b) { return a.multiplicity < b.multiplicity; });
    std::vector<PolyFactor> merged;
    for (auto& e : out) {
        if (!merged.empty() && merged.back().multiplicity == e.multiplicity)
            merged.back().factor = merged.back().factor * e.factor;
        else
            merged.push_back(e);
    }
    return merged;
}

std::vector<PolyFactor> factor_univariate(const Poly& f) {
    if (f.is_zero()) fail(ErrorKind::ZeroInput, "factorization of zero");
    std::vector<PolyFactor> out;
    std::mt19937_64 rng(0x5eedf00dULL + f.degree());
    for (auto& [sf, m] : squarefree_decomposition(f)) {
        for (auto& [g, d] : distinct_degree(sf)) {
            std::vector<Poly> parts;
            equal_degree(g, d, rng, parts);
            for (auto& pp : parts) out.push_back({pp.monic(), m});
        }
    }
    std::sort(out.begin(), out.end(), [](const PolyFactor& a, const PolyFactor& b) {
        if (a.factor != b.factor) return a.factor < b.factor;
        return a.multiplicity < b.multiplicity;
    });
    return out;
}

bool is_irreducible(const Poly& f) {
    if (f.degree() < 1) return false;
    if (f.degree() == 1) return true;
    Poly g = f.monic();
    if (!gcd(g, g.derivative()).is_one()) return false;
    auto dd = distinct_degree(g);
    return dd.size() == 1 && dd[0].second == g.degree();
}

std::vector<Elem> roots(const Poly& f) {
    std::vector<Elem> out;
    if (f.degree() < 1) return out;
    const GaloisField& F = f.F();
    if (F.order() <= 64 || f.degree() >= static_cast<int>(F.order())) {
        for (Elem x = 0; x < F.order(); ++x)
            if (f.eval(x) == 0) out.push_back(x);
        return out;
    }
    for (auto& [g, m] : factor_univariate(f))
        if (g.degree() == 1) out.push_back(F.neg(g[0]));
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace ffdyn
