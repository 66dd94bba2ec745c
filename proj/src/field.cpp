#include "ffdyn/field.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "ffdyn/error.hpp"

namespace ffdyn {

namespace {

using Digits = std::vector<std::uint32_t>;

void trim(Digits& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

// Polynomial helpers over F_p used only while constructing fields.
Digits dmod(Digits a, const Digits& m, std::uint32_t p) {
    trim(a);
    const std::size_t dm = m.size() - 1;
    const std::uint64_t inv_lead = [&] {
        std::uint64_t r = 1, b = m.back(), e = p - 2;
        while (e) {
            if (e & 1) r = r * b % p;
            b = b * b % p;
            e >>= 1;
        }
        return r;
    }();
    while (a.size() > dm && !a.empty()) {
        const std::size_t shift = a.size() - 1 - dm;
        const std::uint64_t c = a.back() * inv_lead % p;
        for (std::size_t i = 0; i <= dm; ++i) {
            a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + (p - c) * m[i]) % p);
        }
        trim(a);
    }
    return a;
}

Digits dmulmod(const Digits& a, const Digits& b, const Digits& m, std::uint32_t p) {
    if (a.empty() || b.empty()) return {};
    Digits r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = static_cast<std::uint32_t>((r[i + j] + std::uint64_t(a[i]) * b[j]) % p);
    return dmod(std::move(r), m, p);
}

Digits dpowmod(Digits base, std::uint64_t e, const Digits& m, std::uint32_t p) {
    Digits r{1};
    base = dmod(std::move(base), m, p);
    while (e) {
        if (e & 1) r = dmulmod(r, base, m, p);
        e >>= 1;
        if (e) base = dmulmod(base, base, m, p);
    }
    return r;
}

Digits dgcd(Digits a, Digits b, std::uint32_t p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        a = dmod(std::move(a), b, p);
        std::swap(a, b);
    }
    return a;
}

Digits dsub(Digits a, const Digits& b, std::uint32_t p) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i]) % p;
    trim(a);
    return a;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

// Rabin's irreducibility test.
bool digits_irreducible(const Digits& m, std::uint32_t p) {
    const std::size_t k = m.size() - 1;
    if (k == 0) return false;
    if (k == 1) return true;
    auto frob_iter = [&](std::size_t times) {
        Digits x{0, 1};
        for (std::size_t i = 0; i < times; ++i) x = dpowmod(x, p, m, p);
        return x;
    };
    if (dsub(frob_iter(k), Digits{0, 1}, p).size() != 0) return false;
    for (auto r : prime_factors(k)) {
        Digits h = dsub(frob_iter(k / r), Digits{0, 1}, p);
        if (dgcd(m, h, p).size() != 1) return false;
    }
    return true;
}

}  // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

Elem GaloisField::add_slow(Elem a, Elem b) const {
    Elem r = 0, w = 1;
    for (unsigned i = 0; i < k_; ++i) {
        Elem da = a % p_, db = b % p_;
        a /= p_;
        b /= p_;
        Elem s = da + db;
        if (s >= p_) s -= p_;
        r += s * w;
        w *= p_;
    }
    return r;
}

Elem GaloisField::neg_slow(Elem a) const {
    Elem r = 0, w = 1;
    for (unsigned i = 0; i < k_; ++i) {
        Elem d = a % p_;
        a /= p_;
        r += (d == 0 ? 0 : p_ - d) * w;
        w *= p_;
    }
    return r;
}

Elem GaloisField::mul_slow(Elem a, Elem b) const {
    Digits da, db;
    for (unsigned i = 0; i < k_; ++i) {
        da.push_back(a % p_);
        db.push_back(b % p_);
        a /= p_;
        b /= p_;
    }
    trim(da);
    trim(db);
    Digits r = dmulmod(da, db, modulus_, p_);
    Elem out = 0, w = 1;
    for (auto d : r) {
        out += d * w;
        w *= p_;
    }
    return out;
}

void GaloisField::build_tables() {
    inv_.assign(q_, 0);
    if (k_ == 1) {
        for (Elem a = 1; a < q_; ++a) {
            if (inv_[a]) continue;
            std::uint64_t r = 1, b = a, e = p_ - 2;
            while (e) {
                if (e & 1) r = r * b % p_;
                b = b * b % p_;
                e >>= 1;
            }
            inv_[a] = static_cast<Elem>(r);
            inv_[r] = a;
        }
        return;
    }
    const auto factors = prime_factors(q_ - 1);
    exp_.assign(q_ - 1, 0);
    log_.assign(q_, 0);
    for (Elem g = 2; g < q_; ++g) {
        // order test via powers with slow multiplication
        auto slow_pow = [&](Elem x, std::uint64_t e) {
            Elem r = 1;
            while (e) {
                if (e & 1) r = mul_slow(r, x);
                x = mul_slow(x, x);
                e >>= 1;
            }
            return r;
        };
        bool primitive = true;
        for (auto r : factors) {
            if (slow_pow(g, (q_ - 1) / r) == 1) {
                primitive = false;
                break;
            }
        }
        if (!primitive) continue;
        Elem x = 1;
        for (std::uint32_t i = 0; i < q_ - 1; ++i) {
            exp_[i] = x;
            log_[x] = i;
            x = mul_slow(x, g);
        }
        break;
    }
    for (Elem a = 1; a < q_; ++a) inv_[a] = exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

FieldRef GaloisField::prime(std::uint32_t p) { return create(p, {0, 1}); }

FieldRef GaloisField::create(std::uint32_t p, std::vector<Elem> modulus) {
    if (!is_prime(p)) fail(ErrorKind::InvalidField, "characteristic " + std::to_string(p) + " is not prime");
    for (auto& c : modulus) {
        if (c >= p) fail(ErrorKind::InvalidField, "modulus coefficient out of range");
    }
    trim(modulus);
    if (modulus.size() < 2 || modulus.back() != 1)
        fail(ErrorKind::InvalidField, "modulus must be monic of degree >= 1");
    if (!digits_irreducible(modulus, p)) fail(ErrorKind::NotIrreducible, "modulus is reducible over F_p");
    std::uint64_t q = 1;
    for (std::size_t i = 1; i < modulus.size(); ++i) {
        q *= p;
        if (q > kMaxOrder) fail(ErrorKind::InvalidField, "field too large (limit 2^20 elements)");
    }
    auto f = std::shared_ptr<GaloisField>(new GaloisField());
    f->p_ = p;
    f->k_ = static_cast<unsigned>(modulus.size() - 1);
    f->q_ = static_cast<std::uint32_t>(q);
    if (f->k_ == 1) modulus = {0, 1};
    f->modulus_ = std::move(modulus);
    f->build_tables();
    return f;
}

FieldRef GaloisField::parse(const std::string& spec) {
    std::string s;
    for (char c : spec)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    auto bad = [&]() -> FieldRef { fail(ErrorKind::InvalidField, "cannot parse field spec '" + spec + "'"); };
    std::uint64_t q = 0;
    std::vector<Elem> modulus;
    std::size_t pos = 0;
    while (pos < s.size()) {
        std::size_t end = s.find(';', pos);
        if (end == std::string::npos) end = s.size();
        std::string item = s.substr(pos, end - pos);
        pos = end + 1;
        auto eq = item.find('=');
        if (eq == std::string::npos) return bad();
        std::string key = item.substr(0, eq), val = item.substr(eq + 1);
        try {
            if (key == "p" || key == "q") {
                q = std::stoull(val);
            } else if (key == "modulus") {
                std::stringstream ss(val);
                std::string tok;
                while (std::getline(ss, tok, ',')) modulus.push_back(static_cast<Elem>(std::stoul(tok)));
            } else {
                return bad();
            }
        } catch (const std::logic_error&) {
            return bad();
        }
    }
    if (q < 2) return bad();
    std::uint64_t p = 0;
    for (std::uint64_t d = 2; d <= q; ++d) {
        if (q % d == 0) {
            p = d;
            break;
        }
    }
    unsigned k = 0;
    for (std::uint64_t r = q; r > 1; r /= p) {
        if (r % p != 0) return bad();
        ++k;
    }
    if (k == 1) {
        if (!modulus.empty() && modulus.size() != 2) return bad();
        return prime(static_cast<std::uint32_t>(p));
    }
    if (modulus.size() != k + 1) fail(ErrorKind::InvalidField, "q=" + std::to_string(q) + " needs a modulus of degree " + std::to_string(k));
    return create(static_cast<std::uint32_t>(p), modulus);
}

std::string GaloisField::spec() const {
    if (k_ == 1) return "p=" + std::to_string(p_);
    std::string s = "q=" + std::to_string(q_) + ";modulus=";
    for (std::size_t i = 0; i < modulus_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(modulus_[i]);
    }
    return s;
}

Elem GaloisField::from_int(std::int64_t v) const {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    if (r < 0) r += p_;
    return static_cast<Elem>(r);
}

Elem GaloisField::inv(Elem a) const {
    if (a == 0) fail(ErrorKind::ZeroDenominator, "inverse of zero in F_q");
    return inv_[a];
}

Elem GaloisField::pow(Elem a, std::uint64_t e) const {
    Elem r = 1;
    while (e) {
        if (e & 1) r = mul(r, a);
        e >>= 1;
        if (e) a = mul(a, a);
    }
    return r;
}

Elem GaloisField::pth_root(Elem a) const { return pow(a, q_ / p_); }

Elem GaloisField::random(std::mt19937_64& rng) const {
    return static_cast<Elem>(rng() % q_);
}

FieldRef GaloisField::extension(unsigned d) const {
    if (d == 0) fail(ErrorKind::InvalidArgument, "extension degree must be positive");
    if (d == 1) return shared_from_this();
    std::lock_guard<std::mutex> lock(ext_mutex_);
    if (auto it = extensions_.find(d); it != extensions_.end()) return it->second;

    const unsigned big_k = k_ * d;
    std::uint64_t q = 1;
    for (unsigned i = 0; i < big_k; ++i) {
        q *= p_;
        if (q > kMaxOrder) fail(ErrorKind::InvalidField, "constant field extension exceeds 2^20 elements");
    }
    // first irreducible monic polynomial of degree big_k in lexicographic order
    Digits m(big_k + 1, 0);
    m[big_k] = 1;
    for (std::uint64_t code = 0;; ++code) {
        std::uint64_t c = code;
        for (unsigned i = 0; i < big_k; ++i) {
            m[i] = static_cast<std::uint32_t>(c % p_);
            c /= p_;
        }
        if (m[0] != 0 && digits_irreducible(m, p_)) break;
    }
    auto ext = std::shared_ptr<GaloisField>(new GaloisField());
    ext->p_ = p_;
    ext->k_ = big_k;
    ext->q_ = static_cast<std::uint32_t>(q);
    ext->modulus_ = m;
    ext->build_tables();
    ext->parent_ = shared_from_this();

    // image of our generator: smallest root of our modulus in the extension
    Elem rho = 0;
    if (k_ == 1) {
        rho = 0;
    } else {
        bool found = false;
        for (Elem x = 0; x < ext->q_ && !found; ++x) {
            Elem acc = 0;
            for (std::size_t i = modulus_.size(); i-- > 0;) acc = ext->add(ext->mul(acc, x), modulus_[i]);
            if (acc == 0) {
                rho = x;
                found = true;
            }
        }
        if (!found) fail(ErrorKind::InvalidField, "internal: no embedding of base field found");
    }
    ext->embed_.assign(q_, 0);
    ext->restrict_.assign(ext->q_, -1);
    for (Elem a = 0; a < q_; ++a) {
        Elem img;
        if (k_ == 1) {
            img = a;
        } else {
            img = 0;
            Elem w = 1, rest = a;
            for (unsigned i = 0; i < k_; ++i) {
                img = ext->add(img, ext->mul(rest % p_, w));
                rest /= p_;
                w = ext->mul(w, rho);
            }
        }
        ext->embed_[a] = img;
        ext->restrict_[img] = a;
    }
    FieldRef out = ext;
    extensions_[d] = out;
    return out;
}

Elem GaloisField::embed(Elem parent_elem) const {
    if (!parent_) return parent_elem;
    return embed_[parent_elem];
}

std::optional<Elem> GaloisField::restrict_to_parent(Elem e) const {
    if (!parent_) return e;
    auto r = restrict_[e];
    if (r < 0) return std::nullopt;
    return static_cast<Elem>(r);
}

bool same_field(const GaloisField& a, const GaloisField& b) {
    if (&a == &b) return true;
    if (a.characteristic() != b.characteristic() || a.modulus() != b.modulus()) return false;
    if (!a.parent() && !b.parent()) return true;
    if (!a.parent() || !b.parent()) return false;
    return same_field(*a.parent(), *b.parent());
}

bool GaloisField::is_ancestor_or_self(const GaloisField& other) const {
    for (const GaloisField* f = this; f; f = f->parent_.get())
        if (same_field(*f, other)) return true;
    return false;
}

Elem GaloisField::lift_from(const GaloisField& from, Elem e) const {
    if (same_field(*this, from)) return e;
    if (!parent_) fail(ErrorKind::FieldMismatch, "cannot lift: unrelated fields");
    return embed(parent_->lift_from(from, e));
}

std::optional<Elem> GaloisField::descend_to(const GaloisField& to, Elem e) const {
    if (same_field(*this, to)) return e;
    if (!parent_) fail(ErrorKind::FieldMismatch, "cannot descend: unrelated fields");
    auto r = restrict_to_parent(e);
    if (!r) return std::nullopt;
    return parent_->descend_to(to, *r);
}

FieldRef larger_field(const FieldRef& a, const FieldRef& b) {
    if (a->is_ancestor_or_self(*b)) return a;
    if (b->is_ancestor_or_self(*a)) return b;
    fail(ErrorKind::FieldMismatch, "fields " + a->spec() + " and " + b->spec() + " are unrelated");
}

std::string GaloisField::to_string(Elem a) const {
    if (k_ == 1) return std::to_string(a);
    // polynomial in the generator g
    std::string s;
    std::vector<Elem> d;
    for (unsigned i = 0; i < k_; ++i) {
        d.push_back(a % p_);
        a /= p_;
    }
    for (std::size_t i = d.size(); i-- > 0;) {
        if (d[i] == 0) continue;
        if (!s.empty()) s += "+";
        if (i == 0) {
            s += std::to_string(d[i]);
        } else {
            if (d[i] != 1) s += std::to_string(d[i]) + "*";
            s += "g";
            if (i > 1) s += "^" + std::to_string(i);
        }
    }
    if (s.empty()) return "0";
    return "(" + s + ")";
}

}  // namespace ffdyn
