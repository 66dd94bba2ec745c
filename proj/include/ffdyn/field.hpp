#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace ffdyn {

class GaloisField;
using FieldRef = std::shared_ptr<const GaloisField>;

// An element of F_q, encoded as the base-p digit string of its polynomial
// representative over F_p (code = sum d_i p^i).
using Elem = std::uint32_t;

// Finite field F_q = F_p[x]/(m(x)).
//
// Fields are immutable and shared. An extension produced by extension()
// remembers the field it was built from and carries a fixed embedding of it,
// so elements can be lifted up and, when they lie in the subfield, brought
// back down.
class GaloisField : public std::enable_shared_from_this<GaloisField> {
public:
    static constexpr std::uint32_t kMaxOrder = 1u << 20;

    static FieldRef prime(std::uint32_t p);
    // modulus: ascending coefficients over F_p including the leading 1.
    static FieldRef create(std::uint32_t p, std::vector<Elem> modulus);
    // Accepts "p=5", "q=5", or "q=25;modulus=1,1,1".
    static FieldRef parse(const std::string& spec);

    std::uint32_t characteristic() const { return p_; }
    unsigned degree() const { return k_; }
    std::uint32_t order() const { return q_; }
    const std::vector<Elem>& modulus() const { return modulus_; }
    std::string spec() const;

    Elem zero() const { return 0; }
    Elem one() const { return 1; }
    Elem from_int(std::int64_t v) const;
    // Class of x in F_p[x]/(m); equals from_int(0) + 1*x.
    Elem generator() const { return k_ == 1 ? 0 : p_; }

    Elem add(Elem a, Elem b) const {
        if (k_ == 1) {
            Elem s = a + b;
            return s >= p_ ? s - p_ : s;
        }
        if (p_ == 2) return a ^ b;
        return add_slow(a, b);
    }
    Elem neg(Elem a) const {
        if (k_ == 1) return a == 0 ? 0 : p_ - a;
        if (p_ == 2) return a;
        return neg_slow(a);
    }
    Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
    Elem mul(Elem a, Elem b) const {
        if (k_ == 1) return static_cast<Elem>((static_cast<std::uint64_t>(a) * b) % p_);
        if (a == 0 || b == 0) return 0;
        std::uint32_t l = log_[a] + log_[b];
        if (l >= q_ - 1) l -= q_ - 1;
        return exp_[l];
    }
    Elem inv(Elem a) const;
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
    Elem pow(Elem a, std::uint64_t e) const;
    // a^p
    Elem frobenius(Elem a) const { return pow(a, p_); }
    // The unique b with b^p = a.
    Elem pth_root(Elem a) const;
    Elem random(std::mt19937_64& rng) const;

    // Builds (or returns the cached) F_{q^d} containing this field.
    FieldRef extension(unsigned d) const;
    // The field this one was built from by extension(), or null.
    const FieldRef& parent() const { return parent_; }
    // Image of a parent-field element.
    Elem embed(Elem parent_elem) const;
    // Preimage in the parent field, if the element lies in it.
    std::optional<Elem> restrict_to_parent(Elem e) const;
    // Lifts an element of `from` (which must be this field or an ancestor).
    Elem lift_from(const GaloisField& from, Elem e) const;
    // Brings an element down to the ancestor `to`, if possible.
    std::optional<Elem> descend_to(const GaloisField& to, Elem e) const;
    bool is_ancestor_or_self(const GaloisField& other) const;

    std::string to_string(Elem a) const;

private:
    GaloisField() = default;
    Elem add_slow(Elem a, Elem b) const;
    Elem neg_slow(Elem a) const;
    Elem mul_slow(Elem a, Elem b) const;
    void build_tables();

    std::uint32_t p_ = 0;
    unsigned k_ = 1;
    std::uint32_t q_ = 0;
    std::vector<Elem> modulus_;
    std::vector<std::uint32_t> log_;
    std::vector<Elem> exp_;
    std::vector<Elem> inv_;

    FieldRef parent_;
    std::vector<Elem> embed_;
    std::vector<std::int64_t> restrict_;

    mutable std::mutex ext_mutex_;
    mutable std::map<unsigned, FieldRef> extensions_;
};

bool same_field(const GaloisField& a, const GaloisField& b);
inline bool same_field(const FieldRef& a, const FieldRef& b) { return same_field(*a, *b); }

// Deterministic primality test for small integers.
bool is_prime(std::uint64_t n);

// Whichever of two fields contains the other (throws FieldMismatch if neither does).
FieldRef larger_field(const FieldRef& a, const FieldRef& b);

}  // namespace ffdyn
