#pragma once

#include <array>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "ffdyn/bipoly.hpp"
#include "ffdyn/laurent.hpp"

namespace ffdyn {

struct BiFactor {
    BiPoly factor;  // irreducible in F_q[t, z]; primitive in z, or a monic polynomial in t alone
    int multiplicity;
};

// Complete factorization in F_q[t, z] (pure-t factors included, unit dropped).
std::vector<BiFactor> factor_bipoly(const BiPoly& B);

struct ZFactor {
    ZPoly factor;  // monic in z, irreducible over K
    int multiplicity;
};

// Factorization over K = F_q(t): monic irreducible factors with multiplicities.
// Constant input gives an empty list.
std::vector<ZFactor> factor_bivariate(const ZPoly& F);
bool is_irreducible(const ZPoly& F);

class AlgElem;
using AlgRef = std::shared_ptr<const AlgElem>;

// A root of a monic irreducible G over K, i.e. the field K[z]/(G).
class AlgElem {
public:
    // Certifies irreducibility (NotIrreducible otherwise) and makes G monic.
    static AlgRef create(const ZPoly& G, Rational embedding_prec = Rational(32));
    // Quotient ring K[z]/(G) without the irreducibility check (G separable suffices
    // for the derivation; inverses may then fail with NotInvertible).
    static AlgRef create_unchecked(const ZPoly& G, Rational embedding_prec = Rational(32));

    const ZPoly& minpoly() const { return G_; }
    int degree() const { return G_.degree(); }
    bool separable() const { return separable_; }
    const FieldRef& field() const { return G_.field(); }
    // Embeddings at infinity, computed once on first use.
    const std::vector<PuiseuxRoot>& embeddings() const;

private:
    AlgElem() = default;
    ZPoly G_;
    bool separable_ = false;
    Rational prec_;
    mutable std::once_flag once_;
    mutable std::vector<PuiseuxRoot> emb_;
};

// Element of K[z]/(G) in the basis 1, alpha, ..., alpha^(d-1).
class ExtElem {
public:
    ExtElem() = default;
    ExtElem(AlgRef parent, std::vector<RatFunc> coords);
    static ExtElem from_base(AlgRef parent, const RatFunc& c);
    static ExtElem generator(AlgRef parent);
    static ExtElem from_zpoly(AlgRef parent, const ZPoly& f);

    const AlgRef& parent() const { return parent_; }
    const std::vector<RatFunc>& coords() const { return c_; }
    ZPoly to_zpoly() const;
    bool is_zero() const;

    friend ExtElem operator+(const ExtElem& a, const ExtElem& b);
    friend ExtElem operator-(const ExtElem& a, const ExtElem& b);
    friend ExtElem operator*(const ExtElem& a, const ExtElem& b);
    friend ExtElem operator/(const ExtElem& a, const ExtElem& b) { return a * b.inv(); }
    ExtElem operator-() const;
    friend bool operator==(const ExtElem& a, const ExtElem& b);
    friend bool operator!=(const ExtElem& a, const ExtElem& b) { return !(a == b); }

    ExtElem inv() const;
    ExtElem pow(std::uint64_t e) const;
    ExtElem scaled(const RatFunc& c) const;
    std::string to_string() const;

private:
    void check(const ExtElem& o) const;
    AlgRef parent_;
    std::vector<RatFunc> c_;
};

// The derivation d/dt extended to K(alpha): alpha' = -G_t(alpha)/G_z(alpha).
ExtElem derivative_of_generator(const AlgRef& a);

struct RiccatiResult {
    bool yes = false;
    RatFunc a, b, c;   // alpha' = a alpha^2 + b alpha + c
    bool evidence = false;  // false when deg <= 3, where a solution always exists
};
RiccatiResult riccati_test(const ZPoly& G);

struct FrobeniusResult {
    bool yes = false;
    int n = 0;
    RatFunc a, b, c, d;  // alpha (c alpha^(p^n) + d) = a alpha^(p^n) + b, ad - bc != 0
};
FrobeniusResult frobenius_test(const ZPoly& G, int nmax);

enum class Constancy { Constant, NonConstant, Undetermined };
const char* to_string(Constancy c);

struct ConstancyVerdict {
    Constancy status = Constancy::Undetermined;
    Rational precision;              // t-adic precision of the cross-ratio series
    Rational threshold;              // precision beyond which a constant series is certified constant
    std::optional<ZPoly> certificate;
    std::optional<LaurentSeries> value;
    std::string note;
};

// ((a1-a4)(a2-a3)) / ((a1-a3)(a2-a4))
LaurentSeries cross_ratio_series(const LaurentSeries& a1, const LaurentSeries& a2, const LaurentSeries& a3,
                                 const LaurentSeries& a4);

// Cross-ratio of the roots with the given labels (indices into newton_puiseux_roots(F, prec)).
ConstancyVerdict cross_ratio_exact(const ZPoly& F, std::array<int, 4> idx, Rational prec, const PuiseuxOptions& opt = {});
// Same, with the root list already computed.
ConstancyVerdict cross_ratio_of(const ZPoly& F, const std::vector<PuiseuxRoot>& roots, std::array<int, 4> idx);

// Precision (in t-units) beyond which a cross-ratio of roots of F that looks constant
// must be constant: any nonconstant value differs from a constant at order at most this.
Rational constancy_threshold(const ZPoly& F);

}  // namespace ffdyn
