#pragma once

#include <array>
#include <string>
#include <variant>
#include <vector>

#include "ffdyn/series.hpp"

namespace ffdyn {

// log_p of an absolute value or radius: a rational, or -inf / +inf.
class LogVal {
public:
    LogVal() = default;
    explicit LogVal(Rational v) : kind_(0), v_(v) {}
    static LogVal neg_inf() { return LogVal(-1); }
    static LogVal pos_inf() { return LogVal(1); }

    bool is_finite() const { return kind_ == 0; }
    bool is_neg_inf() const { return kind_ < 0; }
    bool is_pos_inf() const { return kind_ > 0; }
    // Requires is_finite().
    Rational value() const;

    friend bool operator==(const LogVal& a, const LogVal& b) { return a.kind_ == b.kind_ && (a.kind_ != 0 || a.v_ == b.v_); }
    friend bool operator!=(const LogVal& a, const LogVal& b) { return !(a == b); }
    friend bool operator<(const LogVal& a, const LogVal& b);
    friend bool operator<=(const LogVal& a, const LogVal& b) { return !(b < a); }
    friend bool operator>(const LogVal& a, const LogVal& b) { return b < a; }
    friend bool operator>=(const LogVal& a, const LogVal& b) { return !(a < b); }
    // Sum; +inf + -inf is rejected.
    friend LogVal operator+(const LogVal& a, const LogVal& b);
    friend LogVal operator-(const LogVal& a, const LogVal& b);
    LogVal operator-() const;
    std::string to_string() const;

private:
    explicit LogVal(int kind) : kind_(kind) {}
    int kind_ = -1;
    Rational v_;
};

inline LogVal max(const LogVal& a, const LogVal& b) { return a < b ? b : a; }
inline LogVal min(const LogVal& a, const LogVal& b) { return a < b ? a : b; }

// Center of a disc: an element of K, or the expansion at infinity of an algebraic point.
using Center = std::variant<RatFunc, LaurentSeries>;

// log_p |a - b| (-inf when a = b).
LogVal log_abs_diff(const Center& a, const Center& b);
std::string to_string(const Center& c);

// zeta(a, p^logdiam) on the Berkovich affine line, or the point infinity.
// Finite radii are rational in log scale, so these are Type I and Type II points.
class BerkPoint {
public:
    enum class Kind { Fin, Infty };

    BerkPoint() = default;
    static BerkPoint type1(Center a) { return BerkPoint(std::move(a), LogVal::neg_inf()); }
    static BerkPoint disc(Center a, Rational logdiam) { return BerkPoint(std::move(a), LogVal(logdiam)); }
    static BerkPoint disc(Center a, LogVal logdiam);
    static BerkPoint infinity();

    Kind kind() const { return kind_; }
    bool is_infinity() const { return kind_ == Kind::Infty; }
    // Requires a finite point.
    const Center& center() const;
    // 1 for Type I points (and infinity), 2 otherwise.
    int type() const;
    const LogVal& logdiam() const { return logdiam_; }

    // Same point: both infinity, or equal radius and a center of each in the other's disc.
    friend bool operator==(const BerkPoint& a, const BerkPoint& b);
    friend bool operator!=(const BerkPoint& a, const BerkPoint& b) { return !(a == b); }
    std::string to_string() const;

private:
    BerkPoint(Center a, LogVal d) : kind_(Kind::Fin), center_(std::move(a)), logdiam_(d) {}
    Kind kind_ = Kind::Infty;
    Center center_;
    LogVal logdiam_ = LogVal::pos_inf();
};

LogVal diam(const BerkPoint& z);
BerkPoint join(const BerkPoint& a, const BerkPoint& b);
// log_p of the Hsia kernel: diam(a v b). InfinityOperand for infinity.
LogVal hsia(const BerkPoint& a, const BerkPoint& b);
// log of the cross-ratio (z1, z2; z3, z4). NotDistinct, InfinityOperand.
LogVal cross_ratio_log(const BerkPoint& z1, const BerkPoint& z2, const BerkPoint& z3, const BerkPoint& z4);
// eta lies in the open disc of radius p^r about a.
bool in_open_disc(const BerkPoint& eta, const Center& a, const LogVal& r);

struct QuadrupleSelection {
    bool found = false;
    int case_no = 0;                 // 1: concentric, 2: a join strictly between two of the points
    std::array<int, 4> index{};      // positions in S of z1..z4
    std::array<BerkPoint, 4> z;
    LogVal value;                    // cross_ratio_log(z1, z2, z3, z4) > 0
    std::string reason;              // why the hypotheses are unmet
};

// Picks z1..z4 in S with positive log cross-ratio following the two-case construction
// around four distinct finite points zeta of one type.
QuadrupleSelection select_quadruple(const std::array<BerkPoint, 4>& zeta, const std::vector<BerkPoint>& S);

}  // namespace ffdyn
