#include "ffdyn/berk.hpp"

#include <algorithm>
#include <numeric>

#include "ffdyn/error.hpp"

namespace ffdyn {

Rational LogVal::value() const {
    if (kind_ != 0) fail(ErrorKind::InvalidArgument, "infinite log value");
    return v_;
}

bool operator<(const LogVal& a, const LogVal& b) {
    if (a.kind_ != b.kind_) return a.kind_ < b.kind_;
    return a.kind_ == 0 && a.v_ < b.v_;
}

LogVal operator+(const LogVal& a, const LogVal& b) {
    if (a.kind_ * b.kind_ < 0) fail(ErrorKind::InvalidArgument, "+inf + -inf");
    if (a.kind_ != 0) return a;
    if (b.kind_ != 0) return b;
    return LogVal(a.v_ + b.v_);
}

LogVal LogVal::operator-() const {
    LogVal r = *this;
    r.kind_ = -kind_;
    r.v_ = -v_;
    return r;
}

LogVal operator-(const LogVal& a, const LogVal& b) { return a + (-b); }

std::string LogVal::to_string() const {
    if (kind_ < 0) return "-inf";
    if (kind_ > 0) return "+inf";
    if (v_.denominator() == 1) return std::to_string(v_.numerator());
    return std::to_string(v_.numerator()) + "/" + std::to_string(v_.denominator());
}

namespace {

LaurentSeries as_series(const Center& c, int ram, int prec) {
    if (const auto* s = std::get_if<LaurentSeries>(&c)) return *s;
    return LaurentSeries::from_ratfunc(std::get<RatFunc>(c), ram, prec);
}

}  // namespace

LogVal log_abs_diff(const Center& a, const Center& b) {
    const auto* ra = std::get_if<RatFunc>(&a);
    const auto* rb = std::get_if<RatFunc>(&b);
    if (ra && rb) {
        RatFunc d = *ra - *rb;
        if (d.is_zero()) return LogVal::neg_inf();
        return LogVal(Rational(-ord_inf(d)));
    }
    int ram = 1, prec = LaurentSeries::kExact;
    for (const Center* c : {&a, &b})
        if (const auto* s = std::get_if<LaurentSeries>(c)) {
            ram = std::lcm(ram, s->ram());
            prec = std::min(prec, s->is_exact() ? prec : s->prec() * (ram / s->ram()));
        }
    if (prec >= LaurentSeries::kExact) prec = 64 * ram;
    LaurentSeries x = as_series(a, ram, prec), y = as_series(b, ram, prec);
    unify(x, y);
    LaurentSeries d = x - y;
    if (d.is_zero()) {
        if (d.is_exact()) return LogVal::neg_inf();
        fail(ErrorKind::PrecisionExhausted, "centers agree to the available precision");
    }
    return LogVal(-d.ord());
}

std::string to_string(const Center& c) {
    if (const auto* r = std::get_if<RatFunc>(&c)) return r->to_string();
    return std::get<LaurentSeries>(c).to_string();
}

BerkPoint BerkPoint::disc(Center a, LogVal logdiam) {
    if (logdiam.is_pos_inf()) fail(ErrorKind::InvalidArgument, "finite point with infinite radius");
    return BerkPoint(std::move(a), logdiam);
}

BerkPoint BerkPoint::infinity() { return BerkPoint(); }

const Center& BerkPoint::center() const {
    if (is_infinity()) fail(ErrorKind::InfinityOperand, "infinity has no center");
    return center_;
}

int BerkPoint::type() const { return is_infinity() || logdiam_.is_neg_inf() ? 1 : 2; }

bool operator==(const BerkPoint& a, const BerkPoint& b) {
    if (a.is_infinity() || b.is_infinity()) return a.is_infinity() && b.is_infinity();
    if (a.logdiam_ != b.logdiam_) return false;
    return log_abs_diff(a.center_, b.center_) <= a.logdiam_;
}

std::string BerkPoint::to_string() const {
    if (is_infinity()) return "inf";
    return "zeta(" + ffdyn::to_string(center_) + ", " + logdiam_.to_string() + ")";
}

LogVal diam(const BerkPoint& z) { return z.logdiam(); }

BerkPoint join(const BerkPoint& a, const BerkPoint& b) {
    if (a.is_infinity() || b.is_infinity()) return BerkPoint::infinity();
    LogVal r = max(max(a.logdiam(), b.logdiam()), log_abs_diff(a.center(), b.center()));
    return BerkPoint::disc(a.center(), r);
}

LogVal hsia(const BerkPoint& a, const BerkPoint& b) {
    if (a.is_infinity() || b.is_infinity()) fail(ErrorKind::InfinityOperand, "Hsia kernel at infinity");
    return diam(join(a, b));
}

LogVal cross_ratio_log(const BerkPoint& z1, const BerkPoint& z2, const BerkPoint& z3, const BerkPoint& z4) {
    std::array<const BerkPoint*, 4> z{&z1, &z2, &z3, &z4};
    for (auto* p : z)
        if (p->is_infinity()) fail(ErrorKind::InfinityOperand, "cross-ratio with infinity");
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (*z[i] == *z[j]) fail(ErrorKind::NotDistinct, "cross-ratio needs distinct points");
    return hsia(z1, z4) + hsia(z2, z3) - hsia(z1, z3) - hsia(z2, z4);
}

bool in_open_disc(const BerkPoint& eta, const Center& a, const LogVal& r) {
    if (eta.is_infinity()) return false;
    return eta.logdiam() < r && log_abs_diff(eta.center(), a) < r;
}

namespace {

// First unused element of S with lo < hsia(ref, s) < hi.
int pick(const std::vector<BerkPoint>& S, const BerkPoint& ref, const LogVal& lo, const LogVal& hi,
         const std::vector<int>& used) {
    for (int i = 0; i < static_cast<int>(S.size()); ++i) {
        if (S[i].is_infinity()) continue;
        if (std::find(used.begin(), used.end(), i) != used.end()) continue;
        bool dup = false;
        for (int u : used) dup = dup || S[u] == S[i];
        if (dup) continue;
        LogVal h = hsia(ref, S[i]);
        if (lo < h && h < hi) return i;
    }
    return -1;
}

}  // namespace

QuadrupleSelection select_quadruple(const std::array<BerkPoint, 4>& zeta, const std::vector<BerkPoint>& S) {
    QuadrupleSelection out;
    for (const BerkPoint& z : zeta)
        if (z.is_infinity()) {
            out.reason = "infinity among the base points";
            return out;
        }
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (zeta[i] == zeta[j]) {
                out.reason = "base points not distinct";
                return out;
            }
    for (int i = 1; i < 4; ++i)
        if (zeta[i].type() != zeta[0].type()) {
            out.reason = "base points of different types";
            return out;
        }

    // pairs whose join is not one of the base points
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) {
            BerkPoint w = join(zeta[i], zeta[j]);
            if (std::none_of(zeta.begin(), zeta.end(), [&](const BerkPoint& z) { return z == w; }))
                pairs.push_back({i, j});
        }

    std::vector<int> used;
    std::array<int, 4> idx{};
    if (pairs.empty()) {
        out.case_no = 1;
        // joins stay in the set: concentric discs with distinct radii
        std::array<BerkPoint, 4> c = zeta;
        std::sort(c.begin(), c.end(), [](const BerkPoint& a, const BerkPoint& b) { return a.logdiam() < b.logdiam(); });
        auto take = [&](const BerkPoint& ref, const LogVal& lo, const LogVal& hi) {
            int k = pick(S, ref, lo, hi, used);
            if (k >= 0) used.push_back(k);
            return k;
        };
        LogVal r1 = c[0].logdiam(), r2 = c[1].logdiam(), r3 = c[2].logdiam(), r4 = c[3].logdiam();
        if ((idx[0] = take(c[0], r1, r2)) < 0 || (idx[2] = take(c[1], r2, r3)) < 0 ||
            (idx[1] = take(c[2], r3, r4)) < 0 || (idx[3] = take(c[3], r4, LogVal::pos_inf())) < 0) {
            out.reason = "S has no point in a required annulus";
            return out;
        }
    } else {
        out.case_no = 2;
        bool ok = false;
        for (auto [pi, pj] : pairs) {
            used.clear();
            LogVal R = hsia(zeta[pi], zeta[pj]);
            // points of S strictly closer than R to ref (ref itself included when it is Type I)
            auto take_near = [&](const BerkPoint& ref) {
                int k = pick(S, ref, LogVal::neg_inf(), R, used);
                for (int i = 0; k < 0 && i < static_cast<int>(S.size()); ++i)
                    if (std::find(used.begin(), used.end(), i) == used.end() && S[i] == ref) k = i;
                if (k >= 0) used.push_back(k);
                return k;
            };
            if ((idx[0] = take_near(zeta[pi])) >= 0 && (idx[2] = take_near(zeta[pi])) >= 0 &&
                (idx[1] = take_near(zeta[pj])) >= 0 && (idx[3] = take_near(zeta[pj])) >= 0) {
                ok = true;
                break;
            }
        }
        if (!ok) {
            out.reason = "S lacks two points near each point of a separated pair";
            return out;
        }
    }
    for (int k = 0; k < 4; ++k) out.z[k] = S[idx[k]];
    out.index = idx;
    out.value = cross_ratio_log(out.z[0], out.z[1], out.z[2], out.z[3]);
    if (!(out.value > LogVal(Rational(0)))) {
        out.reason = "selected quadruple failed the positivity check";
        return out;
    }
    out.found = true;
    return out;
}

}  // namespace ffdyn
