#include <cctype>

#include "ffdyn/cli.hpp"
#include "ffdyn/error.hpp"

namespace ffdyn {

namespace {

constexpr long kMaxExponent = 4096;

struct Frac {
    ZPoly n, d;
};

class Parser {
public:
    Parser(const std::string& s, FieldRef F, bool allow_z) : s_(s), F_(std::move(F)), allow_z_(allow_z) {}

    Frac run() {
        Frac v = expr();
        skip();
        if (pos_ < s_.size()) throw SyntaxError(pos_, std::string("unexpected '") + s_[pos_] + "'");
        return v;
    }

private:
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool eat(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    char peek() {
        skip();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    Frac constant(const RatFunc& c) { return {ZPoly::constant(c), ZPoly::constant(RatFunc::from_int(F_, 1))}; }

    static Frac reduce(ZPoly n, ZPoly d) {
        if (n.is_zero()) return {n, ZPoly::constant(RatFunc::from_int(d.field(), 1))};
        ZPoly h = gcd(n, d);
        if (h.degree() > 0) {
            n = n / h;
            d = d / h;
        }
        RatFunc l = d.lead().inv();
        return {n.scaled(l), d.scaled(l)};
    }

    Frac expr() {
        Frac a = term();
        for (;;) {
            char c = peek();
            if (c != '+' && c != '-') return a;
            ++pos_;
            Frac b = term();
            ZPoly x = a.n * b.d, y = b.n * a.d;
            a = reduce(c == '+' ? x + y : x - y, a.d * b.d);
        }
    }

    Frac term() {
        Frac a = unary();
        for (;;) {
            char c = peek();
            if (c != '*' && c != '/') return a;
            std::size_t at = pos_++;
            Frac b = unary();
            if (c == '*') {
                a = reduce(a.n * b.n, a.d * b.d);
            } else {
                if (b.n.is_zero()) fail(ErrorKind::IdenticallyUndefined, "division by zero at offset " + std::to_string(at));
                a = reduce(a.n * b.d, a.d * b.n);
            }
        }
    }

    Frac unary() {
        if (eat('-')) {
            Frac a = unary();
            return {-a.n, a.d};
        }
        return power();
    }

    Frac power() {
        Frac a = atom();
        while (eat('^')) {
            std::size_t at = pos_;
            long k = exponent();
            if (k < 0) {
                if (a.n.is_zero()) fail(ErrorKind::IdenticallyUndefined, "zero to a negative power at offset " + std::to_string(at));
                a = reduce(a.d, a.n);
                k = -k;
            }
            a = {a.n.pow(static_cast<unsigned>(k)), a.d.pow(static_cast<unsigned>(k))};
        }
        return a;
    }

    long exponent() {
        skip();
        bool paren = eat('(');
        bool neg = eat('-');
        skip();
        std::size_t start = pos_;
        long k = 0;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            k = k * 10 + (s_[pos_] - '0');
            if (k > kMaxExponent) throw SyntaxError(start, "exponent too large");
            ++pos_;
        }
        if (pos_ == start) throw SyntaxError(pos_, "expected integer exponent");
        if (paren && !eat(')')) throw SyntaxError(pos_, "expected ')'");
        return neg ? -k : k;
    }

    Frac atom() {
        skip();
        if (pos_ >= s_.size()) throw SyntaxError(pos_, "unexpected end of input");
        char c = s_[pos_];
        std::size_t at = pos_;
        if (c == '(') {
            ++pos_;
            Frac v = expr();
            if (!eat(')')) throw SyntaxError(pos_, "expected ')'");
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::uint64_t v = 0, p = F_->characteristic();
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
                v = (v * 10 + static_cast<std::uint64_t>(s_[pos_++] - '0')) % p;
            return constant(RatFunc::from_int(F_, static_cast<std::int64_t>(v)));
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            std::string id = s_.substr(at, pos_ - at);
            if (id == "t") return constant(RatFunc::t(F_));
            if (id == "g" && F_->degree() > 1) return constant(RatFunc::constant(F_, F_->generator()));
            if (id == "z" && allow_z_) {
                ZPoly one = ZPoly::constant(RatFunc::from_int(F_, 1));
                return {ZPoly::z(F_), one};
            }
            throw SyntaxError(at, "unknown symbol '" + id + "'");
        }
        throw SyntaxError(at, std::string("unexpected '") + c + "'");
    }

    const std::string& s_;
    FieldRef F_;
    bool allow_z_;
    std::size_t pos_ = 0;
};

}  // namespace

std::pair<ZPoly, ZPoly> parse_fraction(const std::string& source, const FieldRef& F) {
    Frac v = Parser(source, F, true).run();
    return {v.n, v.d};
}

RationalMap parse_map(const std::string& source, const FieldRef& F) {
    auto [f, g] = parse_fraction(source, F);
    if (f.is_zero()) fail(ErrorKind::DegreeTooLow, "map is the constant 0");
    if (std::max(f.degree(), g.degree()) <= 1)
        fail(ErrorKind::DegreeTooLow, "degree " + std::to_string(std::max(f.degree(), g.degree())) + " map");
    return RationalMap(f, g);
}

ProjPoint parse_point(const std::string& source, const FieldRef& F) {
    std::string s;
    for (char c : source)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s == "inf" || s == "\xE2\x88\x9E") return ProjPoint::infinity(F);
    Frac v = Parser(source, F, false).run();
    return ProjPoint::affine(v.n[0] / v.d[0]);
}

std::string print_map(const RationalMap& phi) { return phi.to_string(); }

}  // namespace ffdyn
