#include <memory>
#include <optional>

#include "doctest.h"

#include "ffdyn/cli.hpp"
#include "ffdyn/error.hpp"

using namespace ffdyn;

namespace {

ErrorKind kind_of(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.kind();
    }
    return ErrorKind::InvalidArgument;  // sentinel: nothing thrown
}

std::size_t syntax_pos(const std::string& s, const FieldRef& F) {
    try {
        parse_fraction(s, F);
    } catch (const SyntaxError& e) {
        return e.position();
    }
    return std::string::npos;
}

// Random expression trees, rendered with the minimal parentheses the grammar
// needs (plus a few redundant ones) and evaluated numerically mod p.
struct Node {
    char op;  // 'n' number, 'z', 't', '+', '-', '*', '/', '~' (negation), '^'
    long val = 0;
    std::unique_ptr<Node> a, b;
};

int prec_of(const Node& n) {
    switch (n.op) {
    case '+': case '-': return 1;
    case '*': case '/': return 2;
    case '~': return 3;
    case '^': return 4;
    default: return 5;
    }
}

std::unique_ptr<Node> random_tree(std::mt19937_64& rng, int depth) {
    auto n = std::make_unique<Node>();
    int r = depth <= 0 ? static_cast<int>(rng() % 3) : static_cast<int>(rng() % 10);
    switch (r) {
    case 0: n->op = 'n'; n->val = static_cast<long>(rng() % 12); break;
    case 1: n->op = 'z'; break;
    case 2: n->op = 't'; break;
    case 3: case 4: n->op = '+'; break;
    case 5: n->op = '-'; break;
    case 6: n->op = '*'; break;
    case 7: n->op = '/'; break;
    case 8: n->op = '~'; break;
    default: n->op = '^'; n->val = static_cast<long>(rng() % 5) - 1; break;
    }
    if (r >= 3) n->a = random_tree(rng, depth - 1);
    if (r >= 3 && r <= 7) n->b = random_tree(rng, depth - 1);
    return n;
}

std::string render(const Node& n, std::mt19937_64& rng) {
    auto wrap = [&](const Node& c, bool need) {
        std::string s = render(c, rng);
        return need || rng() % 8 == 0 ? "(" + s + ")" : s;
    };
    std::string sp = rng() % 2 ? " " : "";
    switch (n.op) {
    case 'n': return std::to_string(n.val);
    case 'z': return "z";
    case 't': return "t";
    case '~': return "-" + wrap(*n.a, prec_of(*n.a) < 3);
    case '^': {
        std::string e = n.val < 0 ? (rng() % 2 ? "(" + std::to_string(n.val) + ")" : std::to_string(n.val)) : std::to_string(n.val);
        return wrap(*n.a, prec_of(*n.a) < 5) + "^" + e;
    }
    default: {
        int p = prec_of(n);
        return wrap(*n.a, prec_of(*n.a) < p) + sp + n.op + sp + wrap(*n.b, prec_of(*n.b) <= p);
    }
    }
}

long md(long x, long p) { return ((x % p) + p) % p; }

long inv_mod(long a, long p) {
    long r = 1, e = p - 2;
    for (a = md(a, p); e; e >>= 1, a = a * a % p)
        if (e & 1) r = r * a % p;
    return r;
}

std::optional<long> eval(const Node& n, long z, long t, long p) {
    switch (n.op) {
    case 'n': return md(n.val, p);
    case 'z': return z;
    case 't': return t;
    default: break;
    }
    auto x = eval(*n.a, z, t, p);
    if (!x) return std::nullopt;
    if (n.op == '~') return md(-*x, p);
    if (n.op == '^') {
        long base = *x, e = n.val;
        if (e < 0) {
            if (base == 0) return std::nullopt;
            base = inv_mod(base, p);
            e = -e;
        }
        long r = 1;
        for (long i = 0; i < e; ++i) r = r * base % p;
        return r;
    }
    auto y = eval(*n.b, z, t, p);
    if (!y) return std::nullopt;
    switch (n.op) {
    case '+': return md(*x + *y, p);
    case '-': return md(*x - *y, p);
    case '*': return *x * *y % p;
    default: return *y == 0 ? std::nullopt : std::optional<long>(*x * inv_mod(*y, p) % p);
    }
}

std::optional<long> eval_frac(const ZPoly& f, const ZPoly& g, long z, long t, long p) {
    auto ev = [&](const ZPoly& P) -> std::optional<long> {
        long acc = 0;
        for (std::size_t i = P.coeffs().size(); i-- > 0;) {
            const RatFunc& c = P.coeffs()[i];
            long d = c.den().eval(static_cast<Elem>(t));
            if (d == 0) return std::nullopt;
            acc = md(acc * z + static_cast<long>(c.num().eval(static_cast<Elem>(t))) * inv_mod(d, p), p);
        }
        return acc;
    };
    auto a = ev(f), b = ev(g);
    if (!a || !b || *b == 0) return std::nullopt;
    return *a * inv_mod(*b, p) % p;
}

}  // namespace

TEST_CASE("parse examples") {
    FieldRef F = GaloisField::prime(5);
    RationalMap phi = parse_map("(z^2 + t)/(z^2 - 1)", F);
    ZPoly z = ZPoly::z(F), one = ZPoly::constant(RatFunc::from_int(F, 1));
    ZPoly tt = ZPoly::constant(RatFunc::t(F));
    CHECK(phi.degree() == 2);
    CHECK(phi.f() == z * z + tt);
    CHECK(phi.g() == z * z - one);
    RationalMap poly = parse_map("z^2 + t", F);
    CHECK(poly.g() == one);
    CHECK(poly.f() == z * z + tt);
    CHECK(syntax_pos("z^", F) == 2);
    CHECK(parse_map("(z^2 + t)/(z^2 - 1)", F) == parse_map("(t + z*z) / (z^2 + 4)", F));
}

TEST_CASE("parse errors") {
    FieldRef F = GaloisField::prime(5);
    CHECK(syntax_pos("", F) == 0);
    CHECK(syntax_pos("(z", F) == 2);
    CHECK(syntax_pos("z + * t", F) == 4);
    CHECK(syntax_pos("2z", F) == 1);
    CHECK(syntax_pos("z^t", F) == 2);
    CHECK(syntax_pos("z^(2", F) == 4);
    CHECK(syntax_pos("x + z", F) == 0);
    CHECK(syntax_pos("g*z^2", F) == 0);  // no generator symbol over a prime field
    CHECK(syntax_pos("z^99999", F) == 2);
    CHECK(syntax_pos("z)", F) == 1);
    CHECK(kind_of([&] { parse_map("z + t", F); }) == ErrorKind::DegreeTooLow);
    CHECK(kind_of([&] { parse_map("t^3", F); }) == ErrorKind::DegreeTooLow);
    CHECK(kind_of([&] { parse_map("(z^2 - t^2)/(z - t)", F); }) == ErrorKind::DegreeTooLow);
    CHECK(kind_of([&] { parse_map("0*z^2", F); }) == ErrorKind::DegreeTooLow);
    CHECK(kind_of([&] { parse_map("z^2/0", F); }) == ErrorKind::IdenticallyUndefined);
    CHECK(kind_of([&] { parse_map("z^3/(z - z)", F); }) == ErrorKind::IdenticallyUndefined);
    CHECK(kind_of([&] { parse_map("z^2 + (t - t)^-1", F); }) == ErrorKind::IdenticallyUndefined);
    CHECK(kind_of([&] { parse_point("z", F); }) == ErrorKind::SyntaxError);
}

TEST_CASE("precedence and associativity") {
    FieldRef F = GaloisField::prime(5);
    auto same = [&](const std::string& a, const std::string& b) { return parse_fraction(a, F) == parse_fraction(b, F); };
    CHECK(same("-z^2", "-(z^2)"));
    CHECK(!same("-z^2", "(-z)^2 + 0*z"));
    CHECK(same("z^2^3", "z^6"));
    CHECK(same("z/t/t", "z/(t^2)"));
    CHECK(same("z - t - 1", "z - (t + 1)"));
    CHECK(same("2^3", "3"));
    CHECK(same("z^-2", "1/z^2"));
    CHECK(same("z^(-2)", "1/(z*z)"));
    CHECK(same("2*-z", "-2*z"));
    CHECK(same("1 + 2 * 3", "7"));
    CHECK(same("17", "2"));
    CHECK(same("z^0", "1"));
}

TEST_CASE("points and extension fields") {
    FieldRef F = GaloisField::prime(5);
    CHECK(parse_point("inf", F).is_infinity());
    CHECK(parse_point(" inf ", F).is_infinity());
    CHECK(parse_point("1/t + 2", F) == ProjPoint::affine(RatFunc::t(F).inv() + RatFunc::from_int(F, 2)));
    FieldRef Q = GaloisField::parse("q=25;modulus=2,1,1");
    RationalMap phi = parse_map("g*z^2 + t", Q);
    CHECK(phi.f()[2] == RatFunc::constant(Q, Q->generator()));
    CHECK(parse_map(print_map(phi), Q) == phi);
}

TEST_CASE("property: random expressions agree with direct evaluation") {
    const long p = 7;
    FieldRef F = GaloisField::prime(p);
    std::mt19937_64 rng(71);
    int checked = 0;
    for (int i = 0; i < 200; ++i) {
        auto tree = random_tree(rng, 4);
        std::string s = render(*tree, rng);
        std::pair<ZPoly, ZPoly> fg;
        try {
            fg = parse_fraction(s, F);
        } catch (const Error& e) {
            // only a literal division by zero may fail; the numeric oracle must fail too
            CHECK(e.kind() == ErrorKind::IdenticallyUndefined);
            continue;
        }
        for (long z = 0; z < p; ++z)
            for (long t = 0; t < p; ++t) {
                auto want = eval(*tree, z, t, p);
                if (!want) continue;
                auto got = eval_frac(fg.first, fg.second, z, t, p);
                if (!got) continue;
                CHECK_MESSAGE(*got == *want, s);
                ++checked;
            }
    }
    CHECK(checked > 2000);
}

TEST_CASE("property: print and reparse is the identity") {
    FieldRef F = GaloisField::prime(5);
    std::mt19937_64 rng(72);
    int maps = 0;
    for (int i = 0; i < 200; ++i) {
        // bias toward degree >= 2 by adding z^k
        auto tree = random_tree(rng, 3);
        std::string s = "(" + render(*tree, rng) + ") + z^" + std::to_string(2 + rng() % 2);
        RationalMap phi;
        try {
            phi = parse_map(s, F);
        } catch (const Error& e) {
            CHECK((e.kind() == ErrorKind::IdenticallyUndefined || e.kind() == ErrorKind::DegreeTooLow));
            continue;
        }
        ++maps;
        RationalMap again = parse_map(print_map(phi), F);
        CHECK_MESSAGE(again == phi, s);
        CHECK(print_map(again) == print_map(phi));
    }
    CHECK(maps > 150);
}

TEST_CASE("config parsing") {
    ExperimentConfig c = ExperimentConfig::from_json(R"({
        "field": "p=5", "map": "z^2 + t", "seed_point": "0", "targets": ["inf", "0"],
        "n_range": [2, 7], "m": 2, "budgets": {"cf": 30, "prec": 20, "postcritical": 40, "delta": "1/2"},
        "rng_seed": 9, "non_isotrivial_assertion": {"asserted": true, "justification": "bad reduction at t"}})");
    CHECK(c.targets.size() == 2);
    CHECK(c.n_from == 2);
    CHECK(c.n_to == 7);
    CHECK(c.m == 2);
    CHECK(c.cf_budget == 30);
    CHECK(c.delta == Rational(1, 2));
    CHECK(c.rng_seed == 9u);
    CHECK(c.non_isotrivial);
    CHECK(ExperimentConfig::from_json(c.to_json()).to_json() == c.to_json());
    CHECK(kind_of([] { ExperimentConfig::from_json("{"); }) == ErrorKind::ConfigError);
    CHECK(kind_of([] { ExperimentConfig::from_json(R"({"colour": 1})"); }) == ErrorKind::ConfigError);
    CHECK(kind_of([] { ExperimentConfig::from_json(R"({"m": "two"})"); }) == ErrorKind::ConfigError);
    CHECK(kind_of([] { ExperimentConfig::from_json(R"({"n_range": [1]})"); }) == ErrorKind::ConfigError);
    ExperimentConfig bad = c;
    bad.n_to = 1;
    CHECK(kind_of([&] { bad.validate(); }) == ErrorKind::ConfigError);
    bad = c;
    bad.cf_budget = 0;
    CHECK(kind_of([&] { bad.validate(); }) == ErrorKind::ConfigError);
}

TEST_CASE("run: hypothesis failure illustration") {
    ExperimentConfig c;
    c.map = "z^2 + t";
    c.seed_point = "0";
    c.targets = {"inf"};
    c.n_from = 1;
    c.n_to = 10;
    ExperimentReport r = run_experiment(c);
    CHECK(r.exit_code == 0);
    CHECK(r.json.find("\"schema\": \"ffdyn-report/1\"") != std::string::npos);
    CHECK(r.json.find("\"status\": \"POSTCRITICAL\"") != std::string::npos);
    // orbit 0 -> t -> t^2 + t -> ...: h = 2^(n-1), lambda to infinity = h
    std::string expect = "n,deg_a,deg_b,h,lambda.inf,ratio.inf\n";
    for (int n = 1; n <= 10; ++n) {
        std::string h = std::to_string(1 << (n - 1));
        expect += std::to_string(n) + "," + h + ",0," + h + "," + h + ",1\n";
    }
    CHECK(r.csv.at("orbit.csv") == expect);
}

TEST_CASE("run: errors and stability") {
    ExperimentConfig c;
    c.map = "z^2 - 2";
    c.seed_point = "0";
    ExperimentReport r = run_experiment(c);
    CHECK(r.exit_code == 1);
    CHECK(r.json.find("NotWandering") != std::string::npos);
    c.map = "z + 1";
    CHECK(run_experiment(c).exit_code == 1);
    c.map = "z^2 + t";
    c.field = "p=6";
    CHECK(run_experiment(c).exit_code == 1);

    ExperimentConfig s;
    s.map = "(z^2 + 1)/(z + t)";
    s.seed_point = "t";
    s.targets = {"0", "inf", "1"};
    s.n_from = 3;
    s.n_to = 8;
    s.m = 2;
    s.rng_seed = 5;
    ExperimentReport a = run_experiment(s), b = run_experiment(s);
    CHECK(a.exit_code == 0);
    CHECK(a.json == b.json);
    CHECK(a.csv == b.csv);
    CHECK(a.csv.size() == 5);
    CHECK(a.json.find("NONCONSTANT_FOUND") != std::string::npos);
}

TEST_CASE("csv flattening") {
    std::string j = R"({"schema": "x", "rows": [{"a": 1, "b": "x,y"}, {"a": 2, "c": "say \"hi\""}]})";
    CHECK(json_table_to_csv(j) == "a,b,c\n1,\"x,y\",\n2,,\"say \"\"hi\"\"\"\n");
}
