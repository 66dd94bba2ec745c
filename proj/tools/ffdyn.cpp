#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "ffdyn/cli.hpp"
#include "ffdyn/error.hpp"

using namespace ffdyn;

namespace {

struct Opts {
    std::string field = "p=5";
    std::string map;
    std::string seed = "0";
    std::vector<std::string> gamma;
    std::string n_range = "1..10";
    int m = 1;
    int prec = 24;
    int budget = 64;
    std::string delta = "1";
    std::uint64_t rng_seed = 1;
    std::string out_dir;
    std::string format = "json";
    std::string config;
};

std::pair<int, int> parse_range(const std::string& s) {
    auto dots = s.find("..");
    try {
        if (dots == std::string::npos) {
            int n = std::stoi(s);
            return {n, n};
        }
        return {std::stoi(s.substr(0, dots)), std::stoi(s.substr(dots + 2))};
    } catch (const std::logic_error&) {
        fail(ErrorKind::ConfigError, "bad --n-range '" + s + "', expected A..B");
    }
}

Rational parse_rational(const std::string& s) {
    try {
        auto slash = s.find('/');
        if (slash == std::string::npos) return Rational(std::stoll(s));
        return Rational(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
    } catch (const std::exception&) {
        fail(ErrorKind::ConfigError, "bad rational '" + s + "'");
    }
}

std::vector<ProjPoint> gammas(const Opts& o, const FieldRef& F) {
    std::vector<ProjPoint> out;
    for (const std::string& g : o.gamma) out.push_back(parse_point(g, F));
    if (out.empty()) out.push_back(ProjPoint::infinity(F));
    return out;
}

void emit(const Opts& o, const std::string& name, const std::string& json) {
    std::string body = o.format == "csv" ? json_table_to_csv(json) : json;
    if (o.out_dir.empty()) {
        std::cout << body;
        return;
    }
    ExperimentReport r;
    r.json = json;
    r.csv[name + ".csv"] = json_table_to_csv(json);
    write_report(r, o.out_dir);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Arithmetic dynamics over F_q(t): orbits, fibers, approximation exponents"};
    app.require_subcommand(1);
    Opts o;

    auto common = [&](CLI::App* s) {
        s->add_option("--field", o.field, "field spec, e.g. p=5 or q=25;modulus=2,1,1")->capture_default_str();
        s->add_option("--map", o.map, "rational map in z over F_q(t)")->required();
        s->add_option("--out-dir", o.out_dir, "write report.json and a CSV table here instead of stdout");
        s->add_option("--format", o.format, "stdout format")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
    };
    CLI::App* parse = app.add_subcommand("parse", "parse and normalize a map");
    common(parse);
    CLI::App* orbit = app.add_subcommand("orbit", "forward orbit and preperiodicity");
    common(orbit);
    orbit->add_option("--seed-point", o.seed, "element of F_q(t) or inf")->capture_default_str();
    orbit->add_option("--budget", o.budget, "maximum iterations")->capture_default_str();
    CLI::App* post = app.add_subcommand("postcritical", "critical points and postcritical tests");
    common(post);
    post->add_option("--gamma", o.gamma, "target point (repeatable), default inf");
    post->add_option("--budget", o.budget, "maximum orbit steps")->capture_default_str();
    CLI::App* pre = app.add_subcommand("preimages", "factor the fiber of phi^m over a target");
    common(pre);
    pre->add_option("--gamma", o.gamma, "target point")->required();
    pre->add_option("--depth-m", o.m, "iterate depth")->capture_default_str();
    CLI::App* expo = app.add_subcommand("exponent", "approximation exponent of fiber points, or of the roots of --map");
    common(expo);
    expo->add_option("--gamma", o.gamma, "target point; without it --map is read as a polynomial G(z)");
    expo->add_option("--depth-m", o.m, "iterate depth")->capture_default_str();
    expo->add_option("--budget", o.budget, "height budget for convergents")->capture_default_str();
    CLI::App* lim = app.add_subcommand("audit-limit", "orbit proximity table");
    common(lim);
    lim->add_option("--seed-point", o.seed, "wandering seed point")->capture_default_str();
    lim->add_option("--gamma", o.gamma, "target point (repeatable), default inf");
    lim->add_option("--n-range", o.n_range, "A..B")->capture_default_str();
    lim->add_option("--delta", o.delta, "window slack")->capture_default_str();
    CLI::App* fib = app.add_subcommand("audit-fibers", "cross-ratio constancy over fiber factors");
    common(fib);
    fib->add_option("--gamma", o.gamma, "target point")->required();
    fib->add_option("--depth-m", o.m, "iterate depth")->capture_default_str();
    fib->add_option("--prec", o.prec, "series precision")->capture_default_str();
    CLI::App* run = app.add_subcommand("run", "full experiment from a JSON config and/or flags");
    run->add_option("--config", o.config, "JSON config file");
    run->add_option("--field", o.field, "field spec");
    run->add_option("--map", o.map, "rational map");
    run->add_option("--seed-point", o.seed, "wandering seed point");
    run->add_option("--gamma", o.gamma, "target point (repeatable)");
    run->add_option("--n-range", o.n_range, "A..B");
    run->add_option("--depth-m", o.m, "preimage depth");
    run->add_option("--prec", o.prec, "series precision");
    run->add_option("--budget", o.budget, "continued fraction budget");
    run->add_option("--delta", o.delta, "window slack");
    run->add_option("--rng-seed", o.rng_seed, "seed for sampled audits");
    run->add_option("--out-dir", o.out_dir, "output directory");
    run->add_option("--format", o.format, "stdout format when no --out-dir")->check(CLI::IsMember({"json", "csv"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    }

    try {
        if (run->parsed()) {
            ExperimentConfig cfg;
            if (!o.config.empty()) {
                std::ifstream in(o.config);
                if (!in) fail(ErrorKind::ConfigError, "cannot read " + o.config);
                std::stringstream ss;
                ss << in.rdbuf();
                cfg = ExperimentConfig::from_json(ss.str());
            }
            if (run->count("--field")) cfg.field = o.field;
            if (run->count("--map")) cfg.map = o.map;
            if (run->count("--seed-point")) cfg.seed_point = o.seed;
            if (run->count("--gamma")) cfg.targets = o.gamma;
            if (run->count("--n-range")) std::tie(cfg.n_from, cfg.n_to) = parse_range(o.n_range);
            if (run->count("--depth-m")) cfg.m = o.m;
            if (run->count("--prec")) cfg.prec = o.prec;
            if (run->count("--budget")) cfg.cf_budget = o.budget;
            if (run->count("--delta")) cfg.delta = parse_rational(o.delta);
            if (run->count("--rng-seed")) cfg.rng_seed = o.rng_seed;
            ExperimentReport r = run_experiment(cfg);
            if (!o.out_dir.empty()) write_report(r, o.out_dir);
            else std::cout << (o.format == "csv" && r.csv.count("orbit.csv") ? r.csv["orbit.csv"] : r.json);
            for (const std::string& v : r.violations) std::cerr << "contract violation: " << v << "\n";
            if (r.exit_code == 1) std::cerr << "configuration error\n";
            return r.exit_code;
        }

        FieldRef F = GaloisField::parse(o.field);
        if (expo->parsed() && o.gamma.empty()) {
            auto [f, g] = parse_fraction(o.map, F);
            if (g.degree() != 0) fail(ErrorKind::InvalidArgument, "--map must be a polynomial in z when --gamma is absent");
            emit(o, "exponent", report_exponent(f.scaled(g[0].inv()), o.budget));
            return 0;
        }
        RationalMap phi = parse_map(o.map, F);
        if (parse->parsed()) emit(o, "parse", report_parse(phi));
        else if (orbit->parsed()) emit(o, "orbit", report_orbit(phi, parse_point(o.seed, F), o.budget));
        else if (post->parsed()) emit(o, "postcritical", report_postcritical(phi, gammas(o, F), o.budget));
        else if (pre->parsed()) emit(o, "preimages", report_preimages(phi, gammas(o, F)[0], o.m));
        else if (lim->parsed()) {
            auto [a, b] = parse_range(o.n_range);
            emit(o, "limit", report_limit(phi, parse_point(o.seed, F), gammas(o, F), a, b, parse_rational(o.delta)));
        } else if (fib->parsed()) emit(o, "fibers", report_fibers(phi, gammas(o, F)[0], o.m, o.prec));
        else if (expo->parsed()) emit(o, "exponent", report_fiber_exponents(phi, gammas(o, F)[0], o.m, o.budget));
        return 0;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
