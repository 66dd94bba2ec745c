#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ffdyn/dynmap.hpp"

namespace ffdyn {

// Expression language: z, t, g (field generator when q is not prime), decimal
// integers, + - * / ^ with integer exponents, parentheses.

// Parses to a reduced fraction f/g in K(z) without any degree requirement.
std::pair<ZPoly, ZPoly> parse_fraction(const std::string& source, const FieldRef& F);
// A map of degree >= 2. DegreeTooLow, IdenticallyUndefined, SyntaxError.
RationalMap parse_map(const std::string& source, const FieldRef& F);
// An element of K, or "inf". z is rejected.
ProjPoint parse_point(const std::string& source, const FieldRef& F);
std::string print_map(const RationalMap& phi);

struct ExperimentConfig {
    std::string field = "p=5";
    std::string map;
    std::string seed_point = "0";
    std::vector<std::string> targets = {"inf"};
    int n_from = 1, n_to = 10;
    int m = 1;
    int cf_budget = 40;
    int prec = 24;
    int postcritical_steps = 64;
    Rational delta = Rational(1);
    int inverse_samples = 20;
    std::uint64_t rng_seed = 1;
    bool non_isotrivial = false;
    std::string non_isotrivial_justification;

    // Reads the JSON form; unknown keys and bad values raise ConfigError.
    static ExperimentConfig from_json(const std::string& text);
    std::string to_json() const;
    // ConfigError unless budgets are positive and the range is nonempty.
    void validate() const;
};

struct ExperimentReport {
    int exit_code = 0;  // 0 complete, 2 contract violation, 1 configuration error
    std::string json;
    std::map<std::string, std::string> csv;  // file name -> contents
    std::vector<std::string> violations;
};

ExperimentReport run_experiment(const ExperimentConfig& cfg);
// Writes report.json and the CSV tables into dir (created if missing).
void write_report(const ExperimentReport& r, const std::string& dir);

// JSON fragments used by the subcommands; each is a complete JSON document.
std::string report_parse(const RationalMap& phi);
std::string report_orbit(const RationalMap& phi, const ProjPoint& a, int max_steps);
std::string report_postcritical(const RationalMap& phi, const std::vector<ProjPoint>& gammas, int max_steps);
std::string report_preimages(const RationalMap& phi, const ProjPoint& gamma, int m);
std::string report_exponent(const ZPoly& G, int budget);
// exponent_estimate + bound_audit for every fiber factor of degree >= 2.
std::string report_fiber_exponents(const RationalMap& phi, const ProjPoint& gamma, int m, int budget);
std::string report_limit(const RationalMap& phi, const ProjPoint& a, const std::vector<ProjPoint>& gammas, int n_from,
                         int n_to, Rational delta);
std::string report_fibers(const RationalMap& phi, const ProjPoint& gamma, int m, int prec);

// Flattens a report document's main table to CSV (the "rows" array, or the
// first array of objects found).
std::string json_table_to_csv(const std::string& json);

}  // namespace ffdyn
