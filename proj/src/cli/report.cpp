#include <algorithm>
#include <filesystem>
#include <fstream>
#include <future>
#include <random>
#include <sstream>

#include "ffdyn/cli.hpp"
#include "ffdyn/error.hpp"
#include "ffdyn/laurent.hpp"
#include "ffdyn/serialize.hpp"

namespace ffdyn {

using Json = json::Json;

namespace {

constexpr const char* kSchema = "ffdyn-report/1";

std::string rat_str(const Rational& r) {
    if (r.denominator() == 1) return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

Rational rat_parse(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(std::stoll(s));
    return Rational(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
}

Json header(const char* command, const RationalMap* phi, const FieldRef& F) {
    Json j;
    j["schema"] = kSchema;
    j["command"] = command;
    j["field"] = F->spec();
    if (phi) {
        j["map"] = print_map(*phi);
        j["degree"] = phi->degree();
    }
    return j;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json factor_json(const FiberFactor& f) {
    Json j;
    j["point"] = f.point.to_string();
    j["degree"] = f.degree;
    j["e"] = f.e;
    j["separable"] = f.separable;
    j["minpoly"] = f.point.at_infinity ? Json("inf") : json::zpoly(f.point.minpoly);
    return j;
}

Json postcritical_json(const PostcriticalResult& r, const ProjPoint& g) {
    Json j;
    j["gamma"] = g.to_string();
    j["status"] = to_string(r.status);
    j["crit_index"] = r.crit_index;
    j["steps"] = r.steps;
    j["limit"] = r.limit;
    j["cutoff"] = json::rational(r.cutoff);
    return j;
}

Json postcritical_section(const RationalMap& phi, const std::vector<ProjPoint>& gammas, int max_steps) {
    Json j;
    CriticalPoints cp = critical_points(phi);
    j["inseparable"] = cp.inseparable;
    Json crit = Json::array();
    for (const CritDatum& c : cp.points) crit.push_back({{"point", c.point.to_string()}, {"degree", c.point.degree()}, {"e", c.e}});
    j["critical_points"] = crit;
    Json rows = Json::array();
    for (const ProjPoint& g : gammas) rows.push_back(postcritical_json(postcritical_test(phi, g, max_steps), g));
    j["rows"] = rows;
    return j;
}

Json orbit_section(const RationalMap& phi, const ProjPoint& a, int max_steps) {
    OrbitResult o = is_wandering(phi, a, max_steps);
    Json j;
    j["seed_point"] = a.to_string();
    j["status"] = to_string(o.status);
    j["preperiod"] = o.preperiod;
    j["period"] = o.period;
    Json rows = Json::array();
    for (std::size_t n = 0; n < o.orbit.size(); ++n)
        rows.push_back({{"n", n}, {"point", o.orbit[n].to_string()}, {"height", o.orbit[n].height()}});
    j["rows"] = rows;
    return j;
}

Json preimage_section(const RationalMap& phi, const ProjPoint& gamma, int m, const FiberData& fd) {
    Json j;
    j["gamma"] = gamma.to_string();
    j["m"] = m;
    j["total"] = fd.total;
    std::int64_t dm = 1;
    for (int i = 0; i < m; ++i) dm *= phi.degree();
    j["expected_total"] = dm;
    j["squarefree"] = fd.squarefree;
    Json rows = Json::array();
    for (const FiberFactor& f : fd.factors) rows.push_back(factor_json(f));
    j["rows"] = rows;
    return j;
}

Json fiber_audit_section(const RationalMap& phi, const ProjPoint& gamma, int m, int prec) {
    CrossRatioAudit a = preimage_crossratio_audit(phi, gamma, m, Rational(prec));
    Json j;
    j["gamma"] = gamma.to_string();
    j["m"] = m;
    j["fiber_size"] = a.fiber_size;
    j["dm"] = a.dm;
    Json rows = Json::array();
    for (const FiberAuditEntry& e : a.entries) {
        Json r = factor_json(e.factor);
        r["status"] = to_string(e.status);
        r["quadruples_checked"] = e.quadruples_checked;
        r["note"] = e.note;
        rows.push_back(r);
    }
    j["rows"] = rows;
    return j;
}

Json exponent_section(const ZPoly& G, int budget) {
    ExponentReport rep = exponent_estimate(G, budget);
    Json j;
    j["G"] = G.to_string();
    j["minpoly"] = json::zpoly(G);
    j["budget"] = budget;
    j.update(json::exponent(rep, bound_audit(G, rep)));
    return j;
}

Json fiber_exponents(const FiberData& fd, int budget) {
    Json ex = Json::array();
    for (const FiberFactor& f : fd.factors) {
        if (f.point.at_infinity || f.degree < 2) continue;
        try {
            ex.push_back(exponent_section(f.point.minpoly, budget));
        } catch (const Error& e) {
            ex.push_back(Json{{"G", f.point.minpoly.to_string()}, {"error", e.what()}});
        }
    }
    return ex;
}

Json limit_section(const RationalMap& phi, const ProjPoint& a, const std::vector<ProjPoint>& gammas, int n_from, int n_to,
                   Rational delta, const Json& fitted = Json::object()) {
    LimitAudit la = orbit_proximity_audit(phi, a, gammas, n_from, n_to, delta);
    Json j;
    j["seed_point"] = a.to_string();
    Json tg = Json::array();
    for (std::size_t i = 0; i < la.targets.size(); ++i) tg.push_back(postcritical_json(la.target_status[i], la.targets[i]));
    j["targets"] = tg;
    j["delta"] = json::rational(delta);
    j.update(json::limit_audit(la, fitted));
    return j;
}

bool is_rational(const Json& v) { return v.is_object() && v.size() == 2 && v.contains("num") && v.contains("den"); }

// nested objects become dotted columns; {num, den} becomes "num/den"
void flatten(const Json& v, const std::string& key, Json& out) {
    if (is_rational(v)) {
        out[key] = rat_str(Rational(v["num"].get<std::int64_t>(), v["den"].get<std::int64_t>()));
    } else if (v.is_object()) {
        for (auto it = v.begin(); it != v.end(); ++it) flatten(it.value(), key.empty() ? it.key() : key + "." + it.key(), out);
    } else {
        out[key] = v;
    }
}

std::string csv_cell(const Json& v) {
    std::string s;
    if (v.is_string()) s = v.get<std::string>();
    else if (v.is_null()) s = "";
    else s = v.dump();
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) {
        if (c == '"') q += '"';
        q += c;
    }
    return q + "\"";
}

std::string rows_to_csv(const Json& rows) {
    std::vector<Json> flat;
    std::vector<std::string> cols;
    for (const Json& r : rows) {
        Json f = Json::object();
        flatten(r, "", f);
        for (auto it = f.begin(); it != f.end(); ++it)
            if (std::find(cols.begin(), cols.end(), it.key()) == cols.end()) cols.push_back(it.key());
        flat.push_back(std::move(f));
    }
    std::ostringstream os;
    for (std::size_t i = 0; i < cols.size(); ++i) os << (i ? "," : "") << cols[i];
    os << "\n";
    for (const Json& r : flat) {
        for (std::size_t i = 0; i < cols.size(); ++i) {
            if (i) os << ",";
            if (r.contains(cols[i])) os << csv_cell(r[cols[i]]);
        }
        os << "\n";
    }
    return os.str();
}

ProjPoint config_point(const std::string& s, const FieldRef& F, const char* what) {
    try {
        return parse_point(s, F);
    } catch (const Error& e) {
        fail(ErrorKind::ConfigError, std::string(what) + ": " + e.what());
    }
}

Json inverse_section(const RationalMap& phi, const ProjPoint& g, int count, std::mt19937_64& rng) {
    const FieldRef& F = phi.field();
    std::vector<ProjPoint> samples;
    for (int i = 0; i < count; ++i) {
        std::vector<Elem> nc(1 + rng() % 4), dc(rng() % 3);
        for (auto& c : nc) c = F->random(rng);
        for (auto& c : dc) c = F->random(rng);
        dc.push_back(F->one());
        ProjPoint P = ProjPoint::affine(RatFunc::normalize(Poly(F, nc), Poly(F, dc)));
        if (phi(P) != g) samples.push_back(P);
    }
    InverseBoundReport r = inverse_bound_audit(phi, 1, g, samples);
    Json s;
    s["gamma"] = g.to_string();
    s["m"] = 1;
    s["e"] = r.e;
    s["fitted_C"] = json::rational(r.fitted_C);
    Json rows = Json::array();
    for (const InverseSample& x : r.samples)
        rows.push_back({{"P", x.P.to_string()}, {"lhs", json::rational(x.lhs)}, {"rhs", json::rational(x.rhs)}, {"rhs_exact", x.rhs_exact}});
    s["rows"] = rows;
    return s;
}

}  // namespace

// ---------------------------------------------------------------- config

ExperimentConfig ExperimentConfig::from_json(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const Json::parse_error& e) {
        fail(ErrorKind::ConfigError, std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object()) fail(ErrorKind::ConfigError, "config must be a JSON object");
    ExperimentConfig c;
    auto bad = [](const std::string& k, const std::string& why) { fail(ErrorKind::ConfigError, "key '" + k + "': " + why); };
    auto text_of = [](const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
    try {
        for (auto it = j.begin(); it != j.end(); ++it) {
            const std::string& k = it.key();
            const Json& v = it.value();
            if (k == "field") c.field = v.get<std::string>();
            else if (k == "map") c.map = v.get<std::string>();
            else if (k == "seed_point") c.seed_point = text_of(v);
            else if (k == "targets") {
                c.targets.clear();
                for (const Json& t : v) c.targets.push_back(text_of(t));
            } else if (k == "n_range") {
                if (!v.is_array() || v.size() != 2) bad(k, "expected [from, to]");
                c.n_from = v[0].get<int>();
                c.n_to = v[1].get<int>();
            } else if (k == "m") c.m = v.get<int>();
            else if (k == "rng_seed") c.rng_seed = v.get<std::uint64_t>();
            else if (k == "budgets") {
                for (auto b = v.begin(); b != v.end(); ++b) {
                    const std::string& bk = b.key();
                    if (bk == "cf") c.cf_budget = b.value().get<int>();
                    else if (bk == "prec") c.prec = b.value().get<int>();
                    else if (bk == "postcritical") c.postcritical_steps = b.value().get<int>();
                    else if (bk == "inverse_samples") c.inverse_samples = b.value().get<int>();
                    else if (bk == "delta") c.delta = rat_parse(text_of(b.value()));
                    else bad("budgets." + bk, "unknown budget");
                }
            } else if (k == "non_isotrivial_assertion") {
                c.non_isotrivial = v.at("asserted").get<bool>();
                if (v.contains("justification")) c.non_isotrivial_justification = v["justification"].get<std::string>();
            } else bad(k, "unknown key");
        }
    } catch (const Json::exception& e) {
        fail(ErrorKind::ConfigError, std::string("bad value: ") + e.what());
    } catch (const std::logic_error& e) {
        fail(ErrorKind::ConfigError, std::string("bad number: ") + e.what());
    }
    return c;
}

std::string ExperimentConfig::to_json() const {
    Json j;
    j["field"] = field;
    j["map"] = map;
    j["seed_point"] = seed_point;
    j["targets"] = targets;
    j["n_range"] = {n_from, n_to};
    j["m"] = m;
    j["budgets"] = {{"cf", cf_budget}, {"prec", prec}, {"postcritical", postcritical_steps}, {"delta", rat_str(delta)},
                    {"inverse_samples", inverse_samples}};
    j["rng_seed"] = rng_seed;
    j["non_isotrivial_assertion"] = {{"asserted", non_isotrivial}, {"justification", non_isotrivial_justification}};
    return j.dump(2);
}

void ExperimentConfig::validate() const {
    auto need = [](bool ok, const std::string& what) {
        if (!ok) fail(ErrorKind::ConfigError, what);
    };
    need(!map.empty(), "map is required");
    need(!targets.empty(), "at least one target is required");
    need(n_from >= 0 && n_to >= n_from, "n_range must be nonempty");
    need(m >= 1, "m must be positive");
    need(cf_budget >= 1 && prec >= 1 && postcritical_steps >= 1 && inverse_samples >= 1, "budgets must be positive");
    need(delta > Rational(0), "delta must be positive");
}

// ---------------------------------------------------------------- subcommands

std::string report_parse(const RationalMap& phi) {
    Json j = header("parse", &phi, phi.field());
    j["f"] = phi.f().to_string();
    j["g"] = phi.g().to_string();
    j["F"] = json::bipoly(phi.F());
    j["G"] = json::bipoly(phi.G());
    j["height_constant"] = height_discrepancy_bound(phi);
    j["resultant_degree"] = resultant_degree(phi);
    return dump(j);
}

std::string report_orbit(const RationalMap& phi, const ProjPoint& a, int max_steps) {
    Json j = header("orbit", &phi, phi.field());
    j.update(orbit_section(phi, a, max_steps));
    return dump(j);
}

std::string report_postcritical(const RationalMap& phi, const std::vector<ProjPoint>& gammas, int max_steps) {
    Json j = header("postcritical", &phi, phi.field());
    j.update(postcritical_section(phi, gammas, max_steps));
    return dump(j);
}

std::string report_preimages(const RationalMap& phi, const ProjPoint& gamma, int m) {
    Json j = header("preimages", &phi, phi.field());
    j.update(preimage_section(phi, gamma, m, preimage_field_data(phi, m, gamma)));
    return dump(j);
}

std::string report_exponent(const ZPoly& G, int budget) {
    Json j = header("exponent", nullptr, G.field());
    j.update(exponent_section(G, budget));
    return dump(j);
}

std::string report_fiber_exponents(const RationalMap& phi, const ProjPoint& gamma, int m, int budget) {
    Json j = header("exponent", &phi, phi.field());
    j["gamma"] = gamma.to_string();
    j["m"] = m;
    j["factors"] = fiber_exponents(preimage_field_data(phi, m, gamma), budget);
    return dump(j);
}

std::string report_limit(const RationalMap& phi, const ProjPoint& a, const std::vector<ProjPoint>& gammas, int n_from,
                         int n_to, Rational delta) {
    Json j = header("audit-limit", &phi, phi.field());
    j.update(limit_section(phi, a, gammas, n_from, n_to, delta));
    return dump(j);
}

std::string report_fibers(const RationalMap& phi, const ProjPoint& gamma, int m, int prec) {
    Json j = header("audit-fibers", &phi, phi.field());
    j.update(fiber_audit_section(phi, gamma, m, prec));
    return dump(j);
}

std::string json_table_to_csv(const std::string& text) {
    Json j = Json::parse(text);
    if (j.contains("rows")) return rows_to_csv(j["rows"]);
    for (auto it = j.begin(); it != j.end(); ++it)
        if (it.value().is_array() && !it.value().empty() && it.value()[0].is_object()) return rows_to_csv(it.value());
    return "";
}

// ---------------------------------------------------------------- run

ExperimentReport run_experiment(const ExperimentConfig& cfg) {
    ExperimentReport out;
    Json j;
    j["schema"] = kSchema;
    j["command"] = "run";
    FieldRef F;
    RationalMap phi;
    ProjPoint a;
    std::vector<ProjPoint> gammas;
    try {
        cfg.validate();
        try {
            F = GaloisField::parse(cfg.field);
        } catch (const Error& e) {
            fail(ErrorKind::ConfigError, std::string("field: ") + e.what());
        }
        try {
            phi = parse_map(cfg.map, F);
        } catch (const Error& e) {
            fail(ErrorKind::ConfigError, std::string("map: ") + e.what());
        }
        a = config_point(cfg.seed_point, F, "seed_point");
        for (const std::string& s : cfg.targets) gammas.push_back(config_point(s, F, "target"));
        OrbitResult orb = is_wandering(phi, a, cfg.postcritical_steps);
        if (orb.status != OrbitStatus::Wandering)
            fail(ErrorKind::ConfigError, std::string("NotWandering: seed point orbit is ") + to_string(orb.status));
    } catch (const Error& e) {
        j["status"] = "CONFIG_ERROR";
        j["error"] = e.what();
        out.exit_code = 1;
        out.json = dump(j);
        return out;
    }

    j["config"] = Json::parse(cfg.to_json());
    j["field"] = F->spec();
    j["map"] = print_map(phi);
    j["degree"] = phi.degree();
    j["non_isotrivial_assertion"] = {{"asserted", cfg.non_isotrivial}, {"justification", cfg.non_isotrivial_justification}};

    // Stages are independent; each returns its own section and the report is assembled afterwards.
    auto guarded = [](auto fn) {
        return [fn]() -> Json {
            try {
                return fn();
            } catch (const Error& e) {
                return Json{{"error", e.what()}};
            }
        };
    };
    auto post = std::async(std::launch::async, guarded([&] { return postcritical_section(phi, gammas, cfg.postcritical_steps); }));
    auto orbit = std::async(std::launch::async, guarded([&] { return orbit_section(phi, a, cfg.postcritical_steps); }));
    auto fibers = std::async(std::launch::async, guarded([&] {
        Json arr = Json::array();
        for (const ProjPoint& g : gammas) {
            Json s;
            FiberData fd = preimage_field_data(phi, cfg.m, g);
            s["preimages"] = preimage_section(phi, g, cfg.m, fd);
            try {
                s["crossratio"] = fiber_audit_section(phi, g, cfg.m, cfg.prec);
            } catch (const Error& e) {
                s["crossratio"] = Json{{e.kind() == ErrorKind::FiberTooSmall ? "skipped" : "error", e.what()}};
            }
            s["exponents"] = fiber_exponents(fd, cfg.cf_budget);
            arr.push_back(s);
        }
        return arr;
    }));
    auto inverse = std::async(std::launch::async, guarded([&] {
        std::mt19937_64 rng(cfg.rng_seed);
        Json arr = Json::array();
        for (const ProjPoint& g : gammas) arr.push_back(inverse_section(phi, g, cfg.inverse_samples, rng));
        return arr;
    }));

    j["postcritical"] = post.get();
    j["orbit"] = orbit.get();
    j["inverse_bound"] = inverse.get();
    // the limit table carries the fitted inverse-bound constants in its verdict block
    Json fitted = Json::object();
    if (j["inverse_bound"].is_array())
        for (const Json& s : j["inverse_bound"]) fitted[s["gamma"].get<std::string>()] = s["fitted_C"];
    try {
        j["limit_audit"] = limit_section(phi, a, gammas, cfg.n_from, cfg.n_to, cfg.delta, fitted);
    } catch (const Error& e) {
        j["limit_audit"] = Json{{"error", e.what()}};
    }
    j["fibers"] = fibers.get();

    // contract checks: proven statements whose failure means a bug
    const Json& pc = j["postcritical"];
    for (std::size_t i = 0; i < gammas.size() && j["fibers"].is_array(); ++i) {
        const Json& fb = j["fibers"][i];
        const Json& pre = fb["preimages"];
        if (pre["total"] != pre["expected_total"])
            out.violations.push_back("fiber degree sum " + pre["total"].dump() + " != " + pre["expected_total"].dump() +
                                     " at gamma " + gammas[i].to_string());
        if (pc.contains("rows") && pc["rows"][i]["status"] == "NOT_POSTCRITICAL" && !pre["squarefree"].get<bool>())
            out.violations.push_back("gamma " + gammas[i].to_string() + " is not postcritical but the fiber is not squarefree");
        for (const Json& ex : fb["exponents"])
            if (ex.contains("liouville") && ex["liouville"]["verdict"] == "FAIL")
                out.violations.push_back("Liouville bound fails for " + ex["G"].get<std::string>());
    }
    j["violations"] = out.violations;
    j["status"] = out.violations.empty() ? "COMPLETE" : "CONTRACT_VIOLATION";
    out.exit_code = out.violations.empty() ? 0 : 2;
    out.json = dump(j);

    if (j["limit_audit"].contains("rows")) {
        Json rows = Json::array();
        for (const Json& r : j["limit_audit"]["rows"]) {
            Json row = r;
            int h = r["h"].get<int>();
            for (auto it = r["lambda"].begin(); it != r["lambda"].end(); ++it) {
                const Json& l = it.value();
                row["ratio"][it.key()] =
                    is_rational(l) && h > 0
                        ? Json(rat_str(Rational(l["num"].get<std::int64_t>(), l["den"].get<std::int64_t>()) / Rational(h)))
                        : Json("");
            }
            rows.push_back(row);
        }
        out.csv["orbit.csv"] = rows_to_csv(rows);
    }
    if (pc.contains("rows")) out.csv["postcritical.csv"] = rows_to_csv(pc["rows"]);
    Json fib_rows = Json::array(), exp_rows = Json::array();
    if (j["fibers"].is_array()) {
        for (const Json& fb : j["fibers"]) {
            const Json& pre = fb["preimages"];
            const Json& cr = fb["crossratio"];
            for (const Json& f : pre["rows"]) {
                Json r = {{"gamma", pre["gamma"]}, {"m", pre["m"]}};
                for (const char* k : {"point", "degree", "e", "separable"}) r[k] = f[k];
                if (cr.contains("rows"))
                    for (const Json& e : cr["rows"])
                        if (e["point"] == f["point"]) {
                            r["crossratio_status"] = e["status"];
                            r["quadruples_checked"] = e["quadruples_checked"];
                        }
                fib_rows.push_back(r);
            }
            for (const Json& ex : fb["exponents"]) {
                Json r = {{"gamma", pre["gamma"]}, {"G", ex["G"]}};
                for (const char* k : {"degree", "best", "tail", "liouville", "osgood_voloch", "error"})
                    if (ex.contains(k)) r[k] = ex[k];
                if (r.contains("osgood_voloch")) r["osgood_voloch"].erase("note");
                exp_rows.push_back(r);
            }
        }
    }
    out.csv["fibers.csv"] = rows_to_csv(fib_rows);
    out.csv["exponents.csv"] = rows_to_csv(exp_rows);
    Json inv_rows = Json::array();
    if (j["inverse_bound"].is_array())
        for (const Json& s : j["inverse_bound"])
            for (const Json& r : s["rows"]) {
                Json row = {{"gamma", s["gamma"]}};
                row.update(r);
                inv_rows.push_back(row);
            }
    out.csv["inverse.csv"] = rows_to_csv(inv_rows);
    return out;
}

void write_report(const ExperimentReport& r, const std::string& dir) {
    std::filesystem::create_directories(dir);
    auto put = [&](const std::string& name, const std::string& body) {
        std::ofstream os(std::filesystem::path(dir) / name, std::ios::binary);
        if (!os) fail(ErrorKind::ConfigError, "cannot write " + name + " in " + dir);
        os << body;
    };
    put("report.json", r.json);
    for (const auto& [name, body] : r.csv) put(name, body);
}

}  // namespace ffdyn
