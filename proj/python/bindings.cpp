#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ffdyn/cli.hpp"
#include "ffdyn/error.hpp"
#include "ffdyn/serialize.hpp"

namespace py = pybind11;
using namespace ffdyn;

namespace {

FieldRef field_of(const std::string& spec) { return GaloisField::parse(spec); }

Rational rat_parse(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(std::stoll(s));
    return Rational(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
}

std::string logval_str(const LogVal& v) { return v.to_string(); }

std::vector<ProjPoint> points(const std::vector<std::string>& xs, const FieldRef& F) {
    std::vector<ProjPoint> out;
    for (const auto& x : xs) out.push_back(parse_point(x, F));
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact arithmetic dynamics over F_q(t)";
    static py::exception<Error> exc(m, "FfdynError", PyExc_ValueError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            PyErr_SetString(exc.ptr(), e.what());
        }
    });

    py::class_<RationalMap>(m, "Map")
        .def(py::init([](const std::string& src, const std::string& field) { return parse_map(src, field_of(field)); }),
             py::arg("source"), py::arg("field") = "p=5")
        .def_property_readonly("degree", &RationalMap::degree)
        .def_property_readonly("field", [](const RationalMap& f) { return f.field()->spec(); })
        .def_property_readonly("f", [](const RationalMap& f) { return f.f().to_string(); })
        .def_property_readonly("g", [](const RationalMap& f) { return f.g().to_string(); })
        .def("__call__", [](const RationalMap& f, const std::string& x) { return f(parse_point(x, f.field())).to_string(); })
        .def("iterate", [](const RationalMap& f, int n) { return iterate(f, n); })
        .def("height_constant", [](const RationalMap& f) { return height_discrepancy_bound(f); })
        .def("__eq__", [](const RationalMap& a, const RationalMap& b) { return a == b; })
        .def("__str__", &print_map)
        .def("__repr__", [](const RationalMap& f) { return "Map('" + print_map(f) + "', field='" + f.field()->spec() + "')"; });

    py::class_<BerkPoint>(m, "BerkPoint")
        .def_static("type1", [](const std::string& c, const std::string& field) {
            return BerkPoint::type1(parse_point(c, field_of(field)).value());
        }, py::arg("center"), py::arg("field") = "p=5")
        .def_static("disc", [](const std::string& c, const std::string& logdiam, const std::string& field) {
            return BerkPoint::disc(parse_point(c, field_of(field)).value(), rat_parse(logdiam));
        }, py::arg("center"), py::arg("logdiam"), py::arg("field") = "p=5")
        .def_static("infinity", &BerkPoint::infinity)
        .def_property_readonly("type", &BerkPoint::type)
        .def_property_readonly("logdiam", [](const BerkPoint& z) { return logval_str(z.logdiam()); })
        .def("to_json", [](const BerkPoint& z) { return json::berk(z).dump(); })
        .def("__eq__", [](const BerkPoint& a, const BerkPoint& b) { return a == b; })
        .def("__repr__", &BerkPoint::to_string);
    m.def("hsia", [](const BerkPoint& a, const BerkPoint& b) { return logval_str(hsia(a, b)); });
    m.def("join", &join);
    m.def("diam", [](const BerkPoint& a) { return logval_str(diam(a)); });
    m.def("cross_ratio_log", [](const BerkPoint& a, const BerkPoint& b, const BerkPoint& c, const BerkPoint& d) {
        return logval_str(cross_ratio_log(a, b, c, d));
    });

    m.def("_report_parse", [](const RationalMap& f) { return report_parse(f); });
    m.def("_report_orbit", [](const RationalMap& f, const std::string& a, int steps) {
        return report_orbit(f, parse_point(a, f.field()), steps);
    });
    m.def("_report_postcritical", [](const RationalMap& f, const std::vector<std::string>& gs, int steps) {
        return report_postcritical(f, points(gs, f.field()), steps);
    });
    m.def("_report_preimages", [](const RationalMap& f, const std::string& g, int depth) {
        return report_preimages(f, parse_point(g, f.field()), depth);
    });
    m.def("_report_limit", [](const RationalMap& f, const std::string& a, const std::vector<std::string>& gs, int n_from,
                              int n_to, const std::string& delta) {
        return report_limit(f, parse_point(a, f.field()), points(gs, f.field()), n_from, n_to, rat_parse(delta));
    });
    m.def("_report_fibers", [](const RationalMap& f, const std::string& g, int depth, int prec) {
        return report_fibers(f, parse_point(g, f.field()), depth, prec);
    });
    m.def("_report_exponent", [](const std::string& G, const std::string& field, int budget) {
        auto [num, den] = parse_fraction(G, field_of(field));
        if (den.degree() != 0) throw Error(ErrorKind::InvalidArgument, "G must be a polynomial in z");
        return report_exponent(num.scaled(den[0].inv()), budget);
    });
    m.def("_run", [](const std::string& config) {
        ExperimentReport r = run_experiment(ExperimentConfig::from_json(config));
        return py::make_tuple(r.exit_code, r.json, r.csv);
    });
}
