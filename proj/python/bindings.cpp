#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "pentatile/cases.hpp"
#include "pentatile/geometry.hpp"
#include "pentatile/report.hpp"

namespace py = pybind11;
using namespace pentatile;

namespace {

// (num, den) in units of π
std::pair<std::int64_t, std::int64_t> frac(const Rational& q) { return {q.num(), q.den()}; }

std::map<std::string, std::string> angles_of(const std::string& type) {
    const AngleSystem& s = AngleTables::standard()[parse_type(type)];
    std::map<std::string, std::string> out;
    for (Angle x : kAllAngles)
        if (!(s.sum_only && (x == Angle::Theta1 || x == Angle::Theta2))) out[angle_ascii(x)] = s[x].str();
    out["theta_sum"] = s.theta_sum.str();
    return out;
}

std::vector<std::string> avc_of(const std::string& type, int f) {
    Avc avc = type == "II-alpha" ? compute_avc(theta_alpha_system(AngleTables::standard()), TilingParameters(f))
                                 : compute_avc(parse_type(type), TilingParameters(f));
    std::vector<std::string> out;
    for (const auto& s : avc.signatures) out.push_back(s.str());
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact case analysis for spherical tilings by congruent pentagons";

    py::register_exception<HypothesisViolated>(m, "HypothesisViolated", PyExc_ValueError);
    py::register_exception<GeometryError>(m, "GeometryError", PyExc_ValueError);

    m.def("fangle_eval", [](std::int64_t rn, std::int64_t rd, std::int64_t sn, std::int64_t sd, int f) {
        return frac(FAngle(Rational(rn, rd), Rational(sn, sd)).eval(f));
    }, py::arg("r_num"), py::arg("r_den"), py::arg("s_num"), py::arg("s_den"), py::arg("f"),
          "Evaluate (r + s/f) as a reduced fraction (num, den) in units of π.");
    m.def("angle_system", &angles_of, py::arg("type"), "Angle row of a neighborhood type as strings.");
    m.def("compute_avc", &avc_of, py::arg("type"), py::arg("f"),
          "Filtered vertex signatures for III1, III2, III3 or II-alpha at f.");
    m.def("vertex_family_table", [] {
        std::vector<std::tuple<int, int, std::string, int, int>> out;
        for (const auto& r : vertex_family_table(AngleTables::standard()[NbType::III2]))
            out.emplace_back(r.a, r.b1, r.b2.str(), r.c1, r.c2);
        return out;
    });
    m.def("theta_alpha_family_table", [] {
        std::vector<std::tuple<int, std::string, int, int>> out;
        for (const auto& r : theta_alpha_family_table(theta_alpha_system(AngleTables::standard())))
            out.emplace_back(r.a, r.b.str(), r.c, r.d);
        return out;
    });
    m.def("theta_alpha_admissible_f", [](int lo, int hi) {
        return theta_alpha_admissible_f(AngleTables::standard(), lo, hi);
    }, py::arg("lo") = kScanMin, py::arg("hi") = kScanMax);

    m.def("lmn", [](double b, double g, double d, double e) {
        auto r = lmn({b, g, d, e});
        return std::make_tuple(r.L, r.M, r.N);
    });
    m.def("pqr", [](double b, double g, double d, double e) {
        auto r = pqr({b, g, d, e});
        return std::make_tuple(r.P, r.Q, r.R);
    });

    m.def("propagation_table", [] {
        std::map<std::string, std::vector<std::vector<std::string>>> out;
        for (const auto& [t, row] : propagation_table(AngleTables::standard()).entries)
            for (const auto& cell : row) {
                std::vector<std::string> names;
                for (NbType x : cell) names.push_back(type_name(x));
                out[type_name(t)].push_back(names);
            }
        return out;
    });
    m.def("minimal_case_f", [](const std::string& combo) {
        CaseCertificate c = minimal_case_proof(parse_combo(combo));
        return std::make_pair(c.verify(), c.f_values);
    }, py::arg("combo"), "Verification flag and derived tile counts of a minimal case.");
    m.def("theorem_report_json", [](double tolerance) {
        return report_to_json(full_theorem_report(AngleTables::standard(), tolerance));
    }, py::arg("tolerance") = 0.0);
    m.def("render_table", [](const std::string& name, const std::string& format) {
        const AngleTables t = AngleTables::standard();
        OutputFormat fmt = parse_format(format);
        if (name == "table1") return render(angle_table(t), fmt);
        if (name == "table2") return render(family_table(t[NbType::III2]), fmt);
        if (name == "table3") return render(theta_alpha_table(t), fmt);
        if (name == "figure7") return render(propagation_figure(propagation_table(t)), fmt);
        throw py::value_error("unknown table: " + name);
    }, py::arg("name"), py::arg("format") = "markdown");
}
