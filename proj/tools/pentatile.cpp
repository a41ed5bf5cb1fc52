// pentatile: tables, neighborhoods and certificates from the command line.
// Exit codes: 0 success, 1 verification failure, 2 usage error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "pentatile/cases.hpp"
#include "pentatile/geometry.hpp"
#include "pentatile/report.hpp"

using namespace pentatile;

namespace {

constexpr int kOk = 0, kFail = 1, kUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Config {
    std::string format = "markdown";
    std::string out;
    std::string f_range;
    int f = 0;
    double tolerance = 0;
    int samples = 1000;
    std::uint64_t seed = 1;
};

// Titled tables rendered as one document.
using Document = std::vector<std::pair<std::string, Table>>;

std::string render_document(const Document& doc, OutputFormat fmt) {
    if (doc.size() == 1) return render(doc[0].second, fmt);
    std::string out;
    if (fmt == OutputFormat::Json) {
        nlohmann::ordered_json j = nlohmann::ordered_json::object();
        for (const auto& [title, t] : doc) j[title] = nlohmann::ordered_json::parse(render(t, fmt));
        return j.dump(2) + "\n";
    }
    for (std::size_t i = 0; i < doc.size(); ++i) {
        if (i) out += "\n";
        if (fmt == OutputFormat::Markdown) out += "## " + doc[i].first + "\n\n";
        out += render(doc[i].second, fmt);
    }
    return out;
}

void emit(const Config& cfg, const std::string& text) {
    if (cfg.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(cfg.out, std::ios::binary);
    if (!f) throw UsageError("cannot write " + cfg.out);
    f << text;
}

std::pair<int, int> f_bounds(const Config& cfg) {
    if (cfg.f_range.empty()) return {kScanMin, kScanMax};
    auto colon = cfg.f_range.find(':');
    if (colon == std::string::npos) throw UsageError("--f-range expects lo:hi");
    int lo = 0, hi = 0;
    try {
        lo = std::stoi(cfg.f_range.substr(0, colon));
        hi = std::stoi(cfg.f_range.substr(colon + 1));
    } catch (const std::exception&) {
        throw UsageError("--f-range expects lo:hi");
    }
    if (lo % 2 || hi % 2 || lo < 12 || hi < lo) throw UsageError("--f-range needs even endpoints 12 <= lo <= hi");
    return {lo, hi};
}

std::vector<int> selected_f(const Config& cfg) {
    if (cfg.f) {
        TilingParameters p(cfg.f);  // validates
        return {p.f};
    }
    auto [lo, hi] = f_bounds(cfg);
    std::vector<int> fs;
    for (int f = lo; f <= hi; f += 2) fs.push_back(f);
    return fs;
}

Table with_f_column(int f, const Table& t) {
    Table out{{"f"}, {}};
    out.header.insert(out.header.end(), t.header.begin(), t.header.end());
    for (const auto& r : t.rows) {
        std::vector<std::string> row{std::to_string(f)};
        row.insert(row.end(), r.begin(), r.end());
        out.rows.push_back(row);
    }
    return out;
}

int cmd_vertices(const Config& cfg, const std::string& type, bool family) {
    const AngleTables tables = AngleTables::standard();
    const OutputFormat fmt = parse_format(cfg.format);
    if (family) {
        if (type == "II-alpha") return emit(cfg, render(theta_alpha_table(tables), fmt)), kOk;
        NbType t = parse_type(type);
        if (t != NbType::III2) throw UsageError("--family-table is available for III2 and II-alpha");
        return emit(cfg, render(family_table(tables[t]), fmt)), kOk;
    }
    if (!cfg.f && cfg.f_range.empty()) throw UsageError("give --f, --f-range or --family-table");
    Table all;
    for (int f : selected_f(cfg)) {
        Table t;
        if (type == "II-alpha") {
            t = theta_alpha_column_table(theta_alpha_column(tables, f));
        } else {
            const AngleSystem& sys = tables[parse_type(type)];
            if (sys.sum_only) throw UsageError("type II needs θ₁ pinned; use II-alpha");
            if (!sys.all_positive(f)) {
                std::cerr << "note: f=" << f << " has a non-positive angle; skipped\n";
                continue;
            }
            try {
                t = avc_table(compute_avc(sys, TilingParameters(f)));
            } catch (const HypothesisViolated& e) {
                std::cerr << "note: " << e.what() << "; θ₂φ₁ᵏθ₂ filter disabled\n";
                t = avc_table(compute_avc(sys, TilingParameters(f), AvcFlags{true, true, false, false}));
            }
        }
        if (cfg.f) {
            all = t;
        } else {
            Table ft = with_f_column(f, t);
            all.header = ft.header;
            all.rows.insert(all.rows.end(), ft.rows.begin(), ft.rows.end());
        }
    }
    emit(cfg, render(all, fmt));
    return kOk;
}

bool case_selected(const CaseCertificate& c, const std::string& name) {
    if (name == "all") return true;
    return c.case_id == name || c.case_id.rfind(name + "/", 0) == 0;
}

int cmd_verify(const Config& cfg, const std::string& name) {
    static const std::vector<std::string> known{"all", "minimal", "III1", "III2", "III3", "II-alpha", "II-general"};
    bool ok_name = false;
    for (const auto& k : known) ok_name = ok_name || k == name;
    if (!ok_name) throw UsageError("unknown case: " + name);
    if (cfg.tolerance < 0) throw UsageError("--tolerance must be positive");
    const OutputFormat fmt = parse_format(cfg.format);
    std::vector<int> fs;
    if (cfg.f || !cfg.f_range.empty()) fs = selected_f(cfg);

    TheoremReport full = full_theorem_report(AngleTables::standard(), cfg.tolerance);
    TheoremReport r = full;
    r.certificates.clear();
    for (const auto& c : full.certificates) {
        if (!case_selected(c, name)) continue;
        bool hit = fs.empty();
        for (int f : c.f_values)
            for (int g : fs) hit = hit || f == g;
        if (hit) r.certificates.push_back(c);
    }
    std::string text;
    switch (fmt) {
        case OutputFormat::Json: text = report_to_json(r) + "\n"; break;
        case OutputFormat::Csv: text = render(certificate_table(r), fmt); break;
        case OutputFormat::Markdown: text = report_markdown(r); break;
    }
    emit(cfg, text);
    if (!full.ok) {
        const auto& f = *full.failure;
        std::cerr << "verification failed: "
                  << (f.certificate.empty() ? f.stage : f.certificate + " step " + std::to_string(f.step)) << ": "
                  << f.message << "\n";
        return kFail;
    }
    return kOk;
}

int cmd_neighborhoods(const Config& cfg, const std::string& combo_name_arg) {
    EdgeCombo combo;
    try {
        combo = parse_combo(combo_name_arg);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    const OutputFormat fmt = parse_format(cfg.format);
    Document doc{{"labelings", labeling_table(combo)}};
    int code = kOk;
    if (combo == EdgeCombo::A3B2) {
        int f = cfg.f ? TilingParameters(cfg.f).f : 24;
        doc.push_back({"branches at f=" + std::to_string(f), survivor_table(AngleTables::standard(), f)});
        Table surv{{"type", "α", "θ₁", "θ₂", "φ₁", "φ₂"}, {}};
        for (const auto& [t, nt] : survivor_tilings(AngleTables::standard(), f)) {
            (void)nt;
            const AngleSystem& s = AngleTables::standard()[t];
            std::vector<std::string> row{type_label(t)};
            for (Angle x : kAllAngles)
                row.push_back(s.sum_only && (x == Angle::Theta1 || x == Angle::Theta2)
                                  ? "θ₁+θ₂ = " + fangle_pi(s.theta_sum)
                                  : fangle_pi(s[x]));
            surv.rows.push_back(row);
        }
        doc.push_back({"survivors", surv});
    } else {
        CaseCertificate c = minimal_case_proof(combo);
        Table steps{{"step", "ok"}, {}};
        for (const auto& s : c.steps) steps.rows.push_back({s.text, s.verify() ? "yes" : "no"});
        for (const auto& [k, v] : c.auxiliary) steps.rows.push_back({k + " = " + v, ""});
        doc.push_back({c.case_id, steps});
        if (!c.verify()) code = kFail;
    }
    emit(cfg, render_document(doc, fmt));
    return code;
}

int cmd_propagate(const Config& cfg) {
    emit(cfg, render(propagation_figure(propagation_table(AngleTables::standard())), parse_format(cfg.format)));
    return kOk;
}

int cmd_sample(const Config& cfg) {
    if (cfg.samples < 1) throw UsageError("--samples must be at least 1");
    const OutputFormat fmt = parse_format(cfg.format);
    auto l1 = lemma1_monte_carlo(cfg.samples, cfg.seed);
    auto l2 = lemma2_monte_carlo(cfg.samples, cfg.seed);
    auto o = formula_oracle(cfg.samples, cfg.samples, cfg.seed);
    auto num = [](double x) {
        std::ostringstream s;
        s.precision(3);
        s << std::scientific << x;
        return s.str();
    };
    Table lem{{"polygon", "accepted", "violations", "non-simple", "boundary", "attempts"}, {}};
    for (auto [name, r] : {std::pair{"quadrilateral", l1}, std::pair{"pentagon", l2}})
        lem.rows.push_back({name, std::to_string(r.accepted), std::to_string(r.violations),
                            std::to_string(r.non_simple), std::to_string(r.boundary), std::to_string(r.attempts)});
    Table orc{{"check", "samples", "worst residual"}, {}};
    for (auto [name, v] : {std::pair{"cos a, first relation", o.eq3}, std::pair{"cos a, second relation", o.eq4},
                           std::pair{"cos c", o.eq5}, std::pair{"quadrilateral identity", o.eq6}})
        orc.rows.push_back({name, std::to_string(o.quads), num(v)});
    for (auto [name, v] : {std::pair{"split relation 1", o.eq7}, std::pair{"split relation 2", o.eq8},
                           std::pair{"L M N root", o.lmn_root}, std::pair{"P Q R root", o.pqr_root}})
        orc.rows.push_back({name, std::to_string(o.pentagons), num(v)});
    emit(cfg, render_document({{"ordering samples", lem}, {"formula oracle", orc}}, fmt));
    return l1.violations + l2.violations == 0 ? kOk : kFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Spherical pentagon tiling case verifier"};
    app.require_subcommand(1);
    Config cfg;
    auto common = [&](CLI::App* sub) {
        sub->add_option("--format", cfg.format, "csv, json or markdown")
            ->check(CLI::IsMember({"csv", "json", "markdown", "md"}));
        sub->add_option("--out", cfg.out, "write to this file instead of stdout");
        sub->add_option("--f-range", cfg.f_range, "even tile counts lo:hi");
        sub->add_option("--samples", cfg.samples, "Monte-Carlo sample count");
        sub->add_option("--seed", cfg.seed, "random seed");
    };

    std::string type, verify_case = "all", combo;
    bool family = false;
    auto* vert = app.add_subcommand("vertices", "vertex tables and AVCs");
    vert->add_option("--type", type, "II-alpha, III1, III2 or III3")->required();
    vert->add_option("--f", cfg.f, "tile count");
    vert->add_flag("--family-table", family, "print the family table");
    common(vert);

    auto* ver = app.add_subcommand("verify", "build and check the certificates");
    ver->add_option("case", verify_case, "all, minimal, III1, III2, III3, II-alpha or II-general");
    ver->add_option("--f", cfg.f, "keep certificates touching this tile count");
    ver->add_option("--tolerance", cfg.tolerance, "override geometric tolerances");
    common(ver);

    auto* nb = app.add_subcommand("neighborhoods", "edge labelings and angle solutions");
    nb->add_option("--combo", combo, "a2b2c, a3bc or a3b2")->required();
    nb->add_option("--f", cfg.f, "tile count for the angle solve (default 24)");
    common(nb);

    auto* prop = app.add_subcommand("propagate", "propagation matrix");
    common(prop);

    auto* smp = app.add_subcommand("sample", "Monte-Carlo ordering checks and formula oracle");
    common(smp);

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        app.exit(e);
        return kOk;
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (*vert) return cmd_vertices(cfg, type, family);
        if (*ver) return cmd_verify(cfg, verify_case);
        if (*nb) return cmd_neighborhoods(cfg, combo);
        if (*prop) return cmd_propagate(cfg);
        if (*smp) return cmd_sample(cfg);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kFail;
    }
    return kUsage;
}
