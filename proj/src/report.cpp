#include "pentatile/report.hpp"

#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace pentatile {

namespace {

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

std::string md_cell(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '|') out += '\\';
        out += c;
    }
    return out;
}

std::string join(const std::vector<std::string>& xs, const std::string& sep) {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? sep : "") + xs[i];
    return out;
}

std::string family_cell(const std::vector<ThetaAlphaFamily>& fam, std::size_t i, int f) {
    Rational b = fam[i].b.at(f);
    if (b.sign() < 0 || !b.is_integer()) return "";
    return VertexSignature::of(fam[i].a, 0, static_cast<int>(b.num()), fam[i].c, fam[i].d).str();
}

}  // namespace

OutputFormat parse_format(const std::string& s) {
    if (s == "csv") return OutputFormat::Csv;
    if (s == "json") return OutputFormat::Json;
    if (s == "markdown" || s == "md") return OutputFormat::Markdown;
    throw std::invalid_argument("unknown format: " + s);
}

std::string render(const Table& t, OutputFormat fmt) {
    std::ostringstream out;
    switch (fmt) {
        case OutputFormat::Csv: {
            auto line = [&](const std::vector<std::string>& row) {
                for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << csv_field(row[i]);
                out << '\n';
            };
            line(t.header);
            for (const auto& r : t.rows) line(r);
            break;
        }
        case OutputFormat::Json: {
            nlohmann::ordered_json arr = nlohmann::ordered_json::array();
            for (const auto& r : t.rows) {
                nlohmann::ordered_json o = nlohmann::ordered_json::object();
                for (std::size_t i = 0; i < t.header.size(); ++i) o[t.header[i]] = i < r.size() ? r[i] : "";
                arr.push_back(o);
            }
            out << arr.dump(2) << '\n';
            break;
        }
        case OutputFormat::Markdown: {
            auto line = [&](const std::vector<std::string>& row) {
                out << '|';
                for (const auto& c : row) out << ' ' << md_cell(c) << " |";
                out << '\n';
            };
            line(t.header);
            out << '|';
            for (std::size_t i = 0; i < t.header.size(); ++i) out << "---|";
            out << '\n';
            for (const auto& r : t.rows) line(r);
            break;
        }
    }
    return out.str();
}

std::string fangle_pi(const FAngle& x) {
    if (x.is_constant()) return pi_str(x.r);
    return "(" + x.str() + ")π";
}

Table angle_table(const AngleTables& tables) {
    Table t{{"type", "α", "θ₁", "θ₂", "φ₁", "φ₂", "θ₁+θ₂"}, {}};
    for (NbType ty : kAllTypes) {
        const AngleSystem& s = tables[ty];
        FAngle sum = s.sum_only ? s.theta_sum : s[Angle::Theta1] + s[Angle::Theta2];
        auto cell = [&](Angle x) {
            if (s.sum_only && (x == Angle::Theta1 || x == Angle::Theta2)) return std::string("-");
            return fangle_pi(s[x]);
        };
        t.rows.push_back({type_label(ty), cell(Angle::Alpha), cell(Angle::Theta1), cell(Angle::Theta2),
                          cell(Angle::Phi1), cell(Angle::Phi2), fangle_pi(sum)});
    }
    return t;
}

Table family_table(const AngleSystem& iii2) {
    Table t{{"a", "b₁", "b₂", "c₁", "c₂"}, {}};
    for (const auto& r : vertex_family_table(iii2))
        t.rows.push_back({std::to_string(r.a), std::to_string(r.b1), r.b2.str(), std::to_string(r.c1),
                          std::to_string(r.c2)});
    return t;
}

Table theta_alpha_table(const AngleTables& tables) {
    auto fam = theta_alpha_family_table(theta_alpha_system(tables));
    const std::vector<int> fs{24, 36, 60};
    std::vector<ThetaAlphaColumn> cols;
    for (int f : fs) cols.push_back(theta_alpha_column(tables, f));
    Table t{{"a", "b", "c", "d", "f=24", "f=36", "f=60"}, {}};
    for (std::size_t i = 0; i < fam.size(); ++i) {
        std::vector<std::string> row{std::to_string(fam[i].a), fam[i].b.str(), std::to_string(fam[i].c),
                                     std::to_string(fam[i].d)};
        for (std::size_t k = 0; k < fs.size(); ++k) {
            std::string cell = family_cell(fam, i, fs[k]);
            // only vertices that survive the filters appear in a column
            bool kept = false;
            for (const auto& v : cols[k].vertices) kept = kept || v.str() == cell;
            row.push_back(kept ? cell : "");
        }
        t.rows.push_back(row);
    }
    return t;
}

Table theta_alpha_column_table(const ThetaAlphaColumn& col) {
    Table t{{"vertex", "degree", "arrangements"}, {}};
    for (const auto& s : col.vertices) {
        std::vector<std::string> arrs;
        for (const auto& a : col.arrangements.at(s)) arrs.push_back(a.str());
        t.rows.push_back({s.str(), std::to_string(s.degree()), join(arrs, "; ")});
    }
    return t;
}

Table avc_table(const Avc& avc) {
    Table t{{"vertex", "degree", "arrangements"}, {}};
    for (const auto& s : avc.signatures) {
        std::vector<std::string> arrs;
        if (auto it = avc.arrangements.find(s); it != avc.arrangements.end())
            for (const auto& a : it->second) arrs.push_back(a.str());
        t.rows.push_back({s.str(), std::to_string(s.degree()), join(arrs, "; ")});
    }
    return t;
}

Table propagation_figure(const PropagationTable& table) {
    Table t{{"type", "1", "2", "3", "4", "5"}, {}};
    for (const auto& [ty, row] : table.entries) {
        std::vector<std::string> r{type_label(ty)};
        for (const auto& cell : row) {
            std::vector<std::string> names;
            for (NbType x : cell) names.push_back(type_label(x));
            r.push_back(names.empty() ? "✗" : join(names, ", "));
        }
        t.rows.push_back(r);
    }
    return t;
}

Table labeling_table(EdgeCombo combo) {
    Table t{{"labeling", "edges", "completions", "P1-symmetric"}, {}};
    for (const auto& l : enumerate_edge_congruent(combo))
        t.rows.push_back({l.name, l.labels, std::to_string(l.completions.size()), l.p1_symmetric ? "yes" : "no"});
    return t;
}

Table survivor_table(const AngleTables& tables, int f) {
    Table t{{"labeling", "orientation", "outcome", "detail"}, {}};
    for (const auto& l : enumerate_edge_congruent(EdgeCombo::A3B2))
        for (const auto& b : solve_angle_assignment(l, f, tables)) {
            if (b.orbit != b.tiling.orientation_str()) continue;
            std::string outcome, detail;
            if (b.contradiction) {
                outcome = contradiction_name(b.contradiction->kind);
                detail = b.contradiction->detail;
            } else if (b.type) {
                outcome = type_label(*b.type) + (b.relabeled ? " (relabeled)" : "");
            } else {
                outcome = "unclassified";
            }
            t.rows.push_back({l.name, b.tiling.orientation_str(), outcome, detail});
        }
    return t;
}

Table certificate_table(const TheoremReport& r) {
    Table t{{"case", "f", "steps", "contradiction", "assumptions", "verified"}, {}};
    for (const auto& c : r.certificates) {
        std::vector<std::string> fs, names;
        for (int f : c.f_values) fs.push_back(std::to_string(f));
        for (const auto& a : c.assumptions) names.push_back(a.name);
        t.rows.push_back({c.case_id, join(fs, " "), std::to_string(c.steps.size()), c.contradiction,
                          join(names, "; "), c.verify(r.tolerance) ? "yes" : "no"});
    }
    return t;
}

std::string report_markdown(const TheoremReport& r) {
    std::ostringstream out;
    out << "# Theorem report\n\n" << r.verdict << "\n\n";
    out << render(certificate_table(r), OutputFormat::Markdown);
    for (const auto& c : r.certificates) {
        out << "\n## " << c.case_id << "\n\n";
        for (const auto& p : c.premises) out << "- " << p << '\n';
        out << '\n';
        Table steps{{"#", "step", "check", "ok"}, {}};
        for (std::size_t i = 0; i < c.steps.size(); ++i) {
            const Step& s = c.steps[i];
            std::string chk;
            switch (s.kind) {
                case Step::Kind::Exact:
                    chk = s.lhs.str() + " " + relation_str(s.rel) + " " + s.rhs.str();
                    break;
                case Step::Kind::Geometry: {
                    std::ostringstream g;
                    g.precision(17);
                    g << s.value << (s.near ? " ≈ " : " ≉ ") << s.expected << " (tol " << s.tolerance << ")";
                    chk = g.str();
                    break;
                }
                case Step::Kind::Combinatorial:
                    chk = s.holds ? "holds" : "fails";
                    break;
            }
            steps.rows.push_back({std::to_string(i), s.text, chk, s.verify(r.tolerance) ? "yes" : "no"});
        }
        out << render(steps, OutputFormat::Markdown);
        if (!c.assumptions.empty()) {
            out << "\nAssumptions:\n\n";
            for (const auto& a : c.assumptions) out << "- " << a.name << ": " << a.statement << '\n';
        }
        if (!c.auxiliary.empty()) {
            out << "\nValues:\n\n";
            for (const auto& [k, v] : c.auxiliary) out << "- " << k << " = " << v << '\n';
        }
        out << "\nContradiction: " << c.contradiction << '\n';
    }
    return out.str();
}

}  // namespace pentatile
