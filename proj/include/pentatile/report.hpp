#pragma once

#include <string>
#include <vector>

#include "pentatile/cases.hpp"
#include "pentatile/combinatorics.hpp"
#include "pentatile/neighborhood.hpp"

namespace pentatile {

enum class OutputFormat { Csv, Json, Markdown };
// csv, json, markdown (md). Throws std::invalid_argument otherwise.
OutputFormat parse_format(const std::string& s);

struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

// CSV: comma separated, quotes doubled, LF line ends. JSON: array of objects
// keyed by the header in column order. Markdown: pipe table.
std::string render(const Table& t, OutputFormat fmt);

// (5/6 - 2/f)π, 2/3 π
std::string fangle_pi(const FAngle& x);

// Table 1: the four angle rows.
Table angle_table(const AngleTables& tables);
// Table 2: α^a θ₁^b₁ θ₂^b₂ φ₁^c₁ φ₂^c₂ families for the III₂ row.
Table family_table(const AngleSystem& iii2);
// Table 3: θ₁ = α families with the f = 24, 36, 60 columns.
Table theta_alpha_table(const AngleTables& tables);
Table theta_alpha_column_table(const ThetaAlphaColumn& col);
// One row per vertex: signature, degree, angle sum check, arrangements.
Table avc_table(const Avc& avc);
// Figure 7: positions 1..5 for each type, ✗ when empty.
Table propagation_figure(const PropagationTable& table);
Table labeling_table(EdgeCombo combo);
Table survivor_table(const AngleTables& tables, int f);
// One row per certificate.
Table certificate_table(const TheoremReport& r);
// Certificates with every step, as markdown.
std::string report_markdown(const TheoremReport& r);

}  // namespace pentatile
