#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pentatile/certificate.hpp"
#include "pentatile/combinatorics.hpp"
#include "pentatile/neighborhood.hpp"

namespace pentatile {

// Even tile counts scanned wherever an argument is replayed f by f.
inline constexpr int kScanMin = 18;
inline constexpr int kScanMax = 100;

// ---- type II with θ₁ = α ---------------------------------------------------------

// coef * f + constant
struct AffineInF {
    Rational coef, constant;
    Rational at(int f) const { return coef * Rational(f) + constant; }
    // 0, 1, f/6, f/12-1, (f-12)/24
    std::string str() const;
    friend bool operator==(const AffineInF&, const AffineInF&) = default;
};

// Vertex α^a θ₂^b φ₁^c φ₂^d where a counts α and θ₁ together.
struct ThetaAlphaFamily {
    int a, c, d;
    AffineInF b;
    friend bool operator==(const ThetaAlphaFamily&, const ThetaAlphaFamily&) = default;
};

// Type II row with θ₁ pinned to α.
AngleSystem theta_alpha_system(const AngleTables& tables);

// Families with a ≥ 1 whose b is non-negative for some f ≥ 18, ordered by the
// f-slope of b and then by a descending.
std::vector<ThetaAlphaFamily> theta_alpha_family_table(const AngleSystem& sys);

// θ₁ folded into α: signature and arrangement forms.
VertexSignature merge_theta1(const VertexSignature& s);
VertexArrangement merge_theta1(const VertexArrangement& a);

struct ThetaAlphaColumn {
    int f = 0;
    Avc plain;                              // filtered AVC of the unmerged system
    std::vector<VertexSignature> vertices;  // merged, a ≥ 1
    ArrangementMap arrangements;            // merged, deduplicated
};
ThetaAlphaColumn theta_alpha_column(const AngleTables& tables, int f);
// f in [lo, hi] whose column holds more than α³ and αθ₂φ₂.
std::vector<int> theta_alpha_admissible_f(const AngleTables& tables, int lo = kScanMin, int hi = kScanMax);

// ---- eliminations ------------------------------------------------------------

std::vector<CaseCertificate> eliminate_III1(const AngleTables& tables);
std::vector<CaseCertificate> eliminate_III2_III3(const AngleTables& tables);
std::vector<CaseCertificate> eliminate_II_theta_eq_alpha(const AngleTables& tables);
std::vector<CaseCertificate> eliminate_II_general(const AngleTables& tables);

// ---- theorem report ----------------------------------------------------------

struct ReportFailure {
    std::string stage;        // e.g. "III2/avc", "certificate"
    std::string certificate;  // case id, empty when a stage threw
    int step = -1;            // failing step index, -1 when a stage threw
    std::string message;
    friend bool operator==(const ReportFailure&, const ReportFailure&) = default;
};

struct TheoremReport {
    bool ok = false;
    std::string verdict;
    double tolerance = 0;  // override passed to verify, 0 for stored tolerances
    std::vector<CaseCertificate> certificates;
    std::optional<ReportFailure> failure;
};

inline constexpr const char* kVerdictOk = "theorem verified at stated tolerances";

// Runs every stage in order and stops at the first exception or failing step.
TheoremReport full_theorem_report(const AngleTables& tables = AngleTables::standard(), double tolerance = 0);

// Versioned JSON ("schema": 1).
std::string report_to_json(const TheoremReport& r, int indent = 2);
TheoremReport report_from_json(const std::string& text);
std::string certificate_to_json(const CaseCertificate& c, int indent = 2);

}  // namespace pentatile
