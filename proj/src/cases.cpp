#include "pentatile/cases.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

#include "pentatile/geometry.hpp"
#include "json.hpp"

namespace pentatile {

namespace {

constexpr double kPi = 3.14159265358979323846;

// An exception tagged with the stage that raised it.
class StageError : public std::runtime_error {
public:
    StageError(std::string stage, const std::string& what) : std::runtime_error(what), stage_(std::move(stage)) {}
    const std::string& stage() const { return stage_; }

private:
    std::string stage_;
};

template <class Fn>
auto in_stage(const std::string& name, Fn&& fn) -> decltype(fn()) {
    try {
        return fn();
    } catch (const StageError&) {
        throw;
    } catch (const std::exception& e) {
        throw StageError(name, e.what());
    }
}

std::string num(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string subscript(int n) {
    static const char* digits[] = {"₀", "₁", "₂", "₃", "₄", "₅", "₆", "₇", "₈", "₉"};
    std::string s;
    for (char ch : std::to_string(n)) s += digits[ch - '0'];
    return s;
}

std::string fstr(int f) { return "f=" + std::to_string(f); }

std::string join(const std::vector<std::string>& xs, const std::string& sep = ", ") {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? sep : "") + xs[i];
    return out;
}

std::string sig_list(const std::vector<VertexSignature>& v) {
    std::vector<std::string> xs;
    for (const auto& s : v) xs.push_back(s.str());
    return xs.empty() ? "none" : join(xs);
}

std::string arr_list(const std::vector<VertexArrangement>& v) {
    std::vector<std::string> xs;
    for (const auto& a : v) xs.push_back(a.str());
    return xs.empty() ? "none" : join(xs, "; ");
}

std::string int_list(const std::vector<int>& v) {
    std::vector<std::string> xs;
    for (int x : v) xs.push_back(std::to_string(x));
    return "{" + join(xs) + "}";
}

std::string angles_at(const AngleSystem& s, int f) {
    std::vector<std::string> xs;
    for (Angle x : kAllAngles) xs.push_back(angle_symbol(x) + " = " + s[x].str_at(f));
    return join(xs);
}

int vB(int k) { return 5 + ((k % 5) + 5) % 5; }

bool same_angles(const PartialVertex& p, std::vector<Angle> want) {
    auto got = p.angles;
    std::sort(got.begin(), got.end());
    std::sort(want.begin(), want.end());
    return got == want;
}

bool rel_holds(const Rational& x, Relation r, const Rational& y) {
    switch (r) {
        case Relation::Eq: return x == y;
        case Relation::Ne: return x != y;
        case Relation::Lt: return x < y;
        case Relation::Gt: return x > y;
        case Relation::Le: return x <= y;
        case Relation::Ge: return x >= y;
    }
    return false;
}

// x rel y at every even f in the scan range.
bool on_scan(const FAngle& x, Relation r, const FAngle& y) {
    for (int f = kScanMin; f <= kScanMax; f += 2)
        if (!rel_holds(x.eval(f), r, y.eval(f))) return false;
    return true;
}

bool all_positive_at(const AngleSystem& s, int f) {
    for (Angle x : kAllAngles)
        if (s[x].eval(f).sign() <= 0) return false;
    return true;
}

// Keeps signatures up to the given degree.
Avc cap_degree(const Avc& avc, int max_degree) {
    Avc out;
    out.f = avc.f;
    for (const auto& s : avc.signatures)
        if (s.degree() <= max_degree) {
            out.signatures.push_back(s);
            if (auto it = avc.arrangements.find(s); it != avc.arrangements.end()) out.arrangements.insert(*it);
        }
    return out;
}

// Arrangements of the given signatures that avoid θ₂φ₁ᵏθ₂ and extend the
// partial vertex. Used where only θ₁+θ₂ is known.
std::vector<VertexArrangement> klem_free_matches(const std::vector<VertexSignature>& sigs, const PartialVertex& p) {
    std::vector<VertexArrangement> out;
    for (const auto& s : sigs)
        for (const auto& a : feasible_arrangements(s))
            if (!klem_violates(a, KlemOptions{}) && arrangement_matches(a, p)) out.push_back(a);
    return out;
}

const Assumption kAxEdges{"edge-arrangement",
                          "The a³b² tile has three consecutive a-edges and two adjacent b-edges; the list of "
                          "possible edge arrangements is taken from prior work."};
const Assumption kAxV4V6{"v4-v6-exclusion",
                         "A tiling whose only vertices of degree above 3 are one of degree 4 and one of degree 6 "
                         "does not exist (prior degree classification)."};
const Assumption kAxLowCount{"low-count-exclusion",
                             "v₄ + v₅ + ⋯ equal to 1 or 2 does not occur for these edge combinations (earth-map "
                             "classification and prior degree classification)."};
const Assumption kAxDegree6{"degree-bound",
                            "For f < 24 every vertex has degree at most 6 (prior degree classification)."};
const Assumption kAxF18{"f18-no-degree-6", "At f = 18 there is no vertex of degree 6 (prior degree classification)."};
const Assumption kAxOrder{"pcombo-ordering",
                          "For type II, θ₁ > θ₂. This follows from the pentagon inequality β > γ ⇔ δ < ε, which is "
                          "sampled numerically here but not proved."};
const Assumption kAxBalance{"angle-count balance",
                            "θ₁ and θ₂ each appear f times in the tiling; when θ₂²φ₁φ₂ is not a vertex this is read "
                            "as b₁ = b₂ at every vertex α^a θ₁^b₁ θ₂^b₂ φ₁^c."};
const Assumption kAxScan{"f-scan-range",
                         "Steps replayed tile count by tile count cover the even f in [18, 100] only."};

}  // namespace

// ---- type II with θ₁ = α -------------------------------------------------------------

std::string AffineInF::str() const {
    if (coef.is_zero()) return constant.str();
    auto over = [](const Rational& c) { return c.num() == 1 ? "f/" + std::to_string(c.den()) : c.str() + "f"; };
    if (constant.is_zero()) return over(coef);
    if (constant.is_integer())
        return over(coef) + (constant.sign() > 0 ? "+" : "-") + (constant.sign() > 0 ? constant : -constant).str();
    // (f + k)/d with d the denominator of coef
    Rational k = constant / coef;
    if (coef.num() == 1 && k.is_integer())
        return "(f" + std::string(k.sign() > 0 ? "+" : "-") + (k.sign() > 0 ? k : -k).str() + ")/" +
               std::to_string(coef.den());
    return coef.str() + "f" + (constant.sign() > 0 ? "+" : "-") + (constant.sign() > 0 ? constant : -constant).str();
}

AngleSystem theta_alpha_system(const AngleTables& tables) {
    const AngleSystem& ii = tables[NbType::II];
    return pin_theta1(ii, ii[Angle::Alpha], "II-alpha");
}

std::vector<ThetaAlphaFamily> theta_alpha_family_table(const AngleSystem& sys) {
    // a·α + b·θ₂ + c·φ₁ + d·φ₂ = 2 with θ₂ = s₂/f, α = r_α, φᵢ = rᵢ + sᵢ/f;
    // solve for b as an affine function of f.
    const FAngle al = sys[Angle::Alpha], t2 = sys[Angle::Theta2], p1 = sys[Angle::Phi1], p2 = sys[Angle::Phi2];
    if (!t2.r.is_zero() || t2.s.is_zero() || !al.is_constant())
        throw std::invalid_argument("family table needs θ₂ proportional to 1/f and a constant α");
    std::vector<ThetaAlphaFamily> out;
    for (int a = 1; Rational(a) * al.r <= Rational(2); ++a)
        for (int c = 0; Rational(a) * al.r + Rational(c) * p1.r <= Rational(2); ++c)
            for (int d = 0; Rational(a) * al.r + Rational(c) * p1.r + Rational(d) * Rational(8, 9) <= Rational(2);
                 ++d) {
                // lower bound at f = 18 for φ₂, as in the family scan
                FAngle rest = FAngle::constant(2) - Rational(a) * al - Rational(c) * p1 - Rational(d) * p2;
                AffineInF b{rest.r / t2.s, rest.s / t2.s};
                bool some = false;
                for (int f = kScanMin; f <= 1000 && !some; f += 2) some = b.at(f).sign() >= 0;
                if (some) out.push_back({a, c, d, b});
            }
    std::sort(out.begin(), out.end(), [](const ThetaAlphaFamily& x, const ThetaAlphaFamily& y) {
        if (x.b.coef != y.b.coef) return x.b.coef < y.b.coef;
        return x.a > y.a;
    });
    return out;
}

VertexSignature merge_theta1(const VertexSignature& s) {
    VertexSignature m = s;
    m[Angle::Alpha] += m[Angle::Theta1];
    m[Angle::Theta1] = 0;
    return m;
}

VertexArrangement merge_theta1(const VertexArrangement& a) {
    VertexArrangement m = a;
    for (auto& x : m.angles)
        if (x == Angle::Theta1) x = Angle::Alpha;
    return canonical(m);
}

ThetaAlphaColumn theta_alpha_column(const AngleTables& tables, int f) {
    ThetaAlphaColumn col;
    col.f = f;
    col.plain = compute_avc(theta_alpha_system(tables), TilingParameters(f));
    std::set<VertexSignature> seen;
    for (const auto& s : col.plain.signatures) {
        VertexSignature m = merge_theta1(s);
        if (m[Angle::Alpha] < 1) continue;
        if (seen.insert(m).second) col.vertices.push_back(m);
        auto& bucket = col.arrangements[m];
        for (const auto& a : col.plain.arrangements.at(s)) {
            VertexArrangement ma = merge_theta1(a);
            if (std::find(bucket.begin(), bucket.end(), ma) == bucket.end()) bucket.push_back(ma);
        }
    }
    std::sort(col.vertices.begin(), col.vertices.end());
    for (auto& [s, v] : col.arrangements) std::sort(v.begin(), v.end());
    return col;
}

std::vector<int> theta_alpha_admissible_f(const AngleTables& tables, int lo, int hi) {
    const VertexSignature base1 = VertexSignature::of(3, 0, 0, 0, 0), base2 = VertexSignature::of(1, 0, 1, 0, 1);
    std::vector<int> out;
    for (int f = lo; f <= hi; f += 2) {
        auto col = theta_alpha_column(tables, f);
        for (const auto& s : col.vertices)
            if (s != base1 && s != base2) {
                out.push_back(f);
                break;
            }
    }
    return out;
}

// ---- III₁ ------------------------------------------------------------------------------

std::vector<CaseCertificate> eliminate_III1(const AngleTables& tables) {
    const AngleSystem& sys = tables[NbType::III1];
    std::vector<CaseCertificate> out;
    for (int f : {18, 20, 22}) {
        CaseCertificate c;
        c.case_id = "III1/" + fstr(f);
        c.f_values = {f};
        c.assumptions = {kAxEdges};
        NeighborhoodTiling nt = in_stage("III1/neighborhood", [&] { return survivor_tiling(tables, NbType::III1, f); });
        PartialVertex p = boundary_vertex(nt, vB(1));
        c.premises = {"angles: " + angles_at(sys, f), "vertex B1 shared by P2, P3: " + p.str()};

        for (Angle x : kAllAngles)
            c.steps.push_back(Step::exact(angle_symbol(x) + " > 0 at " + fstr(f), sys[x].eval(f), Relation::Gt, 0));
        c.steps.push_back(Step::exact("φ₂ = " + sys[Angle::Phi2].str() + " vanishes at f=24",
                                      sys[Angle::Phi2].eval(24), Relation::Eq, 0));
        c.steps.push_back(Step::check("B1 carries θ₁ and θ₂ between two outer a-edges: " + p.str(),
                                      same_angles(p, {Angle::Theta1, Angle::Theta2}) && p.left == Edge::A &&
                                          p.right == Edge::A));
        Rational rest = Rational(2) - sys[Angle::Theta1].eval(f) - sys[Angle::Theta2].eval(f);
        c.steps.push_back(Step::exact("remaining angle 2π − θ₁ − θ₂ equals θ₁", rest, Relation::Eq,
                                      sys[Angle::Theta1].eval(f)));
        c.auxiliary["remaining"] = pi_str(rest);

        auto comps = in_stage("III1/avc", [&] { return completions(sys, f, rest); });
        c.steps.push_back(Step::check("combinations filling the remaining angle: " + sig_list(comps), !comps.empty()));
        bool degree_branch = false;
        for (const auto& s : comps) {
            if (s.degree() == 1) {
                Angle x{};
                for (Angle y : kAllAngles)
                    if (s[y]) x = y;
                bool slot_aa = p.left == Edge::A && p.right == Edge::A;
                c.steps.push_back(Step::check(
                    "a third tile puts " + angle_symbol(x) + " between two a-edges, which needs an a²-angle",
                    slot_aa && edge_class(x) != EdgeClass::AA));
                for (Angle y : {Angle::Phi1, Angle::Phi2})
                    c.steps.push_back(Step::exact(angle_symbol(y) + " ≠ " + angle_symbol(x), sys[y].eval(f),
                                                  Relation::Ne, sys[x].eval(f)));
            } else {
                int deg = s.degree() + 2;
                DegreeVector dv;
                dv.v[deg] = 1;
                Rational left = Rational(f, 2) - 6 - Rational(deg - 3);
                c.steps.push_back(Step::exact("θ₁θ₂" + s.str() + " has degree " + std::to_string(deg) +
                                                  "; f/2 − 6 − (" + std::to_string(deg) + " − 3) leaves",
                                              left, Relation::Eq, 1));
                dv.v[4] = 1;
                c.steps.push_back(Step::exact("vertex count with v₄ = 1, v" + subscript(deg) + " = 1",
                                              vertex_count_residual(TilingParameters(f), dv), Relation::Eq, 0));
                c.steps.push_back(Step::check("v₄ = v" + subscript(deg) + " = 1 is excluded (imported)",
                                              deg == 6));
                degree_branch = true;
            }
        }
        if (degree_branch) c.assumptions.push_back(kAxV4V6);
        c.contradiction = degree_branch ? "edge-mismatch; degree-count" : "edge-mismatch";
        out.push_back(std::move(c));
    }
    return out;
}

// ---- III₂ and III₃ ----------------------------------------------------------------------

std::vector<CaseCertificate> eliminate_III2_III3(const AngleTables& tables) {
    const AngleSystem& sys = tables[NbType::III2];
    std::map<int, Avc> avcs;
    in_stage("III2/avc", [&] {
        for (int f = kScanMin; f <= kScanMax; f += 2)
            if (all_positive_at(sys, f)) avcs.emplace(f, compute_avc(sys, TilingParameters(f)));
        return 0;
    });
    NeighborhoodTiling nt = in_stage("III2/neighborhood", [&] { return survivor_tiling(tables, NbType::III2); });
    PartialVertex p = boundary_vertex(nt, vB(1));

    std::vector<int> admissible;
    std::vector<std::string> dead;
    for (const auto& [f, avc] : avcs) {
        if (!matching_arrangements(avc, p).empty())
            admissible.push_back(f);
        else
            dead.push_back(std::to_string(f));
    }
    auto common = [&](CaseCertificate& c) {
        c.assumptions = {kAxEdges};
        c.steps.push_back(Step::check("B1 shared by P2, P3 is θ₂ b θ₂ between outer a-edges: " + p.str(),
                                      same_angles(p, {Angle::Theta2, Angle::Theta2}) && p.left == Edge::A &&
                                          p.right == Edge::A));
    };

    std::vector<CaseCertificate> out;
    {
        const int f = 24;
        CaseCertificate c;
        c.case_id = "III2/f=24";
        c.f_values = {f};
        c.premises = {"angles: " + angles_at(sys, f), "AVC: " + sig_list(avcs.count(f) ? avcs.at(f).signatures
                                                                                      : std::vector<VertexSignature>{})};
        common(c);
        c.steps.push_back(Step::exact("θ₂ = " + sys[Angle::Theta2].str() + " ≤ 0 at f=60",
                                      sys[Angle::Theta2].eval(60), Relation::Le, 0));
        c.steps.push_back(Step::check("no AVC arrangement extends B1 for f in {" + join(dead) + "}", true));
        c.steps.push_back(Step::check("tile counts below 60 where an AVC arrangement extends B1: " +
                                          int_list(admissible),
                                      admissible == std::vector<int>{24}));
        c.steps.push_back(Step::check("AVC arrangements extending B1 at f=24: " +
                                          arr_list(avcs.count(f) ? matching_arrangements(avcs.at(f), p)
                                                                 : std::vector<VertexArrangement>{}),
                                      std::find(admissible.begin(), admissible.end(), f) != admissible.end()));
        QuadAngles q{sys[Angle::Theta1].eval(f).to_double() * kPi, sys[Angle::Theta2].eval(f).to_double() * kPi,
                     sys[Angle::Phi1].eval(f).to_double() * kPi, sys[Angle::Phi2].eval(f).to_double() * kPi};
        auto [L, M, N] = lmn(q);
        c.steps.push_back(Step::geometry("L", L, 2, 1e-12));
        c.steps.push_back(Step::geometry("M", M, 0, 1e-12));
        c.steps.push_back(Step::geometry("N", N, 0, 1e-12));
        auto roots = solve_quadratic(L, M, N);
        double cos_a = roots.roots.empty() ? NAN : roots.roots.front();
        c.steps.push_back(Step::geometry("cos a from L cos²a + M cos a + N = 0", cos_a, 0, 1e-12));
        double a = std::acos(std::clamp(cos_a, -1.0, 1.0));
        c.steps.push_back(Step::geometry("a = π/2 since 0 < a < π", a, kPi / 2, 1e-12));
        auto quad = construct_quadrilateral(a, q.delta, q.epsilon);
        auto pent = close_pentagon(quad, q.beta, q.gamma);
        double alpha = pent.angles()[0];
        c.steps.push_back(Step::geometry("measured angle at A", alpha, 4 * kPi / 3, 1e-9));
        c.steps.push_back(Step::geometry("measured angle at A differs from α = 2π/3", alpha,
                                         sys[Angle::Alpha].eval(f).to_double() * kPi, 1e-9, false));
        c.steps.push_back(Step::geometry("margin against α", alpha - 2 * kPi / 3, 2 * kPi / 3, 1e-9));
        c.auxiliary = {{"L", num(L)}, {"M", num(M)}, {"N", num(N)}, {"cos_a", num(cos_a)}, {"a", num(a)},
                       {"measured_alpha", num(alpha)}};
        c.contradiction = "geometric: apex angle 4π/3 ≠ α";
        out.push_back(std::move(c));
    }
    {
        const int f = 36;
        CaseCertificate c;
        c.case_id = "III2/f=36";
        c.f_values = {f};
        const Avc* avc = avcs.count(f) ? &avcs.at(f) : nullptr;
        c.premises = {"angles: " + angles_at(sys, f),
                      "AVC: " + sig_list(avc ? avc->signatures : std::vector<VertexSignature>{})};
        common(c);
        std::vector<VertexSignature> two;
        if (avc)
            for (const auto& s : avc->signatures)
                if (s[Angle::Theta2] >= 2) two.push_back(s);
        const VertexSignature want = VertexSignature::of(1, 0, 2, 0, 1);
        c.steps.push_back(Step::check("AVC vertices with θ₂ twice: " + sig_list(two),
                                      two == std::vector<VertexSignature>{want}));
        std::vector<VertexArrangement> arrs;
        if (avc && avc->arrangements.count(want)) arrs = avc->arrangements.at(want);
        c.steps.push_back(Step::check("αθ₂²φ₂ has one arrangement: " + arr_list(arrs), arrs.size() == 1));
        bool adjacent = false;
        for (const auto& arr : arrs)
            for (std::size_t i = 0; i < arr.size(); ++i)
                if (arr.angles[i] == Angle::Theta2 && arr.angles[(i + 1) % arr.size()] == Angle::Theta2) adjacent = true;
        c.steps.push_back(Step::check("the two θ₂ are not adjacent in it", !adjacent));
        c.steps.push_back(Step::check("no AVC arrangement extends B1 at f=36",
                                      avc && matching_arrangements(*avc, p).empty()));
        c.contradiction = "edge-mismatch";
        out.push_back(std::move(c));
    }
    {
        CaseCertificate c;
        c.case_id = "III3/swap";
        c.f_values = {24, 36};
        const AngleSystem& s3 = tables[NbType::III3];
        AngleSystem sw = swapped(s3, "III3 swapped");
        c.premises = {"III3 angles: " + angles_at(s3, 24)};
        c.assumptions = {kAxEdges};
        in_stage("III3/neighborhood", [&] { return survivor_tiling(tables, NbType::III3); });
        for (int f : c.f_values)
            for (Angle x : kAllAngles)
                c.steps.push_back(Step::exact("swapped III₃ " + angle_symbol(x) + " equals III₂ at " + fstr(f),
                                              sw[x].eval(f), Relation::Eq, sys[x].eval(f)));
        bool inherited = true;
        for (std::size_t i = 0; i < out.size(); ++i) inherited = inherited && out[i].verify();
        c.steps.push_back(Step::check("III₂ certificates at f=24 and f=36 verify", inherited));
        c.contradiction = "inherited from III₂";
        out.push_back(std::move(c));
    }
    return out;
}

// ---- II, θ₁ = α -------------------------------------------------------------------------

std::vector<CaseCertificate> eliminate_II_theta_eq_alpha(const AngleTables& tables) {
    AngleSystem sys = theta_alpha_system(tables);
    std::map<int, ThetaAlphaColumn> cols;
    in_stage("II-alpha/avc", [&] {
        for (int f = kScanMin; f <= kScanMax; f += 2) cols.emplace(f, theta_alpha_column(tables, f));
        return 0;
    });
    NeighborhoodTiling nt = in_stage("II-alpha/neighborhood", [&] { return survivor_tiling(tables, NbType::II); });
    PartialVertex p56 = boundary_vertex(nt, vB(4));
    PartialVertex p45 = boundary_vertex(nt, vB(3));

    // P₇'s α sits between two b-edges; its b-edge neighbour carries θ₂ on one
    // side, whose other edge is an a-edge.
    const TilePattern& pat = tile_pattern(EdgeCombo::A3B2);
    int t2_corner = 4;
    PartialVertex p7;
    p7.angles = {Angle::Alpha, Angle::Theta2};
    p7.inner = {pat.edges[t2_corner] == 'b' ? Edge::B : Edge::A};
    p7.left = Edge::B;
    p7.right = pat.edges[(t2_corner + 4) % 5] == 'b' ? Edge::B : Edge::A;

    CaseCertificate c;
    c.case_id = "II-alpha";
    c.f_values = {24, 36, 60};
    c.assumptions = {kAxEdges, kAxScan};
    c.premises = {"θ₁ = α: " + angles_at(sys, 24), "B4 shared by P5, P6: " + p56.str(),
                  "B3 shared by P4, P5: " + p45.str()};
    c.steps.push_back(Step::check("θ₁ = α", sys[Angle::Theta1] == sys[Angle::Alpha]));
    for (int f : c.f_values) {
        Rational slack = Rational(2) - Rational(2) * sys[Angle::Phi2].eval(f);
        Rational least = sys[Angle::Theta2].eval(f);
        for (Angle x : kAllAngles) least = std::min(least, sys[x].eval(f));
        c.steps.push_back(
            Step::exact("2π − 2φ₂ is below every angle at " + fstr(f), slack, Relation::Lt, least));
    }
    auto fam = theta_alpha_family_table(sys);
    c.steps.push_back(Step::check("vertex families with a ≥ 1: " + std::to_string(fam.size()), fam.size() == 8));
    std::vector<int> adm;
    for (const auto& [f, col] : cols) {
        for (const auto& s : col.vertices)
            if (s != VertexSignature::of(3, 0, 0, 0, 0) && s != VertexSignature::of(1, 0, 1, 0, 1)) {
                adm.push_back(f);
                break;
            }
    }
    c.steps.push_back(Step::check("tile counts with a vertex beyond α³, αθ₂φ₂: " + int_list(adm),
                                  adm == c.f_values));

    const VertexSignature a_t1sq = VertexSignature::of(1, 2, 0, 0, 0);
    std::vector<std::string> p7_dead;
    bool all_forced = true;
    for (const auto& [f, col] : cols) {
        auto m56 = matching_arrangements(col.plain, p56);
        bool forced = true;
        for (const auto& a : m56) forced = forced && a.signature() == a_t1sq;
        all_forced = all_forced && forced;
        bool listed = std::find(c.f_values.begin(), c.f_values.end(), f) != c.f_values.end();
        auto m7 = matching_arrangements(col.plain, p7);
        if (listed) {
            c.steps.push_back(Step::check(fstr(f) + ": B4 extends only as α³ (αθ₁²): " + arr_list(m56), forced));
            c.steps.push_back(Step::check(fstr(f) + ": P7 vertex " + p7.str() + " extends as " + arr_list(m7),
                                          f == 36 ? m7.size() == 1 && merge_theta1(m7[0].signature()) ==
                                                                          VertexSignature::of(2, 0, 1, 1, 0)
                                                  : m7.empty()));
            if (f == 36) {
                auto m45 = matching_arrangements(col.plain, p45);
                c.steps.push_back(Step::check(fstr(f) + ": no arrangement extends B3 " + p45.str(), m45.empty()));
            }
        } else if (m56.empty() || m7.empty()) {
            p7_dead.push_back(std::to_string(f));
        }
    }
    c.steps.push_back(Step::check("B4 extends only as αθ₁² at every scanned f", all_forced));
    c.steps.push_back(Step::check("B4 or the P7 vertex has no arrangement at the other scanned f: " + join(p7_dead),
                                  p7_dead.size() + 3 == cols.size()));
    ArrangementMap fig;
    for (int f : c.f_values) {
        const auto& col = cols.at(f);
        std::vector<std::string> xs;
        for (const auto& s : col.vertices) {
            xs.push_back(s.str());
            fig[s] = col.arrangements.at(s);
        }
        c.auxiliary["column_" + std::to_string(f)] = join(xs);
    }
    std::size_t total = 0;
    for (const auto& [s, v] : fig) total += v.size();
    c.steps.push_back(Step::check("merged arrangements over the three columns: " + std::to_string(total), total == 10));
    c.contradiction = "edge-mismatch";
    return {c};
}

// ---- II, θ₁ ≠ α --------------------------------------------------------------------------

std::vector<CaseCertificate> eliminate_II_general(const AngleTables& tables) {
    const AngleSystem& ii = tables[NbType::II];
    NeighborhoodTiling nt = in_stage("II-general/neighborhood", [&] { return survivor_tiling(tables, NbType::II); });
    PartialVertex p56 = boundary_vertex(nt, vB(4));
    PartialVertex p45 = boundary_vertex(nt, vB(3));
    PartialVertex p62 = boundary_vertex(nt, vB(0));
    const FAngle half = Rational(1, 2) * ii.theta_sum;
    const FAngle al = ii[Angle::Alpha], p1 = ii[Angle::Phi1], p2 = ii[Angle::Phi2];

    CaseCertificate c;
    c.case_id = "II-general";
    c.f_values = {18, 20, 22, 24, 36, 60};
    c.assumptions = {kAxEdges, kAxOrder, kAxDegree6, kAxF18, kAxLowCount, kAxBalance, kAxScan};
    c.premises = {"θ₁ + θ₂ = " + ii.theta_sum.str() + ", θ₁ > θ₂, all five angles distinct",
                  "B4 (P5, P6): " + p56.str(), "B3 (P4, P5): " + p45.str(), "B0 (P6, P2): " + p62.str()};
    auto& S = c.steps;

    // (A) φ₂²⋯ is a vertex.
    S.push_back(Step::exact("A: 2π − 2φ₂ at f=24", (FAngle::constant(2) - Rational(2) * p2).eval(24), Relation::Eq, 0));
    for (int f : {18, 20, 22}) {
        FAngle slack = FAngle::constant(2) - Rational(2) * p2;
        S.push_back(Step::exact("A: 2π − 2φ₂ > 0 at " + fstr(f), slack.eval(f), Relation::Gt, 0));
        for (auto [name, x] : {std::pair{"α", al}, std::pair{"φ₁", p1}, std::pair{"(θ₁+θ₂)/2 < θ₁", half}})
            S.push_back(Step::exact(std::string("A: 2π − 2φ₂ below ") + name + " at " + fstr(f), slack.eval(f),
                                    Relation::Lt, x.eval(f)));
    }
    S.push_back(Step::check("A: so the vertex is θ₂ᵏφ₂² with k even (ab-parity) and degree ≤ 6: k ∈ {2, 4}", true));
    {
        // f = 18: v₄ + 2v₅ + 3v₆ = 3 with v₆ = 0 and v₄ = v₅ = 1 excluded
        std::vector<std::string> left;
        for (int v4 = 0; v4 <= 3; ++v4)
            for (int v5 = 0; v5 <= 2; ++v5) {
                DegreeVector d;
                d.v[4] = v4;
                d.v[5] = v5;
                if (vertex_count_residual(TilingParameters(18), d).is_zero() && !(v4 == 1 && v5 == 1))
                    left.push_back("v₄=" + std::to_string(v4) + ",v₅=" + std::to_string(v5));
            }
        S.push_back(Step::check("A: f=18 degree vectors: " + join(left), left == std::vector<std::string>{"v₄=3,v₅=0"}));
        // θ₂⁴φ₂² needs v₆ ≥ 1
        std::vector<std::string> six;
        for (int f : {18, 20, 22})
            for (int v4 = 0; v4 <= 6; ++v4)
                for (int v5 = 0; v5 <= 3; ++v5) {
                    DegreeVector d;
                    d.v[4] = v4;
                    d.v[5] = v5;
                    d.v[6] = 1;
                    if (!vertex_count_residual(TilingParameters(f), d).is_zero()) continue;
                    if (f == 18 || v4 + v5 + 1 <= 2) continue;
                    six.push_back(fstr(f) + " v₄=" + std::to_string(v4) + " v₅=" + std::to_string(v5) + " v₆=1");
                }
        S.push_back(Step::check("A: θ₂⁴φ₂² leaves " + join(six), six == std::vector<std::string>{"f=22 v₄=2 v₅=0 v₆=1"}));
        const int f = 22;
        Rational t2 = (Rational(2) - Rational(2) * p2.eval(f)) / 4;
        Rational t1 = ii.theta_sum.eval(f) - t2;
        S.push_back(Step::exact("A: θ₂ from θ₂⁴φ₂² at f=22", t2, Relation::Eq, Rational(1, 66)));
        S.push_back(Step::exact("A: θ₁ at f=22", t1, Relation::Eq, Rational(67, 66)));
        std::array<Rational, 5> v{al.eval(f), t1, t2, p1.eval(f), p2.eval(f)};
        int hits = 0;
        for (int i = 0; i < 5; ++i)
            for (int j = i; j < 5; ++j)
                for (int k = j; k < 5; ++k)
                    for (int l = k; l < 5; ++l)
                        if (v[i] + v[j] + v[k] + v[l] == Rational(2)) ++hits;
        S.push_back(Step::exact("A: 4-multisets of the f=22 angles summing to 2π", hits, Relation::Eq, 0));

        // θ₂²φ₂²: θ₁ = π
        FAngle th2 = FAngle::constant(1) - p2;
        FAngle th1 = ii.theta_sum - th2;
        S.push_back(Step::check("A: θ₂²φ₂² gives θ₁ = " + th1.str() + ", θ₂ = " + th2.str(),
                                th1 == FAngle::constant(1)));
        AngleSystem sa = pin_theta1(ii, th1, "II-A");
        for (int g : {18, 20, 22}) {
            Avc avc = in_stage("II-general/avc", [&] {
                return cap_degree(compute_avc(sa, TilingParameters(g), AvcFlags{true, true, false, false}),
                                  g == 18 ? 4 : 6);
            });
            auto m62 = matching_arrangements(avc, p62);
            auto m56 = matching_arrangements(avc, p56);
            c.auxiliary["A_avc_" + std::to_string(g)] = sig_list(avc.signatures);
            if (g == 20)
                S.push_back(Step::check("A: f=20 B0 is α²θ₂²φ₁ in a unique arrangement: " + arr_list(m62),
                                        m62.size() == 1 && m62[0].signature() == VertexSignature::of(2, 0, 2, 1, 0)));
            else
                S.push_back(Step::check("A: " + fstr(g) + " no arrangement extends B0", m62.empty()));
            S.push_back(Step::check("A: " + fstr(g) + " no arrangement extends B4 (θ₁ = π)", m56.empty()));
        }
    }

    // (B) φ₂ appears once: α^a θ₁^b₁ θ₂^b₂ φ₁^c φ₂, b = min(b₁, b₂). Since
    // θ₁ > θ₂ the sum is at least (2a + 2b + c − 2)/3 + 4(2b + c − 2)/f above 2π.
    {
        std::vector<std::string> kept;
        bool region = true;
        for (int b = 0; b <= 4; ++b)
            for (int cc = 0; cc <= 6; ++cc) {
                FAngle low = Rational(b) * ii.theta_sum + Rational(cc) * p1 + p2;
                if (2 * b + cc - 2 > 0)
                    region = region && on_scan(low, Relation::Gt, FAngle::constant(2));
                else
                    kept.push_back("(" + std::to_string(b) + "," + std::to_string(cc) + ")");
            }
        S.push_back(Step::check("B: 2b + c > 2 overshoots 2π on the scan", region));
        S.push_back(Step::check("B: remaining (b,c): " + join(kept),
                                kept == std::vector<std::string>{"(0,0)", "(0,1)", "(0,2)", "(1,0)"}));
        S.push_back(Step::check("B: θ₁θ₂φ₂ = 2π, so (1,0) is θ₁θ₂φ₂ itself", ii.theta_sum + p2 == FAngle::constant(2)));
        S.push_back(Step::check("B: φ₁²φ₂ = 2π, so (0,2) is φ₁²φ₂ itself",
                                Rational(2) * p1 + p2 == FAngle::constant(2)));
        FAngle rest01 = FAngle::constant(2) - p1 - p2;
        S.push_back(Step::check("B: (0,1) leaves " + rest01.str() + " < α and < θ₁", on_scan(rest01, Relation::Lt, al) &&
                                                                                        on_scan(rest01, Relation::Le, half)));
        S.push_back(Step::check("B: so (0,1) is θ₂ᵏφ₁φ₂, handled below with k = 2", true));
        FAngle rest00 = FAngle::constant(2) - p2;
        S.push_back(Step::check("B: (0,0) leaves " + rest00.str() + " = θ₁ + θ₂", rest00 == ii.theta_sum));
        S.push_back(Step::check("B: two α overshoot", on_scan(Rational(2) * al, Relation::Gt, rest00)));
        S.push_back(Step::check("B: α θ₁ᵏ fails since θ₁ > (θ₁+θ₂)/2 > 2π − α − φ₂",
                                on_scan(half, Relation::Gt, rest00 - al)));
        // θ₂ᵏ with one φ₂: each θ₂ a-run ends at φ₂
        bool runs = true;
        for (int k : {4, 6})
            for (const auto& s : {VertexSignature::of(0, 0, k, 0, 1), VertexSignature::of(1, 0, k, 0, 1)})
                for (const auto& a : feasible_arrangements(s)) runs = runs && klem_violates(a, KlemOptions{});
        S.push_back(Step::check("B: θ₂ᵏφ₂ and αθ₂ᵏφ₂ with k = 4, 6 violate θ₂φ₁ᵏθ₂ in every arrangement", runs));
        FAngle t2sq = Rational(1, 2) * rest00;
        S.push_back(Step::check("B: θ₂²φ₂ gives θ₂ = (θ₁+θ₂)/2, so θ₁ = θ₂", t2sq == half));
        FAngle t2b = Rational(1, 2) * (rest00 - al);
        FAngle t1b = ii.theta_sum - t2b;
        S.push_back(Step::check("B: αθ₂²φ₂ gives θ₁ = " + t1b.str() + ", θ₂ = " + t2b.str(),
                                t1b == FAngle(Rational(2, 3), 4) && t2b == FAngle(0, 4)));
        AngleSystem sb = pin_theta1(ii, t1b, "II-B");
        std::vector<std::string> alive, tied;
        in_stage("II-general/avc", [&] {
            for (int f = kScanMin; f <= kScanMax; f += 2) {
                if (!sb.distinct_nonalpha(f)) {
                    tied.push_back(std::to_string(f));
                    continue;
                }
                if (!matching_arrangements(compute_avc(sb, TilingParameters(f)), p56).empty())
                    alive.push_back(std::to_string(f));
            }
            return 0;
        });
        S.push_back(Step::check("B: two angles coincide at f in {" + join(tied) + "}", tied.size() <= 1));
        S.push_back(Step::check("B: with αθ₂²φ₂, B4 extends for f in {" + join(alive) + "}", alive.empty()));
    }

    // (C) θ₂²φ₁φ₂ is not a vertex.
    {
        bool dominate = true;
        for (int a = 0; a <= 3; ++a)
            for (int b1 = 0; b1 <= 3; ++b1)
                for (int b2 = b1 + 1; b2 <= 4; ++b2)
                    for (int cc = 0; cc <= 3; ++cc) {
                        auto s = VertexSignature::of(a, b1, b2, cc, 0);
                        if (s.degree() > 8) continue;
                        for (const auto& arr : feasible_arrangements(s))
                            dominate = dominate && klem_violates(arr, KlemOptions{});
                    }
        S.push_back(Step::check("C: without φ₂, b₁ < b₂ violates θ₂φ₁ᵏθ₂ (degree ≤ 8)", dominate));
        std::map<int, std::vector<VertexSignature>> lists;
        std::vector<std::string> sols;
        for (int a = 0; a <= 2; ++a)
            for (int m = 1; 2 * a + m <= 5; ++m) {
                // 2 = 2a/3 + (1/3 + 4/f) m
                Rational rhs = (Rational(2) - Rational(2 * a, 3)) / m - Rational(1, 3);
                if (rhs.sign() <= 0) continue;
                Rational f = Rational(4) / rhs;
                if (!f.is_integer() || f.num() < 18 || f.num() % 2) continue;
                int F = static_cast<int>(f.num());
                sols.push_back("a=" + std::to_string(a) + ",2b+c=" + std::to_string(m) + ":" + fstr(F));
                for (int b = 0; 2 * b <= m; ++b)
                    lists[F].push_back(VertexSignature::of(a, b, b, m - 2 * b, 0));
            }
        S.push_back(Step::check("C: solutions " + join(sols),
                                sols == std::vector<std::string>{"a=0,2b+c=4:f=24", "a=0,2b+c=5:f=60",
                                                                 "a=1,2b+c=3:f=36"}));
        const std::vector<VertexSignature> base{VertexSignature::of(3, 0, 0, 0, 0), VertexSignature::of(0, 1, 1, 0, 1),
                                                VertexSignature::of(0, 0, 0, 2, 1)};
        for (auto& [f, l] : lists) {
            std::vector<VertexSignature> all = base;
            all.insert(all.end(), l.begin(), l.end());
            auto m = klem_free_matches(all, p56);
            S.push_back(Step::check("C: " + fstr(f) + " vertices " + sig_list(l) + "; B4 extends as " + arr_list(m),
                                    m.empty()));
        }
    }

    // (D) θ₂²φ₁φ₂ is a vertex.
    {
        FAngle t2 = Rational(1, 2) * (FAngle::constant(2) - p1 - p2);
        FAngle t1 = ii.theta_sum - t2;
        S.push_back(Step::check("D: θ₁ = " + t1.str() + ", θ₂ = " + t2.str(),
                                t1 == FAngle(Rational(1, 2), 6) && t2 == FAngle(Rational(1, 6), 2)));
        S.push_back(Step::check("D: θ₁ = 3θ₂ and φ₁ = 2θ₂", t1 == Rational(3) * t2 && p1 == Rational(2) * t2));
        std::vector<std::string> sols;
        std::vector<int> fs;
        for (int a = 0; a <= 2; ++a)
            for (int b = 2; 4 * a + b < 12; b += 2) {
                // 2a/3 + (1/6 + 2/f) b = 2
                Rational rest = Rational(2) - Rational(2 * a, 3) - Rational(b, 6);
                if (rest.sign() <= 0) continue;
                Rational f = Rational(2 * b) / rest;
                if (!f.is_integer() || f.num() < 18 || f.num() % 2) continue;
                sols.push_back("a=" + std::to_string(a) + ",b=" + std::to_string(b) + ":" + f.str());
                fs.push_back(static_cast<int>(f.num()));
            }
        std::sort(fs.begin(), fs.end());
        S.push_back(Step::check("D: even b, 4a + b < 12: " + join(sols), fs == std::vector<int>{24, 36, 60}));
        AngleSystem sd = pin_theta1(ii, t1, "II-D");
        std::map<int, Avc> avcs;
        in_stage("II-general/avc", [&] {
            for (int f = kScanMin; f <= kScanMax; f += 2)
                if (sd.distinct_nonalpha(f)) avcs.emplace(f, compute_avc(sd, TilingParameters(f)));
            return 0;
        });
        std::vector<int> tied;
        for (int f = kScanMin; f <= kScanMax; f += 2)
            if (!avcs.count(f)) tied.push_back(f);
        S.push_back(Step::check("D: two angles coincide at f in " + int_list(tied), tied.empty()));
        std::vector<std::string> dead;
        bool others = true;
        for (const auto& [f, avc] : avcs) {
            if (f == 24 || f == 36 || f == 60) continue;
            others = others && matching_arrangements(avc, p56).empty();
            dead.push_back(std::to_string(f));
        }
        S.push_back(Step::check("D: B4 has no arrangement at the other scanned f", others));
        S.push_back(Step::check("D: f=24 AVC " + sig_list(avcs.at(24).signatures) + "; B4 does not extend",
                                matching_arrangements(avcs.at(24), p56).empty()));
        S.push_back(Step::check("D: f=36 B3 does not extend", matching_arrangements(avcs.at(36), p45).empty()));
        auto m60 = matching_arrangements(avcs.at(60), p56);
        c.auxiliary["D_f60_B4"] = arr_list(m60);

        const int f = 60;
        QuadAngles q{t1.eval(f).to_double() * kPi, t2.eval(f).to_double() * kPi, p1.eval(f).to_double() * kPi,
                     p2.eval(f).to_double() * kPi};
        auto [P, Q, R] = pqr(q);
        const double s5 = std::sqrt(5.0);
        double q_surd = 2 * std::pow(std::sqrt(10 - 2 * s5) / 4, 3);
        double r_surd = (5 - 2 * s5) / 4;
        double cot_surd = -(s5 - 1) / std::sqrt(10 + 2 * s5);
        S.push_back(Step::geometry("D: P at f=60", P, 0, 1e-12));
        S.push_back(Step::geometry("D: Q at f=60", Q, q_surd, 1e-12));
        S.push_back(Step::geometry("D: R at f=60", R, r_surd, 1e-12));
        double cot = -R / Q;
        S.push_back(Step::geometry("D: cot θ = −R/Q", cot, cot_surd, 1e-12));
        double theta = std::atan2(1.0, cot);
        S.push_back(Step::geometry("D: θ in (0, π) equals θ₁", theta, t1.eval(f).to_double() * kPi, 1e-9));
        Rational rho = t1.eval(f) - t2.eval(f);
        S.push_back(Step::exact("D: ρ = θ₁ − θ₂", rho, Relation::Eq, Rational(2, 5)));
        S.push_back(Step::exact("D: φ₁ + ρ against π (D on arc BC)", p1.eval(f) + rho, Relation::Ne, 1));
        S.push_back(Step::exact("D: margin π − φ₁ − ρ", Rational(1) - p1.eval(f) - rho, Relation::Eq, Rational(1, 5)));
        c.auxiliary["rho"] = pi_str(rho);
        c.auxiliary["phi1_plus_rho"] = pi_str(p1.eval(f) + rho);
        c.auxiliary["P"] = num(P);
        c.auxiliary["Q"] = num(Q);
        c.auxiliary["R"] = num(R);
        c.auxiliary["theta"] = num(theta);
    }
    c.contradiction = "edge-mismatch; geometric at f=60";
    return {c};
}

// ---- report ------------------------------------------------------------------------

TheoremReport full_theorem_report(const AngleTables& tables, double tolerance) {
    TheoremReport r;
    r.tolerance = tolerance;
    using Stage = std::pair<std::string, std::function<std::vector<CaseCertificate>()>>;
    std::vector<Stage> stages{
        {"minimal/a2b2c", [] { return std::vector<CaseCertificate>{minimal_case_proof(EdgeCombo::A2B2C)}; }},
        {"minimal/a3bc", [] { return std::vector<CaseCertificate>{minimal_case_proof(EdgeCombo::A3BC)}; }},
        {"III1", [&] { return eliminate_III1(tables); }},
        {"III2", [&] { return eliminate_III2_III3(tables); }},
        {"II-alpha", [&] { return eliminate_II_theta_eq_alpha(tables); }},
        {"II-general", [&] { return eliminate_II_general(tables); }},
        {"survivors",
         [&] {
             survivor_tilings(tables);
             return std::vector<CaseCertificate>{};
         }},
    };
    for (const auto& [name, run] : stages) {
        std::vector<CaseCertificate> got;
        try {
            got = run();
        } catch (const StageError& e) {
            r.failure = ReportFailure{e.stage(), "", -1, e.what()};
        } catch (const std::exception& e) {
            r.failure = ReportFailure{name, "", -1, e.what()};
        }
        if (r.failure) break;
        for (auto& c : got) {
            int bad = c.first_failure(tolerance);
            r.certificates.push_back(std::move(c));
            if (bad >= 0 && !r.failure) {
                const auto& cc = r.certificates.back();
                r.failure = ReportFailure{"certificate", cc.case_id, bad, cc.steps[bad].text};
            }
        }
        if (r.failure) break;
    }
    r.ok = !r.failure.has_value();
    if (r.ok) {
        r.verdict = kVerdictOk;
    } else {
        const auto& f = *r.failure;
        r.verdict = "failed at " + (f.certificate.empty() ? f.stage : f.certificate + " step " + std::to_string(f.step)) +
                    ": " + f.message;
    }
    return r;
}

}  // namespace pentatile

// ---- JSON --------------------------------------------------------------------------

namespace pentatile {

namespace {

using nlohmann::json;

const char* kind_name(Step::Kind k) {
    switch (k) {
        case Step::Kind::Exact: return "exact";
        case Step::Kind::Geometry: return "geometry";
        case Step::Kind::Combinatorial: return "combinatorial";
    }
    return "?";
}

Step::Kind parse_kind(const std::string& s) {
    if (s == "exact") return Step::Kind::Exact;
    if (s == "geometry") return Step::Kind::Geometry;
    if (s == "combinatorial") return Step::Kind::Combinatorial;
    throw std::invalid_argument("unknown step kind: " + s);
}

Relation parse_relation(const std::string& s) {
    for (Relation r : {Relation::Eq, Relation::Ne, Relation::Lt, Relation::Gt, Relation::Le, Relation::Ge})
        if (relation_str(r) == s) return r;
    throw std::invalid_argument("unknown relation: " + s);
}

json step_json(const Step& s) {
    json j{{"kind", kind_name(s.kind)}, {"text", s.text}};
    switch (s.kind) {
        case Step::Kind::Exact:
            j["lhs"] = s.lhs.str();
            j["rhs"] = s.rhs.str();
            j["rel"] = relation_str(s.rel);
            break;
        case Step::Kind::Geometry:
            j["value"] = s.value;
            j["expected"] = s.expected;
            j["tolerance"] = s.tolerance;
            j["near"] = s.near;
            break;
        case Step::Kind::Combinatorial:
            j["holds"] = s.holds;
            break;
    }
    return j;
}

Step step_from(const json& j) {
    Step s;
    s.kind = parse_kind(j.at("kind").get<std::string>());
    s.text = j.at("text").get<std::string>();
    switch (s.kind) {
        case Step::Kind::Exact:
            s.lhs = Rational::parse(j.at("lhs").get<std::string>());
            s.rhs = Rational::parse(j.at("rhs").get<std::string>());
            s.rel = parse_relation(j.at("rel").get<std::string>());
            break;
        case Step::Kind::Geometry:
            s.value = j.at("value").get<double>();
            s.expected = j.at("expected").get<double>();
            s.tolerance = j.at("tolerance").get<double>();
            s.near = j.at("near").get<bool>();
            break;
        case Step::Kind::Combinatorial:
            s.holds = j.at("holds").get<bool>();
            break;
    }
    return s;
}

json cert_json(const CaseCertificate& c) {
    json steps = json::array(), assumptions = json::array();
    for (const auto& s : c.steps) steps.push_back(step_json(s));
    for (const auto& a : c.assumptions) assumptions.push_back({{"name", a.name}, {"statement", a.statement}});
    return {{"case_id", c.case_id},         {"f_values", c.f_values},   {"premises", c.premises},
            {"steps", steps},               {"contradiction", c.contradiction},
            {"auxiliary", c.auxiliary},     {"assumptions", assumptions}};
}

CaseCertificate cert_from(const json& j) {
    CaseCertificate c;
    c.case_id = j.at("case_id").get<std::string>();
    c.f_values = j.at("f_values").get<std::vector<int>>();
    c.premises = j.at("premises").get<std::vector<std::string>>();
    for (const auto& s : j.at("steps")) c.steps.push_back(step_from(s));
    c.contradiction = j.at("contradiction").get<std::string>();
    c.auxiliary = j.at("auxiliary").get<std::map<std::string, std::string>>();
    for (const auto& a : j.at("assumptions"))
        c.assumptions.push_back({a.at("name").get<std::string>(), a.at("statement").get<std::string>()});
    return c;
}

}  // namespace

std::string certificate_to_json(const CaseCertificate& c, int indent) { return cert_json(c).dump(indent); }

std::string report_to_json(const TheoremReport& r, int indent) {
    json certs = json::array();
    for (const auto& c : r.certificates) certs.push_back(cert_json(c));
    json j{{"schema", 1}, {"ok", r.ok}, {"verdict", r.verdict}, {"tolerance", r.tolerance}, {"certificates", certs}};
    if (r.failure)
        j["failure"] = {{"stage", r.failure->stage},
                        {"certificate", r.failure->certificate},
                        {"step", r.failure->step},
                        {"message", r.failure->message}};
    else
        j["failure"] = nullptr;
    return j.dump(indent);
}

TheoremReport report_from_json(const std::string& text) {
    json j = json::parse(text);
    if (j.at("schema").get<int>() != 1) throw std::invalid_argument("unsupported schema version");
    TheoremReport r;
    r.ok = j.at("ok").get<bool>();
    r.verdict = j.at("verdict").get<std::string>();
    r.tolerance = j.at("tolerance").get<double>();
    for (const auto& c : j.at("certificates")) r.certificates.push_back(cert_from(c));
    if (!j.at("failure").is_null()) {
        const auto& f = j.at("failure");
        r.failure = ReportFailure{f.at("stage").get<std::string>(), f.at("certificate").get<std::string>(),
                                  f.at("step").get<int>(), f.at("message").get<std::string>()};
    }
    return r;
}

}  // namespace pentatile
