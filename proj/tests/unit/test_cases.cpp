#include <algorithm>
#include <cmath>
#include <set>

#include "doctest.h"
#include "pentatile/cases.hpp"

using namespace pentatile;

namespace {

const TheoremReport& standard_report() {
    static const TheoremReport r = full_theorem_report();
    return r;
}

const CaseCertificate& cert(const std::string& id) {
    for (const auto& c : standard_report().certificates)
        if (c.case_id == id) return c;
    throw std::runtime_error("no certificate " + id);
}

std::set<int> fs_of(const std::vector<std::string>& ids) {
    std::set<int> out;
    for (const auto& id : ids)
        for (int f : cert(id).f_values) out.insert(f);
    return out;
}

bool has_assumption(const CaseCertificate& c, const std::string& name) {
    return std::any_of(c.assumptions.begin(), c.assumptions.end(), [&](const Assumption& a) { return a.name == name; });
}

std::string vertex_list(const std::vector<VertexSignature>& v) {
    std::string s;
    for (const auto& x : v) s += (s.empty() ? "" : " ") + x.str();
    return s;
}

}  // namespace

TEST_SUITE("cases") {
    TEST_CASE("full report verifies with ten certificates") {
        const TheoremReport& r = standard_report();
        CHECK(r.ok);
        CHECK(r.verdict == kVerdictOk);
        CHECK_FALSE(r.failure);
        REQUIRE(r.certificates.size() == 10);
        std::vector<std::string> ids;
        for (const auto& c : r.certificates) {
            CHECK(c.verify());
            CHECK(c.first_failure() == -1);
            ids.push_back(c.case_id);
        }
        CHECK(ids == std::vector<std::string>{"minimal/a2b2c", "minimal/a3bc", "III1/f=18", "III1/f=20", "III1/f=22",
                                              "III2/f=24", "III2/f=36", "III3/swap", "II-alpha", "II-general"});
    }

    TEST_CASE("certificate tile counts follow the case structure") {
        CHECK(fs_of({"III1/f=18", "III1/f=20", "III1/f=22"}) == std::set<int>{18, 20, 22});
        CHECK(fs_of({"III2/f=24", "III2/f=36"}) == std::set<int>{24, 36});
        CHECK(fs_of({"III3/swap"}) == std::set<int>{24, 36});
        CHECK(fs_of({"II-alpha"}) == std::set<int>{24, 36, 60});
        CHECK(fs_of({"II-general"}) == std::set<int>{18, 20, 22, 24, 36, 60});
        CHECK(fs_of({"minimal/a2b2c", "minimal/a3bc"}) == std::set<int>{12});
    }

    TEST_CASE("imported facts are listed") {
        for (const auto& c : standard_report().certificates) {
            if (c.case_id.rfind("minimal/", 0) == 0) continue;
            CHECK(has_assumption(c, "edge-arrangement"));
            for (const auto& a : c.assumptions) CHECK_FALSE(a.statement.empty());
        }
        CHECK(has_assumption(cert("III1/f=20"), "v4-v6-exclusion"));
        const CaseCertificate& g = cert("II-general");
        for (const char* n : {"pcombo-ordering", "degree-bound", "f18-no-degree-6", "low-count-exclusion",
                              "angle-count balance", "f-scan-range"})
            CHECK(has_assumption(g, n));
        CHECK(has_assumption(cert("II-alpha"), "f-scan-range"));
    }

    TEST_CASE("exact steps re-verify with zero residual") {
        for (const auto& c : standard_report().certificates)
            for (const auto& s : c.steps)
                if (s.kind == Step::Kind::Exact) CHECK(s.verify());
    }

    TEST_CASE("III1 at f = 18 leaves a single θ₁") {
        const CaseCertificate& c = cert("III1/f=18");
        CHECK(c.auxiliary.at("remaining") == "5/9 π");
        AngleSystem s = angle_system(NbType::III1);
        CHECK(s[Angle::Theta1].eval(18) == Rational(5, 9));
        CHECK(completions(s, 18, Rational(5, 9)) == std::vector<VertexSignature>{VertexSignature::of(0, 1, 0, 0, 0)});
        // f = 24 is outside: φ₂ vanishes
        CHECK(s[Angle::Phi2].eval(24) == Rational(0));
    }

    TEST_CASE("III1 at f = 20 has the θ₁θ₂φ₂⁴ branch") {
        const CaseCertificate& c = cert("III1/f=20");
        bool seen = false;
        for (const auto& s : c.steps) seen |= s.text.find("φ₂⁴") != std::string::npos;
        CHECK(seen);
    }

    TEST_CASE("III2 at f = 24 ends with the reflex apex") {
        const CaseCertificate& c = cert("III2/f=24");
        CHECK(c.auxiliary.at("cos_a") == "0");
        CHECK(std::stod(c.auxiliary.at("L")) == doctest::Approx(2).epsilon(1e-12));
        CHECK(std::fabs(std::stod(c.auxiliary.at("M"))) < 1e-12);
        CHECK(std::fabs(std::stod(c.auxiliary.at("N"))) < 1e-12);
        CHECK(std::stod(c.auxiliary.at("a")) == doctest::Approx(1.5707963267948966).epsilon(1e-12));
        CHECK(std::fabs(std::stod(c.auxiliary.at("measured_alpha")) - 4.18879020478639) < 1e-9);
    }

    TEST_CASE("III2 at f = 36 has one θ₂² vertex") {
        Avc avc = compute_avc(NbType::III2, TilingParameters(36));
        std::vector<VertexSignature> sq;
        for (const auto& s : avc.signatures)
            if (s[Angle::Theta2] >= 2) sq.push_back(s);
        CHECK(sq == std::vector<VertexSignature>{VertexSignature::of(1, 0, 2, 0, 1)});
        const auto& arrs = avc.arrangements.at(sq[0]);
        REQUIRE(arrs.size() == 1);
        CHECK(cert("III2/f=36").verify());
    }

    TEST_CASE("III3 swaps onto III2") {
        AngleSystem s = swapped(angle_system(NbType::III3), "III3'");
        AngleSystem t = angle_system(NbType::III2);
        for (Angle x : kAllAngles) CHECK(s[x] == t[x]);
        CHECK(cert("III3/swap").verify());
    }

    TEST_CASE("θ₁ = α family table") {
        auto rows = theta_alpha_family_table(theta_alpha_system(AngleTables::standard()));
        std::vector<std::string> got;
        for (const auto& r : rows)
            got.push_back(std::to_string(r.a) + " " + r.b.str() + " " + std::to_string(r.c) + " " + std::to_string(r.d));
        CHECK(got == std::vector<std::string>{"3 0 0 0", "1 1 0 1", "2 (f-12)/24 1 0", "1 (f-36)/24 3 0",
                                              "2 f/12 0 0", "1 f/12-1 2 0", "1 (f-4)/8 1 0", "1 f/6 0 0"});
        // the (2, (f-12)/24, 1, 0) row
        ThetaAlphaFamily row = rows[2];
        CHECK(row.b.at(36) == Rational(1));
        CHECK(row.b.at(60) == Rational(2));
    }

    TEST_CASE("θ₁ = α columns") {
        const AngleTables t = AngleTables::standard();
        CHECK(theta_alpha_admissible_f(t) == std::vector<int>{24, 36, 60});
        CHECK(vertex_list(theta_alpha_column(t, 24).vertices) == "αθ₂φ₂ αθ₂φ₁² α²θ₂² α³");
        CHECK(vertex_list(theta_alpha_column(t, 36).vertices) == "αθ₂φ₂ α²θ₂φ₁ α³");
        CHECK(vertex_list(theta_alpha_column(t, 60).vertices) == "αθ₂φ₂ αθ₂φ₁³ α²θ₂²φ₁ α³");
        CHECK(theta_alpha_column(t, 24).vertices.size() == 4);
        CHECK(cert("II-alpha").verify());
    }

    TEST_CASE("II general branch D and the f = 60 endgame") {
        const CaseCertificate& c = cert("II-general");
        CHECK(c.auxiliary.at("rho") == "2/5 π");
        CHECK(c.auxiliary.at("phi1_plus_rho") == "4/5 π");
        CHECK(std::fabs(std::stod(c.auxiliary.at("theta")) - 3 * 3.14159265358979323846 / 5) < 1e-9);
        CHECK(std::fabs(std::stod(c.auxiliary.at("Q")) - 0.4061496202911) < 1e-12);
        CHECK(std::fabs(std::stod(c.auxiliary.at("R")) - 0.1319660112501) < 1e-12);
        AngleSystem d = pin_theta1(angle_system(NbType::II), FAngle(Rational(1, 2), 6), "II-D");
        CHECK(d[Angle::Theta2] == FAngle(Rational(1, 6), 2));
    }

    TEST_CASE("branch A at f = 22 has no four-angle vertex") {
        // {2/3, 67/66, 1/66, 17/33, 32/33}
        std::vector<Rational> v{Rational(2, 3), Rational(67, 66), Rational(1, 66), Rational(17, 33), Rational(32, 33)};
        int hits = 0;
        for (int i = 0; i < 5; ++i)
            for (int j = i; j < 5; ++j)
                for (int k = j; k < 5; ++k)
                    for (int l = k; l < 5; ++l) hits += v[i] + v[j] + v[k] + v[l] == Rational(2);
        CHECK(hits == 0);
        AngleSystem ii = angle_system(NbType::II);
        CHECK(ii[Angle::Phi1].eval(22) == Rational(17, 33));
        CHECK(ii[Angle::Phi2].eval(22) == Rational(32, 33));
    }

    TEST_CASE("the (b, c) split of branch B covers every pair") {
        // α^a θ₁^b₁ θ₂^b₂ φ₁^c φ₂ with b = min(b₁, b₂): either 2b + c ≤ 2 or the
        // cheapest such vertex already passes 2π at every scanned f.
        AngleSystem ii = angle_system(NbType::II);
        std::vector<std::pair<int, int>> low;
        for (int b = 0; b <= 10; ++b)
            for (int c = 0; c <= 20; ++c) {
                if (2 * b + c - 2 <= 0) {
                    low.emplace_back(b, c);
                    continue;
                }
                for (int f = kScanMin; f <= kScanMax; f += 2) {
                    Rational sum = Rational(b) * ii.theta_sum.eval(f) + Rational(c) * ii[Angle::Phi1].eval(f) +
                                   ii[Angle::Phi2].eval(f);
                    CHECK(sum > Rational(2));
                }
            }
        CHECK(low == std::vector<std::pair<int, int>>{{0, 0}, {0, 1}, {0, 2}, {1, 0}});
    }

    TEST_CASE("unreachable tolerance fails at the first geometric step") {
        TheoremReport r = full_theorem_report(AngleTables::standard(), 1e-30);
        CHECK_FALSE(r.ok);
        REQUIRE(r.failure);
        CHECK(r.failure->stage == "certificate");
        CHECK(r.failure->certificate == "III2/f=24");
        CHECK(r.failure->step == 5);
        CHECK(r.verdict == "failed at III2/f=24 step 5: L");
    }

    TEST_CASE("JSON round trip") {
        const TheoremReport& r = standard_report();
        std::string j = report_to_json(r);
        CHECK(j.find("\"schema\": 1") != std::string::npos);
        TheoremReport back = report_from_json(j);
        CHECK(back.ok == r.ok);
        CHECK(back.verdict == r.verdict);
        REQUIRE(back.certificates.size() == r.certificates.size());
        for (std::size_t i = 0; i < r.certificates.size(); ++i) CHECK(back.certificates[i] == r.certificates[i]);
        CHECK(report_to_json(back) == j);
        TheoremReport failed = full_theorem_report(AngleTables::standard(), 1e-30);
        TheoremReport fb = report_from_json(report_to_json(failed));
        CHECK(fb.failure == failed.failure);
        CHECK(fb.tolerance == failed.tolerance);
        CHECK_THROWS(report_from_json("{\"schema\": 2}"));
    }

    TEST_CASE("output is deterministic") {
        CHECK(report_to_json(full_theorem_report()) == report_to_json(standard_report()));
    }
}

TEST_SUITE("mutation") {
    TEST_CASE("III2 φ₁ and φ₂ swapped aborts at the AVC stage") {
        AngleTables t = AngleTables::standard();
        std::swap(t.rows.at(NbType::III2)[Angle::Phi1], t.rows.at(NbType::III2)[Angle::Phi2]);
        TheoremReport r = full_theorem_report(t);
        CHECK_FALSE(r.ok);
        REQUIRE(r.failure);
        CHECK(r.failure->stage == "III2/avc");
    }

    TEST_CASE("swapping any two distinct entries of an angle row is caught") {
        int tried = 0;
        for (NbType type : kAllTypes)
            for (int i = 0; i < 5; ++i)
                for (int j = i + 1; j < 5; ++j) {
                    AngleTables t = AngleTables::standard();
                    AngleSystem& s = t.rows.at(type);
                    if (s.angle[i] == s.angle[j]) continue;
                    std::swap(s.angle[i], s.angle[j]);
                    CAPTURE(type_name(type));
                    CAPTURE(i);
                    CAPTURE(j);
                    TheoremReport r = full_theorem_report(t);
                    CHECK_FALSE(r.ok);
                    CHECK(r.failure);
                    ++tried;
                }
        // II has θ₁, θ₂ unset and III1 has θ₂ = φ₁
        CHECK(tried == 38);
    }
}
