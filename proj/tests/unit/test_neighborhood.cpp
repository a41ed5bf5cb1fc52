#include <set>

#include "doctest.h"
#include "pentatile/neighborhood.hpp"

using namespace pentatile;

namespace {

std::set<NbType> survivor_types(int f, const AngleTables& t) {
    std::set<NbType> out;
    for (const auto& lab : enumerate_edge_congruent(EdgeCombo::A3B2))
        for (const auto& b : solve_angle_assignment(lab, f, t))
            if (!b.contradiction) {
                REQUIRE(b.type);
                out.insert(*b.type);
            }
    return out;
}

const EdgeLabeling& labeling(const std::string& name) {
    static const auto all = enumerate_edge_congruent(EdgeCombo::A3B2);
    for (const auto& l : all)
        if (l.name == name) return l;
    throw std::runtime_error("no labeling " + name);
}

}  // namespace

TEST_SUITE("neighborhood") {
    TEST_CASE("edge congruent labelings") {
        auto a3b2 = enumerate_edge_congruent(EdgeCombo::A3B2);
        REQUIRE(a3b2.size() == 3);
        CHECK(a3b2[0].name == "I");
        CHECK(a3b2[1].name == "II");
        CHECK(a3b2[2].name == "III");
        CHECK(enumerate_edge_congruent(EdgeCombo::A3BC).size() == 1);
        CHECK(enumerate_edge_congruent(EdgeCombo::A2B2C).size() == 1);
        for (EdgeCombo c : {EdgeCombo::A2B2C, EdgeCombo::A3BC, EdgeCombo::A3B2})
            for (const auto& l : enumerate_edge_congruent(c)) CHECK(l.labels.size() == kEdges);
    }

    TEST_CASE("a3bc shares an a edge between P2 and P3") {
        auto l = enumerate_edge_congruent(EdgeCombo::A3BC).at(0);
        // P2 is tile 1 and P3 is tile 2; they share the spoke A1-B1.
        CHECK(l.labels[edge_index(1, 6)] == 'a');
    }

    TEST_CASE("a2b2c shares a c edge") {
        auto l = enumerate_edge_congruent(EdgeCombo::A2B2C).at(0);
        bool has_c_spoke = false;
        for (int j = 0; j < 5; ++j) has_c_spoke |= l.labels[edge_index(j, 5 + j)] == 'c';
        CHECK(has_c_spoke);
    }

    TEST_CASE("labels agree with every placed tile") {
        for (EdgeCombo c : {EdgeCombo::A2B2C, EdgeCombo::A3BC, EdgeCombo::A3B2})
            for (const auto& l : enumerate_edge_congruent(c))
                for (int t = 0; t < kTiles; ++t) {
                    const auto& tile = template_tiles()[t];
                    for (int i = 0; i < 5; ++i) {
                        int e = edge_index(tile[i], tile[(i + 1) % 5]);
                        char want = tile_pattern(c).edges[l.states[t].pattern_edge(i)];
                        CHECK(l.labels[e] == want);
                    }
                }
    }

    TEST_CASE("minimal cases force f = 12") {
        for (EdgeCombo c : {EdgeCombo::A2B2C, EdgeCombo::A3BC}) {
            CaseCertificate cert = minimal_case_proof(c);
            CHECK(cert.verify());
            CHECK(cert.f_values == std::vector<int>{12});
            CHECK(cert.case_id == "minimal/" + combo_name(c));
            CHECK(cert.f_values[0] % 2 == 0);
        }
        CHECK_THROWS_AS(minimal_case_proof(EdgeCombo::A3B2), std::invalid_argument);
    }

    TEST_CASE("vertex equations with 1/f unknown") {
        AngleSolve s = solve_vertex_equations({{3, 0}, {0, 3}}, {"x", "y"});
        REQUIRE(s.consistent);
        REQUIRE(s.angle.size() == 2);
        CHECK(s.angle[0].as_fangle() == FAngle::constant(Rational(2, 3)));
        CHECK(s.angle[1].as_fangle() == FAngle::constant(Rational(2, 3)));
        // 4/3 = 3 + 4u
        REQUIRE(s.u);
        CHECK(*s.u == Rational(-5, 12));
    }

    TEST_CASE("type I always forces equal angles") {
        for (int f = 18; f <= 58; f += 2)
            for (const auto& b : solve_angle_assignment(labeling("I"), f, AngleTables::standard())) {
                REQUIRE(b.contradiction);
                CHECK(b.contradiction->kind == ContradictionKind::EqualAngles);
            }
    }

    TEST_CASE("type III with P5 and P6 positive violates pcombo") {
        std::set<std::string> pcombo;
        for (const auto& b : solve_angle_assignment(labeling("III"), 24, AngleTables::standard())) {
            std::string o = b.tiling.orientation_str();
            if (b.contradiction && b.contradiction->kind == ContradictionKind::PcomboViolation) pcombo.insert(o);
        }
        CHECK(pcombo == std::set<std::string>{"++-+-", "+---+", "-+-++", "---++"});
        for (std::string p3 : {"+", "-"})
            CHECK(pcombo.count("-" + p3 + "-++") == 1);
    }

    TEST_CASE("type III branch +-+-- is III2 with its angle row") {
        std::array<int, kTiles> orient{1, 1, -1, 1, -1, -1};
        BranchResult b = solve_branch(labeling("III"), orient, 24, AngleTables::standard());
        REQUIRE_FALSE(b.contradiction);
        REQUIRE(b.type);
        CHECK(*b.type == NbType::III2);
        CHECK_FALSE(b.relabeled);
        REQUIRE(b.system);
        const AngleSystem want = angle_system(NbType::III2);
        for (Angle x : kAllAngles) CHECK((*b.system)[x] == want[x]);
    }

    TEST_CASE("survivors are II, III1, III2, III3 at every even f in range") {
        const std::set<NbType> want{NbType::II, NbType::III1, NbType::III2, NbType::III3};
        for (int f = 18; f <= 58; f += 2) {
            CAPTURE(f);
            CHECK(survivor_types(f, AngleTables::standard()) == want);
        }
    }

    TEST_CASE("branch coverage and orbit log") {
        for (const auto& lab : enumerate_edge_congruent(EdgeCombo::A3B2)) {
            auto bs = solve_angle_assignment(lab, 24, AngleTables::standard());
            REQUIRE(bs.size() == 32);
            std::set<std::string> seen, orbits;
            for (const auto& b : bs) {
                CHECK(b.tiling.orient[0] == 1);
                seen.insert(b.tiling.orientation_str());
                orbits.insert(b.orbit);
            }
            CHECK(seen.size() == 32);
            for (const auto& o : orbits) CHECK(seen.count(o) == 1);
        }
        // The relabeled II branch folds onto the plain one.
        int ii = 0;
        for (const auto& b : solve_angle_assignment(labeling("II"), 24, AngleTables::standard()))
            if (b.type) {
                ++ii;
                CHECK(b.orbit == "++++-");
            }
        CHECK(ii == 2);
    }

    TEST_CASE("survivor inner vertices close and edges match") {
        const AngleTables t = AngleTables::standard();
        for (int f : {18, 24, 36}) {
            for (const auto& lab : enumerate_edge_congruent(EdgeCombo::A3B2))
                for (const auto& b : solve_angle_assignment(lab, f, t)) {
                    if (b.contradiction || b.type == NbType::II) continue;
                    const AngleSystem& sys = t[*b.type];
                    for (int v = 0; v < 5; ++v) {
                        Rational sum(0);
                        for (int tile = 0; tile < kTiles; ++tile)
                            for (int c : template_tiles()[tile])
                                if (c == v) {
                                    Angle x = b.tiling.corner_angle(tile, v);
                                    if (b.relabeled) x = swap12(x);
                                    sum = sum + sys[x].eval(f);
                                }
                        CHECK(sum == Rational(2));
                    }
                    for (int tile = 0; tile < kTiles; ++tile) {
                        const auto& cyc = template_tiles()[tile];
                        for (int i = 0; i < 5; ++i) {
                            Angle x = b.tiling.corner_angle(tile, cyc[i]);
                            Edge in = b.tiling.edge_label(cyc[(i + 4) % 5], cyc[i]);
                            Edge out = b.tiling.edge_label(cyc[i], cyc[(i + 1) % 5]);
                            EdgeClass want = in != out ? EdgeClass::AB
                                             : in == Edge::A ? EdgeClass::AA
                                                             : EdgeClass::BB;
                            CHECK(edge_class(x) == want);
                        }
                    }
                }
        }
    }

    TEST_CASE("boundary vertices of the survivors") {
        const AngleTables t = AngleTables::standard();
        NeighborhoodTiling ii = survivor_tiling(t, NbType::II);
        CHECK(boundary_vertex(ii, 9).str() == "[b] θ₁ a θ₁ [b]");
        CHECK(boundary_vertex(ii, 8).str() == "[b] θ₁ a θ₂ [b]");
        CHECK(boundary_vertex(ii, 12).str() == "[b] α [b]");
        NeighborhoodTiling iii2 = survivor_tiling(t, NbType::III2);
        CHECK(boundary_vertex(iii2, 6).str() == "[a] θ₂ b θ₂ [a]");
        NeighborhoodTiling iii1 = survivor_tiling(t, NbType::III1);
        CHECK(boundary_vertex(iii1, 6).str() == "[a] θ₁ b θ₂ [a]");
        CHECK(boundary_vertex(iii1, 8).str() == "[b] α b α [b]");
        CHECK_THROWS(boundary_vertex(ii, 0));
    }

    TEST_CASE("propagation reproduces the figure") {
        const AngleTables t = AngleTables::standard();
        PropagationTable p = propagation_table(t);
        using S = std::set<NbType>;
        const S none;
        CHECK(p.entries.size() == 4);
        for (const auto& cell : p.entries.at(NbType::II)) CHECK(cell == none);
        auto row = [&](NbType x) { return p.entries.at(x); };
        CHECK(row(NbType::III1) == std::array<S, 5>{none, none, S{NbType::III1}, none, none});
        CHECK(row(NbType::III2) == std::array<S, 5>{none, none, S{NbType::III2}, S{NbType::III3}, none});
        CHECK(row(NbType::III3) == std::array<S, 5>{none, none, S{NbType::III3}, none, S{NbType::III2}});
        CHECK(propagation_table(t).entries == p.entries);
    }

    TEST_CASE("earth maps") {
        PropagationTable p = propagation_table(AngleTables::standard());
        for (int d = 1; d <= 4; ++d) {
            auto v = earth_map_compatible(d, p);
            CHECK_FALSE(v.compatible);
            CHECK(v.distance == d);
            CHECK(v.reason == "max consecutive admissible positions = 2 < 3");
        }
        auto v5 = earth_map_compatible(5, p);
        CHECK_FALSE(v5.compatible);
        CHECK(v5.reason == "III₃ forces III₂");
        CHECK_THROWS_AS(earth_map_compatible(0, p), std::invalid_argument);
        CHECK_THROWS_AS(earth_map_compatible(6, p), std::invalid_argument);
    }

    TEST_CASE("combo names") {
        CHECK(parse_combo("a3b2") == EdgeCombo::A3B2);
        CHECK(combo_name(EdgeCombo::A2B2C) == "a2b2c");
        CHECK_THROWS_AS(parse_combo("a5"), std::invalid_argument);
        CHECK(type_label(NbType::III2) == "III₂");
    }
}
