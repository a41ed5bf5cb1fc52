#include "pentatile/neighborhood.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace pentatile {

namespace {

int mod5(int x) { return ((x % 5) + 5) % 5; }

int vA(int k) { return mod5(k); }
int vB(int k) { return 5 + mod5(k); }
int vC(int k) { return 10 + mod5(k); }

struct Template {
    std::array<std::array<int, 5>, kTiles> tiles;
    std::vector<std::pair<int, int>> edges;
    std::map<std::pair<int, int>, int> index;
    std::array<std::array<int, 5>, kTiles> tile_edges;
};

const Template& tmpl() {
    static const Template T = [] {
        Template t;
        t.tiles[0] = {vA(0), vA(1), vA(2), vA(3), vA(4)};
        for (int j = 0; j < 5; ++j) t.tiles[j + 1] = {vA(j + 1), vA(j), vB(j), vC(j), vB(j + 1)};
        for (int k = 0; k < kTiles; ++k)
            for (int i = 0; i < 5; ++i) {
                int u = t.tiles[k][i], v = t.tiles[k][(i + 1) % 5];
                auto key = std::minmax(u, v);
                auto it = t.index.find(key);
                if (it == t.index.end()) {
                    it = t.index.emplace(key, static_cast<int>(t.edges.size())).first;
                    t.edges.push_back(key);
                }
                t.tile_edges[k][i] = it->second;
            }
        return t;
    }();
    return T;
}

// Element g of the dihedral group: reflect when g >= 5, then rotate by g % 5.
int sym_vertex(int g, int v) {
    int kind = v / 5, k = v % 5;
    if (g >= 5) k = kind == 2 ? mod5(-k - 1) : mod5(-k);
    return kind * 5 + mod5(k + g % 5);
}

// The reflection fixing P1 when its α sits at A1.
constexpr int kP1Flip = 7;

std::string apply_sym(int g, const std::string& labels) {
    std::string out(labels.size(), '?');
    for (int e = 0; e < kEdges; ++e) {
        auto [u, v] = tmpl().edges[e];
        out[edge_index(sym_vertex(g, u), sym_vertex(g, v))] = labels[e];
    }
    return out;
}

// a3b2 pattern corner -> angle name
constexpr std::array<Angle, 5> kA3B2Corner{Angle::Alpha, Angle::Theta1, Angle::Phi1, Angle::Phi2, Angle::Theta2};

int corner_index(int t, int v) {
    const auto& c = tmpl().tiles[t];
    for (int i = 0; i < 5; ++i)
        if (c[i] == v) return i;
    return -1;
}

std::string join(const std::vector<std::string>& xs, const std::string& sep) {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? sep : "") + xs[i];
    return out;
}

std::string equation_text(const std::string& vertex, const std::vector<int>& row,
                          const std::vector<std::string>& names) {
    std::vector<std::string> terms;
    for (std::size_t j = 0; j < row.size(); ++j)
        if (row[j] > 0) terms.push_back((row[j] > 1 ? std::to_string(row[j]) : "") + names[j]);
    return vertex + ": " + join(terms, " + ") + " = 2π";
}

}  // namespace

std::string combo_name(EdgeCombo c) {
    switch (c) {
        case EdgeCombo::A2B2C: return "a2b2c";
        case EdgeCombo::A3BC: return "a3bc";
        case EdgeCombo::A3B2: return "a3b2";
    }
    return "?";
}

EdgeCombo parse_combo(const std::string& s) {
    for (EdgeCombo c : {EdgeCombo::A2B2C, EdgeCombo::A3BC, EdgeCombo::A3B2})
        if (combo_name(c) == s) return c;
    throw std::invalid_argument("unknown edge combination '" + s + "'");
}

std::string type_label(NbType t) {
    switch (t) {
        case NbType::II: return "II";
        case NbType::III1: return "III₁";
        case NbType::III2: return "III₂";
        case NbType::III3: return "III₃";
    }
    return "?";
}

AngleTables AngleTables::standard() {
    AngleTables t;
    for (NbType x : kAllTypes) t.rows[x] = angle_system(x);
    return t;
}

const std::array<std::array<int, 5>, kTiles>& template_tiles() { return tmpl().tiles; }

std::string vertex_name(int v) { return std::string(1, "ABC"[v / 5]) + std::to_string(v % 5); }

int edge_index(int u, int v) {
    auto it = tmpl().index.find(std::minmax(u, v));
    return it == tmpl().index.end() ? -1 : it->second;
}

std::pair<int, int> edge_ends(int e) { return tmpl().edges.at(e); }

int tile_across(int t, int e) {
    for (int k = 0; k < kTiles; ++k) {
        if (k == t) continue;
        for (int i = 0; i < 5; ++i)
            if (tmpl().tile_edges[k][i] == e) return k;
    }
    return -1;
}

const TilePattern& tile_pattern(EdgeCombo c) {
    static const TilePattern a2b2c{EdgeCombo::A2B2C, {'a', 'a', 'c', 'b', 'b'}, {"γ", "α", "δ", "ε", "β"}};
    static const TilePattern a3bc{EdgeCombo::A3BC, {'b', 'a', 'a', 'a', 'c'}, {"α", "β", "φ₁", "φ₂", "γ"}};
    static const TilePattern a3b2{EdgeCombo::A3B2, {'b', 'a', 'a', 'a', 'b'}, {"α", "θ₁", "φ₁", "φ₂", "θ₂"}};
    switch (c) {
        case EdgeCombo::A2B2C: return a2b2c;
        case EdgeCombo::A3BC: return a3bc;
        case EdgeCombo::A3B2: return a3b2;
    }
    throw std::invalid_argument("unknown edge combination");
}

int TileState::pattern_corner(int i) const { return orient > 0 ? mod5(i - rot) : mod5(rot - i); }
int TileState::pattern_edge(int i) const { return orient > 0 ? mod5(i - rot) : mod5(rot - i - 1); }

std::vector<EdgeLabeling> enumerate_edge_congruent(EdgeCombo combo) {
    const TilePattern& pat = tile_pattern(combo);
    const auto& T = tmpl();
    std::vector<TileState> states;
    for (int o : {1, -1})
        for (int r = 0; r < 5; ++r) states.push_back({o, r});

    std::set<std::string> found;
    std::string lab(kEdges, '?');
    std::function<void(int)> place = [&](int t) {
        if (t == kTiles) {
            found.insert(lab);
            return;
        }
        for (const TileState& s : states) {
            std::string saved = lab;
            bool ok = true;
            for (int i = 0; i < 5 && ok; ++i) {
                char ch = pat.edges[s.pattern_edge(i)];
                char& slot = lab[T.tile_edges[t][i]];
                if (slot != '?' && slot != ch) ok = false;
                slot = ch;
            }
            if (ok) place(t + 1);
            lab = saved;
        }
    };
    place(0);

    // Full labelings are grouped by their inner edges (center and spokes);
    // members of a group differ only on outer edges.
    auto inner = [&](const std::string& l) {
        std::string k;
        for (int e = 0; e < kEdges; ++e)
            if (T.edges[e].first < 5) k += l[e];
        return k;
    };
    std::map<std::string, std::set<std::string>> groups;  // canonical inner -> full labelings
    for (const auto& l : found) {
        std::string best;
        for (int g = 0; g < 10; ++g) {
            std::string k = inner(apply_sym(g, l));
            if (best.empty() || k < best) best = k;
        }
        groups[best].insert(l);
    }

    auto alpha_corner = [&](const std::string& l, int t) {
        for (int k = 0; k < 5; ++k)
            if (l[T.tile_edges[t][k]] == 'b' && l[T.tile_edges[t][mod5(k - 1)]] == 'b') return k;
        return -1;
    };
    auto states_of = [&](const std::string& l) {
        std::array<TileState, kTiles> st{};
        for (int t = 0; t < kTiles; ++t)
            for (const TileState& s : states) {
                bool ok = true;
                for (int i = 0; i < 5 && ok; ++i) ok = pat.edges[s.pattern_edge(i)] == l[T.tile_edges[t][i]];
                if (ok) {
                    st[t] = s;
                    break;
                }
            }
        return st;
    };

    std::vector<EdgeLabeling> out;
    for (const auto& [canon, members] : groups) {
        EdgeLabeling e;
        e.combo = combo;
        e.name = "-";
        if (combo == EdgeCombo::A3B2) {
            // Put P1's α at A1 and prefer the larger α-corner vector, which
            // is the orientation used in the drawings of the three types.
            std::array<int, kTiles> best{};
            bool have = false;
            for (const auto& l : members) {
                if (alpha_corner(l, 0) != 1) continue;
                std::array<int, kTiles> ap{};
                for (int t = 0; t < kTiles; ++t) ap[t] = alpha_corner(l, t);
                if (!have || ap > best) {
                    best = ap;
                    e.labels = l;
                    have = true;
                }
            }
            for (int t = 0; t < kTiles; ++t) e.states[t] = {1, best[t]};
        } else {
            e.labels = *members.begin();
            e.states = states_of(e.labels);
        }
        // every completion sharing the representative's inner edges
        for (const auto& l : members)
            if (inner(l) == inner(e.labels)) {
                e.completions.push_back(l);
                e.completion_states.push_back(combo == EdgeCombo::A3B2 ? e.states : states_of(l));
            }
        e.p1_symmetric = apply_sym(kP1Flip, e.labels) == e.labels;
        if (combo == EdgeCombo::A3B2) {
            if (e.labels[edge_index(vA(1), vB(1))] == 'a')
                e.name = "I";
            else
                e.name = e.p1_symmetric ? "II" : "III";
        }
        out.push_back(e);
    }
    std::sort(out.begin(), out.end(), [](const EdgeLabeling& x, const EdgeLabeling& y) { return x.name < y.name; });
    return out;
}

// ---- linear algebra -----------------------------------------------------------

bool Affine::depends_on_angles() const {
    for (std::size_t j = 2; j < c.size(); ++j)
        if (!c[j].is_zero()) return true;
    return false;
}

std::optional<FAngle> Affine::as_fangle() const {
    if (depends_on_angles()) return std::nullopt;
    return FAngle{c[0], c[1]};
}

bool Affine::is_zero() const {
    return std::all_of(c.begin(), c.end(), [](const Rational& q) { return q.is_zero(); });
}

Affine operator+(const Affine& x, const Affine& y) {
    Affine r = x;
    for (std::size_t j = 0; j < r.c.size(); ++j) r.c[j] += y.c[j];
    return r;
}

Affine operator-(const Affine& x, const Affine& y) {
    Affine r = x;
    for (std::size_t j = 0; j < r.c.size(); ++j) r.c[j] -= y.c[j];
    return r;
}

AngleSolve solve_vertex_equations(const std::vector<std::vector<int>>& rows, const std::vector<std::string>& names) {
    const int n = static_cast<int>(names.size());
    const int cols = n + 1;  // x_0..x_{n-1}, u
    std::vector<std::vector<Rational>> M;
    AngleSolve out;
    for (std::size_t k = 0; k < rows.size(); ++k) {
        std::vector<Rational> r(cols + 1);
        for (int j = 0; j < n; ++j) r[j] = rows[k][j];
        r[cols] = 2;
        M.push_back(r);
        out.equations.push_back(equation_text(vertex_name(static_cast<int>(k)), rows[k], names));
    }
    {
        std::vector<Rational> r(cols + 1);
        for (int j = 0; j < n; ++j) r[j] = 1;
        r[n] = -4;
        r[cols] = 3;
        M.push_back(r);
        out.equations.push_back("Σ: " + join(names, " + ") + " = 3π + 4π/f");
    }

    std::vector<int> pivot_row(cols, -1);
    int row = 0;
    for (int c = 0; c < cols && row < static_cast<int>(M.size()); ++c) {
        int p = -1;
        for (int r = row; r < static_cast<int>(M.size()); ++r)
            if (!M[r][c].is_zero()) {
                p = r;
                break;
            }
        if (p < 0) continue;
        std::swap(M[p], M[row]);
        Rational lead = M[row][c];
        for (auto& x : M[row]) x /= lead;
        for (int r = 0; r < static_cast<int>(M.size()); ++r) {
            if (r == row || M[r][c].is_zero()) continue;
            Rational k = M[r][c];
            for (int j = 0; j <= cols; ++j) M[r][j] -= k * M[row][j];
        }
        pivot_row[c] = row++;
    }
    for (int r = row; r < static_cast<int>(M.size()); ++r)
        if (!M[r][cols].is_zero()) return out;
    out.consistent = true;

    // variable order inside Affine: [1, u, x...]; column c maps to slot
    auto slot = [n](int c) { return c == n ? 1 : c + 2; };
    std::vector<Affine> var(cols, Affine{std::vector<Rational>(n + 2)});
    for (int c = 0; c < cols; ++c) {
        if (pivot_row[c] < 0) {
            var[c].c[slot(c)] = 1;
            continue;
        }
        const auto& r = M[pivot_row[c]];
        var[c].c[0] = r[cols];
        for (int j = 0; j < cols; ++j)
            if (j != c && pivot_row[j] < 0 && !r[j].is_zero()) var[c].c[slot(j)] -= r[j];
    }
    if (pivot_row[n] >= 0 && !var[n].depends_on_angles() && var[n].c[1].is_zero()) out.u = var[n].c[0];
    out.angle.assign(var.begin(), var.begin() + n);
    return out;
}

namespace {

std::vector<std::vector<int>> vertex_rows(const std::array<TileState, kTiles>& st, int nvars,
                                          const std::function<int(int)>& var_of_corner) {
    std::vector<std::vector<int>> rows;
    for (int k = 0; k < 5; ++k) {
        std::vector<int> r(nvars, 0);
        for (int t = 0; t < kTiles; ++t) {
            int i = corner_index(t, vA(k));
            if (i >= 0) r[var_of_corner(st[t].pattern_corner(i))] += 1;
        }
        rows.push_back(r);
    }
    return rows;
}

}  // namespace

CaseCertificate minimal_case_proof(EdgeCombo combo) {
    if (combo == EdgeCombo::A3B2) throw std::invalid_argument("minimal case proof applies to a2b2c and a3bc only");
    auto labs = enumerate_edge_congruent(combo);
    if (labs.size() != 1) throw std::logic_error("expected a single edge-congruent neighborhood");
    const EdgeLabeling& lab = labs[0];
    const TilePattern& pat = tile_pattern(combo);
    std::vector<std::string> names(pat.corners.begin(), pat.corners.end());

    CaseCertificate c;
    c.case_id = "minimal/" + combo_name(combo);
    c.contradiction = contradiction_name(ContradictionKind::FEquals12);
    std::set<int> fs;
    for (std::size_t k = 0; k < lab.completions.size(); ++k) {
        std::string tag = lab.completions.size() > 1 ? "completion " + std::to_string(k + 1) + ": " : "";
        auto rows = vertex_rows(lab.completion_states[k], 5, [](int j) { return j; });
        AngleSolve s = solve_vertex_equations(rows, names);
        c.premises.push_back(tag + "edge labels " + lab.completions[k]);
        for (const auto& e : s.equations) c.premises.push_back(tag + e);
        c.steps.push_back(Step::check(tag + "vertex equations are consistent", s.consistent));
        if (!s.consistent) continue;

        // angle total forced by the vertex equations alone
        Affine total{std::vector<Rational>(names.size() + 2)};
        for (const auto& a : s.angle) total = total + a;
        bool fixed = !total.depends_on_angles() && total.c[1].is_zero();
        c.steps.push_back(Step::check(tag + "vertex equations fix the angle total", fixed));
        if (!fixed) continue;
        Rational T = total.c[0];
        for (std::size_t j = 0; j < names.size(); ++j)
            if (auto fa = s.angle[j].as_fangle(); fa && fa->is_constant())
                c.auxiliary[tag + names[j]] = pi_str(fa->r);
        c.auxiliary[tag + "angle total"] = pi_str(T);
        c.steps.push_back(Step::exact(tag + "angle total exceeds 3π", T, Relation::Gt, 3));
        Rational f = Rational(4) / (T - 3);
        c.steps.push_back(Step::exact(tag + "3π + 4π/f = angle total gives f", f, Relation::Eq, 12));
        c.steps.push_back(Step::check(tag + "solved f is an even integer", f.is_integer() && f.num() % 2 == 0));
        c.steps.push_back(Step::exact(tag + "elimination with 1/f unknown agrees", s.u.value_or(Rational(-1)),
                                      Relation::Eq, Rational(1, 12)));
        if (f.is_integer()) fs.insert(static_cast<int>(f.num()));
    }
    c.f_values.assign(fs.begin(), fs.end());
    return c;
}

// ---- a3b2 branches -----------------------------------------------------------------

std::string contradiction_name(ContradictionKind k) {
    switch (k) {
        case ContradictionKind::EqualAngles: return "angle-equation-forces-equal-angles";
        case ContradictionKind::PcomboViolation: return "pcombo-violation";
        case ContradictionKind::EdgeMismatch: return "edge-mismatch";
        case ContradictionKind::FEquals12: return "f-equals-12";
    }
    return "?";
}

Angle NeighborhoodTiling::corner_angle(int t, int v) const {
    int i = corner_index(t, v);
    if (i < 0) throw std::invalid_argument("vertex " + vertex_name(v) + " is not on tile P" + std::to_string(t + 1));
    return kA3B2Corner[state(t).pattern_corner(i)];
}

Edge NeighborhoodTiling::edge_label(int u, int v) const {
    int e = edge_index(u, v);
    if (e < 0) throw std::invalid_argument(vertex_name(u) + vertex_name(v) + " is not a template edge");
    return labeling.labels[e] == 'b' ? Edge::B : Edge::A;
}

PartialVertex boundary_vertex(const NeighborhoodTiling& nt, int v) {
    PartialVertex p;
    int k = v % 5;
    if (v / 5 == 1) {
        int before = mod5(k - 1) + 1, after = k + 1;
        p.angles = {nt.corner_angle(before, v), nt.corner_angle(after, v)};
        p.inner = {nt.edge_label(vA(k), v)};
        p.left = nt.edge_label(vC(k - 1), v);
        p.right = nt.edge_label(v, vC(k));
    } else if (v / 5 == 2) {
        p.angles = {nt.corner_angle(k + 1, v)};
        p.left = nt.edge_label(vB(k), v);
        p.right = nt.edge_label(v, vB(k + 1));
    } else {
        throw std::invalid_argument(vertex_name(v) + " is an interior vertex");
    }
    return p;
}

std::string NeighborhoodTiling::orientation_str() const {
    std::string s;
    for (int t = 1; t < kTiles; ++t) s += orient[t] > 0 ? '+' : '-';
    return s;
}

namespace {

bool rows_match(const AngleSystem& solved, const AngleSystem& row, bool relabel) {
    if (solved.sum_only != row.sum_only) return false;
    auto get = [&](Angle x) { return row[relabel ? swap12(x) : x]; };
    if (solved[Angle::Alpha] != row[Angle::Alpha]) return false;
    if (solved[Angle::Phi1] != get(Angle::Phi1) || solved[Angle::Phi2] != get(Angle::Phi2)) return false;
    if (solved.sum_only) return solved.theta_sum == row.theta_sum;
    return solved[Angle::Theta1] == get(Angle::Theta1) && solved[Angle::Theta2] == get(Angle::Theta2);
}

std::string orient_image(const NeighborhoodTiling& nt) {
    // relabel∘flip sends the tile N_j to N_{1-j} and keeps its sign
    std::array<int, kTiles> o{};
    o[0] = 1;
    for (int j = 0; j < 5; ++j) o[mod5(1 - j) + 1] = nt.orient[j + 1];
    NeighborhoodTiling img = nt;
    img.orient = o;
    return img.orientation_str();
}

}  // namespace

BranchResult solve_branch(const EdgeLabeling& lab, const std::array<int, kTiles>& orient, int f,
                          const AngleTables& tables) {
    BranchResult r;
    r.tiling.labeling = lab;
    r.tiling.orient = orient;
    std::string own = r.tiling.orientation_str();
    r.orbit = lab.p1_symmetric ? std::min(own, orient_image(r.tiling)) : own;

    std::array<TileState, kTiles> st;
    for (int t = 0; t < kTiles; ++t) st[t] = r.tiling.state(t);
    std::vector<std::string> names;
    for (Angle x : kAllAngles) names.push_back(angle_symbol(x));
    auto rows = vertex_rows(st, 5, [](int j) { return static_cast<int>(kA3B2Corner[j]); });
    AngleSolve s = solve_vertex_equations(rows, names);
    std::string eqs = join(s.equations, "; ");

    if (!s.consistent) {
        r.contradiction = Contradiction{ContradictionKind::FEquals12, "vertex equations have no solution; " + eqs};
        return r;
    }
    // Forced equal angles is the primary contradiction; f = 12 is what it
    // leads to, so it is only reported when the angles stay apart.
    auto at = [&](Angle x) { return s.angle[static_cast<int>(x)]; };
    Affine dth = at(Angle::Theta1) - at(Angle::Theta2);
    Affine dph = at(Angle::Phi1) - at(Angle::Phi2);
    if (dth.is_zero() || dph.is_zero()) {
        r.contradiction = Contradiction{ContradictionKind::EqualAngles,
                                        std::string(dth.is_zero() ? "θ₁ = θ₂" : "φ₁ = φ₂") +
                                            " follows from the vertex equations; " + eqs};
        return r;
    }
    if (s.u) {
        std::string fs = s.u->is_zero() ? "∞" : (Rational(1) / *s.u).str();
        r.contradiction = Contradiction{ContradictionKind::FEquals12, "vertex equations force f = " + fs + "; " + eqs};
        return r;
    }
    auto fth = dth.as_fangle();
    auto fph = dph.as_fangle();
    if (fth && fph) {
        int sth = fth->eval(f).sign(), sph = fph->eval(f).sign();
        if (sth == 0 || sph == 0) {
            r.contradiction = Contradiction{ContradictionKind::EqualAngles,
                                            "θ₁ - θ₂ = " + fth->str() + " and φ₁ - φ₂ = " + fph->str() +
                                                " vanish at f = " + std::to_string(f)};
            return r;
        }
        if (sth == sph) {
            r.contradiction = Contradiction{ContradictionKind::PcomboViolation,
                                            "θ₁ - θ₂ = " + fth->str() + " and φ₁ - φ₂ = " + fph->str() +
                                                " have the same sign at f = " + std::to_string(f)};
            return r;
        }
    }

    AngleSystem sys;
    sys.name = lab.name + " " + own;
    bool ok = true;
    for (Angle x : {Angle::Alpha, Angle::Phi1, Angle::Phi2}) {
        if (auto fa = at(x).as_fangle())
            sys[x] = *fa;
        else
            ok = false;
    }
    auto t1 = at(Angle::Theta1).as_fangle(), t2 = at(Angle::Theta2).as_fangle();
    if (t1 && t2) {
        sys[Angle::Theta1] = *t1;
        sys[Angle::Theta2] = *t2;
        sys.theta_sum = *t1 + *t2;
    } else if (auto sum = (at(Angle::Theta1) + at(Angle::Theta2)).as_fangle()) {
        sys.sum_only = true;
        sys.theta_sum = *sum;
    } else {
        ok = false;
    }
    if (!ok) return r;
    r.system = sys;
    for (bool relabel : {false, true})
        for (NbType t : kAllTypes)
            if (!r.type && rows_match(sys, tables[t], relabel)) {
                r.type = t;
                r.relabeled = relabel;
            }
    return r;
}

std::vector<BranchResult> solve_angle_assignment(const EdgeLabeling& lab, int f, const AngleTables& tables) {
    if (lab.combo != EdgeCombo::A3B2) throw std::invalid_argument("orientation branches apply to a3b2 only");
    std::vector<BranchResult> out;
    for (int mask = 0; mask < 32; ++mask) {
        std::array<int, kTiles> o{};
        o[0] = 1;
        for (int k = 0; k < 5; ++k) o[k + 1] = (mask >> (4 - k)) & 1 ? -1 : 1;
        out.push_back(solve_branch(lab, o, f, tables));
    }
    return out;
}

std::map<NbType, NeighborhoodTiling> survivor_tilings(const AngleTables& tables, int f) {
    std::map<NbType, NeighborhoodTiling> out;
    for (const auto& lab : enumerate_edge_congruent(EdgeCombo::A3B2))
        for (const auto& b : solve_angle_assignment(lab, f, tables))
            if (b.type && !b.relabeled && !out.count(*b.type)) out.emplace(*b.type, b.tiling);
    for (NbType t : kAllTypes)
        if (!out.count(t)) throw std::runtime_error("no surviving neighborhood matches the " + type_name(t) + " row");
    return out;
}

NeighborhoodTiling survivor_tiling(const AngleTables& tables, NbType type, int f) {
    for (const auto& lab : enumerate_edge_congruent(EdgeCombo::A3B2))
        for (const auto& b : solve_angle_assignment(lab, f, tables))
            if (b.type == type && !b.relabeled) return b.tiling;
    throw std::runtime_error("no surviving neighborhood matches the " + type_name(type) + " row");
}

// ---- propagation -----------------------------------------------------------------

bool tables_compatible(const AngleSystem& src, const AngleSystem& dst, bool relabel) {
    for (int f = 18; f <= 100; f += 2) {
        bool ok = true;
        auto same = [&](Angle x) {
            Angle y = relabel ? swap12(x) : x;
            return src[x].eval(f) == dst[y].eval(f);
        };
        ok = same(Angle::Alpha) && same(Angle::Phi1) && same(Angle::Phi2) &&
             src.theta_sum.eval(f) == dst.theta_sum.eval(f);
        if (ok && !src.sum_only && !dst.sum_only) ok = same(Angle::Theta1) && same(Angle::Theta2);
        if (ok) return true;
    }
    return false;
}

namespace {

// Can the destination neighborhood sit with its center on tile Q of the
// source neighborhood? The destination center and each destination tile
// across a center edge whose image is also present in the source must carry
// the same angle names at corresponding corners.
bool fits_at(const NeighborhoodTiling& src, const NeighborhoodTiling& dst, int Q, bool relabel) {
    const auto& T = tmpl();
    const auto& c = T.tiles[0];
    const auto& qc = T.tiles[Q];
    for (bool refl : {false, true})
        for (int t0 = 0; t0 < 5; ++t0) {
            std::map<int, int> phi;  // destination vertex -> source vertex
            for (int m = 0; m < 5; ++m) phi[c[m]] = qc[mod5(refl ? t0 - m : t0 + m)];
            std::vector<std::pair<int, int>> pairs{{0, Q}};
            bool ok = true;
            for (int m = 0; m < 5 && ok; ++m) {
                int u = c[m], w = c[(m + 1) % 5];
                int te = tile_across(0, edge_index(u, w));
                int ts = tile_across(Q, edge_index(phi[u], phi[w]));
                if (ts < 0) continue;
                int i = corner_index(te, u), k = corner_index(ts, phi[u]);
                int d = refl ? -1 : 1;
                for (int r = 0; r < 5; ++r) {
                    int v = T.tiles[te][(i + r) % 5];
                    int sv = T.tiles[ts][mod5(k + d * r)];
                    auto it = phi.find(v);
                    if (it != phi.end() && it->second != sv) ok = false;
                    phi[v] = sv;
                }
                pairs.emplace_back(te, ts);
            }
            if (!ok) continue;
            bool match = true;
            for (auto [te, ts] : pairs)
                for (int v : T.tiles[te]) {
                    Angle a = dst.corner_angle(te, v);
                    if (relabel) a = swap12(a);
                    if (src.corner_angle(ts, phi[v]) != a) match = false;
                }
            if (match) return true;
        }
    return false;
}

}  // namespace

PropagationTable propagation_table(const AngleTables& tables) {
    auto surv = survivor_tilings(tables);
    PropagationTable out;
    for (NbType s : kAllTypes) {
        auto& row = out.entries[s];
        for (int j = 0; j < 5; ++j)
            for (NbType d : kAllTypes)
                for (bool relabel : {false, true})
                    if (tables_compatible(tables[s], tables[d], relabel) && fits_at(surv.at(s), surv.at(d), j + 1, relabel))
                        row[j].insert(d);
    }
    return out;
}

// ---- earth maps ----------------------------------------------------------------------

namespace {

// Faces of the distance-5 earth map with z timezones. Per timezone x the
// vertices are B, C, D, E, G, H; the poles N and S have degree z.
std::vector<std::vector<std::string>> distance5_faces(int z) {
    auto V = [z](const char* p, int x) { return std::string(p) + std::to_string(((x % z) + z) % z); };
    std::vector<std::vector<std::string>> faces;
    for (int x = 0; x < z; ++x) {
        faces.push_back({"N", V("B", x), V("G", x), V("C", x + 1), V("B", x + 1)});                 // T
        faces.push_back({V("B", x), V("C", x), V("D", x), V("H", x), V("G", x)});                   // U
        faces.push_back({V("G", x), V("C", x + 1), V("D", x + 1), V("E", x + 1), V("H", x)});       // W
        faces.push_back({V("E", x), "S", V("E", x + 1), V("H", x), V("D", x)});                     // S
    }
    return faces;
}

int max_cyclic_run(const std::array<std::set<NbType>, 5>& row) {
    int best = 0;
    for (int s = 0; s < 5; ++s) {
        int k = 0;
        while (k < 5 && !row[(s + k) % 5].empty()) ++k;
        best = std::max(best, k);
    }
    return best;
}

}  // namespace

EarthMapVerdict earth_map_compatible(int distance, const PropagationTable& table) {
    if (distance < 1 || distance > 5) throw std::invalid_argument("unsupported distance");
    EarthMapVerdict v{distance, false, ""};
    if (distance <= 4) {
        // These families contain a degree-3 tile with three consecutive
        // degree-3 neighbors, all of which must be neighborhood centers.
        int best = 0;
        for (const auto& [t, row] : table.entries) best = std::max(best, max_cyclic_run(row));
        v.compatible = best >= 3;
        v.reason = "max consecutive admissible positions = " + std::to_string(best) + (best >= 3 ? " >= 3" : " < 3");
        return v;
    }

    auto faces = distance5_faces(4);
    std::map<std::string, int> degree;
    for (const auto& fc : faces)
        for (const auto& x : fc) ++degree[x];
    auto core = [&](const std::vector<std::string>& fc) {
        return std::all_of(fc.begin(), fc.end(), [&](const std::string& x) { return degree[x] == 3; });
    };
    // core neighbor indices around each core face, in edge order
    std::vector<std::vector<int>> patterns;
    for (std::size_t i = 0; i < faces.size(); ++i) {
        if (!core(faces[i])) continue;
        std::vector<int> idx;
        for (int k = 0; k < 5; ++k) {
            const auto &u = faces[i][k], &w = faces[i][(k + 1) % 5];
            for (std::size_t j = 0; j < faces.size(); ++j) {
                if (j == i) continue;
                const auto& g = faces[j];
                for (int m = 0; m < 5; ++m)
                    if (((g[m] == w && g[(m + 1) % 5] == u) || (g[m] == u && g[(m + 1) % 5] == w)) && core(g))
                        idx.push_back(k);
            }
        }
        patterns.push_back(idx);
    }

    // Embeddings of the core neighbors onto admissible positions; each
    // embedding lists the entry set at every core neighbor.
    std::map<NbType, std::vector<std::vector<std::set<NbType>>>> embeddings;
    for (const auto& [t, row] : table.entries)
        for (const auto& idx : patterns)
            for (int s : {1, -1})
                for (int o = 0; o < 5; ++o) {
                    std::vector<std::set<NbType>> need;
                    for (int k : idx) need.push_back(row[mod5(o + s * k)]);
                    if (std::none_of(need.begin(), need.end(), [](const auto& e) { return e.empty(); }))
                        embeddings[t].push_back(need);
                }
    if (embeddings.empty()) {
        v.reason = "no type fits the core adjacency";
        return v;
    }
    std::set<NbType> alive;
    for (const auto& [t, _] : embeddings) alive.insert(t);
    auto meets = [&](const std::set<NbType>& e) {
        return std::any_of(e.begin(), e.end(), [&](NbType d) { return alive.count(d) > 0; });
    };
    bool changed = true;
    while (changed && !alive.empty()) {
        changed = false;
        for (NbType t : std::set<NbType>(alive)) {
            const auto& embs = embeddings[t];
            bool ok = std::any_of(embs.begin(), embs.end(),
                                  [&](const auto& need) { return std::all_of(need.begin(), need.end(), meets); });
            if (ok) continue;
            std::set<NbType> blocked;
            for (const auto& need : embs)
                for (const auto& e : need)
                    if (!meets(e)) blocked.insert(e.begin(), e.end());
            std::vector<std::string> names;
            for (NbType d : blocked) names.push_back(type_label(d));
            v.reason = type_label(t) + " forces " + join(names, ", ");
            alive.erase(t);
            changed = true;
        }
    }
    v.compatible = !alive.empty();
    if (v.compatible) v.reason = "consistent types remain";
    return v;
}

}  // namespace pentatile
