#pragma once

#include <array>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "pentatile/certificate.hpp"
#include "pentatile/combinatorics.hpp"
#include "pentatile/exact.hpp"

namespace pentatile {

enum class EdgeCombo { A2B2C, A3BC, A3B2 };
std::string combo_name(EdgeCombo c);  // a2b2c, a3bc, a3b2
// Throws std::invalid_argument on an unknown name.
EdgeCombo parse_combo(const std::string& s);

// Pretty type label with subscripts: II, III₁, III₂, III₃.
std::string type_label(NbType t);

// The angle rows the neighborhood and case machinery read. Tests swap
// entries here to check that the pipeline notices.
struct AngleTables {
    std::map<NbType, AngleSystem> rows;
    static AngleTables standard();
    const AngleSystem& operator[](NbType t) const { return rows.at(t); }
};

// ---- neighborhood template ----------------------------------------------
//
// Vertices: A0..A4 (0..4) around the center, B0..B4 (5..9), C0..C4 (10..14).
// Tile 0 is the center [A0..A4]; tile j+1 is [A_{j+1}, A_j, B_j, C_j, B_{j+1}].
// All corner cycles run counterclockwise. Tile t is called P_{t+1}.
inline constexpr int kTiles = 6;
inline constexpr int kVertices = 15;
inline constexpr int kEdges = 20;

const std::array<std::array<int, 5>, kTiles>& template_tiles();
std::string vertex_name(int v);
// Index of the edge uv, or -1.
int edge_index(int u, int v);
std::pair<int, int> edge_ends(int e);
// Tile on the other side of edge e from tile t, or -1.
int tile_across(int t, int e);

// Edge labels around a pattern (edge i joins corner i and corner i+1) and
// the angle name at each corner.
struct TilePattern {
    EdgeCombo combo;
    std::array<char, 5> edges;
    std::array<std::string, 5> corners;
};
const TilePattern& tile_pattern(EdgeCombo c);

// Placement of a pattern on a template tile: corner i of the tile carries
// pattern corner orient*(i - rot) mod 5.
struct TileState {
    int orient = 1;
    int rot = 0;
    int pattern_corner(int i) const;
    int pattern_edge(int i) const;
    friend bool operator==(const TileState&, const TileState&) = default;
};

struct EdgeLabeling {
    EdgeCombo combo;
    std::string name;    // I, II, III for a3b2; "-" otherwise
    std::string labels;  // one char per template edge
    // One placement per tile. For a3b2 the rotation is the α corner and the
    // orientation is left at +1 (either orientation fits the labels).
    std::array<TileState, kTiles> states;
    // true when the labels are invariant under the reflection fixing P1
    bool p1_symmetric = false;
    // Full labelings with the same center and spoke labels as the
    // representative; they differ only on outer edges.
    std::vector<std::string> completions;
    std::vector<std::array<TileState, kTiles>> completion_states;
};

// Labelings of the template edges consistent with the pattern, up to the
// dihedral symmetry of the template. Labelings that agree on the center and
// spoke edges form one entry.
std::vector<EdgeLabeling> enumerate_edge_congruent(EdgeCombo combo);

// ---- exact linear solve with u = 1/f as an unknown --------------------------

// Affine expression over [1, u, x_0..x_{n-1}].
struct Affine {
    std::vector<Rational> c;  // size n + 2
    bool depends_on_angles() const;
    // FAngle when the expression does not involve free angles.
    std::optional<FAngle> as_fangle() const;
    bool is_zero() const;
    friend Affine operator-(const Affine& x, const Affine& y);
    friend Affine operator+(const Affine& x, const Affine& y);
};

struct AngleSolve {
    bool consistent = false;
    std::optional<Rational> u;        // set when the equations pin 1/f
    std::vector<Affine> angle;        // per variable
    std::vector<std::string> equations;  // human-readable rows
};

// rows[k][j] = multiplicity of variable j at vertex k (each row sums to 2π);
// the last equation is Σx = 3 + 4u.
AngleSolve solve_vertex_equations(const std::vector<std::vector<int>>& rows, const std::vector<std::string>& names);

CaseCertificate minimal_case_proof(EdgeCombo combo);

// ---- a3b2 branches -----------------------------------------------------------

enum class ContradictionKind { EqualAngles, PcomboViolation, EdgeMismatch, FEquals12 };
std::string contradiction_name(ContradictionKind k);

struct Contradiction {
    ContradictionKind kind;
    std::string detail;
};

struct NeighborhoodTiling {
    EdgeLabeling labeling;
    std::array<int, kTiles> orient{1, 1, 1, 1, 1, 1};

    TileState state(int t) const { return {orient[t], labeling.states[t].rot}; }
    Angle corner_angle(int t, int v) const;  // v is a template vertex of tile t
    std::string orientation_str() const;     // P2..P6, e.g. "+-+--"
    Edge edge_label(int u, int v) const;
};

// The corners a neighborhood contributes to a boundary vertex: two for B_j
// (P_j then P_{j+1}, joined by the spoke), one for C_j. Outer edges bound
// the run.
PartialVertex boundary_vertex(const NeighborhoodTiling& nt, int v);

struct BranchResult {
    NeighborhoodTiling tiling;
    std::optional<Contradiction> contradiction;
    std::optional<AngleSystem> system;  // solved angles of a survivor
    std::optional<NbType> type;         // Table row it matches
    bool relabeled = false;             // matched after θ₁↔θ₂, φ₁↔φ₂
    // Orbit representative under relabel∘flip, as an orientation string.
    std::string orbit;
};

// Solves one orientation branch and classifies it at f.
BranchResult solve_branch(const EdgeLabeling& lab, const std::array<int, kTiles>& orient, int f,
                          const AngleTables& tables);
// All 32 branches (P1 fixed positive) of one labeling.
std::vector<BranchResult> solve_angle_assignment(const EdgeLabeling& lab, int f, const AngleTables& tables);

// Survivor tiling for each type, taken from the unrelabeled branch. Throws
// std::runtime_error when a type has no survivor.
std::map<NbType, NeighborhoodTiling> survivor_tilings(const AngleTables& tables, int f = 24);
// The unrelabeled survivor matching one row; same error when it is missing.
NeighborhoodTiling survivor_tiling(const AngleTables& tables, NbType type, int f = 24);

// ---- propagation and earth maps -------------------------------------------------

// entries[t][k] is the set of types admissible at position k+1 (tile P_{k+2});
// empty means ✗.
struct PropagationTable {
    std::map<NbType, std::array<std::set<NbType>, 5>> entries;
};

// Two systems agree at some even f in [18, 100], optionally after relabeling.
bool tables_compatible(const AngleSystem& src, const AngleSystem& dst, bool relabel);
PropagationTable propagation_table(const AngleTables& tables);

struct EarthMapVerdict {
    int distance;
    bool compatible;
    std::string reason;
};
// Throws std::invalid_argument("unsupported distance") outside 1..5.
EarthMapVerdict earth_map_compatible(int distance, const PropagationTable& table);

}  // namespace pentatile
