#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "pentatile/exact.hpp"

namespace pentatile {

enum class Angle : int { Alpha = 0, Theta1 = 1, Theta2 = 2, Phi1 = 3, Phi2 = 4 };
inline constexpr int kNumAngles = 5;
inline constexpr std::array<Angle, 5> kAllAngles{Angle::Alpha, Angle::Theta1, Angle::Theta2, Angle::Phi1,
                                                  Angle::Phi2};

enum class Edge : int { A = 0, B = 1 };
enum class EdgeClass { BB, AB, AA };

EdgeClass edge_class(Angle x);
std::string angle_symbol(Angle x);  // α θ₁ θ₂ φ₁ φ₂
std::string angle_ascii(Angle x);   // alpha theta1 ...
char edge_char(Edge e);
// θ₁↔θ₂, φ₁↔φ₂
Angle swap12(Angle x);

struct DegreeVector {
    std::map<int, std::int64_t> v;  // degree -> number of vertices
};

// f/2 - 6 - sum_{k>=4} (k-3) v_k
Rational vertex_count_residual(const TilingParameters& p, const DegreeVector& d);
// Throws std::invalid_argument("inconsistent degree vector") if the residual is nonzero.
bool ldeg_guarantee(const DegreeVector& d, const TilingParameters& p);

enum class NbType { II, III1, III2, III3 };
inline constexpr std::array<NbType, 4> kAllTypes{NbType::II, NbType::III1, NbType::III2, NbType::III3};
std::string type_name(NbType t);  // II, III1, ...
NbType parse_type(const std::string& s);

struct AngleSystem {
    std::string name;
    std::array<FAngle, 5> angle;  // indexed by Angle
    // Type II before the split of θ₁+θ₂ is known: angle[θ₁], angle[θ₂] are unset.
    bool sum_only = false;
    FAngle theta_sum;

    const FAngle& operator[](Angle x) const { return angle[static_cast<int>(x)]; }
    FAngle& operator[](Angle x) { return angle[static_cast<int>(x)]; }
    FAngle total() const;
    bool all_positive(int f) const;
    bool distinct_nonalpha(int f) const;
};

AngleSystem angle_system(NbType t);
// Type II with θ₁ fixed; θ₂ follows from the known sum.
AngleSystem pin_theta1(const AngleSystem& ii, const FAngle& theta1, const std::string& name);
// θ₁↔θ₂, φ₁↔φ₂
AngleSystem swapped(const AngleSystem& sys, const std::string& name);

struct VertexSignature {
    std::array<int, 5> m{};  // multiplicities of α θ₁ θ₂ φ₁ φ₂

    int operator[](Angle x) const { return m[static_cast<int>(x)]; }
    int& operator[](Angle x) { return m[static_cast<int>(x)]; }
    int degree() const { return m[0] + m[1] + m[2] + m[3] + m[4]; }
    Rational sum(const AngleSystem& sys, int f) const;
    std::string str() const;  // α³, θ₁θ₂φ₂, ...
    static VertexSignature of(int a, int b1, int b2, int c1, int c2) { return {{a, b1, b2, c1, c2}}; }
    friend auto operator<=>(const VertexSignature&, const VertexSignature&) = default;
};

class AngleNonpositive : public std::domain_error {
public:
    using std::domain_error::domain_error;
};
class HypothesisViolated : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Every multiplicity vector of degree >= 3 with angle sum exactly 2π.
std::vector<VertexSignature> enumerate_vertex_signatures(const AngleSystem& sys, const TilingParameters& p);

struct AffineF {
    Rational coef;      // of F
    Rational constant;  // free term
    Rational at(const Rational& F) const { return coef * F + constant; }
    std::string str() const;  // 3F-2, F, 15F-12, 0
    friend bool operator==(const AffineF&, const AffineF&) = default;
};

struct FamilyRow {
    int a, b1, c1, c2;
    AffineF b2;
};

// F = 48/(60-f)
Rational family_F(int f);
// Families (a,b1,c1,c2) with b₂ affine in F, for the III₂ angle row. Ordered
// by the F coefficient of b₂, then a descending, then the constant descending.
std::vector<FamilyRow> vertex_family_table(const AngleSystem& sys);

bool ab_parity_ok(const VertexSignature& s);

struct VertexArrangement {
    std::vector<Angle> angles;
    std::vector<Edge> edges;  // edges[i] follows angles[i]

    std::size_t size() const { return angles.size(); }
    VertexSignature signature() const;
    std::string str() const;  // θ₁ b θ₁ a θ₂ b θ₂ a
    friend auto operator<=>(const VertexArrangement&, const VertexArrangement&) = default;
};

VertexArrangement canonical(const VertexArrangement& a);
std::vector<VertexArrangement> feasible_arrangements(const VertexSignature& s);

// A contiguous run of corners around a vertex. inner[i] sits between
// angles[i] and angles[i+1]; the outer edges bound the run.
struct PartialVertex {
    std::vector<Angle> angles;
    std::vector<Edge> inner;
    std::optional<Edge> left;
    std::optional<Edge> right;
    std::string str() const;
};

bool arrangement_matches(const VertexArrangement& arr, const PartialVertex& part);

struct KlemOptions {
    bool standard = true;  // θ₂ φ₁^k θ₂
    bool mirrored = false; // θ₁ φ₂^k θ₁
};

bool klem_violates(const VertexArrangement& arr, const KlemOptions& opt);

using ArrangementMap = std::map<VertexSignature, std::vector<VertexArrangement>>;

// Removes arrangements with a forbidden run and then signatures left empty.
// Throws HypothesisViolated when some signature holds φ₂ twice or the four
// non-α angles are not pairwise distinct at f.
ArrangementMap klem_filter(const ArrangementMap& arrangements, const AngleSystem& sys, int f,
                           const KlemOptions& opt = {});

struct AvcFlags {
    bool parity = true;
    bool arrangements = true;
    bool klem = true;
    bool klem_mirrored = false;
};

struct Avc {
    int f = 0;
    std::vector<VertexSignature> signatures;
    ArrangementMap arrangements;  // filled when the arrangement filter ran
    bool contains(const VertexSignature& s) const;
};

Avc compute_avc(const AngleSystem& sys, const TilingParameters& p, const AvcFlags& flags = {});
Avc compute_avc(NbType t, const TilingParameters& p, const AvcFlags& flags = {});

// Arrangements of the AVC that extend the partial vertex.
std::vector<VertexArrangement> matching_arrangements(const Avc& avc, const PartialVertex& part);

// Multisets of angles (no degree bound) whose sum is exactly the given value.
std::vector<VertexSignature> completions(const AngleSystem& sys, int f, const Rational& remaining);

}  // namespace pentatile
