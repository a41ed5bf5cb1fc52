#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace pentatile {

struct SpherePoint {
    double x = 0, y = 0, z = 1;

    static SpherePoint normalized(double x, double y, double z);
    double dot(const SpherePoint& o) const { return x * o.x + y * o.y + z * o.z; }
    SpherePoint cross(const SpherePoint& o) const {
        return {y * o.z - z * o.y, z * o.x - x * o.z, x * o.y - y * o.x};
    }
    double norm() const;
    friend SpherePoint operator+(const SpherePoint& a, const SpherePoint& b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
    friend SpherePoint operator-(const SpherePoint& a, const SpherePoint& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
    friend SpherePoint operator*(double k, const SpherePoint& a) { return {k * a.x, k * a.y, k * a.z}; }
};

class GeometryError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

struct Arc {
    double length;   // in [0, π]
    bool antipodal;  // endpoints antipodal within 1e-12
};
Arc arc_length(const SpherePoint& p, const SpherePoint& q);

// Unit tangent at p pointing along the great circle towards q.
SpherePoint tangent(const SpherePoint& p, const SpherePoint& q);
// Rodrigues rotation of v about a unit axis.
SpherePoint rotate(const SpherePoint& v, const SpherePoint& axis, double angle);
// Point at distance len from p in tangent direction d.
SpherePoint step(const SpherePoint& p, const SpherePoint& d, double len);

enum class Simplicity { Simple, NonSimple, Borderline };

struct SphericalPolygon {
    std::vector<SpherePoint> vertices;

    std::size_t size() const { return vertices.size(); }
    std::vector<double> angles() const;
    std::vector<double> edges() const;
    // Non-adjacent arcs are tested for crossings; near misses within the
    // clearance band count as borderline.
    Simplicity simplicity(double band = 1e-10) const;
};

// Oriented interior angle in [0, 2π). Throws GeometryError on a zero-length
// adjacent edge.
double interior_angle(const SphericalPolygon& poly, std::size_t i);
// Signed area from a fan of triangles.
double signed_area(const SphericalPolygon& poly);
// Σ angles − (n−2)π − area, reduced into (−2π, 2π].
double girard_residual(const SphericalPolygon& poly);

// Isosceles triangle (b, b, c) with apex α and base angles θ.
double isosceles_cos_c(double alpha, double theta);

struct QuadAngles {
    double beta, gamma, delta, epsilon;
};

// cos a from the two quadrilateral relations. Throws GeometryError
// ("degenerate-denominator") when a denominator vanishes.
std::pair<double, double> quad_cos_a(const QuadAngles& q);
// Multiplied-out forms, zero at the true cos a.
double quad_eq3_residual(const QuadAngles& q, double cos_a);
double quad_eq4_residual(const QuadAngles& q, double cos_a);
double quad_identity_residual(const QuadAngles& q);
double quad_cos_c(double a, double delta, double epsilon);

// Residuals of the two split relations for a pentagon with angles β, γ, δ, ε
// at B, C, D, E, edge a, and base angle θ of the cut-off triangle ABC.
std::pair<double, double> pentagon_split_residuals(const QuadAngles& q, double a, double theta);

struct QuadraticLMN {
    double L, M, N;
};
struct QuadraticPQR {
    double P, Q, R;
};
QuadraticLMN lmn(const QuadAngles& q);
QuadraticPQR pqr(const QuadAngles& q);

struct QuadraticRoots {
    std::vector<double> roots;  // real roots with multiplicity
    bool no_real_root = false;
    bool linear = false;
};
// Throws GeometryError("identically zero") when every coefficient is below 1e-12.
QuadraticRoots solve_quadratic(double c2, double c1, double c0);

// □BDEC with BD = EC = a, DE = de, interior angles δ at D and ε at E.
// Vertices are returned in the order B, D, E, C. Throws GeometryError
// ("non-simple") when the boundary crosses itself and check is set.
SphericalPolygon construct_quadrilateral(double a, double delta, double epsilon, std::optional<double> de = std::nullopt,
                                         bool check = true);
// Pentagon A, B, D, E, C with the quadrilateral part above and A on the
// perpendicular bisector of BC at parameter t along it.
SphericalPolygon construct_split_pentagon(double a, double delta, double epsilon, double t);
// Pentagon A, B, D, E, C from a quadrilateral B, D, E, C and the pentagon
// angles β at B and γ at C; A is where the two rays meet.
SphericalPolygon close_pentagon(const SphericalPolygon& quad, double beta, double gamma);

enum class Pcombo { Holds, Violated, Boundary };
// Quadrilateral B, D, E, C or pentagon A, B, D, E, C: β>γ must go with δ<ε.
// Differences below the band count as equality; the two equalities must
// co-occur, otherwise the sample is Boundary.
Pcombo pcombo_verdict(const SphericalPolygon& poly, double band = 1e-7);
bool pcombo_check(const SphericalPolygon& poly, double band = 1e-7);

struct LemmaSampleReport {
    int accepted = 0;
    int non_simple = 0;
    int boundary = 0;
    int violations = 0;
    int attempts = 0;
};
// Sample until `samples` simple polygons are accepted (or 50x attempts).
// Sample i draws from its own stream keyed by (seed, i).
LemmaSampleReport lemma1_monte_carlo(int samples, std::uint64_t seed);
LemmaSampleReport lemma2_monte_carlo(int samples, std::uint64_t seed);

struct FormulaOracleReport {
    int quads = 0, pentagons = 0;
    double eq3 = 0, eq4 = 0, eq5 = 0, eq6 = 0;   // worst residuals over quadrilaterals
    double eq7 = 0, eq8 = 0, lmn_root = 0, pqr_root = 0;  // worst over pentagons
};
FormulaOracleReport formula_oracle(int quads, int pentagons, std::uint64_t seed);

struct FiveAngleResidual {
    double residual;
    double theta;
    double a;
};
// Solves (P,Q,R) for cot θ and (L,M,N) for cos a, keeps pairs satisfying
// both split relations, and evaluates the five-angle equality at the best
// pair. Throws GeometryError("no consistent split") when no pair fits.
FiveAngleResidual pentagon_angle_equality_residual(double alpha, const QuadAngles& q);

}  // namespace pentatile
