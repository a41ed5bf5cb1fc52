#include "pentatile/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

namespace pentatile {

namespace {

constexpr double kPi = std::numbers::pi;

double mod2pi(double x) {
    double r = std::fmod(x, 2 * kPi);
    if (r < 0) r += 2 * kPi;
    return r;
}

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::mt19937_64 sample_stream(std::uint64_t seed, std::uint64_t i) {
    return std::mt19937_64(splitmix64(seed ^ splitmix64(i)));
}

double uniform(std::mt19937_64& g, double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(g); }

double dist(const SpherePoint& p, const SpherePoint& q) { return std::atan2(p.cross(q).norm(), p.dot(q)); }

const SpherePoint kPole{0, 0, 1};
const SpherePoint kX{1, 0, 0};

}  // namespace

SpherePoint SpherePoint::normalized(double x, double y, double z) {
    double n = std::sqrt(x * x + y * y + z * z);
    if (n == 0) throw GeometryError("zero vector");
    return {x / n, y / n, z / n};
}

double SpherePoint::norm() const { return std::sqrt(x * x + y * y + z * z); }

Arc arc_length(const SpherePoint& p, const SpherePoint& q) {
    double l = dist(p, q);
    return {l, (p + q).norm() < 1e-12};
}

SpherePoint tangent(const SpherePoint& p, const SpherePoint& q) {
    SpherePoint t = q - p.dot(q) * p;
    double n = t.norm();
    if (n < 1e-15) throw GeometryError("degenerate edge");
    return (1 / n) * t;
}

SpherePoint rotate(const SpherePoint& v, const SpherePoint& axis, double angle) {
    return std::cos(angle) * v + std::sin(angle) * axis.cross(v) + (axis.dot(v) * (1 - std::cos(angle))) * axis;
}

SpherePoint step(const SpherePoint& p, const SpherePoint& d, double len) {
    return std::cos(len) * p + std::sin(len) * d;
}

double interior_angle(const SphericalPolygon& poly, std::size_t i) {
    const auto& v = poly.vertices;
    std::size_t n = v.size();
    const SpherePoint& p = v[i];
    SpherePoint u = tangent(p, v[(i + 1) % n]);
    SpherePoint w = tangent(p, v[(i + n - 1) % n]);
    return mod2pi(std::atan2(p.dot(u.cross(w)), u.dot(w)));
}

std::vector<double> SphericalPolygon::angles() const {
    std::vector<double> out;
    for (std::size_t i = 0; i < vertices.size(); ++i) out.push_back(interior_angle(*this, i));
    return out;
}

std::vector<double> SphericalPolygon::edges() const {
    std::vector<double> out;
    for (std::size_t i = 0; i < vertices.size(); ++i)
        out.push_back(dist(vertices[i], vertices[(i + 1) % vertices.size()]));
    return out;
}

Simplicity SphericalPolygon::simplicity(double band) const {
    const auto& v = vertices;
    std::size_t n = v.size();
    bool borderline = false;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            std::size_t d = j - i;
            if (d == 1 || d == n - 1) continue;
            const SpherePoint &p1 = v[i], &p2 = v[(i + 1) % n], &q1 = v[j], &q2 = v[(j + 1) % n];
            SpherePoint x = p1.cross(p2).cross(q1.cross(q2));
            if (x.norm() < 1e-12) {
                borderline = true;
                continue;
            }
            x = (1 / x.norm()) * x;
            double best = 1e300;
            for (double s : {1.0, -1.0}) {
                SpherePoint c = s * x;
                double sp = dist(p1, c) + dist(c, p2) - dist(p1, p2);
                double sq = dist(q1, c) + dist(c, q2) - dist(q1, q2);
                best = std::min(best, std::max(sp, sq));
            }
            if (best <= 1e-13) return Simplicity::NonSimple;
            if (best < band) borderline = true;
        }
    return borderline ? Simplicity::Borderline : Simplicity::Simple;
}

double signed_area(const SphericalPolygon& poly) {
    const auto& v = poly.vertices;
    double area = 0;
    for (std::size_t i = 1; i + 1 < v.size(); ++i) {
        const SpherePoint &p = v[0], &q = v[i], &r = v[i + 1];
        area += 2 * std::atan2(p.dot(q.cross(r)), 1 + p.dot(q) + q.dot(r) + r.dot(p));
    }
    return area;
}

double girard_residual(const SphericalPolygon& poly) {
    double sum = 0;
    for (double a : poly.angles()) sum += a;
    double r = sum - (static_cast<double>(poly.size()) - 2) * kPi - signed_area(poly);
    r = std::fmod(r, 4 * kPi);
    if (r > 2 * kPi) r -= 4 * kPi;
    if (r <= -2 * kPi) r += 4 * kPi;
    return r;
}

double isosceles_cos_c(double alpha, double theta) {
    double s = std::sin(theta);
    if (std::fabs(s) < 1e-12) throw GeometryError("pole singularity");
    double cot = std::cos(theta) / s;
    return std::cos(alpha) + (1 + std::cos(alpha)) * cot * cot;
}

std::pair<double, double> quad_cos_a(const QuadAngles& q) {
    double d3 = std::sin(q.gamma) * (1 - std::cos(q.epsilon));
    double d4 = std::sin(q.beta) * (1 - std::cos(q.delta));
    if (std::fabs(d3) < 1e-12 || std::fabs(d4) < 1e-12) throw GeometryError("degenerate-denominator");
    return {(std::sin(q.beta) + std::cos(q.gamma) * std::sin(q.epsilon)) / d3,
            (std::sin(q.gamma) + std::cos(q.beta) * std::sin(q.delta)) / d4};
}

double quad_eq3_residual(const QuadAngles& q, double ca) {
    return std::sin(q.beta) + std::cos(q.gamma) * std::sin(q.epsilon) - ca * std::sin(q.gamma) * (1 - std::cos(q.epsilon));
}

double quad_eq4_residual(const QuadAngles& q, double ca) {
    return std::sin(q.gamma) + std::cos(q.beta) * std::sin(q.delta) - ca * std::sin(q.beta) * (1 - std::cos(q.delta));
}

double quad_identity_residual(const QuadAngles& q) {
    double sb = std::sin(q.beta), sg = std::sin(q.gamma);
    return (sb + std::cos(q.gamma) * std::sin(q.epsilon)) * sb * (1 - std::cos(q.delta)) -
           (sg + std::cos(q.beta) * std::sin(q.delta)) * sg * (1 - std::cos(q.epsilon));
}

double quad_cos_c(double a, double delta, double epsilon) {
    double ca = std::cos(a), cd = std::cos(delta), ce = std::cos(epsilon);
    double sd = std::sin(delta), se = std::sin(epsilon);
    return ca * ca * ca * (1 - cd) * (1 - ce) - ca * ca * sd * se + ca * (cd + ce - cd * ce) + sd * se;
}

std::pair<double, double> pentagon_split_residuals(const QuadAngles& q, double a, double theta) {
    double s = std::sin(theta);
    if (std::fabs(s) < 1e-12) throw GeometryError("pole singularity");
    double ct = std::cos(theta) / s, ca = std::cos(a);
    double sb = std::sin(q.beta), cb = std::cos(q.beta), sg = std::sin(q.gamma), cg = std::cos(q.gamma);
    double sd = std::sin(q.delta), cd = std::cos(q.delta), se = std::sin(q.epsilon), ce = std::cos(q.epsilon);
    double r7 = (sb + cg * se) * ct - cb + sg * se - ca * (sg * ct - cg) * (1 - ce);
    double r8 = (sg + cb * sd) * ct - cg + sb * sd - ca * (sb * ct - cb) * (1 - cd);
    return {r7, r8};
}

QuadraticLMN lmn(const QuadAngles& q) {
    double s = std::sin(q.beta - q.gamma);
    double sd = std::sin(q.delta), se = std::sin(q.epsilon);
    return {s * (1 - std::cos(q.delta)) * (1 - std::cos(q.epsilon)),
            std::cos(q.beta - q.gamma) * (se - sd + std::sin(q.delta - q.epsilon)), sd - se - s * (1 - sd * se)};
}

QuadraticPQR pqr(const QuadAngles& q) {
    double b = q.beta, g = q.gamma;
    double sd = std::sin(q.delta), se = std::sin(q.epsilon);
    double od = 1 - std::cos(q.delta), oe = 1 - std::cos(q.epsilon);
    double P = std::sin(b) * (std::sin(b) + std::cos(g) * se) * od - std::sin(g) * (std::sin(g) + std::cos(b) * sd) * oe;
    double Q = -(std::sin(2 * b) + std::cos(b + g) * se) * od + (std::sin(2 * g) + std::cos(b + g) * sd) * oe;
    double R = std::cos(b) * (std::cos(b) - std::sin(g) * se) * od - std::cos(g) * (std::cos(g) - std::sin(b) * sd) * oe;
    return {P, Q, R};
}

QuadraticRoots solve_quadratic(double c2, double c1, double c0) {
    if (std::fabs(c2) < 1e-12 && std::fabs(c1) < 1e-12 && std::fabs(c0) < 1e-12) throw GeometryError("identically zero");
    QuadraticRoots r;
    if (std::fabs(c2) < 1e-10) {
        r.linear = true;
        if (std::fabs(c1) < 1e-12)
            r.no_real_root = true;
        else
            r.roots.push_back(-c0 / c1);
        return r;
    }
    double disc = c1 * c1 - 4 * c2 * c0;
    double scale = std::max({c1 * c1, std::fabs(4 * c2 * c0), 1e-300});
    if (disc < -1e-12 * scale) {
        r.no_real_root = true;
        return r;
    }
    if (disc < 0) disc = 0;
    // numerically stable pair
    double sq = std::sqrt(disc);
    double qv = -0.5 * (c1 + (c1 >= 0 ? sq : -sq));
    double x1 = qv / c2;
    double x2 = qv != 0 ? c0 / qv : x1;
    if (x1 > x2) std::swap(x1, x2);
    r.roots = {x1, x2};
    return r;
}

SphericalPolygon construct_quadrilateral(double a, double delta, double epsilon, std::optional<double> de, bool check) {
    double side = de.value_or(a);
    if (!(a > 0 && a < kPi) || !(side > 0 && side < kPi)) throw std::invalid_argument("edge length must lie in (0, π)");
    if (!(delta > 0 && delta < 2 * kPi) || !(epsilon > 0 && epsilon < 2 * kPi))
        throw std::invalid_argument("angles must lie in (0, 2π)");
    SpherePoint D = kPole;
    SpherePoint E = step(D, kX, side);
    SpherePoint B = step(D, rotate(tangent(D, E), D, delta), a);
    SpherePoint C = step(E, rotate(tangent(E, D), E, -epsilon), a);
    SphericalPolygon q{{B, D, E, C}};
    if (check && q.simplicity() == Simplicity::NonSimple) throw GeometryError("non-simple");
    return q;
}

SphericalPolygon construct_split_pentagon(double a, double delta, double epsilon, double t) {
    SphericalPolygon q = construct_quadrilateral(a, delta, epsilon, std::nullopt, false);
    const SpherePoint &B = q.vertices[0], &C = q.vertices[3];
    SpherePoint M = B + C;
    SpherePoint n = C.cross(B);
    if (M.norm() < 1e-12 || n.norm() < 1e-12) throw GeometryError("degenerate base");
    M = (1 / M.norm()) * M;
    n = (1 / n.norm()) * n;
    SpherePoint A = std::cos(t) * M + std::sin(t) * n;
    return {{A, q.vertices[0], q.vertices[1], q.vertices[2], q.vertices[3]}};
}

SphericalPolygon close_pentagon(const SphericalPolygon& quad, double beta, double gamma) {
    const SpherePoint &B = quad.vertices[0], &D = quad.vertices[1], &E = quad.vertices[2], &C = quad.vertices[3];
    SpherePoint dB = rotate(tangent(B, D), B, beta);
    SpherePoint dC = rotate(tangent(C, E), C, -gamma);
    SpherePoint A = B.cross(dB).cross(C.cross(dC));
    if (A.norm() < 1e-12) throw GeometryError("rays do not meet");
    A = (1 / A.norm()) * A;
    if (A.dot(dB) < 0) A = -1.0 * A;
    return {{A, B, D, E, C}};
}

Pcombo pcombo_verdict(const SphericalPolygon& poly, double band) {
    auto ang = poly.angles();
    double beta, gamma, delta, epsilon;
    if (ang.size() == 4) {
        beta = ang[0], delta = ang[1], epsilon = ang[2], gamma = ang[3];
    } else if (ang.size() == 5) {
        beta = ang[1], delta = ang[2], epsilon = ang[3], gamma = ang[4];
    } else {
        throw std::invalid_argument("pcombo check needs a quadrilateral or a pentagon");
    }
    bool eq1 = std::fabs(beta - gamma) < band, eq2 = std::fabs(delta - epsilon) < band;
    if (eq1 && eq2) return Pcombo::Holds;
    if (eq1 || eq2) return Pcombo::Boundary;
    return (beta > gamma) == (delta < epsilon) ? Pcombo::Holds : Pcombo::Violated;
}

bool pcombo_check(const SphericalPolygon& poly, double band) { return pcombo_verdict(poly, band) != Pcombo::Violated; }

namespace {

template <class Draw>
LemmaSampleReport run_lemma(int samples, std::uint64_t seed, Draw draw) {
    LemmaSampleReport r;
    const long cap = 50L * samples;
    for (std::uint64_t i = 0; r.accepted < samples && r.attempts < cap; ++i) {
        ++r.attempts;
        auto g = sample_stream(seed, i);
        SphericalPolygon p;
        try {
            p = draw(g);
            if (p.simplicity() != Simplicity::Simple) {
                ++r.non_simple;
                continue;
            }
            switch (pcombo_verdict(p)) {
                case Pcombo::Boundary: ++r.boundary; continue;
                case Pcombo::Violated: ++r.violations; break;
                case Pcombo::Holds: break;
            }
        } catch (const GeometryError&) {
            ++r.non_simple;
            continue;
        }
        ++r.accepted;
    }
    return r;
}

}  // namespace

LemmaSampleReport lemma1_monte_carlo(int samples, std::uint64_t seed) {
    return run_lemma(samples, seed, [](std::mt19937_64& g) {
        double b = uniform(g, 0.05, kPi - 0.05);
        double al = uniform(g, 0.05, 2 * kPi - 0.05);
        double a = uniform(g, 0.05, kPi - 0.05);
        double u = uniform(g, 0, 2 * kPi), w = uniform(g, 0, 2 * kPi);
        SpherePoint A = kPole;
        SpherePoint B = step(A, kX, b);
        SpherePoint C = step(A, rotate(kX, A, -al), b);
        SpherePoint D = step(B, rotate(tangent(B, A), B, u), a);
        SpherePoint E = step(C, rotate(tangent(C, A), C, w), a);
        return SphericalPolygon{{A, B, D, E, C}};
    });
}

LemmaSampleReport lemma2_monte_carlo(int samples, std::uint64_t seed) {
    return run_lemma(samples, seed, [](std::mt19937_64& g) {
        double a = uniform(g, 0.05, kPi - 0.05);
        double de = uniform(g, 0.05, kPi - 0.05);
        double d = uniform(g, 0.05, 2 * kPi - 0.05);
        double e = uniform(g, 0.05, 2 * kPi - 0.05);
        return construct_quadrilateral(a, d, e, de, false);
    });
}

FormulaOracleReport formula_oracle(int quads, int pentagons, std::uint64_t seed) {
    FormulaOracleReport r;
    auto worst = [](double& slot, double v) { slot = std::max(slot, std::fabs(v)); };
    for (std::uint64_t i = 0; r.quads < quads && i < 50ULL * quads; ++i) {
        auto g = sample_stream(seed, i);
        double a = uniform(g, 0.05, kPi - 0.05);
        double d = uniform(g, 0.05, 2 * kPi - 0.05);
        double e = uniform(g, 0.05, 2 * kPi - 0.05);
        SphericalPolygon q = construct_quadrilateral(a, d, e, std::nullopt, false);
        if (q.simplicity() != Simplicity::Simple) continue;
        auto ang = q.angles();
        QuadAngles qa{ang[0], ang[3], ang[1], ang[2]};
        worst(r.eq3, quad_eq3_residual(qa, std::cos(a)));
        worst(r.eq4, quad_eq4_residual(qa, std::cos(a)));
        worst(r.eq5, quad_identity_residual(qa));
        worst(r.eq6, quad_cos_c(a, d, e) - q.vertices[0].dot(q.vertices[3]));
        ++r.quads;
    }
    for (std::uint64_t i = 0; r.pentagons < pentagons && i < 50ULL * pentagons; ++i) {
        auto g = sample_stream(seed + 1, i);
        double a = uniform(g, 0.1, kPi - 0.1);
        double d = uniform(g, 0.1, 2 * kPi - 0.1);
        double e = uniform(g, 0.1, 2 * kPi - 0.1);
        double t = uniform(g, 0.1, 1.4);
        SphericalPolygon p;
        try {
            p = construct_split_pentagon(a, d, e, t);
        } catch (const GeometryError&) {
            continue;
        }
        if (p.simplicity() != Simplicity::Simple) continue;
        auto ang = p.angles();
        QuadAngles qa{ang[1], ang[4], ang[2], ang[3]};
        SphericalPolygon tri{{p.vertices[0], p.vertices[1], p.vertices[4]}};
        double theta = interior_angle(tri, 1);
        auto [r7, r8] = pentagon_split_residuals(qa, a, theta);
        worst(r.eq7, r7);
        worst(r.eq8, r8);
        double ca = std::cos(a), ct = std::cos(theta) / std::sin(theta);
        auto l = lmn(qa);
        auto k = pqr(qa);
        worst(r.lmn_root, l.L * ca * ca + l.M * ca + l.N);
        worst(r.pqr_root, k.P * ct * ct + k.Q * ct + k.R);
        ++r.pentagons;
    }
    return r;
}

FiveAngleResidual pentagon_angle_equality_residual(double alpha, const QuadAngles& q) {
    auto k = pqr(q);
    QuadraticRoots cots;
    try {
        cots = solve_quadratic(k.P, k.Q, k.R);
    } catch (const GeometryError&) {
        throw GeometryError("no consistent split");
    }
    std::optional<FiveAngleResidual> best;
    for (double ct : cots.roots) {
        double theta = std::atan2(1.0, ct);
        std::vector<double> cas;
        auto l = lmn(q);
        try {
            auto r = solve_quadratic(l.L, l.M, l.N);
            cas = r.roots;
        } catch (const GeometryError&) {
            // dependent equations: read cos a off the quadrilateral part
            QuadAngles part{q.beta - theta, q.gamma - theta, q.delta, q.epsilon};
            try {
                cas.push_back(quad_cos_a(part).first);
            } catch (const GeometryError&) {
            }
        }
        for (double ca : cas) {
            if (std::fabs(ca) > 1 + 1e-9) continue;
            ca = std::clamp(ca, -1.0, 1.0);
            double a = std::acos(ca);
            auto [r7, r8] = pentagon_split_residuals(q, a, theta);
            if (std::fabs(r7) > 1e-6 || std::fabs(r8) > 1e-6) continue;
            double s2 = 1 - ca * ca;
            double cd = std::cos(q.delta), ce = std::cos(q.epsilon);
            double cos_c = ca - s2 * ca * (1 - cd) * (1 - ce) + s2 * std::sin(q.delta) * std::sin(q.epsilon);
            double res = std::cos(alpha) + (1 + std::cos(alpha)) * ct * ct - cos_c;
            if (!best || std::fabs(res) < std::fabs(best->residual)) best = FiveAngleResidual{res, theta, a};
        }
    }
    if (!best) throw GeometryError("no consistent split");
    return *best;
}

}  // namespace pentatile
