#include "pentatile/certificate.hpp"

#include <cmath>

namespace pentatile {

std::string relation_str(Relation r) {
    switch (r) {
        case Relation::Eq: return "=";
        case Relation::Ne: return "≠";
        case Relation::Lt: return "<";
        case Relation::Gt: return ">";
        case Relation::Le: return "≤";
        case Relation::Ge: return "≥";
    }
    return "?";
}

Step Step::exact(std::string text, Rational lhs, Relation rel, Rational rhs) {
    Step s;
    s.kind = Kind::Exact;
    s.text = std::move(text);
    s.lhs = lhs;
    s.rel = rel;
    s.rhs = rhs;
    return s;
}

Step Step::geometry(std::string text, double value, double expected, double tolerance, bool near) {
    Step s;
    s.kind = Kind::Geometry;
    s.text = std::move(text);
    s.value = value;
    s.expected = expected;
    s.tolerance = tolerance;
    s.near = near;
    return s;
}

Step Step::check(std::string text, bool holds) {
    Step s;
    s.kind = Kind::Combinatorial;
    s.text = std::move(text);
    s.holds = holds;
    return s;
}

bool Step::verify(double tolerance_override) const {
    switch (kind) {
        case Kind::Exact: {
            auto c = lhs <=> rhs;
            switch (rel) {
                case Relation::Eq: return c == 0;
                case Relation::Ne: return c != 0;
                case Relation::Lt: return c < 0;
                case Relation::Gt: return c > 0;
                case Relation::Le: return c <= 0;
                case Relation::Ge: return c >= 0;
            }
            return false;
        }
        case Kind::Geometry: {
            // A tighter override only applies to closeness claims; a separation
            // claim keeps its own margin.
            double diff = std::fabs(value - expected);
            if (!std::isfinite(diff)) return false;
            if (near) return diff <= (tolerance_override > 0 ? tolerance_override : tolerance);
            return diff > tolerance;
        }
        case Kind::Combinatorial: return holds;
    }
    return false;
}

bool CaseCertificate::verify(double tolerance_override) const { return first_failure(tolerance_override) < 0; }

int CaseCertificate::first_failure(double tolerance_override) const {
    for (std::size_t i = 0; i < steps.size(); ++i)
        if (!steps[i].verify(tolerance_override)) return static_cast<int>(i);
    return -1;
}

bool operator==(const Step& x, const Step& y) {
    if (x.kind != y.kind || x.text != y.text) return false;
    switch (x.kind) {
        case Step::Kind::Exact: return x.lhs == y.lhs && x.rhs == y.rhs && x.rel == y.rel;
        case Step::Kind::Geometry:
            return x.value == y.value && x.expected == y.expected && x.tolerance == y.tolerance && x.near == y.near;
        case Step::Kind::Combinatorial: return x.holds == y.holds;
    }
    return false;
}

bool operator==(const CaseCertificate& x, const CaseCertificate& y) {
    return x.case_id == y.case_id && x.f_values == y.f_values && x.premises == y.premises && x.steps == y.steps &&
           x.contradiction == y.contradiction && x.auxiliary == y.auxiliary && x.assumptions == y.assumptions;
}

}  // namespace pentatile
