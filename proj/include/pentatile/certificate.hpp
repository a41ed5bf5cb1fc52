#pragma once

#include <map>
#include <string>
#include <vector>

#include "pentatile/exact.hpp"

namespace pentatile {

enum class Relation { Eq, Ne, Lt, Gt, Le, Ge };
std::string relation_str(Relation r);

struct Step {
    enum class Kind { Exact, Geometry, Combinatorial };
    Kind kind = Kind::Exact;
    std::string text;
    // exact: lhs rel rhs, both in units of π unless the text says otherwise
    Rational lhs, rhs;
    Relation rel = Relation::Eq;
    // geometry: |value - expected| <= tolerance when near, > tolerance otherwise
    double value = 0, expected = 0, tolerance = 0;
    bool near = true;
    // combinatorial: recorded outcome of an exhaustive check
    bool holds = true;

    static Step exact(std::string text, Rational lhs, Relation rel, Rational rhs);
    static Step geometry(std::string text, double value, double expected, double tolerance, bool near = true);
    static Step check(std::string text, bool holds);

    // Re-checks the stored values. Geometry steps use the given tolerance
    // when it is positive, otherwise the stored one.
    bool verify(double tolerance_override = 0) const;
};

// A fact taken from outside the mechanized argument.
struct Assumption {
    std::string name;
    std::string statement;
    friend bool operator==(const Assumption&, const Assumption&) = default;
};

struct CaseCertificate {
    std::string case_id;
    std::vector<int> f_values;
    std::vector<std::string> premises;
    std::vector<Step> steps;
    std::string contradiction;  // kind
    std::map<std::string, std::string> auxiliary;
    std::vector<Assumption> assumptions;

    bool verify(double tolerance_override = 0) const;
    // first failing step, or -1
    int first_failure(double tolerance_override = 0) const;
};

bool operator==(const Step& x, const Step& y);
bool operator==(const CaseCertificate& x, const CaseCertificate& y);

}  // namespace pentatile
