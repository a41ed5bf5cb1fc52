#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace pentatile {

// Reduced fraction over int64. Intermediate products use __int128 and any
// result that does not fit back into int64 throws std::overflow_error.
class Rational {
public:
    constexpr Rational() = default;
    Rational(std::int64_t n);  // NOLINT(google-explicit-constructor)
    Rational(std::int64_t n, std::int64_t d);

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    bool is_integer() const { return den_ == 1; }
    bool is_zero() const { return num_ == 0; }
    int sign() const { return (num_ > 0) - (num_ < 0); }
    std::int64_t floor() const;
    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

    // "p/q", or "p" when the denominator is 1.
    std::string str() const;
    static Rational parse(const std::string& text);

    Rational operator-() const;
    friend Rational operator+(const Rational& x, const Rational& y);
    friend Rational operator-(const Rational& x, const Rational& y);
    friend Rational operator*(const Rational& x, const Rational& y);
    friend Rational operator/(const Rational& x, const Rational& y);
    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend bool operator==(const Rational& x, const Rational& y) = default;
    friend std::strong_ordering operator<=>(const Rational& x, const Rational& y);

private:
    static Rational from_wide(__int128 n, __int128 d);
    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

struct TilingParameters {
    int f;
    // Throws std::invalid_argument unless f is even and at least 12.
    explicit TilingParameters(int tiles);
};

// (r + s/f) * pi
struct FAngle {
    Rational r;
    Rational s;

    FAngle() = default;
    FAngle(Rational r_, Rational s_) : r(r_), s(s_) {}
    static FAngle constant(Rational r_) { return {r_, 0}; }

    Rational eval(int f) const;
    bool is_constant() const { return s.is_zero(); }

    // "5/6 - 2/f", "2/3", "8/f", "0"
    std::string str() const;
    // evaluated value as "p/q π"
    std::string str_at(int f) const;

    FAngle operator-() const { return {-r, -s}; }
    friend FAngle operator+(const FAngle& x, const FAngle& y) { return {x.r + y.r, x.s + y.s}; }
    friend FAngle operator-(const FAngle& x, const FAngle& y) { return {x.r - y.r, x.s - y.s}; }
    friend FAngle operator*(const Rational& k, const FAngle& x) { return {k * x.r, k * x.s}; }
    FAngle& operator+=(const FAngle& o) { return *this = *this + o; }
    friend bool operator==(const FAngle&, const FAngle&) = default;
};

Rational fangle_eval(const FAngle& a, const TilingParameters& p);
std::strong_ordering fangle_cmp(const FAngle& a, const FAngle& b, const TilingParameters& p);

// Renders a rational multiple of pi, e.g. "3/4 π", "π", "0".
std::string pi_str(const Rational& q);

struct LinearSolveResult {
    bool all_f = false;
    std::vector<int> fs;  // even tile counts in [f_min, f_max], ascending
    bool empty() const { return !all_f && fs.empty(); }
};

// Solves sum(m_i * angle_i) = target for f. Only even f in [f_min, f_max]
// are reported.
LinearSolveResult fangle_linear_solve(const std::vector<std::pair<FAngle, std::int64_t>>& coeffs,
                                      const FAngle& target, int f_max = 100, int f_min = 18);

// Same identity solved for the multiplicity of one unknown angle at a fixed f.
// Returns nullopt unless the multiplicity is a non-negative integer.
std::optional<std::int64_t> solve_multiplicity(const std::vector<std::pair<FAngle, std::int64_t>>& known,
                                               const FAngle& unknown, const FAngle& target, int f);

}  // namespace pentatile
