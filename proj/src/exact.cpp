#include "pentatile/exact.hpp"

#include <limits>
#include <numeric>
#include <stdexcept>

namespace pentatile {

namespace {

__int128 gcd128(__int128 a, __int128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        __int128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

constexpr __int128 kMax = std::numeric_limits<std::int64_t>::max();

}  // namespace

Rational Rational::from_wide(__int128 n, __int128 d) {
    if (d == 0) throw std::domain_error("rational: zero denominator");
    if (d < 0) {
        n = -n;
        d = -d;
    }
    __int128 g = gcd128(n, d);
    if (g > 1) {
        n /= g;
        d /= g;
    }
    if (n > kMax || n < -kMax || d > kMax) throw std::overflow_error("rational: int64 overflow");
    Rational q;
    q.num_ = static_cast<std::int64_t>(n);
    q.den_ = static_cast<std::int64_t>(d);
    return q;
}

Rational::Rational(std::int64_t n) : num_(n), den_(1) {}

Rational::Rational(std::int64_t n, std::int64_t d) { *this = from_wide(n, d); }

std::int64_t Rational::floor() const {
    std::int64_t q = num_ / den_;
    if (num_ % den_ != 0 && num_ < 0) --q;
    return q;
}

std::string Rational::str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::parse(const std::string& text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rational(std::stoll(text));
        return Rational(std::stoll(text.substr(0, slash)), std::stoll(text.substr(slash + 1)));
    } catch (const std::logic_error&) {
        throw std::invalid_argument("rational: cannot parse '" + text + "'");
    }
}

Rational Rational::operator-() const { return from_wide(-static_cast<__int128>(num_), den_); }

Rational operator+(const Rational& x, const Rational& y) {
    return Rational::from_wide(static_cast<__int128>(x.num_) * y.den_ + static_cast<__int128>(y.num_) * x.den_,
                               static_cast<__int128>(x.den_) * y.den_);
}

Rational operator-(const Rational& x, const Rational& y) { return x + (-y); }

Rational operator*(const Rational& x, const Rational& y) {
    return Rational::from_wide(static_cast<__int128>(x.num_) * y.num_, static_cast<__int128>(x.den_) * y.den_);
}

Rational operator/(const Rational& x, const Rational& y) {
    if (y.num_ == 0) throw std::domain_error("rational: division by zero");
    return Rational::from_wide(static_cast<__int128>(x.num_) * y.den_, static_cast<__int128>(x.den_) * y.num_);
}

std::strong_ordering operator<=>(const Rational& x, const Rational& y) {
    __int128 l = static_cast<__int128>(x.num_) * y.den_;
    __int128 r = static_cast<__int128>(y.num_) * x.den_;
    if (l < r) return std::strong_ordering::less;
    if (l > r) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

TilingParameters::TilingParameters(int tiles) : f(tiles) {
    if (tiles < 12 || tiles % 2 != 0)
        throw std::invalid_argument("tile count must be an even integer >= 12, got " + std::to_string(tiles));
}

Rational FAngle::eval(int f) const {
    if (f == 0) throw std::domain_error("fangle: f = 0");
    return r + s / Rational(f);
}

std::string FAngle::str() const {
    std::string out;
    if (!r.is_zero()) out = r.str();
    if (!s.is_zero()) {
        Rational mag = s.sign() < 0 ? -s : s;
        std::string term = (mag.den() == 1 ? std::to_string(mag.num()) : "(" + mag.str() + ")") + "/f";
        if (out.empty())
            out = (s.sign() < 0 ? "-" : "") + term;
        else
            out += (s.sign() < 0 ? " - " : " + ") + term;
    }
    return out.empty() ? "0" : out;
}

std::string FAngle::str_at(int f) const { return pi_str(eval(f)); }

std::string pi_str(const Rational& q) {
    if (q.is_zero()) return "0";
    if (q == Rational(1)) return "π";
    if (q == Rational(-1)) return "-π";
    return q.str() + " π";
}

Rational fangle_eval(const FAngle& a, const TilingParameters& p) { return a.eval(p.f); }

std::strong_ordering fangle_cmp(const FAngle& a, const FAngle& b, const TilingParameters& p) {
    return a.eval(p.f) <=> b.eval(p.f);
}

LinearSolveResult fangle_linear_solve(const std::vector<std::pair<FAngle, std::int64_t>>& coeffs,
                                      const FAngle& target, int f_max, int f_min) {
    // (A) + (B)/f = 0 with A, B collected from both sides
    FAngle lhs;
    for (const auto& [angle, m] : coeffs) lhs += Rational(m) * angle;
    FAngle d = lhs - target;
    LinearSolveResult res;
    if (d.r.is_zero() && d.s.is_zero()) {
        res.all_f = true;
        return res;
    }
    if (d.r.is_zero()) return res;
    Rational f = -d.s / d.r;
    if (!f.is_integer()) return res;
    std::int64_t fi = f.num();
    if (fi % 2 == 0 && fi >= f_min && fi <= f_max) res.fs.push_back(static_cast<int>(fi));
    return res;
}

std::optional<std::int64_t> solve_multiplicity(const std::vector<std::pair<FAngle, std::int64_t>>& known,
                                               const FAngle& unknown, const FAngle& target, int f) {
    Rational rest = target.eval(f);
    for (const auto& [angle, m] : known) rest -= Rational(m) * angle.eval(f);
    Rational u = unknown.eval(f);
    if (u.is_zero()) return std::nullopt;
    Rational m = rest / u;
    if (!m.is_integer() || m.sign() < 0) return std::nullopt;
    return m.num();
}

}  // namespace pentatile
