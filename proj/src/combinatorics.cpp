#include "pentatile/combinatorics.hpp"

#include <algorithm>
#include <functional>

namespace pentatile {

EdgeClass edge_class(Angle x) {
    switch (x) {
        case Angle::Alpha: return EdgeClass::BB;
        case Angle::Theta1:
        case Angle::Theta2: return EdgeClass::AB;
        default: return EdgeClass::AA;
    }
}

std::string angle_symbol(Angle x) {
    static const char* names[] = {"α", "θ₁", "θ₂", "φ₁", "φ₂"};
    return names[static_cast<int>(x)];
}

std::string angle_ascii(Angle x) {
    static const char* names[] = {"alpha", "theta1", "theta2", "phi1", "phi2"};
    return names[static_cast<int>(x)];
}

char edge_char(Edge e) { return e == Edge::A ? 'a' : 'b'; }

Angle swap12(Angle x) {
    switch (x) {
        case Angle::Theta1: return Angle::Theta2;
        case Angle::Theta2: return Angle::Theta1;
        case Angle::Phi1: return Angle::Phi2;
        case Angle::Phi2: return Angle::Phi1;
        default: return x;
    }
}

Rational vertex_count_residual(const TilingParameters& p, const DegreeVector& d) {
    Rational r = Rational(p.f, 2) - 6;
    for (const auto& [k, n] : d.v)
        if (k >= 4) r -= Rational(k - 3) * n;
    return r;
}

bool ldeg_guarantee(const DegreeVector& d, const TilingParameters& p) {
    if (!vertex_count_residual(p, d).is_zero()) throw std::invalid_argument("inconsistent degree vector");
    Rational bound = 0;
    for (const auto& [k, n] : d.v) {
        if (k == 4 || k == 5)
            bound += Rational(k * n, 2);
        else if (k >= 6)
            bound += Rational(k) * n;
    }
    return Rational(p.f) > bound;
}

std::string type_name(NbType t) {
    switch (t) {
        case NbType::II: return "II";
        case NbType::III1: return "III1";
        case NbType::III2: return "III2";
        case NbType::III3: return "III3";
    }
    return "?";
}

NbType parse_type(const std::string& s) {
    for (NbType t : kAllTypes)
        if (type_name(t) == s) return t;
    throw std::invalid_argument("unknown neighborhood type '" + s + "'");
}

FAngle AngleSystem::total() const {
    if (sum_only) return angle[0] + theta_sum + angle[3] + angle[4];
    FAngle t;
    for (const auto& a : angle) t += a;
    return t;
}

bool AngleSystem::all_positive(int f) const {
    for (Angle x : kAllAngles)
        if ((*this)[x].eval(f).sign() <= 0) return false;
    return true;
}

bool AngleSystem::distinct_nonalpha(int f) const {
    for (int i = 1; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j)
            if (angle[i].eval(f) == angle[j].eval(f)) return false;
    return true;
}

AngleSystem angle_system(NbType t) {
    const FAngle alpha{Rational(2, 3), 0};
    AngleSystem s;
    s.name = type_name(t);
    s[Angle::Alpha] = alpha;
    switch (t) {
        case NbType::II:
            s.sum_only = true;
            s.theta_sum = {Rational(2, 3), 8};
            s[Angle::Phi1] = {Rational(1, 3), 4};
            s[Angle::Phi2] = {Rational(4, 3), -8};
            break;
        case NbType::III1:
            s[Angle::Theta1] = {Rational(1, 3), 4};
            s[Angle::Theta2] = {Rational(4, 3), -8};
            s[Angle::Phi1] = {Rational(4, 3), -8};
            s[Angle::Phi2] = {Rational(-2, 3), 16};
            break;
        case NbType::III2:
            s[Angle::Theta1] = {Rational(5, 6), -2};
            s[Angle::Theta2] = {Rational(-1, 6), 10};
            s[Angle::Phi1] = {Rational(1, 3), 4};
            s[Angle::Phi2] = {Rational(4, 3), -8};
            break;
        case NbType::III3:
            s[Angle::Theta1] = {Rational(-1, 6), 10};
            s[Angle::Theta2] = {Rational(5, 6), -2};
            s[Angle::Phi1] = {Rational(4, 3), -8};
            s[Angle::Phi2] = {Rational(1, 3), 4};
            break;
    }
    if (!s.sum_only) s.theta_sum = s[Angle::Theta1] + s[Angle::Theta2];
    return s;
}

AngleSystem pin_theta1(const AngleSystem& ii, const FAngle& theta1, const std::string& name) {
    AngleSystem s = ii;
    s.name = name;
    s.sum_only = false;
    s[Angle::Theta1] = theta1;
    s[Angle::Theta2] = ii.theta_sum - theta1;
    return s;
}

AngleSystem swapped(const AngleSystem& sys, const std::string& name) {
    AngleSystem s = sys;
    s.name = name;
    for (Angle x : kAllAngles) s[swap12(x)] = sys[x];
    return s;
}

Rational VertexSignature::sum(const AngleSystem& sys, int f) const {
    Rational t = 0;
    for (Angle x : kAllAngles)
        if ((*this)[x] != 0) t += Rational((*this)[x]) * sys[x].eval(f);
    return t;
}

namespace {

std::string superscript(int n) {
    static const char* digits[] = {"⁰", "¹", "²", "³", "⁴", "⁵", "⁶", "⁷", "⁸", "⁹"};
    std::string s = std::to_string(n), out;
    for (char c : s) out += digits[c - '0'];
    return out;
}

}  // namespace

std::string VertexSignature::str() const {
    std::string out;
    for (Angle x : kAllAngles) {
        int k = (*this)[x];
        if (k == 0) continue;
        out += angle_symbol(x);
        if (k > 1) out += superscript(k);
    }
    return out.empty() ? "∅" : out;
}

std::vector<VertexSignature> completions(const AngleSystem& sys, int f, const Rational& remaining) {
    std::array<Rational, 5> v;
    for (Angle x : kAllAngles) {
        v[static_cast<int>(x)] = sys[x].eval(f);
        if (v[static_cast<int>(x)].sign() <= 0)
            throw AngleNonpositive("angle nonpositive at f=" + std::to_string(f) + ": " + angle_ascii(x));
    }
    std::vector<VertexSignature> out;
    VertexSignature cur;
    std::function<void(int, Rational)> rec = [&](int i, Rational left) {
        if (i == 4) {
            Rational k = left / v[4];
            if (k.is_integer()) {
                cur.m[4] = static_cast<int>(k.num());
                out.push_back(cur);
            }
            return;
        }
        for (int k = 0; Rational(k) * v[i] <= left; ++k) {
            cur.m[i] = k;
            rec(i + 1, left - Rational(k) * v[i]);
        }
        cur.m[i] = 0;
    };
    if (remaining.sign() >= 0) rec(0, remaining);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<VertexSignature> enumerate_vertex_signatures(const AngleSystem& sys, const TilingParameters& p) {
    if (sys.sum_only) throw std::invalid_argument("θ₁ and θ₂ must be pinned before enumeration");
    auto all = completions(sys, p.f, Rational(2));
    std::vector<VertexSignature> out;
    for (const auto& s : all)
        if (s.degree() >= 3) out.push_back(s);
    return out;
}

std::string AffineF::str() const {
    auto coef_str = [](const Rational& c) {
        if (c == Rational(1)) return std::string("F");
        if (c == Rational(-1)) return std::string("-F");
        return (c.is_integer() ? c.str() : "(" + c.str() + ")") + "F";
    };
    if (coef.is_zero()) return constant.str();
    std::string out = coef_str(coef);
    if (constant.sign() > 0) out += "+" + constant.str();
    if (constant.sign() < 0) out += constant.str();
    return out;
}

Rational family_F(int f) { return Rational(48) / Rational(60 - f); }

std::vector<FamilyRow> vertex_family_table(const AngleSystem& sys) {
    if (sys.sum_only) throw std::invalid_argument("family table needs pinned angles");
    const FAngle& t2 = sys[Angle::Theta2];
    // θ₂ = r (f - 60)/f must vanish at f = 60 for the F = 48/(60-f) form.
    if (t2.r.is_zero() || !(-t2.s / t2.r == Rational(60)))
        throw std::invalid_argument("family table requires θ₂ vanishing at f = 60");
    const int f_lo = 18, f_hi = 58;

    // infimum of each angle over f >= 18
    auto inf = [&](Angle x) {
        const FAngle& a = sys[x];
        return a.s.sign() < 0 ? a.eval(f_lo) : a.r;
    };
    const Rational ia = inf(Angle::Alpha), ib = inf(Angle::Theta1), ic1 = inf(Angle::Phi1), ic2 = inf(Angle::Phi2);

    std::vector<FamilyRow> rows;
    for (int a = 0; Rational(a) * ia <= 2; ++a)
        for (int b1 = 0; Rational(a) * ia + Rational(b1) * ib <= 2; ++b1)
            for (int c1 = 0; Rational(a) * ia + Rational(b1) * ib + Rational(c1) * ic1 <= 2; ++c1)
                for (int c2 = 0; Rational(a) * ia + Rational(b1) * ib + Rational(c1) * ic1 + Rational(c2) * ic2 <= 2;
                     ++c2) {
                    // D = 2π - rest, as an FAngle
                    FAngle rest = Rational(a) * sys[Angle::Alpha] + Rational(b1) * sys[Angle::Theta1] +
                                  Rational(c1) * sys[Angle::Phi1] + Rational(c2) * sys[Angle::Phi2];
                    FAngle d = FAngle::constant(2) - rest;
                    AffineF b2{-(Rational(60) * d.r + d.s) / (Rational(48) * t2.r), d.r / t2.r};
                    bool keep = false;
                    for (int f = f_lo; f <= f_hi && !keep; f += 2) {
                        Rational v = b2.at(family_F(f));
                        if (v.is_integer() && v.sign() >= 0 && a + b1 + c1 + c2 + v.num() >= 3) keep = true;
                    }
                    if (keep) rows.push_back({a, b1, c1, c2, b2});
                }
    std::sort(rows.begin(), rows.end(), [](const FamilyRow& x, const FamilyRow& y) {
        if (x.b2.coef != y.b2.coef) return x.b2.coef < y.b2.coef;
        if (x.a != y.a) return x.a > y.a;
        if (x.b2.constant != y.b2.constant) return x.b2.constant > y.b2.constant;
        return std::tie(x.a, x.b1, x.c1, x.c2) > std::tie(y.a, y.b1, y.c1, y.c2);
    });
    return rows;
}

bool ab_parity_ok(const VertexSignature& s) { return (s[Angle::Theta1] + s[Angle::Theta2]) % 2 == 0; }

VertexSignature VertexArrangement::signature() const {
    VertexSignature s;
    for (Angle x : angles) ++s[x];
    return s;
}

std::string VertexArrangement::str() const {
    std::string out;
    for (std::size_t i = 0; i < angles.size(); ++i) {
        if (i) out += ' ';
        out += angle_symbol(angles[i]);
        out += ' ';
        out += edge_char(edges[i]);
    }
    return out;
}

namespace {

// Booth's algorithm: start index of the lexicographically least rotation.
std::size_t least_rotation(const std::vector<int>& s) {
    const std::size_t n = s.size();
    std::vector<long> fail(2 * n, -1);
    std::size_t k = 0;
    for (std::size_t j = 1; j < 2 * n; ++j) {
        int sj = s[j % n];
        long i = fail[j - k - 1];
        while (i != -1 && sj != s[(k + i + 1) % n]) {
            if (sj < s[(k + i + 1) % n]) k = j - i - 1;
            i = fail[i];
        }
        if (sj != s[(k + i + 1) % n]) {
            if (sj < s[k % n]) k = j;
            fail[j - k] = -1;
        } else {
            fail[j - k] = i + 1;
        }
    }
    return k % n;
}

}  // namespace

VertexArrangement canonical(const VertexArrangement& arr) {
    const std::size_t n = arr.size();
    if (n == 0) return arr;
    std::vector<int> fwd(n), rev(n);
    for (std::size_t i = 0; i < n; ++i) {
        fwd[i] = static_cast<int>(arr.angles[i]) * 2 + static_cast<int>(arr.edges[i]);
        std::size_t ai = (n - i) % n, ei = (2 * n - i - 1) % n;
        rev[i] = static_cast<int>(arr.angles[ai]) * 2 + static_cast<int>(arr.edges[ei]);
    }
    std::size_t rf = least_rotation(fwd), rr = least_rotation(rev);
    bool use_rev = false;
    for (std::size_t i = 0; i < n; ++i) {
        int x = fwd[(rf + i) % n], y = rev[(rr + i) % n];
        if (x != y) {
            use_rev = y < x;
            break;
        }
    }
    const std::vector<int>& src = use_rev ? rev : fwd;
    std::size_t r = use_rev ? rr : rf;
    VertexArrangement out;
    for (std::size_t i = 0; i < n; ++i) {
        int v = src[(r + i) % n];
        out.angles.push_back(static_cast<Angle>(v / 2));
        out.edges.push_back(static_cast<Edge>(v % 2));
    }
    return out;
}

namespace {

// Given the incoming edge, returns the outgoing edge or nullopt if the
// angle cannot sit there.
std::optional<Edge> pass_through(Angle x, Edge in) {
    switch (edge_class(x)) {
        case EdgeClass::BB: return in == Edge::B ? std::optional<Edge>(Edge::B) : std::nullopt;
        case EdgeClass::AA: return in == Edge::A ? std::optional<Edge>(Edge::A) : std::nullopt;
        case EdgeClass::AB: return in == Edge::A ? Edge::B : Edge::A;
    }
    return std::nullopt;
}

}  // namespace

namespace {

// True if appending a corner with this angle after the prefix closes a
// forbidden run end mid^k end whose inner edges are all a.
bool closes_run(const VertexArrangement& prefix, Angle x, Angle end, Angle mid) {
    if (x != end) return false;
    for (std::size_t j = prefix.size(); j-- > 0;) {
        if (prefix.edges[j] != Edge::A) return false;
        if (prefix.angles[j] == end) return true;
        if (prefix.angles[j] != mid) return false;
    }
    return false;
}

std::vector<VertexArrangement> generate_arrangements(const VertexSignature& s, const KlemOptions* prune) {
    std::set<VertexArrangement> found;
    const int n = s.degree();
    if (n == 0) return {};
    Angle first = Angle::Alpha;
    for (Angle x : kAllAngles)
        if (s[x] > 0) {
            first = x;
            break;
        }
    for (Edge start : {Edge::A, Edge::B}) {
        VertexSignature left = s;
        VertexArrangement cur;
        std::function<void(Edge)> rec = [&](Edge in) {
            if (static_cast<int>(cur.angles.size()) == n) {
                if (in != start) return;
                if (prune && klem_violates(cur, *prune)) return;
                found.insert(canonical(cur));
                return;
            }
            for (Angle x : kAllAngles) {
                if (left[x] == 0) continue;
                if (cur.angles.empty() && x != first) continue;
                auto out = pass_through(x, in);
                if (!out) continue;
                if (prune && prune->standard && closes_run(cur, x, Angle::Theta2, Angle::Phi1)) continue;
                if (prune && prune->mirrored && closes_run(cur, x, Angle::Theta1, Angle::Phi2)) continue;
                --left[x];
                cur.angles.push_back(x);
                cur.edges.push_back(*out);
                rec(*out);
                cur.angles.pop_back();
                cur.edges.pop_back();
                ++left[x];
            }
        };
        rec(start);
    }
    return {found.begin(), found.end()};
}

}  // namespace

std::vector<VertexArrangement> feasible_arrangements(const VertexSignature& s) {
    return generate_arrangements(s, nullptr);
}

std::string PartialVertex::str() const {
    std::string out = "[";
    out += left ? std::string(1, edge_char(*left)) : std::string("?");
    out += "] ";
    for (std::size_t i = 0; i < angles.size(); ++i) {
        out += angle_symbol(angles[i]);
        if (i + 1 < angles.size()) {
            out += " ";
            out += edge_char(inner[i]);
            out += " ";
        }
    }
    out += " [";
    out += right ? std::string(1, edge_char(*right)) : std::string("?");
    out += "]";
    return out;
}

bool arrangement_matches(const VertexArrangement& arr, const PartialVertex& part) {
    const int n = static_cast<int>(arr.size());
    const int m = static_cast<int>(part.angles.size());
    if (m > n || m == 0) return false;
    auto mod = [n](int i) { return ((i % n) + n) % n; };
    for (int start = 0; start < n; ++start)
        for (int dir : {1, -1}) {
            // edge between position p and p+dir
            auto edge_after = [&](int p) { return dir == 1 ? arr.edges[mod(p)] : arr.edges[mod(p - 1)]; };
            bool ok = true;
            for (int k = 0; k < m && ok; ++k) {
                int p = start + dir * k;
                if (arr.angles[mod(p)] != part.angles[k]) ok = false;
                if (ok && k + 1 < m && edge_after(p) != part.inner[k]) ok = false;
            }
            if (!ok) continue;
            if (part.left && edge_after(start - dir) != *part.left) continue;
            if (part.right && edge_after(start + dir * (m - 1)) != *part.right) continue;
            return true;
        }
    return false;
}

bool klem_violates(const VertexArrangement& arr, const KlemOptions& opt) {
    const int n = static_cast<int>(arr.size());
    auto scan = [&](Angle end, Angle mid) {
        for (int i = 0; i < n; ++i) {
            if (arr.angles[i] != end) continue;
            int j = i;
            for (int step = 0; step < n; ++step) {
                if (arr.edges[j] != Edge::A) break;
                j = (j + 1) % n;
                if (j == i) break;
                if (arr.angles[j] == end) return true;
                if (arr.angles[j] != mid) break;
            }
        }
        return false;
    };
    if (opt.standard && scan(Angle::Theta2, Angle::Phi1)) return true;
    if (opt.mirrored && scan(Angle::Theta1, Angle::Phi2)) return true;
    return false;
}

ArrangementMap klem_filter(const ArrangementMap& arrangements, const AngleSystem& sys, int f,
                           const KlemOptions& opt) {
    if (!sys.distinct_nonalpha(f))
        throw HypothesisViolated("hypothesis violated: θ₁, θ₂, φ₁, φ₂ not pairwise distinct at f=" +
                                 std::to_string(f));
    for (const auto& [sig, arrs] : arrangements) {
        if (opt.standard && sig[Angle::Phi2] >= 2)
            throw HypothesisViolated("hypothesis violated: φ₂ appears twice in " + sig.str());
        if (opt.mirrored && sig[Angle::Phi1] >= 2)
            throw HypothesisViolated("hypothesis violated: φ₁ appears twice in " + sig.str());
    }
    ArrangementMap out;
    for (const auto& [sig, arrs] : arrangements) {
        std::vector<VertexArrangement> kept;
        for (const auto& a : arrs)
            if (!klem_violates(a, opt)) kept.push_back(a);
        if (!kept.empty()) out.emplace(sig, std::move(kept));
    }
    return out;
}

bool Avc::contains(const VertexSignature& s) const {
    return std::find(signatures.begin(), signatures.end(), s) != signatures.end();
}

Avc compute_avc(const AngleSystem& sys, const TilingParameters& p, const AvcFlags& flags) {
    Avc avc;
    avc.f = p.f;
    auto sigs = enumerate_vertex_signatures(sys, p);
    std::vector<VertexSignature> cur;
    for (const auto& s : sigs)
        if (!flags.parity || ab_parity_ok(s)) cur.push_back(s);
    if (!flags.arrangements) {
        avc.signatures = cur;
        return avc;
    }
    const KlemOptions opt{flags.klem, flags.klem_mirrored};
    const bool use_klem = flags.klem || flags.klem_mirrored;
    if (use_klem) {
        // hypothesis check on the unfiltered arrangement-feasible set; the
        // pruned generator below yields the same survivors as filtering
        ArrangementMap probe;
        for (const auto& s : cur) probe.emplace(s, std::vector<VertexArrangement>{});
        klem_filter(probe, sys, p.f, opt);
    }
    ArrangementMap arr;
    for (const auto& s : cur) {
        auto a = generate_arrangements(s, use_klem ? &opt : nullptr);
        if (!a.empty()) arr.emplace(s, std::move(a));
    }
    for (const auto& [s, a] : arr) avc.signatures.push_back(s);
    avc.arrangements = std::move(arr);
    return avc;
}

Avc compute_avc(NbType t, const TilingParameters& p, const AvcFlags& flags) {
    return compute_avc(angle_system(t), p, flags);
}

std::vector<VertexArrangement> matching_arrangements(const Avc& avc, const PartialVertex& part) {
    std::vector<VertexArrangement> out;
    for (const auto& [s, arrs] : avc.arrangements)
        for (const auto& a : arrs)
            if (arrangement_matches(a, part)) out.push_back(a);
    return out;
}

}  // namespace pentatile
