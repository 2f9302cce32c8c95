#include "d21/weights.hpp"

#include <cstdlib>
#include <deque>
#include <numeric>
#include <sstream>

namespace d21 {

Parameter Parameter::Rational(long p, long d) {
    if (p <= 0 || d <= 0)
        throw UsageError(
            "zeta must be positive: D(2|1;z) for negative z is isomorphic to one with positive parameter "
            "(the isomorphisms z -> 1/z, z -> -1-z, ...), so pass that parameter instead");
    if (std::gcd(p, d) != 1) throw UsageError("zeta = p/d must be given with gcd(p,d) = 1");
    Parameter P;
    P.generic = false;
    P.p = p;
    P.d = d;
    return P;
}

Parameter Parameter::parse(const std::string& s) {
    if (s == "generic") return Generic();
    auto slash = s.find('/');
    std::string a = s.substr(0, slash), b = slash == std::string::npos ? "1" : s.substr(slash + 1);
    auto to_long = [&](const std::string& t) {
        if (t.empty()) throw UsageError("bad zeta '" + s + "': expected 'generic' or 'p/d'");
        size_t pos = 0;
        long v;
        try {
            v = std::stol(t, &pos);
        } catch (...) {
            throw UsageError("bad zeta '" + s + "': expected 'generic' or 'p/d'");
        }
        if (pos != t.size()) throw UsageError("bad zeta '" + s + "': expected 'generic' or 'p/d'");
        return v;
    };
    long p = to_long(a), d = to_long(b);
    if (d < 0) {
        p = -p;
        d = -d;
    }
    return Rational(p, d);
}

std::string Parameter::str() const {
    if (generic) return "generic";
    return std::to_string(p) + "/" + std::to_string(d);
}

Weight rho_shift(const Vec3& lambda) { return lambda + RHO; }
Vec3 rho_unshift(const Weight& f) { return f - RHO; }

Weight parse_weight(const std::string& s) {
    std::stringstream ss(s);
    std::string tok;
    std::vector<long> v;
    while (std::getline(ss, tok, ',')) {
        size_t pos = 0;
        try {
            v.push_back(std::stol(tok, &pos));
        } catch (...) {
            throw UsageError("bad weight '" + s + "': expected x,y,z");
        }
        if (pos != tok.size()) throw UsageError("bad weight '" + s + "': expected x,y,z");
    }
    if (v.size() != 3) throw UsageError("bad weight '" + s + "': expected x,y,z");
    return {v[0], v[1], v[2]};
}

std::string AtypicalIndex::signs_str() const {
    std::string s;
    for (int c : signs) s += c > 0 ? '+' : c < 0 ? '-' : 'o';
    return s;
}

Weight decode_index(const Parameter& P, long k, long n, const std::array<int, 3>& s) {
    long kp = P.generic ? 0 : k * P.p, kd = P.generic ? 0 : k * P.d;
    long a[3] = {std::labs(n), std::labs(n + kp), std::labs(n - kd)};
    long out[3];
    for (int i = 0; i < 3; ++i) {
        if (s[i] == 0 && a[i] != 0) throw MathError("circle sign at a nonzero coordinate");
        out[i] = s[i] < 0 ? -a[i] : a[i];
    }
    return {out[0], out[1], out[2]};
}

Weight decode_index(const Parameter& P, const AtypicalIndex& a) { return decode_index(P, a.k, a.n, a.signs); }

bool is_atypical(const Parameter& P, const Weight& f) {
    if (P.generic) {
        long a = std::labs(f.x);
        return std::labs(f.y) == a && std::labs(f.z) == a;
    }
    for (int sy : {1, -1})
        for (int sz : {1, -1})
            if (P.d * (f.x + sy * f.y) + P.p * (f.x + sz * f.z) == 0) return true;
    return false;
}

namespace {
int sgn(long v) { return v > 0 ? 1 : v < 0 ? -1 : 0; }
}

AtypicalIndex atypical_index(const Parameter& P, const Weight& f) {
    if (!is_atypical(P, f)) throw MathError("weight " + f.str() + " is typical");
    AtypicalIndex out;
    out.signs = {sgn(f.x), sgn(f.y), sgn(f.z)};
    long ax = std::labs(f.x), ay = std::labs(f.y), az = std::labs(f.z);
    if (ax == ay && ay == az) {
        out.k = 0;
        out.n = ax;
        return out;
    }
    if (P.generic) throw MathError("inconsistent generic atypicality");
    std::optional<AtypicalIndex> found;
    for (long n : {ax, -ax}) {
        for (long t : {ay - n, -ay - n}) {
            if (t <= 0 || t % P.p != 0) continue;
            long k = t / P.p;
            if (std::labs(n - k * P.d) != az) continue;
            AtypicalIndex cand = out;
            cand.k = k;
            cand.n = n;
            if (found && !(*found == cand)) throw MathError("ambiguous atypical index for " + f.str());
            found = cand;
        }
    }
    if (!found) throw MathError("atypical weight " + f.str() + " not in any WT_k");
    return *found;
}

std::string BlockId::str() const {
    if (atypical) return "B" + std::to_string(k);
    return "typical(" + rep.str() + ")";
}

BlockId classify_block(const Parameter& P, const Weight& f) {
    BlockId b;
    if (is_atypical(P, f)) {
        b.atypical = true;
        b.k = atypical_index(P, f).k;
    } else {
        b.rep = {std::labs(f.x), std::labs(f.y), std::labs(f.z)};
    }
    return b;
}

std::vector<Weight> bruhat_covers(const Parameter& P, const Weight& f) {
    std::set<Weight> out;
    if (f.x < 0) out.insert({-f.x, f.y, f.z});
    if (f.y < 0) out.insert({f.x, -f.y, f.z});
    if (f.z < 0) out.insert({f.x, f.y, -f.z});
    if (is_atypical(P, f)) {
        AtypicalIndex a = atypical_index(P, f);
        if (a.k == 0) {
            // (n, s n, t n) < (n+1, s(n+1), t(n+1)); at 0 every sign pattern
            if (f.x == 0) {
                for (long s : {1, -1})
                    for (long t : {1, -1}) out.insert({1, s, t});
            } else {
                long s = f.y / f.x, t = f.z / f.x;
                out.insert({f.x + 1, s * (f.x + 1), t * (f.x + 1)});
            }
        } else {
            // circle positions belong to both sign families
            std::vector<int> c1 = a.signs[0] ? std::vector<int>{a.signs[0]} : std::vector<int>{1, -1};
            std::vector<int> c2 = a.signs[1] ? std::vector<int>{a.signs[1]} : std::vector<int>{1, -1};
            std::vector<int> c3 = a.signs[2] ? std::vector<int>{a.signs[2]} : std::vector<int>{1, -1};
            for (int s1 : c1)
                for (int s2 : c2)
                    for (int s3 : c3) {
                        std::vector<long> next;
                        if (s1 > 0) {
                            if (a.n >= 0) next.push_back(a.n + 1);
                            if (a.n <= 0) next.push_back(a.n - 1);
                        } else if (a.n != 0) {
                            next.push_back(a.n > 0 ? a.n - 1 : a.n + 1);
                        }
                        for (long m : next) {
                            std::array<int, 3> s{s1, s2, s3};
                            long kp = a.k * P.p, kd = a.k * P.d;
                            if (m == 0) s[0] = 0;
                            if (m == -kp) s[1] = 0;
                            if (m == kd) s[2] = 0;
                            out.insert(decode_index(P, a.k, m, s));
                        }
                    }
        }
    }
    return {out.begin(), out.end()};
}

bool bruhat_leq(const Parameter& P, const Weight& f, const Weight& g) {
    if (f == g) return true;
    if (!(classify_block(P, f) == classify_block(P, g))) return false;
    if (f.x > g.x) return false;
    std::set<Weight> seen{f};
    std::deque<Weight> frontier{f};
    while (!frontier.empty()) {
        Weight w = frontier.front();
        frontier.pop_front();
        for (const Weight& c : bruhat_covers(P, w)) {
            if (c.x > g.x) continue;
            if (c == g) return true;
            // at the target level only sign raises of y, z remain
            if (c.x == g.x && (std::labs(c.y) != std::labs(g.y) || std::labs(c.z) != std::labs(g.z) ||
                               c.y > g.y || c.z > g.z))
                continue;
            if (seen.insert(c).second) frontier.push_back(c);
        }
    }
    return false;
}

std::set<Weight> weyl_orbit(const Weight& f) {
    std::set<Weight> out;
    for (long a : {1, -1})
        for (long b : {1, -1})
            for (long c : {1, -1}) out.insert({a * f.x, b * f.y, c * f.z});
    return out;
}

FieldElement casimir(const Parameter& P, const Vec3& lambda) {
    Field F = P.field();
    Weight f = rho_shift(lambda);
    return bilinear_form(F, f, f);
}

FieldElement hc_p_value(const Parameter& P, const Vec3& lambda) {
    Field F = P.field();
    Weight f = rho_shift(lambda);
    FieldElement prod = F.integer(1);
    for (int r = RPP; r <= A0; ++r) prod *= bilinear_form(F, f, root_vector(r));
    return prod;
}

std::vector<Weight> enumerate_block(const Parameter& P, long k, long lo, long hi) {
    std::set<Weight> out;
    if (P.generic && k != 0) return {};
    for (long n = lo; n <= hi; ++n)
        for (int a : {1, -1})
            for (int b : {1, -1})
                for (int c : {1, -1}) {
                    std::array<int, 3> s{a, b, c};
                    Weight w = decode_index(P, k, n, {1, 1, 1});
                    w = {s[0] * w.x, s[1] * w.y, s[2] * w.z};
                    out.insert(w);
                }
    return {out.begin(), out.end()};
}

}  // namespace d21
