#include "d21/suites.hpp"

#include "d21/verma.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

namespace d21 {

void SuiteReport::check(bool ok, const std::string& subject, const std::string& expected, const std::string& computed,
                        const std::string& note) {
    ++total;
    if (!ok) failures.push_back({subject, expected, computed, note});
}

void SuiteReport::absorb(const SuiteReport& other) {
    total += other.total;
    failures.insert(failures.end(), other.failures.begin(), other.failures.end());
    notes.insert(notes.end(), other.notes.begin(), other.notes.end());
}

std::string suite_json(const SuiteReport& r) {
    nlohmann::ordered_json j;
    j["suite"] = r.suite;
    j["total"] = r.total;
    j["passed"] = r.passed();
    j["failed"] = r.failed();
    auto fails = nlohmann::ordered_json::array();
    for (const auto& f : r.failures) {
        nlohmann::ordered_json x;
        x["weight"] = f.subject;
        x["expected"] = f.expected;
        x["computed"] = f.computed;
        x["status"] = "fail";
        if (!f.note.empty()) x["note"] = f.note;
        fails.push_back(x);
    }
    j["failures"] = fails;
    if (!r.notes.empty()) j["notes"] = r.notes;
    return j.dump();
}

std::string suite_text(const SuiteReport& r) {
    std::ostringstream os;
    os << r.suite << ": " << r.passed() << "/" << r.total << " passed";
    if (r.failed()) os << ", " << r.failed() << " failed";
    os << "\n";
    for (const auto& f : r.failures) {
        os << "  FAIL " << f.subject;
        if (!f.expected.empty() || !f.computed.empty()) os << "  expected " << f.expected << "  computed " << f.computed;
        if (!f.note.empty()) os << "  (" << f.note << ")";
        os << "\n";
    }
    for (const auto& n : r.notes) os << "  " << n << "\n";
    return os.str();
}

RegimeCase regime_case(const std::string& name) {
    if (name == "generic") return {name, Parameter::Generic(), 0};
    if (name == "regular") return {name, Parameter::Rational(3, 2), 1};
    if (name == "d1") return {name, Parameter::Rational(2, 1), 1};
    if (name == "p1d1") return {name, Parameter::Rational(1, 1), 1};
    if (name == "mirror") return {name, Parameter::Rational(1, 2), 1};
    throw UsageError("unknown regime '" + name + "' (generic, regular, d1, p1d1, mirror)");
}

std::vector<RegimeCase> sweep_cases() {
    return {{"generic", Parameter::Generic(), 0},       {"3/2 k=1", Parameter::Rational(3, 2), 1},
            {"3/2 k=2", Parameter::Rational(3, 2), 2},  {"2/3 k=1", Parameter::Rational(2, 3), 1},
            {"2/3 k=2", Parameter::Rational(2, 3), 2},  {"2/1 k=1", Parameter::Rational(2, 1), 1},
            {"1/1 k=1", Parameter::Rational(1, 1), 1},  {"1/2 k=1", Parameter::Rational(1, 2), 1}};
}

namespace {

std::string where(const Parameter& P, long k) { return P.str() + " k=" + std::to_string(k); }

std::vector<Weight> box(long r) {
    std::vector<Weight> out;
    for (long x = -r; x <= r; ++x)
        for (long y = -r; y <= r; ++y)
            for (long z = -r; z <= r; ++z) out.push_back({x, y, z});
    return out;
}

std::vector<Weight> typical_box(const Parameter& P, long r) {
    std::vector<Weight> out;
    for (const Weight& w : box(r))
        if (!is_atypical(P, w)) out.push_back(w);
    return out;
}

long flag_at(const VermaFlag& f, const Weight& w) {
    auto it = f.find(w);
    return it == f.end() ? 0 : it->second;
}

}  // namespace

SuiteReport verify_jacobi(const Parameter& P) {
    SuiteReport r;
    r.suite = "jacobi " + P.str();
    StructureTable t = build_structure_table(P.field());
    JacobiReport j = check_jacobi(t);
    r.total = j.triples;
    for (const auto& f : j.failures)
        r.failures.push_back({basis_info(f.x).label + "," + basis_info(f.y).label + "," + basis_info(f.z).label, f.lhs,
                              f.rhs, "super-Jacobi identity"});
    return r;
}

SuiteReport verify_singular(const Parameter& P, long max_n, long max_coord) {
    SuiteReport r;
    r.suite = "singular " + P.str();
    const Field F = P.field();
    auto table = std::make_shared<const StructureTable>(build_structure_table(F));
    auto run = [&](const Weight& L, int gamma, long n, long window) {
        std::string subject = L.str() + " " + root_name(gamma) + (root_is_odd(gamma) ? "" : " n=" + std::to_string(n));
        try {
            VermaModule M(table, L, window);
            VermaVector v = root_is_odd(gamma) ? odd_reflection_vector(M, gamma) : even_reflection_vector(M, gamma);
            Vec3 mu = M.top() - root_vector(gamma) * (root_is_odd(gamma) ? 1 : n);
            if (v.is_zero()) {
                size_t dim = M.singular_space(mu).size();
                r.check(false, subject, "nonzero singular vector", "zero vector",
                        "singular space has dimension " + std::to_string(dim));
                return;
            }
            bool sing = M.verify_singular(v);
            bool span = sing && M.in_span(M.singular_space(mu), v);
            r.check(sing && span, subject, "singular, in brute-force singular space",
                    sing ? "outside singular space" : "not annihilated by e0, e1, e2");
        } catch (const MathError& e) {
            r.check(false, subject, "vector", "error", e.what());
        }
    };
    for (const Weight& L : box(max_coord)) {
        for (int g : {A0, RPM, RMP, RPP})
            if (bilinear_form(F, L, root_vector(g)).is_zero()) run(L, g, 1, kDefaultWindow);
        for (int g : {A1, A2, R2D}) {
            long n = coroot_pairing(L, g);
            long cap = g == R2D ? std::min(max_n, 3L) : max_n;
            if (n < 0 || n > cap) continue;
            run(L, g, n, even_reflection_window(L, g));
        }
    }
    return r;
}

SuiteReport verify_expansion(const Parameter& P, long max_n) {
    SuiteReport r;
    r.suite = "expansion " + P.str();
    auto table = std::make_shared<const StructureTable>(build_structure_table(P.field()));
    const std::vector<std::pair<long, long>> bc = {{3, 2}, {-2, 1}, {1, -4}, {2, 5}};
    for (long n = 1; n <= max_n; ++n)
        for (auto [b, c] : bc) {
            Weight L{n, b, c};
            VermaModule M(table, L, even_reflection_window(L, R2D));
            VermaVector u = even_reflection_vector(M, R2D);
            VermaVector o = even_expansion_oracle(M);
            bool ok = !u.is_zero() && !o.is_zero() && u.normalized().coeffs == o.normalized().coeffs;
            r.check(ok, L.str(), o.is_zero() ? "0" : o.normalized().str(), u.is_zero() ? "0" : u.normalized().str(),
                    "equal up to one scalar");
        }
    return r;
}

SuiteReport verify_flags(const Parameter& P, long k, long range) {
    SweepReport s = flag_verification_sweep(P, k, range);
    SuiteReport r;
    r.suite = "flags " + where(P, k);
    for (const auto& row : s.rows)
        r.check(row.ok, row.weight.str() + " [" + row.family + "]", flag_json(row.expected), flag_json(row.computed),
                row.ok ? "" : row.note);
    return r;
}

SuiteReport verify_duality(const Parameter& P, long k, long range) {
    SuiteReport r;
    r.suite = "duality " + where(P, k);
    std::vector<Weight> ws = block_window(P, k, range);
    for (const Weight& w : typical_box(P, 2)) ws.push_back(w);
    for (const Weight& mu : ws) {
        try {
            VermaFlag cf = composition_factors(P, mu);
            VermaFlag rec = composition_by_reciprocity(P, mu);
            VermaFlag td;
            for (const Weight& lam : reciprocity_candidates(P, mu)) {
                long m = flag_at(tilting_flag(P, -lam), -mu);
                if (m) td[lam] = m;
            }
            r.check(cf == rec, mu.str() + " reciprocity", flag_json(cf), flag_json(rec));
            r.check(cf == td, mu.str() + " tilting", flag_json(cf), flag_json(td));
        } catch (const MathError& e) {
            r.check(false, mu.str(), "composition factors", "error", e.what());
        }
    }
    return r;
}

SuiteReport verify_bgg(const Parameter& P, long k, long range, long H, size_t samples, uint64_t seed) {
    SuiteReport r;
    r.suite = "bgg " + where(P, k) + " H=" + std::to_string(H);
    std::vector<Weight> ws = block_window(P, k, range);
    std::mt19937_64 rng(seed);
    std::shuffle(ws.begin(), ws.end(), rng);
    if (ws.size() > samples) ws.resize(samples);
    std::sort(ws.begin(), ws.end());
    for (const Weight& f : ws) {
        try {
            Vec3 anchor = rho_unshift(f);
            TruncatedCharacter lhs = verma_character(f, H);
            TruncatedCharacter rhs{anchor, H, {}};
            for (const auto& [lam, m] : composition_factors(P, f))
                for (const auto& [mu, c] : simple_character(P, lam, anchor, H).coeffs) rhs.coeffs[mu] += m * c;
            std::erase_if(rhs.coeffs, [](const auto& kv) { return kv.second == 0; });
            r.check(lhs == rhs, f.str(), character_json(lhs), character_json(rhs));
        } catch (const MathError& e) {
            r.check(false, f.str(), "character", "error", e.what());
        }
    }
    return r;
}

long max_tilting_length(const Parameter& P, long k, long range) {
    long best = 0;
    for (const Weight& f : block_window(P, k, range)) best = std::max(best, flag_length(tilting_flag(P, f)));
    return best;
}

SuiteReport verify_projective_tilting(const Parameter& P, long k, long range) {
    SuiteReport r;
    r.suite = "projective-tilting " + where(P, k);
    std::vector<Weight> ws = block_window(P, k, range);
    std::map<Weight, VermaFlag> tilt, proj;
    for (const Weight& w : ws) {
        tilt[w] = tilting_flag(P, w);
        proj[w] = projective_flag(P, w);
    }
    long longest = 0;
    Weight longest_at;
    for (const Weight& f : ws) {
        std::optional<Weight> listed;
        try {
            listed = is_projective_tilting(P, f);
        } catch (const MathError& e) {
            r.check(false, f.str() + " pairing", "T = P", "flags differ", e.what());
            continue;
        }
        std::set<Weight> found;
        for (const Weight& g : ws)
            if (tilt[f] == proj[g]) found.insert(g);
        std::set<Weight> want;
        if (listed) want.insert(*listed);
        auto show = [](const std::set<Weight>& s) {
            std::string out = "{";
            for (const auto& w : s) out += (out.size() > 1 ? " " : "") + w.str();
            return out + "}";
        };
        r.check(found == want, f.str() + " pairing", show(want), show(found));

        const VermaFlag& t = tilt[f];
        bool mults = std::all_of(t.begin(), t.end(), [](const auto& kv) { return kv.second == 1 || kv.second == 2; });
        r.check(mults, f.str() + " multiplicities in {1,2}", "", flag_json(t));
        r.check(flag_at(t, f) == 1, f.str() + " head multiplicity 1", "1", std::to_string(flag_at(t, f)));
        bool below = std::all_of(t.begin(), t.end(), [&](const auto& kv) { return bruhat_leq(P, kv.first, f); });
        r.check(below, f.str() + " flag below head in Bruhat order", "", flag_json(t));
        if (flag_length(t) > longest) {
            longest = flag_length(t);
            longest_at = f;
        }
    }
    r.check(longest <= 24, "longest atypical flag", "<= 24", std::to_string(longest));
    r.notes.push_back("longest atypical flag: " + std::to_string(longest) + " at " + longest_at.str());
    for (const Weight& f : typical_box(P, 3)) {
        long s = (f.x > 0) + (f.y > 0) + (f.z > 0);
        long len = flag_length(tilting_flag(P, f));
        r.check(len == (1L << s), f.str() + " typical length", std::to_string(1L << s), std::to_string(len));
    }
    return r;
}

SuiteReport verify_blocks(const Parameter& P, long max_k, size_t samples, uint64_t seed) {
    SuiteReport r;
    r.suite = "blocks " + P.str();
    const Field F = P.field();
    std::map<long, FieldElement> value;
    long top_k = P.generic ? 0 : max_k;
    for (long k = 0; k <= top_k; ++k) {
        FieldElement want = F.integer(P.generic ? 0 : k * k * (P.p * P.p + P.p * P.d));
        for (const Weight& f : enumerate_block(P, k, k == 0 ? 0 : -4, 4)) {
            FieldElement c = casimir(P, rho_unshift(f));
            r.check(c == want, f.str() + " casimir on B" + std::to_string(k), want.str(), c.str());
        }
        value.emplace(k, want);
    }
    for (const auto& [k1, v1] : value)
        for (const auto& [k2, v2] : value)
            if (k1 < k2) r.check(v1 != v2, "casimir separates B" + std::to_string(k1) + ", B" + std::to_string(k2));
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> coord(-12, 12);
    size_t atyp = 0;
    for (size_t i = 0; i < samples; ++i) {
        Weight f{coord(rng), coord(rng), coord(rng)};
        bool a = is_atypical(P, f);
        atyp += a;
        bool zero = hc_p_value(P, rho_unshift(f)).is_zero();
        r.check(zero == a, f.str() + " hc separator", a ? "0" : "nonzero", zero ? "0" : "nonzero");
    }
    r.notes.push_back(std::to_string(atyp) + " of " + std::to_string(samples) + " random weights atypical");
    return r;
}

}  // namespace d21
