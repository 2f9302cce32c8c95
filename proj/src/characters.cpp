#include "d21/characters.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <sstream>
#include <vector>

namespace d21 {

using ojson = nlohmann::ordered_json;

long TruncatedCharacter::at(const Vec3& mu) const {
    auto it = coeffs.find(mu);
    return it == coeffs.end() ? 0 : it->second;
}

std::optional<std::array<long, 3>> simple_root_coords(const Vec3& v) {
    long b2 = v.y + v.x, c2 = v.z + v.x;
    if (b2 % 2 != 0 || c2 % 2 != 0) return std::nullopt;
    return std::array<long, 3>{v.x, b2 / 2, c2 / 2};
}

bool is_below_or_equal(const Vec3& v) {
    auto c = simple_root_coords(v);
    return c && (*c)[0] >= 0 && (*c)[1] >= 0 && (*c)[2] >= 0;
}

namespace {

long height_of(const std::array<long, 3>& c) { return c[0] + c[1] + c[2]; }

// Depth profile of a Verma module: depth (as a positive root combination) -> count.
const std::map<Vec3, long>& verma_profile(long H) {
    static std::map<long, std::map<Vec3, long>> cache;
    auto it = cache.find(H);
    if (it != cache.end()) return it->second;

    std::map<Vec3, long> prof{{Vec3{}, 1}};
    auto h = [](const Vec3& v) { return height_of(*simple_root_coords(v)); };
    for (int r = 0; r < kRoots; ++r) {
        Vec3 beta = root_vector(r);
        std::map<Vec3, long> next;
        for (const auto& [depth, c] : prof) {
            long maxk = root_is_odd(r) ? 1 : H;
            for (long k = 0; k <= maxk; ++k) {
                Vec3 d = depth + beta * k;
                if (h(d) > H) break;
                next[d] += c;
            }
        }
        prof = std::move(next);
    }
    return cache.emplace(H, std::move(prof)).first->second;
}

void add_into(TruncatedCharacter& ch, const Weight& lambda, long mult) {
    Vec3 top = rho_unshift(lambda);
    auto off = simple_root_coords(ch.anchor - top);
    if (!off || (*off)[0] < 0 || (*off)[1] < 0 || (*off)[2] < 0)
        throw MathError("Verma label " + lambda.str() + " is not below the window anchor " + ch.anchor.str());
    long budget = ch.height - height_of(*off);
    if (budget < 0) return;
    for (const auto& [depth, c] : verma_profile(ch.height)) {
        if (height_of(*simple_root_coords(depth)) > budget) continue;
        ch.coeffs[top - depth] += mult * c;
    }
}

void drop_zeros(std::map<Vec3, long>& m) {
    std::erase_if(m, [](const auto& kv) { return kv.second == 0; });
}

}  // namespace

TruncatedCharacter verma_character(const Weight& lambda, long H) {
    if (H < 0) throw UsageError("height bound must be nonnegative");
    TruncatedCharacter ch{rho_unshift(lambda), H, {}};
    add_into(ch, lambda, 1);
    return ch;
}

TruncatedCharacter character_of_flag(const VermaFlag& flag, const Vec3& anchor, long H) {
    if (H < 0) throw UsageError("height bound must be nonnegative");
    TruncatedCharacter ch{anchor, H, {}};
    for (const auto& [w, m] : flag) add_into(ch, w, m);
    drop_zeros(ch.coeffs);
    return ch;
}

TruncatedCharacter character_of_flag(const VermaFlag& flag, long H) {
    if (flag.empty()) return {Vec3{}, H, {}};
    for (const auto& [cand, m] : flag) {
        bool top = std::all_of(flag.begin(), flag.end(),
                               [&](const auto& kv) { return is_below_or_equal(cand - kv.first); });
        if (top) return character_of_flag(flag, rho_unshift(cand), H);
    }
    throw MathError("flag has no single highest weight; pass an explicit anchor");
}

VermaFlag tensor_flag(const VermaFlag& flag, const WeightMultiset& module) {
    VermaFlag out;
    for (const auto& [nu, m] : flag)
        for (const auto& [gamma, w] : module) out[nu + gamma] += m * w;
    return out;
}

VermaFlag project_to_block(const Parameter& P, const VermaFlag& flag, const BlockId& b) {
    VermaFlag out;
    for (const auto& [w, m] : flag)
        if (m != 0 && classify_block(P, w) == b) out[w] = m;
    return out;
}

VermaFlag translation_construct(const Parameter& P, const VermaFlag& seed, const WeightMultiset& module,
                                const BlockId& b) {
    return project_to_block(P, tensor_flag(seed, module), b);
}

VermaFlag typical_tilting_flag(const Parameter& P, const Weight& f) {
    if (is_atypical(P, f)) throw MathError("weight " + f.str() + " is atypical; no product rule");
    auto choices = [](long c) { return c > 0 ? std::vector<long>{c, -c} : std::vector<long>{c}; };
    VermaFlag out;
    for (long a : choices(f.x))
        for (long b : choices(f.y))
            for (long c : choices(f.z)) out[{a, b, c}] = 1;
    return out;
}

long flag_length(const VermaFlag& flag) {
    long n = 0;
    for (const auto& kv : flag) n += kv.second;
    return n;
}

VermaFlag flag_add(const VermaFlag& a, const VermaFlag& b, long scale) {
    VermaFlag out = a;
    for (const auto& [w, m] : b) out[w] += scale * m;
    drop_zeros(out);
    return out;
}

VermaFlag flag_negate(const VermaFlag& flag) {
    VermaFlag out;
    for (const auto& [w, m] : flag) out[-w] = m;
    return out;
}

VermaFlag flag_swap_yz(const VermaFlag& flag) {
    VermaFlag out;
    for (const auto& [w, m] : flag) out[{w.x, w.z, w.y}] = m;
    return out;
}

namespace {
std::string key(const Vec3& w) { return std::to_string(w.x) + "," + std::to_string(w.y) + "," + std::to_string(w.z); }
}  // namespace

std::string flag_json(const VermaFlag& flag) {
    ojson j = ojson::object();
    for (const auto& [w, m] : flag) j[key(w)] = m;
    return j.dump();
}

VermaFlag flag_from_json(const std::string& s) {
    VermaFlag out;
    auto j = nlohmann::json::parse(s);
    for (const auto& [k, v] : j.items()) out[parse_weight(k)] = v.get<long>();
    return out;
}

std::string character_json(const TruncatedCharacter& ch) {
    ojson arr = ojson::array();
    for (const auto& [w, c] : ch.coeffs) arr.push_back({{"weight", {w.x, w.y, w.z}}, {"coefficient", c}});
    ojson j;
    j["anchor"] = {ch.anchor.x, ch.anchor.y, ch.anchor.z};
    j["height"] = ch.height;
    j["terms"] = arr;
    return j.dump();
}

std::string flag_text(const VermaFlag& flag) {
    if (flag.empty()) return "(empty)\n";
    std::ostringstream os;
    // one row per Verma module in the flag, so a length-24 flag is 24 rows
    for (auto it = flag.rbegin(); it != flag.rend(); ++it)
        for (long i = 0; i < it->second; ++i) os << "M(" << it->first.str() << ")\n";
    return os.str();
}

std::string character_text(const TruncatedCharacter& ch) {
    if (ch.coeffs.empty()) return "(empty)\n";
    std::ostringstream os;
    for (auto it = ch.coeffs.rbegin(); it != ch.coeffs.rend(); ++it)
        os << it->second << " e^" << it->first.str() << "\n";
    return os.str();
}

}  // namespace d21
