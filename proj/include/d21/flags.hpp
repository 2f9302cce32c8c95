#pragma once

#include "d21/characters.hpp"
#include "d21/weights.hpp"

#include <optional>
#include <string>
#include <vector>

namespace d21 {

enum class Regime { GenericOrB0, RationalRegular, RationalD1, RationalP1D1, Mirror, Typical };
std::string regime_name(Regime r);

Regime classify_regime(const Parameter& P, const Weight& f);

// One parsed closed-form formula: head = sum of mult * X[index]signs.
struct FlagTerm {
    long mult = 1;
    bool only_n2 = false;
    std::string index;          // expression in n, kp, kd
    std::array<int, 3> signs{}; // +1, -1, 0 = circle
};
struct FlagFormula {
    char head_kind = 'T';  // T, M or P
    std::string head_index;
    std::array<int, 3> head_signs{};
    char term_kind = 'M';
    std::vector<FlagTerm> terms;
    std::string source;
};
FlagFormula parse_formula(const std::string& s);
long eval_index(const std::string& expr, long n, long kp, long kd);

// Where a closed form came from, for reports.
struct FormulaHit {
    std::string family;
    const FlagFormula* formula = nullptr;
};

VermaFlag tilting_flag(const Parameter& P, const Weight& f);
VermaFlag projective_flag(const Parameter& P, const Weight& f);
// Closed-form [M_f : L_lambda], keyed by lambda.
VermaFlag composition_factors(const Parameter& P, const Weight& f);
// The same read off projective flags via reciprocity over a window of +-3 indices.
VermaFlag composition_by_reciprocity(const Parameter& P, const Weight& f);
// The labels lambda scanned by composition_by_reciprocity.
std::vector<Weight> reciprocity_candidates(const Parameter& P, const Weight& f);

// Family name of the closed form used for f (tilting or composition side).
std::string tilting_family(const Parameter& P, const Weight& f);
std::string composition_family(const Parameter& P, const Weight& f);

TruncatedCharacter simple_character(const Parameter& P, const Weight& f, long H);
// Same on a window anchored at an actual weight at or above the top of L_f.
TruncatedCharacter simple_character(const Parameter& P, const Weight& f, const Vec3& anchor, long H);

// Label of the projective module isomorphic to T_f, if T_f is projective.
// Throws if the listed pairing does not hold at the level of flags.
std::optional<Weight> is_projective_tilting(const Parameter& P, const Weight& f);

struct Seed {
    VermaFlag flag;
    WeightMultiset module;
    std::string module_name;
    VermaFlag subtract;  // removed from the translated flag (a known direct summand)
};
Seed construction_seed(const Parameter& P, const Weight& f);

struct SweepRow {
    Weight weight;
    std::string family;
    VermaFlag expected, computed;
    bool ok = false;
    std::string note;
};
struct SweepReport {
    std::string suite;
    std::vector<SweepRow> rows;
    size_t passed() const;
    size_t failed() const { return rows.size() - passed(); }
};

// Every atypical weight of B_k with index |n| <= range (n >= 0 in B_0).
std::vector<Weight> block_window(const Parameter& P, long k, long range);

SweepReport flag_verification_sweep(const Parameter& P, long k, long range);

std::string report_json(const SweepReport& r);

}  // namespace d21
