#pragma once

#include "d21/flags.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace d21 {

struct CheckFailure {
    std::string subject, expected, computed, note;
};

struct SuiteReport {
    std::string suite;
    size_t total = 0;
    std::vector<CheckFailure> failures;
    std::vector<std::string> notes;  // informational lines, not failures

    size_t failed() const { return failures.size(); }
    size_t passed() const { return total - failures.size(); }
    bool ok() const { return failures.empty(); }
    void check(bool ok, const std::string& subject, const std::string& expected = {},
               const std::string& computed = {}, const std::string& note = {});
    void absorb(const SuiteReport& other);
};

std::string suite_json(const SuiteReport& r);
std::string suite_text(const SuiteReport& r);

// A named (parameter, block) pair standing for one regime of the flag tables.
struct RegimeCase {
    std::string name;
    Parameter P;
    long k = 0;
};
// generic, regular, d1, p1d1, mirror
RegimeCase regime_case(const std::string& name);
// Every (parameter, block) pair the flag sweeps run on.
std::vector<RegimeCase> sweep_cases();

SuiteReport verify_jacobi(const Parameter& P);
// Lemma vectors for the four odd roots and the even roots 2e1, 2e2 (n <= max_n)
// and 2delta (n <= min(max_n, 3)), over labels with |coordinates| <= max_coord.
SuiteReport verify_singular(const Parameter& P, long max_n = 4, long max_coord = 5);
// Straightened 2delta vector against the displayed six-term expansion.
SuiteReport verify_expansion(const Parameter& P, long max_n = 3);
SuiteReport verify_flags(const Parameter& P, long k, long range);
// Closed-form [M:L] against the reciprocity scan and against tilting flags of -lambda.
SuiteReport verify_duality(const Parameter& P, long k, long range);
// ch M_f = sum [M_f : L] ch L on `samples` weights of the window.
SuiteReport verify_bgg(const Parameter& P, long k, long range, long H, size_t samples, uint64_t seed);
// T = P pairings plus the multiplicity, length and order shape of tilting flags.
SuiteReport verify_projective_tilting(const Parameter& P, long k, long range);
// Casimir per block over k <= max_k and the HC separator on random weights.
SuiteReport verify_blocks(const Parameter& P, long max_k, size_t samples, uint64_t seed);

// Longest atypical tilting flag over the window.
long max_tilting_length(const Parameter& P, long k, long range);

}  // namespace d21
