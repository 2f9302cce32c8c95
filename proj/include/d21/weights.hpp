#pragma once

#include "d21/exactalg.hpp"
#include "d21/rootdata.hpp"

#include <array>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace d21 {

// Weights are rho-shifted integer triples f = lambda + rho.
using Weight = Vec3;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Parameter {
    bool generic = true;
    long p = 0, d = 0;

    static Parameter Generic() { return {}; }
    static Parameter Rational(long p, long d);
    static Parameter parse(const std::string& s);
    std::string str() const;
    Field field() const { return generic ? Field::generic() : Field::rational(p, d); }
    bool operator==(const Parameter& o) const { return generic == o.generic && p == o.p && d == o.d; }
};

Weight rho_shift(const Vec3& lambda);    // lambda + rho
Vec3 rho_unshift(const Weight& f);       // f - rho
Weight parse_weight(const std::string& s);

// sign entries: +1, -1, or 0 for the circle
struct AtypicalIndex {
    long k = 0;
    long n = 0;
    std::array<int, 3> signs{};
    std::string signs_str() const;  // e.g. "+o-"
    bool operator==(const AtypicalIndex&) const = default;
};

// f_{k;n}^{signs} = (s1|n|, s2|n+kp|, s3|n-kd|); in generic mode use k = 0.
Weight decode_index(const Parameter& P, long k, long n, const std::array<int, 3>& signs);
Weight decode_index(const Parameter& P, const AtypicalIndex& a);

bool is_atypical(const Parameter& P, const Weight& f);
AtypicalIndex atypical_index(const Parameter& P, const Weight& f);

struct BlockId {
    bool atypical = false;
    long k = 0;      // atypical
    Vec3 rep;        // typical: coordinatewise absolute values
    bool operator==(const BlockId&) const = default;
    std::string str() const;
};

BlockId classify_block(const Parameter& P, const Weight& f);

// Upward covers of f in the Bruhat order of its block.
std::vector<Weight> bruhat_covers(const Parameter& P, const Weight& f);
bool bruhat_leq(const Parameter& P, const Weight& f, const Weight& g);

std::set<Weight> weyl_orbit(const Weight& f);

// Casimir eigenvalue and the HC separator, both on the unshifted weight lambda
// (evaluated at the label lambda + rho).
FieldElement casimir(const Parameter& P, const Vec3& lambda);
FieldElement hc_p_value(const Parameter& P, const Vec3& lambda);

// All distinct weights f_{k;n}^{signs} with n in [lo, hi].
std::vector<Weight> enumerate_block(const Parameter& P, long k, long lo, long hi);

}  // namespace d21
