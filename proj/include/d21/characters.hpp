#pragma once

#include "d21/rootdata.hpp"
#include "d21/weights.hpp"

#include <map>
#include <optional>
#include <string>

namespace d21 {

// Verma multiplicities keyed by rho-shifted label.
using VermaFlag = std::map<Weight, long>;

struct TruncatedCharacter {
    Vec3 anchor;                      // highest actual weight of the window
    long height = 0;                  // H
    std::map<Vec3, long> coeffs;      // actual weight -> coefficient, no zeros

    long at(const Vec3& mu) const;
    bool operator==(const TruncatedCharacter&) const = default;
};

// Simple-root coordinates (a, b, c) of a root-lattice vector, or nullopt off the lattice.
std::optional<std::array<long, 3>> simple_root_coords(const Vec3& v);
// v is a nonnegative combination of simple roots
bool is_below_or_equal(const Vec3& v);

TruncatedCharacter verma_character(const Weight& lambda, long H);
// The window is anchored at the highest weight of the flag; throws if the flag
// has no single highest entry.
TruncatedCharacter character_of_flag(const VermaFlag& flag, long H);
// Same, but on a caller-chosen window.
TruncatedCharacter character_of_flag(const VermaFlag& flag, const Vec3& anchor, long H);

VermaFlag tensor_flag(const VermaFlag& flag, const WeightMultiset& module);
VermaFlag project_to_block(const Parameter& P, const VermaFlag& flag, const BlockId& b);
VermaFlag translation_construct(const Parameter& P, const VermaFlag& seed, const WeightMultiset& module,
                                const BlockId& b);

VermaFlag typical_tilting_flag(const Parameter& P, const Weight& f);

long flag_length(const VermaFlag& flag);
VermaFlag flag_add(const VermaFlag& a, const VermaFlag& b, long scale = 1);
VermaFlag flag_negate(const VermaFlag& flag);
VermaFlag flag_swap_yz(const VermaFlag& flag);

std::string flag_json(const VermaFlag& flag);
VermaFlag flag_from_json(const std::string& s);
std::string character_json(const TruncatedCharacter& ch);
std::string flag_text(const VermaFlag& flag);
std::string character_text(const TruncatedCharacter& ch);

}  // namespace d21
