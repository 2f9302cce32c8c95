#pragma once

#include "d21/exactalg.hpp"
#include "d21/rootdata.hpp"
#include "d21/weights.hpp"

#include <array>
#include <map>
#include <memory>
#include <unordered_map>
#include <vector>

namespace d21 {

// Exponents over (f_2d, f_{d+e1+e2}, f_{d+e1-e2}, f_{d-e1+e2}, f0, f1, f2).
using PBWMonomial = std::array<int, kRoots>;

Vec3 monomial_depth(const PBWMonomial& m);  // sum of exponent * root
std::string monomial_str(const PBWMonomial& m);

// Height of a nonnegative root combination in simple-root coordinates.
// Throws if v is not in the root lattice.
long root_height(const Vec3& v);

struct WindowError : MathError {
    using MathError::MathError;
};

inline constexpr long kDefaultWindow = 12;

struct VermaVector {
    Weight lambda;  // rho-shifted label of the ambient Verma module
    Vec3 weight;    // actual weight of every monomial present
    std::map<PBWMonomial, FieldElement> coeffs;

    bool is_zero() const { return coeffs.empty(); }
    std::string str() const;
    // Rescaled so the first nonzero coefficient (in monomial order) is 1.
    VermaVector normalized() const;
};

// The Verma module M_lambda (highest weight lambda - rho) over a fixed
// structure table, truncated at `window` root-height units below the top.
class VermaModule {
public:
    VermaModule(std::shared_ptr<const StructureTable> table, const Weight& lambda, long window = kDefaultWindow);

    const Field& field() const { return table_->field(); }
    const StructureTable& table() const { return *table_; }
    const Weight& lambda() const { return lambda_; }
    Vec3 top() const { return rho_unshift(lambda_); }
    long window() const { return window_; }

    VermaVector highest() const;
    VermaVector monomial(const PBWMonomial& m) const;
    std::vector<PBWMonomial> weight_space_basis(const Vec3& mu) const;

    VermaVector act(int x, const VermaVector& v) const;
    VermaVector act(const Combo& x, const VermaVector& v) const;
    // apply the word x1 x2 ... xk (rightmost first) to v
    VermaVector act_word(const std::vector<int>& word, const VermaVector& v) const;

    std::vector<VermaVector> singular_space(const Vec3& mu) const;
    bool verify_singular(const VermaVector& v) const;
    bool in_span(const std::vector<VermaVector>& basis, const VermaVector& v) const;

private:
    using Vec = std::map<PBWMonomial, FieldElement>;
    const Vec& act_mono(int x, const PBWMonomial& m) const;
    void check_window(const Vec3& weight) const;

    std::shared_ptr<const StructureTable> table_;
    Weight lambda_;
    long window_;
    struct Key {
        int x;
        PBWMonomial m;
        bool operator==(const Key&) const = default;
    };
    struct KeyHash {
        size_t operator()(const Key& k) const {
            size_t h = k.x;
            for (int e : k.m) h = h * 131 + e;
            return h;
        }
    };
    mutable std::unordered_map<Key, Vec, KeyHash> cache_;
};

std::vector<PBWMonomial> weight_space_basis(const Weight& lambda, const Vec3& mu, long window = kDefaultWindow);

// Singular vectors of the odd-reflection lemma (gamma one of RPP, RPM, RMP, A0).
VermaVector odd_reflection_vector(const VermaModule& M, int gamma);
// Even-reflection singular vector; for 2delta built by applying four raising
// operators to f_2d^{n+2} v.
VermaVector even_reflection_vector(const VermaModule& M, int gamma);
// Window needed by even_reflection_vector.
long even_reflection_window(const Weight& lambda, int gamma);

// The displayed six-term expansion, used as an oracle for the 2delta case.
VermaVector even_expansion_oracle(const VermaModule& M);

}  // namespace d21
