#pragma once

#include "d21/exactalg.hpp"

#include <array>
#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace d21 {

// Integer triple in the basis (delta, eps1, eps2).  Used both for roots,
// actual weights, and rho-shifted labels.
struct Vec3 {
    long x = 0, y = 0, z = 0;

    Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
    Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
    Vec3 operator-() const { return {-x, -y, -z}; }
    Vec3 operator*(long k) const { return {x * k, y * k, z * k}; }
    auto operator<=>(const Vec3&) const = default;
    bool is_zero() const { return x == 0 && y == 0 && z == 0; }
    std::string str() const;
};

// Weight with field coefficients, for the bilinear form.
struct FormWeight {
    FieldElement a, b, c;
    static FormWeight from(const Field& F, const Vec3& v);
};

FieldElement bilinear_form(const Field& F, const FormWeight& mu, const FormWeight& nu);
FieldElement bilinear_form(const Field& F, const Vec3& mu, const Vec3& nu);

inline const Vec3 RHO{-1, 1, 1};

// Positive roots in the PBW order used throughout: 2delta, then the four odd
// roots, then the two even simple roots.
enum Root : int { R2D = 0, RPP = 1, RPM = 2, RMP = 3, A0 = 4, A1 = 5, A2 = 6 };
inline constexpr int kRoots = 7;

Vec3 root_vector(int r);
bool root_is_odd(int r);
const char* root_name(int r);  // "2d", "d+e1+e2", ...
bool is_root(const Vec3& v);   // nonzero roots of either sign

// <lambda, h_gamma> for gamma one of 2delta, 2eps1, 2eps2
long coroot_pairing(const Vec3& lambda, int even_root);
FieldElement coroot_pairing(const FormWeight& lambda, int even_root);

// Basis of the algebra: e_r = r, f_r = 7 + r, h_{2delta}, h_{2eps1}, h_{2eps2} = 14, 15, 16.
inline constexpr int kDim = 17;
inline constexpr int E(int r) { return r; }
inline constexpr int Fv(int r) { return kRoots + r; }
inline constexpr int H2D = 14, H2E1 = 15, H2E2 = 16;

struct BasisInfo {
    std::string label;
    bool odd;
    Vec3 weight;
};
const BasisInfo& basis_info(int i);
int basis_index(const std::string& label);

using Combo = std::map<int, FieldElement>;  // basis index -> coefficient, no zeros

void combo_add(Combo& acc, const Combo& x, const FieldElement& scale);
std::string combo_str(const Combo& c);

// simple coroot alpha_i^vee, i in {0,1,2}, as a combination of h's
Combo simple_coroot(const Field& F, int i);

struct JacobiFailure {
    int x, y, z;
    std::string lhs, rhs;
};
struct JacobiReport {
    size_t triples = 0;
    std::vector<JacobiFailure> failures;
    bool ok() const { return failures.empty(); }
};

class StructureTable {
public:
    const Field& field() const { return field_; }
    const Combo& bracket(int a, int b) const { return table_[a][b]; }
    Combo bracket(const Combo& a, const Combo& b) const;
    bool operator==(const StructureTable& o) const;

    StructureTable specialized(long p, long d) const;
    // Test hook: add `delta` to the coefficient of `target` in [a,b] (and not its mirror).
    void perturb(int a, int b, int target, const FieldElement& delta);
    std::string dump_json() const;

private:
    friend StructureTable build_structure_table(const Field&, bool);
    Field field_;
    std::array<std::array<Combo, kDim>, kDim> table_;
};

// Build the full table by closing the Chevalley seeds under super-Jacobi.
// `reverse_order` visits undetermined pairs in the opposite order.
StructureTable build_structure_table(const Field& F, bool reverse_order = false);

JacobiReport check_jacobi(const StructureTable& t);

// Weight multiset of a finite-dimensional module, as (weight, multiplicity).
using WeightMultiset = std::map<Vec3, long>;

enum class ModuleKind { Adjoint, L121, Quasinatural };
struct ModuleSpec {
    ModuleKind kind = ModuleKind::Adjoint;
    long p = 0;  // quasinatural only
    static ModuleSpec parse(const std::string& s);
    std::string str() const;
};

WeightMultiset module_weights(const ModuleSpec& m);
long total_multiplicity(const WeightMultiset& w);

}  // namespace d21
