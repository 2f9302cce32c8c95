#include "d21/rootdata.hpp"

#include <nlohmann/json.hpp>

#include <functional>
#include <sstream>

namespace d21 {

std::string Vec3::str() const {
    return std::to_string(x) + "," + std::to_string(y) + "," + std::to_string(z);
}

FormWeight FormWeight::from(const Field& F, const Vec3& v) {
    return {F.integer(v.x), F.integer(v.y), F.integer(v.z)};
}

FieldElement bilinear_form(const Field& F, const FormWeight& mu, const FormWeight& nu) {
    FieldElement one = F.integer(1), z = F.zeta();
    return -(one + z) * mu.a * nu.a + mu.b * nu.b + z * mu.c * nu.c;
}

FieldElement bilinear_form(const Field& F, const Vec3& mu, const Vec3& nu) {
    return bilinear_form(F, FormWeight::from(F, mu), FormWeight::from(F, nu));
}

namespace {
const Vec3 kRootVec[kRoots] = {{2, 0, 0}, {1, 1, 1}, {1, 1, -1}, {1, -1, 1},
                               {1, -1, -1}, {0, 2, 0}, {0, 0, 2}};
const char* kRootName[kRoots] = {"2d", "d+e1+e2", "d+e1-e2", "d-e1+e2", "d-e1-e2", "2e1", "2e2"};
}  // namespace

Vec3 root_vector(int r) { return kRootVec[r]; }
bool root_is_odd(int r) { return r >= RPP && r <= A0; }
const char* root_name(int r) { return kRootName[r]; }

bool is_root(const Vec3& v) {
    for (const auto& r : kRootVec)
        if (v == r || v == -r) return true;
    return false;
}

long coroot_pairing(const Vec3& lambda, int even_root) {
    switch (even_root) {
        case R2D: return lambda.x;
        case A1: return lambda.y;
        case A2: return lambda.z;
    }
    throw MathError(std::string("not an even positive root: ") + root_name(even_root));
}

FieldElement coroot_pairing(const FormWeight& lambda, int even_root) {
    switch (even_root) {
        case R2D: return lambda.a;
        case A1: return lambda.b;
        case A2: return lambda.c;
    }
    throw MathError(std::string("not an even positive root: ") + root_name(even_root));
}

namespace {
std::vector<BasisInfo> make_basis() {
    std::vector<BasisInfo> b;
    for (int r = 0; r < kRoots; ++r) b.push_back({std::string("e[") + kRootName[r] + "]", root_is_odd(r), kRootVec[r]});
    for (int r = 0; r < kRoots; ++r) b.push_back({std::string("f[") + kRootName[r] + "]", root_is_odd(r), -kRootVec[r]});
    b.push_back({"h[2d]", false, {}});
    b.push_back({"h[2e1]", false, {}});
    b.push_back({"h[2e2]", false, {}});
    return b;
}
}  // namespace

const BasisInfo& basis_info(int i) {
    static const std::vector<BasisInfo> basis = make_basis();
    return basis.at(i);
}

int basis_index(const std::string& label) {
    for (int i = 0; i < kDim; ++i)
        if (basis_info(i).label == label) return i;
    throw MathError("unknown basis element " + label);
}

void combo_add(Combo& acc, const Combo& x, const FieldElement& scale) {
    for (const auto& [k, v] : x) {
        FieldElement t = v * scale;
        auto it = acc.find(k);
        if (it == acc.end()) {
            if (!t.is_zero()) acc.emplace(k, t);
        } else {
            it->second += t;
            if (it->second.is_zero()) acc.erase(it);
        }
    }
}

std::string combo_str(const Combo& c) {
    if (c.empty()) return "0";
    std::string s;
    for (const auto& [k, v] : c) {
        if (!s.empty()) s += " + ";
        s += "(" + v.str() + ")*" + basis_info(k).label;
    }
    return s;
}

Combo simple_coroot(const Field& F, int i) {
    switch (i) {
        case 0: {
            FieldElement half = F.frac(1, 2);
            return {{H2D, (F.integer(1) + F.zeta()) * half}, {H2E1, half}, {H2E2, F.zeta() * half}};
        }
        case 1: return {{H2E1, F.integer(1)}};
        case 2: return {{H2E2, F.integer(1)}};
    }
    throw MathError("simple coroot index out of range");
}

// ---------------------------------------------------------------- bootstrap

namespace {

int sign_of(bool a, bool b) { return (a && b) ? -1 : 1; }  // (-1)^{|a||b|}

struct Builder {
    Field F;
    std::array<std::array<std::optional<Combo>, kDim>, kDim> t;
    // composite y = scale * [left, right] with left, right basis elements
    struct Decomp {
        int left, right;
        FieldElement scale;
    };
    std::array<std::optional<Decomp>, kDim> decomp;

    void assign(int a, int b, const Combo& v) {
        auto check = [&](int i, int j, const Combo& w) {
            if (t[i][j] && !(*t[i][j] == w))
                throw MathError("inconsistent bracket [" + basis_info(i).label + "," + basis_info(j).label +
                                "]: " + combo_str(*t[i][j]) + " vs " + combo_str(w));
            t[i][j] = w;
        };
        check(a, b, v);
        Combo mirror;
        combo_add(mirror, v, F.integer(-sign_of(basis_info(a).odd, basis_info(b).odd)));
        check(b, a, mirror);
    }

    std::optional<Combo> lin(int a, const Combo& y) const {  // [a, y]
        Combo out;
        for (const auto& [k, v] : y) {
            if (!t[a][k]) return std::nullopt;
            combo_add(out, *t[a][k], v);
        }
        return out;
    }
    std::optional<Combo> linl(const Combo& x, int b) const {  // [x, b]
        Combo out;
        for (const auto& [k, v] : x) {
            if (!t[k][b]) return std::nullopt;
            combo_add(out, *t[k][b], v);
        }
        return out;
    }

    // Evaluate a definition tree; only brackets already in the table are used.
    Combo single(int i) const { return {{i, F.integer(1)}}; }

    void seed() {
        Vec3 zero{};
        // Cartan actions
        for (int i = 0; i < kDim; ++i) {
            const auto& bi = basis_info(i);
            const long w[3] = {bi.weight.x, bi.weight.y, bi.weight.z};
            for (int h = 0; h < 3; ++h) {
                Combo c;
                if (w[h] != 0) c[i] = F.integer(w[h]);
                assign(H2D + h, i, c);
            }
        }
        // [e_i, f_j]
        const int simple[3] = {A0, A1, A2};
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) assign(E(simple[i]), Fv(simple[j]), i == j ? simple_coroot(F, i) : Combo{});
        // brackets forced to vanish by weights
        for (int a = 0; a < kDim; ++a)
            for (int b = 0; b < kDim; ++b) {
                Vec3 s = basis_info(a).weight + basis_info(b).weight;
                if (s != zero && !is_root(s)) assign(a, b, {});
            }
        // Composite root vectors.  Each is scale*[[..]] in terms of earlier basis
        // elements; inner brackets are evaluated from what is already known.
        auto define = [&](int target, const Combo& left, const Combo& right, const FieldElement& outer) {
            // left and right must each be a multiple of one basis element
            if (left.size() != 1 || right.size() != 1) throw MathError("composite definition is not monomial");
            auto [u, a] = *left.begin();
            auto [w, b] = *right.begin();
            FieldElement s = outer * a * b;  // target = s * [u, w]
            assign(u, w, {{target, F.integer(1) / s}});
            decomp[target] = Decomp{u, w, s};
        };
        auto br = [&](int a, int b) {
            if (!t[a][b]) throw MathError("definition uses an unknown bracket");
            return *t[a][b];
        };
        FieldElement one = F.integer(1);
        FieldElement inv = one / ((one + F.zeta()) * (one + F.zeta()));
        // e_{d+e1-e2} := [e0, e1]; e_{d-e1+e2} := [e2, e0]
        define(E(RPM), single(E(A0)), single(E(A1)), one);
        define(E(RMP), single(E(A2)), single(E(A0)), one);
        // e_{d+e1+e2} := [[e0,e1], e2]
        define(E(RPP), single(E(RPM)), single(E(A2)), one);
        // e_{2d} := (1/(1+z))^2 [[e0,e1],[e0,e2]]
        define(E(R2D), single(E(RPM)), br(E(A0), E(A2)), inv);
        // f_{d+e1-e2} := [f0, f1]; f_{d-e1+e2} := [f0, f2]
        define(Fv(RPM), single(Fv(A0)), single(Fv(A1)), one);
        define(Fv(RMP), single(Fv(A0)), single(Fv(A2)), one);
        // f_{d+e1+e2} := [[f1,f0], f2]
        define(Fv(RPP), br(Fv(A1), Fv(A0)), single(Fv(A2)), one);
        // f_{2d} := [[f0,f1],[f0,f2]]
        define(Fv(R2D), single(Fv(RPM)), single(Fv(RMP)), one);
    }

    // [x, y] via the decomposition of y:  [x,[y1,y2]] = [[x,y1],y2] + (-1)^{|x||y1|}[y1,[x,y2]]
    std::optional<Combo> via_right(int x, int y) const {
        if (!decomp[y]) return std::nullopt;
        const auto& d = *decomp[y];
        auto xy1 = t[x][d.left];
        auto xy2 = t[x][d.right];
        if (!xy1 || !xy2) return std::nullopt;
        auto first = linl(*xy1, d.right);
        auto second = lin(d.left, *xy2);
        if (!first || !second) return std::nullopt;
        Combo out = *first;
        combo_add(out, *second, F.integer(sign_of(basis_info(x).odd, basis_info(d.left).odd)));
        Combo scaled;
        combo_add(scaled, out, d.scale);
        return scaled;
    }
    // [[x1,x2], y] = [x1,[x2,y]] - (-1)^{|x1||x2|}[x2,[x1,y]]
    std::optional<Combo> via_left(int x, int y) const {
        if (!decomp[x]) return std::nullopt;
        const auto& d = *decomp[x];
        auto x2y = t[d.right][y];
        auto x1y = t[d.left][y];
        if (!x2y || !x1y) return std::nullopt;
        auto first = lin(d.left, *x2y);
        auto second = lin(d.right, *x1y);
        if (!first || !second) return std::nullopt;
        Combo out = *first;
        combo_add(out, *second, F.integer(-sign_of(basis_info(d.left).odd, basis_info(d.right).odd)));
        Combo scaled;
        combo_add(scaled, out, d.scale);
        return scaled;
    }

    void close(bool reverse) {
        std::vector<std::pair<int, int>> order;
        for (int a = 0; a < kDim; ++a)
            for (int b = 0; b < kDim; ++b) order.emplace_back(a, b);
        if (reverse) std::reverse(order.begin(), order.end());
        bool progress = true;
        while (progress) {
            progress = false;
            for (auto [a, b] : order) {
                if (t[a][b]) continue;
                auto r = via_right(a, b);
                auto l = via_left(a, b);
                if (r && l && !(*r == *l))
                    throw MathError("Jacobi closure disagrees on [" + basis_info(a).label + "," +
                                    basis_info(b).label + "]");
                if (r || l) {
                    assign(a, b, r ? *r : *l);
                    progress = true;
                }
            }
        }
        for (int a = 0; a < kDim; ++a)
            for (int b = 0; b < kDim; ++b)
                if (!t[a][b])
                    throw MathError("Jacobi closure left [" + basis_info(a).label + "," + basis_info(b).label +
                                    "] undetermined");
    }
};

}  // namespace

StructureTable build_structure_table(const Field& F, bool reverse_order) {
    Builder b{F, {}, {}};
    b.seed();
    b.close(reverse_order);
    StructureTable out;
    out.field_ = F;
    for (int a = 0; a < kDim; ++a)
        for (int c = 0; c < kDim; ++c) out.table_[a][c] = *b.t[a][c];
    return out;
}

Combo StructureTable::bracket(const Combo& a, const Combo& b) const {
    Combo out;
    for (const auto& [i, u] : a)
        for (const auto& [j, v] : b) combo_add(out, table_[i][j], u * v);
    return out;
}

bool StructureTable::operator==(const StructureTable& o) const {
    return field_ == o.field_ && table_ == o.table_;
}

StructureTable StructureTable::specialized(long p, long d) const {
    StructureTable out;
    out.field_ = Field::rational(p, d);
    for (int a = 0; a < kDim; ++a)
        for (int b = 0; b < kDim; ++b)
            for (const auto& [k, v] : table_[a][b]) {
                FieldElement s = specialize(v, p, d);
                if (!s.is_zero()) out.table_[a][b][k] = s;
            }
    return out;
}

void StructureTable::perturb(int a, int b, int target, const FieldElement& delta) {
    combo_add(table_[a][b], {{target, delta}}, field_.integer(1));
}

std::string StructureTable::dump_json() const {
    nlohmann::ordered_json j;
    j["zeta"] = field_.mode == Mode::Generic ? std::string("generic")
                                             : std::to_string(field_.p) + "/" + std::to_string(field_.d);
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (int a = 0; a < kDim; ++a)
        for (int b = 0; b < kDim; ++b) {
            if (table_[a][b].empty()) continue;
            nlohmann::ordered_json terms = nlohmann::ordered_json::object();
            for (const auto& [k, v] : table_[a][b]) terms[basis_info(k).label] = v.str();
            rows.push_back({{"x", basis_info(a).label}, {"y", basis_info(b).label}, {"bracket", terms}});
        }
    j["brackets"] = rows;
    return j.dump(1);
}

JacobiReport check_jacobi(const StructureTable& t) {
    JacobiReport rep;
    const Field& F = t.field();
    for (int x = 0; x < kDim; ++x)
        for (int y = 0; y < kDim; ++y)
            for (int z = 0; z < kDim; ++z) {
                ++rep.triples;
                Combo X{{x, F.integer(1)}}, Y{{y, F.integer(1)}}, Z{{z, F.integer(1)}};
                Combo lhs = t.bracket(X, t.bracket(Y, Z));
                Combo rhs = t.bracket(t.bracket(X, Y), Z);
                combo_add(rhs, t.bracket(Y, t.bracket(X, Z)),
                          F.integer(sign_of(basis_info(x).odd, basis_info(y).odd)));
                if (!(lhs == rhs)) rep.failures.push_back({x, y, z, combo_str(lhs), combo_str(rhs)});
            }
    return rep;
}

// ---------------------------------------------------------------- modules

ModuleSpec ModuleSpec::parse(const std::string& s) {
    if (s == "adjoint") return {ModuleKind::Adjoint, 0};
    if (s == "L121") return {ModuleKind::L121, 0};
    const std::string pre = "quasinatural(";
    if (s.rfind(pre, 0) == 0 && s.back() == ')') {
        long p = std::stol(s.substr(pre.size(), s.size() - pre.size() - 1));
        if (p < 1) throw MathError("quasinatural(p) needs p >= 1");
        return {ModuleKind::Quasinatural, p};
    }
    throw MathError("unknown module '" + s + "'");
}

std::string ModuleSpec::str() const {
    switch (kind) {
        case ModuleKind::Adjoint: return "adjoint";
        case ModuleKind::L121: return "L121";
        case ModuleKind::Quasinatural: return "quasinatural(" + std::to_string(p) + ")";
    }
    return "?";
}

WeightMultiset module_weights(const ModuleSpec& m) {
    WeightMultiset w;
    auto signs = [&](long a, long b, long c, long mult) {
        for (long sa : {1L, -1L})
            for (long sb : {1L, -1L})
                for (long sc : {1L, -1L}) {
                    if ((a == 0 && sa < 0) || (b == 0 && sb < 0) || (c == 0 && sc < 0)) continue;
                    w[{sa * a, sb * b, sc * c}] += mult;
                }
    };
    switch (m.kind) {
        case ModuleKind::Adjoint:
            for (int r = 0; r < kRoots; ++r) {
                w[root_vector(r)] += 1;
                w[-root_vector(r)] += 1;
            }
            w[{0, 0, 0}] += 3;
            break;
        case ModuleKind::L121:
            signs(2, 1, 0, 1);
            signs(1, 2, 1, 1);
            signs(0, 3, 0, 1);
            signs(0, 1, 2, 1);
            signs(1, 0, 1, 2);
            signs(0, 1, 0, 3);
            break;
        case ModuleKind::Quasinatural:
            if (m.p < 1) throw MathError("quasinatural(p) needs p >= 1");
            for (long i = 0; i <= m.p - 1; ++i) {
                w[{1, m.p - 1 - 2 * i, 0}] += 1;
                w[{-1, m.p - 1 - 2 * i, 0}] += 1;
            }
            for (long j = 0; j <= m.p; ++j) {
                w[{0, m.p - 2 * j, 1}] += 1;
                w[{0, m.p - 2 * j, -1}] += 1;
            }
            break;
    }
    return w;
}

long total_multiplicity(const WeightMultiset& w) {
    long n = 0;
    for (const auto& [k, v] : w) n += v;
    return n;
}

}  // namespace d21
