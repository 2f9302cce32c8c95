#include "d21/verma.hpp"

#include <sstream>

namespace d21 {

Vec3 monomial_depth(const PBWMonomial& m) {
    Vec3 d;
    for (int r = 0; r < kRoots; ++r) d = d + root_vector(r) * m[r];
    return d;
}

std::string monomial_str(const PBWMonomial& m) {
    std::string s;
    for (int r = 0; r < kRoots; ++r) {
        if (!m[r]) continue;
        if (!s.empty()) s += " ";
        s += std::string("f[") + root_name(r) + "]";
        if (m[r] > 1) s += "^" + std::to_string(m[r]);
    }
    return s.empty() ? "1" : s;
}

long root_height(const Vec3& v) {
    long b2 = v.y + v.x, c2 = v.z + v.x;
    if (b2 % 2 != 0 || c2 % 2 != 0) throw MathError("weight difference " + v.str() + " is not in the root lattice");
    return v.x + b2 / 2 + c2 / 2;
}

std::string VermaVector::str() const {
    if (coeffs.empty()) return "0";
    std::string s;
    for (const auto& [m, c] : coeffs) {
        if (!s.empty()) s += " + ";
        s += "(" + c.str() + ") " + monomial_str(m);
    }
    return s;
}

VermaVector VermaVector::normalized() const {
    if (coeffs.empty()) return *this;
    VermaVector out = *this;
    FieldElement lead = coeffs.begin()->second;
    for (auto& [m, c] : out.coeffs) c = c / lead;
    return out;
}

namespace {

using Vec = std::map<PBWMonomial, FieldElement>;

void vec_add(Vec& acc, const Vec& x, const FieldElement& s) {
    for (const auto& [m, c] : x) {
        FieldElement t = c * s;
        auto it = acc.find(m);
        if (it == acc.end()) {
            if (!t.is_zero()) acc.emplace(m, t);
        } else {
            it->second += t;
            if (it->second.is_zero()) acc.erase(it);
        }
    }
}

bool is_f(int x) { return x >= kRoots && x < 2 * kRoots; }
bool is_h(int x) { return x >= H2D; }

}  // namespace

VermaModule::VermaModule(std::shared_ptr<const StructureTable> table, const Weight& lambda, long window)
    : table_(std::move(table)), lambda_(lambda), window_(window) {
    if (window_ < 0) throw MathError("negative truncation window");
}

void VermaModule::check_window(const Vec3& weight) const {
    Vec3 depth = top() - weight;
    long h = root_height(depth);
    if (h > window_)
        throw WindowError("weight " + weight.str() + " lies " + std::to_string(h) + " below the top, outside window " +
                          std::to_string(window_));
}

VermaVector VermaModule::highest() const {
    VermaVector v{lambda_, top(), {}};
    v.coeffs.emplace(PBWMonomial{}, field().integer(1));
    return v;
}

VermaVector VermaModule::monomial(const PBWMonomial& m) const {
    VermaVector v{lambda_, top() - monomial_depth(m), {}};
    check_window(v.weight);
    v.coeffs.emplace(m, field().integer(1));
    return v;
}

std::vector<PBWMonomial> weight_space_basis(const Weight& lambda, const Vec3& mu, long window) {
    Vec3 depth = rho_unshift(lambda) - mu;
    long h = root_height(depth);
    if (h < 0) return {};
    if (h > window)
        throw WindowError("weight " + mu.str() + " is " + std::to_string(h) + " below the top, outside window " +
                          std::to_string(window));
    std::vector<PBWMonomial> out;
    for (int bits = 0; bits < 16; ++bits) {
        PBWMonomial m{};
        Vec3 rem = depth;
        for (int k = 0; k < 4; ++k)
            if (bits & (1 << k)) {
                m[RPP + k] = 1;
                rem = rem - root_vector(RPP + k);
            }
        if (rem.x < 0 || rem.y < 0 || rem.z < 0 || rem.x % 2 || rem.y % 2 || rem.z % 2) continue;
        m[R2D] = rem.x / 2;
        m[A1] = rem.y / 2;
        m[A2] = rem.z / 2;
        out.push_back(m);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<PBWMonomial> VermaModule::weight_space_basis(const Vec3& mu) const {
    return d21::weight_space_basis(lambda_, mu, window_);
}

const Vec& VermaModule::act_mono(int x, const PBWMonomial& m) const {
    Key key{x, m};
    auto hit = cache_.find(key);
    if (hit != cache_.end()) return hit->second;

    const Field& F = field();
    Vec out;
    int i = -1;
    for (int r = 0; r < kRoots; ++r)
        if (m[r]) {
            i = r;
            break;
        }
    if (is_h(x)) {
        Vec3 w = top() - monomial_depth(m);
        long c = x == H2D ? w.x : x == H2E1 ? w.y : w.z;
        if (c) out.emplace(m, F.integer(c));
    } else if (i < 0) {
        if (is_f(x)) {
            PBWMonomial u{};
            u[x - kRoots] = 1;
            out.emplace(u, F.integer(1));
        }
    } else if (is_f(x) && x - kRoots <= i) {
        int j = x - kRoots;
        if (j < i || !root_is_odd(j)) {
            PBWMonomial u = m;
            ++u[j];
            out.emplace(u, F.integer(1));
        }
        // f_j f_j = [f_j, f_j]/2 = 0 for odd j
    } else {
        PBWMonomial rest = m;
        --rest[i];
        int y = Fv(i);
        int sign = (basis_info(x).odd && basis_info(y).odd) ? -1 : 1;
        Vec xr = act_mono(x, rest);
        for (const auto& [mono, c] : xr) vec_add(out, act_mono(y, mono), c * sign);
        for (const auto& [b, c] : table_->bracket(x, y)) vec_add(out, act_mono(b, rest), c);
    }
    return cache_.emplace(key, std::move(out)).first->second;
}

VermaVector VermaModule::act(int x, const VermaVector& v) const {
    if (!(v.lambda == lambda_)) throw MathError("vector belongs to another Verma module");
    VermaVector out{lambda_, v.weight + basis_info(x).weight, {}};
    if (v.is_zero()) return out;
    check_window(out.weight);
    for (const auto& [m, c] : v.coeffs) vec_add(out.coeffs, act_mono(x, m), c);
    return out;
}

VermaVector VermaModule::act(const Combo& x, const VermaVector& v) const {
    VermaVector out{lambda_, v.weight, {}};
    bool first = true;
    for (const auto& [b, c] : x) {
        VermaVector t = act(b, v);
        if (first) out.weight = t.weight;
        first = false;
        vec_add(out.coeffs, t.coeffs, c);
    }
    return out;
}

VermaVector VermaModule::act_word(const std::vector<int>& word, const VermaVector& v) const {
    VermaVector cur = v;
    for (auto it = word.rbegin(); it != word.rend(); ++it) cur = act(*it, cur);
    return cur;
}

std::vector<VermaVector> VermaModule::singular_space(const Vec3& mu) const {
    auto basis = weight_space_basis(mu);
    if (basis.empty()) return {};
    std::map<std::pair<int, PBWMonomial>, size_t> row_of;
    std::vector<std::vector<std::pair<size_t, FieldElement>>> cols(basis.size());
    for (size_t j = 0; j < basis.size(); ++j) {
        VermaVector v = monomial(basis[j]);
        for (int s : {A0, A1, A2}) {
            VermaVector img = act(E(s), v);
            for (const auto& [m, c] : img.coeffs) {
                auto key = std::make_pair(s, m);
                auto it = row_of.find(key);
                size_t r = it == row_of.end() ? row_of.emplace(key, row_of.size()).first->second : it->second;
                cols[j].emplace_back(r, c);
            }
        }
    }
    SparseMatrix A(row_of.size(), basis.size());
    for (size_t j = 0; j < basis.size(); ++j)
        for (const auto& [r, c] : cols[j]) A.add(r, j, c);
    std::vector<VermaVector> out;
    for (const auto& kv : nullspace(A, field().mode)) {
        VermaVector v{lambda_, mu, {}};
        for (const auto& [j, c] : kv) v.coeffs.emplace(basis[j], c);
        out.push_back(std::move(v));
    }
    return out;
}

bool VermaModule::verify_singular(const VermaVector& v) const {
    if (v.is_zero()) return false;
    for (int s : {A0, A1, A2})
        if (!act(E(s), v).is_zero()) return false;
    return true;
}

bool VermaModule::in_span(const std::vector<VermaVector>& basis, const VermaVector& v) const {
    std::map<PBWMonomial, size_t> col;
    auto index = [&](const PBWMonomial& m) {
        auto it = col.find(m);
        return it == col.end() ? col.emplace(m, col.size()).first->second : it->second;
    };
    for (const auto& b : basis)
        for (const auto& [m, c] : b.coeffs) index(m);
    for (const auto& [m, c] : v.coeffs) index(m);
    auto build = [&](bool with_v) {
        SparseMatrix A(basis.size() + (with_v ? 1 : 0), col.size());
        for (size_t r = 0; r < basis.size(); ++r)
            for (const auto& [m, c] : basis[r].coeffs) A.set(r, col[m], c);
        if (with_v)
            for (const auto& [m, c] : v.coeffs) A.set(basis.size(), col[m], c);
        return A;
    };
    return rank(build(false), field().mode) == rank(build(true), field().mode);
}

// ---------------------------------------------------------------- lemma vectors

namespace {

VermaVector sum(const VermaVector& a, const VermaVector& b, const FieldElement& s) {
    VermaVector out = a;
    if (out.coeffs.empty()) out.weight = b.weight;
    vec_add(out.coeffs, b.coeffs, s);
    return out;
}

}  // namespace

VermaVector odd_reflection_vector(const VermaModule& M, int gamma) {
    if (!root_is_odd(gamma)) throw MathError("odd reflection needs an odd positive root");
    const Field& F = M.field();
    const Weight& L = M.lambda();
    if (!bilinear_form(F, L, root_vector(gamma)).is_zero())
        throw MathError("(lambda, gamma) != 0 for lambda = " + L.str() + ", gamma = " + root_name(gamma));
    const StructureTable& T = M.table();
    // b, c are the eps-coordinates of the highest weight lambda - rho
    Vec3 hw = M.top();
    FieldElement b = F.integer(hw.y), c = F.integer(hw.z);
    VermaVector v = M.highest();
    const int f0 = Fv(A0), f1 = Fv(A1), f2 = Fv(A2);
    switch (gamma) {
        case A0: return M.act(f0, v);
        case RPM:
            // (f0 f1 + b [f0,f1]) v
            return sum(M.act_word({f0, f1}, v), M.act(T.bracket(f0, f1), v), b);
        case RMP:
            // (f0 f2 + c [f0,f2]) v
            return sum(M.act_word({f0, f2}, v), M.act(T.bracket(f0, f2), v), c);
        case RPP: {
            // (f0 f1 f2 + b f2 [f0,f1] + c f1 [f0,f2] - (b+c+bc) [f1,[f0,f2]]) v
            VermaVector out = M.act_word({f0, f1, f2}, v);
            out = sum(out, M.act(f2, M.act(T.bracket(f0, f1), v)), b);
            out = sum(out, M.act(f1, M.act(T.bracket(f0, f2), v)), c);
            Combo inner = T.bracket(Combo{{f1, F.integer(1)}}, T.bracket(f0, f2));
            out = sum(out, M.act(inner, v), -(b + c + b * c));
            return out;
        }
    }
    throw MathError("unreachable");
}

long even_reflection_window(const Weight& lambda, int gamma) {
    long n = coroot_pairing(lambda, gamma);
    if (n < 0) return kDefaultWindow;
    long need = gamma == R2D ? root_height(root_vector(R2D)) * (n + 2) : root_height(root_vector(gamma)) * n;
    return std::max(kDefaultWindow, need);
}

VermaVector even_reflection_vector(const VermaModule& M, int gamma) {
    if (gamma != R2D && gamma != A1 && gamma != A2) throw MathError("even reflection needs an even positive root");
    long n = coroot_pairing(M.lambda(), gamma);
    if (n < 0) throw MathError("<lambda, h_gamma> = " + std::to_string(n) + " is not a nonnegative integer");
    VermaVector v = M.highest();
    if (gamma != R2D) {
        for (long i = 0; i < n; ++i) v = M.act(Fv(gamma), v);
        return v;
    }
    for (long i = 0; i < n + 2; ++i) v = M.act(Fv(R2D), v);
    // u = e_{d-e1-e2} e_{d+e1-e2} e_{d+e1+e2} e_{d-e1+e2} f_2d^{n+2} v
    return M.act_word({E(A0), E(RPM), E(RPP), E(RMP)}, v);
}

VermaVector even_expansion_oracle(const VermaModule& M) {
    const Field& F = M.field();
    const Weight& L = M.lambda();
    long n = L.x;
    if (n < 0) throw MathError("expansion needs <lambda, h_2d> >= 0");
    FieldElement one = F.integer(1), z = F.zeta(), b = F.integer(L.y), c = F.integer(L.z);
    FieldElement nn = F.integer(n), half = F.frac(1, 2);
    FieldElement beta = ((F.integer(2 + n)) * (one + z) + b + z * c) * half;
    FieldElement gam = ((F.integer(2 - n)) * (one + z) - b + z * c - F.integer(2)) * half;
    FieldElement eta = ((F.integer(4 - n)) * (one + z) - b + z * c) * half;
    FieldElement xi = ((F.integer(1 + n)) * (one + z) + b + z * c) * half;

    auto pow2d = [&](long k) { return std::vector<int>(std::max(0L, k), Fv(R2D)); };
    auto word = [&](std::vector<int> head, long k) {
        auto tail = pow2d(k);
        head.insert(head.end(), tail.begin(), tail.end());
        return head;
    };
    VermaVector v = M.highest();
    VermaVector out = M.act_word(pow2d(n), v);
    for (auto& [m, coef] : out.coeffs) coef = coef * (beta * gam + xi);
    if (n >= 1) {
        FieldElement s = nn * (one + z);
        out = sum(out, M.act_word(word({Fv(RPM), Fv(RMP)}, n - 1), v), -s * beta);
        out = sum(out, M.act_word(word({Fv(RPP), Fv(A0)}, n - 1), v), -s * eta);
        out = sum(out, M.act_word(word({Fv(A1), Fv(A0), Fv(RMP)}, n - 1), v), s);
        out = sum(out, M.act_word(word({Fv(A2), Fv(A0), Fv(RPM)}, n - 1), v), s);
    }
    if (n >= 2) {
        FieldElement s = (one + z) * (one + z) * nn * F.integer(n - 1);
        out = sum(out, M.act_word(word({Fv(RPP), Fv(A0), Fv(RPM), Fv(RMP)}, n - 2), v), -s);
    }
    return out;
}

}  // namespace d21
