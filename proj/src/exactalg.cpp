#include "d21/exactalg.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace d21 {

Rational::Rational(const mpz_class& n, const mpz_class& d) {
    if (d == 0) throw MathError("rational with zero denominator");
    q_ = mpq_class(n, d);
    q_.canonicalize();
}

Rational Rational::operator/(const Rational& o) const {
    if (o.is_zero()) throw MathError("division by zero");
    return Rational(mpq_class(q_ / o.q_));
}

// ---------------------------------------------------------------- Poly

Poly::Poly(long c) {
    if (c != 0) c_.push_back(mpz_class(c));
}

Poly::Poly(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly Poly::x() { return Poly(std::vector<mpz_class>{0, 1}); }

void Poly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

mpz_class Poly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return 0;
    return c_[i];
}

mpz_class Poly::content() const {
    mpz_class g = 0;
    for (const auto& a : c_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), a.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

Poly Poly::primitive() const {
    if (is_zero()) return *this;
    mpz_class g = content();
    if (lead() < 0) g = -g;
    return divexact(g);
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& a : r.c_) a = -a;
    return r;
}

Poly Poly::operator+(const Poly& o) const {
    std::vector<mpz_class> r(std::max(c_.size(), o.c_.size()));
    for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
    return Poly(std::move(r));
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return Poly();
    std::vector<mpz_class> r(c_.size() + o.c_.size() - 1);
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    return Poly(std::move(r));
}

Poly Poly::scaled(const mpz_class& k) const {
    std::vector<mpz_class> r = c_;
    for (auto& a : r) a *= k;
    return Poly(std::move(r));
}

Poly Poly::divexact(const mpz_class& k) const {
    std::vector<mpz_class> r = c_;
    for (auto& a : r) mpz_divexact(a.get_mpz_t(), a.get_mpz_t(), k.get_mpz_t());
    return Poly(std::move(r));
}

Rational Poly::eval(const Rational& t) const {
    Rational acc(0);
    for (int i = degree(); i >= 0; --i) acc = acc * t + Rational(c_[i]);
    return acc;
}

std::string Poly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        mpz_class a = c_[i];
        if (a == 0) continue;
        if (a < 0) {
            os << (first ? "-" : " - ");
            a = -a;
        } else if (!first) {
            os << " + ";
        }
        if (i == 0 || a != 1) os << a.get_str();
        if (i > 0) {
            if (a != 1) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    return os.str();
}

Poly pseudo_remainder(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw MathError("pseudo-division by zero polynomial");
    if (a.degree() < b.degree()) return a;
    std::vector<mpz_class> r = a.coeffs();
    const auto& bc = b.coeffs();
    int db = b.degree();
    int delta = a.degree() - db;
    mpz_class lb = b.lead();
    int steps = 0;
    for (int k = a.degree(); k >= db; --k) {
        mpz_class t = r[k];
        for (auto& x : r) x *= lb;
        if (t != 0)
            for (int j = 0; j <= db; ++j) r[k - db + j] -= t * bc[j];
        ++steps;
    }
    // steps == delta + 1, so the scaling factor is lb^(delta+1)
    (void)delta;
    return Poly(std::move(r));
}

Poly divexact(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw MathError("division by zero polynomial");
    if (a.is_zero()) return Poly();
    std::vector<mpz_class> r = a.coeffs();
    const auto& bc = b.coeffs();
    int db = b.degree();
    if (a.degree() < db) throw MathError("inexact polynomial division");
    std::vector<mpz_class> q(a.degree() - db + 1);
    for (int k = a.degree(); k >= db; --k) {
        if (r[k] == 0) continue;
        if (!mpz_divisible_p(r[k].get_mpz_t(), b.lead().get_mpz_t()))
            throw MathError("inexact polynomial division");
        mpz_class t;
        mpz_divexact(t.get_mpz_t(), r[k].get_mpz_t(), b.lead().get_mpz_t());
        q[k - db] = t;
        for (int j = 0; j <= db; ++j) r[k - db + j] -= t * bc[j];
    }
    for (const auto& x : r)
        if (x != 0) throw MathError("inexact polynomial division");
    return Poly(std::move(q));
}

Poly poly_gcd(const Poly& a0, const Poly& b0) {
    if (a0.is_zero()) return b0.primitive().scaled(b0.is_zero() ? 1 : b0.content());
    if (b0.is_zero()) return a0.primitive().scaled(a0.content());
    mpz_class ca = a0.content(), cb = b0.content(), cg;
    mpz_gcd(cg.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
    Poly a = a0.primitive(), b = b0.primitive();
    if (a.degree() < b.degree()) std::swap(a, b);
    mpz_class g = 1, h = 1;
    while (true) {
        int delta = a.degree() - b.degree();
        Poly r = pseudo_remainder(a, b);
        if (r.is_zero()) break;
        if (r.degree() == 0) {
            b = Poly(1);
            break;
        }
        mpz_class hd;
        mpz_pow_ui(hd.get_mpz_t(), h.get_mpz_t(), delta);
        a = b;
        b = r.divexact(g * hd);
        g = a.lead();
        // h <- g^delta / h^(delta-1)
        if (delta == 0) {
            // h unchanged
        } else {
            mpz_class gd, hd1;
            mpz_pow_ui(gd.get_mpz_t(), g.get_mpz_t(), delta);
            mpz_pow_ui(hd1.get_mpz_t(), h.get_mpz_t(), delta - 1);
            mpz_divexact(h.get_mpz_t(), gd.get_mpz_t(), hd1.get_mpz_t());
        }
    }
    return b.primitive().scaled(cg);
}

// ---------------------------------------------------------------- RationalFunction

RationalFunction::RationalFunction(const Poly& n, const Poly& d) : num_(n), den_(d) {
    if (den_.is_zero()) throw MathError("rational function with zero denominator");
    normalize();
}

void RationalFunction::normalize() {
    if (num_.is_zero()) {
        den_ = Poly(1);
        return;
    }
    if (den_.degree() > 0) {
        Poly g = poly_gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = divexact(num_, g);
            den_ = divexact(den_, g);
        }
    }
    mpz_class c = num_.content(), cd = den_.content();
    mpz_gcd(c.get_mpz_t(), c.get_mpz_t(), cd.get_mpz_t());
    if (den_.lead() < 0) c = -c;
    if (c != 1) {
        num_ = num_.divexact(c);
        den_ = den_.divexact(c);
    }
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction r = *this;
    r.num_ = -r.num_;
    return r;
}

RationalFunction RationalFunction::operator+(const RationalFunction& o) const {
    if (den_ == o.den_) return RationalFunction(num_ + o.num_, den_);
    return RationalFunction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator-(const RationalFunction& o) const { return *this + (-o); }

RationalFunction RationalFunction::operator*(const RationalFunction& o) const {
    if (is_zero() || o.is_zero()) return RationalFunction();
    return RationalFunction(num_ * o.num_, den_ * o.den_);
}

RationalFunction RationalFunction::operator/(const RationalFunction& o) const {
    if (o.is_zero()) throw MathError("division by the zero rational function");
    return RationalFunction(num_ * o.den_, den_ * o.num_);
}

std::string RationalFunction::str() const {
    std::string n = num_.str();
    if (den_ == Poly(1)) return n;
    auto wrap = [](const Poly& p, const std::string& s) {
        return (p.coeffs().size() > 1 && std::count_if(p.coeffs().begin(), p.coeffs().end(),
                                                       [](const mpz_class& a) { return a != 0; }) > 1)
                   ? "(" + s + ")"
                   : s;
    };
    return wrap(num_, n) + "/" + wrap(den_, den_.str());
}

Rational specialize(const RationalFunction& x, long p, long d) {
    if (d <= 0 || p <= 0) throw MathError("specialize expects positive p and d");
    Rational t{mpz_class(p), mpz_class(d)};
    Rational den = x.den().eval(t);
    if (den.is_zero())
        throw MathError("pole at z = " + t.str() + ": denominator " + x.den().str() + " vanishes");
    return x.num().eval(t) / den;
}

// ---------------------------------------------------------------- FieldElement

FieldElement FieldElement::integer(Mode m, long n) {
    if (m == Mode::Specialized) return FieldElement(Rational(n));
    return FieldElement(RationalFunction(n));
}

bool FieldElement::is_zero() const {
    return std::visit([](const auto& a) { return a.is_zero(); }, v_);
}

const Rational& FieldElement::rational() const {
    if (v_.index() != 0) throw ModeError("expected a specialized scalar");
    return std::get<0>(v_);
}

const RationalFunction& FieldElement::function() const {
    if (v_.index() != 1) throw ModeError("expected a generic scalar");
    return std::get<1>(v_);
}

namespace {
template <class Op>
FieldElement combine(const FieldElement& a, const FieldElement& b, Op op) {
    if (a.mode() != b.mode()) throw ModeError("mixing specialized and generic scalars");
    if (a.mode() == Mode::Specialized) return FieldElement(op(a.rational(), b.rational()));
    return FieldElement(op(a.function(), b.function()));
}
}  // namespace

FieldElement FieldElement::operator-() const {
    return std::visit([](const auto& a) { return FieldElement(-a); }, v_);
}
FieldElement FieldElement::operator+(const FieldElement& o) const {
    return combine(*this, o, [](const auto& a, const auto& b) { return a + b; });
}
FieldElement FieldElement::operator-(const FieldElement& o) const {
    return combine(*this, o, [](const auto& a, const auto& b) { return a - b; });
}
FieldElement FieldElement::operator*(const FieldElement& o) const {
    return combine(*this, o, [](const auto& a, const auto& b) { return a * b; });
}
FieldElement FieldElement::operator/(const FieldElement& o) const {
    return combine(*this, o, [](const auto& a, const auto& b) { return a / b; });
}
bool FieldElement::operator==(const FieldElement& o) const {
    if (mode() != o.mode()) throw ModeError("comparing specialized and generic scalars");
    return v_ == o.v_;
}

std::string FieldElement::str() const {
    return std::visit([](const auto& a) { return a.str(); }, v_);
}

FieldElement specialize(const FieldElement& x, long p, long d) {
    if (x.mode() == Mode::Specialized) return x;
    return FieldElement(specialize(x.function(), p, d));
}

Field Field::rational(long p, long d) {
    if (p <= 0 || d <= 0) throw MathError("zeta must be a positive rational");
    if (std::gcd(p, d) != 1) throw MathError("zeta = p/d needs gcd(p,d) = 1");
    return Field{Mode::Specialized, p, d};
}

FieldElement Field::zeta() const {
    if (mode == Mode::Generic) return FieldElement(RationalFunction::zeta());
    return FieldElement(Rational(mpz_class(p), mpz_class(d)));
}

// ---------------------------------------------------------------- linear algebra

void SparseMatrix::set(size_t r, size_t c, const FieldElement& v) {
    if (r >= rows_ || c >= cols_) throw std::out_of_range("matrix index");
    if (v.is_zero())
        data_[r].erase(c);
    else
        data_[r][c] = v;
}

void SparseMatrix::add(size_t r, size_t c, const FieldElement& v) {
    if (v.is_zero()) return;
    auto it = data_.at(r).find(c);
    if (it == data_[r].end())
        set(r, c, v);
    else
        set(r, c, it->second + v);
}

FieldElement SparseMatrix::get(size_t r, size_t c) const {
    auto it = data_.at(r).find(c);
    if (it == data_[r].end()) throw std::out_of_range("zero entry has no mode");
    return it->second;
}

size_t SparseMatrix::nonzeros() const {
    size_t n = 0;
    for (const auto& r : data_) n += r.size();
    return n;
}

namespace {

struct Echelon {
    std::vector<std::vector<FieldElement>> rows;  // echelon rows, one per pivot
    std::vector<size_t> pivots;
};

// Fraction-free (Bareiss) forward elimination.
Echelon bareiss(const SparseMatrix& m, Mode mode) {
    const FieldElement zero = FieldElement::integer(mode, 0);
    std::vector<std::vector<FieldElement>> a(m.rows(), std::vector<FieldElement>(m.cols(), zero));
    for (size_t r = 0; r < m.rows(); ++r)
        for (const auto& [c, v] : m.row(r)) {
            if (v.mode() != mode) throw ModeError("matrix entry in the wrong mode");
            a[r][c] = v;
        }
    Echelon out;
    FieldElement prev = FieldElement::integer(mode, 1);
    size_t pr = 0;
    for (size_t col = 0; col < m.cols() && pr < a.size(); ++col) {
        size_t piv = pr;
        while (piv < a.size() && a[piv][col].is_zero()) ++piv;
        if (piv == a.size()) continue;
        std::swap(a[pr], a[piv]);
        const FieldElement& p = a[pr][col];
        for (size_t i = pr + 1; i < a.size(); ++i) {
            if (a[i][col].is_zero()) {
                if (!(prev == FieldElement::integer(mode, 1)) || !(p == FieldElement::integer(mode, 1)))
                    for (size_t j = col + 1; j < m.cols(); ++j)
                        if (!a[i][j].is_zero()) a[i][j] = a[i][j] * p / prev;
                continue;
            }
            for (size_t j = col + 1; j < m.cols(); ++j)
                a[i][j] = (p * a[i][j] - a[i][col] * a[pr][j]) / prev;
            a[i][col] = zero;
        }
        prev = p;
        out.pivots.push_back(col);
        ++pr;
    }
    a.resize(pr);
    out.rows = std::move(a);
    return out;
}

}  // namespace

size_t rank(const SparseMatrix& m, Mode mode) { return bareiss(m, mode).pivots.size(); }

std::vector<SparseVector> nullspace(const SparseMatrix& m, Mode mode) {
    Echelon e = bareiss(m, mode);
    std::vector<bool> is_pivot(m.cols(), false);
    for (size_t c : e.pivots) is_pivot[c] = true;
    std::vector<SparseVector> basis;
    for (size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        std::vector<FieldElement> x(m.cols(), FieldElement::integer(mode, 0));
        x[free] = FieldElement::integer(mode, 1);
        for (size_t k = e.pivots.size(); k-- > 0;) {
            size_t pc = e.pivots[k];
            FieldElement s = FieldElement::integer(mode, 0);
            for (size_t j = pc + 1; j < m.cols(); ++j)
                if (!x[j].is_zero() && !e.rows[k][j].is_zero()) s += e.rows[k][j] * x[j];
            x[pc] = -s / e.rows[k][pc];
        }
        SparseVector v;
        FieldElement lead;
        bool have = false;
        for (size_t j = 0; j < m.cols(); ++j) {
            if (x[j].is_zero()) continue;
            if (!have) {
                lead = x[j];
                have = true;
            }
            v[j] = x[j] / lead;
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace d21
