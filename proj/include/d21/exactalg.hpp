#pragma once

#include <gmpxx.h>

#include <map>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace d21 {

struct MathError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Thrown when two scalars of different modes meet in one operation.
struct ModeError : MathError {
    using MathError::MathError;
};

class Rational {
public:
    Rational() = default;
    Rational(long n) : q_(n) {}
    Rational(const mpz_class& n) : q_(n) {}
    Rational(const mpz_class& n, const mpz_class& d);
    explicit Rational(const mpq_class& q) : q_(q) { q_.canonicalize(); }

    const mpq_class& raw() const { return q_; }
    mpz_class num() const { return q_.get_num(); }
    mpz_class den() const { return q_.get_den(); }
    bool is_zero() const { return sgn(q_) == 0; }
    int sign() const { return sgn(q_); }

    Rational operator-() const { return Rational(mpq_class(-q_)); }
    Rational operator+(const Rational& o) const { return Rational(mpq_class(q_ + o.q_)); }
    Rational operator-(const Rational& o) const { return Rational(mpq_class(q_ - o.q_)); }
    Rational operator*(const Rational& o) const { return Rational(mpq_class(q_ * o.q_)); }
    Rational operator/(const Rational& o) const;
    bool operator==(const Rational& o) const { return q_ == o.q_; }
    bool operator!=(const Rational& o) const { return q_ != o.q_; }
    bool operator<(const Rational& o) const { return q_ < o.q_; }

    std::string str() const { return q_.get_str(); }

private:
    mpq_class q_{0};
};

// Dense univariate polynomial over Z, coefficients stored low degree first,
// no trailing zeros.  The zero polynomial has no coefficients.
class Poly {
public:
    Poly() = default;
    Poly(long c);
    explicit Poly(std::vector<mpz_class> coeffs);
    static Poly x();

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<mpz_class>& coeffs() const { return c_; }
    mpz_class coeff(int i) const;
    const mpz_class& lead() const { return c_.back(); }
    mpz_class content() const;
    Poly primitive() const;

    Poly operator-() const;
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly scaled(const mpz_class& k) const;
    Poly divexact(const mpz_class& k) const;
    bool operator==(const Poly& o) const { return c_ == o.c_; }
    bool operator!=(const Poly& o) const { return c_ != o.c_; }

    Rational eval(const Rational& t) const;
    std::string str(const std::string& var = "z") const;

private:
    void trim();
    std::vector<mpz_class> c_;
};

// lc(b)^(deg a - deg b + 1) * a = q*b + r
Poly pseudo_remainder(const Poly& a, const Poly& b);
// a / b where b is known to divide a over Z
Poly divexact(const Poly& a, const Poly& b);
// gcd over Z[z] by the subresultant remainder sequence; positive leading coefficient
Poly poly_gcd(const Poly& a, const Poly& b);

class RationalFunction {
public:
    RationalFunction() : num_(0), den_(1) {}
    RationalFunction(long c) : num_(c), den_(1) {}
    RationalFunction(const Poly& p) : num_(p), den_(1) {}
    RationalFunction(const Poly& n, const Poly& d);
    static RationalFunction zeta() { return RationalFunction(Poly::x()); }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    RationalFunction operator-() const;
    RationalFunction operator+(const RationalFunction& o) const;
    RationalFunction operator-(const RationalFunction& o) const;
    RationalFunction operator*(const RationalFunction& o) const;
    RationalFunction operator/(const RationalFunction& o) const;
    bool operator==(const RationalFunction& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RationalFunction& o) const { return !(*this == o); }

    std::string str() const;

private:
    void normalize();
    Poly num_, den_;
};

// Evaluate at z = p/d.  Throws MathError when the denominator vanishes there.
Rational specialize(const RationalFunction& x, long p, long d);

enum class Mode { Specialized, Generic };

class FieldElement {
public:
    FieldElement() : v_(Rational(0)) {}
    FieldElement(const Rational& r) : v_(r) {}
    FieldElement(const RationalFunction& r) : v_(r) {}
    static FieldElement integer(Mode m, long n);

    Mode mode() const { return v_.index() == 0 ? Mode::Specialized : Mode::Generic; }
    bool is_zero() const;
    const Rational& rational() const;
    const RationalFunction& function() const;

    FieldElement operator-() const;
    FieldElement operator+(const FieldElement& o) const;
    FieldElement operator-(const FieldElement& o) const;
    FieldElement operator*(const FieldElement& o) const;
    FieldElement operator/(const FieldElement& o) const;
    FieldElement& operator+=(const FieldElement& o) { return *this = *this + o; }
    FieldElement& operator-=(const FieldElement& o) { return *this = *this - o; }
    FieldElement& operator*=(const FieldElement& o) { return *this = *this * o; }
    bool operator==(const FieldElement& o) const;
    bool operator!=(const FieldElement& o) const { return !(*this == o); }

    // mode-preserving integer arithmetic
    FieldElement operator*(long k) const { return *this * FieldElement::integer(mode(), k); }
    FieldElement operator+(long k) const { return *this + FieldElement::integer(mode(), k); }
    FieldElement operator-(long k) const { return *this - FieldElement::integer(mode(), k); }

    std::string str() const;

private:
    std::variant<Rational, RationalFunction> v_;
};

FieldElement specialize(const FieldElement& x, long p, long d);

// The scalar context of one engine instance: which mode, and what zeta is.
struct Field {
    Mode mode = Mode::Generic;
    long p = 0, d = 0;  // meaningful in specialized mode only

    static Field generic() { return Field{}; }
    static Field rational(long p, long d);

    FieldElement zeta() const;
    FieldElement integer(long n) const { return FieldElement::integer(mode, n); }
    FieldElement frac(long n, long m) const { return integer(n) / integer(m); }
    bool operator==(const Field& o) const { return mode == o.mode && p == o.p && d == o.d; }
};

using SparseVector = std::map<size_t, FieldElement>;

class SparseMatrix {
public:
    SparseMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), data_(rows) {}

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    void set(size_t r, size_t c, const FieldElement& v);
    void add(size_t r, size_t c, const FieldElement& v);
    FieldElement get(size_t r, size_t c) const;
    const SparseVector& row(size_t r) const { return data_.at(r); }
    size_t nonzeros() const;

private:
    size_t rows_, cols_;
    std::vector<SparseVector> data_;
};

size_t rank(const SparseMatrix& m, Mode mode);
// Right kernel basis, each vector scaled so its first nonzero entry is 1.
std::vector<SparseVector> nullspace(const SparseMatrix& m, Mode mode);

}  // namespace d21
