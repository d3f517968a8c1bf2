#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "superbranch/setpartition.hpp"

namespace superbranch {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// Thrown when a value the theory guarantees to be a polynomial in q comes out
/// with a negative power of q. Signals a bug, never bad input.
class IntegralityError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// sign · q^eq · t^et with t = q−1. The zero monomial has all fields 0.
struct QMonomial {
    int sign = 0;
    int eq = 0;
    int et = 0;

    static QMonomial zero() { return {}; }
    static QMonomial one() { return {1, 0, 0}; }
    static QMonomial make(int sign, int eq, int et);

    bool is_zero() const { return sign == 0; }

    friend auto operator<=>(const QMonomial&, const QMonomial&) = default;
};

QMonomial mono_mul(const QMonomial& a, const QMonomial& b);
QMonomial operator*(const QMonomial& a, const QMonomial& b);
QMonomial mono_pow_q(int a);
QMonomial mono_pow_t(int b);

/// Throws IntegralityError naming `what` when eq < 0.
const QMonomial& require_integral(const QMonomial& m, const char* what);

/// "t^2*q", "-q", "1", "0".
std::string to_string(const QMonomial& m);

/// Laurent polynomial in q with integer coefficients, keyed by exponent.
/// Zero coefficients are never stored.
class LaurentPoly {
public:
    LaurentPoly() = default;
    static LaurentPoly constant(const BigInt& c);
    static LaurentPoly monomial(int exp, const BigInt& c);

    const std::map<int, BigInt>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    BigInt coeff(int exp) const;

    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);

    BigRational eval(const BigInt& q) const;

    friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

private:
    void add_term(int exp, const BigInt& c);
    std::map<int, BigInt> c_;
};

/// Highest power first, e.g. "q^2 - 2*q + 1".
std::string to_string(const LaurentPoly& p);

LaurentPoly canonicalize(const QMonomial& m);

/// Finite sum of monomials, kept as entered; compare via canonical form.
class QPolynomial {
public:
    QPolynomial() = default;
    QPolynomial(std::initializer_list<QMonomial> terms);

    void add(const QMonomial& m);
    QPolynomial& operator+=(const QPolynomial& o);
    const std::vector<QMonomial>& terms() const { return terms_; }

    LaurentPoly canonical() const;

    friend bool operator==(const QPolynomial& a, const QPolynomial& b) {
        return a.canonical() == b.canonical();
    }

private:
    std::vector<QMonomial> terms_;
};

LaurentPoly canonicalize(const QPolynomial& p);

BigRational eval_exact(const QMonomial& m, const BigInt& q);
BigRational eval_exact(const QPolynomial& p, const BigInt& q);
BigRational eval_exact(const LaurentPoly& p, const BigInt& q);

/// Integer value; throws IntegralityError if the value is not an integer.
BigInt eval_integer(const QMonomial& m, const BigInt& q);

/// Σ c_μ χ^μ over a fixed ground set. Zero coefficients are dropped on insert.
class CharCombination {
public:
    explicit CharCombination(int n = 0) : n_(n) {}

    int n() const { return n_; }
    const std::map<SetPartition, QMonomial>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }

    /// Throws DomainError on a ground-set mismatch, std::logic_error when the
    /// key is already present (monomials do not add).
    void insert(const SetPartition& p, const QMonomial& c);
    /// Zero when absent.
    QMonomial at(const SetPartition& p) const;
    bool contains(const SetPartition& p) const { return terms_.count(p) != 0; }

    friend bool operator==(const CharCombination&, const CharCombination&) = default;

private:
    int n_;
    std::map<SetPartition, QMonomial> terms_;
};

} // namespace superbranch
