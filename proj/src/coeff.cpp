#include "superbranch/coeff.hpp"

#include <boost/multiprecision/cpp_int.hpp>

namespace superbranch {

QMonomial QMonomial::make(int sign, int eq, int et) {
    if (sign == 0) return zero();
    if (et < 0) throw std::logic_error("negative power of t");
    return {sign > 0 ? 1 : -1, eq, et};
}

QMonomial mono_mul(const QMonomial& a, const QMonomial& b) {
    if (a.is_zero() || b.is_zero()) return QMonomial::zero();
    return {a.sign * b.sign, a.eq + b.eq, a.et + b.et};
}

QMonomial operator*(const QMonomial& a, const QMonomial& b) { return mono_mul(a, b); }

QMonomial mono_pow_q(int a) { return {1, a, 0}; }
QMonomial mono_pow_t(int b) { return QMonomial::make(1, 0, b); }

const QMonomial& require_integral(const QMonomial& m, const char* what) {
    if (!m.is_zero() && m.eq < 0)
        throw IntegralityError(std::string(what) + ": negative power of q in " + to_string(m));
    return m;
}

static std::string power(const char* var, int e) {
    return e == 1 ? std::string(var) : std::string(var) + "^" + std::to_string(e);
}

std::string to_string(const QMonomial& m) {
    if (m.is_zero()) return "0";
    std::string body;
    if (m.et != 0) body = power("t", m.et);
    if (m.eq != 0) {
        if (!body.empty()) body += '*';
        body += power("q", m.eq);
    }
    if (body.empty()) body = "1";
    return m.sign < 0 ? "-" + body : body;
}

LaurentPoly LaurentPoly::constant(const BigInt& c) { return monomial(0, c); }

LaurentPoly LaurentPoly::monomial(int exp, const BigInt& c) {
    LaurentPoly p;
    p.add_term(exp, c);
    return p;
}

BigInt LaurentPoly::coeff(int exp) const {
    auto it = c_.find(exp);
    return it == c_.end() ? BigInt(0) : it->second;
}

void LaurentPoly::add_term(int exp, const BigInt& c) {
    if (c == 0) return;
    auto [it, fresh] = c_.try_emplace(exp, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) c_.erase(it);
    }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.c_) add_term(e, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.c_) add_term(e, -c);
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly out;
    for (const auto& [ea, ca] : a.c_)
        for (const auto& [eb, cb] : b.c_) out.add_term(ea + eb, ca * cb);
    return out;
}

BigRational LaurentPoly::eval(const BigInt& q) const {
    BigRational sum = 0;
    for (const auto& [e, c] : c_) {
        BigInt p = boost::multiprecision::pow(q, static_cast<unsigned>(e < 0 ? -e : e));
        sum += e < 0 ? BigRational(c, p) : BigRational(c * p);
    }
    return sum;
}

std::string to_string(const LaurentPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) {
        const auto& [e, c] = *it;
        BigInt mag = c < 0 ? BigInt(-c) : c;
        if (out.empty())
            out += c < 0 ? "-" : "";
        else
            out += c < 0 ? " - " : " + ";
        if (e == 0) {
            out += mag.str();
            continue;
        }
        if (mag != 1) out += mag.str() + "*";
        out += power("q", e);
    }
    return out;
}

LaurentPoly canonicalize(const QMonomial& m) {
    if (m.is_zero()) return {};
    // (q−1)^et by the binomial theorem, shifted by q^eq.
    LaurentPoly out;
    BigInt binom = 1;
    for (int j = 0; j <= m.et; ++j) {
        BigInt c = ((m.et - j) % 2 == 0) ? binom : BigInt(-binom);
        out += LaurentPoly::monomial(m.eq + j, m.sign * c);
        binom = binom * (m.et - j) / (j + 1);
    }
    return out;
}

QPolynomial::QPolynomial(std::initializer_list<QMonomial> terms) {
    for (const auto& m : terms) add(m);
}

void QPolynomial::add(const QMonomial& m) {
    if (!m.is_zero()) terms_.push_back(m);
}

QPolynomial& QPolynomial::operator+=(const QPolynomial& o) {
    for (const auto& m : o.terms_) add(m);
    return *this;
}

LaurentPoly QPolynomial::canonical() const {
    LaurentPoly out;
    for (const auto& m : terms_) out += canonicalize(m);
    return out;
}

LaurentPoly canonicalize(const QPolynomial& p) { return p.canonical(); }

BigRational eval_exact(const QMonomial& m, const BigInt& q) {
    if (m.is_zero()) return 0;
    BigInt num = m.sign;
    num *= boost::multiprecision::pow(BigInt(q - 1), static_cast<unsigned>(m.et));
    BigInt qp = boost::multiprecision::pow(q, static_cast<unsigned>(m.eq < 0 ? -m.eq : m.eq));
    return m.eq < 0 ? BigRational(num, qp) : BigRational(num * qp);
}

BigRational eval_exact(const QPolynomial& p, const BigInt& q) {
    BigRational sum = 0;
    for (const auto& m : p.terms()) sum += eval_exact(m, q);
    return sum;
}

BigRational eval_exact(const LaurentPoly& p, const BigInt& q) { return p.eval(q); }

BigInt eval_integer(const QMonomial& m, const BigInt& q) {
    BigRational v = eval_exact(m, q);
    if (denominator(v) != 1) throw IntegralityError("non-integer value " + to_string(m));
    return numerator(v);
}

void CharCombination::insert(const SetPartition& p, const QMonomial& c) {
    if (p.n() != n_)
        throw DomainError("ground-set mismatch: partition over [" + std::to_string(p.n()) +
                          "] in a combination over [" + std::to_string(n_) + "]");
    if (c.is_zero()) return;
    if (!terms_.emplace(p, c).second)
        throw std::logic_error("duplicate term for partition " + format_partition(p));
}

QMonomial CharCombination::at(const SetPartition& p) const {
    auto it = terms_.find(p);
    return it == terms_.end() ? QMonomial::zero() : it->second;
}

} // namespace superbranch
