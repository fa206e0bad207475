// Exact arithmetic in Q(q): rational coefficients, dense univariate
// polynomials, and normalized rational functions, plus the quantum
// integers / factorials / binomials built on top of them.
#ifndef QSH_SCALARS_HPP
#define QSH_SCALARS_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qsh {

// Arbitrary-precision rational coefficient. mpq_class is always kept
// canonical by GMP's arithmetic operators.
using Rational = mpq_class;

std::string rational_str(const Rational& r);
Rational rational_from_string(std::string_view text);
// mpq_class(num, den) does not canonicalize on its own; this does.
Rational make_rational(long num, long den);

// Raised by the text parsers; position is a 0-based byte offset.
struct parse_error : std::runtime_error {
    std::size_t position;
    parse_error(const std::string& message, std::size_t pos)
        : std::runtime_error(message + " (at position " + std::to_string(pos) + ")"),
          position(pos) {}
};

class Polynomial;

struct PolynomialDivMod;

// Dense univariate polynomial in q over Rational. Invariant: no trailing
// zero coefficients, so degree() is the index of the last entry.
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(const Rational& constant);
    Polynomial(long constant);
    explicit Polynomial(std::vector<Rational> coefficients);

    static Polynomial variable();  // q
    static Polynomial monomial(const Rational& coefficient, int degree);

    bool is_zero() const { return coef_.empty(); }
    bool is_one() const;
    // degree of the zero polynomial is -1
    int degree() const { return static_cast<int>(coef_.size()) - 1; }
    Rational coefficient(int k) const;
    const Rational& leading() const;

    Polynomial operator-() const;
    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
    Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
    Polynomial scaled(const Rational& c) const;

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coef_ == b.coef_; }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    // Euclidean division; divisor must be nonzero.
    PolynomialDivMod divmod(const Polynomial& divisor) const;
    // Division known to be exact; throws std::domain_error if a nonzero
    // remainder shows up.
    Polynomial exact_div(const Polynomial& divisor) const;

    // Monic gcd (Euclid over the field Q); gcd(0,0) = 0.
    static Polynomial gcd(Polynomial a, Polynomial b);

    Polynomial monic() const;
    Rational evaluate(const Rational& x) const;
    std::string str() const;

private:
    void trim();
    std::vector<Rational> coef_;  // coef_[k] is the coefficient of q^k
};

struct PolynomialDivMod {
    Polynomial quotient;
    Polynomial remainder;
};

// Element of the field Q(q). Normalized representation: gcd(num, den) = 1
// and den monic, so equality is structural.
class RationalFunction {
public:
    RationalFunction() : num_(), den_(1) {}
    RationalFunction(long constant) : num_(constant), den_(1) {}
    RationalFunction(const Rational& constant) : num_(constant), den_(1) {}
    RationalFunction(Polynomial numerator) : num_(std::move(numerator)), den_(1) {}
    RationalFunction(Polynomial numerator, Polynomial denominator);

    static RationalFunction variable() { return RationalFunction(Polynomial::variable()); }

    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_polynomial() const { return den_.is_one(); }

    RationalFunction operator-() const;
    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
    RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
    RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
    RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
    RationalFunction& operator/=(const RationalFunction& o) { return *this = *this / o; }
    RationalFunction inverse() const;
    RationalFunction pow(unsigned exponent) const;

    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RationalFunction& a, const RationalFunction& b) { return !(a == b); }

    // Evaluation at q = q0; throws std::domain_error naming the vanishing
    // denominator when q0 is a pole.
    Rational evaluate_at(const Rational& q0) const;

    std::string str() const;

private:
    void normalize();
    Polynomial num_;
    Polynomial den_;
};

// q raised to a nonnegative power, as a rational function.
RationalFunction q_power(unsigned exponent);

// l_q = 1 + q + ... + q^(l-1); 0 for l = 0.
RationalFunction quantum_int(int l);
// l!_q = 1_q * 2_q * ... * l_q; 1 for l = 0.
RationalFunction quantum_factorial(int l);
// (n choose k)_q = n!_q / (k!_q (n-k)!_q). Always a polynomial; the
// division is performed exactly and a nonzero remainder is an error.
RationalFunction quantum_binomial(int n, int k);

// Evaluate f at q = q0 (see RationalFunction::evaluate_at).
Rational specialize(const RationalFunction& f, const Rational& q0);

// Parses the grammar: integer literals, `q`, + - * / ^, parentheses.
// Example: "(1/2)*q^2 - q + 3". Throws parse_error.
RationalFunction parse_rational_function(std::string_view text);

}  // namespace qsh

#endif
