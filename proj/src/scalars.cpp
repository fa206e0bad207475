#include "qsh/scalars.hpp"

#include <cctype>
#include <utility>

namespace qsh {

std::string rational_str(const Rational& r) {
    return r.get_str();
}

Rational rational_from_string(std::string_view text) {
    Rational r;
    if (r.set_str(std::string(text), 10) != 0)
        throw parse_error("invalid rational literal '" + std::string(text) + "'", 0);
    r.canonicalize();
    return r;
}

Rational make_rational(long num, long den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

// ---------------------------------------------------------------- Polynomial

Polynomial::Polynomial(const Rational& constant) {
    if (constant != 0) coef_.push_back(constant);
}

Polynomial::Polynomial(long constant) {
    if (constant != 0) coef_.push_back(Rational(constant));
}

Polynomial::Polynomial(std::vector<Rational> coefficients) : coef_(std::move(coefficients)) {
    trim();
}

Polynomial Polynomial::variable() {
    return monomial(Rational(1), 1);
}

Polynomial Polynomial::monomial(const Rational& coefficient, int degree) {
    if (degree < 0) throw std::domain_error("monomial degree must be nonnegative");
    if (coefficient == 0) return Polynomial();
    std::vector<Rational> c(static_cast<std::size_t>(degree) + 1, Rational(0));
    c.back() = coefficient;
    Polynomial p;
    p.coef_ = std::move(c);
    return p;
}

bool Polynomial::is_one() const {
    return coef_.size() == 1 && coef_[0] == 1;
}

Rational Polynomial::coefficient(int k) const {
    if (k < 0 || k >= static_cast<int>(coef_.size())) return Rational(0);
    return coef_[static_cast<std::size_t>(k)];
}

const Rational& Polynomial::leading() const {
    if (coef_.empty()) throw std::domain_error("zero polynomial has no leading coefficient");
    return coef_.back();
}

void Polynomial::trim() {
    while (!coef_.empty() && coef_.back() == 0) coef_.pop_back();
}

Polynomial Polynomial::operator-() const {
    Polynomial r = *this;
    for (auto& c : r.coef_) c = -c;
    return r;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    Polynomial r;
    r.coef_.resize(std::max(a.coef_.size(), b.coef_.size()), Rational(0));
    for (std::size_t i = 0; i < a.coef_.size(); ++i) r.coef_[i] += a.coef_[i];
    for (std::size_t i = 0; i < b.coef_.size(); ++i) r.coef_[i] += b.coef_[i];
    r.trim();
    return r;
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    return a + (-b);
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial();
    Polynomial r;
    r.coef_.assign(a.coef_.size() + b.coef_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.coef_.size(); ++i) {
        if (a.coef_[i] == 0) continue;
        for (std::size_t j = 0; j < b.coef_.size(); ++j)
            r.coef_[i + j] += a.coef_[i] * b.coef_[j];
    }
    r.trim();
    return r;
}

Polynomial Polynomial::scaled(const Rational& c) const {
    if (c == 0) return Polynomial();
    Polynomial r = *this;
    for (auto& x : r.coef_) x *= c;
    return r;
}

PolynomialDivMod Polynomial::divmod(const Polynomial& divisor) const {
    if (divisor.is_zero()) throw std::domain_error("polynomial division by zero");
    Polynomial rem = *this;
    Polynomial quot;
    const int dd = divisor.degree();
    if (rem.degree() >= dd)
        quot.coef_.assign(static_cast<std::size_t>(rem.degree() - dd) + 1, Rational(0));
    while (!rem.is_zero() && rem.degree() >= dd) {
        const int shift = rem.degree() - dd;
        Rational factor = rem.leading() / divisor.leading();
        quot.coef_[static_cast<std::size_t>(shift)] = factor;
        // rem -= factor * q^shift * divisor, in place
        for (int k = 0; k <= dd; ++k)
            rem.coef_[static_cast<std::size_t>(k + shift)] -= factor * divisor.coef_[static_cast<std::size_t>(k)];
        rem.trim();
    }
    quot.trim();
    return {quot, rem};
}

Polynomial Polynomial::exact_div(const Polynomial& divisor) const {
    PolynomialDivMod dm = divmod(divisor);
    if (!dm.remainder.is_zero())
        throw std::domain_error("inexact polynomial division: remainder " + dm.remainder.str());
    return dm.quotient;
}

Polynomial Polynomial::gcd(Polynomial a, Polynomial b) {
    while (!b.is_zero()) {
        Polynomial r = a.divmod(b).remainder;
        a = std::move(b);
        b = r.is_zero() ? r : r.monic();
    }
    return a.is_zero() ? a : a.monic();
}

Polynomial Polynomial::monic() const {
    if (is_zero()) throw std::domain_error("cannot normalize the zero polynomial");
    return scaled(Rational(1) / leading());
}

Rational Polynomial::evaluate(const Rational& x) const {
    Rational acc(0);
    for (std::size_t i = coef_.size(); i-- > 0;) acc = acc * x + coef_[i];
    return acc;
}

std::string Polynomial::str() const {
    if (is_zero()) return "0";
    std::string out;
    for (int k = degree(); k >= 0; --k) {
        const Rational& c = coef_[static_cast<std::size_t>(k)];
        if (c == 0) continue;
        const bool negative = c < 0;
        Rational abs = negative ? Rational(-c) : c;
        if (out.empty())
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        std::string var = k == 0 ? "" : (k == 1 ? "q" : "q^" + std::to_string(k));
        if (k == 0) {
            out += rational_str(abs);
        } else if (abs == 1) {
            out += var;
        } else if (abs.get_den() == 1) {
            out += rational_str(abs) + "*" + var;
        } else {
            out += "(" + rational_str(abs) + ")*" + var;
        }
    }
    return out;
}

// --------------------------------------------------------- RationalFunction

RationalFunction::RationalFunction(Polynomial numerator, Polynomial denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
    if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
    normalize();
}

void RationalFunction::normalize() {
    if (num_.is_zero()) {
        den_ = Polynomial(1);
        return;
    }
    Polynomial g = Polynomial::gcd(num_, den_);
    if (!g.is_one()) {
        num_ = num_.exact_div(g);
        den_ = den_.exact_div(g);
    }
    Rational lead = den_.leading();
    if (lead != 1) {
        Rational inv = Rational(1) / lead;
        num_ = num_.scaled(inv);
        den_ = den_.scaled(inv);
    }
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction r = *this;
    r.num_ = -r.num_;
    return r;
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
    return a + (-b);
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    if (b.is_zero()) throw std::domain_error("division by the zero rational function");
    return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
}

RationalFunction RationalFunction::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of the zero rational function");
    return RationalFunction(den_, num_);
}

RationalFunction RationalFunction::pow(unsigned exponent) const {
    RationalFunction acc(1);
    RationalFunction base = *this;
    while (exponent > 0) {
        if (exponent & 1u) acc *= base;
        base *= base;
        exponent >>= 1u;
    }
    return acc;
}

Rational RationalFunction::evaluate_at(const Rational& q0) const {
    Rational d = den_.evaluate(q0);
    if (d == 0)
        throw std::domain_error("pole at q = " + rational_str(q0) + ": denominator " + den_.str() +
                                " vanishes");
    return num_.evaluate(q0) / d;
}

std::string RationalFunction::str() const {
    if (is_polynomial()) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

// ------------------------------------------------------ quantum arithmetic

RationalFunction q_power(unsigned exponent) {
    return RationalFunction(Polynomial::monomial(Rational(1), static_cast<int>(exponent)));
}

namespace {

Polynomial quantum_int_poly(int l) {
    if (l < 0) throw std::domain_error("quantum_int of a negative integer");
    std::vector<Rational> c(static_cast<std::size_t>(l), Rational(1));
    return Polynomial(std::move(c));
}

Polynomial quantum_factorial_poly(int l) {
    if (l < 0) throw std::domain_error("quantum_factorial of a negative integer");
    Polynomial acc(1);
    for (int i = 1; i <= l; ++i) acc *= quantum_int_poly(i);
    return acc;
}

}  // namespace

RationalFunction quantum_int(int l) {
    return RationalFunction(quantum_int_poly(l));
}

RationalFunction quantum_factorial(int l) {
    return RationalFunction(quantum_factorial_poly(l));
}

RationalFunction quantum_binomial(int n, int k) {
    if (n < 0 || k < 0) throw std::domain_error("quantum_binomial arguments must be nonnegative");
    if (k > n)
        throw std::domain_error("quantum_binomial(" + std::to_string(n) + ", " + std::to_string(k) +
                                "): k exceeds n");
    Polynomial numerator = quantum_factorial_poly(n);
    Polynomial denominator = quantum_factorial_poly(k) * quantum_factorial_poly(n - k);
    return RationalFunction(numerator.exact_div(denominator));
}

Rational specialize(const RationalFunction& f, const Rational& q0) {
    return f.evaluate_at(q0);
}

// ------------------------------------------------------------------- parser

namespace {

class RfParser {
public:
    explicit RfParser(std::string_view text) : text_(text) {}

    RationalFunction parse() {
        RationalFunction value = expression();
        skip_ws();
        if (pos_ != text_.size())
            throw parse_error("unexpected trailing input '" + std::string(text_.substr(pos_)) + "'", pos_);
        return value;
    }

private:
    RationalFunction expression() {
        RationalFunction acc = term();
        for (;;) {
            skip_ws();
            if (accept('+'))
                acc += term();
            else if (accept('-'))
                acc -= term();
            else
                return acc;
        }
    }

    RationalFunction term() {
        RationalFunction acc = factor();
        for (;;) {
            skip_ws();
            if (accept('*')) {
                acc *= factor();
            } else if (accept('/')) {
                RationalFunction d = factor();
                if (d.is_zero()) throw parse_error("division by zero", pos_);
                acc /= d;
            } else {
                return acc;
            }
        }
    }

    RationalFunction factor() {
        skip_ws();
        if (accept('-')) return -factor();
        RationalFunction base = primary();
        skip_ws();
        if (accept('^')) {
            skip_ws();
            if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
                throw parse_error("expected a nonnegative integer exponent", pos_);
            unsigned long exponent = 0;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                exponent = exponent * 10 + static_cast<unsigned long>(text_[pos_] - '0');
                if (exponent > 100000) throw parse_error("exponent too large", pos_);
                ++pos_;
            }
            return base.pow(static_cast<unsigned>(exponent));
        }
        return base;
    }

    RationalFunction primary() {
        skip_ws();
        if (pos_ >= text_.size()) throw parse_error("unexpected end of input", pos_);
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            RationalFunction inner = expression();
            skip_ws();
            if (!accept(')')) throw parse_error("expected ')'", pos_);
            return inner;
        }
        if (c == 'q') {
            ++pos_;
            return RationalFunction::variable();
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            Rational r;
            r.set_str(std::string(text_.substr(start, pos_ - start)), 10);
            r.canonicalize();
            return RationalFunction(r);
        }
        throw parse_error(std::string("unexpected character '") + c + "'", pos_);
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

RationalFunction parse_rational_function(std::string_view text) {
    return RfParser(text).parse();
}

}  // namespace qsh
