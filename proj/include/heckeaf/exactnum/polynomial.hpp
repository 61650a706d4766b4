#pragma once

#include "heckeaf/exactnum/rational.hpp"

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace heckeaf {

/// Dense univariate polynomial over Q, lowest degree first, never carrying
/// trailing zero coefficients.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coeffs);

    static Polynomial constant(const Rational& c);
    static Polynomial monomial(const Rational& c, int degree);

    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }
    Rational coeff(int i) const;
    const Rational& leading() const;

    Rational eval(const Rational& x) const;
    Polynomial derivative() const;
    Polynomial monic() const;

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Rational& c, const Polynomial& a);
    friend bool operator==(const Polynomial&, const Polynomial&) = default;

    /// Euclidean division; throws DivisionByZero on a zero divisor.
    static std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);
    /// Monic gcd (zero only when both inputs are zero).
    static Polynomial gcd(Polynomial a, Polynomial b);

    std::string to_string(std::string_view var = "x") const;

private:
    void trim();
    std::vector<Rational> coeffs_;
};

/// Integer polynomial, lowest degree first. Used for minimal and
/// characteristic polynomials, which must be stored exactly.
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<Integer> coeffs);
    /// Throws PreconditionViolated when some coefficient is not an integer.
    static IntPolynomial from_rational(const Polynomial& p);

    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<Integer>& coeffs() const noexcept { return coeffs_; }
    bool is_monic() const noexcept { return !coeffs_.empty() && coeffs_.back() == 1; }

    Polynomial to_rational() const;
    std::string to_string(std::string_view var = "x") const;

    friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

private:
    std::vector<Integer> coeffs_;
};

/// Parses expressions such as "x^3 - x - 1", "2*x^2+3x-5" or "x". Rational
/// coefficients ("1/2*x") are accepted.
Polynomial parse_polynomial(std::string_view text);

bool is_squarefree(const Polynomial& p);

}  // namespace heckeaf
