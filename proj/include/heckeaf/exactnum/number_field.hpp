#pragma once

#include "heckeaf/exactnum/interval.hpp"
#include "heckeaf/exactnum/matrix.hpp"
#include "heckeaf/exactnum/polynomial.hpp"

#include <memory>
#include <string>
#include <vector>

namespace heckeaf {

class NumberField;
using FieldPtr = std::shared_ptr<const NumberField>;

/// Q[x]/(minpoly) for a monic irreducible integer polynomial, together with
/// isolating intervals for its real roots (ascending).
class NumberField {
public:
    const IntPolynomial& minpoly() const noexcept { return minpoly_; }
    const Polynomial& minpoly_q() const noexcept { return minpoly_q_; }
    int degree() const noexcept { return minpoly_.degree(); }
    const std::vector<RealRootInterval>& real_roots() const noexcept { return real_roots_; }
    bool totally_real() const noexcept { return static_cast<int>(real_roots_.size()) == degree(); }

    friend bool same_field(const NumberField& a, const NumberField& b) { return a.minpoly_ == b.minpoly_; }

private:
    friend FieldPtr make_field(const IntPolynomial& minpoly);
    NumberField(IntPolynomial p, std::vector<RealRootInterval> roots);

    IntPolynomial minpoly_;
    Polynomial minpoly_q_;
    std::vector<RealRootInterval> real_roots_;
};

/// Throws NotMonic or ReduciblePolynomial.
FieldPtr make_field(const IntPolynomial& minpoly);

/// Element of a number field, stored by its coordinates in the power basis.
class FieldElement {
public:
    FieldElement() = default;
    FieldElement(FieldPtr field, std::vector<Rational> coords);
    static FieldElement zero(FieldPtr field);
    static FieldElement one(FieldPtr field);
    static FieldElement rational(FieldPtr field, const Rational& q);
    /// The class of x, i.e. the generator of the power basis.
    static FieldElement generator(FieldPtr field);

    const FieldPtr& field() const noexcept { return field_; }
    const std::vector<Rational>& coords() const noexcept { return coords_; }
    bool is_zero() const noexcept;
    bool is_rational() const noexcept;
    /// Constant coordinate; meaningful when is_rational().
    const Rational& constant() const { return coords_.front(); }

    friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
    /// Throws DivisionByZero.
    friend FieldElement operator/(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator*(const Rational& c, const FieldElement& a);
    FieldElement operator-() const;
    FieldElement inverse() const;
    FieldElement pow(long e) const;

    /// Row i holds the coordinates of this * x^i.
    RatMatrix multiplication_matrix() const;
    Rational norm() const;
    Rational trace() const;
    Polynomial char_poly() const;
    /// True when the element generates the whole field.
    bool is_primitive() const;

    std::string to_string(std::string_view var = "x") const;
    std::size_t hash() const noexcept;

    friend bool operator==(const FieldElement& a, const FieldElement& b);

private:
    FieldPtr field_;
    std::vector<Rational> coords_;
};

/// Throws FieldMismatch unless both elements live in the same field.
void require_same_field(const FieldElement& a, const FieldElement& b);

/// A real embedding of a field, selected by the index of a real root. The
/// cursor keeps its own copy of the isolating interval and narrows it on
/// demand; the field itself is never modified.
class Embedding {
public:
    Embedding() = default;
    Embedding(FieldPtr field, std::size_t index);

    const FieldPtr& field() const noexcept { return field_; }
    std::size_t index() const noexcept { return index_; }
    const RealRootInterval& root() const noexcept { return root_; }

    /// Interval of width < eps containing sigma(a); eps > 0.
    RationalInterval eval(const FieldElement& a, const Rational& eps);
    /// Sign of sigma(a); exact zero test first.
    int sign(const FieldElement& a);
    /// The integer k with k <= sigma(a) < k + 1.
    Integer floor(const FieldElement& a);
    /// Double-precision approximation (for heuristics and reporting only).
    double approx(const FieldElement& a);

private:
    void narrow(const Rational& target_width);

    FieldPtr field_;
    std::size_t index_ = 0;
    RealRootInterval root_;
};

/// Free-function forms of the embedding queries.
RationalInterval eval_embedding(const FieldElement& a, Embedding& e, const Rational& eps);
Integer exact_floor(const FieldElement& a, Embedding& e);

/// Parses "c0,c1,..." (each a rational) into an element.
FieldElement parse_element(const FieldPtr& field, std::string_view text);

}  // namespace heckeaf
