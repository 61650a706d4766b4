#include "heckeaf/exactnum/number_field.hpp"

#include "heckeaf/error.hpp"
#include "heckeaf/exactnum/irreducibility.hpp"

namespace heckeaf {

NumberField::NumberField(IntPolynomial p, std::vector<RealRootInterval> roots)
    : minpoly_(std::move(p)), minpoly_q_(minpoly_.to_rational()), real_roots_(std::move(roots)) {}

FieldPtr make_field(const IntPolynomial& minpoly) {
    if (minpoly.degree() < 1) throw Error(ErrorCode::PreconditionViolated, "minimal polynomial must have degree >= 1");
    if (!minpoly.is_monic()) throw Error(ErrorCode::NotMonic, minpoly.to_string());
    if (!is_irreducible(minpoly)) throw Error(ErrorCode::ReduciblePolynomial, minpoly.to_string());
    auto roots = isolate_real_roots(minpoly.to_rational());
    return FieldPtr(new NumberField(minpoly, std::move(roots)));
}

void require_same_field(const FieldElement& a, const FieldElement& b) {
    if (!a.field() || !b.field()) throw Error(ErrorCode::FieldMismatch, "element without a field");
    if (a.field() != b.field() && !same_field(*a.field(), *b.field())) {
        throw Error(ErrorCode::FieldMismatch,
                    a.field()->minpoly().to_string() + " vs " + b.field()->minpoly().to_string());
    }
}

FieldElement::FieldElement(FieldPtr field, std::vector<Rational> coords)
    : field_(std::move(field)), coords_(std::move(coords)) {
    const auto n = static_cast<std::size_t>(field_->degree());
    if (coords_.size() > n) throw Error(ErrorCode::ShapeMismatch, "too many coordinates for the field degree");
    coords_.resize(n);
    for (auto& c : coords_) c.canonicalize();
}

FieldElement FieldElement::zero(FieldPtr field) { return FieldElement(std::move(field), {}); }

FieldElement FieldElement::one(FieldPtr field) { return rational(std::move(field), 1); }

FieldElement FieldElement::rational(FieldPtr field, const Rational& q) { return FieldElement(std::move(field), {q}); }

FieldElement FieldElement::generator(FieldPtr field) {
    if (field->degree() == 1) {
        // x satisfies x + c0 = 0.
        return rational(field, -Rational(field->minpoly().coeffs()[0]));
    }
    return FieldElement(std::move(field), {0, 1});
}

bool FieldElement::is_zero() const noexcept {
    for (const auto& c : coords_) {
        if (c != 0) return false;
    }
    return true;
}

bool FieldElement::is_rational() const noexcept {
    for (std::size_t i = 1; i < coords_.size(); ++i) {
        if (coords_[i] != 0) return false;
    }
    return true;
}

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
    require_same_field(a, b);
    std::vector<Rational> c(a.coords_);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] += b.coords_[i];
    return FieldElement(a.field_, std::move(c));
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) {
    require_same_field(a, b);
    std::vector<Rational> c(a.coords_);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] -= b.coords_[i];
    return FieldElement(a.field_, std::move(c));
}

FieldElement FieldElement::operator-() const {
    std::vector<Rational> c(coords_);
    for (auto& x : c) x = -x;
    return FieldElement(field_, std::move(c));
}

FieldElement operator*(const Rational& s, const FieldElement& a) {
    std::vector<Rational> c(a.coords_);
    for (auto& x : c) x *= s;
    return FieldElement(a.field_, std::move(c));
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
    require_same_field(a, b);
    const std::size_t n = a.coords_.size();
    std::vector<Rational> prod(2 * n - 1);
    for (std::size_t i = 0; i < n; ++i) {
        if (a.coords_[i] == 0) continue;
        for (std::size_t j = 0; j < n; ++j) prod[i + j] += a.coords_[i] * b.coords_[j];
    }
    // Reduce with the monic minimal polynomial: x^n = -sum p_i x^i.
    const auto& p = a.field_->minpoly().coeffs();
    for (std::size_t d = prod.size(); d-- > n;) {
        if (prod[d] == 0) continue;
        const Rational c = prod[d];
        for (std::size_t i = 0; i < n; ++i) prod[d - n + i] -= c * p[i];
        prod[d] = 0;
    }
    prod.resize(n);
    return FieldElement(a.field_, std::move(prod));
}

RatMatrix FieldElement::multiplication_matrix() const {
    const std::size_t n = coords_.size();
    RatMatrix m(n, n);
    FieldElement power = one(field_);
    const FieldElement x = generator(field_);
    for (std::size_t i = 0; i < n; ++i) {
        FieldElement row = *this * power;
        for (std::size_t j = 0; j < n; ++j) m(i, j) = row.coords_[j];
        power = power * x;
    }
    return m;
}

FieldElement FieldElement::inverse() const {
    if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero field element");
    std::vector<Rational> e0(coords_.size());
    e0[0] = 1;
    return FieldElement(field_, solve_left(multiplication_matrix(), e0));
}

FieldElement operator/(const FieldElement& a, const FieldElement& b) {
    require_same_field(a, b);
    if (b.is_zero()) throw Error(ErrorCode::DivisionByZero, "division by zero field element");
    return a * b.inverse();
}

FieldElement FieldElement::pow(long e) const {
    FieldElement base = e < 0 ? inverse() : *this;
    unsigned long k = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    FieldElement result = one(field_);
    while (k) {
        if (k & 1UL) result = result * base;
        k >>= 1UL;
        if (k) base = base * base;
    }
    return result;
}

Rational FieldElement::norm() const { return determinant(multiplication_matrix()); }

Rational FieldElement::trace() const { return heckeaf::trace(multiplication_matrix()); }

Polynomial FieldElement::char_poly() const { return characteristic_polynomial(multiplication_matrix()); }

bool FieldElement::is_primitive() const { return is_squarefree(char_poly()); }

std::string FieldElement::to_string(std::string_view var) const { return Polynomial(coords_).to_string(var); }

std::size_t FieldElement::hash() const noexcept {
    std::size_t seed = coords_.size();
    for (const auto& c : coords_) hash_combine(seed, hash_value(c));
    return seed;
}

bool operator==(const FieldElement& a, const FieldElement& b) {
    if (a.field_ != b.field_) {
        if (!a.field_ || !b.field_ || !same_field(*a.field_, *b.field_)) return false;
    }
    return a.coords_ == b.coords_;
}

Embedding::Embedding(FieldPtr field, std::size_t index) : field_(std::move(field)), index_(index) {
    if (index_ >= field_->real_roots().size()) {
        throw Error(ErrorCode::PreconditionViolated, "embedding index " + std::to_string(index_) + " out of range (" +
                                                         std::to_string(field_->real_roots().size()) +
                                                         " real roots)");
    }
    root_ = field_->real_roots()[index_];
}

void Embedding::narrow(const Rational& target_width) {
    while (root_.width() >= target_width) root_ = root_.bisect(field_->minpoly_q());
}

RationalInterval Embedding::eval(const FieldElement& a, const Rational& eps) {
    if (eps <= 0) throw Error(ErrorCode::PreconditionViolated, "eps must be positive");
    require_same_field(a, FieldElement::zero(field_));
    if (a.is_rational()) return {a.constant(), a.constant()};
    while (true) {
        RationalInterval r = eval_interval(a.coords(), root_.as_interval());
        if (r.width() < eps) return r;
        narrow(root_.width() * eps / (2 * r.width()));
    }
}

int Embedding::sign(const FieldElement& a) {
    if (a.is_zero()) return 0;
    Rational eps = 1;
    while (true) {
        RationalInterval r = eval(a, eps);
        if (r.lo > 0) return 1;
        if (r.hi < 0) return -1;
        eps /= 16;
    }
}

Integer Embedding::floor(const FieldElement& a) {
    if (a.is_rational()) return heckeaf::floor(a.constant());
    Rational eps = 1;
    while (true) {
        RationalInterval r = eval(a, eps);
        Integer lo = heckeaf::floor(r.lo);
        if (lo == heckeaf::floor(r.hi)) return lo;
        eps /= 16;
    }
}

double Embedding::approx(const FieldElement& a) {
    RationalInterval r = eval(a, Rational(1, 1000000000) * Rational(1, 1000000000));
    return Rational((r.lo + r.hi) / 2).get_d();
}

RationalInterval eval_embedding(const FieldElement& a, Embedding& e, const Rational& eps) { return e.eval(a, eps); }

Integer exact_floor(const FieldElement& a, Embedding& e) { return e.floor(a); }

FieldElement parse_element(const FieldPtr& field, std::string_view text) {
    std::vector<Rational> coords;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t comma = text.find(',', start);
        if (comma == std::string_view::npos) comma = text.size();
        coords.push_back(parse_rational(text.substr(start, comma - start)));
        start = comma + 1;
    }
    if (coords.size() > static_cast<std::size_t>(field->degree())) {
        throw Error(ErrorCode::ParseError, "element '" + std::string(text) + "' has more coordinates than the degree");
    }
    return FieldElement(field, std::move(coords));
}

}  // namespace heckeaf
