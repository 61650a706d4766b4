#include "heckeaf/exactnum/polynomial.hpp"

#include "heckeaf/error.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace heckeaf {

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    for (auto& c : coeffs_) c.canonicalize();
    trim();
}

void Polynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Polynomial Polynomial::constant(const Rational& c) { return Polynomial({c}); }

Polynomial Polynomial::monomial(const Rational& c, int degree) {
    std::vector<Rational> v(static_cast<std::size_t>(degree) + 1);
    v.back() = c;
    return Polynomial(std::move(v));
}

Rational Polynomial::coeff(int i) const {
    if (i < 0 || i > degree()) return 0;
    return coeffs_[static_cast<std::size_t>(i)];
}

const Rational& Polynomial::leading() const {
    if (coeffs_.empty()) throw Error(ErrorCode::PreconditionViolated, "leading coefficient of zero polynomial");
    return coeffs_.back();
}

Rational Polynomial::eval(const Rational& x) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Polynomial Polynomial::derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<Rational> d(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<long>(i);
    return Polynomial(std::move(d));
}

Polynomial Polynomial::monic() const {
    if (is_zero()) return {};
    Rational lc = leading();
    std::vector<Rational> v(coeffs_);
    for (auto& c : v) c /= lc;
    return Polynomial(std::move(v));
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<Rational> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) v[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) v[i] += b.coeffs_[i];
    return Polynomial(std::move(v));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    std::vector<Rational> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) v[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) v[i] -= b.coeffs_[i];
    return Polynomial(std::move(v));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> v(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Polynomial(std::move(v));
}

Polynomial operator*(const Rational& c, const Polynomial& a) {
    std::vector<Rational> v(a.coeffs_);
    for (auto& x : v) x *= c;
    return Polynomial(std::move(v));
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) throw Error(ErrorCode::DivisionByZero, "polynomial division by zero");
    if (a.degree() < b.degree()) return {Polynomial{}, a};
    std::vector<Rational> rem(a.coeffs_);
    std::vector<Rational> quo(static_cast<std::size_t>(a.degree() - b.degree()) + 1);
    const Rational& lb = b.leading();
    for (int d = a.degree(); d >= b.degree(); --d) {
        Rational c = rem[static_cast<std::size_t>(d)] / lb;
        if (c == 0) continue;
        const int shift = d - b.degree();
        quo[static_cast<std::size_t>(shift)] = c;
        for (int i = 0; i <= b.degree(); ++i) {
            rem[static_cast<std::size_t>(i + shift)] -= c * b.coeffs_[static_cast<std::size_t>(i)];
        }
    }
    return {Polynomial(std::move(quo)), Polynomial(std::move(rem))};
}

Polynomial Polynomial::gcd(Polynomial a, Polynomial b) {
    while (!b.is_zero()) {
        auto r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

namespace {

std::string render(const std::vector<std::string>& coeffs, std::string_view var) {
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = coeffs.size(); k-- > 0;) {
        std::string c = coeffs[k];
        if (c == "0") continue;
        bool negative = c.front() == '-';
        if (negative) c.erase(0, 1);
        if (first) {
            if (negative) os << "-";
        } else {
            os << (negative ? " - " : " + ");
        }
        first = false;
        if (k == 0) {
            os << c;
            continue;
        }
        if (c != "1") os << c << "*";
        os << var;
        if (k > 1) os << "^" << k;
    }
    if (first) os << "0";
    return os.str();
}

}  // namespace

std::string Polynomial::to_string(std::string_view var) const {
    std::vector<std::string> cs;
    cs.reserve(coeffs_.size());
    for (const auto& c : coeffs_) cs.push_back(heckeaf::to_string(c));
    return render(cs, var);
}

IntPolynomial::IntPolynomial(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPolynomial IntPolynomial::from_rational(const Polynomial& p) {
    std::vector<Integer> v;
    v.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) {
        if (!is_integer(c)) {
            throw Error(ErrorCode::PreconditionViolated, "non-integral coefficient in " + p.to_string());
        }
        v.push_back(c.get_num());
    }
    return IntPolynomial(std::move(v));
}

Polynomial IntPolynomial::to_rational() const {
    std::vector<Rational> v(coeffs_.begin(), coeffs_.end());
    return Polynomial(std::move(v));
}

std::string IntPolynomial::to_string(std::string_view var) const {
    std::vector<std::string> cs;
    cs.reserve(coeffs_.size());
    for (const auto& c : coeffs_) cs.push_back(c.get_str());
    return render(cs, var);
}

bool is_squarefree(const Polynomial& p) {
    if (p.degree() <= 0) return true;
    return Polynomial::gcd(p, p.derivative()).degree() == 0;
}

Polynomial parse_polynomial(std::string_view text) {
    std::string s;
    for (char ch : text) {
        if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
    }
    if (s.empty()) throw Error(ErrorCode::ParseError, "empty polynomial");

    std::vector<Rational> coeffs;
    auto add_term = [&](const Rational& c, std::size_t deg) {
        if (coeffs.size() <= deg) coeffs.resize(deg + 1);
        coeffs[deg] += c;
    };
    auto fail = [&]() -> void {
        throw Error(ErrorCode::ParseError, "cannot parse polynomial '" + std::string(text) + "'");
    };

    std::size_t i = 0;
    while (i < s.size()) {
        int sign = 1;
        if (s[i] == '+' || s[i] == '-') {
            sign = s[i] == '-' ? -1 : 1;
            ++i;
        } else if (i != 0) {
            fail();
        }
        std::size_t start = i;
        while (i < s.size() && (std::isdigit(static_cast<unsigned char>(s[i])) || s[i] == '/')) ++i;
        Rational c = 1;
        bool has_number = i > start;
        if (has_number) c = parse_rational(std::string_view(s).substr(start, i - start));
        std::size_t deg = 0;
        if (i < s.size() && s[i] == '*') {
            if (!has_number) fail();
            ++i;
            if (i >= s.size() || s[i] != 'x') fail();
        }
        if (i < s.size() && s[i] == 'x') {
            ++i;
            deg = 1;
            if (i < s.size() && s[i] == '^') {
                ++i;
                std::size_t e0 = i;
                while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
                if (i == e0) fail();
                deg = std::stoul(s.substr(e0, i - e0));
            }
        } else if (!has_number) {
            fail();
        }
        add_term(c * sign, deg);
    }
    return Polynomial(std::move(coeffs));
}

}  // namespace heckeaf
