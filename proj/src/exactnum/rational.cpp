#include "heckeaf/exactnum/rational.hpp"

#include "heckeaf/error.hpp"

#include <cctype>

namespace heckeaf {

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::NotMonic: return "NotMonic";
        case ErrorCode::ReduciblePolynomial: return "ReduciblePolynomial";
        case ErrorCode::NotSquarefree: return "NotSquarefree";
        case ErrorCode::DivisionByZero: return "DivisionByZero";
        case ErrorCode::NotFullRank: return "NotFullRank";
        case ErrorCode::NotEndomorphism: return "NotEndomorphism";
        case ErrorCode::UnitNotFound: return "UnitNotFound";
        case ErrorCode::NonnegativeFormNotFound: return "NonnegativeFormNotFound";
        case ErrorCode::NotFactorizable: return "NotFactorizable";
        case ErrorCode::ReducibleCharPoly: return "ReducibleCharPoly";
        case ErrorCode::RoundTripMismatch: return "RoundTripMismatch";
        case ErrorCode::ShapeMismatch: return "ShapeMismatch";
        case ErrorCode::SchemaError: return "SchemaError";
        case ErrorCode::NotNormalized: return "NotNormalized";
        case ErrorCode::HeckeRelationViolated: return "HeckeRelationViolated";
        case ErrorCode::InsufficientCoefficients: return "InsufficientCoefficients";
        case ErrorCode::NotGenerated: return "NotGenerated";
        case ErrorCode::NotTotallyReal: return "NotTotallyReal";
        case ErrorCode::ModuleNotStable: return "ModuleNotStable";
        case ErrorCode::FieldMismatch: return "FieldMismatch";
        case ErrorCode::PreconditionViolated: return "PreconditionViolated";
        case ErrorCode::ParseError: return "ParseError";
    }
    return "Unknown";
}

namespace {

bool valid_integer_text(std::string_view s) {
    std::size_t i = 0;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    }
    return true;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

}  // namespace

Integer parse_integer(std::string_view text) {
    auto s = trim(text);
    if (!valid_integer_text(s)) {
        throw Error(ErrorCode::ParseError, "not an integer: '" + std::string(text) + "'");
    }
    if (s.front() == '+') s.remove_prefix(1);
    return Integer(std::string(s), 10);
}

Rational parse_rational(std::string_view text) {
    auto s = trim(text);
    auto slash = s.find('/');
    if (slash == std::string_view::npos) return Rational(parse_integer(s));
    Integer num = parse_integer(s.substr(0, slash));
    Integer den = parse_integer(s.substr(slash + 1));
    if (den == 0) throw Error(ErrorCode::ParseError, "zero denominator in '" + std::string(text) + "'");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_string(const Integer& z) { return z.get_str(); }

Integer floor(const Rational& q) {
    Integer r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

Integer ceil(const Rational& q) {
    Integer r;
    mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

Integer lcm(const Integer& a, const Integer& b) {
    Integer r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

std::size_t hash_value(const Integer& z) noexcept {
    std::size_t seed = static_cast<std::size_t>(mpz_sgn(z.get_mpz_t()) + 1);
    const std::size_t limbs = mpz_size(z.get_mpz_t());
    for (std::size_t i = 0; i < limbs; ++i) {
        hash_combine(seed, static_cast<std::size_t>(mpz_getlimbn(z.get_mpz_t(), i)));
    }
    return seed;
}

std::size_t hash_value(const Rational& q) noexcept {
    std::size_t seed = hash_value(q.get_num());
    hash_combine(seed, hash_value(q.get_den()));
    return seed;
}

}  // namespace heckeaf
