#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace heckeaf {

using Integer = mpz_class;
using Rational = mpq_class;

/// Parses "p/q", "p" or "-p/q". Throws Error(ParseError) on anything else and
/// on a zero denominator. The result is canonicalized.
Rational parse_rational(std::string_view text);
Integer parse_integer(std::string_view text);

/// "p/q" with q > 1, or "p" when the value is an integer.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

Integer floor(const Rational& q);
Integer ceil(const Rational& q);
Integer lcm(const Integer& a, const Integer& b);

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

/// Hash of a GMP integer's limbs; used for exact structural hashing.
std::size_t hash_value(const Integer& z) noexcept;
std::size_t hash_value(const Rational& q) noexcept;

inline void hash_combine(std::size_t& seed, std::size_t value) noexcept {
    seed ^= value + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
}

}  // namespace heckeaf
