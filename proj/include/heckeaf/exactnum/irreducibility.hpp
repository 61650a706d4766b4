#pragma once

#include "heckeaf/exactnum/polynomial.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace heckeaf {

/// Degrees of the irreducible factors of p modulo a prime (distinct-degree
/// factorization). Returns nullopt when the prime divides the leading
/// coefficient or p is not squarefree modulo the prime.
std::optional<std::vector<int>> factor_degrees_mod_p(const IntPolynomial& p, std::uint64_t prime);

/// Exact irreducibility over Q. Combines a rational root test, factor-degree
/// patterns modulo small primes and, when those are inconclusive, Kronecker's
/// interpolation search for a factor (degree <= 6).
bool is_irreducible(const IntPolynomial& p);

}  // namespace heckeaf
