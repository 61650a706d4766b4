#pragma once

#include "heckeaf/exactnum/matrix.hpp"

#include <optional>
#include <string_view>

namespace heckeaf {

enum class CompanionVerdict {
    Companion,                // equal char polys, not similar over Q
    SimilarOverQ,             // a unimodular conjugator was found
    DistinctCharPoly,
    UndeterminedZSimilarity,  // similar over Q, no conjugator within bounds
};

std::string_view to_string(CompanionVerdict v) noexcept;

struct CompanionResult {
    CompanionVerdict verdict = CompanionVerdict::DistinctCharPoly;
    std::optional<IntMatrix> conjugator;  // X with X B1 = B2 X, det X = +-1
};

struct CompanionOptions {
    long coefficient_bound = 10;
    bool parallel = true;
};

/// Similarity over Q is decided through determinantal divisors of xI - B;
/// similarity over Z is semi-decided by a bounded conjugator search. The
/// verdict does not depend on the argument order.
CompanionResult companion_check(const IntMatrix& b1, const IntMatrix& b2, const CompanionOptions& opts = {});

/// gcd of the k x k minors of xI - B for k = 1..n (monic).
std::vector<Polynomial> determinantal_divisors(const IntMatrix& b);

}  // namespace heckeaf
