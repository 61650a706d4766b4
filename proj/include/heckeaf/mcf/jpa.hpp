#pragma once

#include "heckeaf/exactnum/matrix.hpp"
#include "heckeaf/exactnum/number_field.hpp"

#include <optional>
#include <vector>

namespace heckeaf {

/// b = (b_1, ..., b_{n-1}); all entries >= 0.
using JpaDigit = std::vector<Integer>;

/// n x n block with first row (0, ..., 0, 1), the (n-1)-identity in the
/// lower left, and b down the rest of the last column.
IntMatrix jpa_block(const JpaDigit& b);

struct EuclidResult {
    Integer gcd;
    std::vector<Integer> quotients;
};

/// Requires a1 >= a2 >= 1.
EuclidResult euclid_gcd(const Integer& a1, const Integer& a2);

struct JpaExpansion {
    std::size_t dimension = 2;  // n; digits have n - 1 entries
    std::vector<JpaDigit> preperiod;
    std::vector<JpaDigit> period;
    bool terminated = false;
    std::size_t steps = 0;
    /// dim_Q span{1, theta_1, ..., theta_{n-1}} of the input vector.
    std::size_t rational_rank = 1;

    bool periodic() const noexcept { return !period.empty(); }
    /// Preperiod followed by one copy of the period.
    std::vector<JpaDigit> digits() const;

    friend bool operator==(const JpaExpansion&, const JpaExpansion&) = default;
};

struct JpaState {
    std::vector<FieldElement> theta;

    std::size_t hash() const noexcept;
    friend bool operator==(const JpaState&, const JpaState&) = default;
};

struct JpaStepResult {
    JpaDigit digit;
    std::optional<JpaState> next;  // empty when the step terminates
};

/// d_j = floor(theta_j); theta'_{n-1} = 1/(theta_1 - d_1) and
/// theta'_{j-1} = (theta_j - d_j)/(theta_1 - d_1), so that
/// (1, theta) is a positive multiple of B(d) (1, theta').
JpaStepResult jpa_step(const JpaState& s, Embedding& e);

inline constexpr std::size_t kDefaultMaxSteps = 10000;

/// Iterates jpa_step with exact cycle detection on the states.
JpaExpansion jpa_expand(const std::vector<FieldElement>& theta, Embedding& e,
                        std::size_t max_steps = kDefaultMaxSteps);

JpaExpansion regular_cf(const FieldElement& x, Embedding& e, std::size_t max_terms = kDefaultMaxSteps);
JpaExpansion regular_cf(const Rational& x, std::size_t max_terms = kDefaultMaxSteps);

/// B(b_1) ... B(b_k); the identity of size n for an empty list.
IntMatrix convergent_matrix(const std::vector<JpaDigit>& digits, std::size_t n);

/// True when `digits` is a cyclic rotation of `period` repeated some whole
/// number of times.
bool matches_period(const std::vector<JpaDigit>& period, const std::vector<JpaDigit>& digits);

std::string to_string(const JpaDigit& d);
/// "[(1), (2, 3)]"
std::string to_string(const std::vector<JpaDigit>& ds);

}  // namespace heckeaf
