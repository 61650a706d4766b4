#pragma once

#include "heckeaf/mcf/jpa.hpp"

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace heckeaf {

/// The algebra C: a one-dimensional finite diagram.
struct TrivialAF {
    friend bool operator==(const TrivialAF&, const TrivialAF&) = default;
};

/// Levels of a Bratteli diagram. matrices[i] has shape
/// vertex_counts[i + 1] x vertex_counts[i]; entry (r, s) counts the edges from
/// vertex s on level i to vertex r on level i + 1.
struct BratteliDiagram {
    enum class Tail { Finite, Truncated };

    std::vector<std::size_t> vertex_counts;
    std::vector<IntMatrix> matrices;
    Tail tail = Tail::Finite;  // Truncated: prefix of an unknown infinite diagram

    friend bool operator==(const BratteliDiagram&, const BratteliDiagram&) = default;
};

/// Throws ShapeMismatch or PreconditionViolated (negative entries).
void validate(const BratteliDiagram& d);

BratteliDiagram diagram_from_digits(const std::vector<JpaDigit>& digits, std::size_t n,
                                    BratteliDiagram::Tail tail);

struct StationaryAF {
    IntMatrix period_matrix;
    IntPolynomial char_poly;
    std::vector<JpaDigit> period;  // may be empty when built from a bare matrix
    /// Perron value as the class of x in Q[x]/char_poly at the largest real
    /// root; absent when char_poly is reducible.
    FieldPtr perron_field;
    std::optional<FieldElement> perron_value;

    friend bool operator==(const StationaryAF& a, const StationaryAF& b) {
        return a.period_matrix == b.period_matrix && a.char_poly == b.char_poly && a.period == b.period;
    }
};

/// Throws PreconditionViolated for the identity, a negative matrix or a
/// determinant other than +-1.
StationaryAF make_stationary(const IntMatrix& b, std::vector<JpaDigit> period = {});
StationaryAF stationary_from_period(const std::vector<JpaDigit>& period);

using AFDescriptor = std::variant<TrivialAF, BratteliDiagram, StationaryAF>;

/// Periodic -> StationaryAF, terminating with rational rank 1 -> TrivialAF,
/// anything else -> finite BratteliDiagram (truncated if the budget ran out).
AFDescriptor af_from_expansion(const JpaExpansion& x);

std::string_view kind(const AFDescriptor& d);

}  // namespace heckeaf
