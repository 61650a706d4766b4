#pragma once

#include "heckeaf/mcf/jpa.hpp"

namespace heckeaf {

/// Raised when the greedy peel stalls; carries the blocks found so far and
/// the unfactored remainder.
class FactorizationError : public Error {
public:
    FactorizationError(const std::string& what, std::vector<JpaDigit> partial, IntMatrix remainder)
        : Error(ErrorCode::NotFactorizable, what), partial_(std::move(partial)), remainder_(std::move(remainder)) {}

    const std::vector<JpaDigit>& partial() const noexcept { return partial_; }
    const IntMatrix& remainder() const noexcept { return remainder_; }

private:
    std::vector<JpaDigit> partial_;
    IntMatrix remainder_;
};

/// Writes A = B(b_1) ... B(b_k). Each step peels the left block: the last row
/// of the right factor is row 1 of A and row i is row_{i+1}(A) - b_i row_1(A)
/// with b_i as large as non-negativity allows.
/// Requires A >= 0, det A = +-1 and A != I (PreconditionViolated otherwise).
std::vector<JpaDigit> bauer_factorize(const IntMatrix& a);

struct PerronData {
    FieldPtr field;             // Q[x] / char(A)
    Embedding embedding;        // at the largest real root
    FieldElement u;             // class of x
    std::vector<FieldElement> lambda;  // A lambda = u lambda, lambda_1 = 1
};

/// Exact Perron eigenvector of a non-negative unimodular matrix with
/// irreducible characteristic polynomial. Throws ReducibleCharPoly, or
/// PreconditionViolated if the eigenvector is not positive.
PerronData satz12_eigenvector(const IntMatrix& a);

/// Runs the JPA on the Perron eigenvector of A and checks that the detected
/// period matches the Bauer digits of A up to rotation. Throws
/// RoundTripMismatch otherwise.
JpaExpansion periodicity_roundtrip(const IntMatrix& a);

}  // namespace heckeaf
