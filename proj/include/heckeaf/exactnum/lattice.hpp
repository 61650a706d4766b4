#pragma once

#include "heckeaf/exactnum/matrix.hpp"

#include <vector>

namespace heckeaf {

struct HermiteForm {
    IntMatrix h;          // nonzero rows of the row HNF, r x n
    IntMatrix transform;  // unimodular U (m x m) with U * A = [h; 0]
};

/// Row Hermite normal form: pivots strictly increase to the right, are
/// positive, and entries above each pivot lie in [0, pivot).
HermiteForm hermite_form(const IntMatrix& a);

/// Basis of the left integer kernel {x in Z^m : x * a = 0}.
IntMatrix left_integer_kernel(const IntMatrix& a);

/// Exact LLL (delta = 3/4) on linearly independent integer rows. When
/// `transform` is given it receives U with U * rows = result.
IntMatrix lll_reduce(const IntMatrix& rows, IntMatrix* transform = nullptr);

}  // namespace heckeaf
