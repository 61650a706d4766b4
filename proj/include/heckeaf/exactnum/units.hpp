#pragma once

#include "heckeaf/exactnum/zmodule.hpp"

#include <functional>

namespace heckeaf {

struct UnitElement {
    FieldElement element;
    int norm = 1;  // +1 or -1
};

struct UnitSearchOptions {
    long max_bound = 256;   // largest coordinate bound tried in degree >= 3
    bool parallel = true;   // use the OpenMP kernel
};

/// Smallest unit u of the order with sigma_e(u) > 1 that dominates every
/// other embedding. Degree 2 uses the continued fraction of a generator of
/// the order; higher degrees enumerate order coordinates in growing boxes.
/// Throws UnitNotFound.
UnitElement find_unit(const OrderRing& o, Embedding& e, const UnitSearchOptions& opts = {});

/// Verifies that u is a unit of the order and returns its norm. Throws
/// PreconditionViolated otherwise.
UnitElement make_unit(const OrderRing& o, const FieldElement& u);

/// A(i, j) = coordinate j of u * mu_i in the canonical basis mu of m, so that
/// A mu = u mu. Throws NotEndomorphism.
IntMatrix multiplication_matrix(const FieldElement& u, const ZModule& m);

struct NonnegativeForm {
    IntMatrix matrix;  // A' = T^{-1} A^k T, entrywise >= 0
    unsigned k = 1;
    IntMatrix t;       // unimodular
};

/// Extra acceptance test applied to candidate forms (e.g. factorizability).
using FormPredicate = std::function<bool(const NonnegativeForm&)>;

/// Unimodular changes of basis tried by make_nonnegative, in order.
std::vector<IntMatrix> nonnegative_search_space(const ZModule& m);

/// Searches k = 1..12 and the basis changes above for a non-negative A'
/// whose Perron eigenvector T^{-1} mu is positive under e; the spectral
/// radius of A' is then sigma_e(u)^k. Throws NonnegativeFormNotFound.
NonnegativeForm make_nonnegative(const IntMatrix& a, const UnitElement& u, const ZModule& m, Embedding& e,
                                 const FormPredicate& accept = {});

/// Images of the basis vectors T^{-1} mu.
std::vector<FieldElement> transformed_basis(const ZModule& m, const IntMatrix& t);

}  // namespace heckeaf
