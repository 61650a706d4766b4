#pragma once

#include "heckeaf/exactnum/number_field.hpp"

#include <vector>

namespace heckeaf {

/// (Z^n, G+, u) with G+ = {x : theta_1 x_1 + ... + theta_{n-1} x_{n-1} + x_n >= 0}
/// and order unit u = (0, ..., 0, 1).
struct DimensionGroup {
    std::size_t rank = 0;
    std::vector<FieldElement> theta;
    Embedding embedding;
    std::vector<Integer> order_unit;
};

/// Requires sigma(theta_i) > 0.
DimensionGroup dimension_group(const std::vector<FieldElement>& theta, const Embedding& e);

/// The functional theta . x' + x_n as a field element.
FieldElement cone_functional(const DimensionGroup& g, const std::vector<Integer>& x);

/// Exact: symbolic zero test, then a certified interval sign.
bool cone_contains(const DimensionGroup& g, const std::vector<Integer>& x);

}  // namespace heckeaf
