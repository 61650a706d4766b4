#pragma once

#include "heckeaf/exactnum/matrix.hpp"

#include <optional>

namespace heckeaf::kernels {

/// Integer combinations sum c_i * kernel_i (each c_i in [-bound, bound]) of
/// flattened n x n matrices, scanned in a fixed order. Returns the first
/// combination, in that order, whose determinant is +1 or -1.
struct ConjugatorSpace {
    IntMatrix kernel;  // rows: flattened n x n matrices
    std::size_t n = 0;
    long bound = 10;
};

std::optional<IntMatrix> conjugator_search_serial(const ConjugatorSpace& space);
std::optional<IntMatrix> conjugator_search_parallel(const ConjugatorSpace& space);

}  // namespace heckeaf::kernels
