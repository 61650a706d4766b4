#include "heckeaf/kernels/conjugator_search.hpp"

#include <cstdint>
#include <limits>

namespace heckeaf::kernels {

namespace {

std::int64_t space_size(const ConjugatorSpace& s) {
    std::int64_t total = 1;
    for (std::size_t i = 0; i < s.kernel.rows(); ++i) {
        if (total > std::numeric_limits<std::int64_t>::max() / (2 * s.bound + 1)) return -1;
        total *= 2 * s.bound + 1;
    }
    return total;
}

IntMatrix combination(const ConjugatorSpace& s, std::int64_t index) {
    IntMatrix x(s.n, s.n);
    const long side = 2 * s.bound + 1;
    for (std::size_t r = 0; r < s.kernel.rows(); ++r) {
        // digits 0, 1, 2, 3, 4, ... map to coefficients 0, 1, -1, 2, -2, ...
        const long t = static_cast<long>(index % side);
        index /= side;
        const long c = (t % 2 == 1) ? (t + 1) / 2 : -(t / 2);
        if (c == 0) continue;
        for (std::size_t k = 0; k < s.n * s.n; ++k) x(k / s.n, k % s.n) += c * s.kernel(r, k);
    }
    return x;
}

bool unimodular(const IntMatrix& x) {
    Integer d = determinant(x);
    return d == 1 || d == -1;
}

}  // namespace

std::optional<IntMatrix> conjugator_search_serial(const ConjugatorSpace& space) {
    const std::int64_t total = space_size(space);
    for (std::int64_t idx = 0; idx < total; ++idx) {
        IntMatrix x = combination(space, idx);
        if (unimodular(x)) return x;
    }
    return std::nullopt;
}

std::optional<IntMatrix> conjugator_search_parallel(const ConjugatorSpace& space) {
    const std::int64_t total = space_size(space);
    std::int64_t best = total;
#pragma omp parallel
    {
        std::int64_t local = total;
#pragma omp for schedule(static)
        for (std::int64_t idx = 0; idx < total; ++idx) {
            if (idx >= local) continue;
            if (unimodular(combination(space, idx))) local = idx;
        }
#pragma omp critical
        if (local < best) best = local;
    }
    if (best >= total) return std::nullopt;
    return combination(space, best);
}

}  // namespace heckeaf::kernels
