#pragma once

#include <gmpxx.h>

#include <optional>
#include <vector>

namespace heckeaf::kernels {

using Digits = std::vector<std::vector<long>>;

/// High-precision floating JPA over many starting bases S: the starting
/// vector is S * values, and the expansion is run for a fixed number of
/// steps. A period is reported when the final `window` digits repeat with
/// some period length <= max_period.
struct SweepInput {
    std::vector<mpf_class> values;             // images of the module basis
    std::vector<std::vector<long>> bases;      // flattened n x n matrices S
    std::size_t n = 0;
    unsigned steps = 128;
    unsigned window = 48;
    unsigned max_period = 16;
};

struct SweepHit {
    std::size_t basis_index = 0;
    Digits period;         // canonical rotation (lexicographically least)
    double perron = 0;     // spectral radius of the period product

    friend bool operator==(const SweepHit&, const SweepHit&) = default;
};

/// Smallest Perron value first, then canonical period, then basis index.
bool hit_less(const SweepHit& a, const SweepHit& b);

Digits canonical_rotation(const Digits& d);

/// All hits, sorted with hit_less. Serial and parallel results are identical.
std::vector<SweepHit> jpa_sweep_serial(const SweepInput& in);
std::vector<SweepHit> jpa_sweep_parallel(const SweepInput& in);

/// Floating JPA digits of a positive vector (shared with tests).
std::optional<Digits> float_jpa_digits(const std::vector<mpf_class>& v, unsigned steps);

}  // namespace heckeaf::kernels
