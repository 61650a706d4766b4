#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace heckeaf::kernels {

/// Floating-point description of an order basis: values[k][i] is the image of
/// basis element i under complex embedding k.
struct UnitBox {
    std::vector<std::vector<std::complex<double>>> values;
    std::size_t working = 0;  // embedding whose value must exceed 1 and dominate
    long bound = 1;           // coordinates range over [-bound, bound]
    long skip_below = 0;      // skip points whose max |coordinate| <= skip_below
};

struct UnitCandidate {
    std::vector<long> coords;
    double value = 0;  // approximate image under the working embedding

    friend bool operator==(const UnitCandidate&, const UnitCandidate&) = default;
};

/// Orders candidates by value, then lexicographically by coordinates.
bool candidate_less(const UnitCandidate& a, const UnitCandidate& b);

/// Box points whose approximate norm has modulus 1 and whose working image
/// exceeds 1 and strictly dominates every other embedding. Sorted with
/// candidate_less. The two versions return identical lists.
std::vector<UnitCandidate> unit_search_serial(const UnitBox& box);
std::vector<UnitCandidate> unit_search_parallel(const UnitBox& box);

}  // namespace heckeaf::kernels
