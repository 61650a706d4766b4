#include "heckeaf/kernels/unit_search.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>

namespace heckeaf::kernels {

bool candidate_less(const UnitCandidate& a, const UnitCandidate& b) {
    if (a.value != b.value) return a.value < b.value;
    return a.coords < b.coords;
}

namespace {

std::int64_t box_size(const UnitBox& box) {
    const std::size_t n = box.values.empty() ? 0 : box.values.front().size();
    std::int64_t total = 1;
    for (std::size_t i = 0; i < n; ++i) total *= 2 * box.bound + 1;
    return total;
}

void decode(const UnitBox& box, std::int64_t index, std::vector<long>& coords) {
    const long side = 2 * box.bound + 1;
    for (auto& c : coords) {
        c = static_cast<long>(index % side) - box.bound;
        index /= side;
    }
}

bool test_point(const UnitBox& box, const std::vector<long>& coords, double& value) {
    long maxabs = 0;
    for (long c : coords) maxabs = std::max(maxabs, std::labs(c));
    if (maxabs <= box.skip_below) return false;

    const std::size_t n = coords.size();
    std::complex<double> norm = 1;
    double working = 0;
    double dominant_rest = 0;
    for (std::size_t k = 0; k < box.values.size(); ++k) {
        std::complex<double> v = 0;
        for (std::size_t i = 0; i < n; ++i) v += static_cast<double>(coords[i]) * box.values[k][i];
        norm *= v;
        if (k == box.working) {
            working = v.real();
        } else {
            dominant_rest = std::max(dominant_rest, std::abs(v));
        }
    }
    if (std::abs(std::abs(norm) - 1.0) > 1e-6) return false;
    if (working <= 1.0 + 1e-12) return false;
    if (dominant_rest >= working * (1.0 - 1e-12)) return false;
    value = working;
    return true;
}

}  // namespace

std::vector<UnitCandidate> unit_search_serial(const UnitBox& box) {
    const std::size_t n = box.values.empty() ? 0 : box.values.front().size();
    std::vector<UnitCandidate> out;
    std::vector<long> coords(n);
    const std::int64_t total = box_size(box);
    for (std::int64_t idx = 0; idx < total; ++idx) {
        decode(box, idx, coords);
        double value = 0;
        if (test_point(box, coords, value)) out.push_back({coords, value});
    }
    std::sort(out.begin(), out.end(), candidate_less);
    return out;
}

std::vector<UnitCandidate> unit_search_parallel(const UnitBox& box) {
    const std::size_t n = box.values.empty() ? 0 : box.values.front().size();
    std::vector<UnitCandidate> out;
    const std::int64_t total = box_size(box);
#pragma omp parallel
    {
        std::vector<UnitCandidate> local;
        std::vector<long> coords(n);
#pragma omp for schedule(static) nowait
        for (std::int64_t idx = 0; idx < total; ++idx) {
            decode(box, idx, coords);
            double value = 0;
            if (test_point(box, coords, value)) local.push_back({coords, value});
        }
#pragma omp critical
        out.insert(out.end(), local.begin(), local.end());
    }
    std::sort(out.begin(), out.end(), candidate_less);
    return out;
}

}  // namespace heckeaf::kernels
