#include "heckeaf/kernels/jpa_sweep.hpp"

#include <Eigen/Dense>

#include <algorithm>

namespace heckeaf::kernels {

Digits canonical_rotation(const Digits& d) {
    Digits best = d;
    for (std::size_t r = 1; r < d.size(); ++r) {
        Digits rot(d.begin() + static_cast<std::ptrdiff_t>(r), d.end());
        rot.insert(rot.end(), d.begin(), d.begin() + static_cast<std::ptrdiff_t>(r));
        if (rot < best) best = std::move(rot);
    }
    return best;
}

bool hit_less(const SweepHit& a, const SweepHit& b) {
    if (a.perron != b.perron) return a.perron < b.perron;
    if (a.period != b.period) return a.period < b.period;
    return a.basis_index < b.basis_index;
}

std::optional<Digits> float_jpa_digits(const std::vector<mpf_class>& v, unsigned steps) {
    const std::size_t n = v.size();
    const mp_bitcnt_t prec = v.front().get_prec();
    if (v.front() <= 0) return std::nullopt;
    std::vector<mpf_class> theta;
    for (std::size_t i = 1; i < n; ++i) {
        if (v[i] <= 0) return std::nullopt;
        theta.emplace_back(v[i] / v.front(), prec);
    }
    mpf_class tiny(1, prec);
    mpf_div_2exp(tiny.get_mpf_t(), tiny.get_mpf_t(), prec / 2);
    Digits out;
    out.reserve(steps);
    std::vector<mpf_class> next(n - 1, mpf_class(0, prec));
    mpf_class frac(0, prec);
    for (unsigned s = 0; s < steps; ++s) {
        std::vector<long> d(n - 1);
        for (std::size_t j = 0; j < n - 1; ++j) {
            mpf_class f(0, prec);
            mpf_floor(f.get_mpf_t(), theta[j].get_mpf_t());
            d[j] = f.get_si();
            theta[j] -= f;
        }
        out.push_back(d);
        frac = theta[0];
        if (frac < tiny) return std::nullopt;  // looks rational: terminates
        for (std::size_t j = 1; j < n - 1; ++j) next[j - 1] = theta[j] / frac;
        next[n - 2] = 1 / frac;
        std::swap(theta, next);
    }
    return out;
}

namespace {

double spectral_radius(const Digits& period, std::size_t n) {
    Eigen::MatrixXd prod = Eigen::MatrixXd::Identity(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
    for (const auto& d : period) {
        Eigen::MatrixXd b = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
        b(0, static_cast<Eigen::Index>(n - 1)) = 1;
        for (std::size_t i = 1; i < n; ++i) {
            b(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i - 1)) = 1;
            b(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(n - 1)) = static_cast<double>(d[i - 1]);
        }
        prod = prod * b;
    }
    Eigen::EigenSolver<Eigen::MatrixXd> es(prod, false);
    return es.eigenvalues().cwiseAbs().maxCoeff();
}

std::optional<SweepHit> run_one(const SweepInput& in, std::size_t index) {
    const auto& s = in.bases[index];
    const std::size_t n = in.n;
    const mp_bitcnt_t prec = in.values.front().get_prec();
    std::vector<mpf_class> v(n, mpf_class(0, prec));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            long c = s[i * n + j];
            if (c != 0) v[i] += c * in.values[j];
        }
    }
    auto digits = float_jpa_digits(v, in.steps);
    if (!digits) return std::nullopt;
    const auto& ds = *digits;
    const std::size_t len = ds.size();
    for (std::size_t p = 1; p <= in.max_period; ++p) {
        if (len < in.window + p) break;
        bool ok = true;
        for (std::size_t i = 0; i < in.window && ok; ++i) ok = ds[len - 1 - i] == ds[len - 1 - i - p];
        if (!ok) continue;
        Digits period(ds.end() - static_cast<std::ptrdiff_t>(p), ds.end());
        SweepHit hit;
        hit.basis_index = index;
        hit.period = canonical_rotation(period);
        hit.perron = spectral_radius(hit.period, n);
        return hit;
    }
    return std::nullopt;
}

}  // namespace

std::vector<SweepHit> jpa_sweep_serial(const SweepInput& in) {
    std::vector<SweepHit> hits;
    for (std::size_t i = 0; i < in.bases.size(); ++i) {
        if (auto h = run_one(in, i)) hits.push_back(std::move(*h));
    }
    std::sort(hits.begin(), hits.end(), hit_less);
    return hits;
}

std::vector<SweepHit> jpa_sweep_parallel(const SweepInput& in) {
    std::vector<std::optional<SweepHit>> slots(in.bases.size());
    const auto count = static_cast<long>(in.bases.size());
#pragma omp parallel for schedule(dynamic, 16)
    for (long i = 0; i < count; ++i) slots[static_cast<std::size_t>(i)] = run_one(in, static_cast<std::size_t>(i));
    std::vector<SweepHit> hits;
    for (auto& h : slots) {
        if (h) hits.push_back(std::move(*h));
    }
    std::sort(hits.begin(), hits.end(), hit_less);
    return hits;
}

}  // namespace heckeaf::kernels
