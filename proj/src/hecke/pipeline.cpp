#include "heckeaf/hecke/pipeline.hpp"

#include "heckeaf/exactnum/lattice.hpp"
#include "heckeaf/kernels/jpa_sweep.hpp"
#include "heckeaf/mcf/bauer.hpp"

#include <gmpxx.h>

#include <set>

namespace heckeaf {

std::string_view to_string(FormRoute r) noexcept {
    switch (r) {
        case FormRoute::NonnegativeSearch: return "nonnegative_search";
        case FormRoute::JpaPeriod: return "jpa_period";
    }
    return "unknown";
}

namespace {

constexpr mp_bitcnt_t kSweepBits = 1280;
constexpr std::size_t kSweepCandidates = 12;

std::vector<FieldElement> apply_rows(const IntMatrix& s, const std::vector<FieldElement>& mu) {
    std::vector<FieldElement> out;
    for (std::size_t i = 0; i < s.rows(); ++i) {
        FieldElement v = FieldElement::zero(mu.front().field());
        for (std::size_t j = 0; j < s.cols(); ++j) {
            if (s(i, j) != 0) v = v + Rational(s(i, j)) * mu[j];
        }
        out.push_back(std::move(v));
    }
    return out;
}

std::vector<FieldElement> ratios(const std::vector<FieldElement>& nu) {
    std::vector<FieldElement> theta;
    for (std::size_t i = 1; i < nu.size(); ++i) theta.push_back(nu[i] / nu.front());
    return theta;
}

IntPolynomial poly_of(const FieldElement& a) { return IntPolynomial::from_rational(a.char_poly()); }

// Starting bases for the sweep: rows of S send the module basis to positive
// reals under the embedding; S and its row-sign variants are identified.
std::vector<IntMatrix> sweep_bases(const ZModule& m, Embedding& e) {
    const std::size_t n = m.rank();
    const auto mu = m.basis();
    std::vector<double> approx;
    for (const auto& x : mu) approx.push_back(e.approx(x));

    std::vector<IntMatrix> raw;
    if (n <= 3) {
        const std::size_t cells = n * n;
        std::size_t total = 1;
        for (std::size_t i = 0; i < cells; ++i) total *= 3;
        for (std::size_t idx = 0; idx < total; ++idx) {
            IntMatrix t(n, n);
            std::size_t rest = idx;
            for (std::size_t c = 0; c < cells; ++c) {
                t(c / n, c % n) = static_cast<long>(rest % 3) - 1;
                rest /= 3;
            }
            const Integer d = determinant(t);
            if (d == 1 || d == -1) raw.push_back(std::move(t));
        }
    } else {
        raw = nonnegative_search_space(m);
        for (auto& t : raw) t = t.transpose();
    }
    std::set<std::string> seen;
    std::vector<IntMatrix> out;
    for (auto& s : raw) {
        for (std::size_t i = 0; i < n; ++i) {
            double v = 0;
            for (std::size_t j = 0; j < n; ++j) v += s(i, j).get_d() * approx[j];
            int sg = v > 1e-9 ? 1 : (v < -1e-9 ? -1 : 0);
            if (sg == 0) {
                FieldElement row = FieldElement::zero(m.field());
                for (std::size_t j = 0; j < n; ++j) row = row + Rational(s(i, j)) * mu[j];
                sg = e.sign(row);
            }
            if (sg < 0) {
                for (std::size_t j = 0; j < n; ++j) s(i, j) = -s(i, j);
            }
        }
        if (seen.insert(to_string(s)).second) out.push_back(std::move(s));
    }
    return out;
}

struct RouteResult {
    UnitElement unit;
    IntMatrix unit_matrix;
    NonnegativeForm form;
    JpaExpansion expansion;
    std::vector<JpaDigit> digits;
};

std::optional<RouteResult> route_nonnegative(const ZModule& m, const UnitElement& u, Embedding& e,
                                             const PipelineOptions& opts) {
    const IntMatrix a = multiplication_matrix(u.element, m);
    JpaExpansion accepted_expansion;
    std::vector<JpaDigit> accepted_digits;
    auto accept = [&](const NonnegativeForm& form) {
        std::vector<JpaDigit> digits;
        try {
            digits = bauer_factorize(form.matrix);
        } catch (const Error&) {
            return false;
        }
        Embedding local = e;
        JpaExpansion x = jpa_expand(ratios(transformed_basis(m, form.t)), local, opts.max_jpa_steps);
        if (!x.periodic() || !matches_period(x.period, digits)) return false;
        accepted_expansion = std::move(x);
        accepted_digits = std::move(digits);
        return true;
    };
    try {
        NonnegativeForm form = make_nonnegative(a, u, m, e, accept);
        return RouteResult{u, a, std::move(form), std::move(accepted_expansion), std::move(accepted_digits)};
    } catch (const Error& err) {
        if (err.code() != ErrorCode::NonnegativeFormNotFound) throw;
        return std::nullopt;
    }
}

std::optional<RouteResult> route_jpa_period(const OrderRing& order, const ZModule& m, Embedding& e,
                                            const PipelineOptions& opts) {
    const std::size_t n = m.rank();
    const auto mu = m.basis();
    const auto bases = sweep_bases(m, e);

    kernels::SweepInput in;
    in.n = n;
    const Rational eps(Integer(1), Integer(1) << (kSweepBits + 64));
    for (const auto& x : mu) {
        auto iv = e.eval(x, eps);
        mpq_class mid = (iv.lo + iv.hi) / 2;
        in.values.emplace_back(mid, kSweepBits);
    }
    for (const auto& s : bases) {
        std::vector<long> flat;
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) flat.push_back(s(i, j).get_si());
        }
        in.bases.push_back(std::move(flat));
    }
    const auto hits = opts.parallel ? kernels::jpa_sweep_parallel(in) : kernels::jpa_sweep_serial(in);

    for (std::size_t h = 0; h < hits.size() && h < kSweepCandidates; ++h) {
        const IntMatrix& s = bases[hits[h].basis_index];
        const auto nu0 = apply_rows(s, mu);
        Embedding local = e;
        JpaExpansion x = jpa_expand(ratios(nu0), local, opts.max_jpa_steps);
        if (!x.periodic()) continue;
        const IntMatrix pc = convergent_matrix(x.preperiod, n);
        const IntMatrix c = convergent_matrix(x.period, n);
        const auto nu = apply_rows(inverse_unimodular(pc), nu0);
        FieldElement cnu0 = FieldElement::zero(m.field());
        for (std::size_t j = 0; j < n; ++j) cnu0 = cnu0 + Rational(c(0, j)) * nu[j];
        const FieldElement v = cnu0 / nu.front();
        std::vector<FieldElement> scaled;
        for (const auto& y : nu) scaled.push_back(v * y);
        if (apply_rows(c, nu) != scaled) continue;
        if (!order.contains(v)) continue;
        UnitElement unit = make_unit(order, v);
        const IntMatrix t = inverse_unimodular(s) * pc;
        const IntMatrix av = multiplication_matrix(v, m);
        if (inverse_unimodular(t) * av * t != c) continue;
        std::vector<JpaDigit> digits;
        try {
            digits = bauer_factorize(c);
        } catch (const Error&) {
            continue;
        }
        if (!matches_period(x.period, digits)) continue;
        return RouteResult{unit, av, NonnegativeForm{c, 1, t}, std::move(x), std::move(digits)};
    }
    return std::nullopt;
}

}  // namespace

EigenformAFResult af_of_eigenform(const NewformData& f, const PipelineOptions& opts) {
    coefficient_field(f);
    EigenformAFResult r;
    r.field = f.field;
    r.embedding_index = f.base_embedding();
    r.module = module_of_eigenform(f);
    if (f.field->degree() == 1) {
        r.af = TrivialAF{};
        return r;
    }
    if (!f.field->totally_real()) {
        throw Error(ErrorCode::NotTotallyReal, f.field->minpoly().to_string() + " has non-real roots");
    }
    Embedding e(f.field, r.embedding_index);
    r.order = endomorphism_ring(r.module);
    r.fundamental_unit = find_unit(*r.order, e, opts.unit);

    std::optional<RouteResult> route = route_nonnegative(r.module, *r.fundamental_unit, e, opts);
    r.route = FormRoute::NonnegativeSearch;
    if (!route) {
        route = route_jpa_period(*r.order, r.module, e, opts);
        r.route = FormRoute::JpaPeriod;
    }
    if (!route) {
        throw Error(ErrorCode::NonnegativeFormNotFound,
                    "neither the bounded basis search nor the JPA sweep produced a factorizable period");
    }
    r.unit = route->unit;
    r.unit_matrix = route->unit_matrix;
    r.form = route->form;
    r.expansion = route->expansion;
    r.bauer_digits = route->digits;
    r.unit_power_poly = poly_of(route->unit.element.pow(static_cast<long>(route->form.k)));

    StationaryAF s = stationary_from_period(r.bauer_digits);
    if (s.period_matrix != r.form->matrix) {
        throw Error(ErrorCode::RoundTripMismatch, "Bauer digits do not multiply back to the period matrix");
    }
    try {
        periodicity_roundtrip(r.form->matrix);
    } catch (const Error& err) {
        if (err.code() != ErrorCode::ReducibleCharPoly) throw;
    }
    r.af = std::move(s);
    return r;
}

CompanionReport companion_of_conjugates(const NewformData& f, const PipelineOptions& opts) {
    CompanionReport report;
    if (f.field->degree() == 1) return report;
    const ConjugateFamily family = conjugate_family(f);
    std::optional<ZModule> base_module;
    for (const auto& conj : family.conjugates) {
        ConjugateRun run;
        run.root_index = conj.root_index;
        run.result = af_of_eigenform(conj.form, opts);
        if (conj.automorphism) {
            std::vector<FieldElement> image;
            for (const auto& b : run.result.module.basis()) image.push_back(apply_automorphism(b, *conj.automorphism));
            run.module_galois_stable = ZModule::from_generators(image) == run.result.module;
        }
        report.runs.push_back(std::move(run));
    }
    const auto& first = std::get<StationaryAF>(report.runs.front().result.af);
    for (std::size_t i = 0; i < report.runs.size(); ++i) {
        const auto& si = std::get<StationaryAF>(report.runs[i].result.af);
        if (si.char_poly != first.char_poly) report.char_polys_equal = false;
        for (std::size_t j = i + 1; j < report.runs.size(); ++j) {
            const auto& sj = std::get<StationaryAF>(report.runs[j].result.af);
            CompanionOptions co;
            co.parallel = opts.parallel;
            report.pairs.push_back({i, j, companion_check(si.period_matrix, sj.period_matrix, co)});
        }
    }
    return report;
}

}  // namespace heckeaf
