#include "heckeaf/exactnum/units.hpp"

#include "heckeaf/exactnum/lattice.hpp"
#include "heckeaf/kernels/unit_search.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <map>
#include <numeric>
#include <set>

namespace heckeaf {

UnitElement make_unit(const OrderRing& o, const FieldElement& u) {
    if (!o.contains(u)) throw Error(ErrorCode::PreconditionViolated, u.to_string() + " is not in the order");
    const Rational nm = u.norm();
    if (nm != 1 && nm != -1) {
        throw Error(ErrorCode::PreconditionViolated, u.to_string() + " has norm " + to_string(nm));
    }
    if (!o.contains(u.inverse())) {
        throw Error(ErrorCode::PreconditionViolated, "inverse of " + u.to_string() + " is not in the order");
    }
    return {u, nm == 1 ? 1 : -1};
}

IntMatrix multiplication_matrix(const FieldElement& u, const ZModule& m) {
    const auto basis = m.basis();
    IntMatrix a(basis.size(), basis.size());
    for (std::size_t i = 0; i < basis.size(); ++i) {
        FieldElement image = u * basis[i];
        auto c = m.coordinates(image);
        if (!c) {
            throw Error(ErrorCode::NotEndomorphism,
                        "(" + u.to_string() + ") * (" + basis[i].to_string() + ") = " + image.to_string() +
                            " is not in the module");
        }
        for (std::size_t j = 0; j < basis.size(); ++j) a(i, j) = (*c)[j];
    }
    return a;
}

namespace {

// Degree 2: the order is Z + Z w. The purely periodic part of the continued
// fraction of a translate of w gives a matrix C with C (1, t)^T = mu (1, t)^T,
// and mu = C00 + C01 t is the fundamental unit (> 1 at e).
UnitElement quadratic_unit(const OrderRing& o, Embedding& e) {
    const ZModule& m = o.module();
    // HNF with the x-coordinate as the leading column gives w.
    IntMatrix swapped(2, 2);
    for (std::size_t i = 0; i < 2; ++i) {
        swapped(i, 0) = m.hnf()(i, 1);
        swapped(i, 1) = m.hnf()(i, 0);
    }
    IntMatrix h = hermite_form(swapped).h;
    const FieldPtr& field = o.field();
    const Rational d(m.denominator());
    FieldElement w(field, {Rational(h(0, 1)) / d, Rational(h(0, 0)) / d});
    FieldElement theta = w - FieldElement::rational(field, Rational(e.floor(w) - 1));

    std::map<std::vector<Rational>, std::size_t> seen;
    std::vector<FieldElement> states;
    std::vector<Integer> digits;
    for (std::size_t step = 0; step < 100000; ++step) {
        auto [it, inserted] = seen.emplace(theta.coords(), states.size());
        if (!inserted) {
            const std::size_t start = it->second;
            IntMatrix c = IntMatrix::identity(2);
            for (std::size_t i = start; i < digits.size(); ++i) c = c * IntMatrix{{0, 1}, {1, digits[i]}};
            const FieldElement& t = states[start];
            FieldElement mu = FieldElement::rational(field, Rational(c(0, 0))) + Rational(c(0, 1)) * t;
            return make_unit(o, mu);
        }
        states.push_back(theta);
        Integer dg = e.floor(theta);
        digits.push_back(dg);
        FieldElement frac = theta - FieldElement::rational(field, Rational(dg));
        if (frac.is_zero()) break;
        theta = frac.inverse();
    }
    throw Error(ErrorCode::UnitNotFound, "continued fraction of the order generator did not become periodic");
}

std::vector<std::complex<double>> complex_roots(const IntPolynomial& p) {
    const int n = p.degree();
    Eigen::MatrixXd comp = Eigen::MatrixXd::Zero(n, n);
    for (int i = 1; i < n; ++i) comp(i, i - 1) = 1;
    for (int i = 0; i < n; ++i) comp(i, n - 1) = -p.coeffs()[static_cast<std::size_t>(i)].get_d();
    Eigen::EigenSolver<Eigen::MatrixXd> es(comp, false);
    std::vector<std::complex<double>> roots;
    for (int i = 0; i < n; ++i) roots.push_back(es.eigenvalues()(i));
    return roots;
}

std::complex<double> eval_complex(const FieldElement& a, std::complex<double> x) {
    std::complex<double> acc = 0;
    for (auto it = a.coords().rbegin(); it != a.coords().rend(); ++it) acc = acc * x + it->get_d();
    return acc;
}

UnitElement box_unit(const OrderRing& o, Embedding& e, const UnitSearchOptions& opts) {
    const auto basis = o.module().basis();
    const std::size_t n = basis.size();
    auto roots = complex_roots(o.field()->minpoly());
    const double working_root = e.approx(FieldElement::generator(o.field()));
    std::size_t working = 0;
    for (std::size_t k = 1; k < roots.size(); ++k) {
        if (std::abs(roots[k] - working_root) < std::abs(roots[working] - working_root)) working = k;
    }
    roots[working] = working_root;

    kernels::UnitBox box;
    box.working = working;
    for (const auto& r : roots) {
        std::vector<std::complex<double>> row;
        for (const auto& b : basis) row.push_back(eval_complex(b, r));
        box.values.push_back(std::move(row));
    }
    // |c| = |M^{-1} sigma(u)| bounds the coordinates of units whose images
    // are all at most V in modulus.
    Eigen::MatrixXcd emb(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t i = 0; i < n; ++i) {
            emb(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(i)) = box.values[k][i];
        }
    }
    const Eigen::MatrixXcd inv = emb.inverse();
    double row_bound = 0;
    for (Eigen::Index i = 0; i < inv.rows(); ++i) row_bound = std::max(row_bound, inv.row(i).cwiseAbs().sum());

    auto search = [&](long bound, long skip) {
        double points = std::pow(2.0 * static_cast<double>(bound) + 1.0, static_cast<double>(n));
        if (points > 5e7) {
            throw Error(ErrorCode::UnitNotFound,
                        "coordinate box of bound " + std::to_string(bound) + " is too large to enumerate");
        }
        box.bound = bound;
        box.skip_below = skip;
        return opts.parallel ? kernels::unit_search_parallel(box) : kernels::unit_search_serial(box);
    };
    auto verify = [&](const std::vector<kernels::UnitCandidate>& cands) -> std::optional<kernels::UnitCandidate> {
        const FieldElement one = FieldElement::one(o.field());
        for (const auto& c : cands) {
            FieldElement u = FieldElement::zero(o.field());
            for (std::size_t i = 0; i < n; ++i) u = u + Rational(c.coords[i]) * basis[i];
            const Rational nm = u.norm();
            if ((nm == 1 || nm == -1) && e.sign(u - one) > 0) return c;
        }
        return std::nullopt;
    };
    auto element_of = [&](const kernels::UnitCandidate& c) {
        FieldElement u = FieldElement::zero(o.field());
        for (std::size_t i = 0; i < n; ++i) u = u + Rational(c.coords[i]) * basis[i];
        return u;
    };

    long previous = 0;
    for (long bound = 1; bound <= opts.max_bound; bound *= 2) {
        auto found = verify(search(bound, previous));
        if (found) {
            const auto needed = static_cast<long>(std::floor(row_bound * found->value)) + 1;
            const long complete = std::min(needed, opts.max_bound);
            if (complete > bound) {
                auto more = verify(search(complete, bound));
                if (more && kernels::candidate_less(*more, *found)) found = more;
            }
            return make_unit(o, element_of(*found));
        }
        previous = bound;
    }
    throw Error(ErrorCode::UnitNotFound, "no unit with coordinates up to " + std::to_string(opts.max_bound));
}

void append_signed_permutations(std::size_t n, const IntMatrix& left, std::vector<IntMatrix>& out) {
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        for (unsigned mask = 0; mask < (1U << n); ++mask) {
            IntMatrix p(n, n);
            for (std::size_t i = 0; i < n; ++i) p(i, perm[i]) = (mask >> i) & 1U ? -1 : 1;
            out.push_back(left * p);
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
}

}  // namespace

UnitElement find_unit(const OrderRing& o, Embedding& e, const UnitSearchOptions& opts) {
    const int n = o.field()->degree();
    if (n < 2) throw Error(ErrorCode::UnitNotFound, "the rationals have only the torsion units +1 and -1");
    if (n == 2) return quadratic_unit(o, e);
    return box_unit(o, e, opts);
}

std::vector<IntMatrix> nonnegative_search_space(const ZModule& m) {
    const std::size_t n = m.rank();
    std::vector<IntMatrix> raw;
    const IntMatrix id = IntMatrix::identity(n);
    append_signed_permutations(n, id, raw);

    IntMatrix u;
    lll_reduce(m.hnf(), &u);
    if (!u.is_identity()) append_signed_permutations(n, inverse_unimodular(u), raw);

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
            Integer d = determinant(t);
            if (d == 1 || d == -1) raw.push_back(std::move(t));
        }
    }
    std::set<std::string> seen;
    std::vector<IntMatrix> out;
    for (auto& t : raw) {
        if (seen.insert(to_string(t)).second) out.push_back(std::move(t));
    }
    return out;
}

std::vector<FieldElement> transformed_basis(const ZModule& m, const IntMatrix& t) {
    const IntMatrix tinv = inverse_unimodular(t);
    const auto mu = m.basis();
    std::vector<FieldElement> nu;
    for (std::size_t i = 0; i < mu.size(); ++i) {
        FieldElement v = FieldElement::zero(m.field());
        for (std::size_t j = 0; j < mu.size(); ++j) {
            if (tinv(i, j) != 0) v = v + Rational(tinv(i, j)) * mu[j];
        }
        nu.push_back(std::move(v));
    }
    return nu;
}

NonnegativeForm make_nonnegative(const IntMatrix& a, const UnitElement& u, const ZModule& m, Embedding& e,
                                 const FormPredicate& accept) {
    const std::size_t n = a.rows();
    if (multiplication_matrix(u.element, m) != a) {
        throw Error(ErrorCode::PreconditionViolated, "matrix is not the multiplication matrix of the unit");
    }
    if (e.sign(u.element - FieldElement::one(m.field())) <= 0) {
        throw Error(ErrorCode::NonnegativeFormNotFound, "unit is not expanding at the working embedding");
    }
    const auto mu = m.basis();
    std::vector<double> mu_approx;
    for (const auto& x : mu) mu_approx.push_back(e.approx(x));

    const auto space = nonnegative_search_space(m);
    std::vector<IntMatrix> inverses;
    inverses.reserve(space.size());
    for (const auto& t : space) inverses.push_back(inverse_unimodular(t));

    IntMatrix ak = IntMatrix::identity(n);
    for (unsigned k = 1; k <= 12; ++k) {
        ak = ak * a;
        for (std::size_t s = 0; s < space.size(); ++s) {
            IntMatrix candidate = inverses[s] * ak * space[s];
            if (!is_nonnegative(candidate)) continue;
            // Perron check: the eigenvector T^{-1} mu must have one sign.
            int approx_sign = 0;
            bool mixed = false;
            for (std::size_t i = 0; i < n && !mixed; ++i) {
                double v = 0;
                for (std::size_t j = 0; j < n; ++j) v += inverses[s](i, j).get_d() * mu_approx[j];
                int sg = v > 0 ? 1 : (v < 0 ? -1 : 0);
                if (sg == 0 || (approx_sign != 0 && sg != approx_sign)) mixed = true;
                approx_sign = sg;
            }
            if (mixed) continue;
            IntMatrix t = space[s];
            auto nu = transformed_basis(m, t);
            const int first = e.sign(nu.front());
            bool same = first != 0;
            for (std::size_t i = 1; i < n && same; ++i) same = e.sign(nu[i]) == first;
            if (!same) continue;
            if (first < 0) t = scale(Integer(-1), t);
            NonnegativeForm form{candidate, k, t};
            if (!accept || accept(form)) return form;
        }
    }
    throw Error(ErrorCode::NonnegativeFormNotFound,
                "no non-negative form with k <= 12 among " + std::to_string(space.size()) + " basis changes");
}

}  // namespace heckeaf
