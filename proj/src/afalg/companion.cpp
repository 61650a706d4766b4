#include "heckeaf/afalg/companion.hpp"

#include "heckeaf/exactnum/lattice.hpp"
#include "heckeaf/kernels/conjugator_search.hpp"

#include <functional>

namespace heckeaf {

std::string_view to_string(CompanionVerdict v) noexcept {
    switch (v) {
        case CompanionVerdict::Companion: return "companion";
        case CompanionVerdict::SimilarOverQ: return "similar_over_Q";
        case CompanionVerdict::DistinctCharPoly: return "distinct_char_poly";
        case CompanionVerdict::UndeterminedZSimilarity: return "undetermined_Z_similarity";
    }
    return "unknown";
}

namespace {

using PolyMatrix = std::vector<std::vector<Polynomial>>;

Polynomial poly_det(const PolyMatrix& m) {
    const std::size_t n = m.size();
    if (n == 1) return m[0][0];
    Polynomial det;
    for (std::size_t c = 0; c < n; ++c) {
        if (m[0][c].is_zero()) continue;
        PolyMatrix minor;
        for (std::size_t r = 1; r < n; ++r) {
            std::vector<Polynomial> row;
            for (std::size_t k = 0; k < n; ++k) {
                if (k != c) row.push_back(m[r][k]);
            }
            minor.push_back(std::move(row));
        }
        Polynomial term = m[0][c] * poly_det(minor);
        det = (c % 2 == 0) ? det + term : det - term;
    }
    return det;
}

void for_each_subset(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& f) {
    std::vector<std::size_t> idx(k);
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t pos, std::size_t start) {
        if (pos == k) {
            f(idx);
            return;
        }
        for (std::size_t i = start; i < n; ++i) {
            idx[pos] = i;
            rec(pos + 1, i + 1);
        }
    };
    rec(0, 0);
}

}  // namespace

std::vector<Polynomial> determinantal_divisors(const IntMatrix& b) {
    if (!b.is_square()) throw Error(ErrorCode::ShapeMismatch, "square matrix required");
    const std::size_t n = b.rows();
    PolyMatrix xi(n, std::vector<Polynomial>(n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            Polynomial entry = Polynomial::constant(Rational(-b(i, j)));
            if (i == j) entry = entry + Polynomial::monomial(1, 1);
            xi[i][j] = entry;
        }
    }
    std::vector<Polynomial> out;
    for (std::size_t k = 1; k <= n; ++k) {
        Polynomial g;
        for_each_subset(n, k, [&](const std::vector<std::size_t>& rows) {
            for_each_subset(n, k, [&](const std::vector<std::size_t>& cols) {
                if (g.degree() == 0) return;  // already 1
                PolyMatrix m(k, std::vector<Polynomial>(k));
                for (std::size_t i = 0; i < k; ++i) {
                    for (std::size_t j = 0; j < k; ++j) m[i][j] = xi[rows[i]][cols[j]];
                }
                g = Polynomial::gcd(g, poly_det(m));
            });
        });
        out.push_back(g);
    }
    return out;
}

CompanionResult companion_check(const IntMatrix& b1_in, const IntMatrix& b2_in, const CompanionOptions& opts) {
    if (!b1_in.is_square() || !b2_in.is_square() || b1_in.rows() != b2_in.rows()) {
        throw Error(ErrorCode::ShapeMismatch, "companion_check needs square matrices of equal size");
    }
    const bool swapped = to_string(b2_in) < to_string(b1_in);
    const IntMatrix& b1 = swapped ? b2_in : b1_in;
    const IntMatrix& b2 = swapped ? b1_in : b2_in;
    const std::size_t n = b1.rows();

    CompanionResult r;
    if (characteristic_polynomial(b1) != characteristic_polynomial(b2)) {
        r.verdict = CompanionVerdict::DistinctCharPoly;
        return r;
    }
    if (determinantal_divisors(b1) != determinantal_divisors(b2)) {
        r.verdict = CompanionVerdict::Companion;
        return r;
    }
    // X B1 = B2 X as a linear system in the n^2 entries of X.
    IntMatrix sys(n * n, n * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const std::size_t eq = i * n + j;
            for (std::size_t k = 0; k < n; ++k) {
                sys(eq, i * n + k) += b1(k, j);
                sys(eq, k * n + j) -= b2(i, k);
            }
        }
    }
    IntMatrix kernel = left_integer_kernel(sys.transpose());
    kernel = lll_reduce(kernel);
    kernels::ConjugatorSpace space{kernel, n, opts.coefficient_bound};
    auto x = opts.parallel ? kernels::conjugator_search_parallel(space) : kernels::conjugator_search_serial(space);
    if (!x) {
        r.verdict = CompanionVerdict::UndeterminedZSimilarity;
        return r;
    }
    if (*x * b1 != b2 * *x) throw Error(ErrorCode::PreconditionViolated, "conjugator check failed");
    r.verdict = CompanionVerdict::SimilarOverQ;
    r.conjugator = swapped ? inverse_unimodular(*x) : *x;
    return r;
}

}  // namespace heckeaf
