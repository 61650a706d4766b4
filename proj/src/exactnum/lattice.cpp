#include "heckeaf/exactnum/lattice.hpp"

namespace heckeaf {

namespace {

void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
}

// row a -= q * row b
void sub_row(IntMatrix& m, std::size_t a, std::size_t b, const Integer& q) {
    if (q == 0) return;
    for (std::size_t j = 0; j < m.cols(); ++j) m(a, j) -= q * m(b, j);
}

void negate_row(IntMatrix& m, std::size_t a) {
    for (std::size_t j = 0; j < m.cols(); ++j) m(a, j) = -m(a, j);
}

}  // namespace

HermiteForm hermite_form(const IntMatrix& a) {
    IntMatrix m = a;
    IntMatrix u = IntMatrix::identity(a.rows());
    const std::size_t rows = m.rows();
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < rows; ++c) {
        // Euclid on column c among rows r.. until a single nonzero remains.
        while (true) {
            std::size_t best = rows;
            for (std::size_t i = r; i < rows; ++i) {
                if (m(i, c) != 0 && (best == rows || abs(m(i, c)) < abs(m(best, c)))) best = i;
            }
            if (best == rows) break;
            swap_rows(m, r, best);
            swap_rows(u, r, best);
            bool done = true;
            for (std::size_t i = r + 1; i < rows; ++i) {
                if (m(i, c) == 0) continue;
                Integer q;
                mpz_fdiv_q(q.get_mpz_t(), m(i, c).get_mpz_t(), m(r, c).get_mpz_t());
                sub_row(m, i, r, q);
                sub_row(u, i, r, q);
                if (m(i, c) != 0) done = false;
            }
            if (done) break;
        }
        if (m(r, c) == 0) continue;
        if (m(r, c) < 0) {
            negate_row(m, r);
            negate_row(u, r);
        }
        for (std::size_t i = 0; i < r; ++i) {
            Integer q;
            mpz_fdiv_q(q.get_mpz_t(), m(i, c).get_mpz_t(), m(r, c).get_mpz_t());
            sub_row(m, i, r, q);
            sub_row(u, i, r, q);
        }
        ++r;
    }
    IntMatrix h(r, m.cols());
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) h(i, j) = m(i, j);
    }
    return {std::move(h), std::move(u)};
}

IntMatrix left_integer_kernel(const IntMatrix& a) {
    auto hf = hermite_form(a);
    const std::size_t r = hf.h.rows();
    IntMatrix k(a.rows() - r, a.rows());
    for (std::size_t i = r; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.rows(); ++j) k(i - r, j) = hf.transform(i, j);
    }
    return k;
}

IntMatrix lll_reduce(const IntMatrix& rows, IntMatrix* transform) {
    IntMatrix b = rows;
    IntMatrix u = IntMatrix::identity(rows.rows());
    const std::size_t n = b.rows();
    const std::size_t dim = b.cols();
    auto dot = [&](const std::vector<Rational>& x, const std::vector<Rational>& y) {
        Rational s = 0;
        for (std::size_t j = 0; j < dim; ++j) s += x[j] * y[j];
        return s;
    };
    std::vector<std::vector<Rational>> bstar(n, std::vector<Rational>(dim));
    std::vector<Rational> bnorm(n);
    RatMatrix mu(n, n);
    auto gram_schmidt = [&]() {
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < dim; ++j) bstar[i][j] = b(i, j);
            for (std::size_t k = 0; k < i; ++k) {
                std::vector<Rational> bi(dim);
                for (std::size_t j = 0; j < dim; ++j) bi[j] = b(i, j);
                mu(i, k) = dot(bi, bstar[k]) / bnorm[k];
                for (std::size_t j = 0; j < dim; ++j) bstar[i][j] -= mu(i, k) * bstar[k][j];
            }
            bnorm[i] = dot(bstar[i], bstar[i]);
            if (bnorm[i] == 0) throw Error(ErrorCode::NotFullRank, "LLL input rows are dependent");
        }
    };
    gram_schmidt();
    const Rational delta(3, 4);
    std::size_t k = 1;
    while (k < n) {
        for (std::size_t jj = k; jj-- > 0;) {
            Rational m = mu(k, jj);
            Integer q = floor(m + Rational(1, 2));
            if (q != 0) {
                sub_row(b, k, jj, q);
                sub_row(u, k, jj, q);
                for (std::size_t l = 0; l < jj; ++l) mu(k, l) -= q * mu(jj, l);
                mu(k, jj) -= q;
            }
        }
        if (bnorm[k] >= (delta - mu(k, k - 1) * mu(k, k - 1)) * bnorm[k - 1]) {
            ++k;
        } else {
            swap_rows(b, k, k - 1);
            swap_rows(u, k, k - 1);
            gram_schmidt();
            k = std::max<std::size_t>(k - 1, 1);
        }
    }
    if (transform) *transform = std::move(u);
    return b;
}

}  // namespace heckeaf
