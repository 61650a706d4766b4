#include "heckeaf/mcf/bauer.hpp"

#include "heckeaf/exactnum/irreducibility.hpp"

namespace heckeaf {

namespace {

void check_unimodular_nonnegative(const IntMatrix& a) {
    if (!a.is_square() || a.rows() < 2) throw Error(ErrorCode::ShapeMismatch, "need a square matrix of size >= 2");
    if (!is_nonnegative(a)) throw Error(ErrorCode::PreconditionViolated, "matrix has negative entries");
    Integer d = determinant(a);
    if (d != 1 && d != -1) throw Error(ErrorCode::PreconditionViolated, "determinant is " + d.get_str());
    if (a.is_identity()) throw Error(ErrorCode::PreconditionViolated, "identity has no stationary factorization");
}

}  // namespace

std::vector<JpaDigit> bauer_factorize(const IntMatrix& a) {
    check_unimodular_nonnegative(a);
    const std::size_t n = a.rows();
    std::vector<JpaDigit> digits;
    IntMatrix cur = a;
    std::size_t zero_run = 0;
    IntMatrix run_start = a;
    while (!cur.is_identity()) {
        JpaDigit b(n - 1);
        IntMatrix next(n, n);
        for (std::size_t i = 1; i < n; ++i) {
            bool bounded = false;
            Integer best;
            for (std::size_t j = 0; j < n; ++j) {
                if (cur(0, j) == 0) continue;
                Integer q;
                mpz_fdiv_q(q.get_mpz_t(), cur(i, j).get_mpz_t(), cur(0, j).get_mpz_t());
                if (!bounded || q < best) best = q;
                bounded = true;
            }
            if (!bounded) throw FactorizationError("first row vanished", digits, cur);
            b[i - 1] = best;
            for (std::size_t j = 0; j < n; ++j) next(i - 1, j) = cur(i, j) - best * cur(0, j);
        }
        for (std::size_t j = 0; j < n; ++j) next(n - 1, j) = cur(0, j);

        bool all_zero = true;
        for (const auto& x : b) all_zero = all_zero && x == 0;
        if (!all_zero) zero_run = 0;
        else if (zero_run++ == 0) run_start = cur;
        // n zero blocks multiply to the identity, so the peel is cycling.
        if (zero_run >= n) {
            digits.resize(digits.size() + 1 - n);
            throw FactorizationError("greedy peel cycles through zero blocks", digits, run_start);
        }
        digits.push_back(std::move(b));
        cur = std::move(next);
    }
    return digits;
}

PerronData satz12_eigenvector(const IntMatrix& a) {
    check_unimodular_nonnegative(a);
    const std::size_t n = a.rows();
    IntPolynomial cp = characteristic_polynomial(a);
    if (!is_irreducible(cp)) throw Error(ErrorCode::ReducibleCharPoly, cp.to_string());
    PerronData out;
    out.field = make_field(cp);
    if (out.field->real_roots().empty()) throw Error(ErrorCode::PreconditionViolated, "no real eigenvalue");
    out.embedding = Embedding(out.field, out.field->real_roots().size() - 1);
    out.u = FieldElement::generator(out.field);

    // Solve (A - uI) lambda = 0 with lambda_1 = 1: eliminate on the columns
    // 2..n with right-hand side -(A - uI) e_1.
    std::vector<std::vector<FieldElement>> rows(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 1; j < n; ++j) {
            FieldElement v = FieldElement::rational(out.field, Rational(a(i, j)));
            if (i == j) v = v - out.u;
            rows[i].push_back(std::move(v));
        }
        FieldElement rhs = FieldElement::rational(out.field, Rational(-a(i, 0)));
        if (i == 0) rhs = rhs + out.u;
        rows[i].push_back(std::move(rhs));
    }
    const std::size_t unknowns = n - 1;
    std::vector<std::size_t> pivot_row(unknowns);
    std::size_t r = 0;
    for (std::size_t c = 0; c < unknowns; ++c) {
        std::size_t p = r;
        while (p < n && rows[p][c].is_zero()) ++p;
        if (p == n) throw Error(ErrorCode::PreconditionViolated, "eigenspace is not one-dimensional");
        std::swap(rows[p], rows[r]);
        const FieldElement inv = rows[r][c].inverse();
        for (auto& x : rows[r]) x = x * inv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == r || rows[i][c].is_zero()) continue;
            const FieldElement f = rows[i][c];
            for (std::size_t k = c; k <= unknowns; ++k) rows[i][k] = rows[i][k] - f * rows[r][k];
        }
        pivot_row[c] = r++;
    }
    out.lambda.push_back(FieldElement::one(out.field));
    for (std::size_t c = 0; c < unknowns; ++c) out.lambda.push_back(rows[pivot_row[c]][unknowns]);

    for (std::size_t i = 0; i < n; ++i) {
        FieldElement lhs = FieldElement::zero(out.field);
        for (std::size_t j = 0; j < n; ++j) lhs = lhs + Rational(a(i, j)) * out.lambda[j];
        if (lhs != out.u * out.lambda[i]) throw Error(ErrorCode::PreconditionViolated, "eigenvector residual");
        if (out.embedding.sign(out.lambda[i]) <= 0) {
            throw Error(ErrorCode::PreconditionViolated, "Perron eigenvector is not positive");
        }
    }
    return out;
}

JpaExpansion periodicity_roundtrip(const IntMatrix& a) {
    const auto digits = bauer_factorize(a);
    PerronData p = satz12_eigenvector(a);
    std::vector<FieldElement> theta(p.lambda.begin() + 1, p.lambda.end());
    JpaExpansion x = jpa_expand(theta, p.embedding);
    if (!x.periodic() || !matches_period(x.period, digits)) {
        throw Error(ErrorCode::RoundTripMismatch,
                    "Bauer digits " + to_string(digits) + " vs JPA period " + to_string(x.period));
    }
    return x;
}

}  // namespace heckeaf
