#include "heckeaf/afalg/af.hpp"

#include "heckeaf/exactnum/irreducibility.hpp"

namespace heckeaf {

void validate(const BratteliDiagram& d) {
    if (d.vertex_counts.size() != d.matrices.size() + 1) {
        throw Error(ErrorCode::ShapeMismatch, "a diagram with k matrices needs k + 1 levels");
    }
    for (std::size_t i = 0; i < d.matrices.size(); ++i) {
        const IntMatrix& m = d.matrices[i];
        if (m.rows() != d.vertex_counts[i + 1] || m.cols() != d.vertex_counts[i]) {
            throw Error(ErrorCode::ShapeMismatch, "matrix " + std::to_string(i) + " has the wrong shape");
        }
        if (!is_nonnegative(m)) throw Error(ErrorCode::PreconditionViolated, "negative edge multiplicity");
    }
}

BratteliDiagram diagram_from_digits(const std::vector<JpaDigit>& digits, std::size_t n,
                                    BratteliDiagram::Tail tail) {
    BratteliDiagram d;
    d.tail = tail;
    d.vertex_counts.assign(digits.size() + 1, n);
    for (const auto& b : digits) {
        if (b.size() + 1 != n) throw Error(ErrorCode::ShapeMismatch, "digit length does not match dimension");
        d.matrices.push_back(jpa_block(b));
    }
    return d;
}

StationaryAF make_stationary(const IntMatrix& b, std::vector<JpaDigit> period) {
    if (!b.is_square()) throw Error(ErrorCode::ShapeMismatch, "period matrix must be square");
    if (b.is_identity()) throw Error(ErrorCode::PreconditionViolated, "the identity is not a stationary period");
    if (!is_nonnegative(b)) throw Error(ErrorCode::PreconditionViolated, "period matrix has negative entries");
    Integer det = determinant(b);
    if (det != 1 && det != -1) throw Error(ErrorCode::PreconditionViolated, "period matrix is not unimodular");
    StationaryAF s;
    s.period_matrix = b;
    s.char_poly = characteristic_polynomial(b);
    s.period = std::move(period);
    if (is_irreducible(s.char_poly)) {
        s.perron_field = make_field(s.char_poly);
        if (!s.perron_field->real_roots().empty()) s.perron_value = FieldElement::generator(s.perron_field);
    }
    return s;
}

StationaryAF stationary_from_period(const std::vector<JpaDigit>& period) {
    if (period.empty()) throw Error(ErrorCode::PreconditionViolated, "empty period");
    return make_stationary(convergent_matrix(period, period.front().size() + 1), period);
}

AFDescriptor af_from_expansion(const JpaExpansion& x) {
    if (x.periodic()) return stationary_from_period(x.period);
    if (x.terminated && x.rational_rank == 1) return TrivialAF{};
    return diagram_from_digits(x.preperiod, x.dimension,
                               x.terminated ? BratteliDiagram::Tail::Finite : BratteliDiagram::Tail::Truncated);
}

std::string_view kind(const AFDescriptor& d) {
    switch (d.index()) {
        case 0: return "trivial";
        case 1: return "finite";
        default: return "stationary";
    }
}

}  // namespace heckeaf
