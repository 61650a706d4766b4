#include "heckeaf/afalg/dimension_group.hpp"

namespace heckeaf {

DimensionGroup dimension_group(const std::vector<FieldElement>& theta, const Embedding& e) {
    DimensionGroup g;
    g.rank = theta.size() + 1;
    g.theta = theta;
    g.embedding = e;
    for (const auto& t : theta) {
        if (g.embedding.sign(t) <= 0) throw Error(ErrorCode::PreconditionViolated, "cone functional needs theta > 0");
    }
    g.order_unit.assign(g.rank, 0);
    g.order_unit.back() = 1;
    return g;
}

FieldElement cone_functional(const DimensionGroup& g, const std::vector<Integer>& x) {
    if (x.size() != g.rank) throw Error(ErrorCode::ShapeMismatch, "vector length does not match the group rank");
    FieldElement v = FieldElement::rational(g.embedding.field(), Rational(x.back()));
    for (std::size_t i = 0; i + 1 < g.rank; ++i) {
        if (x[i] != 0) v = v + Rational(x[i]) * g.theta[i];
    }
    return v;
}

bool cone_contains(const DimensionGroup& g, const std::vector<Integer>& x) {
    FieldElement v = cone_functional(g, x);
    if (v.is_zero()) return true;
    Embedding e = g.embedding;
    return e.sign(v) > 0;
}

}  // namespace heckeaf
