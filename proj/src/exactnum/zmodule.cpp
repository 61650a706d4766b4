#include "heckeaf/exactnum/zmodule.hpp"

#include "heckeaf/exactnum/lattice.hpp"

namespace heckeaf {

namespace {

Integer common_denominator(const RatMatrix& m) {
    Integer d = 1;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) d = lcm(d, m(i, j).get_den());
    }
    return d;
}

// Row HNF of a full-rank rational generator matrix, scaled canonically.
std::pair<IntMatrix, Integer> canonical_lattice(const RatMatrix& gens, std::size_t n) {
    Integer d = common_denominator(gens);
    IntMatrix scaled(gens.rows(), gens.cols());
    for (std::size_t i = 0; i < gens.rows(); ++i) {
        for (std::size_t j = 0; j < gens.cols(); ++j) scaled(i, j) = Rational(gens(i, j) * d).get_num();
    }
    IntMatrix h = hermite_form(scaled).h;
    if (h.rows() != n) {
        throw Error(ErrorCode::NotFullRank, "generators span rank " + std::to_string(h.rows()) + " < " +
                                                std::to_string(n));
    }
    Integer g = d;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), h(i, j).get_mpz_t());
        }
    }
    if (g != 1) {
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) h(i, j) /= g;
        }
        d /= g;
    }
    return {std::move(h), std::move(d)};
}

// Dual lattice for the standard pairing on coordinate vectors: rows of the
// inverse transpose of a basis matrix.
RatMatrix dual_basis(const RatMatrix& basis) { return inverse(basis).transpose(); }

}  // namespace

ZModule ZModule::from_generators(const std::vector<FieldElement>& gens) {
    if (gens.empty()) throw Error(ErrorCode::NotFullRank, "no generators");
    FieldPtr field = gens.front().field();
    const auto n = static_cast<std::size_t>(field->degree());
    RatMatrix g(gens.size(), n);
    for (std::size_t i = 0; i < gens.size(); ++i) {
        require_same_field(gens.front(), gens[i]);
        for (std::size_t j = 0; j < n; ++j) g(i, j) = gens[i].coords()[j];
    }
    auto [h, d] = canonical_lattice(g, n);
    ZModule m;
    m.field_ = std::move(field);
    m.hnf_ = std::move(h);
    m.denominator_ = std::move(d);
    return m;
}

RatMatrix ZModule::basis_matrix() const {
    RatMatrix b = to_rational(hnf_);
    const Rational inv = Rational(1) / Rational(denominator_);
    return scale(inv, b);
}

std::vector<FieldElement> ZModule::basis() const {
    RatMatrix b = basis_matrix();
    std::vector<FieldElement> out;
    out.reserve(b.rows());
    for (std::size_t i = 0; i < b.rows(); ++i) out.emplace_back(field_, b.row(i));
    return out;
}

std::optional<std::vector<Integer>> ZModule::coordinates(const FieldElement& a) const {
    require_same_field(a, FieldElement::zero(field_));
    const std::size_t n = hnf_.rows();
    // Scaled target t = d * a must be an integer combination of HNF rows.
    std::vector<Rational> t(n);
    for (std::size_t j = 0; j < n; ++j) t[j] = a.coords()[j] * denominator_;
    std::vector<Integer> x(n);
    // Pivots of a full-rank square HNF sit on the diagonal.
    for (std::size_t c = 0; c < n; ++c) {
        Rational q = t[c] / Rational(hnf_(c, c));
        if (!is_integer(q)) return std::nullopt;
        x[c] = q.get_num();
        for (std::size_t j = c; j < n; ++j) t[j] -= x[c] * hnf_(c, j);
    }
    return x;
}

bool ZModule::is_stable_under(const FieldElement& a) const {
    for (const auto& b : basis()) {
        if (!contains(a * b)) return false;
    }
    return true;
}

bool operator==(const ZModule& a, const ZModule& b) {
    if (a.field_ != b.field_ && !same_field(*a.field_, *b.field_)) return false;
    return a.denominator_ == b.denominator_ && a.hnf_ == b.hnf_;
}

OrderRing::OrderRing(ZModule module) : module_(std::move(module)) {
    const FieldElement one = FieldElement::one(module_.field());
    if (!module_.contains(one)) throw Error(ErrorCode::PreconditionViolated, "order must contain 1");
    const auto b = module_.basis();
    for (const auto& x : b) {
        for (const auto& y : b) {
            if (!module_.contains(x * y)) {
                throw Error(ErrorCode::PreconditionViolated, "module is not closed under multiplication");
            }
        }
    }
}

OrderRing endomorphism_ring(const ZModule& m) {
    const auto basis = m.basis();
    const std::size_t n = basis.size();
    // alpha m in m  <=>  alpha in mu_i^{-1} m for every basis element mu_i.
    // The intersection of the lattices L_i is the dual of the sum of duals.
    std::vector<FieldElement> dual_gens;
    for (const auto& mu : basis) {
        const FieldElement inv = mu.inverse();
        std::vector<FieldElement> gens;
        gens.reserve(n);
        for (const auto& nu : basis) gens.push_back(inv * nu);
        RatMatrix li = ZModule::from_generators(gens).basis_matrix();
        RatMatrix dual = dual_basis(li);
        for (std::size_t r = 0; r < n; ++r) dual_gens.emplace_back(m.field(), dual.row(r));
    }
    RatMatrix sum = ZModule::from_generators(dual_gens).basis_matrix();
    RatMatrix end = dual_basis(sum);
    std::vector<FieldElement> gens;
    for (std::size_t r = 0; r < n; ++r) gens.emplace_back(m.field(), end.row(r));
    return OrderRing(ZModule::from_generators(gens));
}

ZModule apply_basis_change(const ZModule& m, const IntMatrix& u) {
    RatMatrix b = to_rational(u) * m.basis_matrix();
    std::vector<FieldElement> gens;
    for (std::size_t r = 0; r < b.rows(); ++r) gens.emplace_back(m.field(), b.row(r));
    return ZModule::from_generators(gens);
}

}  // namespace heckeaf
