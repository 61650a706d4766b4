#pragma once

#include "heckeaf/exactnum/number_field.hpp"

#include <optional>
#include <vector>

namespace heckeaf {

/// Full-rank Z-module inside a number field. Stored as (1/denominator) times
/// the row span of an integer matrix in Hermite normal form, with
/// gcd(denominator, entries) = 1, so equal modules have identical data.
class ZModule {
public:
    /// Throws NotFullRank when the generators span less than rank n.
    static ZModule from_generators(const std::vector<FieldElement>& gens);

    const FieldPtr& field() const noexcept { return field_; }
    std::size_t rank() const noexcept { return hnf_.rows(); }
    const IntMatrix& hnf() const noexcept { return hnf_; }
    const Integer& denominator() const noexcept { return denominator_; }

    /// Canonical basis elements (rows of hnf / denominator).
    std::vector<FieldElement> basis() const;
    /// Rows are the power-basis coordinates of the canonical basis.
    RatMatrix basis_matrix() const;
    /// Integer coordinates of a in the canonical basis, if a lies in the module.
    std::optional<std::vector<Integer>> coordinates(const FieldElement& a) const;
    bool contains(const FieldElement& a) const { return coordinates(a).has_value(); }
    /// True when a * m is contained in m.
    bool is_stable_under(const FieldElement& a) const;

    friend bool operator==(const ZModule& a, const ZModule& b);

private:
    FieldPtr field_;
    IntMatrix hnf_;
    Integer denominator_;
};

/// A ZModule that contains 1 and is closed under multiplication.
class OrderRing {
public:
    /// Throws PreconditionViolated unless the module is a ring with 1.
    explicit OrderRing(ZModule module);

    const ZModule& module() const noexcept { return module_; }
    const FieldPtr& field() const noexcept { return module_.field(); }
    bool contains(const FieldElement& a) const { return module_.contains(a); }

private:
    ZModule module_;
};

/// {alpha : alpha m in m}, as the intersection of the lattices mu_i^{-1} m.
OrderRing endomorphism_ring(const ZModule& m);

/// Module generated by the images of the basis under a unimodular change.
ZModule apply_basis_change(const ZModule& m, const IntMatrix& u);

}  // namespace heckeaf
