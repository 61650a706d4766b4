#pragma once

#include "heckeaf/afalg/af.hpp"
#include "heckeaf/afalg/companion.hpp"
#include "heckeaf/exactnum/units.hpp"
#include "heckeaf/hecke/newform.hpp"

#include <optional>
#include <string>

namespace heckeaf {

/// How the non-negative period matrix was reached.
enum class FormRoute {
    NonnegativeSearch,  // bounded search over powers and basis changes of the unit action
    JpaPeriod,          // exact JPA period of a starting basis found by the sweep
};

std::string_view to_string(FormRoute r) noexcept;

struct PipelineOptions {
    UnitSearchOptions unit;
    bool parallel = true;
    std::size_t max_jpa_steps = 2000;
};

/// Everything the construction produced, stage by stage. Stages after the
/// module are empty for a rational eigenform.
struct EigenformAFResult {
    FieldPtr field;
    std::size_t embedding_index = 0;
    ZModule module;
    std::optional<OrderRing> order;
    std::optional<UnitElement> fundamental_unit;  // output of find_unit
    std::optional<UnitElement> unit;              // unit whose action is A'
    std::optional<IntMatrix> unit_matrix;         // A = action of `unit` on the module basis
    std::optional<NonnegativeForm> form;          // A' = T^-1 A^k T
    std::optional<FormRoute> route;
    std::optional<JpaExpansion> expansion;        // JPA of theta from T^-1 mu
    std::vector<JpaDigit> bauer_digits;
    std::optional<IntPolynomial> unit_power_poly;  // field polynomial of unit^k
    AFDescriptor af;
};

/// Degree 1 gives TrivialAF; otherwise module, order, unit, non-negative
/// form, Bauer factorization and a JPA round trip. Errors from each stage
/// propagate unchanged.
EigenformAFResult af_of_eigenform(const NewformData& f, const PipelineOptions& opts = {});

struct ConjugateRun {
    std::size_t root_index = 0;
    EigenformAFResult result;
    /// tau(m) == m for the automorphism tau onto this embedding, when known.
    std::optional<bool> module_galois_stable;
};

struct ConjugatePair {
    std::size_t first = 0;   // indices into runs
    std::size_t second = 0;
    CompanionResult result;
};

struct CompanionReport {
    std::vector<ConjugateRun> runs;
    std::vector<ConjugatePair> pairs;
    bool char_polys_equal = true;
};

/// Empty report for degree 1.
CompanionReport companion_of_conjugates(const NewformData& f, const PipelineOptions& opts = {});

}  // namespace heckeaf
