#pragma once

#include "heckeaf/exactnum/zmodule.hpp"

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace heckeaf {

/// Normalized weight-2 eigenform on Gamma_0(N), given by its first M Fourier
/// coefficients as elements of the coefficient field.
struct NewformData {
    std::string label;
    long level = 1;
    long weight = 2;
    FieldPtr field;
    std::vector<FieldElement> coeffs;  // coeffs[m - 1] = c(m)
    std::optional<std::vector<FieldElement>> module_gens;
    std::optional<std::size_t> embedding_index;  // ascending real roots

    std::size_t length() const noexcept { return coeffs.size(); }
    /// c(m) for 1 <= m <= length(); throws InsufficientCoefficients.
    const FieldElement& c(std::size_t m) const;
    /// The chosen real root, defaulting to the largest one.
    std::size_t base_embedding() const;
};

/// Raised for a failed multiplicativity or prime-power relation. For the
/// prime-power recursion (m, n) = (p, p^r).
class HeckeRelationError : public Error {
public:
    HeckeRelationError(std::size_t m, std::size_t n, const std::string& what)
        : Error(ErrorCode::HeckeRelationViolated, what), m_(m), n_(n) {}
    std::size_t m() const noexcept { return m_; }
    std::size_t n() const noexcept { return n_; }

private:
    std::size_t m_;
    std::size_t n_;
};

class ModuleNotStableError : public Error {
public:
    ModuleNotStableError(FieldElement witness, const std::string& what)
        : Error(ErrorCode::ModuleNotStable, what), witness_(std::move(witness)) {}
    const FieldElement& witness() const noexcept { return witness_; }

private:
    FieldElement witness_;
};

/// Reads the fixture JSON without checking any Hecke relation. Throws
/// SchemaError (including bad field polynomials) or NotNormalized.
NewformData parse_newform(std::string_view json_text);

/// Weight 2, c(1) = 1, c(m)c(n) = c(mn) for coprime m, n and
/// c(p^(r+1)) = c(p)c(p^r) - p c(p^(r-1)) for p not dividing N.
void check_hecke_relations(const NewformData& f);

/// parse_newform followed by check_hecke_relations.
NewformData load_newform(std::string_view json_text);
NewformData load_newform_file(const std::filesystem::path& path);

/// gamma(m) = sum over a | gcd(m, n) with gcd(a, N) = 1 of a c(mn / a^2),
/// for m = 1..count. count defaults to length / n.
std::vector<FieldElement> hecke_apply(std::size_t n, const std::vector<FieldElement>& coeffs, long level,
                                      std::optional<std::size_t> count = {});

struct PrimeCheck {
    std::size_t p = 0;
    std::size_t compared = 0;  // gamma(m) = c(p) c(m) was tested for m <= compared
    std::optional<std::size_t> first_failure;
    bool passed() const noexcept { return !first_failure; }
};

struct EigenformReport {
    std::vector<PrimeCheck> primes;
    bool passed() const noexcept;
    /// (p, m) of the first failure in prime order.
    std::optional<std::pair<std::size_t, std::size_t>> first_failure() const;
};

/// Requires length >= P^2 (InsufficientCoefficients).
EigenformReport verify_eigenform(const NewformData& f, std::size_t max_prime);

/// Throws NotGenerated unless some coefficient is a primitive element.
FieldPtr coefficient_field(const NewformData& f);

struct Conjugate {
    std::size_t root_index = 0;
    NewformData form;  // same coefficient table, embedded through root_index
    /// tau(x) for the field automorphism carrying the base root to this one.
    std::optional<FieldElement> automorphism;
};

struct ConjugateFamily {
    std::vector<Conjugate> conjugates;  // base embedding first
};

/// Throws NotTotallyReal.
ConjugateFamily conjugate_family(const NewformData& f);

/// Images tau(x) of the generator under field automorphisms, keyed by the
/// index of the root tau sends the `from` root to. Roots without an
/// automorphism are absent.
std::vector<std::pair<std::size_t, FieldElement>> field_automorphisms(const FieldPtr& field, std::size_t from);

/// Applies the automorphism with tau(x) = image.
FieldElement apply_automorphism(const FieldElement& a, const FieldElement& image);

/// Z-span of 1, g, ..., g^(n-1) for g = c(2), or the first primitive c(p)
/// when c(2) does not generate; the fixture's "module" overrides both.
ZModule module_of_eigenform(const NewformData& f);

/// c(n) after checking c(n) m in m. Throws ModuleNotStableError.
FieldElement hecke_action_on_module(const NewformData& f, const ZModule& m, std::size_t n);

}  // namespace heckeaf
