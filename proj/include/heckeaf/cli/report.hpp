#pragma once

#include "heckeaf/hecke/pipeline.hpp"

#include <json.hpp>

#include <map>
#include <optional>
#include <string>

namespace heckeaf::cli {

inline constexpr std::string_view kReportSchema = "heckeaf/run-report";
inline constexpr std::string_view kReportSchemaVersion = "1";
inline constexpr std::string_view kToolVersion = "0.1.0";

struct ErrorInfo {
    std::string code;
    std::string message;
    std::optional<std::pair<std::size_t, std::size_t>> relation;  // HeckeRelationViolated
    std::optional<std::string> witness;                           // ModuleNotStable

    friend bool operator==(const ErrorInfo&, const ErrorInfo&) = default;
};

struct VerificationSummary {
    std::size_t max_prime = 13;
    bool passed = true;
    std::optional<std::pair<std::size_t, std::size_t>> first_failure;

    friend bool operator==(const VerificationSummary&, const VerificationSummary&) = default;
};

/// Serializable image of an EigenformAFResult.
struct PipelineSummary {
    std::string af_type;
    IntMatrix module_hnf;
    Integer module_denominator;
    std::optional<std::vector<Rational>> fundamental_unit;
    std::optional<std::vector<Rational>> unit;
    std::optional<int> unit_norm;
    std::optional<IntMatrix> unit_matrix;
    std::optional<IntMatrix> period_matrix;
    std::optional<IntMatrix> basis_change;
    std::optional<unsigned> k;
    std::optional<std::string> route;
    std::vector<JpaDigit> preperiod;
    std::vector<JpaDigit> period;
    std::vector<JpaDigit> bauer_digits;
    std::optional<IntPolynomial> char_poly;
    std::optional<IntPolynomial> unit_power_poly;

    friend bool operator==(const PipelineSummary&, const PipelineSummary&) = default;
};

struct ConjugateSummary {
    std::size_t root_index = 0;
    PipelineSummary pipeline;
    std::optional<bool> module_galois_stable;

    friend bool operator==(const ConjugateSummary&, const ConjugateSummary&) = default;
};

struct PairSummary {
    std::size_t first = 0;
    std::size_t second = 0;
    std::string verdict;
    std::optional<IntMatrix> conjugator;

    friend bool operator==(const PairSummary&, const PairSummary&) = default;
};

struct CompanionSummary {
    std::vector<ConjugateSummary> conjugates;
    std::vector<PairSummary> pairs;
    bool char_polys_equal = true;

    friend bool operator==(const CompanionSummary&, const CompanionSummary&) = default;
};

struct RunReport {
    std::string tool_version{kToolVersion};
    std::string status = "ok";  // "ok" or "error"
    std::string label;
    long level = 0;
    std::optional<IntPolynomial> field_poly;
    std::optional<std::size_t> embedding_index;
    std::optional<ErrorInfo> error;
    std::optional<VerificationSummary> verification;
    std::optional<PipelineSummary> pipeline;
    std::optional<CompanionSummary> companion;
    std::map<std::string, double> timings_ms;

    friend bool operator==(const RunReport&, const RunReport&) = default;
};

PipelineSummary summarize(const EigenformAFResult& r);
CompanionSummary summarize(const CompanionReport& r);
ErrorInfo describe(const Error& e);

/// Timings are omitted when include_timings is false, which makes the output
/// a deterministic function of the inputs.
nlohmann::json report_to_json(const RunReport& r, bool include_timings = true);
/// Throws SchemaError.
RunReport report_from_json(const nlohmann::json& j);

}  // namespace heckeaf::cli
