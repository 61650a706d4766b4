#include "heckeaf/cli/report.hpp"

#include "heckeaf/io/json_codec.hpp"

#include <charconv>

namespace heckeaf::cli {

using nlohmann::json;

namespace {

json rationals(const std::vector<Rational>& v) {
    json a = json::array();
    for (const auto& q : v) a.push_back(io::to_json(q));
    return a;
}

std::vector<Rational> rationals_from(const json& j) {
    if (!j.is_array()) throw Error(ErrorCode::SchemaError, "expected an array of rationals");
    std::vector<Rational> out;
    for (const auto& x : j) out.push_back(io::rational_from_json(x));
    return out;
}

std::string index_string(std::size_t i) { return std::to_string(i); }

std::size_t index_from(const json& j) {
    Integer z = io::integer_from_json(j);
    if (z < 0) throw Error(ErrorCode::SchemaError, "negative index");
    return z.get_ui();
}

json pair_json(const std::pair<std::size_t, std::size_t>& p) {
    return json::array({index_string(p.first), index_string(p.second)});
}

std::pair<std::size_t, std::size_t> pair_from(const json& j) {
    if (!j.is_array() || j.size() != 2) throw Error(ErrorCode::SchemaError, "expected a pair");
    return {index_from(j[0]), index_from(j[1])};
}

std::string double_string(double x) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, res.ptr);
}

double double_from(const json& j) {
    if (!j.is_string()) throw Error(ErrorCode::SchemaError, "timing must be a string");
    const auto s = j.get<std::string>();
    double x = 0;
    auto res = std::from_chars(s.data(), s.data() + s.size(), x);
    if (res.ec != std::errc() || res.ptr != s.data() + s.size()) throw Error(ErrorCode::SchemaError, "bad timing " + s);
    return x;
}

bool bool_from(const json& j) {
    if (!j.is_boolean()) throw Error(ErrorCode::SchemaError, "expected a boolean");
    return j.get<bool>();
}

std::string string_from(const json& j) {
    if (!j.is_string()) throw Error(ErrorCode::SchemaError, "expected a string");
    return j.get<std::string>();
}

template <class T, class F>
void put(json& out, const char* key, const std::optional<T>& v, F&& conv) {
    if (v) out[key] = conv(*v);
}

template <class T, class F>
std::optional<T> get(const json& j, const char* key, F&& conv) {
    if (!j.contains(key)) return std::nullopt;
    return conv(j.at(key));
}

json pipeline_json(const PipelineSummary& p) {
    json out;
    out["af_type"] = p.af_type;
    out["module"] = {{"hnf", io::to_json(p.module_hnf)}, {"denominator", io::to_json(p.module_denominator)}};
    put(out, "fundamental_unit", p.fundamental_unit, rationals);
    put(out, "unit", p.unit, rationals);
    put(out, "unit_norm", p.unit_norm, [](int n) { return std::to_string(n); });
    auto mat = [](const IntMatrix& m) { return io::to_json(m); };
    put(out, "unit_matrix", p.unit_matrix, mat);
    put(out, "period_matrix", p.period_matrix, mat);
    put(out, "basis_change", p.basis_change, mat);
    put(out, "k", p.k, [](unsigned k) { return std::to_string(k); });
    put(out, "route", p.route, [](const std::string& s) { return s; });
    out["preperiod"] = io::to_json(p.preperiod);
    out["period"] = io::to_json(p.period);
    out["bauer_digits"] = io::to_json(p.bauer_digits);
    auto poly = [](const IntPolynomial& q) { return io::to_json(q); };
    put(out, "char_poly", p.char_poly, poly);
    put(out, "unit_power_poly", p.unit_power_poly, poly);
    return out;
}

PipelineSummary pipeline_from(const json& j) {
    using io::member;
    PipelineSummary p;
    p.af_type = string_from(member(j, "af_type"));
    const auto& m = member(j, "module");
    p.module_hnf = io::matrix_from_json(member(m, "hnf"));
    p.module_denominator = io::integer_from_json(member(m, "denominator"));
    p.fundamental_unit = get<std::vector<Rational>>(j, "fundamental_unit", rationals_from);
    p.unit = get<std::vector<Rational>>(j, "unit", rationals_from);
    p.unit_norm = get<int>(j, "unit_norm", [](const json& x) { return static_cast<int>(io::integer_from_json(x).get_si()); });
    p.unit_matrix = get<IntMatrix>(j, "unit_matrix", io::matrix_from_json);
    p.period_matrix = get<IntMatrix>(j, "period_matrix", io::matrix_from_json);
    p.basis_change = get<IntMatrix>(j, "basis_change", io::matrix_from_json);
    p.k = get<unsigned>(j, "k", [](const json& x) { return static_cast<unsigned>(index_from(x)); });
    p.route = get<std::string>(j, "route", string_from);
    p.preperiod = io::digits_from_json(member(j, "preperiod"));
    p.period = io::digits_from_json(member(j, "period"));
    p.bauer_digits = io::digits_from_json(member(j, "bauer_digits"));
    p.char_poly = get<IntPolynomial>(j, "char_poly", io::polynomial_from_json);
    p.unit_power_poly = get<IntPolynomial>(j, "unit_power_poly", io::polynomial_from_json);
    return p;
}

json companion_json(const CompanionSummary& c) {
    json out;
    json conj = json::array();
    for (const auto& s : c.conjugates) {
        json e;
        e["root_index"] = index_string(s.root_index);
        e["pipeline"] = pipeline_json(s.pipeline);
        put(e, "module_galois_stable", s.module_galois_stable, [](bool b) { return b; });
        conj.push_back(std::move(e));
    }
    out["conjugates"] = std::move(conj);
    json pairs = json::array();
    for (const auto& p : c.pairs) {
        json e;
        e["pair"] = pair_json({p.first, p.second});
        e["verdict"] = p.verdict;
        put(e, "conjugator", p.conjugator, [](const IntMatrix& m) { return io::to_json(m); });
        pairs.push_back(std::move(e));
    }
    out["pairs"] = std::move(pairs);
    out["char_polys_equal"] = c.char_polys_equal;
    return out;
}

CompanionSummary companion_from(const json& j) {
    using io::member;
    CompanionSummary c;
    for (const auto& e : member(j, "conjugates")) {
        ConjugateSummary s;
        s.root_index = index_from(member(e, "root_index"));
        s.pipeline = pipeline_from(member(e, "pipeline"));
        s.module_galois_stable = get<bool>(e, "module_galois_stable", bool_from);
        c.conjugates.push_back(std::move(s));
    }
    for (const auto& e : member(j, "pairs")) {
        PairSummary p;
        std::tie(p.first, p.second) = pair_from(member(e, "pair"));
        p.verdict = string_from(member(e, "verdict"));
        p.conjugator = get<IntMatrix>(e, "conjugator", io::matrix_from_json);
        c.pairs.push_back(std::move(p));
    }
    c.char_polys_equal = bool_from(member(j, "char_polys_equal"));
    return c;
}

}  // namespace

PipelineSummary summarize(const EigenformAFResult& r) {
    PipelineSummary p;
    p.af_type = std::string(kind(r.af));
    p.module_hnf = r.module.hnf();
    p.module_denominator = r.module.denominator();
    if (r.fundamental_unit) p.fundamental_unit = r.fundamental_unit->element.coords();
    if (r.unit) {
        p.unit = r.unit->element.coords();
        p.unit_norm = r.unit->norm;
    }
    p.unit_matrix = r.unit_matrix;
    if (r.form) {
        p.period_matrix = r.form->matrix;
        p.basis_change = r.form->t;
        p.k = r.form->k;
    }
    if (r.route) p.route = std::string(to_string(*r.route));
    if (r.expansion) {
        p.preperiod = r.expansion->preperiod;
        p.period = r.expansion->period;
    }
    p.bauer_digits = r.bauer_digits;
    if (const auto* s = std::get_if<StationaryAF>(&r.af)) p.char_poly = s->char_poly;
    p.unit_power_poly = r.unit_power_poly;
    return p;
}

CompanionSummary summarize(const CompanionReport& r) {
    CompanionSummary c;
    for (const auto& run : r.runs) c.conjugates.push_back({run.root_index, summarize(run.result), run.module_galois_stable});
    for (const auto& p : r.pairs) {
        c.pairs.push_back({p.first, p.second, std::string(to_string(p.result.verdict)), p.result.conjugator});
    }
    c.char_polys_equal = r.char_polys_equal;
    return c;
}

ErrorInfo describe(const Error& e) {
    ErrorInfo info;
    info.code = std::string(to_string(e.code()));
    info.message = e.what();
    if (const auto* h = dynamic_cast<const HeckeRelationError*>(&e)) info.relation = std::make_pair(h->m(), h->n());
    if (const auto* s = dynamic_cast<const ModuleNotStableError*>(&e)) info.witness = s->witness().to_string();
    return info;
}

json report_to_json(const RunReport& r, bool include_timings) {
    json out;
    out["schema"] = std::string(kReportSchema);
    out["schema_version"] = std::string(kReportSchemaVersion);
    out["tool_version"] = r.tool_version;
    out["status"] = r.status;
    out["label"] = r.label;
    out["level"] = std::to_string(r.level);
    put(out, "field_poly", r.field_poly, [](const IntPolynomial& p) { return io::to_json(p); });
    put(out, "embedding_index", r.embedding_index, index_string);
    if (r.error) {
        json e{{"code", r.error->code}, {"message", r.error->message}};
        put(e, "relation", r.error->relation, pair_json);
        put(e, "witness", r.error->witness, [](const std::string& s) { return s; });
        out["error"] = std::move(e);
    }
    if (r.verification) {
        json v{{"max_prime", index_string(r.verification->max_prime)}, {"passed", r.verification->passed}};
        put(v, "first_failure", r.verification->first_failure, pair_json);
        out["verification"] = std::move(v);
    }
    put(out, "pipeline", r.pipeline, pipeline_json);
    put(out, "companion", r.companion, companion_json);
    if (include_timings) {
        json t = json::object();
        for (const auto& [k, v] : r.timings_ms) t[k] = double_string(v);
        out["timings_ms"] = std::move(t);
    }
    return out;
}

RunReport report_from_json(const json& j) {
    using io::member;
    if (string_from(member(j, "schema")) != kReportSchema) throw Error(ErrorCode::SchemaError, "not a run report");
    if (string_from(member(j, "schema_version")) != kReportSchemaVersion) {
        throw Error(ErrorCode::SchemaError, "unsupported report version");
    }
    RunReport r;
    r.tool_version = string_from(member(j, "tool_version"));
    r.status = string_from(member(j, "status"));
    if (r.status != "ok" && r.status != "error") throw Error(ErrorCode::SchemaError, "bad status " + r.status);
    r.label = string_from(member(j, "label"));
    r.level = io::integer_from_json(member(j, "level")).get_si();
    r.field_poly = get<IntPolynomial>(j, "field_poly", io::polynomial_from_json);
    r.embedding_index = get<std::size_t>(j, "embedding_index", index_from);
    if (j.contains("error")) {
        const auto& e = j.at("error");
        ErrorInfo info;
        info.code = string_from(member(e, "code"));
        info.message = string_from(member(e, "message"));
        info.relation = get<std::pair<std::size_t, std::size_t>>(e, "relation", pair_from);
        info.witness = get<std::string>(e, "witness", string_from);
        r.error = std::move(info);
    }
    if (j.contains("verification")) {
        const auto& v = j.at("verification");
        VerificationSummary s;
        s.max_prime = index_from(member(v, "max_prime"));
        s.passed = bool_from(member(v, "passed"));
        s.first_failure = get<std::pair<std::size_t, std::size_t>>(v, "first_failure", pair_from);
        r.verification = s;
    }
    r.pipeline = get<PipelineSummary>(j, "pipeline", pipeline_from);
    r.companion = get<CompanionSummary>(j, "companion", companion_from);
    if (j.contains("timings_ms")) {
        for (const auto& [k, v] : j.at("timings_ms").items()) r.timings_ms[k] = double_from(v);
    }
    return r;
}

}  // namespace heckeaf::cli
