#include "heckeaf/io/json_codec.hpp"

namespace heckeaf::io {

namespace {

[[noreturn]] void schema(const std::string& what) { throw Error(ErrorCode::SchemaError, what); }

const json& expect_array(const json& j, const char* what) {
    if (!j.is_array()) schema(std::string(what) + " must be an array");
    return j;
}

}  // namespace

const json& member(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) schema(std::string("missing field '") + key + "'");
    return j.at(key);
}

json to_json(const Integer& z) { return z.get_str(); }

json to_json(const Rational& q) { return heckeaf::to_string(q); }

json to_json(const IntMatrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

json to_json(const IntPolynomial& p) {
    json a = json::array();
    for (const auto& c : p.coeffs()) a.push_back(to_json(c));
    return a;
}

json to_json(const FieldElement& a) {
    json out = json::array();
    for (const auto& c : a.coords()) out.push_back(to_json(c));
    return out;
}

json to_json(const JpaDigit& d) {
    json out = json::array();
    for (const auto& b : d) out.push_back(to_json(b));
    return out;
}

json to_json(const std::vector<JpaDigit>& ds) {
    json out = json::array();
    for (const auto& d : ds) out.push_back(to_json(d));
    return out;
}

Integer integer_from_json(const json& j) {
    try {
        if (j.is_string()) return parse_integer(j.get<std::string>());
        if (j.is_number_integer()) return Integer(std::to_string(j.get<long long>()));
    } catch (const Error& e) {
        schema(e.what());
    }
    schema("expected an integer, got " + j.dump());
}

Rational rational_from_json(const json& j) {
    try {
        if (j.is_string()) return parse_rational(j.get<std::string>());
        if (j.is_number_integer()) return Rational(Integer(std::to_string(j.get<long long>())));
    } catch (const Error& e) {
        schema(e.what());
    }
    schema("expected a rational, got " + j.dump());
}

IntMatrix matrix_from_json(const json& j) {
    expect_array(j, "matrix");
    std::vector<std::vector<Integer>> rows;
    for (const auto& r : j) {
        expect_array(r, "matrix row");
        std::vector<Integer> row;
        for (const auto& x : r) row.push_back(integer_from_json(x));
        rows.push_back(std::move(row));
    }
    try {
        return IntMatrix::from_rows(rows);
    } catch (const Error& e) {
        schema(e.what());
    }
}

IntPolynomial polynomial_from_json(const json& j) {
    expect_array(j, "polynomial");
    std::vector<Integer> c;
    for (const auto& x : j) c.push_back(integer_from_json(x));
    return IntPolynomial(std::move(c));
}

std::vector<JpaDigit> digits_from_json(const json& j) {
    expect_array(j, "digit list");
    std::vector<JpaDigit> out;
    for (const auto& d : j) {
        expect_array(d, "digit");
        JpaDigit digit;
        for (const auto& b : d) digit.push_back(integer_from_json(b));
        out.push_back(std::move(digit));
    }
    return out;
}

FieldElement element_from_json(const FieldPtr& field, const json& j) {
    expect_array(j, "field element");
    std::vector<Rational> c;
    for (const auto& x : j) c.push_back(rational_from_json(x));
    if (c.size() > static_cast<std::size_t>(field->degree())) schema("field element has too many coordinates");
    return FieldElement(field, std::move(c));
}

json descriptor_to_json(const AFDescriptor& d, std::size_t levels) {
    json out;
    out["type"] = std::string(kind(d));
    if (const auto* f = std::get_if<BratteliDiagram>(&d)) {
        out["tail"] = f->tail == BratteliDiagram::Tail::Finite ? "finite" : "truncated";
        json counts = json::array();
        for (auto c : f->vertex_counts) counts.push_back(std::to_string(c));
        out["vertex_counts"] = counts;
        json mats = json::array();
        for (const auto& m : f->matrices) mats.push_back(to_json(m));
        out["matrices"] = mats;
    } else if (const auto* s = std::get_if<StationaryAF>(&d)) {
        out["matrix"] = to_json(s->period_matrix);
        out["char_poly"] = to_json(s->char_poly);
        out["period"] = to_json(s->period);
        out["levels_shown"] = std::to_string(levels);
    }
    return out;
}

AFDescriptor descriptor_from_json(const json& j) {
    const std::string type = member(j, "type").get<std::string>();
    if (type == "trivial") return TrivialAF{};
    if (type == "finite") {
        BratteliDiagram d;
        const std::string tail = member(j, "tail").get<std::string>();
        if (tail != "finite" && tail != "truncated") schema("unknown tail '" + tail + "'");
        d.tail = tail == "finite" ? BratteliDiagram::Tail::Finite : BratteliDiagram::Tail::Truncated;
        for (const auto& c : expect_array(member(j, "vertex_counts"), "vertex_counts")) {
            d.vertex_counts.push_back(integer_from_json(c).get_ui());
        }
        for (const auto& m : expect_array(member(j, "matrices"), "matrices")) d.matrices.push_back(matrix_from_json(m));
        try {
            validate(d);
        } catch (const Error& e) {
            schema(e.what());
        }
        return d;
    }
    if (type == "stationary") {
        IntMatrix b = matrix_from_json(member(j, "matrix"));
        auto period = digits_from_json(member(j, "period"));
        StationaryAF s = make_stationary(b, period);
        if (!period.empty() && convergent_matrix(period, b.rows()) != b) schema("period does not multiply to matrix");
        if (s.char_poly != polynomial_from_json(member(j, "char_poly"))) schema("char_poly does not match matrix");
        return s;
    }
    schema("unknown diagram type '" + type + "'");
}

}  // namespace heckeaf::io
