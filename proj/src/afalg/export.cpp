#include "heckeaf/afalg/export.hpp"

#include "heckeaf/io/json_codec.hpp"

#include <sstream>

namespace heckeaf {

ExportFormat parse_export_format(std::string_view s) {
    if (s == "dot") return ExportFormat::Dot;
    if (s == "json") return ExportFormat::Json;
    throw Error(ErrorCode::ParseError, "unknown export format '" + std::string(s) + "'");
}

namespace {

constexpr long kMaxParallelEdges = 32;

void dot_levels(std::ostringstream& os, const std::vector<std::size_t>& counts, const std::vector<IntMatrix>& mats) {
    for (std::size_t level = 0; level < counts.size(); ++level) {
        os << "  { rank=same;";
        for (std::size_t v = 0; v < counts[level]; ++v) os << " v" << level << "_" << v << ";";
        os << " }\n";
    }
    for (std::size_t level = 0; level < mats.size(); ++level) {
        const IntMatrix& m = mats[level];
        for (std::size_t r = 0; r < m.rows(); ++r) {
            for (std::size_t s = 0; s < m.cols(); ++s) {
                const Integer& b = m(r, s);
                if (b == 0) continue;
                const std::string edge = "  v" + std::to_string(level) + "_" + std::to_string(s) + " -> v" +
                                         std::to_string(level + 1) + "_" + std::to_string(r);
                if (b <= kMaxParallelEdges) {
                    for (long k = 0; k < b.get_si(); ++k) os << edge << ";\n";
                } else {
                    os << edge << " [label=\"" << b.get_str() << "\"];\n";
                }
            }
        }
    }
}

std::string to_dot(const AFDescriptor& d, std::size_t levels) {
    std::ostringstream os;
    os << "digraph bratteli {\n  rankdir=TB;\n  node [shape=circle, label=\"\", width=0.15];\n";
    if (std::holds_alternative<TrivialAF>(d)) {
        os << "  label=\"trivial: C\";\n  { rank=same; v0_0; }\n";
    } else if (const auto* f = std::get_if<BratteliDiagram>(&d)) {
        os << "  label=\"" << (f->tail == BratteliDiagram::Tail::Finite ? "finite" : "truncated prefix") << "\";\n";
        dot_levels(os, f->vertex_counts, f->matrices);
    } else {
        const auto& s = std::get<StationaryAF>(d);
        os << "  label=\"stationary: B = " << to_string(s.period_matrix);
        if (!s.period.empty()) os << ", period " << to_string(s.period);
        os << "\";\n";
        const std::size_t n = s.period_matrix.rows();
        std::vector<std::size_t> counts(levels, n);
        std::vector<IntMatrix> mats(levels > 0 ? levels - 1 : 0, s.period_matrix);
        dot_levels(os, counts, mats);
        if (levels > 0) {
            os << "  more [shape=plaintext, label=\"...\"];\n";
            for (std::size_t v = 0; v < n; ++v) os << "  v" << levels - 1 << "_" << v << " -> more [style=dotted];\n";
        }
    }
    os << "}\n";
    return os.str();
}

}  // namespace

std::string export_bratteli(const AFDescriptor& d, ExportFormat format, std::size_t levels) {
    if (format == ExportFormat::Dot) return to_dot(d, levels);
    return io::descriptor_to_json(d, levels).dump(2) + "\n";
}

AFDescriptor import_bratteli_json(std::string_view text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::SchemaError, e.what());
    }
    return io::descriptor_from_json(j);
}

}  // namespace heckeaf
