#include "heckeaf/cli/commands.hpp"

#include "heckeaf/afalg/export.hpp"
#include "heckeaf/cli/report.hpp"
#include "heckeaf/io/json_codec.hpp"
#include "heckeaf/mcf/bauer.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace heckeaf::cli {

bool is_input_error(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::SchemaError:
        case ErrorCode::ParseError:
        case ErrorCode::NotNormalized:
        case ErrorCode::HeckeRelationViolated:
        case ErrorCode::NotMonic:
        case ErrorCode::ReduciblePolynomial:
        case ErrorCode::NotSquarefree:
            return true;
        default:
            return false;
    }
}

namespace {

int domain_exit(const Error& e) { return is_input_error(e.code()) ? kInputError : kDomainError; }

FieldPtr field_from_text(const std::string& text) {
    const Polynomial p = parse_polynomial(text);
    for (const auto& c : p.coeffs()) {
        if (!is_integer(c)) throw Error(ErrorCode::ParseError, "polynomial must have integer coefficients");
    }
    return make_field(IntPolynomial::from_rational(p));
}

std::size_t root_or_largest(const FieldPtr& field, long root) {
    const auto count = static_cast<long>(field->real_roots().size());
    if (count == 0) throw Error(ErrorCode::PreconditionViolated, "polynomial has no real roots");
    if (root < 0) return static_cast<std::size_t>(count - 1);
    if (root >= count) {
        throw Error(ErrorCode::PreconditionViolated,
                    "root index " + std::to_string(root) + " out of range, polynomial has " + std::to_string(count) +
                        " real roots");
    }
    return static_cast<std::size_t>(root);
}

std::string integers(const std::vector<JpaDigit>& ds) {
    std::string s = "[";
    for (std::size_t i = 0; i < ds.size(); ++i) s += (i ? ", " : "") + ds[i].front().get_str();
    return s + "]";
}

std::string describe_expansion(const JpaExpansion& x, bool scalar) {
    auto list = [&](const std::vector<JpaDigit>& ds) { return scalar ? integers(ds) : to_string(ds); };
    if (x.terminated) return list(x.preperiod) + " (terminating)";
    if (x.periodic()) return "preperiod " + list(x.preperiod) + ", period " + list(x.period);
    return "no period detected within " + std::to_string(x.steps) + " steps";
}

void convergents_table(const JpaExpansion& x, std::ostream& out, std::size_t rows = 10) {
    std::vector<Integer> terms;
    for (const auto& d : x.preperiod) terms.push_back(d.front());
    for (std::size_t i = 0; x.periodic() && terms.size() < rows; ++i) terms.push_back(x.period[i % x.period.size()].front());
    if (terms.size() > rows) terms.resize(rows);
    out << std::left << std::setw(4) << "k" << std::setw(8) << "a_k" << "p_k/q_k\n";
    Integer p_prev = 1, p = terms.front(), q_prev = 0, q = 1;
    for (std::size_t k = 0; k < terms.size(); ++k) {
        if (k > 0) {
            Integer pn = terms[k] * p + p_prev;
            Integer qn = terms[k] * q + q_prev;
            p_prev = p;
            q_prev = q;
            p = pn;
            q = qn;
        }
        out << std::setw(4) << k << std::setw(8) << terms[k].get_str() << p.get_str() << "/" << q.get_str() << "\n";
    }
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream f(path);
    if (!f) throw Error(ErrorCode::PreconditionViolated, "cannot write " + path);
    f << text;
}

// Label, level and the failing prime check of a fixture that parses but
// does not load. Best effort: anything unreadable leaves the report as is.
void describe_rejected_fixture(const std::string& path, RunReport& report) {
    std::ifstream in(path);
    if (!in) return;
    std::stringstream text;
    text << in.rdbuf();
    try {
        const NewformData f = parse_newform(text.str());
        report.label = f.label;
        report.level = f.level;
        report.field_poly = f.field->minpoly();
        const std::size_t max_prime = f.length() >= 169 ? 13 : 2;
        const auto check = verify_eigenform(f, max_prime);
        report.verification = VerificationSummary{max_prime, check.passed(), check.first_failure()};
    } catch (const Error&) {
    }
}

struct ExportArgs {
    std::vector<std::string> values;  // format [path]
    std::size_t levels = 5;
};

void maybe_export(const ExportArgs& ex, const AFDescriptor& d, std::ostream& out) {
    if (ex.values.empty()) return;
    const std::string text = export_bratteli(d, parse_export_format(ex.values.front()), ex.levels);
    if (ex.values.size() > 1) {
        write_text(ex.values[1], text);
        out << "wrote " << ex.values[1] << "\n";
    } else {
        out << text;
    }
}

int cmd_cf(const std::string& x, const std::string& poly, long root, std::size_t max_steps, std::ostream& out) {
    JpaExpansion e;
    if (poly.empty()) {
        if (x.empty()) throw Error(ErrorCode::ParseError, "cf needs a rational or --poly");
        const Rational q = parse_rational(x);
        if (q <= 0) throw Error(ErrorCode::PreconditionViolated, "cf input must be positive, got " + to_string(q));
        e = regular_cf(q, max_steps);
    } else {
        FieldPtr field = field_from_text(poly);
        Embedding emb(field, root_or_largest(field, root));
        FieldElement value = x.empty() ? FieldElement::generator(field) : parse_element(field, x);
        if (emb.sign(value) <= 0) throw Error(ErrorCode::PreconditionViolated, "cf input must be positive");
        if (value.is_rational()) {
            e = regular_cf(value.constant(), max_steps);
        } else {
            e = regular_cf(value, emb, max_steps);
        }
    }
    out << describe_expansion(e, true) << "\n";
    convergents_table(e, out);
    return kOk;
}

int cmd_jpa(const std::vector<std::string>& theta_text, const std::string& poly, long root, std::size_t max_steps,
            const ExportArgs& ex, std::ostream& out) {
    FieldPtr field = field_from_text(poly);
    Embedding emb(field, root_or_largest(field, root));
    std::vector<FieldElement> theta;
    for (const auto& t : theta_text) theta.push_back(parse_element(field, t));
    if (theta.empty()) theta.push_back(FieldElement::generator(field));
    const JpaExpansion x = jpa_expand(theta, emb, max_steps);
    out << describe_expansion(x, false) << "\n";
    maybe_export(ex, af_from_expansion(x), out);
    return kOk;
}

int cmd_factor(const std::string& text, std::ostream& out, std::ostream& err) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::ParseError, e.what());
    }
    const IntMatrix a = io::matrix_from_json(j);
    try {
        const auto digits = bauer_factorize(a);
        if (convergent_matrix(digits, a.rows()) != a) {
            throw Error(ErrorCode::RoundTripMismatch, "product of the blocks differs from the input");
        }
        out << to_string(digits) << "\n";
        return kOk;
    } catch (const FactorizationError& e) {
        err << "error: " << e.what() << "\npartial factorization " << to_string(e.partial()) << "\nremainder "
            << to_string(e.remainder()) << "\n";
        return kDomainError;
    }
}

double ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

struct AfArgs {
    std::string fixture;
    bool conjugates = false;
    std::string report_path;
    bool no_timings = false;
    bool serial = false;
    ExportArgs ex;
};

void print_pipeline(const PipelineSummary& p, std::ostream& out) {
    out << "type: " << p.af_type << "\n";
    if (p.af_type != "stationary") return;
    out << "route: " << p.route.value_or("") << "\n";
    out << "period matrix: " << to_string(*p.period_matrix) << " (k = " << *p.k << ")\n";
    out << "period digits: " << to_string(p.bauer_digits) << "\n";
    out << "char poly: " << p.char_poly->to_string() << "\n";
}

int cmd_af(const AfArgs& a, std::ostream& out, std::ostream& err) {
    RunReport report;
    int code = kOk;
    const auto t0 = std::chrono::steady_clock::now();
    try {
        const NewformData f = load_newform_file(a.fixture);
        report.timings_ms["load"] = ms_since(t0);
        report.label = f.label;
        report.level = f.level;
        report.field_poly = f.field->minpoly();
        report.embedding_index = f.base_embedding();

        auto t1 = std::chrono::steady_clock::now();
        const std::size_t max_prime = f.length() >= 169 ? 13 : 2;
        const auto check = verify_eigenform(f, max_prime);
        report.verification = VerificationSummary{max_prime, check.passed(), check.first_failure()};
        report.timings_ms["verify"] = ms_since(t1);

        PipelineOptions opts;
        opts.parallel = !a.serial;
        opts.unit.parallel = !a.serial;
        t1 = std::chrono::steady_clock::now();
        const EigenformAFResult result = af_of_eigenform(f, opts);
        report.pipeline = summarize(result);
        report.timings_ms["pipeline"] = ms_since(t1);
        print_pipeline(*report.pipeline, out);

        if (a.conjugates) {
            t1 = std::chrono::steady_clock::now();
            report.companion = summarize(companion_of_conjugates(f, opts));
            report.timings_ms["conjugates"] = ms_since(t1);
            for (const auto& c : report.companion->conjugates) {
                out << "conjugate root " << c.root_index << ": char poly "
                    << (c.pipeline.char_poly ? c.pipeline.char_poly->to_string() : "-") << "\n";
            }
            for (const auto& p : report.companion->pairs) {
                out << "pair (" << p.first << ", " << p.second << "): " << p.verdict << "\n";
            }
            out << "char polys equal: " << (report.companion->char_polys_equal ? "yes" : "no") << "\n";
        }
        maybe_export(a.ex, result.af, out);
    } catch (const Error& e) {
        report.status = "error";
        report.error = describe(e);
        code = is_input_error(e.code()) ? kInputError : kPipelineError;
        err << "error: " << e.what() << "\n";
        if (e.code() == ErrorCode::HeckeRelationViolated && report.label.empty()) {
            describe_rejected_fixture(a.fixture, report);
        }
    }
    if (!a.report_path.empty()) {
        write_text(a.report_path, report_to_json(report, !a.no_timings).dump(2) + "\n");
    }
    return code;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Stationary AF-algebras from Hecke eigenforms and Jacobi-Perron expansions", "heckeaf"};
    app.require_subcommand(1);

    std::string cf_x, cf_poly;
    long cf_root = -1;
    std::size_t cf_steps = kDefaultMaxSteps;
    auto* cf = app.add_subcommand("cf", "regular continued fraction of a positive rational or real algebraic number");
    cf->add_option("x", cf_x, "p/q, or power-basis coordinates c0,c1,... with --poly");
    cf->add_option("--poly", cf_poly, "defining polynomial; without x the root itself is expanded");
    cf->add_option("--root", cf_root, "0-based index of the real root in ascending order (default: largest)");
    cf->add_option("--max-steps", cf_steps, "step budget")->check(CLI::PositiveNumber);

    std::vector<std::string> jpa_theta;
    std::string jpa_poly;
    long jpa_root = -1;
    std::size_t jpa_steps = kDefaultMaxSteps;
    ExportArgs jpa_export;
    auto* jpa = app.add_subcommand("jpa", "Jacobi-Perron expansion of theta in a real number field");
    jpa->add_option("theta", jpa_theta, "coordinates of each theta_i as c0,c1,...");
    jpa->add_option("--poly", jpa_poly, "defining polynomial")->required();
    jpa->add_option("--root", jpa_root, "0-based index of the real root in ascending order (default: largest)");
    jpa->add_option("--max-steps", jpa_steps, "step budget")->check(CLI::PositiveNumber);
    jpa->add_option("--export", jpa_export.values, "dot|json [path]")->expected(1, 2);
    jpa->add_option("--levels", jpa_export.levels, "levels drawn for stationary diagrams");

    std::string factor_matrix;
    auto* factor = app.add_subcommand("factor", "Bauer factorization of a non-negative unimodular matrix");
    factor->add_option("matrix", factor_matrix, "JSON rows, e.g. [[0,1],[1,1]]")->required();

    AfArgs af_args;
    auto* af = app.add_subcommand("af", "stationary AF-algebra of a newform fixture");
    af->add_option("fixture", af_args.fixture, "newform fixture JSON")->required();
    af->add_flag("--conjugates", af_args.conjugates, "also run every conjugate and compare");
    af->add_option("--report", af_args.report_path, "write the run report here");
    af->add_flag("--no-timings", af_args.no_timings, "omit timings from the report");
    af->add_flag("--serial", af_args.serial, "use the serial reference kernels");
    af->add_option("--export", af_args.ex.values, "dot|json [path]")->expected(1, 2);
    af->add_option("--levels", af_args.ex.levels, "levels drawn for stationary diagrams");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    }

    try {
        if (cf->parsed()) return cmd_cf(cf_x, cf_poly, cf_root, cf_steps, out);
        if (jpa->parsed()) return cmd_jpa(jpa_theta, jpa_poly, jpa_root, jpa_steps, jpa_export, out);
        if (factor->parsed()) return cmd_factor(factor_matrix, out, err);
        if (af->parsed()) return cmd_af(af_args, out, err);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return domain_exit(e);
    }
    return kInputError;
}

}  // namespace heckeaf::cli
