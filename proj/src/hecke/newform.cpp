#include "heckeaf/hecke/newform.hpp"

#include "heckeaf/io/json_codec.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>

namespace heckeaf {

namespace {

bool is_prime(std::size_t n) {
    if (n < 2) return false;
    for (std::size_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

// p^r = n with r >= 1, or 0 when n is not a prime power.
std::size_t prime_base(std::size_t n) {
    for (std::size_t p = 2; p <= n; ++p) {
        if (n % p != 0) continue;
        while (n % p == 0) n /= p;
        return n == 1 ? p : 0;
    }
    return 0;
}

FieldElement eval_poly_at(const IntPolynomial& p, const FieldElement& g) {
    FieldElement acc = FieldElement::zero(g.field());
    for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) {
        acc = acc * g + FieldElement::rational(g.field(), Rational(*it));
    }
    return acc;
}

}  // namespace

const FieldElement& NewformData::c(std::size_t m) const {
    if (m == 0 || m > coeffs.size()) {
        throw Error(ErrorCode::InsufficientCoefficients,
                    "c(" + std::to_string(m) + ") requested, table has " + std::to_string(coeffs.size()));
    }
    return coeffs[m - 1];
}

std::size_t NewformData::base_embedding() const {
    if (embedding_index) return *embedding_index;
    const auto& roots = field->real_roots();
    return roots.empty() ? 0 : roots.size() - 1;
}

NewformData parse_newform(std::string_view json_text) {
    using io::member;
    io::json j;
    try {
        j = io::json::parse(json_text);
    } catch (const io::json::exception& e) {
        throw Error(ErrorCode::SchemaError, e.what());
    }
    NewformData f;
    const auto& label = member(j, "label");
    if (!label.is_string()) throw Error(ErrorCode::SchemaError, "label must be a string");
    f.label = label.get<std::string>();
    f.level = io::integer_from_json(member(j, "level")).get_si();
    f.weight = io::integer_from_json(member(j, "weight")).get_si();
    if (f.level < 1) throw Error(ErrorCode::SchemaError, "level must be positive");
    if (f.weight != 2) throw Error(ErrorCode::SchemaError, "only weight 2 is supported, got " + std::to_string(f.weight));

    IntPolynomial poly = io::polynomial_from_json(member(j, "field_poly"));
    try {
        f.field = make_field(poly);
    } catch (const Error& e) {
        throw Error(ErrorCode::SchemaError, std::string("field_poly: ") + e.what());
    }
    const auto& an = member(j, "an");
    if (!an.is_array() || an.empty()) throw Error(ErrorCode::SchemaError, "an must be a non-empty array");
    for (const auto& entry : an) {
        f.coeffs.push_back(entry.is_array() ? io::element_from_json(f.field, entry)
                                            : FieldElement::rational(f.field, io::rational_from_json(entry)));
    }
    if (j.contains("module")) {
        std::vector<FieldElement> gens;
        for (const auto& g : j.at("module")) gens.push_back(io::element_from_json(f.field, g));
        f.module_gens = std::move(gens);
    }
    if (j.contains("embedding_index")) {
        auto idx = io::integer_from_json(j.at("embedding_index"));
        if (idx < 0 || idx >= static_cast<long>(f.field->real_roots().size())) {
            throw Error(ErrorCode::SchemaError, "embedding_index out of range");
        }
        f.embedding_index = idx.get_ui();
    }
    if (f.c(1) != FieldElement::one(f.field)) {
        throw Error(ErrorCode::NotNormalized, "c(1) = " + f.c(1).to_string() + ", expected 1");
    }
    return f;
}

void check_hecke_relations(const NewformData& f) {
    if (f.weight != 2) throw Error(ErrorCode::SchemaError, "weight must be 2");
    if (f.c(1) != FieldElement::one(f.field)) throw Error(ErrorCode::NotNormalized, "c(1) != 1");
    const std::size_t len = f.length();
    for (std::size_t k = 2; k <= len; ++k) {
        for (std::size_t m = 2; m * m < k; ++m) {
            if (k % m != 0) continue;
            const std::size_t n = k / m;
            if (std::gcd(m, n) != 1) continue;
            if (f.c(m) * f.c(n) != f.c(k)) {
                throw HeckeRelationError(m, n,
                                         "c(" + std::to_string(m) + ")c(" + std::to_string(n) + ") != c(" +
                                             std::to_string(k) + ")");
            }
        }
        const std::size_t p = prime_base(k);
        if (p == 0 || p == k || f.level % static_cast<long>(p) == 0) continue;
        const std::size_t pr = k / p;
        const FieldElement expected = f.c(p) * f.c(pr) - Rational(static_cast<long>(p)) * f.c(pr / p);
        if (expected != f.c(k)) {
            throw HeckeRelationError(p, pr,
                                     "c(" + std::to_string(k) + ") violates the recursion at p = " + std::to_string(p));
        }
    }
}

NewformData load_newform(std::string_view json_text) {
    NewformData f = parse_newform(json_text);
    check_hecke_relations(f);
    return f;
}

NewformData load_newform_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::SchemaError, "cannot read " + path.string());
    std::stringstream ss;
    ss << in.rdbuf();
    return load_newform(ss.str());
}

std::vector<FieldElement> hecke_apply(std::size_t n, const std::vector<FieldElement>& coeffs, long level,
                                      std::optional<std::size_t> count) {
    if (n == 0) throw Error(ErrorCode::PreconditionViolated, "n must be positive");
    const std::size_t len = coeffs.size();
    const std::size_t want = count.value_or(len / n);
    if (want == 0 || want * n > len) {
        throw Error(ErrorCode::InsufficientCoefficients,
                    "T_" + std::to_string(n) + " needs " + std::to_string(std::max<std::size_t>(want, 1) * n) +
                        " coefficients, have " + std::to_string(len));
    }
    std::vector<FieldElement> gamma;
    gamma.reserve(want);
    for (std::size_t m = 1; m <= want; ++m) {
        const std::size_t g = std::gcd(m, n);
        FieldElement acc = FieldElement::zero(coeffs.front().field());
        for (std::size_t a = 1; a <= g; ++a) {
            if (g % a != 0 || std::gcd<long, long>(static_cast<long>(a), level) != 1) continue;
            acc = acc + Rational(static_cast<long>(a)) * coeffs[m * n / (a * a) - 1];
        }
        gamma.push_back(std::move(acc));
    }
    return gamma;
}

bool EigenformReport::passed() const noexcept {
    return std::all_of(primes.begin(), primes.end(), [](const PrimeCheck& c) { return c.passed(); });
}

std::optional<std::pair<std::size_t, std::size_t>> EigenformReport::first_failure() const {
    for (const auto& c : primes) {
        if (c.first_failure) return std::make_pair(c.p, *c.first_failure);
    }
    return std::nullopt;
}

EigenformReport verify_eigenform(const NewformData& f, std::size_t max_prime) {
    if (f.length() < max_prime * max_prime) {
        throw Error(ErrorCode::InsufficientCoefficients, "verification to p = " + std::to_string(max_prime) +
                                                             " needs " + std::to_string(max_prime * max_prime) +
                                                             " coefficients");
    }
    EigenformReport report;
    for (std::size_t p = 2; p <= max_prime; ++p) {
        if (!is_prime(p)) continue;
        PrimeCheck check;
        check.p = p;
        const auto gamma = hecke_apply(p, f.coeffs, f.level);
        check.compared = gamma.size();
        for (std::size_t m = 1; m <= gamma.size(); ++m) {
            if (gamma[m - 1] != f.c(p) * f.c(m)) {
                check.first_failure = m;
                break;
            }
        }
        report.primes.push_back(check);
    }
    return report;
}

FieldPtr coefficient_field(const NewformData& f) {
    if (f.field->degree() == 1) return f.field;
    for (const auto& c : f.coeffs) {
        if (c.is_primitive()) return f.field;
    }
    throw Error(ErrorCode::NotGenerated, "no listed coefficient generates the field " + f.field->minpoly().to_string());
}

FieldElement apply_automorphism(const FieldElement& a, const FieldElement& image) {
    FieldElement acc = FieldElement::zero(a.field());
    const auto& c = a.coords();
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * image + FieldElement::rational(a.field(), *it);
    return acc;
}

std::vector<std::pair<std::size_t, FieldElement>> field_automorphisms(const FieldPtr& field, std::size_t from) {
    const std::size_t n = static_cast<std::size_t>(field->degree());
    const std::size_t r = field->real_roots().size();
    std::vector<std::pair<std::size_t, FieldElement>> out;
    if (n == 1) {
        out.emplace_back(0, FieldElement::generator(field));
        return out;
    }
    if (r != n) return out;
    std::vector<long double> roots;
    for (std::size_t i = 0; i < n; ++i) {
        Embedding e(field, i);
        auto iv = e.eval(FieldElement::generator(field), Rational(1, 1000000000));
        roots.push_back(static_cast<long double>(Rational((iv.lo + iv.hi) / 2).get_d()));
    }
    // Solve sum_k c_k r_j^k = r_perm(j) for each permutation with perm(from) = to,
    // then recognise the c_k as rationals and verify exactly.
    std::vector<std::size_t> perm(n);
    for (std::size_t to = 0; to < n; ++to) {
        std::iota(perm.begin(), perm.end(), 0);
        bool found = false;
        do {
            if (perm[from] != to) continue;
            std::vector<std::vector<long double>> a(n, std::vector<long double>(n + 1));
            for (std::size_t j = 0; j < n; ++j) {
                long double pw = 1;
                for (std::size_t k = 0; k < n; ++k, pw *= roots[j]) a[j][k] = pw;
                a[j][n] = roots[perm[j]];
            }
            for (std::size_t col = 0; col < n; ++col) {
                std::size_t piv = col;
                for (std::size_t row = col + 1; row < n; ++row) {
                    if (std::fabs(a[row][col]) > std::fabs(a[piv][col])) piv = row;
                }
                std::swap(a[col], a[piv]);
                for (std::size_t row = 0; row < n; ++row) {
                    if (row == col) continue;
                    const long double fct = a[row][col] / a[col][col];
                    for (std::size_t k = col; k <= n; ++k) a[row][k] -= fct * a[col][k];
                }
            }
            std::vector<long double> coef(n);
            for (std::size_t k = 0; k < n; ++k) coef[k] = a[k][n] / a[k][k];
            for (long d = 1; d <= 1000 && !found; ++d) {
                std::vector<Rational> q;
                bool close = true;
                for (auto ck : coef) {
                    const long double scaled = ck * d;
                    const long double rounded = std::round(scaled);
                    if (std::fabs(scaled - rounded) > 1e-6L * d) {
                        close = false;
                        break;
                    }
                    q.emplace_back(Integer(std::to_string(static_cast<long long>(rounded))), Integer(d));
                }
                if (!close) continue;
                for (auto& x : q) x.canonicalize();
                FieldElement image(field, q);
                if (!eval_poly_at(field->minpoly(), image).is_zero()) continue;
                Embedding e(field, from);
                Embedding target(field, to);
                // sigma_from(tau(x)) must be the `to` root.
                auto iv = e.eval(image, Rational(1, 1000000));
                auto root = target.eval(FieldElement::generator(field), Rational(1, 1000000));
                if (iv.hi < root.lo || root.hi < iv.lo) continue;
                out.emplace_back(to, std::move(image));
                found = true;
            }
        } while (!found && std::next_permutation(perm.begin(), perm.end()));
    }
    return out;
}

ConjugateFamily conjugate_family(const NewformData& f) {
    if (!f.field->totally_real()) {
        throw Error(ErrorCode::NotTotallyReal, f.field->minpoly().to_string() + " has non-real roots");
    }
    const std::size_t base = f.base_embedding();
    const auto autos = field_automorphisms(f.field, base);
    ConjugateFamily family;
    std::vector<std::size_t> order{base};
    for (std::size_t i = 0; i < f.field->real_roots().size(); ++i) {
        if (i != base) order.push_back(i);
    }
    for (std::size_t i : order) {
        Conjugate c;
        c.root_index = i;
        c.form = f;
        c.form.embedding_index = i;
        for (const auto& [to, image] : autos) {
            if (to == i) c.automorphism = image;
        }
        family.conjugates.push_back(std::move(c));
    }
    return family;
}

ZModule module_of_eigenform(const NewformData& f) {
    if (f.module_gens) return ZModule::from_generators(*f.module_gens);
    const int n = f.field->degree();
    if (n == 1) return ZModule::from_generators({FieldElement::one(f.field)});
    std::optional<FieldElement> g;
    for (std::size_t p = 2; p <= f.length() && !g; ++p) {
        if (is_prime(p) && f.c(p).is_primitive()) g = f.c(p);
    }
    if (!g) throw Error(ErrorCode::NotFullRank, "no prime-indexed coefficient generates the field");
    std::vector<FieldElement> gens{FieldElement::one(f.field)};
    for (int i = 1; i < n; ++i) gens.push_back(gens.back() * *g);
    return ZModule::from_generators(gens);
}

FieldElement hecke_action_on_module(const NewformData& f, const ZModule& m, std::size_t n) {
    const FieldElement& cn = f.c(n);
    for (const auto& mu : m.basis()) {
        FieldElement image = cn * mu;
        if (!m.contains(image)) {
            throw ModuleNotStableError(image, "c(" + std::to_string(n) + ") * " + mu.to_string() + " = " +
                                                  image.to_string() + " is not in the module");
        }
    }
    return cn;
}

}  // namespace heckeaf
