// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Every check is exact; floating values appear only as shadows.

#include "heckeaf/afalg/dimension_group.hpp"
#include "heckeaf/cli/report.hpp"
#include "heckeaf/exactnum/irreducibility.hpp"
#include "heckeaf/hecke/pipeline.hpp"
#include "heckeaf/mcf/bauer.hpp"
#include "support/bridge.hpp"

#include <chrono>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>

using namespace heckeaf;

namespace {

const std::string kData = HECKEAF_DATA_DIR;
const std::string kTestData = HECKEAF_TEST_DATA_DIR;

struct Outcome {
    bool ok = true;
    std::string detail;
};

class Checker {
public:
    void expect(bool cond, const std::string& what) {
        if (!cond && out_.ok) {
            out_.ok = false;
            out_.detail = what;
        }
    }
    bool failed() const { return !out_.ok; }
    Outcome result() const { return out_; }

private:
    Outcome out_;
};

NewformData fixture(int level) { return load_newform_file(kData + "/fixtures/newform_" + std::to_string(level) + ".json"); }

IntPolynomial ipoly(std::vector<long> c) { return IntPolynomial(std::vector<Integer>(c.begin(), c.end())); }

Outcome bauer_round_trip() {
    Checker c;
    std::mt19937_64 rng(1001);
    std::uniform_int_distribution<std::size_t> len(1, 8);
    for (int t = 0; t < 200 && !c.failed(); ++t) {
        const std::size_t n = 2 + t % 3;
        const auto d = oracle::admissible_digits(rng, n, len(rng), 5);
        const auto a = oracle::product(d, n);
        const auto lib_d = bridge::to_lib(d);
        c.expect(convergent_matrix(lib_d, n) == bridge::to_lib(a), "convergent_matrix differs from the block product");
        std::vector<JpaDigit> back;
        try {
            back = bauer_factorize(bridge::to_lib(a));
        } catch (const Error& e) {
            c.expect(false, "sample " + std::to_string(t) + ": " + e.what());
            break;
        }
        c.expect(back == lib_d, "sample " + std::to_string(t) + ": digits " + to_string(back) + " != " + to_string(lib_d));
        c.expect(bridge::to_oracle(convergent_matrix(back, n)) == a, "sample " + std::to_string(t) + ": product mismatch");
    }
    return c.result();
}

Outcome satz12() {
    Checker c;
    std::mt19937_64 rng(1002);
    std::uniform_int_distribution<std::size_t> len(1, 8);
    int done = 0;
    for (int attempt = 0; done < 50 && attempt < 5000 && !c.failed(); ++attempt) {
        const std::size_t n = 2 + attempt % 3;
        const auto d = oracle::admissible_digits(rng, n, len(rng), 5);
        if (!oracle::periodically_admissible(d, n)) continue;
        const IntMatrix a = bridge::to_lib(oracle::product(d, n));
        if (a.is_identity() || !is_irreducible(characteristic_polynomial(a))) continue;
        ++done;
        PerronData p;
        try {
            p = satz12_eigenvector(a);
        } catch (const Error& e) {
            c.expect(false, std::string("satz12_eigenvector: ") + e.what());
            break;
        }
        for (std::size_t i = 0; i < n; ++i) {
            FieldElement row = FieldElement::zero(p.field);
            for (std::size_t j = 0; j < n; ++j) row = row + Rational(a(i, j)) * p.lambda[j];
            c.expect(row == p.u * p.lambda[i], "A lambda != u lambda for " + to_string(a));
        }
        try {
            auto rt = periodicity_roundtrip(a);
            c.expect(matches_period(rt.period, bridge::to_lib(d)),
                     "round trip period " + to_string(rt.period) + " does not rotate to " + to_string(bridge::to_lib(d)));
        } catch (const Error& e) {
            c.expect(false, std::string("periodicity_roundtrip: ") + e.what());
        }
    }
    c.expect(done == 50, "only " + std::to_string(done) + " eligible matrices generated");
    return c.result();
}

std::vector<long> flat(const std::vector<JpaDigit>& ds) {
    std::vector<long> out;
    for (const auto& d : ds) out.push_back(d.front().get_si());
    return out;
}

// ~50 decimal digits.
constexpr mp_bitcnt_t kShadowBits = 170;

Outcome regular_cf_truth() {
    Checker c;
    auto quadratic = [&](std::vector<long> poly, std::vector<long> pre, std::vector<long> per, mpf_class root) {
        auto f = make_field(ipoly(poly));
        Embedding e(f, f->real_roots().size() - 1);
        auto x = regular_cf(FieldElement::generator(f), e);
        c.expect(flat(x.preperiod) == pre && flat(x.period) == per, f->minpoly().to_string() + ": " + to_string(x.digits()));
        auto shadow = oracle::shadow_cf(root, 25);
        std::vector<long> exact = flat(x.preperiod);
        while (exact.size() < shadow.size()) exact.push_back(per[(exact.size() - pre.size()) % per.size()]);
        c.expect(shadow == exact, f->minpoly().to_string() + ": shadow disagrees");
    };
    mpf_class two(2, kShadowBits), five(5, kShadowBits);
    quadratic({-2, 0, 1}, {1}, {2}, sqrt(two));
    quadratic({-1, -1, 1}, {}, {1}, (1 + sqrt(five)) / 2);

    auto r = regular_cf(Rational(355, 113));
    c.expect(r.terminated && flat(r.preperiod) == std::vector<long>{3, 7, 16}, "355/113: " + to_string(r.digits()));
    mpf_class q(355, kShadowBits);
    q /= 113;
    c.expect(oracle::shadow_cf(q, 10) == std::vector<long>{3, 7, 16}, "355/113 shadow disagrees");
    return c.result();
}

Outcome dichotomy() {
    Checker c;
    auto r11 = af_of_eigenform(fixture(11));
    c.expect(std::holds_alternative<TrivialAF>(r11.af), "level 11 is not trivial");
    auto f23 = fixture(23);
    c.expect(f23.field->minpoly() == ipoly({-1, 1, 1}), "level 23 field is not x^2 + x - 1");
    auto r = af_of_eigenform(f23);
    if (!std::holds_alternative<StationaryAF>(r.af) || !r.unit || !r.form) {
        c.expect(false, "level 23 is not stationary");
        return c.result();
    }
    const auto& s = std::get<StationaryAF>(r.af);
    FieldElement uk = FieldElement::one(f23.field);
    for (unsigned i = 0; i < r.form->k; ++i) uk = uk * r.unit->element;
    c.expect(s.char_poly.to_rational() == uk.char_poly(), "char poly is not the field polynomial of the unit power");
    c.expect(s.char_poly.to_rational() == bridge::to_lib(oracle::char_poly(bridge::to_oracle(s.period_matrix))),
             "char poly disagrees with interpolation");
    return c.result();
}

Outcome companion_claim() {
    Checker c;
    for (int level : {23, 97}) {
        auto rep = companion_of_conjugates(fixture(level));
        c.expect(rep.runs.size() >= 2, "level " + std::to_string(level) + ": fewer than two conjugates");
        c.expect(rep.char_polys_equal, "level " + std::to_string(level) + ": char polys differ");
        for (const auto& run : rep.runs) {
            const auto* s = std::get_if<StationaryAF>(&run.result.af);
            const auto* s0 = std::get_if<StationaryAF>(&rep.runs.front().result.af);
            c.expect(s && s0 && s->char_poly == s0->char_poly, "level " + std::to_string(level) + ": conjugate char poly differs");
        }
        for (const auto& p : rep.pairs)
            c.expect(p.result.verdict != CompanionVerdict::DistinctCharPoly,
                     "level " + std::to_string(level) + ": distinct_char_poly between conjugates");
    }
    return c.result();
}

std::string report_of(const NewformData& f) {
    cli::RunReport r;
    r.label = f.label;
    r.level = f.level;
    r.field_poly = f.field->minpoly();
    r.pipeline = cli::summarize(af_of_eigenform(f));
    return cli::report_to_json(r, false).dump();
}

Outcome lemma1() {
    Checker c;
    auto f = fixture(23);
    const auto canonical = module_of_eigenform(f);
    const auto basis = canonical.basis();
    const std::string base = report_of(f);
    std::mt19937_64 rng(1006);
    for (int t = 0; t < 50 && !c.failed(); ++t) {
        const auto u = oracle::random_unimodular(rng, basis.size());
        std::vector<FieldElement> gens;
        for (const auto& row : u) {
            FieldElement g = FieldElement::zero(f.field);
            for (std::size_t j = 0; j < row.size(); ++j) g = g + Rational(row[j]) * basis[j];
            gens.push_back(g);
        }
        auto g = f;
        g.module_gens = gens;
        c.expect(module_of_eigenform(g) == canonical, "canonical module changed under a basis change");
        c.expect(report_of(g) == base, "pipeline report changed under a basis change");
    }
    return c.result();
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
}

Outcome hecke_verification() {
    Checker c;
    for (int level : {11, 23, 97}) {
        auto rep = verify_eigenform(fixture(level), 13);
        c.expect(rep.passed(), "level " + std::to_string(level) + " fails verification");
    }
    const std::string text = slurp(kTestData + "/newform_11_corrupt.json");
    auto rep = verify_eigenform(parse_newform(text), 13);
    c.expect(rep.first_failure() == std::optional<std::pair<std::size_t, std::size_t>>({2, 3}),
             "corrupted fixture witness is not (2, 3)");
    try {
        load_newform(text);
        c.expect(false, "corrupted fixture loaded");
    } catch (const HeckeRelationError& e) {
        c.expect(e.m() == 2 && e.n() == 3, "relation witness is not (2, 3)");
    }
    return c.result();
}

Outcome cone() {
    Checker c;
    auto f = make_field(ipoly({-1, -1, 1}));
    Embedding e(f, 1);
    auto g = dimension_group({FieldElement::generator(f)}, e);
    mpf_class phi(5, 256);
    phi = (1 + sqrt(phi)) / 2;
    auto shadow = [&](long a, long b) { return sgn(phi * a + b) >= 0; };
    std::mt19937_64 rng(1008);
    std::uniform_int_distribution<long> d(-100, 100);
    std::uniform_int_distribution<long> k(2, 12);
    for (int t = 0; t < 500 && !c.failed(); ++t) {
        const long a1 = d(rng), a2 = d(rng), b1 = d(rng), b2 = d(rng), m = k(rng);
        const bool a = cone_contains(g, {a1, a2});
        const bool b = cone_contains(g, {b1, b2});
        c.expect(a == shadow(a1, a2), "membership disagrees with the shadow");
        if (a && b) c.expect(cone_contains(g, {a1 + b1, a2 + b2}), "not closed under addition");
        if (a) c.expect(cone_contains(g, {m * a1, m * a2}), "not closed under scaling");
        if (cone_contains(g, {m * a1, m * a2})) c.expect(a, "perforated");
        if (a && cone_contains(g, {-a1, -a2})) c.expect(a1 == 0 && a2 == 0, "cone is not proper");
    }
    return c.result();
}

}  // namespace

int main() {
    struct Criterion {
        const char* name;
        double budget_s;
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> all{
        {"bauer round trip", 10, bauer_round_trip},
        {"perron eigenvector and periodicity", 30, satz12},
        {"regular continued fractions", 1, regular_cf_truth},
        {"trivial/stationary dichotomy", 5, dichotomy},
        {"conjugates are companions", 10, companion_claim},
        {"basis-change invariance", 10, lemma1},
        {"hecke verification", 5, hecke_verification},
        {"dimension group cone", 2, cone},
    };
    int failures = 0;
    for (const auto& c : all) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (o.ok && secs > c.budget_s) o = {false, "over budget"};
        if (!o.ok) ++failures;
        std::cout << (o.ok ? "PASS " : "FAIL ") << c.name << " (" << std::fixed << std::setprecision(2) << secs << " s of "
                  << std::setprecision(0) << c.budget_s << " s)";
        if (!o.ok) std::cout << ": " << o.detail;
        std::cout << '\n';
    }
    return failures == 0 ? 0 : 1;
}
