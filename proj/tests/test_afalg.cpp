#include "heckeaf/afalg/companion.hpp"
#include "heckeaf/afalg/dimension_group.hpp"
#include "heckeaf/afalg/export.hpp"
#include "support/bridge.hpp"

#include <doctest.h>
#include <json.hpp>

#include <random>
#include <regex>

using namespace heckeaf;

namespace {

IntPolynomial ipoly(std::vector<long> c) { return IntPolynomial(std::vector<Integer>(c.begin(), c.end())); }

std::vector<JpaDigit> digits(std::initializer_list<std::initializer_list<long>> d) {
    oracle::Digits o;
    for (auto b : d) o.emplace_back(b);
    return bridge::to_lib(o);
}

std::size_t count(const std::string& text, const std::string& pattern) {
    const std::regex re(pattern);
    return static_cast<std::size_t>(std::distance(std::sregex_iterator(text.begin(), text.end(), re), std::sregex_iterator()));
}

struct Golden {
    FieldPtr field = make_field(ipoly({-1, -1, 1}));
    Embedding embedding{field, 1};
    DimensionGroup group = dimension_group({FieldElement::generator(field)}, embedding);
};

// theta x_1 + x_2 at 256 bits.
int shadow_sign(long x1, long x2) {
    mpf_class r5(5, 256);
    r5 = sqrt(r5);
    mpf_class v = (1 + r5) / 2 * x1 + x2;
    return sgn(v);
}

}  // namespace

TEST_SUITE("stationary descriptors") {
    TEST_CASE("expansions map to the three descriptor kinds") {
        auto f = make_field(ipoly({-1, -1, 1}));
        Embedding e(f, 1);
        const auto x = FieldElement::generator(f);
        auto golden = af_from_expansion(regular_cf(x, e));
        REQUIRE(std::holds_alternative<StationaryAF>(golden));
        CHECK(std::get<StationaryAF>(golden).period_matrix == IntMatrix{{0, 1}, {1, 1}});
        CHECK(kind(golden) == "stationary");

        auto g = make_field(ipoly({-2, 0, 1}));
        Embedding eg(g, 1);
        auto root2 = af_from_expansion(regular_cf(FieldElement::generator(g), eg));
        REQUIRE(std::holds_alternative<StationaryAF>(root2));
        const auto& s = std::get<StationaryAF>(root2);
        CHECK(s.period_matrix == IntMatrix{{0, 1}, {1, 2}});
        CHECK(s.char_poly == ipoly({-1, -2, 1}));
        REQUIRE(s.perron_value);
        CHECK(s.perron_field->real_roots().size() == 2);

        auto rational = af_from_expansion(regular_cf(Rational(355, 113)));
        CHECK(std::holds_alternative<TrivialAF>(rational));
        CHECK(kind(rational) == "trivial");

        auto c = make_field(ipoly({-2, 0, 0, 1}));
        Embedding ec(c, 0);
        const auto t = FieldElement::generator(c);
        auto cut = af_from_expansion(jpa_expand({t, t * t}, ec, 2));
        REQUIRE(std::holds_alternative<BratteliDiagram>(cut));
        const auto& d = std::get<BratteliDiagram>(cut);
        CHECK(d.tail == BratteliDiagram::Tail::Truncated);
        CHECK(d.vertex_counts == std::vector<std::size_t>{3, 3, 3});
        CHECK(kind(cut) == "finite");
    }

    TEST_CASE("stationary_from_period multiplies the blocks") {
        std::mt19937_64 rng(4);
        for (int t = 0; t < 20; ++t) {
            const std::size_t n = 2 + t % 3;
            auto d = oracle::admissible_digits(rng, n, 1 + t % 4);
            if (oracle::product(d, n) == oracle::identity(n)) continue;
            auto s = stationary_from_period(bridge::to_lib(d));
            CHECK(s.period_matrix == bridge::to_lib(oracle::product(d, n)));
            CHECK(s.char_poly.to_rational() == bridge::to_lib(oracle::char_poly(oracle::product(d, n))));
        }
    }

    TEST_CASE("make_stationary preconditions") {
        CHECK_THROWS_AS(make_stationary(IntMatrix{{1, 0}, {0, 1}}), Error);
        CHECK_THROWS_AS(make_stationary(IntMatrix{{1, 1}, {1, 3}}), Error);
        CHECK_THROWS_AS(make_stationary(IntMatrix{{2, -1}, {1, 0}}), Error);
    }

    TEST_CASE("char poly is invariant under rotating the period") {
        std::mt19937_64 rng(8);
        for (int t = 0; t < 20; ++t) {
            const std::size_t n = 2 + t % 3;
            auto d = oracle::admissible_digits(rng, n, 2 + t % 3);
            auto base = oracle::char_poly(oracle::product(d, n));
            for (std::size_t r = 1; r < d.size(); ++r) {
                std::rotate(d.begin(), d.begin() + 1, d.end());
                CHECK(stationary_from_period(bridge::to_lib(d)).char_poly.to_rational() == bridge::to_lib(base));
            }
        }
    }

    TEST_CASE("diagram validation") {
        BratteliDiagram ok = diagram_from_digits(digits({{3}, {7}, {16}}), 2, BratteliDiagram::Tail::Finite);
        CHECK_NOTHROW(validate(ok));
        BratteliDiagram bad = ok;
        bad.vertex_counts.back() = 3;
        CHECK_THROWS_AS(validate(bad), Error);
        bad = ok;
        bad.matrices[0](0, 0) = -1;
        CHECK_THROWS_AS(validate(bad), Error);
    }
}

TEST_SUITE("dimension group") {
    TEST_CASE("cone membership examples") {
        Golden g;
        CHECK(g.group.rank == 2);
        CHECK(g.group.order_unit == std::vector<Integer>{0, 1});
        CHECK(cone_contains(g.group, {0, 0}));
        CHECK(cone_contains(g.group, {1, 0}));
        CHECK(cone_contains(g.group, {-1, 2}));
        CHECK_FALSE(cone_contains(g.group, {-2, 3}));
        CHECK(cone_contains(g.group, {-3, 5}));
        CHECK_FALSE(cone_contains(g.group, {-1, 1}));
        CHECK_THROWS_AS(dimension_group({-FieldElement::generator(g.field)}, g.embedding), Error);
    }

    TEST_CASE("cone agrees with a floating shadow and is a cone") {
        Golden g;
        std::mt19937_64 rng(14);
        std::uniform_int_distribution<long> d(-60, 60);
        std::uniform_int_distribution<long> k(1, 9);
        for (int t = 0; t < 500; ++t) {
            const long a1 = d(rng), a2 = d(rng), b1 = d(rng), b2 = d(rng);
            const bool a = cone_contains(g.group, {a1, a2});
            const bool b = cone_contains(g.group, {b1, b2});
            CHECK(a == (shadow_sign(a1, a2) >= 0));
            if (a && b) CHECK(cone_contains(g.group, {a1 + b1, a2 + b2}));
            const long m = k(rng);
            CHECK(cone_contains(g.group, {m * a1, m * a2}) == a);
            if (a && cone_contains(g.group, {-a1, -a2})) CHECK((a1 == 0 && a2 == 0));
        }
    }
}

TEST_SUITE("companion") {
    TEST_CASE("verdicts") {
        auto r = companion_check(IntMatrix{{0, 2}, {1, 0}}, IntMatrix{{0, 1}, {2, 0}});
        CHECK(r.verdict == CompanionVerdict::SimilarOverQ);
        REQUIRE(r.conjugator);
        CHECK(abs(determinant(*r.conjugator)) == 1);
        CHECK(*r.conjugator * IntMatrix{{0, 2}, {1, 0}} == IntMatrix{{0, 1}, {2, 0}} * *r.conjugator);

        CHECK(companion_check(IntMatrix{{1, 1}, {0, 1}}, IntMatrix{{1, 0}, {0, 1}}).verdict == CompanionVerdict::Companion);
        CHECK(companion_check(IntMatrix{{0, 1}, {1, 1}}, IntMatrix{{0, 1}, {1, 2}}).verdict ==
              CompanionVerdict::DistinctCharPoly);
        CHECK(to_string(CompanionVerdict::SimilarOverQ) == "similar_over_Q");
    }

    TEST_CASE("Z-inequivalent but Q-similar matrices stay undetermined") {
        // x^2 - 10 has class number 2: the companion matrix and the matrix of
        // the non-principal ideal (2, sqrt10) are similar over Q only.
        auto r = companion_check(IntMatrix{{0, 10}, {1, 0}}, IntMatrix{{0, 5}, {2, 0}}, {3, false});
        CHECK(r.verdict == CompanionVerdict::UndeterminedZSimilarity);
        CHECK_FALSE(r.conjugator);
    }

    TEST_CASE("verdict is symmetric and never Companion with itself") {
        std::mt19937_64 rng(21);
        for (int t = 0; t < 15; ++t) {
            const std::size_t n = 2 + t % 2;
            auto a = bridge::to_lib(oracle::product(oracle::admissible_digits(rng, n, 2), n));
            auto u = oracle::random_unimodular(rng, n, 4);
            auto ui = bridge::to_lib(u);
            auto b = inverse_unimodular(ui) * a * ui;
            CompanionOptions opts{4, false};
            auto ab = companion_check(a, b, opts);
            auto ba = companion_check(b, a, opts);
            CHECK(ab.verdict == ba.verdict);
            CHECK(ab.verdict != CompanionVerdict::Companion);
            CHECK(ab.verdict != CompanionVerdict::DistinctCharPoly);
            CHECK(companion_check(a, a, opts).verdict == CompanionVerdict::SimilarOverQ);
        }
    }

    TEST_CASE("determinantal divisors") {
        auto d = determinantal_divisors(IntMatrix{{1, 0}, {0, 1}});
        REQUIRE(d.size() == 2);
        CHECK(d[0] == Polynomial({Rational(-1), Rational(1)}));
        CHECK(d[1] == Polynomial({Rational(1), Rational(-2), Rational(1)}));
        auto c = determinantal_divisors(IntMatrix{{1, 1}, {0, 1}});
        CHECK(c[0] == Polynomial::constant(Rational(1)));
    }
}

TEST_SUITE("export") {
    TEST_CASE("finite diagram of 355/113 in DOT") {
        BratteliDiagram d = diagram_from_digits(digits({{3}, {7}, {16}}), 2, BratteliDiagram::Tail::Finite);
        CHECK(d.vertex_counts.size() == 4);
        const std::string dot = export_bratteli(d, ExportFormat::Dot);
        CHECK(dot.rfind("digraph bratteli {", 0) == 0);
        CHECK(count(dot, "rank=same") == 4);
        std::size_t edges = 0;
        for (const auto& m : d.matrices)
            for (std::size_t i = 0; i < m.rows(); ++i)
                for (std::size_t j = 0; j < m.cols(); ++j) edges += m(i, j).get_ui();
        CHECK(count(dot, "v\\d+_\\d+ -> v") == edges);
    }

    TEST_CASE("stationary DOT is unrolled and annotated") {
        auto s = make_stationary(IntMatrix{{0, 1}, {1, 1}}, digits({{1}}));
        const std::string dot = export_bratteli(s, ExportFormat::Dot, 3);
        CHECK(count(dot, "rank=same") == 3);
        CHECK(count(dot, "v\\d+_\\d+ -> v") == 6);
        CHECK(dot.find("period [(1)]") != std::string::npos);
    }

    TEST_CASE("JSON export round trips and keeps integers as strings") {
        auto t = nlohmann::json::parse(export_bratteli(TrivialAF{}, ExportFormat::Json));
        CHECK(t == nlohmann::json{{"type", "trivial"}});

        std::vector<AFDescriptor> all{TrivialAF{}, make_stationary(IntMatrix{{0, 1, 3}, {0, 0, 1}, {1, 1, 3}}, digits({{0, 1}, {0, 3}})),
                                      diagram_from_digits(digits({{1, 2}, {0, 0}, {3, 1}}), 3, BratteliDiagram::Tail::Truncated)};
        for (const auto& d : all) {
            const std::string text = export_bratteli(d, ExportFormat::Json);
            CHECK(import_bratteli_json(text) == d);
            CHECK(count(text, ":\\s*\\d") == 0);
        }
    }

    TEST_CASE("import rejects inconsistent documents") {
        auto j = nlohmann::json::parse(export_bratteli(make_stationary(IntMatrix{{0, 1}, {1, 1}}, digits({{1}})), ExportFormat::Json));
        j["period"] = nlohmann::json::array({nlohmann::json::array({"2"})});
        CHECK_THROWS_AS(import_bratteli_json(j.dump()), Error);
        CHECK_THROWS_AS(import_bratteli_json("{\"type\":\"cyclic\"}"), Error);
        CHECK_THROWS_AS(parse_export_format("svg"), Error);
        CHECK(parse_export_format("dot") == ExportFormat::Dot);
    }
}
