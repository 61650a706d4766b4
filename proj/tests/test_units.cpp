#include "heckeaf/exactnum/units.hpp"
#include "support/bridge.hpp"

#include <doctest.h>

#include <cmath>
#include <set>

using namespace heckeaf;

namespace {

IntPolynomial ipoly(std::vector<long> c) { return IntPolynomial(std::vector<Integer>(c.begin(), c.end())); }

FieldElement elem(const FieldPtr& f, std::vector<long> c) {
    std::vector<Rational> q;
    for (long x : c) q.emplace_back(x);
    return FieldElement(f, q);
}

ZModule power_module(const FieldElement& g, int n) {
    std::vector<FieldElement> gens{FieldElement::one(g.field())};
    for (int i = 1; i < n; ++i) gens.push_back(gens.back() * g);
    return ZModule::from_generators(gens);
}

// Moduli of the eigenvalues of the multiplication matrix, largest first.
std::vector<double> moduli(const FieldElement& u) {
    const RatMatrix m = u.multiplication_matrix();
    Eigen::MatrixXd a(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) a(i, j) = m(i, j).get_d();
    Eigen::EigenSolver<Eigen::MatrixXd> es(a);
    std::vector<double> out;
    for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) out.push_back(std::abs(es.eigenvalues()[i]));
    std::sort(out.rbegin(), out.rend());
    return out;
}

}  // namespace

TEST_CASE("quadratic units are the classical fundamental units") {
    struct Case {
        std::vector<long> poly;
        double value;
    };
    for (const auto& c : {Case{{-2, 0, 1}, 1 + std::sqrt(2.0)}, Case{{-5, 0, 1}, 2 + std::sqrt(5.0)},
                          Case{{-1, -1, 1}, (1 + std::sqrt(5.0)) / 2}, Case{{-3, 0, 1}, 2 + std::sqrt(3.0)}}) {
        auto f = make_field(ipoly(c.poly));
        OrderRing o = endomorphism_ring(power_module(FieldElement::generator(f), 2));
        Embedding e(f, 1);
        UnitElement u = find_unit(o, e);
        CAPTURE(f->minpoly().to_string());
        CHECK(e.approx(u.element) == doctest::Approx(c.value));
        CHECK(abs(u.element.norm()) == 1);
        CHECK(u.norm == u.element.norm());
        CHECK(o.contains(u.element));
    }
}

TEST_CASE("unit at the smaller root of x^2 + x - 1") {
    auto f = make_field(ipoly({-1, 1, 1}));
    OrderRing o = endomorphism_ring(power_module(FieldElement::generator(f), 2));
    Embedding e(f, 0);
    UnitElement u = find_unit(o, e);
    CHECK(e.approx(u.element) == doctest::Approx((1 + std::sqrt(5.0)) / 2));
    Embedding other(f, 1);
    CHECK(std::abs(other.approx(u.element)) < 1);
}

TEST_CASE("cubic unit dominates at every embedding of the Galois cubic") {
    auto f = make_field(ipoly({1, -2, -1, 1}));
    OrderRing o = endomorphism_ring(power_module(FieldElement::generator(f), 3));
    for (std::size_t i = 0; i < 3; ++i) {
        Embedding e(f, i);
        UnitElement u = find_unit(o, e);
        const auto mod = moduli(u.element);
        CHECK(e.approx(u.element) == doctest::Approx(mod[0]).epsilon(1e-9));
        CHECK(mod[0] > mod[1] + 1e-9);
        CHECK(e.approx(u.element) == doctest::Approx(1.8019377358).epsilon(1e-8));
        CHECK(abs(u.element.norm()) == 1);
    }
}

TEST_CASE("serial and parallel unit search agree") {
    auto f = make_field(ipoly({-1, -3, 0, 1}));
    OrderRing o = endomorphism_ring(power_module(FieldElement::generator(f), 3));
    Embedding e1(f, 2), e2(f, 2);
    UnitSearchOptions serial;
    serial.parallel = false;
    CHECK(find_unit(o, e1, serial).element == find_unit(o, e2).element);
}

TEST_CASE("rational field has no expanding unit") {
    auto f = make_field(ipoly({0, 1}));
    OrderRing o(ZModule::from_generators({FieldElement::one(f)}));
    Embedding e(f, 0);
    CHECK_THROWS_AS(find_unit(o, e), Error);
}

TEST_CASE("make_unit verifies membership and norm") {
    auto f = make_field(ipoly({-2, 0, 1}));
    OrderRing o = endomorphism_ring(power_module(FieldElement::generator(f), 2));
    CHECK(make_unit(o, elem(f, {1, 1})).norm == -1);
    CHECK(make_unit(o, elem(f, {3, 2})).norm == 1);
    CHECK_THROWS_AS(make_unit(o, elem(f, {2, 0})), Error);
    CHECK_THROWS_AS(make_unit(o, FieldElement(f, {Rational(1, 2), Rational(1, 2)})), Error);
}

TEST_CASE("multiplication matrix: A mu = u mu and char poly equals the field polynomial of u") {
    auto f = make_field(ipoly({1, -2, -1, 1}));
    auto m = power_module(FieldElement::generator(f), 3);
    std::mt19937_64 rng(9);
    std::uniform_int_distribution<long> d(-4, 4);
    for (int t = 0; t < 20; ++t) {
        const auto u = elem(f, {d(rng), d(rng), d(rng)});
        const IntMatrix a = multiplication_matrix(u, m);
        const auto mu = m.basis();
        for (std::size_t i = 0; i < 3; ++i) {
            FieldElement row = FieldElement::zero(f);
            for (std::size_t j = 0; j < 3; ++j) row = row + Rational(a(i, j)) * mu[j];
            CHECK(row == u * mu[i]);
        }
        CHECK(characteristic_polynomial(a).to_rational() == bridge::to_lib(oracle::char_poly(bridge::to_oracle(a))));
        CHECK(characteristic_polynomial(a).to_rational() == u.char_poly());
    }
    auto half = ZModule::from_generators({elem(f, {2, 0, 0}), elem(f, {0, 1, 0}), elem(f, {0, 0, 1})});
    CHECK_THROWS_AS(multiplication_matrix(FieldElement::generator(f), half), Error);
}

TEST_CASE("non-negative form of the golden unit") {
    auto f = make_field(ipoly({-1, 1, 1}));
    auto m = power_module(FieldElement::generator(f), 2);
    OrderRing o = endomorphism_ring(m);
    Embedding e(f, 1);
    UnitElement u = find_unit(o, e);
    const IntMatrix a = multiplication_matrix(u.element, m);
    NonnegativeForm form = make_nonnegative(a, u, m, e);
    CHECK(is_nonnegative(form.matrix));
    CHECK(inverse_unimodular(form.t) * power(a, form.k) * form.t == form.matrix);
    for (const auto& v : transformed_basis(m, form.t)) CHECK(e.sign(v) > 0);
}

TEST_CASE("predicate can reject every candidate") {
    auto f = make_field(ipoly({-2, 0, 1}));
    auto m = power_module(FieldElement::generator(f), 2);
    OrderRing o = endomorphism_ring(m);
    Embedding e(f, 1);
    UnitElement u = find_unit(o, e);
    const IntMatrix a = multiplication_matrix(u.element, m);
    CHECK_THROWS_AS(make_nonnegative(a, u, m, e, [](const NonnegativeForm&) { return false; }), Error);
}

TEST_CASE("search space is duplicate-free and unimodular") {
    auto f = make_field(ipoly({1, -2, -1, 1}));
    auto m = power_module(FieldElement::generator(f), 3);
    auto space = nonnegative_search_space(m);
    std::set<std::string> seen;
    for (const auto& t : space) {
        CHECK(seen.insert(to_string(t)).second);
        CHECK(abs(determinant(t)) == 1);
    }
    CHECK(space.size() > 48);
}
