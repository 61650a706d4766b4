#include "heckeaf/exactnum/interval.hpp"
#include "heckeaf/exactnum/irreducibility.hpp"
#include "heckeaf/exactnum/lattice.hpp"
#include "heckeaf/exactnum/number_field.hpp"
#include "heckeaf/exactnum/zmodule.hpp"
#include "support/bridge.hpp"

#include <doctest.h>

using namespace heckeaf;

namespace {

IntPolynomial ipoly(std::vector<long> c) { return IntPolynomial(std::vector<Integer>(c.begin(), c.end())); }

FieldElement elem(const FieldPtr& f, std::vector<long> c) {
    std::vector<Rational> q;
    for (long x : c) q.emplace_back(x);
    return FieldElement(f, q);
}

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, long lo, long hi) {
    std::uniform_int_distribution<long> d(lo, hi);
    IntMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = d(rng);
    return m;
}

}  // namespace

TEST_SUITE("rational") {
    TEST_CASE("parse and print") {
        CHECK(to_string(parse_rational("6/4")) == "3/2");
        CHECK(to_string(parse_rational("-7")) == "-7");
        CHECK(to_string(parse_rational(" 0/5 ")) == "0");
        CHECK_THROWS_AS(parse_rational("1/0"), Error);
        CHECK_THROWS_AS(parse_rational("abc"), Error);
    }

    TEST_CASE("floor and ceil of negative fractions") {
        CHECK(floor(Rational(-7, 2)) == -4);
        CHECK(ceil(Rational(-7, 2)) == -3);
        CHECK(floor(Rational(7, 2)) == 3);
        CHECK(floor(Rational(4)) == 4);
    }
}

TEST_SUITE("polynomial") {
    TEST_CASE("parse, arithmetic and division") {
        const Polynomial p = parse_polynomial("x^2 - 2");
        CHECK(p.degree() == 2);
        CHECK(p.eval(Rational(3)) == 7);
        const Polynomial q = parse_polynomial("x - 1");
        auto [quo, rem] = Polynomial::divmod(p, q);
        CHECK(quo == parse_polynomial("x + 1"));
        CHECK(rem == Polynomial::constant(Rational(-1)));
        CHECK(p * q - q * p == Polynomial());
    }

    TEST_CASE("gcd is monic and detects common roots") {
        const Polynomial a = parse_polynomial("x^3 - x");
        const Polynomial b = parse_polynomial("x^2 + x");
        CHECK(Polynomial::gcd(a, b) == parse_polynomial("x^2 + x"));
        CHECK(Polynomial::gcd(parse_polynomial("x^2+1"), parse_polynomial("x - 3")) ==
              Polynomial::constant(Rational(1)));
    }

    TEST_CASE("squarefree test") {
        CHECK(is_squarefree(parse_polynomial("x^2 - 2")));
        CHECK_FALSE(is_squarefree(parse_polynomial("x^3 - 2*x^2 + x")));
    }
}

TEST_SUITE("root isolation") {
    TEST_CASE("x^2 - 2 has two separated roots bracketing +-sqrt(2)") {
        const Polynomial p = parse_polynomial("x^2 - 2");
        auto roots = isolate_real_roots(p);
        REQUIRE(roots.size() == 2);
        CHECK(roots[0].hi <= roots[1].lo);
        auto r = roots[1].refine(p, Rational(1, 1000000));
        CHECK(r.width() < Rational(1, 1000000));
        CHECK(r.lo * r.lo <= 2);
        CHECK(r.hi * r.hi >= 2);
    }

    TEST_CASE("root counts agree with Sturm on random squarefree cubics") {
        std::mt19937_64 rng(11);
        std::uniform_int_distribution<long> d(-9, 9);
        for (int t = 0; t < 40; ++t) {
            Polynomial p({Rational(d(rng)), Rational(d(rng)), Rational(d(rng)), Rational(1)});
            if (!is_squarefree(p)) continue;
            auto roots = isolate_real_roots(p);
            const int sturm = count_real_roots(sturm_sequence(p), Rational(-1000), Rational(1000));
            CHECK(static_cast<int>(roots.size()) == sturm);
            for (const auto& r : roots) CHECK(p.eval(r.lo) * p.eval(r.hi) <= 0);
        }
    }
}

TEST_SUITE("irreducibility") {
    TEST_CASE("known cases") {
        CHECK_FALSE(is_irreducible(ipoly({-4, 0, 1})));
        CHECK(is_irreducible(ipoly({-2, 0, 0, 1})));
        CHECK(is_irreducible(ipoly({1, -2, -1, 1})));
        // x^4 + 1 splits modulo every prime, so only the exact search settles it.
        CHECK(is_irreducible(ipoly({1, 0, 0, 0, 1})));
        CHECK_FALSE(is_irreducible(ipoly({2, 0, 3, 0, 1})));
        CHECK_FALSE(is_irreducible(ipoly({1, 0, 2, 0, 1})));
    }

    TEST_CASE("products of two random monic factors are reducible") {
        std::mt19937_64 rng(5);
        std::uniform_int_distribution<long> d(-5, 5);
        for (int t = 0; t < 30; ++t) {
            Polynomial a({Rational(d(rng)), Rational(d(rng)), Rational(1)});
            Polynomial b({Rational(d(rng)), Rational(d(rng)), Rational(1)});
            CHECK_FALSE(is_irreducible(IntPolynomial::from_rational(a * b)));
        }
    }

    TEST_CASE("factor degrees modulo p sum to the degree") {
        auto degs = factor_degrees_mod_p(ipoly({1, 0, 0, 0, 1}), 3);
        REQUIRE(degs);
        int total = 0;
        for (int x : *degs) total += x;
        CHECK(total == 4);
        CHECK_FALSE(factor_degrees_mod_p(ipoly({1, 2, 1}), 7));
    }
}

TEST_SUITE("matrix") {
    TEST_CASE("determinant agrees with an independent Bareiss") {
        std::mt19937_64 rng(3);
        for (int t = 0; t < 60; ++t) {
            const std::size_t n = 1 + t % 5;
            IntMatrix m = random_matrix(rng, n, n, -6, 6);
            CHECK(determinant(m) == oracle::bareiss(bridge::to_oracle(m)));
            CHECK(determinant(to_rational(m)) == Rational(determinant(m)));
        }
    }

    TEST_CASE("characteristic polynomial agrees with interpolated det(tI - A)") {
        std::mt19937_64 rng(4);
        for (int t = 0; t < 60; ++t) {
            const std::size_t n = 1 + t % 4;
            IntMatrix m = random_matrix(rng, n, n, -5, 5);
            CHECK(characteristic_polynomial(m).to_rational() == bridge::to_lib(oracle::char_poly(bridge::to_oracle(m))));
        }
    }

    TEST_CASE("inverse, left solve and nullspace") {
        RatMatrix a{{Rational(2), Rational(1)}, {Rational(1), Rational(1)}};
        CHECK((inverse(a) * a).is_identity());
        auto x = solve_left(a, {Rational(5), Rational(3)});
        CHECK(x == std::vector<Rational>{Rational(2), Rational(1)});
        RatMatrix s{{Rational(1), Rational(2), Rational(3)}, {Rational(2), Rational(4), Rational(6)}};
        CHECK(rank(s) == 1);
        auto ns = right_nullspace(s);
        CHECK(ns.size() == 2);
        for (const auto& v : ns) CHECK(v[0] + 2 * v[1] + 3 * v[2] == 0);
        CHECK_THROWS_AS(inverse(s.transpose() * s), Error);
    }

    TEST_CASE("unimodular inverse and rejection of det 2") {
        IntMatrix u{{2, 1}, {1, 1}};
        CHECK((inverse_unimodular(u) * u).is_identity());
        CHECK_THROWS_AS(inverse_unimodular(IntMatrix{{2, 0}, {0, 1}}), Error);
    }

    TEST_CASE("printing") { CHECK(to_string(IntMatrix{{0, 1}, {1, 1}}) == "[[0, 1], [1, 1]]"); }
}

TEST_SUITE("lattice") {
    TEST_CASE("hermite form shape and transform") {
        std::mt19937_64 rng(8);
        for (int t = 0; t < 40; ++t) {
            IntMatrix a = random_matrix(rng, 4, 3, -7, 7);
            HermiteForm hf = hermite_form(a);
            const IntMatrix& h = hf.h;
            const Integer d = determinant(hf.transform);
            CHECK((d == 1 || d == -1));
            IntMatrix ua = hf.transform * a;
            for (std::size_t i = 0; i < h.rows(); ++i)
                for (std::size_t j = 0; j < h.cols(); ++j) CHECK(ua(i, j) == h(i, j));
            for (std::size_t i = h.rows(); i < ua.rows(); ++i)
                for (std::size_t j = 0; j < ua.cols(); ++j) CHECK(ua(i, j) == 0);
            std::size_t last = 0;
            for (std::size_t i = 0; i < h.rows(); ++i) {
                std::size_t p = 0;
                while (h(i, p) == 0) ++p;
                if (i > 0) CHECK(p > last);
                last = p;
                CHECK(h(i, p) > 0);
                for (std::size_t k = 0; k < i; ++k) {
                    CHECK(h(k, p) >= 0);
                    CHECK(h(k, p) < h(i, p));
                }
            }
        }
    }

    TEST_CASE("left integer kernel annihilates") {
        IntMatrix a{{1, 2}, {2, 4}, {3, 7}};
        IntMatrix k = left_integer_kernel(a);
        REQUIRE(k.rows() == 1);
        IntMatrix z = k * a;
        CHECK(z(0, 0) == 0);
        CHECK(z(0, 1) == 0);
    }

    TEST_CASE("LLL preserves the lattice and shortens a skewed basis") {
        IntMatrix b{{1, 0, 0}, {1000, 1, 0}, {3000, 2, 1}};
        IntMatrix u;
        IntMatrix r = lll_reduce(b, &u);
        CHECK(u * b == r);
        CHECK(abs(determinant(u)) == 1);
        Integer norm0 = 0;
        for (std::size_t j = 0; j < 3; ++j) norm0 += r(0, j) * r(0, j);
        CHECK(norm0 <= 2);
        CHECK_THROWS_AS(lll_reduce(IntMatrix{{1, 2}, {2, 4}}), Error);
    }
}

TEST_SUITE("number field") {
    TEST_CASE("construction errors") {
        CHECK_THROWS_AS(make_field(ipoly({-4, 0, 1})), Error);
        CHECK_THROWS_AS(make_field(ipoly({-2, 0, 2})), Error);
        auto f = make_field(ipoly({-2, 0, 1}));
        CHECK(f->degree() == 2);
        CHECK(f->totally_real());
        CHECK_FALSE(make_field(ipoly({-2, 0, 0, 1}))->totally_real());
    }

    TEST_CASE("arithmetic in Q(sqrt 2)") {
        auto f = make_field(ipoly({-2, 0, 1}));
        const auto a = elem(f, {1, 1});
        const auto b = elem(f, {-1, 1});
        CHECK(a * b == FieldElement::one(f));
        CHECK(a.inverse() == b);
        CHECK(a.norm() == -1);
        CHECK(a.trace() == 2);
        CHECK(a.pow(2) == elem(f, {3, 2}));
        CHECK(a.pow(-1) == b);
        CHECK_THROWS_AS(FieldElement::one(f) / FieldElement::zero(f), Error);
        CHECK(a.to_string() == "x + 1");
    }

    TEST_CASE("norm and trace match the product and sum of embeddings") {
        auto f = make_field(ipoly({1, -2, -1, 1}));
        std::mt19937_64 rng(17);
        std::uniform_int_distribution<long> d(-6, 6);
        for (int t = 0; t < 25; ++t) {
            const auto a = elem(f, {d(rng), d(rng), d(rng)});
            if (a.is_zero()) continue;
            double prod = 1, sum = 0;
            for (std::size_t i = 0; i < 3; ++i) {
                Embedding e(f, i);
                prod *= e.approx(a);
                sum += e.approx(a);
            }
            CHECK(a.norm().get_d() == doctest::Approx(prod).epsilon(1e-9));
            CHECK(a.trace().get_d() == doctest::Approx(sum).epsilon(1e-9));
        }
    }

    TEST_CASE("multiplication matrix has the element's characteristic polynomial") {
        auto f = make_field(ipoly({1, -2, -1, 1}));
        const auto a = elem(f, {2, -1, 1});
        CHECK(characteristic_polynomial(a.multiplication_matrix()) == a.char_poly());
        CHECK(a.is_primitive());
        CHECK_FALSE(FieldElement::rational(f, Rational(3)).is_primitive());
    }

    TEST_CASE("embedding sign and floor against a 300-bit shadow") {
        auto f = make_field(ipoly({-2, 0, 1}));
        Embedding hi(f, 1), lo(f, 0);
        mpf_class s(2, 300);
        s = sqrt(s);
        std::mt19937_64 rng(2);
        std::uniform_int_distribution<long> d(-40, 40);
        for (int t = 0; t < 60; ++t) {
            const long p = d(rng), q = d(rng);
            const auto a = elem(f, {p, q});
            mpf_class v(p + q * s, 300);
            mpf_class fl(0, 300);
            mpf_floor(fl.get_mpf_t(), v.get_mpf_t());
            CHECK(exact_floor(a, hi) == Integer(fl.get_si()));
            CHECK(hi.sign(a) == sgn(v));
            mpf_class w(p - q * s, 300);
            CHECK(lo.sign(a) == sgn(w));
        }
        CHECK(hi.sign(FieldElement::zero(f)) == 0);
    }

    TEST_CASE("parse_element") {
        auto f = make_field(ipoly({-2, 0, 1}));
        CHECK(parse_element(f, "1/2,3") == FieldElement(f, {Rational(1, 2), Rational(3)}));
        CHECK_THROWS(parse_element(f, "1,2,3"));
    }
}

TEST_SUITE("zmodule") {
    TEST_CASE("redundant generators collapse to the same canonical module") {
        auto f = make_field(ipoly({-5, 0, 1}));
        auto m = ZModule::from_generators({elem(f, {2, 0}), elem(f, {1, 1}), elem(f, {0, 3})});
        // Row reduction of [[2,0],[1,1],[0,3]] gives the unit lattice.
        auto z = ZModule::from_generators({FieldElement::one(f), FieldElement::generator(f)});
        CHECK(m == z);
        CHECK(m.hnf().is_identity());
        CHECK(m.denominator() == 1);
    }

    TEST_CASE("denominators are normalized") {
        auto f = make_field(ipoly({-1, 1, 1}));
        auto m = ZModule::from_generators({FieldElement::one(f), FieldElement(f, {Rational(1, 2), Rational(1, 2)})});
        CHECK(m.denominator() == 2);
        CHECK(m.contains(FieldElement(f, {Rational(1, 2), Rational(1, 2)})));
        CHECK_FALSE(m.contains(FieldElement(f, {Rational(1, 2), Rational(0)})));
        CHECK_THROWS_AS(ZModule::from_generators({FieldElement::one(f)}), Error);
    }

    TEST_CASE("canonical form is invariant under random unimodular changes") {
        auto f = make_field(ipoly({1, -2, -1, 1}));
        auto base = ZModule::from_generators({elem(f, {1, 0, 0}), elem(f, {0, 2, 0}), elem(f, {1, 1, 3})});
        std::mt19937_64 rng(23);
        for (int t = 0; t < 50; ++t) {
            auto u = bridge::to_lib(oracle::random_unimodular(rng, 3));
            CHECK(apply_basis_change(base, u) == base);
        }
    }

    TEST_CASE("endomorphism ring of Z*2 + Z*sqrt5 is Z[2 sqrt5]") {
        auto f = make_field(ipoly({-5, 0, 1}));
        auto m = ZModule::from_generators({elem(f, {2, 0}), elem(f, {0, 1})});
        OrderRing o = endomorphism_ring(m);
        CHECK(o.module() == ZModule::from_generators({FieldElement::one(f), elem(f, {0, 2})}));
        CHECK_FALSE(m.is_stable_under(FieldElement::generator(f)));
        CHECK(m.is_stable_under(elem(f, {0, 2})));
    }

    TEST_CASE("order check rejects a non-ring") {
        auto f = make_field(ipoly({-5, 0, 1}));
        CHECK_THROWS_AS(OrderRing(ZModule::from_generators({elem(f, {2, 0}), elem(f, {0, 1})})), Error);
    }
}
