#include <bit>
#include <cmath>
#include <map>
#include <random>

#include "cliffkit/clifford.hpp"
#include "cliffkit/quadratic.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace cliffkit;
using namespace cliffkit::testsupport;

TEST_SUITE_BEGIN("clifford");

TEST_CASE("from_vector builds grade-1 elements") {
    const CliffordSpace eu2({1.0, 1.0});
    const Multivector e1 = from_vector(eu2, {1.0, 0.0});
    CHECK(e1.coeff(0b01) == 1.0);
    CHECK(e1.terms().size() == 1);

    CHECK(from_vector(eu2, {0.0, 0.0}).empty());
    CHECK_THROWS_AS(from_vector(eu2, {1.0}), std::invalid_argument);

    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t n = 1 + trial % 5;
        const Vec diag = random_metric(rng, n);
        const CliffordSpace space(diag);
        const QuadraticForm q = QuadraticForm::diagonal(diag);
        const Vec x = random_vec(rng, n);
        const Multivector sq = geometric_product(from_vector(space, x), from_vector(space, x));
        CHECK(sq.coeff(0) == doctest::Approx(eval_q(q, x)).epsilon(1e-12));
        CHECK(grade_project(sq, 0).coeff(0) == doctest::Approx(sq.coeff(0)));
    }
}

TEST_CASE("blade_product signs and contractions") {
    const Vec eu = {1.0, 1.0};
    CHECK(blade_product(0b01, 0b01, eu) == std::pair{1.0, BladeMask{0}});
    CHECK(blade_product(0b01, 0b10, eu) == std::pair{1.0, BladeMask{0b11}});
    CHECK(blade_product(0b10, 0b01, eu) == std::pair{-1.0, BladeMask{0b11}});
    CHECK(blade_product(0b11, 0b11, eu) == std::pair{-1.0, BladeMask{0}});

    const Vec scaled = {3.0, -2.0};
    CHECK(blade_product(0b01, 0b01, scaled).first == 3.0);
    CHECK(blade_product(0b10, 0b10, scaled).first == -2.0);
}

TEST_CASE("geometric product: unit, bivector square, anticommutation") {
    const CliffordSpace eu2({1.0, 1.0});
    std::mt19937_64 rng(11);
    const Multivector a = random_multivector(rng, eu2);
    const Multivector one = Multivector::scalar(eu2, 1.0);
    const Multivector a1 = geometric_product(a, one);
    for (const auto& [mask, c] : a.terms()) CHECK(a1.coeff(mask) == c);

    const Multivector e12 = Multivector::basis_blade(eu2, 0b11);
    const Multivector sq = geometric_product(e12, e12);
    CHECK(sq.coeff(0) == -1.0);
    CHECK(sq.terms().size() == 1);

    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t n = 1 + trial % 6;
        const Vec diag = random_metric(rng, n);
        const CliffordSpace space(diag);
        const QuadraticForm q = QuadraticForm::diagonal(diag);
        const Vec x = random_vec(rng, n), y = random_vec(rng, n);
        const Multivector xv = from_vector(space, x), yv = from_vector(space, y);
        const Multivector anti = geometric_product(xv, yv) + geometric_product(yv, xv);
        const double expected = 2.0 * polarize(q, x, y);
        CHECK(anti.coeff(0) == doctest::Approx(expected).epsilon(1e-10));
        for (const auto& [mask, c] : anti.terms())
            if (mask != 0) CHECK(std::abs(c) < 1e-10);
    }
}

TEST_CASE("wedge product") {
    const CliffordSpace eu2({1.0, 1.0});
    const Multivector e1 = Multivector::basis_blade(eu2, 0b01);
    const Multivector e2 = Multivector::basis_blade(eu2, 0b10);
    CHECK(wedge(e1, e2).coeff(0b11) == 1.0);

    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 20; ++trial) {
        const Vec x = random_vec(rng, 2);
        const Multivector xv = from_vector(eu2, x);
        CHECK(wedge(xv, xv).empty());
    }

    const Multivector mixed = wedge(e1 + e2, e2);
    CHECK(mixed.coeff(0b11) == 1.0);
    CHECK(mixed.terms().size() == 1);

    // Metric independence: same coefficients, opposite metrics.
    const CliffordSpace anti2({-1.0, -1.0});
    std::mt19937_64 rng2(17);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int trial = 0; trial < 10; ++trial) {
        Multivector a1(eu2), a2(anti2), b1(eu2), b2(anti2);
        for (BladeMask mask = 0; mask < 4; ++mask) {
            const double ca = u(rng2), cb = u(rng2);
            a1.add_term(mask, ca);
            a2.add_term(mask, ca);
            b1.add_term(mask, cb);
            b2.add_term(mask, cb);
        }
        const Multivector w1 = wedge(a1, b1), w2 = wedge(a2, b2);
        CHECK(w1.terms().size() == w2.terms().size());
        for (const auto& [mask, c] : w1.terms()) CHECK(w2.coeff(mask) == c);
    }
}

TEST_CASE("grade projection") {
    const CliffordSpace eu2({1.0, 1.0});
    Multivector a(eu2);
    a.add_term(0, 1.0);
    a.add_term(0b01, 1.0);
    a.add_term(0b11, 1.0);
    const Multivector g1 = grade_project(a, 1);
    CHECK(g1.coeff(0b01) == 1.0);
    CHECK(g1.terms().size() == 1);

    std::mt19937_64 rng(5);
    const Multivector r = random_multivector(rng, eu2);
    Multivector sum(eu2);
    for (int k = 0; k <= 2; ++k) sum = sum + grade_project(r, k);
    for (const auto& [mask, c] : r.terms()) CHECK(sum.coeff(mask) == c);

    const Vec diag = {2.0, -0.5, 1.5};
    const CliffordSpace sp(diag);
    const QuadraticForm q = QuadraticForm::diagonal(diag);
    for (int trial = 0; trial < 20; ++trial) {
        const Vec x = random_vec(rng, 3), y = random_vec(rng, 3);
        const Multivector prod = geometric_product(from_vector(sp, x), from_vector(sp, y));
        CHECK(grade_project(prod, 0).coeff(0) ==
              doctest::Approx(polarize(q, x, y)).epsilon(1e-12));
    }
    CHECK_THROWS_AS(grade_project(a, 3), std::invalid_argument);
}

TEST_CASE("associativity on random triples") {
    std::mt19937_64 rng(29);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t n = 1 + trial % 6;
        const CliffordSpace space(random_metric(rng, n));
        const Multivector a = random_multivector(rng, space);
        const Multivector b = random_multivector(rng, space);
        const Multivector c = random_multivector(rng, space);
        const Multivector left = geometric_product(geometric_product(a, b), c);
        const Multivector right = geometric_product(a, geometric_product(b, c));
        const Multivector diff = left - right;
        for (const auto& [mask, v] : diff.terms()) CHECK(std::abs(v) < 1e-10);
    }
}

TEST_CASE("blade basis spans 2^n independent blades") {
    for (std::size_t n = 1; n <= 6; ++n) {
        const CliffordSpace space(Vec(n, 1.0));
        std::map<BladeMask, bool> seen;
        for (BladeMask subset = 0; subset < space.blade_count(); ++subset) {
            Multivector prod = Multivector::scalar(space, 1.0);
            for (std::size_t j = 0; j < n; ++j)
                if (subset & (BladeMask{1} << j))
                    prod = geometric_product(
                        prod, from_vector(space, [&] {
                            Vec e(n, 0.0);
                            e[j] = 1.0;
                            return e;
                        }()));
            REQUIRE(prod.terms().size() == 1);
            CHECK(prod.terms().begin()->first == subset);
            CHECK(prod.terms().begin()->second == 1.0);
            seen[subset] = true;
        }
        CHECK(seen.size() == space.blade_count());
    }
}

TEST_CASE("regular-representation rewrite oracle agrees exactly for n <= 3") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n = 1 + trial % 3;
        const CliffordSpace space(random_metric(rng, n));
        const Multivector a = random_multivector(rng, space);
        const Multivector b = random_multivector(rng, space);
        const Multivector fast = geometric_product(a, b);
        const Multivector slow = oracle_product(a, b);
        CHECK(fast.terms().size() == slow.terms().size());
        for (const auto& [mask, c] : fast.terms()) CHECK(slow.coeff(mask) == c);
    }
}

TEST_CASE("gradewise tensor norms") {
    const CliffordSpace eu2({1.0, 1.0});
    const Multivector zero(eu2);
    for (auto tag : {TensorNormTag::injective, TensorNormTag::hs, TensorNormTag::projective})
        CHECK(norm_gamma(zero, VectorNormTag::euclidean, tag) == 0.0);

    const Multivector e1 = Multivector::basis_blade(eu2, 0b01);
    for (auto tag : {TensorNormTag::injective, TensorNormTag::hs, TensorNormTag::projective})
        CHECK(norm_gamma(e1, VectorNormTag::euclidean, tag) == doctest::Approx(1.0));

    std::mt19937_64 rng(37);
    for (int trial = 0; trial < 25; ++trial) {
        const std::size_t n = 2 + trial % 4;
        const CliffordSpace space(Vec(n, 1.0));
        Multivector biv(space);
        std::uniform_real_distribution<double> u(-1.0, 1.0);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                biv.add_term((BladeMask{1} << i) | (BladeMask{1} << j), u(rng));
        const double inj = norm_gamma(biv, VectorNormTag::euclidean, TensorNormTag::injective);
        const double hs = norm_gamma(biv, VectorNormTag::euclidean, TensorNormTag::hs);
        const double proj = norm_gamma(biv, VectorNormTag::euclidean, TensorNormTag::projective);
        CHECK(inj <= hs + 1e-12);
        CHECK(hs <= proj + 1e-12);
        CHECK(inj > 0.0);
    }

    // Mixed grades including a grade-3 part: the sampled/decomposition bounds
    // must preserve the ordering.
    const CliffordSpace eu4(Vec(4, 1.0));
    std::mt19937_64 rng2(41);
    for (int trial = 0; trial < 8; ++trial) {
        const Multivector m = random_multivector(rng2, eu4);
        const double inj = norm_gamma(m, VectorNormTag::euclidean, TensorNormTag::injective);
        const double hs = norm_gamma(m, VectorNormTag::euclidean, TensorNormTag::hs);
        const double proj = norm_gamma(m, VectorNormTag::euclidean, TensorNormTag::projective);
        CHECK(inj <= hs + 1e-12);
        CHECK(hs <= proj + 1e-12);
    }
}

TEST_CASE("metric normalization rescales generators to +-1") {
    const CliffordSpace space({4.0, -9.0});
    const UnitScaling scaling = normalize_metric(space);
    CHECK(scaling.space.diag == Vec{1.0, -1.0});
    CHECK(scaling.factors == Vec{2.0, 3.0});

    Multivector a(space);
    a.add_term(0b01, 1.0);
    a.add_term(0b11, 1.0);
    const Multivector b = to_normalized_metric(a, scaling);
    CHECK(b.coeff(0b01) == 2.0);
    CHECK(b.coeff(0b11) == 6.0);

    // q(e_j / sqrt|lambda|) = lambda / |lambda|.
    const Multivector ehat = from_vector(scaling.space, {0.0, 1.0});
    CHECK(geometric_product(ehat, ehat).coeff(0) == -1.0);

    CHECK_THROWS_AS(normalize_metric(CliffordSpace({1.0, 0.0})), std::invalid_argument);
}

TEST_CASE("expression parsing and JSON round trip") {
    const CliffordSpace eu3({1.0, 1.0, 1.0});
    const Multivector m = parse_multivector(eu3, "0.5e1e2 + e3 - 2");
    CHECK(m.coeff(0b011) == 0.5);
    CHECK(m.coeff(0b100) == 1.0);
    CHECK(m.coeff(0) == -2.0);

    CHECK(parse_multivector(eu3, "e1").coeff(0b001) == 1.0);
    CHECK_THROWS_AS(parse_multivector(eu3, "e4"), std::invalid_argument);
    CHECK_THROWS_AS(parse_multivector(eu3, "e1e1"), std::invalid_argument);

    const Multivector back = multivector_from_json(to_json(m));
    CHECK(back.terms().size() == m.terms().size());
    for (const auto& [mask, c] : m.terms()) CHECK(back.coeff(mask) == c);
}

TEST_CASE("arithmetic prunes cancellations") {
    const CliffordSpace eu2({1.0, 1.0});
    std::mt19937_64 rng(43);
    const Multivector a = random_multivector(rng, eu2);
    CHECK((a - a).empty());
}

TEST_CASE("operations reject mismatched spaces") {
    const CliffordSpace eu2({1.0, 1.0});
    const CliffordSpace min2({1.0, -1.0});
    const Multivector a = Multivector::basis_blade(eu2, 0b01);
    const Multivector b = Multivector::basis_blade(min2, 0b10);
    CHECK_THROWS_AS(geometric_product(a, b), std::invalid_argument);
    CHECK_THROWS_AS(wedge(a, b), std::invalid_argument);
    CHECK_THROWS_AS(a + b, std::invalid_argument);
}

TEST_SUITE_END();
