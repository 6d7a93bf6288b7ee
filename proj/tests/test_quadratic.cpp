#include <cmath>
#include <random>

#include "cliffkit/quadratic.hpp"
#include "doctest.h"

using namespace cliffkit;

namespace {

Vec random_vec(std::mt19937_64& rng, std::size_t n) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    Vec v(n);
    for (double& x : v) x = u(rng);
    return v;
}

Mat random_symmetric(std::mt19937_64& rng, std::size_t n) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    Mat m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) m(i, j) = m(j, i) = u(rng);
    return m;
}

}  // namespace

TEST_SUITE_BEGIN("quadratic");

TEST_CASE("eval_q on the stock examples") {
    CHECK(eval_q(QuadraticForm::identity(2), {3.0, 4.0}) == doctest::Approx(25.0));
    CHECK(eval_q(QuadraticForm::diagonal({1.0, -1.0}), {1.0, 1.0}) == doctest::Approx(0.0));
    CHECK(eval_q(QuadraticForm::diagonal({2.0, 3.0}), {1.0, 1.0}) == doctest::Approx(5.0));
    CHECK_THROWS_AS(eval_q(QuadraticForm::identity(2), {1.0}), std::invalid_argument);
}

TEST_CASE("polarization identity and orthogonality") {
    const QuadraticForm minrow = QuadraticForm::diagonal({1.0, -1.0});
    CHECK(polarize(QuadraticForm::identity(2), {1.0, 0.0}, {0.0, 1.0}) == 0.0);
    CHECK(polarize(minrow, {1.0, 1.0}, {1.0, -1.0}) == doctest::Approx(2.0));

    std::mt19937_64 rng(91);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t n = 1 + trial % 5;
        const QuadraticForm f{random_symmetric(rng, n)};
        const Vec x = random_vec(rng, n), y = random_vec(rng, n);
        CHECK(polarize(f, x, x) == doctest::Approx(eval_q(f, x)).epsilon(1e-10));
        CHECK(polarize(f, x, y) == polarize(f, y, x));  // bitwise by construction
    }
}

TEST_CASE("construction rejects asymmetry") {
    Mat m(2, 2);
    m(0, 1) = 1.0;
    m(1, 0) = 1.0 + 1e-9;
    CHECK_THROWS_AS(QuadraticForm{m}, std::invalid_argument);
}

TEST_CASE("diagonalize: already-diagonal, off-diagonal and curvature inputs") {
    const EigenSym flat = diagonalize(QuadraticForm::diagonal({1.0, -1.0}));
    CHECK(flat.values[0] == doctest::Approx(1.0));
    CHECK(flat.values[1] == doctest::Approx(-1.0));
    CHECK(flat.vectors(0, 0) == doctest::Approx(1.0));
    CHECK(flat.vectors(1, 1) == doctest::Approx(1.0));

    Mat swap(2, 2);
    swap(0, 1) = swap(1, 0) = 1.0;
    const EigenSym cross = diagonalize(QuadraticForm{swap});
    const double r = 1.0 / std::sqrt(2.0);
    CHECK(cross.values[0] == doctest::Approx(1.0));
    CHECK(cross.values[1] == doctest::Approx(-1.0));
    CHECK(cross.vectors(0, 0) == doctest::Approx(r));
    CHECK(cross.vectors(1, 0) == doctest::Approx(r));
    CHECK(cross.vectors(0, 1) == doctest::Approx(r));
    CHECK(cross.vectors(1, 1) == doctest::Approx(-r));

    // 12 a^2 - 4 at a = 1.
    const EigenSym well = diagonalize(QuadraticForm::diagonal({8.0}));
    CHECK(well.values[0] == doctest::Approx(8.0));
}

TEST_CASE("eigenpair residuals stay within 1e-9 (1 + |lambda|)") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 25; ++trial) {
        const std::size_t n = 2 + trial % 6;
        const QuadraticForm f{random_symmetric(rng, n)};
        const EigenSym& e = f.eigen();
        for (std::size_t j = 0; j < n; ++j) {
            Vec v(n), av;
            for (std::size_t i = 0; i < n; ++i) v[i] = e.vectors(i, j);
            av = mat_vec(f.coeffs(), v);
            double res = 0.0;
            for (std::size_t i = 0; i < n; ++i)
                res += (av[i] - e.values[j] * v[i]) * (av[i] - e.values[j] * v[i]);
            CHECK(std::sqrt(res) <= 1e-9 * (1.0 + std::abs(e.values[j])));
        }
    }
}

TEST_CASE("form reconstruction from the eigenframe") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t n = 2 + trial % 5;
        const QuadraticForm f{random_symmetric(rng, n)};
        const EigenSym& e = f.eigen();
        const Vec x = random_vec(rng, n), y = random_vec(rng, n);
        double rebuilt = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            double vx = 0.0, vy = 0.0;
            for (std::size_t i = 0; i < n; ++i) {
                vx += e.vectors(i, j) * x[i];
                vy += e.vectors(i, j) * y[i];
            }
            rebuilt += e.values[j] * vx * vy;
        }
        const double direct = polarize(f, x, y);
        CHECK(std::abs(rebuilt - direct) <= 1e-8 * (1.0 + std::abs(direct)));
    }
}

TEST_CASE("signature counting") {
    CHECK(signature(QuadraticForm::diagonal({1.0, 1.0, -1.0}), 1e-10) ==
          Signature{2, 1, 0});
    CHECK(signature(QuadraticForm::diagonal({0.0, 0.0, 0.0})) == Signature{0, 0, 3});
    Mat swap(2, 2);
    swap(0, 1) = swap(1, 0) = 1.0;
    CHECK(signature(QuadraticForm{swap}) == Signature{1, 1, 0});
}

TEST_CASE("signature is a congruence invariant") {
    std::mt19937_64 rng(23);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t n = 2 + trial % 7;  // desk scale n <= 8
        const QuadraticForm f{random_symmetric(rng, n)};

        Mat g(n, n);
        double detish = 0.0;
        while (std::abs(detish) < 1e-2) {
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) g(i, j) = u(rng) + (i == j ? 1.5 : 0.0);
            // Crude invertibility probe: smallest singular value.
            detish = singular_values(g).back();
        }
        const Mat congruent = mat_mul(transpose(g), mat_mul(f.coeffs(), g));
        Mat sym = congruent;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) sym(i, j) = 0.5 * (congruent(i, j) + congruent(j, i));
        CHECK(signature(QuadraticForm{sym}) == signature(f));
    }
}

TEST_CASE("JSON round trip") {
    Mat m(2, 2);
    m(0, 0) = 2.0;
    m(0, 1) = m(1, 0) = -0.5;
    m(1, 1) = 3.0;
    const QuadraticForm f{m};
    const QuadraticForm back = quadratic_form_from_json(to_json(f));
    CHECK(back.dim() == 2);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) CHECK(back.coeffs()(i, j) == f.coeffs()(i, j));
}

TEST_SUITE_END();
