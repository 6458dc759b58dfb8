#include <doctest.h>

#include <cmath>
#include <random>

#include "lpolya/jtable.hpp"
#include "lpolya/sigma.hpp"

using namespace lpolya;

TEST_CASE("exact section values on unit-coordinate directions") {
    JTable t;
    for (int k = 2; k <= 12; ++k) {
        DirectionQ ones(static_cast<std::size_t>(k), rat(1));
        CHECK(sigma_exact(ones) == jn(t, k, 0));
    }
    // zero coordinates drop out
    CHECK(sigma_exact({rat(1), rat(1), Rat(0), Rat(0)}) == rat(1));
    CHECK(sigma_exact({rat(1), rat(1), rat(1), rat(1), rat(1), rat(1), rat(1)}) ==
          rat(5887, 11520));
}

TEST_CASE("homogeneity of degree -1, exactly") {
    DirectionQ base = {rat(1), rat(2, 3), rat(5, 4), rat(1, 2)};
    const Rat sigma0 = sigma_exact(base);
    for (const Rat& c : {rat(2), rat(3), rat(7, 2)}) {
        DirectionQ scaled;
        for (const Rat& w : base) scaled.push_back(Rat(w * c));
        CHECK(sigma_exact(scaled) == sigma0 / c);
    }
    CHECK(sigma_exact({rat(2), rat(2), Rat(0)}) == rat(1, 2));
}

TEST_CASE("invariance under signs and permutations") {
    const Rat a = sigma_exact({rat(1), rat(-2), rat(3)});
    CHECK(a == sigma_exact({rat(3), rat(2), rat(1)}));
    CHECK(a == sigma_exact({rat(-1), rat(-2), rat(-3)}));
}

TEST_CASE("exact path rejects degenerate directions") {
    CHECK_THROWS_AS(sigma_exact({}), std::invalid_argument);
    CHECK_THROWS_AS(sigma_exact({Rat(0), Rat(0)}), std::invalid_argument);
    CHECK_THROWS_AS(sigma_exact({rat(1), Rat(0)}), std::invalid_argument);
    CHECK_THROWS_AS(sigma_exact(DirectionQ(30, rat(1))), std::invalid_argument);
}

TEST_CASE("quadrature matches the exact route") {
    JTable t;
    CHECK(std::abs(sigma_quadrature({1.0, 1.0}, 1e-6) - 1.0) <= 1e-6);
    // sigma(d_{4,4}) = 2 J_4(0) = 4/3
    CHECK(std::abs(sigma_quadrature({0.5, 0.5, 0.5, 0.5}, 1e-7) - 4.0 / 3.0) <= 1e-7 * 2);
    const Rat exact = sigma_exact({rat(3, 10), rat(2, 5), rat(1, 2)});
    CHECK(std::abs(sigma_quadrature({0.3, 0.4, 0.5}, 1e-8) - rat_double(exact)) <= 1e-7);

    std::mt19937 rng(5);
    std::uniform_int_distribution<long> num(1, 6), den(1, 2);
    for (int n = 2; n <= 4; ++n) {
        for (int trial = 0; trial < 3; ++trial) {
            DirectionQ w;
            DirectionF v;
            for (int i = 0; i < n; ++i) {
                long a = num(rng), b = den(rng);
                w.push_back(rat(a, b));
                v.push_back(double(a) / double(b));
            }
            const double tol = n == 2 ? 1e-5 : 1e-7;
            CHECK(std::abs(sigma_quadrature(v, tol) - rat_double(sigma_exact(w))) <=
                  tol * 3);
        }
    }
    CHECK_THROWS_AS(sigma_quadrature({1.0, 0.0}, 1e-6), std::invalid_argument);
    CHECK_THROWS_AS(sigma_quadrature({1.0, 1.0}, -1.0), std::invalid_argument);
}

TEST_CASE("gradient at critical directions and by finite differences") {
    const DirectionF d64 = {0.5, 0.5, 0.5, 0.5, 0.0, 0.0};
    const double sigma64 = 4.0 / 3.0;
    CHECK(std::abs(grad_sigma_quadrature(d64, 0, 2e-7) - (-sigma64 * 0.5)) <= 1e-6);

    const double u5 = 1.0 / std::sqrt(5.0);
    const DirectionF d55(5, u5);
    // -sigma(d_{5,5}) u_j = -J_5(0) = -115/192
    CHECK(std::abs(grad_sigma_quadrature(d55, 2, 2e-7) - (-115.0 / 192.0)) <= 1e-6);

    // central-difference consistency at a generic point
    const DirectionF v = {1.0, 1.1, 0.9, 1.2};
    const int j = 1;
    const double h = 1e-3;
    DirectionF up = v, down = v;
    up[j] += h;
    down[j] -= h;
    const double fd =
        (sigma_quadrature(up, 1e-10) - sigma_quadrature(down, 1e-10)) / (2.0 * h);
    CHECK(std::abs(grad_sigma_quadrature(v, j, 1e-9) - fd) <= 1e-5);

    CHECK_THROWS_AS(grad_sigma_quadrature(d64, 4, 1e-6), std::invalid_argument);
    CHECK_THROWS_AS(grad_sigma_quadrature({1.0, 1.0, 1.0}, 5, 1e-6),
                    std::invalid_argument);
}

TEST_CASE("criticality residuals") {
    const DirectionF d64 = {0.5, 0.5, 0.5, 0.5, 0.0, 0.0};
    auto res = critical_residual(d64, 5e-7);
    REQUIRE(res.size() == 6);
    for (double r : res) CHECK(std::abs(r) <= 1e-6);

    const double u5 = 1.0 / std::sqrt(5.0);
    auto res5 = critical_residual(DirectionF(5, u5), 5e-7);
    for (double r : res5) CHECK(std::abs(r) <= 1e-6);

    // generic non-critical direction shows a macroscopic residual
    const double n6 = std::sqrt(6.0);
    auto bad = critical_residual({1.0 / n6, 1.0 / n6, 2.0 / n6}, 1e-4);
    double worst = 0.0;
    for (double r : bad) worst = std::max(worst, std::abs(r));
    CHECK(worst > 1e-3);

    CHECK_THROWS_AS(critical_residual({0.5, 0.5, 0.5}, 1e-6), std::invalid_argument);
}

TEST_CASE("numeric Hessian entries against the exact diagonal reductions") {
    const DirectionF d64 = {0.5, 0.5, 0.5, 0.5, 0.0, 0.0};
    CHECK(std::abs(hessian_entries_numeric(d64, 0, 0, 1e-5)) <= 1e-5);   // beta_4 = 0
    CHECK(std::abs(hessian_entries_numeric(d64, 4, 4, 1e-5)) <= 1e-5);   // beta_4/3
    CHECK(hessian_entries_numeric(d64, 0, 4, 1e-5) == 0.0);              // dead block
    CHECK(std::abs(hessian_entries_numeric(d64, 0, 1, 1e-5) - 4.0 / 3.0) <= 1e-5);

    const double u5 = 1.0 / std::sqrt(5.0);
    const double s5 = std::sqrt(5.0);
    const DirectionF d65 = {u5, u5, u5, u5, u5, 0.0};
    CHECK(std::abs(hessian_entries_numeric(d65, 0, 0, 1e-6) - 15.0 * s5 / 64.0) <= 1e-5);
    CHECK(std::abs(hessian_entries_numeric(d65, 0, 1, 1e-6) - 25.0 * s5 / 64.0) <= 1e-5);
    CHECK(std::abs(hessian_entries_numeric(d65, 5, 5, 1e-6) - 5.0 * s5 / 64.0) <= 1e-5);

    CHECK_THROWS_AS(hessian_entries_numeric({1.0, 1.0, 1.0}, 0, 0, 1e-5),
                    std::invalid_argument);
}
