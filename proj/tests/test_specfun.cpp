#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "laguerre/specfun.hpp"
#include "oracles.hpp"

using namespace laguerre;

namespace {

double rel_err(double got, double want) {
    return std::abs(got - want) / std::max(std::abs(want), 1e-300);
}

// unscaled I_alpha from the library, safe for moderate z
double bessel_unscaled(double alpha, double z) {
    return std::exp(z) * bessel_i_scaled(alpha, z);
}

}  // namespace

TEST_CASE("log_gamma matches std::lgamma to 1e-13 on (0, 600)") {
    double worst = 0.0;
    for (double x = 0.01; x < 600.0; x *= 1.07) {
        worst = std::max(worst, std::abs(log_gamma(x) - std::lgamma(x)) /
                                    std::max(1.0, std::abs(std::lgamma(x))));
    }
    CHECK(worst < 1e-13);
    CHECK_THROWS_AS(log_gamma(0.0), std::domain_error);
    CHECK_THROWS_AS(log_gamma(-2.5), std::domain_error);
}

TEST_CASE("bessel_i_scaled: half-integer closed form and z=0 limits") {
    // e^{-1} I_{1/2}(1) = e^{-1} sqrt(2/pi) sinh 1
    const double closed = std::exp(-1.0) * std::sqrt(2.0 / std::numbers::pi) * std::sinh(1.0);
    CHECK(rel_err(bessel_i_scaled(0.5, 1.0), closed) < 1e-13);

    CHECK(bessel_i_scaled(2.0, 0.0) == 0.0);
    CHECK(bessel_i_scaled(0.0, 0.0) == 1.0);
    CHECK(std::isinf(bessel_i_scaled(-0.5, 0.0)));

    CHECK_THROWS_AS(bessel_i_scaled(-1.0, 1.0), std::domain_error);
    CHECK_THROWS_AS(bessel_i_scaled(0.5, -1.0), std::domain_error);
}

TEST_CASE("bessel_i_scaled: frozen series value near the origin") {
    // e^{-z} I_{-0.75}(z) at z = 0.01, from the 40-term series oracle
    CHECK(rel_err(bessel_i_scaled(-0.75, 0.01), 14.524189432845127) < 1e-12);
}

TEST_CASE("bessel_i_scaled: series agreement and large-z law") {
    for (double alpha : {-0.9, -0.5, 0.5, 2.0}) {
        for (double z = 1e-6; z <= 50.0; z *= 1.31) {
            const double got = bessel_i_scaled(alpha, z);
            if (z <= 2.0) {
                const double want = std::exp(-z) * oracles::bessel_series(alpha, z, 40);
                CHECK(rel_err(got, want) < 1e-10);
            }
            if (z >= 30.0) {
                const double law = std::abs(got * std::sqrt(2.0 * std::numbers::pi * z) - 1.0);
                CHECK(law <= 5.0 / z);
            }
        }
    }
}

TEST_CASE("bessel derivative identity d/dz (z^-a I_a) = z^-a I_{a+1}") {
    for (double alpha : {-0.75, -0.25, 0.5, 1.5}) {
        for (double z : {0.5, 1.0, 5.0}) {
            auto f = [alpha](double u) { return std::pow(u, -alpha) * bessel_unscaled(alpha, u); };
            const double fd = oracles::fd5_derivative(f, z, 1e-3);
            const double want = std::pow(z, -alpha) * bessel_unscaled(alpha + 1.0, z);
            CHECK(rel_err(fd, want) < 1e-6);
        }
    }
}

TEST_CASE("bessel neighbor bound |I_a - I_{a+1}| < (4a+6) I_{a+1}/z") {
    for (double alpha = -0.95; alpha <= 2.0; alpha += 0.21) {
        for (double z = 1e-3; z <= 50.0; z *= 1.6) {
            // scale-invariant: compare the e^{-z}-scaled values
            const double a = bessel_i_scaled(alpha, z);
            const double b = bessel_i_scaled(alpha + 1.0, z);
            CHECK(std::abs(a - b) < (4.0 * alpha + 6.0) * b / z);
        }
    }
}

TEST_CASE("laguerre_polynomial: degree 0/1 exact, monomial oracle at degree 5") {
    CHECK(laguerre_polynomial(0, -0.3, 4.2) == 1.0);
    CHECK(laguerre_polynomial(0, 1.9, 0.0) == 1.0);
    CHECK(rel_err(laguerre_polynomial(1, 0.3, 2.0), -0.7) < 1e-15);
    // frozen monomial-expansion value
    CHECK(rel_err(laguerre_polynomial(5, -0.5, 1.25), 0.16573079427083334) < 1e-10);
    CHECK_THROWS_AS(laguerre_polynomial(3, -1.0, 1.0), std::domain_error);
}

TEST_CASE("laguerre_polynomial_sequence agrees with single evaluations") {
    const std::vector<double> seq = laguerre_polynomial_sequence(12, -0.6, 3.7);
    for (int k = 0; k <= 12; ++k) {
        CHECK(seq[static_cast<size_t>(k)] ==
              doctest::Approx(laguerre_polynomial(k, -0.6, 3.7)).epsilon(1e-14));
    }
}

TEST_CASE("laguerre_function: closed form, frozen oracle value, errors") {
    const double closed = std::sqrt(2.0 / std::sqrt(std::numbers::pi)) * std::exp(-0.5);
    CHECK(rel_err(laguerre_function(0, -0.5, 1.0), closed) < 1e-13);
    // frozen: phi_3^{0.7}(0.5) through the monomial oracle for L_3^{0.7}
    CHECK(rel_err(laguerre_function(3, 0.7, 0.5), 0.57408469871169387) < 1e-10);
    CHECK_THROWS_AS(laguerre_function(2, 0.5, 0.0), std::domain_error);
    CHECK_THROWS_AS(laguerre_function(2, 0.5, -1.0), std::domain_error);
}

TEST_CASE("laguerre_function: unit L2 norm by oracle quadrature") {
    for (double nu : {-0.9, -0.5, 0.0, 1.7}) {
        for (int k = 0; k <= 20; ++k) {
            auto sq = [&](double x) {
                const double v = laguerre_function(k, nu, x);
                return v * v;
            };
            const double norm2 = oracles::integrate_log_adaptive(sq, 1e-60, 15.0, 1e-10);
            CHECK(std::abs(norm2 - 1.0) < 1e-8);
        }
    }
}

TEST_CASE("laguerre_function survives k = 500") {
    const double v = laguerre_function(500, -0.5, 3.0);
    CHECK(std::isfinite(v));
    CHECK(std::abs(v) < 10.0);  // eigenfunctions stay O(1) in the bulk
}

TEST_CASE("laguerre_function_sequence matches single evaluations") {
    const std::vector<double> seq = laguerre_function_sequence(30, -0.75, 2.1);
    for (int k = 0; k <= 30; ++k) {
        CHECK(rel_err(seq[static_cast<size_t>(k)], laguerre_function(k, -0.75, 2.1)) < 1e-12);
    }
}

TEST_CASE("laguerre_function_derivative matches a finite difference") {
    for (double nu : {-0.75, 0.4}) {
        for (int k : {0, 1, 4, 9}) {
            for (double x : {0.4, 1.3, 2.8}) {
                auto f = [&](double u) { return laguerre_function(k, nu, u); };
                const double fd = oracles::fd5_derivative(f, x, 1e-3);
                CHECK(rel_err(laguerre_function_derivative(k, nu, x), fd) < 1e-8);
            }
        }
    }
}

TEST_CASE("laguerre_function_nd: product structure") {
    const NuVector nu{-0.5, -0.5};
    const MultiIndex k{1, 0};
    const std::vector<double> x = {1.0, 1.0};
    const double got = laguerre_function_nd(k, nu, x);
    // product of 1-D oracle evaluations
    auto phi_oracle = [](int kk, double nn, double xx) {
        const double L = oracles::laguerre_monomial(kk, nn, xx * xx);
        const double nrm =
            std::sqrt(2.0) * std::exp(0.5 * (std::lgamma(kk + 1.0) - std::lgamma(kk + nn + 1.0)));
        return nrm * L * std::pow(xx, nn + 0.5) * std::exp(-0.5 * xx * xx);
    };
    CHECK(rel_err(got, phi_oracle(1, -0.5, 1.0) * phi_oracle(0, -0.5, 1.0)) < 1e-12);

    const MultiIndex k0{0, 0};
    CHECK(rel_err(laguerre_function_nd(k0, nu, x),
                  laguerre_function(0, -0.5, 1.0) * laguerre_function(0, -0.5, 1.0)) < 1e-14);

    const std::vector<double> bad = {1.0};
    CHECK_THROWS_AS(laguerre_function_nd(k, nu, bad), std::invalid_argument);
}

TEST_CASE("NuVector and MultiIndex invariants") {
    CHECK_THROWS_AS(NuVector({-1.0}), std::domain_error);
    CHECK_THROWS_AS(NuVector({0.5, -1.2}), std::domain_error);
    const NuVector nu{0.3, -0.6};
    CHECK(nu.gamma(0) == 0.0);
    CHECK(nu.gamma(1) == doctest::Approx(0.1));
    CHECK(nu.gamma_max() == doctest::Approx(0.1));
    CHECK(nu.sum() == doctest::Approx(-0.3));

    const NuVector boundary{-0.5, 1.0};
    CHECK(boundary.gamma_max() == 0.0);

    CHECK_THROWS_AS(MultiIndex({0, -1}), std::domain_error);
    const MultiIndex k{2, 1};
    CHECK(k.total() == 3);
    CHECK(k.lowered(1).total() == 2);
    CHECK_THROWS_AS(k.lowered(1).lowered(1), std::domain_error);
}
