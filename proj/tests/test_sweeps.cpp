#include <doctest.h>

#include <cmath>

#include "laguerre/sweeps.hpp"

using namespace laguerre;

namespace {

// Synthetic kernel with a known envelope: 2 t^{-1/2} exp(-d^2/(4t)).
double synthetic_kernel(double t, double x, double y) {
    const double d = x - y;
    return 2.0 * std::exp(-d * d / (4.0 * t)) / std::sqrt(t);
}

double gaussian_log_env(double c, double t, double x, double y) {
    const double d = x - y;
    return -0.5 * std::log(t) - d * d / (c * t);
}

}  // namespace

TEST_CASE("fit_bound_constants recovers a known constant") {
    const SweepGrid grid = reduced_sweep_grid();
    const std::vector<double> cands = default_c_candidates();
    const BoundReport rep =
        fit_bound_constants("synthetic", synthetic_kernel, gaussian_log_env, grid, cands);
    CHECK_FALSE(rep.violated);
    // at c=4 the ratio is exactly 2 everywhere; smaller c blows up off-diagonal,
    // larger c also yields 2 (diagonal points dominate), so the minimum is 2
    CHECK(rep.best_C == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(rep.best_c >= 4.0);
    CHECK(rep.candidates.size() == cands.size());
    CHECK(rep.worst_point.size() == 3);

    // c = 1 and c = 2 candidates must explode off-diagonal
    for (const auto& [c, C] : rep.candidates) {
        if (c < 4.0) CHECK(C > 100.0);
    }
}

TEST_CASE("fit_bound_constants rejects bad input") {
    const std::vector<double> cands = default_c_candidates();
    SweepGrid empty;
    CHECK_THROWS_AS(
        fit_bound_constants("bad", synthetic_kernel, gaussian_log_env, empty, cands),
        std::invalid_argument);
    const SweepGrid grid = reduced_sweep_grid();
    const std::vector<double> bad_cands = {1.0, -2.0};
    CHECK_THROWS_AS(
        fit_bound_constants("bad", synthetic_kernel, gaussian_log_env, grid, bad_cands),
        std::invalid_argument);
}

TEST_CASE("heat kernel case-selection claims admit finite constants") {
    ClaimRequest req;
    req.full_grid = false;

    req.claim_id = "prop31i";
    req.nu = NuVector::scalar(0.7);
    BoundReport r1 = run_bound_claim(req);
    CHECK_FALSE(r1.violated);
    CHECK(std::isfinite(r1.best_C));

    req.claim_id = "prop31ii";
    req.nu = NuVector::scalar(-0.5);
    BoundReport r2 = run_bound_claim(req);
    CHECK_FALSE(r2.violated);

    req.claim_id = "prop31iii";
    req.nu = NuVector::scalar(-0.75);
    BoundReport r3 = run_bound_claim(req);
    CHECK_FALSE(r3.violated);
    CHECK(r3.best_C < 1e4);

    req.claim_id = "lem1";
    BoundReport r4 = run_bound_claim(req);
    CHECK_FALSE(r4.violated);
}

TEST_CASE("derivative kernel claims admit finite constants across orders") {
    for (const char* id : {"delta", "delta-star", "dt"}) {
        for (double nu : {-0.75, -0.5, -0.25, 0.7}) {
            ClaimRequest req;
            req.claim_id = id;
            req.nu = NuVector::scalar(nu);
            req.full_grid = false;
            const BoundReport rep = run_bound_claim(req);
            INFO(id << " nu=" << nu << " C=" << rep.best_C << " c=" << rep.best_c);
            CHECK_FALSE(rep.violated);
            CHECK(std::isfinite(rep.best_C));
            CHECK(rep.best_C > 0.0);
        }
    }
}

TEST_CASE("composed derivative claims (half-time device)") {
    for (const char* id : {"partialk-mixed-k1", "partialk-delta-star-k1", "partialk-dt2"}) {
        ClaimRequest req;
        req.claim_id = id;
        req.nu = NuVector::scalar(-0.75);
        const BoundReport rep = run_bound_claim(req);
        INFO(id << " C=" << rep.best_C << " c=" << rep.best_c);
        CHECK_FALSE(rep.violated);
        CHECK(std::isfinite(rep.best_C));
    }
}

TEST_CASE("H-envelope composition inequality") {
    for (double a : {0.1, 0.25, 0.4}) {
        ClaimRequest req;
        req.claim_id = "h-composition";
        req.envelope_a = a;
        const BoundReport rep = run_bound_claim(req);
        INFO("a=" << a << " C=" << rep.best_C << " c=" << rep.best_c);
        CHECK_FALSE(rep.violated);
        CHECK(std::isfinite(rep.best_C));
    }
}

TEST_CASE("two-dimensional kernel bound") {
    ClaimRequest req;
    req.claim_id = "prop-nd";
    req.nu = NuVector{-0.75, -0.5};
    const BoundReport rep = run_bound_claim(req);
    INFO("C=" << rep.best_C << " c=" << rep.best_c);
    CHECK_FALSE(rep.violated);
    CHECK(std::isfinite(rep.best_C));
    CHECK(rep.worst_point.size() == 5);
}

TEST_CASE("claim registry rejects unknown ids and wrong orders") {
    ClaimRequest req;
    req.claim_id = "nonsense";
    CHECK_THROWS_AS(run_bound_claim(req), std::invalid_argument);

    req.claim_id = "prop31i";
    req.nu = NuVector::scalar(-0.75);  // case (i) needs nu > -1/2
    CHECK_THROWS_AS(run_bound_claim(req), std::domain_error);

    req.claim_id = "prop31iii";
    req.nu = NuVector::scalar(0.3);
    CHECK_THROWS_AS(run_bound_claim(req), std::domain_error);
}
