// Acceptance suite: every criterion runs at its stated tolerance and prints
// one PASS/FAIL line; the exit status is the number of failed criteria.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "laguerre/grid.hpp"
#include "laguerre/heat.hpp"
#include "laguerre/operators.hpp"
#include "laguerre/specfun.hpp"
#include "laguerre/spectral.hpp"
#include "laguerre/sweeps.hpp"
#include "laguerre/weights.hpp"
#include "oracles.hpp"

using namespace laguerre;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

struct Criterion {
    int id;
    std::string label;
    std::function<Outcome()> run;
};

GridFunction sample_phi(GridPtr grid, int k, double nu) {
    return GridFunction::sample(grid,
                                [k, nu](double x) { return laguerre_function(k, nu, x); });
}

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.3g", v);
    return buf;
}

// ---- criterion 1: orthonormality -------------------------------------------

Outcome run_orthonormality() {
    const GridPtr grid = make_grid(make_log_gauss_axis(1e-4, 20.0, 96, 16));
    double worst = 0.0;
    for (double nu : {-0.9, -0.75, -0.5, 0.0, 1.7}) {
        const Grid bgrid = grid->with_laguerre_boundary(NuVector{nu});
        const Axis& ax = bgrid.axis(0);
        const int N = 20;
        std::vector<std::vector<double>> gram(N + 1, std::vector<double>(N + 1, 0.0));
        for (size_t i = 0; i < ax.size(); ++i) {
            const std::vector<double> seq = laguerre_function_sequence(N, nu, ax.nodes[i]);
            for (int j = 0; j <= N; ++j) {
                const double wj = ax.weights[i] * seq[static_cast<size_t>(j)];
                for (int k = j; k <= N; ++k) {
                    gram[static_cast<size_t>(j)][static_cast<size_t>(k)] +=
                        wj * seq[static_cast<size_t>(k)];
                }
            }
        }
        for (int j = 0; j <= N; ++j) {
            for (int k = j; k <= N; ++k) {
                const double want = j == k ? 1.0 : 0.0;
                worst = std::max(worst,
                                 std::abs(gram[static_cast<size_t>(j)][static_cast<size_t>(k)] -
                                          want));
            }
        }
    }
    return {worst < 1e-7, "max |<phi_j,phi_k> - delta_jk| = " + fmt(worst)};
}

// ---- criterion 2: semigroup route agreement ---------------------------------

Outcome run_route_agreement() {
    const GridPtr grid = make_grid(make_log_gauss_axis(1e-4, 14.0, 72, 12));
    double worst = 0.0;
    for (double nu : {-0.75, -0.5, 0.4}) {
        std::vector<GridFunction> phis;
        for (int k = 0; k <= 10; ++k) phis.push_back(sample_phi(grid, k, nu));
        for (double t : {0.05, 0.3, 1.0}) {
            const std::vector<GridFunction> kernel_route =
                semigroup_apply_kernel_batch(phis, NuVector{nu}, t);
            for (int k = 0; k <= 10; ++k) {
                const double lambda = 4.0 * k + 2.0 * nu + 2.0;
                const GridFunction want = std::exp(-t * lambda) * phis[static_cast<size_t>(k)];
                // relative to the span member, not to the decayed output
                worst = std::max(worst, sup_norm(kernel_route[static_cast<size_t>(k)] - want) /
                                            sup_norm(phis[static_cast<size_t>(k)]));
            }
        }
    }
    return {worst < 1e-5, "max relative route defect = " + fmt(worst)};
}

// ---- criterion 3: semigroup law ---------------------------------------------

Outcome run_semigroup_law() {
    const Axis axis = make_log_gauss_axis(1e-4, 14.0, 72, 12);
    double worst = 0.0;
    for (double nu : {-0.75, -0.5, 0.4}) {
        const Axis baxis = axis.with_laguerre_boundary(nu);
        for (auto [s, t] : std::vector<std::pair<double, double>>{{0.1, 0.2}, {0.5, 0.5}}) {
            for (auto [x, y] : std::vector<std::pair<double, double>>{{1.0, 1.3}, {0.4, 2.0}}) {
                double conv = 0.0;
                for (size_t i = 0; i < baxis.size(); ++i) {
                    conv += baxis.weights[i] * heat_kernel_1d(nu, s, x, baxis.nodes[i]) *
                            heat_kernel_1d(nu, t, baxis.nodes[i], y);
                }
                const double want = heat_kernel_1d(nu, s + t, x, y);
                worst = std::max(worst, std::abs(conv - want) / want);
            }
        }
    }
    return {worst < 1e-6, "max Chapman-Kolmogorov defect = " + fmt(worst)};
}

// ---- criterion 4: intertwining ----------------------------------------------

Outcome run_intertwining() {
    const GridPtr grid = make_grid(make_uniform_axis(0.05, 6.0, 4000));
    const Axis& ax = grid->axis(0);
    double worst = 0.0;
    for (double nu : {-0.75, -0.5, 0.4}) {
        for (int k = 1; k <= 10; ++k) {
            const GridFunction got = apply_delta(sample_phi(grid, k, nu), NuVector{nu}, 0);
            for (size_t i = 0; i < ax.size(); ++i) {
                if (ax.nodes[i] < 0.2 || ax.nodes[i] > 5.0) continue;
                const double want = -2.0 * std::sqrt(static_cast<double>(k)) *
                                    laguerre_function(k - 1, nu + 1.0, ax.nodes[i]);
                worst = std::max(worst, std::abs(got[i] - want));
            }
        }
        for (int k = 0; k <= 10; ++k) {
            const GridFunction got =
                apply_delta_star(sample_phi(grid, k, nu + 1.0), NuVector{nu}, 0);
            for (size_t i = 0; i < ax.size(); ++i) {
                if (ax.nodes[i] < 0.2 || ax.nodes[i] > 5.0) continue;
                const double want =
                    -2.0 * std::sqrt(k + 1.0) * laguerre_function(k + 1, nu, ax.nodes[i]);
                worst = std::max(worst, std::abs(got[i] - want));
            }
        }
    }
    return {worst < 1e-5, "max stencil-vs-shift defect = " + fmt(worst)};
}

// ---- criterion 5: factorization ---------------------------------------------

Outcome run_factorization() {
    double worst = 0.0;
    {
        const GridPtr grid = make_grid(make_uniform_axis(0.05, 7.0, 3000));
        const NuVector nu{-0.6};
        for (int k = 0; k <= 5; ++k) {
            const GridFunction phi = sample_phi(grid, k, nu[0]);
            const GridFunction composed = apply_delta_star(apply_delta(phi, nu, 0), nu, 0);
            for (size_t i = 6; i + 6 < grid->axis(0).size(); ++i) {
                worst = std::max(worst, std::abs(composed[i] - 4.0 * k * phi[i]));
            }
        }
    }
    {
        const std::size_t n2 = 1100;
        const GridPtr grid = make_grid(
            {make_uniform_axis(0.05, 6.5, static_cast<int>(n2)),
             make_uniform_axis(0.05, 6.5, static_cast<int>(n2))});
        const NuVector nu{-0.6, 0.4};
        std::vector<std::size_t> multi(2);
        for (const MultiIndex& k : indices_up_to(2, 5)) {
            const GridFunction phi = GridFunction::sample_nd(
                grid, [&](std::span<const double> x) { return laguerre_function_nd(k, nu, x); });
            GridFunction composed(grid);
            for (int j = 0; j < 2; ++j) {
                composed += apply_delta_star(apply_delta(phi, nu, j), nu, j);
            }
            for (size_t i = 0; i < grid->size(); ++i) {
                grid->unflatten(i, multi);
                if (multi[0] < 6 || multi[0] + 6 >= n2 || multi[1] < 6 || multi[1] + 6 >= n2)
                    continue;
                worst = std::max(worst, std::abs(composed[i] - 4.0 * k.total() * phi[i]));
            }
        }
    }
    return {worst < 1e-6, "max |sum delta* delta phi - 4|k| phi| = " + fmt(worst)};
}

// ---- criterion 6: kernel bounds ----------------------------------------------

Outcome run_kernel_bounds() {
    struct Spec {
        std::string claim;
        NuVector nu;
        double a;
    };
    std::vector<Spec> specs = {
        {"prop31i", NuVector::scalar(0.7), 0.25},
        {"prop31ii", NuVector::scalar(-0.5), 0.25},
        {"prop31iii", NuVector::scalar(-0.75), 0.25},
        {"lem1", NuVector::scalar(-0.75), 0.25},
        {"delta", NuVector::scalar(-0.75), 0.25},
        {"delta-star", NuVector::scalar(-0.75), 0.25},
        {"dt", NuVector::scalar(-0.75), 0.25},
        {"partialk-mixed-k1", NuVector::scalar(-0.75), 0.25},
        {"h-composition", NuVector::scalar(-0.75), 0.1},
        {"h-composition", NuVector::scalar(-0.75), 0.25},
        {"h-composition", NuVector::scalar(-0.75), 0.4},
        {"prop-nd", NuVector{-0.75, -0.5}, 0.25},
    };
    std::ostringstream detail;
    bool pass = true;
    for (const Spec& s : specs) {
        ClaimRequest req;
        req.claim_id = s.claim;
        req.nu = s.nu;
        req.envelope_a = s.a;
        const BoundReport rep = run_bound_claim(req);
        const bool ok = !rep.violated && std::isfinite(rep.best_C);
        pass = pass && ok;
        detail << s.claim << (s.claim == "h-composition" ? "(a=" + fmt(s.a) + ")" : "")
               << ":C=" << fmt(rep.best_C) << ",c=" << fmt(rep.best_c) << (ok ? " " : "! ");
    }
    return {pass, detail.str()};
}

// ---- criterion 7: derivative kernel finite differences ------------------------

Outcome run_derivative_fd() {
    std::mt19937 rng(42);
    std::uniform_real_distribution<double> logt(std::log(0.05), std::log(2.0));
    std::uniform_real_distribution<double> logx(std::log(0.3), std::log(3.0));
    double worst = 0.0;
    for (double nu : {-0.75, -0.5, 0.7}) {
        for (int i = 0; i < 20; ++i) {
            const double t = std::exp(logt(rng));
            const double x = std::exp(logx(rng));
            const double y = std::exp(logx(rng));

            const double hx = 1e-3 * std::min(1.0, std::sqrt(t));
            auto p_of_x = [&](double u) { return heat_kernel_1d(nu, t, u, y); };
            const double fd_delta = oracles::fd5_derivative(p_of_x, x, hx) +
                                    (x - (nu + 0.5) / x) * heat_kernel_1d(nu, t, x, y);
            const double got_delta = delta_heat_kernel_1d(nu, t, x, y);
            worst = std::max(worst, std::abs(got_delta - fd_delta) /
                                        std::max(std::abs(fd_delta), 1e-12));

            const double ht = 5e-3 * t;
            auto p_of_t = [&](double s) { return heat_kernel_1d(nu, s, x, y); };
            const double fd_dt = oracles::fd5_derivative(p_of_t, t, ht);
            const double got_dt = dt_heat_kernel_1d(nu, t, x, y);
            worst = std::max(worst,
                             std::abs(got_dt - fd_dt) / std::max(std::abs(fd_dt), 1e-12));
        }
    }
    return {worst < 1e-5, "max relative finite-difference defect = " + fmt(worst)};
}

// ---- criterion 8: Riesz and square function closed forms ----------------------

Outcome run_riesz_square_closed_forms() {
    const GridPtr grid = make_grid(make_log_gauss_axis(1e-4, 14.0, 48, 8));
    const NuVector nu{-0.5};
    const TimeQuadrature tq = TimeQuadrature::make_log(1e-5, 50.0, 100);
    std::ostringstream detail;

    const GridFunction phi1 = sample_phi(grid, 1, nu[0]);
    const RieszQuadratureResult r = riesz_apply_quadrature(phi1, nu, 0, tq);
    const GridFunction r_want = (-2.0 / std::sqrt(5.0)) * sample_phi(grid, 0, 0.5);
    const double riesz_defect = sup_norm(r.value - r_want) / sup_norm(r_want);
    detail << "riesz=" << fmt(riesz_defect);

    const GridFunction s1 = square_function_s(phi1, nu, 0, tq);
    const GridFunction s_want = std::sqrt(2.0 / 5.0) * sample_phi(grid, 0, 0.5);
    const double s_defect = sup_norm(s1 - s_want) / sup_norm(s_want);
    detail << " squareS=" << fmt(s_defect);

    double g_defect = 0.0;
    const Axis& ax = grid->axis(0);
    for (int k : {0, 2, 5}) {
        const GridFunction phi = sample_phi(grid, k, nu[0]);
        const GridFunction gk = square_function_g(phi, nu, tq, 10);
        double w = 0.0;
        for (size_t i = 0; i < ax.size(); ++i) {
            if (ax.nodes[i] < 0.1 || ax.nodes[i] > 8.0) continue;
            w = std::max(w, std::abs(gk[i] - 0.5 * std::abs(phi[i])));
        }
        g_defect = std::max(g_defect, w);
    }
    detail << " squareG=" << fmt(g_defect);

    const bool pass = riesz_defect < 1e-4 && s_defect < 1e-3 && g_defect < 1e-3;
    return {pass, detail.str()};
}

// ---- criterion 9: off-diagonal decay ------------------------------------------

Outcome run_offdiagonal() {
    const Axis axis = make_log_gauss_axis(1e-3, 40.0, 60, 6);
    const std::vector<double> ts = {0.05, 0.2, 1.0};
    const OffDiagonalReport rep = offdiagonal_decay(0.25, 0.25, 1.0, 1.0, 2.0, 2, 6, ts, axis);
    const bool pass = rep.decay_consistent && rep.fitted_c > 0.0 &&
                      std::isfinite(rep.fitted_log_A) && rep.entries.size() == 15;
    return {pass, "fitted c = " + fmt(rep.fitted_c) +
                      ", log A = " + fmt(rep.fitted_log_A) +
                      (rep.decay_consistent ? ", monotone decay" : ", NOT monotone")};
}

// ---- criterion 10: weight criteria --------------------------------------------

Outcome run_weight_criteria() {
    // closed-form theorem ranges first
    const ExponentRange m = theorem_range(NuVector{-0.75}, TheoremOperator::maximal);
    const ExponentRange r = theorem_range(NuVector{-0.75}, TheoremOperator::riesz, 0);
    const ExponentRange cz = theorem_range(NuVector{-0.5, 0.3}, TheoremOperator::riesz, 1);
    bool pass = std::abs(m.p_lo() - 4.0 / 3.0) < 1e-12 && std::abs(m.p_hi() - 4.0) < 1e-12 &&
                std::abs(r.p_lo() - 4.0 / 3.0) < 1e-12 && std::isinf(r.p_hi()) &&
                std::abs(cz.p_lo() - 1.0) < 1e-12 && std::isinf(cz.p_hi());

    // randomized closed-form vs refinement-behavior agreement
    std::mt19937 rng(2024);
    std::uniform_real_distribution<double> sdist(-2.0, 2.2);
    std::uniform_real_distribution<double> pdist(1.3, 3.5);
    std::uniform_real_distribution<double> qdist(1.5, 6.0);
    int checked = 0, mismatches = 0;
    while (checked < 20) {
        const double sigma = sdist(rng);
        const double p = pdist(rng);
        const double q = qdist(rng);
        // two-sided margin >= 0.05 from every boundary
        if (std::abs(sigma + 1.0) < 0.05) continue;
        if (std::abs(sigma - (p - 1.0)) < 0.05) continue;
        if (std::abs(sigma + 1.0 / q) < 0.05) continue;
        ++checked;
        const PowerWeightMembership want = power_weight_class(sigma, p, q, 1);
        const RefinementReport rep = refinement_study(WeightSpec::power(sigma), p, q);
        if (rep.ap_stabilizes != want.in_ap) ++mismatches;
        if (rep.rh_stabilizes != want.in_rh) ++mismatches;
    }
    pass = pass && mismatches == 0;
    return {pass, "ranges ok, " + std::to_string(mismatches) +
                      " verdict mismatches in 20 randomized cases"};
}

// ---- criterion 11: commutation identities --------------------------------------

Outcome run_commutation() {
    const GridPtr grid = make_grid(make_log_gauss_axis(1e-4, 20.0, 128, 16));
    double worst = 0.0;
    for (double nu : {-0.75, -0.5, 0.4}) {
        for (int k : {1, 2, 3}) {
            const CommutationReport rep =
                check_commutation(NuVector{nu}, 0, 0.3, sample_phi(grid, k, nu), 12);
            worst = std::max(worst, rep.defect_alpha2);
        }
    }
    // dual form with (L_{nu+e_j}+2)^{-1/2}
    for (double nu : {-0.75, 0.4}) {
        const double nu_up = nu + 1.0;
        const double t = 0.25;
        const GridFunction dstar_f = GridFunction::sample(grid, [&](double x) {
            const double phi = laguerre_function(1, nu_up, x);
            const double dphi = laguerre_function_derivative(1, nu_up, x);
            return -dphi + (x - (nu + 0.5) / x) * phi;
        });
        SpectralCoeffs left_w(NuVector{nu}, 6);
        const SpectralCoeffs dstar_coeffs = expand(dstar_f, NuVector{nu}, 6);
        for (const auto& [k, v] : dstar_coeffs.coeffs()) {
            const double lambda = eigenvalue(k, NuVector{nu});
            left_w.set(k, v * std::exp(-t * lambda) / std::sqrt(lambda));
        }
        const double lambda_up = eigenvalue(MultiIndex::scalar(1), NuVector{nu_up}) + 2.0;
        SpectralCoeffs right_w(NuVector{nu}, 6);
        right_w.set(MultiIndex::scalar(2), -2.0 * std::sqrt(2.0) * std::exp(-t * lambda_up) /
                                               std::sqrt(lambda_up));
        worst = std::max(worst, sup_norm(synthesize(left_w, grid) - synthesize(right_w, grid)));
    }
    return {worst < 1e-7, "max spectral commutation defect = " + fmt(worst)};
}

}  // namespace

int main() {
    std::vector<Criterion> criteria = {
        {1, "orthonormality of the eigenfunction basis", run_orthonormality},
        {2, "kernel vs spectral semigroup route agreement", run_route_agreement},
        {3, "semigroup law (Chapman-Kolmogorov)", run_semigroup_law},
        {4, "intertwining of delta and delta*", run_intertwining},
        {5, "factorization sum delta* delta = L - 2(|nu|+n)", run_factorization},
        {6, "kernel bounds admit finite fitted constants", run_kernel_bounds},
        {7, "derivative kernels match finite differences", run_derivative_fd},
        {8, "Riesz and square function closed forms", run_riesz_square_closed_forms},
        {9, "off-diagonal decay of T_{t,beta,sigma}", run_offdiagonal},
        {10, "Muckenhoupt weight criteria and theorem ranges", run_weight_criteria},
        {11, "commutation identities (alpha = 2 and dual form)", run_commutation},
    };

    int failures = 0;
    for (const Criterion& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome out;
        try {
            out = c.run();
        } catch (const std::exception& e) {
            out = {false, std::string("exception: ") + e.what()};
        }
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("%s %2d %-52s %s (%.1fs)\n", out.pass ? "PASS" : "FAIL", c.id,
                    c.label.c_str(), out.detail.c_str(), secs);
        std::fflush(stdout);
        if (!out.pass) ++failures;
    }
    if (failures == 0) {
        std::printf("acceptance: all %zu criteria passed\n", criteria.size());
    } else {
        std::printf("acceptance: %d criteria FAILED\n", failures);
    }
    return failures;
}
