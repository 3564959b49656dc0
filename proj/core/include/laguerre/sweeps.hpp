// Constant fitting for claimed kernel inequalities |K| <= C * E_c over a
// parameter grid: for each Gaussian constant candidate c the sweep measures
// C(c) = sup |K| / E_c and reports the best pair. The sweep certifies
// existence of finite constants on the grid, not sharpness.

#pragma once

#include <array>
#include <functional>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "laguerre/specfun.hpp"

namespace laguerre {

struct SweepGrid {
    std::vector<double> t;
    std::vector<double> x;
    std::vector<double> y;

    std::size_t size() const { return t.size() * x.size() * y.size(); }
    std::string summary() const;
};

/// t log-spaced over [1e-3, 10] (40 points), x and y log-spaced over
/// [1e-3, 8] (60 points each); straddles every case split of the kernel
/// estimates (xy vs t, t vs 1, xy vs e^{2t}, y vs x/2, y vs 2x).
SweepGrid standard_sweep_grid();

/// Coarser grid for claims whose evaluation needs an inner quadrature.
SweepGrid reduced_sweep_grid();

std::vector<double> default_c_candidates();  // {1, 2, 4, 8, 16, 32}

struct BoundReport {
    std::string claim_id;
    std::string grid_summary;
    double best_C = std::numeric_limits<double>::infinity();
    double best_c = 0.0;
    std::vector<double> worst_point;  // (t, x, y); n-D claims append coordinates
    bool violated = true;
    std::vector<std::pair<double, double>> candidates;  // (c, C(c))
};

using KernelFn = std::function<double(double t, double x, double y)>;
/// log of the envelope at Gaussian constant c (log form keeps far
/// off-diagonal ratios meaningful where the linear envelope underflows).
using LogEnvelopeFn = std::function<double(double c, double t, double x, double y)>;

BoundReport fit_bound_constants(const std::string& claim_id, const KernelFn& kernel,
                                const LogEnvelopeFn& log_envelope, const SweepGrid& grid,
                                std::span<const double> c_candidates);

/// Variant where the claimed inequality couples both sides to the same c
/// (the H-envelope composition inequality).
using KernelWithCFn = std::function<double(double c, double t, double x, double y)>;
BoundReport fit_bound_constants_coupled(const std::string& claim_id,
                                        const KernelWithCFn& kernel,
                                        const LogEnvelopeFn& log_envelope,
                                        const SweepGrid& grid,
                                        std::span<const double> c_candidates);

/// Named claims from the kernel-estimate section; dispatched by id.
struct ClaimRequest {
    std::string claim_id;
    NuVector nu = NuVector::scalar(-0.75);
    double envelope_a = 0.25;  // h-composition only
    std::vector<double> c_candidates = default_c_candidates();
    bool full_grid = true;  // claims with inner quadratures ignore this and
                            // always use the reduced grid
};

std::vector<std::string> known_bound_claims();
BoundReport run_bound_claim(const ClaimRequest& req);

}  // namespace laguerre
