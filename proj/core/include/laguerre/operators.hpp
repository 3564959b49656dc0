// Grid-level operators: the semigroup and its derivative applied through
// kernel quadrature, maximal functions, the time-subordination Riesz
// transform, vertical square functions, weighted norms, and the
// off-diagonal decay measurements for the Gaussian-with-boundary-factor
// operator family.

#pragma once

#include <functional>
#include <span>
#include <vector>

#include "laguerre/grid.hpp"
#include "laguerre/heat.hpp"
#include "laguerre/specfun.hpp"
#include "laguerre/spectral.hpp"

namespace laguerre {

/// e^{-tL} f by kernel quadrature, applied axis by axis (the kernel is a
/// product across coordinates).
GridFunction semigroup_apply_kernel(const GridFunction& f, const NuVector& nu, double t);

/// delta_j e^{-tL} f through the closed-form derivative kernel.
GridFunction delta_semigroup_apply_kernel(const GridFunction& f, const NuVector& nu,
                                          int j, double t);

/// Pointwise sup over the time nodes of |e^{-tL} f|.
GridFunction maximal_semigroup(const GridFunction& f, const NuVector& nu,
                               const TimeQuadrature& tq);

/// Discrete Hardy-Littlewood maximal function M_r over all grid intervals
/// containing the point (one dimension).
GridFunction hl_maximal(const GridFunction& f, double r);

struct RieszQuadratureResult {
    GridFunction value;
    double tail_bound = 0.0;   // scale of the dropped t > t_max tail
    bool range_warning = false;
};

/// R^j f = (1/sqrt(pi)) int sqrt(t) delta_j e^{-tL} f dt/t by quadrature
/// over the time nodes.
RieszQuadratureResult riesz_apply_quadrature(const GridFunction& f, const NuVector& nu,
                                             int j, const TimeQuadrature& tq);

/// S^j f = (int |sqrt(t) delta_j e^{-tL} f|^2 dt/t)^{1/2}, kernel route.
GridFunction square_function_s(const GridFunction& f, const NuVector& nu, int j,
                               const TimeQuadrature& tq);

/// G f = (int |t L e^{-tL} f|^2 dt/t)^{1/2}; the tL factor is realized
/// spectrally as lambda e^{-t lambda} weights on an expansion of degree N.
GridFunction square_function_g(const GridFunction& f, const NuVector& nu,
                               const TimeQuadrature& tq, int N);

/// Batch variants sharing the per-time kernel matrices across the family;
/// needed wherever one operator is applied to many probe inputs.
std::vector<GridFunction> semigroup_apply_kernel_batch(std::span<const GridFunction> fs,
                                                       const NuVector& nu, double t);
std::vector<GridFunction> riesz_quadrature_batch(std::span<const GridFunction> fs,
                                                 const NuVector& nu, int j,
                                                 const TimeQuadrature& tq);
std::vector<GridFunction> square_s_batch(std::span<const GridFunction> fs,
                                         const NuVector& nu, int j,
                                         const TimeQuadrature& tq);

/// Quadrature p-norm with weight values w on the same grid.
double weighted_lp_norm(const GridFunction& f, double p, const GridFunction& w);

using GridOperator = std::function<GridFunction(const GridFunction&)>;

/// max over the family of ||T f||_{p,w} / ||f||_{p,w}; an empirical lower
/// bound on the operator norm, never the norm itself.
double op_norm_probe(const GridOperator& op, double p, const GridFunction& w,
                     std::span<const GridFunction> family);

/// Fixed probe inputs: 10 eigenfunctions, 5 log-normal bumps, 5 indicators.
std::vector<GridFunction> standard_probe_family(GridPtr grid, const NuVector& nu,
                                                unsigned seed);

struct OffDiagonalEntry {
    double t = 0.0;
    int annulus = 0;     // j in S_j(B)
    double log_norm = 0.0;  // log ||T||_{L^2(B) -> L^2(S_j(B))}
};

struct OffDiagonalReport {
    std::vector<OffDiagonalEntry> entries;
    double fitted_c = 0.0;
    double fitted_log_A = 0.0;
    bool decay_consistent = false;
};

/// Measures L^2(B) -> L^2(S_j(B)) norms of T_{t,beta,sigma} across annuli
/// and fits the Gaussian decay exp(-(2^j r_B)^2/(c t)).
OffDiagonalReport offdiagonal_decay(double beta, double sigma, double kernel_c,
                                    double ball_lo, double ball_hi, int j_lo, int j_hi,
                                    std::span<const double> t_list, const Axis& axis);

}  // namespace laguerre
