// Muckenhoupt weight classes, the gamma singularity exponents, the
// admissible exponent ranges of the boundedness theorems, and empirical
// A_p / reverse Holder constants over grid intervals.

#pragma once

#include <span>
#include <vector>

#include "laguerre/grid.hpp"
#include "laguerre/specfun.hpp"

namespace laguerre {

/// gamma_nu = max_j max(-1/2 - nu_j, 0).
double gamma_nu(const NuVector& nu);

/// gamma of the shifted order nu + e_j.
double gamma_shift(const NuVector& nu, int j);

struct PowerWeightMembership {
    bool in_ap = false;
    bool in_rh = false;
};

/// Closed-form power weight criteria on R^n_+: x^sigma lies in A_p iff
/// -n < sigma < n(p-1), and in RH_q iff sigma q > -n.
PowerWeightMembership power_weight_class(double sigma, double p, double q, int n);

enum class TheoremOperator { maximal, riesz, square_s, square_g };

/// Open exponent interval with the weight-class index maps of the
/// corresponding theorem.
class ExponentRange {
public:
    ExponentRange(double p_lo, double p_hi, double gamma_low, double gamma_high);

    double p_lo() const { return p_lo_; }
    double p_hi() const { return p_hi_; }  // +inf under the 1/0 convention
    bool contains(double p) const { return p > p_lo_ && p < p_hi_; }

    /// Muckenhoupt index of the required class A_{(1-gamma_nu) p}.
    double ap_index(double p) const;
    /// Reverse Holder index (1/(p gamma))'; degenerates to RH_1 (all
    /// weights) when the governing gamma is zero.
    double rh_index(double p) const;

private:
    double p_lo_, p_hi_, gamma_low_, gamma_high_;
};

/// The admissible (p, weight) range of the named theorem. The maximal
/// function range is proved in one dimension only; asking for it with
/// n >= 2 raises unsupported_claim.
ExponentRange theorem_range(const NuVector& nu, TheoremOperator op, int j = 0);

struct WeightSpec {
    enum class Kind { power, grid };
    Kind kind = Kind::power;
    double sigma = 0.0;
    std::vector<double> values;  // grid kind

    static WeightSpec power(double sigma) { return WeightSpec{Kind::power, sigma, {}}; }
    static WeightSpec from_values(std::vector<double> v) {
        return WeightSpec{Kind::grid, 0.0, std::move(v)};
    }
    double eval(double x) const;
};

struct ApRhConstants {
    double ap = 0.0;
    double rh = 0.0;
};

/// Sup over grid intervals (all index pairs with at least 4 interior
/// points) of the A_p and RH_q quotients.
ApRhConstants ap_rh_constants_grid(const WeightSpec& w, double p, double q,
                                   const Axis& axis);

/// Tensor variant over axis-aligned near-cubes (index windows whose side
/// lengths agree within 25%), two dimensions. Power weights read |x|^sigma.
ApRhConstants ap_rh_constants_grid(const WeightSpec& w, double p, double q,
                                   const Grid& grid);

struct RefinementLevel {
    double x_min = 0.0;
    ApRhConstants constants;
};

struct RefinementReport {
    std::vector<RefinementLevel> levels;
    double ap_slope = 0.0;  // extrapolated terminal d log10(const) per decade
    double rh_slope = 0.0;
    bool ap_stabilizes = false;
    bool rh_stabilizes = false;
};

/// Interval sweeps on a family of grids reaching toward the origin:
/// constants of weights inside the open membership region stabilize, those
/// outside grow without bound (reported, not asserted).
RefinementReport refinement_study(const WeightSpec& w, double p, double q,
                                  double x_hi = 8.0, int levels = 7);

}  // namespace laguerre
