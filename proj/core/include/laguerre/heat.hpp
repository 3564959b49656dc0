// Closed-form heat kernel of the Laguerre operator and its derivative
// kernels, plus the Gaussian-with-boundary-factor envelopes used as upper
// bounds.
//
// All kernels are assembled in the arrangement where the Bessel factor is
// pre-multiplied by exp(-u), u = 2 sqrt(r) x y / (1-r); every remaining
// exponential has a non-positive argument, so nothing overflows for
// admissible queries.

#pragma once

#include <span>
#include <vector>

#include "laguerre/specfun.hpp"

namespace laguerre {

struct KernelQuery {
    NuVector nu;
    double t = 0.0;
    std::vector<double> x;
    std::vector<double> y;
};

/// p_t^nu(x,y), one dimension. Symmetric in (x,y) by construction.
double heat_kernel_1d(double nu, double t, double x, double y);

/// Product kernel across coordinates.
double heat_kernel_nd(const KernelQuery& q);

/// delta p_t^nu(x,y), the derivative delta = d/dx + x - (nu+1/2)/x acting
/// in the first argument, assembled from kernels at orders nu and nu+1.
double delta_heat_kernel_1d(double nu, double t, double x, double y);

/// delta^* p_t^{nu+1}(x,y) with delta^* = -d/dx + x - (nu+1/2)/x acting in
/// the first argument; assembled from kernels at orders nu and nu+1.
double delta_star_heat_kernel_1d(double nu, double t, double x, double y);

/// d/dt p_t^nu(x,y) via the closed three-term form.
double dt_heat_kernel_1d(double nu, double t, double x, double y);

enum class EnvelopeKind { H, T };

/// Gaussian envelope decorated with boundary factors. Kind H uses the
/// exponent a on both arguments in every coordinate; kind T uses beta on
/// the first argument and sigma on the second.
struct EnvelopeSpec {
    EnvelopeKind kind = EnvelopeKind::H;
    double a_or_beta = 0.0;  // in [0, 1/2)
    double sigma = 0.0;      // in [0, 1/2), T only
    double c = 1.0;          // Gaussian decay constant, > 0
    int n = 1;

    void validate() const;
};

double envelope_eval(const EnvelopeSpec& spec, double t, std::span<const double> x,
                     std::span<const double> y);
double envelope_eval(const EnvelopeSpec& spec, double t, double x, double y);

/// log of envelope_eval; safe where the linear value would underflow.
double log_envelope_eval(const EnvelopeSpec& spec, double t, std::span<const double> x,
                         std::span<const double> y);

}  // namespace laguerre
