#include "laguerre/heat.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace laguerre {

namespace {

struct TimeFactors {
    double t;
    double r;            // e^{-4t}
    double sqrt_r;       // e^{-2t}
    double one_minus_r;  // 1 - r, via expm1 for small t
    double one_plus_r;
    double one_minus_sqrt_r;
    double one_plus_sqrt_r;
};

TimeFactors time_factors(double t) {
    if (!(t > 0.0) || !std::isfinite(t)) {
        throw std::domain_error("heat kernel: time must be positive and finite");
    }
    TimeFactors f;
    f.t = t;
    f.r = std::exp(-4.0 * t);
    f.sqrt_r = std::exp(-2.0 * t);
    f.one_minus_r = -std::expm1(-4.0 * t);
    f.one_plus_r = 1.0 + f.r;
    f.one_minus_sqrt_r = -std::expm1(-2.0 * t);
    f.one_plus_sqrt_r = 1.0 + f.sqrt_r;
    return f;
}

void check_positive(double x, double y) {
    if (!(x > 0.0) || !(y > 0.0)) {
        throw std::domain_error("heat kernel: spatial arguments must be positive");
    }
}

double kernel_with_factors(double nu, const TimeFactors& f, double x, double y) {
    if (!(nu > -1.0)) {
        throw std::domain_error("heat kernel: order must exceed -1");
    }
    const double u = 2.0 * f.sqrt_r * x * y / f.one_minus_r;
    if (u < 1e-200) {
        // Deep decoupling: substitute the z->0 limit of z^{-nu} I_nu(z); the
        // direct product would hit inf * 0.
        const double log_scale =
            std::numbers::ln2 - 2.0 * f.t - std::log(f.one_minus_r);
        const double lp = (nu + 1.0) * log_scale + (nu + 0.5) * std::log(x * y) -
                          0.5 * (f.one_plus_r / f.one_minus_r) * (x * x + y * y) -
                          nu * std::numbers::ln2 - log_gamma(nu + 1.0);
        return std::exp(lp);
    }
    const double d = x - y;
    const double gauss = -0.5 * (f.one_plus_r / f.one_minus_r) * d * d;
    const double cross = -(f.one_minus_sqrt_r / f.one_plus_sqrt_r) * x * y;
    const double pref = 2.0 * f.sqrt_r * std::sqrt(x * y) / f.one_minus_r;
    return pref * std::exp(gauss + cross) * bessel_i_scaled(nu, u);
}

}  // namespace

double heat_kernel_1d(double nu, double t, double x, double y) {
    check_positive(x, y);
    return kernel_with_factors(nu, time_factors(t), x, y);
}

double heat_kernel_nd(const KernelQuery& q) {
    const int n = q.nu.dim();
    if (static_cast<int>(q.x.size()) != n || static_cast<int>(q.y.size()) != n) {
        throw std::invalid_argument("heat_kernel_nd: dimension mismatch");
    }
    const TimeFactors f = time_factors(q.t);
    double prod = 1.0;
    for (int j = 0; j < n; ++j) {
        check_positive(q.x[static_cast<size_t>(j)], q.y[static_cast<size_t>(j)]);
        prod *= kernel_with_factors(q.nu[j], f, q.x[static_cast<size_t>(j)],
                                    q.y[static_cast<size_t>(j)]);
    }
    return prod;
}

double delta_heat_kernel_1d(double nu, double t, double x, double y) {
    check_positive(x, y);
    const TimeFactors f = time_factors(t);
    // x p - ((1+r)/(1-r)) x p + (2 sqrt r/(1-r)) y p^{nu+1}; the two p^nu
    // terms are combined exactly, -2r x p/(1-r).
    const double p_nu = kernel_with_factors(nu, f, x, y);
    const double p_up = kernel_with_factors(nu + 1.0, f, x, y);
    return (2.0 * f.sqrt_r / f.one_minus_r) * (y * p_up - f.sqrt_r * x * p_nu);
}

double delta_star_heat_kernel_1d(double nu, double t, double x, double y) {
    check_positive(x, y);
    const TimeFactors f = time_factors(t);
    // -d/dx of the order-(nu+1) kernel lowers the Bessel order, so the
    // assembled form needs orders nu and nu+1 only:
    //   delta^* p^{nu+1} = (2/(1-r)) x p^{nu+1} - (2 sqrt r/(1-r)) y p^{nu}.
    const double p_nu = kernel_with_factors(nu, f, x, y);
    const double p_up = kernel_with_factors(nu + 1.0, f, x, y);
    return (2.0 / f.one_minus_r) * (x * p_up - f.sqrt_r * y * p_nu);
}

double dt_heat_kernel_1d(double nu, double t, double x, double y) {
    check_positive(x, y);
    const TimeFactors f = time_factors(t);
    const double p_nu = kernel_with_factors(nu, f, x, y);
    const double p_up = kernel_with_factors(nu + 1.0, f, x, y);
    const double inv = 1.0 / f.one_minus_r;
    return -2.0 * (nu + 1.0) * f.one_plus_r * inv * p_nu +
           4.0 * f.r * inv * inv * (x * x + y * y) * p_nu -
           4.0 * f.sqrt_r * f.one_plus_r * inv * inv * x * y * p_up;
}

void EnvelopeSpec::validate() const {
    if (!(a_or_beta >= 0.0) || a_or_beta >= 0.5) {
        throw std::domain_error("EnvelopeSpec: exponent must lie in [0, 1/2)");
    }
    if (kind == EnvelopeKind::T && (!(sigma >= 0.0) || sigma >= 0.5)) {
        throw std::domain_error("EnvelopeSpec: sigma must lie in [0, 1/2)");
    }
    if (!(c > 0.0)) {
        throw std::domain_error("EnvelopeSpec: Gaussian constant must be positive");
    }
    if (n < 1) {
        throw std::domain_error("EnvelopeSpec: dimension must be positive");
    }
}

double log_envelope_eval(const EnvelopeSpec& spec, double t, std::span<const double> x,
                         std::span<const double> y) {
    spec.validate();
    if (static_cast<int>(x.size()) != spec.n || static_cast<int>(y.size()) != spec.n) {
        throw std::invalid_argument("envelope_eval: dimension mismatch");
    }
    if (!(t > 0.0)) {
        throw std::domain_error("envelope_eval: time must be positive");
    }
    const double st = std::sqrt(t);
    const double first = spec.a_or_beta;
    const double second = spec.kind == EnvelopeKind::H ? spec.a_or_beta : spec.sigma;
    double acc = -0.5 * spec.n * std::log(t);
    double d2 = 0.0;
    for (int j = 0; j < spec.n; ++j) {
        const double xj = x[static_cast<size_t>(j)];
        const double yj = y[static_cast<size_t>(j)];
        if (!(xj > 0.0) || !(yj > 0.0)) {
            throw std::domain_error("envelope_eval: spatial arguments must be positive");
        }
        d2 += (xj - yj) * (xj - yj);
        acc += first * std::log1p(st / xj) + second * std::log1p(st / yj);
    }
    return acc - d2 / (spec.c * t);
}

double envelope_eval(const EnvelopeSpec& spec, double t, std::span<const double> x,
                     std::span<const double> y) {
    return std::exp(log_envelope_eval(spec, t, x, y));
}

double envelope_eval(const EnvelopeSpec& spec, double t, double x, double y) {
    return envelope_eval(spec, t, std::span<const double>(&x, 1),
                         std::span<const double>(&y, 1));
}

}  // namespace laguerre
