// Test-only oracles, kept independent of the library implementation paths
// they check: direct series summation, monomial expansions, log-substituted
// trapezoid quadrature, the Mehler kernel image sum, and finite-difference
// stencils. Gamma values here come from std::lgamma, not the library's
// Lanczos routine.

#pragma once

#include <functional>

namespace oracles {

/// I_alpha(z) by direct summation of (z/2)^{alpha+2k} / (k! Gamma(alpha+k+1)).
double bessel_series(double alpha, double z, int terms = 40);

/// L_k^nu(x) by the monomial expansion sum (-1)^i binom(k+nu, k-i) x^i / i!,
/// binomials formed as exact factor products.
double laguerre_monomial(int k, double nu, double x);

/// int_a^b f dx through the substitution x = e^u, trapezoid in u.
double integrate_log(const std::function<double(double)>& f, double a, double b, int n);

/// Same integral with the node count doubled until two refinements agree to
/// rel_tol; a handles power-law behavior at the origin.
double integrate_log_adaptive(const std::function<double(double)>& f, double a, double b,
                              double rel_tol);

/// Mehler kernel of e^{-t(-d^2/dx^2 + x^2)} on the full line.
double mehler_kernel(double t, double x, double y);

/// Five-point central first derivative.
double fd5_derivative(const std::function<double(double)>& f, double x, double h);

/// Five-point central second derivative.
double fd5_second_derivative(const std::function<double(double)>& f, double x, double h);

}  // namespace oracles
