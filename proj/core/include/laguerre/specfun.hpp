// Scalar special functions for the Laguerre half-line setting: modified
// Bessel functions of the first kind in exponentially scaled form, Laguerre
// polynomials, and the normalized Laguerre eigenfunctions in one and n
// dimensions.

#pragma once

#include <initializer_list>
#include <span>
#include <stdexcept>
#include <vector>

namespace laguerre {

/// Thrown when a request is well-formed but outside what the toolkit
/// implements (distinct from a domain error on the inputs).
class unsupported_claim : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// log Gamma(x) for x > 0 via a Lanczos approximation (g = 7, 9 terms).
/// Accurate to better than 1e-13 for x in (0, 600).
double log_gamma(double x);

/// The order parameter of the Laguerre operator: a vector in (-1, inf)^n.
class NuVector {
public:
    explicit NuVector(std::vector<double> values);
    NuVector(std::initializer_list<double> values)
        : NuVector(std::vector<double>(values)) {}
    static NuVector scalar(double nu) { return NuVector({nu}); }

    int dim() const { return static_cast<int>(values_.size()); }
    double operator[](int j) const { return values_[static_cast<size_t>(j)]; }
    const std::vector<double>& values() const { return values_; }

    /// Signed sum nu_1 + ... + nu_n.
    double sum() const;

    /// Per-coordinate singularity exponent max(-1/2 - nu_j, 0).
    double gamma(int j) const;
    /// gamma_nu = max_j gamma(j), always in [0, 1/2).
    double gamma_max() const;

    /// Order raised by `amount` in coordinate j (default: nu + e_j).
    NuVector shifted(int j, double amount = 1.0) const;

private:
    std::vector<double> values_;
};

/// A multi-index k in N^n labelling Laguerre eigenfunctions.
class MultiIndex {
public:
    explicit MultiIndex(std::vector<int> values);
    MultiIndex(std::initializer_list<int> values)
        : MultiIndex(std::vector<int>(values)) {}
    static MultiIndex scalar(int k) { return MultiIndex({k}); }
    static MultiIndex zeros(int n) { return MultiIndex(std::vector<int>(static_cast<size_t>(n), 0)); }

    int dim() const { return static_cast<int>(values_.size()); }
    int operator[](int j) const { return values_[static_cast<size_t>(j)]; }
    const std::vector<int>& values() const { return values_; }
    int total() const { return total_; }

    /// k - e_j; requires k_j >= 1.
    MultiIndex lowered(int j) const;
    /// k + e_j.
    MultiIndex raised(int j) const;

    friend bool operator==(const MultiIndex& a, const MultiIndex& b) {
        return a.values_ == b.values_;
    }
    friend auto operator<=>(const MultiIndex& a, const MultiIndex& b) {
        return a.values_ <=> b.values_;
    }

private:
    std::vector<int> values_;
    int total_ = 0;
};

/// e^{-z} I_alpha(z) for alpha > -1, z >= 0.
///
/// The scaling removes the e^z growth, so the result is finite for every
/// admissible input; heat-kernel code multiplies it by exponentials with
/// non-positive arguments only. At z = 0 the limit of z^alpha applies:
/// 0 for alpha > 0, 1 for alpha = 0, +inf for alpha in (-1, 0).
double bessel_i_scaled(double alpha, double z);

/// Laguerre polynomial L_k^nu(x), forward three-term recurrence.
double laguerre_polynomial(int k, double nu, double x);

/// L_0^nu(x), ..., L_kmax^nu(x) in one recurrence pass.
std::vector<double> laguerre_polynomial_sequence(int kmax, double nu, double x);

/// Normalized 1-D Laguerre eigenfunction
/// phi_k^nu(x) = (2 k! / Gamma(k+nu+1))^{1/2} L_k^nu(x^2) x^{nu+1/2} e^{-x^2/2},
/// x > 0. Log-gamma normalization; usable up to k = 500.
double laguerre_function(int k, double nu, double x);

/// phi_0^nu(x), ..., phi_kmax^nu(x) at a single abscissa.
std::vector<double> laguerre_function_sequence(int kmax, double nu, double x);

/// d/dx phi_k^nu(x), through the polynomial derivative identity
/// (L_k^nu)'(u) = -L_{k-1}^{nu+1}(u).
double laguerre_function_derivative(int k, double nu, double x);

/// delta phi_k^nu = phi' + (x - (nu+1/2)/x) phi, assembled from the
/// analytic derivative (not from the eigenvector shift relation).
double delta_laguerre_function(int k, double nu, double x);

/// Product eigenfunction phi_k^nu(x) = prod_j phi_{k_j}^{nu_j}(x_j).
double laguerre_function_nd(const MultiIndex& k, const NuVector& nu,
                            std::span<const double> x);

}  // namespace laguerre
