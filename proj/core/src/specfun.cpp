#include "laguerre/specfun.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace laguerre {

namespace {

// Lanczos coefficients, g = 7 (Godfrey's 9-term set).
constexpr double kLanczos[9] = {
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
};

constexpr double kHalfLog2Pi = 0.91893853320467274178;  // log(2*pi)/2

}  // namespace

double log_gamma(double x) {
    if (!(x > 0.0)) {
        throw std::domain_error("log_gamma: argument must be positive");
    }
    // Shift small arguments up; Gamma(x) = Gamma(x+1)/x.
    double shift = 0.0;
    while (x < 0.5) {
        shift -= std::log(x);
        x += 1.0;
    }
    const double z = x - 1.0;
    double acc = kLanczos[0];
    for (int i = 1; i < 9; ++i) {
        acc += kLanczos[i] / (z + i);
    }
    const double t = z + 7.5;
    return shift + kHalfLog2Pi + (z + 0.5) * std::log(t) - t + std::log(acc);
}

NuVector::NuVector(std::vector<double> values) : values_(std::move(values)) {
    if (values_.empty()) {
        throw std::invalid_argument("NuVector: empty order vector");
    }
    for (double v : values_) {
        if (!(v > -1.0) || !std::isfinite(v)) {
            throw std::domain_error("NuVector: every component must exceed -1");
        }
    }
}

double NuVector::sum() const {
    double s = 0.0;
    for (double v : values_) s += v;
    return s;
}

double NuVector::gamma(int j) const {
    return std::max(-0.5 - values_[static_cast<size_t>(j)], 0.0);
}

double NuVector::gamma_max() const {
    double g = 0.0;
    for (int j = 0; j < dim(); ++j) g = std::max(g, gamma(j));
    return g;
}

NuVector NuVector::shifted(int j, double amount) const {
    std::vector<double> v = values_;
    v.at(static_cast<size_t>(j)) += amount;
    return NuVector(std::move(v));
}

MultiIndex::MultiIndex(std::vector<int> values) : values_(std::move(values)) {
    if (values_.empty()) {
        throw std::invalid_argument("MultiIndex: empty index vector");
    }
    for (int v : values_) {
        if (v < 0) throw std::domain_error("MultiIndex: components must be nonnegative");
        total_ += v;
    }
}

MultiIndex MultiIndex::lowered(int j) const {
    if (values_.at(static_cast<size_t>(j)) < 1) {
        throw std::domain_error("MultiIndex: cannot lower a zero component");
    }
    std::vector<int> v = values_;
    v[static_cast<size_t>(j)] -= 1;
    return MultiIndex(std::move(v));
}

MultiIndex MultiIndex::raised(int j) const {
    std::vector<int> v = values_;
    v.at(static_cast<size_t>(j)) += 1;
    return MultiIndex(std::move(v));
}

double bessel_i_scaled(double alpha, double z) {
    if (!(alpha > -1.0)) {
        throw std::domain_error("bessel_i_scaled: order must exceed -1");
    }
    if (!(z >= 0.0) || !std::isfinite(z)) {
        throw std::domain_error("bessel_i_scaled: argument must be finite and nonnegative");
    }
    if (z == 0.0) {
        if (alpha > 0.0) return 0.0;
        if (alpha == 0.0) return 1.0;
        return std::numeric_limits<double>::infinity();  // limit of z^alpha
    }

    // Power series with the e^{-z} scale folded into the leading term;
    // compensated summation keeps ~1e-16 relative error.
    if (z <= std::max(10.0, 2.0 * alpha * alpha)) {
        double term = std::exp(alpha * std::log(0.5 * z) - log_gamma(alpha + 1.0) - z);
        if (!std::isfinite(term)) return term;  // z^alpha pole region, alpha < 0
        const double q = 0.25 * z * z;
        double sum = term;
        double comp = 0.0;
        for (int k = 1; k <= 60; ++k) {
            term *= q / (k * (alpha + k));
            const double y = term - comp;
            const double s = sum + y;
            comp = (s - sum) - y;
            sum = s;
            if (term <= sum * 1e-18) break;
        }
        return sum;
    }

    // Scaled asymptotic expansion,
    //   e^{-z} I_a(z) ~ (2 pi z)^{-1/2} [ sum (-1)^k a_k/z^k
    //                                     - sin(a pi) e^{-2z} sum a_k/z^k ],
    // a_k = prod_{m<=k} (4a^2-(2m-1)^2) / (8^k k!). Ten correction terms.
    const double mu = 4.0 * alpha * alpha;
    double u = 1.0;
    double main_sum = 1.0;
    double refl_sum = 1.0;
    double sign = 1.0;
    double prev = std::numeric_limits<double>::infinity();
    for (int k = 1; k <= 10; ++k) {
        const double odd = 2.0 * k - 1.0;
        u *= (mu - odd * odd) / (8.0 * k * z);
        if (std::abs(u) >= prev) break;  // asymptotic tail started growing
        prev = std::abs(u);
        sign = -sign;
        main_sum += sign * u;
        refl_sum += u;
    }
    const double inv_norm = 1.0 / std::sqrt(2.0 * std::numbers::pi * z);
    const double refl = -std::sin(alpha * std::numbers::pi) * std::exp(-2.0 * z);
    return inv_norm * (main_sum + refl * refl_sum);
}

double laguerre_polynomial(int k, double nu, double x) {
    if (!(nu > -1.0)) {
        throw std::domain_error("laguerre_polynomial: order must exceed -1");
    }
    if (k < 0) {
        throw std::domain_error("laguerre_polynomial: degree must be nonnegative");
    }
    if (!(x >= 0.0)) {
        throw std::domain_error("laguerre_polynomial: argument must be nonnegative");
    }
    if (k == 0) return 1.0;
    double prev = 1.0;
    double cur = 1.0 + nu - x;
    for (int i = 1; i < k; ++i) {
        const double next = ((2.0 * i + 1.0 + nu - x) * cur - (i + nu) * prev) / (i + 1.0);
        prev = cur;
        cur = next;
    }
    return cur;
}

std::vector<double> laguerre_polynomial_sequence(int kmax, double nu, double x) {
    if (!(nu > -1.0)) {
        throw std::domain_error("laguerre_polynomial_sequence: order must exceed -1");
    }
    if (kmax < 0) {
        throw std::domain_error("laguerre_polynomial_sequence: degree must be nonnegative");
    }
    std::vector<double> out(static_cast<size_t>(kmax) + 1);
    out[0] = 1.0;
    if (kmax == 0) return out;
    out[1] = 1.0 + nu - x;
    for (int i = 1; i < kmax; ++i) {
        out[static_cast<size_t>(i) + 1] =
            ((2.0 * i + 1.0 + nu - x) * out[static_cast<size_t>(i)] -
             (i + nu) * out[static_cast<size_t>(i) - 1]) /
            (i + 1.0);
    }
    return out;
}

namespace {

double check_phi_args(int k, double nu, double x) {
    if (!(nu > -1.0)) {
        throw std::domain_error("laguerre_function: order must exceed -1");
    }
    if (k < 0) {
        throw std::domain_error("laguerre_function: degree must be nonnegative");
    }
    if (!(x > 0.0)) {
        throw std::domain_error("laguerre_function: abscissa must be positive");
    }
    return x;
}

// log of the normalization (2 k! / Gamma(k+nu+1))^{1/2} combined with the
// x^{nu+1/2} e^{-x^2/2} profile; exponentiated once to dodge overflow.
double log_phi_prefactor(int k, double nu, double x) {
    return 0.5 * (std::numbers::ln2 + log_gamma(k + 1.0) - log_gamma(k + nu + 1.0)) +
           (nu + 0.5) * std::log(x) - 0.5 * x * x;
}

}  // namespace

double laguerre_function(int k, double nu, double x) {
    check_phi_args(k, nu, x);
    const double L = laguerre_polynomial(k, nu, x * x);
    return L * std::exp(log_phi_prefactor(k, nu, x));
}

std::vector<double> laguerre_function_sequence(int kmax, double nu, double x) {
    check_phi_args(kmax, nu, x);
    std::vector<double> out = laguerre_polynomial_sequence(kmax, nu, x * x);
    double logpre = log_phi_prefactor(0, nu, x);
    double pre = std::exp(logpre);
    for (int k = 0; k <= kmax; ++k) {
        out[static_cast<size_t>(k)] *= pre;
        // norm_{k+1}/norm_k = sqrt((k+1)/(k+1+nu))
        pre *= std::sqrt((k + 1.0) / (k + 1.0 + nu));
    }
    return out;
}

double laguerre_function_derivative(int k, double nu, double x) {
    check_phi_args(k, nu, x);
    const double phi = laguerre_function(k, nu, x);
    const double profile = ((nu + 0.5) / x - x) * phi;
    if (k == 0) return profile;
    const double dL = -laguerre_polynomial(k - 1, nu + 1.0, x * x);
    return profile + 2.0 * x * dL * std::exp(log_phi_prefactor(k, nu, x));
}

double delta_laguerre_function(int k, double nu, double x) {
    check_phi_args(k, nu, x);
    if (k == 0) return 0.0;
    // phi' + (x - (nu+1/2)/x) phi collapses to the single polynomial term.
    const double dL = -laguerre_polynomial(k - 1, nu + 1.0, x * x);
    return 2.0 * x * dL * std::exp(log_phi_prefactor(k, nu, x));
}

double laguerre_function_nd(const MultiIndex& k, const NuVector& nu,
                            std::span<const double> x) {
    if (k.dim() != nu.dim() || static_cast<size_t>(nu.dim()) != x.size()) {
        throw std::invalid_argument("laguerre_function_nd: dimension mismatch");
    }
    double prod = 1.0;
    for (int j = 0; j < nu.dim(); ++j) {
        prod *= laguerre_function(k[j], nu[j], x[static_cast<size_t>(j)]);
    }
    return prod;
}

}  // namespace laguerre
