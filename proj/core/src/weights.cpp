#include "laguerre/weights.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace laguerre {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

double gamma_nu(const NuVector& nu) { return nu.gamma_max(); }

double gamma_shift(const NuVector& nu, int j) { return nu.shifted(j).gamma_max(); }

PowerWeightMembership power_weight_class(double sigma, double p, double q, int n) {
    if (!(p > 1.0) || !(q > 1.0)) {
        throw std::domain_error("power_weight_class: exponents must exceed 1");
    }
    if (n < 1) throw std::domain_error("power_weight_class: bad dimension");
    PowerWeightMembership m;
    m.in_ap = sigma > -n && sigma < n * (p - 1.0);
    m.in_rh = sigma * q > -n;
    return m;
}

ExponentRange::ExponentRange(double p_lo, double p_hi, double gamma_low, double gamma_high)
    : p_lo_(p_lo), p_hi_(p_hi), gamma_low_(gamma_low), gamma_high_(gamma_high) {
    if (!(p_lo_ >= 1.0) || !(p_hi_ > p_lo_)) {
        throw std::invalid_argument("ExponentRange: empty range");
    }
}

double ExponentRange::ap_index(double p) const {
    if (!contains(p)) throw std::domain_error("ExponentRange: p outside the open range");
    return (1.0 - gamma_low_) * p;
}

double ExponentRange::rh_index(double p) const {
    if (!contains(p)) throw std::domain_error("ExponentRange: p outside the open range");
    if (gamma_high_ == 0.0) return 1.0;  // RH_1: every weight qualifies
    const double pg = p * gamma_high_;
    return 1.0 / (1.0 - pg);  // (1/(p gamma))'
}

ExponentRange theorem_range(const NuVector& nu, TheoremOperator op, int j) {
    const double g = gamma_nu(nu);
    double g_hi = 0.0;
    switch (op) {
        case TheoremOperator::maximal:
            if (nu.dim() != 1) {
                throw unsupported_claim(
                    "theorem_range: the maximal function bound is proved only for n = 1");
            }
            g_hi = g;
            break;
        case TheoremOperator::square_g:
            g_hi = g;
            break;
        case TheoremOperator::riesz:
        case TheoremOperator::square_s:
            if (j < 0 || j >= nu.dim()) {
                throw std::invalid_argument("theorem_range: bad coordinate");
            }
            g_hi = gamma_shift(nu, j);
            break;
    }
    const double p_lo = 1.0 / (1.0 - g);            // (1/gamma)'
    const double p_hi = g_hi == 0.0 ? kInf : 1.0 / g_hi;
    return ExponentRange(p_lo, p_hi, g, g_hi);
}

double WeightSpec::eval(double x) const {
    if (kind != Kind::power) {
        throw std::invalid_argument("WeightSpec::eval: only the power kind is callable");
    }
    return std::pow(x, sigma);
}

ApRhConstants ap_rh_constants_grid(const WeightSpec& w, double p, double q,
                                   const Axis& axis) {
    if (!(p > 1.0) || !(q > 1.0)) {
        throw std::domain_error("ap_rh_constants_grid: exponents must exceed 1");
    }
    const std::size_t n = axis.size();
    std::vector<double> wv(n);
    if (w.kind == WeightSpec::Kind::power) {
        for (std::size_t i = 0; i < n; ++i) wv[i] = std::pow(axis.nodes[i], w.sigma);
    } else {
        if (w.values.size() != n) {
            throw std::invalid_argument("ap_rh_constants_grid: weight values mismatch grid");
        }
        wv = w.values;
    }
    for (double v : wv) {
        if (!(v > 0.0)) throw std::domain_error("ap_rh_constants_grid: weight must be positive");
    }

    // prefix sums of measure, w, w^{-1/(p-1)}, w^q
    std::vector<double> pm(n + 1, 0.0), pw(n + 1, 0.0), pd(n + 1, 0.0), pq(n + 1, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        pm[i + 1] = pm[i] + axis.weights[i];
        pw[i + 1] = pw[i] + axis.weights[i] * wv[i];
        pd[i + 1] = pd[i] + axis.weights[i] * std::pow(wv[i], -1.0 / (p - 1.0));
        pq[i + 1] = pq[i] + axis.weights[i] * std::pow(wv[i], q);
    }

    ApRhConstants out;
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = a + 5; b < n; ++b) {  // at least 4 interior points
            const double len = pm[b + 1] - pm[a];
            const double avg_w = (pw[b + 1] - pw[a]) / len;
            const double avg_d = (pd[b + 1] - pd[a]) / len;
            const double avg_q = (pq[b + 1] - pq[a]) / len;
            out.ap = std::max(out.ap, avg_w * std::pow(avg_d, p - 1.0));
            out.rh = std::max(out.rh, std::pow(avg_q, 1.0 / q) / avg_w);
        }
    }
    return out;
}

ApRhConstants ap_rh_constants_grid(const WeightSpec& w, double p, double q,
                                   const Grid& grid) {
    if (grid.dim() == 1) return ap_rh_constants_grid(w, p, q, grid.axis(0));
    if (grid.dim() != 2) {
        throw unsupported_claim("ap_rh_constants_grid: cubes implemented for n <= 2");
    }
    if (!(p > 1.0) || !(q > 1.0)) {
        throw std::domain_error("ap_rh_constants_grid: exponents must exceed 1");
    }
    const Axis& a0 = grid.axis(0);
    const Axis& a1 = grid.axis(1);
    const std::size_t n0 = a0.size(), n1 = a1.size();

    std::vector<double> wv(grid.size());
    if (w.kind == WeightSpec::Kind::power) {
        for (std::size_t i = 0; i < n0; ++i) {
            for (std::size_t j = 0; j < n1; ++j) {
                const double x1 = a0.nodes[i], x2 = a1.nodes[j];
                wv[i * n1 + j] = std::pow(std::sqrt(x1 * x1 + x2 * x2), w.sigma);
            }
        }
    } else {
        if (w.values.size() != grid.size()) {
            throw std::invalid_argument("ap_rh_constants_grid: weight values mismatch grid");
        }
        wv = w.values;
    }

    // 2-D prefix sums over (measure, w, w^{-1/(p-1)}, w^q)
    auto prefix = [&](const std::function<double(std::size_t)>& f) {
        std::vector<double> ps((n0 + 1) * (n1 + 1), 0.0);
        for (std::size_t i = 0; i < n0; ++i) {
            for (std::size_t j = 0; j < n1; ++j) {
                ps[(i + 1) * (n1 + 1) + (j + 1)] =
                    f(i * n1 + j) * a0.weights[i] * a1.weights[j] +
                    ps[i * (n1 + 1) + (j + 1)] + ps[(i + 1) * (n1 + 1) + j] -
                    ps[i * (n1 + 1) + j];
            }
        }
        return ps;
    };
    for (double v : wv) {
        if (!(v > 0.0)) throw std::domain_error("ap_rh_constants_grid: weight must be positive");
    }
    const std::vector<double> pm = prefix([](std::size_t) { return 1.0; });
    const std::vector<double> pw = prefix([&](std::size_t i) { return wv[i]; });
    const std::vector<double> pd =
        prefix([&](std::size_t i) { return std::pow(wv[i], -1.0 / (p - 1.0)); });
    const std::vector<double> pq = prefix([&](std::size_t i) { return std::pow(wv[i], q); });
    auto box = [&](const std::vector<double>& ps, std::size_t i0, std::size_t i1,
                   std::size_t j0, std::size_t j1) {
        return ps[(i1 + 1) * (n1 + 1) + (j1 + 1)] - ps[i0 * (n1 + 1) + (j1 + 1)] -
               ps[(i1 + 1) * (n1 + 1) + j0] + ps[i0 * (n1 + 1) + j0];
    };

    ApRhConstants out;
    for (std::size_t i0 = 0; i0 < n0; ++i0) {
        for (std::size_t i1 = i0 + 5; i1 < n0; ++i1) {
            const double side = a0.nodes[i1] - a0.nodes[i0];
            // matching window in the second axis with a comparable side
            std::size_t j1 = 0;
            for (std::size_t j0 = 0; j0 + 5 < n1; ++j0) {
                if (j1 < j0 + 5) j1 = j0 + 5;
                while (j1 + 1 < n1 && a1.nodes[j1] - a1.nodes[j0] < side) ++j1;
                const double other = a1.nodes[j1] - a1.nodes[j0];
                if (other < 0.8 * side || other > 1.25 * side) continue;
                const double len = box(pm, i0, i1, j0, j1);
                const double avg_w = box(pw, i0, i1, j0, j1) / len;
                const double avg_d = box(pd, i0, i1, j0, j1) / len;
                const double avg_q = box(pq, i0, i1, j0, j1) / len;
                out.ap = std::max(out.ap, avg_w * std::pow(avg_d, p - 1.0));
                out.rh = std::max(out.rh, std::pow(avg_q, 1.0 / q) / avg_w);
            }
        }
    }
    return out;
}

namespace {

// Terminal growth exponent of log(const) per decade of 1/x_min. Both the
// converging transient of a member and the power growth of a non-member
// decay geometrically toward their limits (0 vs the boundary excess), so a
// Richardson extrapolation of the slope sequence separates them even at
// small margins.
double terminal_slope(const std::vector<double>& consts) {
    std::vector<double> slopes;
    for (std::size_t i = 1; i < consts.size(); ++i) {
        slopes.push_back(std::log10(consts[i] / consts[i - 1]));
    }
    const std::size_t n = slopes.size();
    const double s1 = slopes[n - 3], s2 = slopes[n - 2], s3 = slopes[n - 1];
    const double d1 = s2 - s1, d2 = s3 - s2;
    if (std::abs(d2) < 1e-6 || std::abs(d1) <= std::abs(d2)) return s3;
    const double r = d2 / d1;
    return s3 + d2 * r / (1.0 - r);
}

}  // namespace

RefinementReport refinement_study(const WeightSpec& w, double p, double q, double x_hi,
                                  int levels) {
    if (levels < 4) throw std::invalid_argument("refinement_study: need at least 4 levels");
    RefinementReport rep;
    for (int L = 0; L < levels; ++L) {
        const double x_min = 1e-2 * std::pow(10.0, -L);
        const int decades = static_cast<int>(std::ceil(std::log10(x_hi / x_min)));
        const Axis axis = make_log_gauss_axis(x_min, x_hi, 10 * decades, 8);
        rep.levels.push_back({x_min, ap_rh_constants_grid(w, p, q, axis)});
    }
    std::vector<double> ap, rh;
    for (const RefinementLevel& L : rep.levels) {
        ap.push_back(L.constants.ap);
        rh.push_back(L.constants.rh);
    }
    rep.ap_slope = terminal_slope(ap);
    rep.rh_slope = terminal_slope(rh);
    rep.ap_stabilizes = rep.ap_slope < 0.02;
    rep.rh_stabilizes = rep.rh_slope < 0.02;
    return rep;
}

}  // namespace laguerre
