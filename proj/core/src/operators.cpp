#include "laguerre/operators.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "laguerre/parallel.hpp"

namespace laguerre {

namespace {

using ScalarKernel = std::function<double(double xout, double yin)>;

// Interpolation coefficients for y within the axis: six-point Lagrange for
// smooth inputs, two-point linear (monotone, no overshoot on jumps) for
// rough ones.
enum class InterpOrder { linear, six_point };

struct InterpStencil {
    std::size_t start = 0;
    int count = 0;
    std::array<double, 6> w{};
};

InterpStencil interp_stencil(const Axis& axis, double y, InterpOrder order) {
    const auto& nodes = axis.nodes;
    const std::size_t n = nodes.size();
    const std::size_t hi = static_cast<std::size_t>(
        std::lower_bound(nodes.begin(), nodes.end(), y) - nodes.begin());
    InterpStencil st;
    if (order == InterpOrder::linear) {
        const std::size_t right = hi == 0 ? 1 : (hi >= n ? n - 1 : hi);
        st.start = right - 1;
        st.count = 2;
        const double span = nodes[right] - nodes[right - 1];
        const double frac = std::clamp((y - nodes[right - 1]) / span, 0.0, 1.0);
        st.w[0] = 1.0 - frac;
        st.w[1] = frac;
        return st;
    }
    const std::size_t start = hi <= 3 ? 0 : (hi + 2 >= n ? n - 6 : hi - 3);
    st.start = start;
    st.count = 6;
    for (int m = 0; m < 6; ++m) {
        double w = 1.0;
        for (int l = 0; l < 6; ++l) {
            if (l == m) continue;
            w *= (y - nodes[start + static_cast<std::size_t>(l)]) /
                 (nodes[start + static_cast<std::size_t>(m)] -
                  nodes[start + static_cast<std::size_t>(l)]);
        }
        st.w[static_cast<std::size_t>(m)] = w;
    }
    return st;
}

// Dense application of a 1-D kernel along one axis; the columns carry the
// boundary-augmented quadrature weights of the input axis. Kernels here are
// concentrated around the diagonal at scale ~ bump_scale; wherever the node
// spacing is too coarse for that bump, the row integrates a resolved linear
// window instead and spreads it back onto the columns by interpolation.
struct AxisMatrix {
    std::size_t n = 0;
    std::vector<double> m;  // row-major, includes weights

    static AxisMatrix build(const Axis& axis, double nu_boundary, const ScalarKernel& k,
                            double bump_scale, InterpOrder order = InterpOrder::six_point) {
        const Axis in = axis.with_laguerre_boundary(nu_boundary);
        AxisMatrix out;
        out.n = axis.size();
        out.m.assign(out.n * out.n, 0.0);
        const double cut = 8.0 * bump_scale;
        parallel_chunks(out.n, [&](std::size_t, std::size_t lo, std::size_t hi) {
            for (std::size_t r = lo; r < hi; ++r) {
                double* row = out.m.data() + r * out.n;
                const double x = axis.nodes[r];
                // local spacing right of x decides whether the bump resolves
                const double gap =
                    r + 1 < out.n ? axis.nodes[r + 1] - x : x - axis.nodes[r - 1];
                const bool window = bump_scale > 0.0 && gap > bump_scale / 3.0;
                const double w_lo = window ? std::max(x - cut, axis.nodes.front()) : 0.0;
                const double w_hi = window ? std::min(x + cut, axis.nodes.back()) : 0.0;
                for (std::size_t c = 0; c < out.n; ++c) {
                    // nodes on the window edges belong to the window trapezoid
                    if (window && in.nodes[c] >= w_lo && in.nodes[c] <= w_hi) continue;
                    row[c] = k(x, in.nodes[c]) * in.weights[c];
                }
                if (!window || !(w_hi > w_lo)) continue;
                if (in.nodes.front() >= w_lo && in.nodes.front() <= w_hi) {
                    // keep the below-grid boundary mass carried by column 0
                    row[0] += k(x, in.nodes.front()) * (in.weights[0] - axis.weights[0]);
                }
                const int wn = 96;
                const double step = (w_hi - w_lo) / (wn - 1);
                for (int q = 0; q < wn; ++q) {
                    const double y = w_lo + step * q;
                    const double tw = (q == 0 || q == wn - 1) ? 0.5 * step : step;
                    const double kv = tw * k(x, y);
                    if (kv == 0.0) continue;
                    const InterpStencil st = interp_stencil(axis, y, order);
                    for (int mli = 0; mli < st.count; ++mli) {
                        row[st.start + static_cast<std::size_t>(mli)] +=
                            kv * st.w[static_cast<std::size_t>(mli)];
                    }
                }
            }
        });
        return out;
    }
};

struct AxisLayout {
    std::size_t stride;
    std::size_t outer;
};

AxisLayout layout(const Grid& grid, int axis) {
    std::size_t stride = 1;
    for (int a = grid.dim() - 1; a > axis; --a) stride *= grid.axis(a).size();
    std::size_t outer = 1;
    for (int a = 0; a < axis; ++a) outer *= grid.axis(a).size();
    return {stride, outer};
}

GridFunction apply_axis(const GridFunction& f, int axis, const AxisMatrix& mat) {
    const Grid& grid = f.grid();
    const AxisLayout lay = layout(grid, axis);
    const std::size_t n = grid.axis(axis).size();
    const std::size_t block = n * lay.stride;
    GridFunction out(f.grid_ptr());
    for (std::size_t o = 0; o < lay.outer; ++o) {
        for (std::size_t s = 0; s < lay.stride; ++s) {
            const std::size_t base = o * block + s;
            for (std::size_t r = 0; r < n; ++r) {
                double acc = 0.0;
                const double* row = mat.m.data() + r * n;
                for (std::size_t c = 0; c < n; ++c) {
                    acc += row[c] * f[base + c * lay.stride];
                }
                out[base + r * lay.stride] = acc;
            }
        }
    }
    return out;
}

void check_dims(const GridFunction& f, const NuVector& nu) {
    if (f.grid().dim() != nu.dim()) {
        throw std::invalid_argument("operator: grid and order dimensions differ");
    }
}

}  // namespace

GridFunction semigroup_apply_kernel(const GridFunction& f, const NuVector& nu, double t) {
    check_dims(f, nu);
    GridFunction cur = f;
    for (int a = 0; a < nu.dim(); ++a) {
        const double nu_a = nu[a];
        const AxisMatrix mat = AxisMatrix::build(
            f.grid().axis(a), nu_a,
            [nu_a, t](double x, double y) { return heat_kernel_1d(nu_a, t, x, y); },
            std::sqrt(t));
        cur = apply_axis(cur, a, mat);
    }
    return cur;
}

GridFunction delta_semigroup_apply_kernel(const GridFunction& f, const NuVector& nu,
                                          int j, double t) {
    check_dims(f, nu);
    if (j < 0 || j >= nu.dim()) {
        throw std::invalid_argument("delta_semigroup_apply_kernel: bad coordinate");
    }
    GridFunction cur = f;
    for (int a = 0; a < nu.dim(); ++a) {
        const double nu_a = nu[a];
        const ScalarKernel k =
            a == j ? ScalarKernel([nu_a, t](double x, double y) {
                return delta_heat_kernel_1d(nu_a, t, x, y);
            })
                   : ScalarKernel([nu_a, t](double x, double y) {
                         return heat_kernel_1d(nu_a, t, x, y);
                     });
        cur = apply_axis(cur, a, AxisMatrix::build(f.grid().axis(a), nu_a, k, std::sqrt(t)));
    }
    return cur;
}

GridFunction maximal_semigroup(const GridFunction& f, const NuVector& nu,
                               const TimeQuadrature& tq) {
    check_dims(f, nu);
    if (tq.t_nodes.empty()) {
        throw std::invalid_argument("maximal_semigroup: empty time grid");
    }
    GridFunction out(f.grid_ptr());
    for (double t : tq.t_nodes) {
        // monotone window interpolation: maximal inputs may carry jumps, and
        // polynomial overshoot would contaminate the pointwise supremum
        GridFunction cur = f;
        for (int a = 0; a < nu.dim(); ++a) {
            const double nu_a = nu[a];
            const AxisMatrix mat = AxisMatrix::build(
                f.grid().axis(a), nu_a,
                [nu_a, t](double x, double y) { return heat_kernel_1d(nu_a, t, x, y); },
                std::sqrt(t), InterpOrder::linear);
            cur = apply_axis(cur, a, mat);
        }
        for (std::size_t i = 0; i < out.size(); ++i) {
            out[i] = std::max(out[i], std::abs(cur[i]));
        }
    }
    return out;
}

GridFunction hl_maximal(const GridFunction& f, double r) {
    if (!(r >= 1.0)) throw std::domain_error("hl_maximal: exponent must be >= 1");
    if (f.grid().dim() != 1) {
        throw unsupported_claim("hl_maximal: implemented in one dimension");
    }
    const Axis& ax = f.grid().axis(0);
    const std::size_t n = ax.size();

    // prefix sums of measure and of |f|^r measure
    std::vector<double> pm(n + 1, 0.0), pf(n + 1, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        pm[i + 1] = pm[i] + ax.weights[i];
        pf[i + 1] = pf[i] + ax.weights[i] * std::pow(std::abs(f[i]), r);
    }

    // best average over [a, b] containing i: for each a, suffix maxima of
    // the averages over b, then a prefix-max sweep over a.
    GridFunction out(f.grid_ptr());
    std::vector<double> suffix(n);
    for (std::size_t a = 0; a < n; ++a) {
        double best = 0.0;
        for (std::size_t b = n; b-- > a;) {
            const double avg = (pf[b + 1] - pf[a]) / (pm[b + 1] - pm[a]);
            best = std::max(best, avg);
            suffix[b] = best;
        }
        for (std::size_t i = a; i < n; ++i) {
            out[i] = std::max(out[i], suffix[i]);
        }
    }
    for (std::size_t i = 0; i < n; ++i) out[i] = std::pow(out[i], 1.0 / r);
    return out;
}

namespace {

void check_time_range(const TimeQuadrature& tq, bool& warning) {
    warning = tq.t_min() > 1e-5 || tq.t_max() < 50.0 || tq.size() < 80;
}

}  // namespace

RieszQuadratureResult riesz_apply_quadrature(const GridFunction& f, const NuVector& nu,
                                             int j, const TimeQuadrature& tq) {
    check_dims(f, nu);
    RieszQuadratureResult res{GridFunction(f.grid_ptr()), 0.0, false};
    check_time_range(tq, res.range_warning);
    const double norm = 1.0 / std::sqrt(std::numbers::pi);
    for (std::size_t i = 0; i < tq.size(); ++i) {
        const double t = tq.t_nodes[i];
        const GridFunction g = delta_semigroup_apply_kernel(f, nu, j, t);
        const double w = norm * tq.weights[i] * std::sqrt(t);
        for (std::size_t q = 0; q < res.value.size(); ++q) res.value[q] += w * g[q];
    }
    // head of the integral below t_min: int_0^{t0} t^{-1/2} delta e^{-tL} f dt
    // = 2 sqrt(t0) delta f + O(t0^{3/2})
    const GridFunction head = apply_delta(f, nu, j);
    const double head_w = 2.0 * norm * std::sqrt(tq.t_min());
    for (std::size_t q = 0; q < res.value.size(); ++q) res.value[q] += head_w * head[q];
    const double lambda_min = 2.0 * nu.sum() + 2.0 * nu.dim();
    res.tail_bound = norm * std::exp(-lambda_min * tq.t_max()) / std::sqrt(tq.t_max());
    return res;
}

GridFunction square_function_s(const GridFunction& f, const NuVector& nu, int j,
                               const TimeQuadrature& tq) {
    check_dims(f, nu);
    GridFunction acc(f.grid_ptr());
    for (std::size_t i = 0; i < tq.size(); ++i) {
        const double t = tq.t_nodes[i];
        const GridFunction g = delta_semigroup_apply_kernel(f, nu, j, t);
        const double w = tq.weights[i] * t;  // |sqrt(t) g|^2 dt/t
        for (std::size_t q = 0; q < acc.size(); ++q) acc[q] += w * g[q] * g[q];
    }
    for (std::size_t q = 0; q < acc.size(); ++q) acc[q] = std::sqrt(acc[q]);
    return acc;
}

GridFunction square_function_g(const GridFunction& f, const NuVector& nu,
                               const TimeQuadrature& tq, int N) {
    check_dims(f, nu);
    const SpectralCoeffs c = expand(f, nu, N);
    GridFunction acc(f.grid_ptr());
    for (std::size_t i = 0; i < tq.size(); ++i) {
        const double t = tq.t_nodes[i];
        SpectralCoeffs weighted(c.nu(), c.degree());
        for (const auto& [k, v] : c.coeffs()) {
            const double lambda = eigenvalue(k, nu);
            weighted.set(k, v * t * lambda * std::exp(-t * lambda));
        }
        const GridFunction g = synthesize(weighted, f.grid_ptr());
        for (std::size_t q = 0; q < acc.size(); ++q) {
            acc[q] += tq.weights[i] * g[q] * g[q];
        }
    }
    for (std::size_t q = 0; q < acc.size(); ++q) acc[q] = std::sqrt(acc[q]);
    return acc;
}

namespace {

std::vector<AxisMatrix> build_semigroup_matrices(const Grid& grid, const NuVector& nu,
                                                 double t, int delta_axis) {
    std::vector<AxisMatrix> mats;
    for (int a = 0; a < nu.dim(); ++a) {
        const double nu_a = nu[a];
        const ScalarKernel k =
            a == delta_axis ? ScalarKernel([nu_a, t](double x, double y) {
                return delta_heat_kernel_1d(nu_a, t, x, y);
            })
                            : ScalarKernel([nu_a, t](double x, double y) {
                                  return heat_kernel_1d(nu_a, t, x, y);
                              });
        mats.push_back(AxisMatrix::build(grid.axis(a), nu_a, k, std::sqrt(t)));
    }
    return mats;
}

GridFunction apply_matrices(const GridFunction& f, const std::vector<AxisMatrix>& mats) {
    GridFunction cur = f;
    for (int a = 0; a < static_cast<int>(mats.size()); ++a) {
        cur = apply_axis(cur, a, mats[static_cast<size_t>(a)]);
    }
    return cur;
}

}  // namespace

std::vector<GridFunction> semigroup_apply_kernel_batch(std::span<const GridFunction> fs,
                                                       const NuVector& nu, double t) {
    if (fs.empty()) return {};
    check_dims(fs.front(), nu);
    const std::vector<AxisMatrix> mats = build_semigroup_matrices(fs.front().grid(), nu, t, -1);
    std::vector<GridFunction> out;
    out.reserve(fs.size());
    for (const GridFunction& f : fs) out.push_back(apply_matrices(f, mats));
    return out;
}

std::vector<GridFunction> riesz_quadrature_batch(std::span<const GridFunction> fs,
                                                 const NuVector& nu, int j,
                                                 const TimeQuadrature& tq) {
    if (fs.empty()) return {};
    check_dims(fs.front(), nu);
    std::vector<GridFunction> out(fs.size(), GridFunction(fs.front().grid_ptr()));
    const double norm = 1.0 / std::sqrt(std::numbers::pi);
    for (std::size_t i = 0; i < tq.size(); ++i) {
        const double t = tq.t_nodes[i];
        const std::vector<AxisMatrix> mats = build_semigroup_matrices(fs.front().grid(), nu, t, j);
        const double w = norm * tq.weights[i] * std::sqrt(t);
        for (std::size_t m = 0; m < fs.size(); ++m) {
            const GridFunction g = apply_matrices(fs[m], mats);
            for (std::size_t q = 0; q < g.size(); ++q) out[m][q] += w * g[q];
        }
    }
    const double head_w = 2.0 * norm * std::sqrt(tq.t_min());
    for (std::size_t m = 0; m < fs.size(); ++m) {
        const GridFunction head = apply_delta(fs[m], nu, j);
        for (std::size_t q = 0; q < head.size(); ++q) out[m][q] += head_w * head[q];
    }
    return out;
}

std::vector<GridFunction> square_s_batch(std::span<const GridFunction> fs,
                                         const NuVector& nu, int j,
                                         const TimeQuadrature& tq) {
    if (fs.empty()) return {};
    check_dims(fs.front(), nu);
    std::vector<GridFunction> acc(fs.size(), GridFunction(fs.front().grid_ptr()));
    for (std::size_t i = 0; i < tq.size(); ++i) {
        const double t = tq.t_nodes[i];
        const std::vector<AxisMatrix> mats = build_semigroup_matrices(fs.front().grid(), nu, t, j);
        const double w = tq.weights[i] * t;
        for (std::size_t m = 0; m < fs.size(); ++m) {
            const GridFunction g = apply_matrices(fs[m], mats);
            for (std::size_t q = 0; q < g.size(); ++q) acc[m][q] += w * g[q] * g[q];
        }
    }
    for (GridFunction& a : acc) {
        for (std::size_t q = 0; q < a.size(); ++q) a[q] = std::sqrt(a[q]);
    }
    return acc;
}

double weighted_lp_norm(const GridFunction& f, double p, const GridFunction& w) {
    if (!(p > 0.0)) throw std::domain_error("weighted_lp_norm: p must be positive");
    if (f.size() != w.size()) {
        throw std::invalid_argument("weighted_lp_norm: weight grid mismatch");
    }
    double acc = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (!(w[i] > 0.0)) {
            throw std::domain_error("weighted_lp_norm: weight must be positive");
        }
        acc += f.grid().weight(i) * w[i] * std::pow(std::abs(f[i]), p);
    }
    return std::pow(acc, 1.0 / p);
}

double op_norm_probe(const GridOperator& op, double p, const GridFunction& w,
                     std::span<const GridFunction> family) {
    double best = 0.0;
    for (const GridFunction& f : family) {
        const double denom = weighted_lp_norm(f, p, w);
        if (!(denom > 0.0)) continue;
        best = std::max(best, weighted_lp_norm(op(f), p, w) / denom);
    }
    return best;
}

std::vector<GridFunction> standard_probe_family(GridPtr grid, const NuVector& nu,
                                                unsigned seed) {
    if (grid->dim() != 1) {
        throw unsupported_claim("standard_probe_family: implemented in one dimension");
    }
    std::vector<GridFunction> family;
    for (int k = 0; k < 10; ++k) {
        const double nu0 = nu[0];
        family.push_back(GridFunction::sample(
            grid, [k, nu0](double x) { return laguerre_function(k, nu0, x); }));
    }
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> center(-1.0, 1.5);  // log center
    std::uniform_real_distribution<double> width(0.2, 0.9);
    for (int i = 0; i < 5; ++i) {
        const double mu = center(rng), s = width(rng);
        family.push_back(GridFunction::sample(grid, [mu, s](double x) {
            const double u = (std::log(x) - mu) / s;
            return std::exp(-0.5 * u * u);
        }));
    }
    std::uniform_real_distribution<double> edge(0.1, 5.0);
    for (int i = 0; i < 5; ++i) {
        double a = edge(rng), b = edge(rng);
        if (a > b) std::swap(a, b);
        if (b - a < 0.05) b += 0.1;
        family.push_back(GridFunction::sample(
            grid, [a, b](double x) { return x >= a && x <= b ? 1.0 : 0.0; }));
    }
    return family;
}

namespace {

// Largest singular value by power iteration on M^T M.
double spectral_norm(const std::vector<double>& m, std::size_t rows, std::size_t cols) {
    if (rows == 0 || cols == 0) return 0.0;
    std::vector<double> v(cols, 1.0 / std::sqrt(static_cast<double>(cols)));
    std::vector<double> mv(rows), mtmv(cols);
    double norm = 0.0;
    for (int it = 0; it < 200; ++it) {
        for (std::size_t r = 0; r < rows; ++r) {
            double acc = 0.0;
            for (std::size_t c = 0; c < cols; ++c) acc += m[r * cols + c] * v[c];
            mv[r] = acc;
        }
        for (std::size_t c = 0; c < cols; ++c) {
            double acc = 0.0;
            for (std::size_t r = 0; r < rows; ++r) acc += m[r * cols + c] * mv[r];
            mtmv[c] = acc;
        }
        double len = 0.0;
        for (double x : mtmv) len += x * x;
        len = std::sqrt(len);
        if (len == 0.0) return 0.0;
        const double next = std::sqrt(len);  // sqrt of ||M^T M v||
        for (std::size_t c = 0; c < cols; ++c) v[c] = mtmv[c] / len;
        if (std::abs(next - norm) <= 1e-12 * next) {
            norm = next;
            break;
        }
        norm = next;
    }
    return norm;
}

}  // namespace

OffDiagonalReport offdiagonal_decay(double beta, double sigma, double kernel_c,
                                    double ball_lo, double ball_hi, int j_lo, int j_hi,
                                    std::span<const double> t_list, const Axis& axis) {
    if (!(ball_hi > ball_lo) || !(ball_lo > 0.0)) {
        throw std::invalid_argument("offdiagonal_decay: bad ball");
    }
    if (j_lo < 2 || j_hi < j_lo) {
        throw std::invalid_argument("offdiagonal_decay: annuli start at j = 2");
    }
    EnvelopeSpec spec{EnvelopeKind::T, beta, sigma, kernel_c, 1};
    spec.validate();
    const double center = 0.5 * (ball_lo + ball_hi);
    const double radius = 0.5 * (ball_hi - ball_lo);

    std::vector<std::size_t> ball_idx;
    for (std::size_t i = 0; i < axis.size(); ++i) {
        if (axis.nodes[i] >= ball_lo && axis.nodes[i] <= ball_hi) ball_idx.push_back(i);
    }
    if (ball_idx.empty()) throw std::invalid_argument("offdiagonal_decay: ball misses grid");

    OffDiagonalReport rep;
    std::vector<double> us, logs;  // regression samples: log n = logA - u / c
    for (double t : t_list) {
        for (int j = j_lo; j <= j_hi; ++j) {
            const double r_out = std::ldexp(radius, j);      // 2^j r_B
            const double r_in = std::ldexp(radius, j - 1);
            std::vector<std::size_t> ann_idx;
            for (std::size_t i = 0; i < axis.size(); ++i) {
                const double d = std::abs(axis.nodes[i] - center);
                if (d > r_in && d <= r_out) ann_idx.push_back(i);
            }
            if (ann_idx.empty()) continue;
            // factor exp(-dist^2/(c t)) out of the block so entries stay
            // representable at small t
            const double dist = r_in - radius;
            const double log_scale = -dist * dist / (kernel_c * t);
            std::vector<double> block(ann_idx.size() * ball_idx.size());
            for (std::size_t a = 0; a < ann_idx.size(); ++a) {
                const double x = axis.nodes[ann_idx[a]];
                const double sw_a = std::sqrt(axis.weights[ann_idx[a]]);
                for (std::size_t b = 0; b < ball_idx.size(); ++b) {
                    const double y = axis.nodes[ball_idx[b]];
                    const double sw_b = std::sqrt(axis.weights[ball_idx[b]]);
                    const double lv = log_envelope_eval(
                                          spec, t, std::span<const double>(&x, 1),
                                          std::span<const double>(&y, 1)) -
                                      log_scale;
                    block[a * ball_idx.size() + b] = sw_a * sw_b * std::exp(lv);
                }
            }
            const double sn = spectral_norm(block, ann_idx.size(), ball_idx.size());
            if (!(sn > 0.0)) continue;
            OffDiagonalEntry e;
            e.t = t;
            e.annulus = j;
            e.log_norm = log_scale + std::log(sn);
            rep.entries.push_back(e);
            us.push_back(r_out * r_out / t);
            logs.push_back(e.log_norm);
        }
    }

    // least squares fit log n = logA - u/c
    if (us.size() >= 2) {
        double su = 0, sl = 0, suu = 0, sul = 0;
        for (std::size_t i = 0; i < us.size(); ++i) {
            su += us[i];
            sl += logs[i];
            suu += us[i] * us[i];
            sul += us[i] * logs[i];
        }
        const double n = static_cast<double>(us.size());
        const double slope = (n * sul - su * sl) / (n * suu - su * su);
        rep.fitted_log_A = (sl - slope * su) / n;
        if (slope < 0.0) {
            rep.fitted_c = -1.0 / slope;
            rep.decay_consistent = true;
            // norms must fall off monotonically in j for each t
            for (std::size_t i = 1; i < rep.entries.size(); ++i) {
                if (rep.entries[i].t == rep.entries[i - 1].t &&
                    rep.entries[i].annulus == rep.entries[i - 1].annulus + 1 &&
                    rep.entries[i].log_norm >= rep.entries[i - 1].log_norm) {
                    rep.decay_consistent = false;
                }
            }
        }
    }
    return rep;
}

}  // namespace laguerre
