#include "laguerre/spectral.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <span>
#include <stdexcept>

namespace laguerre {

double eigenvalue(const MultiIndex& k, const NuVector& nu) {
    if (k.dim() != nu.dim()) {
        throw std::invalid_argument("eigenvalue: dimension mismatch");
    }
    return 4.0 * k.total() + 2.0 * nu.sum() + 2.0 * nu.dim();
}

namespace {

void enumerate(int n, int budget, std::vector<int>& cur, std::vector<MultiIndex>& out) {
    if (static_cast<int>(cur.size()) == n - 1) {
        for (int last = 0; last <= budget; ++last) {
            std::vector<int> v = cur;
            v.push_back(last);
            out.emplace_back(std::move(v));
        }
        return;
    }
    for (int i = 0; i <= budget; ++i) {
        cur.push_back(i);
        enumerate(n, budget - i, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<MultiIndex> indices_up_to(int n, int N) {
    if (n < 1 || N < 0) throw std::invalid_argument("indices_up_to: bad arguments");
    std::vector<MultiIndex> out;
    std::vector<int> cur;
    enumerate(n, N, cur, out);
    std::sort(out.begin(), out.end());
    return out;
}

SpectralCoeffs::SpectralCoeffs(NuVector nu, int degree)
    : nu_(std::move(nu)), degree_(degree) {
    if (degree_ < 0) throw std::invalid_argument("SpectralCoeffs: negative degree");
    if (degree_ > 200 * nu_.dim()) {
        throw std::invalid_argument("SpectralCoeffs: truncation degree too large");
    }
}

double SpectralCoeffs::at(const MultiIndex& k) const {
    const auto it = c_.find(k);
    return it == c_.end() ? 0.0 : it->second;
}

void SpectralCoeffs::set(const MultiIndex& k, double value) {
    if (k.dim() != nu_.dim()) {
        throw std::invalid_argument("SpectralCoeffs::set: dimension mismatch");
    }
    if (k.total() > degree_) {
        throw std::invalid_argument("SpectralCoeffs::set: index beyond truncation");
    }
    c_[k] = value;
}

double SpectralCoeffs::sum_squares() const {
    double s = 0.0;
    for (const auto& [k, v] : c_) s += v * v;
    return s;
}

namespace {

// phi tables per axis: table[k][i] = phi_k^{nu_a}(node_i).
std::vector<std::vector<double>> phi_table(const Axis& axis, double nu, int kmax) {
    std::vector<std::vector<double>> table(static_cast<size_t>(kmax) + 1,
                                           std::vector<double>(axis.size()));
    for (size_t i = 0; i < axis.size(); ++i) {
        const std::vector<double> seq = laguerre_function_sequence(kmax, nu, axis.nodes[i]);
        for (int k = 0; k <= kmax; ++k) {
            table[static_cast<size_t>(k)][i] = seq[static_cast<size_t>(k)];
        }
    }
    return table;
}

}  // namespace

SpectralCoeffs expand(const GridFunction& f, const NuVector& nu, int N) {
    const Grid& grid = f.grid();
    if (grid.dim() != nu.dim()) {
        throw std::invalid_argument("expand: grid and order dimensions differ");
    }
    SpectralCoeffs out(nu, N);
    const Grid bgrid = grid.with_laguerre_boundary(nu);
    const int n = grid.dim();

    if (n == 1) {
        const Axis& ax = bgrid.axis(0);
        std::vector<double> acc(static_cast<size_t>(N) + 1, 0.0);
        for (size_t i = 0; i < ax.size(); ++i) {
            const double wf = ax.weights[i] * f[i];
            if (wf == 0.0) continue;
            const std::vector<double> seq = laguerre_function_sequence(N, nu[0], ax.nodes[i]);
            for (int k = 0; k <= N; ++k) acc[static_cast<size_t>(k)] += wf * seq[static_cast<size_t>(k)];
        }
        for (int k = 0; k <= N; ++k) out.set(MultiIndex::scalar(k), acc[static_cast<size_t>(k)]);
        return out;
    }

    // Tensor case: per-axis tables, then one pass over the grid per index.
    std::vector<std::vector<std::vector<double>>> tables;
    for (int a = 0; a < n; ++a) tables.push_back(phi_table(bgrid.axis(a), nu[a], N));
    const std::vector<MultiIndex> idx = indices_up_to(n, N);
    std::vector<std::size_t> multi(static_cast<size_t>(n));
    std::vector<double> acc(idx.size(), 0.0);
    for (std::size_t flat = 0; flat < bgrid.size(); ++flat) {
        bgrid.unflatten(flat, multi);
        const double wf = bgrid.weight(flat) * f[flat];
        if (wf == 0.0) continue;
        for (size_t q = 0; q < idx.size(); ++q) {
            double prod = wf;
            for (int a = 0; a < n; ++a) {
                prod *= tables[static_cast<size_t>(a)][static_cast<size_t>(idx[q][a])]
                              [multi[static_cast<size_t>(a)]];
            }
            acc[q] += prod;
        }
    }
    for (size_t q = 0; q < idx.size(); ++q) out.set(idx[q], acc[q]);
    return out;
}

GridFunction synthesize(const SpectralCoeffs& c, GridPtr grid) {
    if (grid->dim() != c.dim()) {
        throw std::invalid_argument("synthesize: grid and coefficient dimensions differ");
    }
    const int n = grid->dim();
    GridFunction out(grid);

    if (n == 1) {
        const Axis& ax = grid->axis(0);
        const int N = c.degree();
        for (size_t i = 0; i < ax.size(); ++i) {
            const std::vector<double> seq =
                laguerre_function_sequence(N, c.nu()[0], ax.nodes[i]);
            double v = 0.0;
            for (const auto& [k, ck] : c.coeffs()) v += ck * seq[static_cast<size_t>(k[0])];
            out[i] = v;
        }
        return out;
    }

    std::vector<std::vector<std::vector<double>>> tables;
    for (int a = 0; a < n; ++a) tables.push_back(phi_table(grid->axis(a), c.nu()[a], c.degree()));
    std::vector<std::size_t> multi(static_cast<size_t>(n));
    for (std::size_t flat = 0; flat < grid->size(); ++flat) {
        grid->unflatten(flat, multi);
        double v = 0.0;
        for (const auto& [k, ck] : c.coeffs()) {
            double prod = ck;
            for (int a = 0; a < n; ++a) {
                prod *= tables[static_cast<size_t>(a)][static_cast<size_t>(k[a])]
                              [multi[static_cast<size_t>(a)]];
            }
            v += prod;
        }
        out[flat] = v;
    }
    return out;
}

SpectralCoeffs projection(const SpectralCoeffs& c, int ell) {
    if (ell < 0 || ell > c.degree()) {
        throw std::invalid_argument("projection: level outside truncation");
    }
    SpectralCoeffs out(c.nu(), c.degree());
    for (const auto& [k, v] : c.coeffs()) {
        if (k.total() == ell) out.set(k, v);
    }
    return out;
}

SpectralCoeffs semigroup_apply_spectral(const SpectralCoeffs& c, double t) {
    if (!(t > 0.0)) throw std::domain_error("semigroup_apply_spectral: time must be positive");
    SpectralCoeffs out(c.nu(), c.degree());
    for (const auto& [k, v] : c.coeffs()) {
        out.set(k, v * std::exp(-t * eigenvalue(k, c.nu())));
    }
    return out;
}

double semigroup_tail_bound(const SpectralCoeffs& c, double t) {
    return std::exp(-4.0 * t * c.degree());
}

SpectralCoeffs riesz_apply_spectral(const SpectralCoeffs& c, int j) {
    if (j < 0 || j >= c.dim()) throw std::invalid_argument("riesz_apply_spectral: bad coordinate");
    SpectralCoeffs out(c.nu().shifted(j), std::max(c.degree() - 1, 0));
    for (const auto& [k, v] : c.coeffs()) {
        if (k[j] == 0 || v == 0.0) continue;
        const double lambda = eigenvalue(k, c.nu());
        out.set(k.lowered(j), -2.0 * std::sqrt(static_cast<double>(k[j])) / std::sqrt(lambda) * v);
    }
    return out;
}

namespace {

// Derivative weights of the 5-point Lagrange interpolant through
// nodes[w..w+4], evaluated at nodes[c].
std::array<double, 5> lagrange_derivative_weights(std::span<const double> z, int c) {
    std::array<double, 5> w{};
    for (int m = 0; m < 5; ++m) {
        if (m == c) {
            double s = 0.0;
            for (int l = 0; l < 5; ++l) {
                if (l != c) s += 1.0 / (z[static_cast<size_t>(c)] - z[static_cast<size_t>(l)]);
            }
            w[static_cast<size_t>(m)] = s;
        } else {
            double num = 1.0, den = 1.0;
            for (int l = 0; l < 5; ++l) {
                if (l == m) continue;
                den *= z[static_cast<size_t>(m)] - z[static_cast<size_t>(l)];
                if (l != c) num *= z[static_cast<size_t>(c)] - z[static_cast<size_t>(l)];
            }
            w[static_cast<size_t>(m)] = num / den;
        }
    }
    return w;
}

struct AxisLayout {
    std::size_t stride;       // distance between consecutive nodes of the axis
    std::size_t outer_count;  // number of independent lines
};

AxisLayout axis_layout(const Grid& grid, int axis) {
    std::size_t stride = 1;
    for (int a = grid.dim() - 1; a > axis; --a) stride *= grid.axis(a).size();
    std::size_t outer = 1;
    for (int a = 0; a < axis; ++a) outer *= grid.axis(a).size();
    return {stride, outer};
}

// The stride/count loop in axis_derivative walks lines of the flattened
// tensor; for an interior axis the nodes of one line are not contiguous, so
// iterate (outer, inner) blocks instead.
void tensor_axis_derivative(const Grid& grid, int axis, std::span<const double> in,
                            std::span<double> out) {
    const AxisLayout lay = axis_layout(grid, axis);
    const int n = static_cast<int>(grid.axis(axis).size());
    if (n < 7) throw std::invalid_argument("apply_delta: axis has fewer than 7 points");
    std::vector<int> starts(static_cast<size_t>(n));
    std::vector<std::array<double, 5>> weights(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        const int w0 = std::clamp(i - 2, 0, n - 5);
        starts[static_cast<size_t>(i)] = w0;
        weights[static_cast<size_t>(i)] = lagrange_derivative_weights(
            std::span<const double>(grid.axis(axis).nodes.data() + w0, 5), i - w0);
    }
    const std::size_t block = static_cast<std::size_t>(n) * lay.stride;
    for (std::size_t o = 0; o < lay.outer_count; ++o) {
        for (std::size_t s = 0; s < lay.stride; ++s) {
            const std::size_t base = o * block + s;
            for (int i = 0; i < n; ++i) {
                const std::array<double, 5>& w = weights[static_cast<size_t>(i)];
                const std::size_t w0 = static_cast<std::size_t>(starts[static_cast<size_t>(i)]);
                double d = 0.0;
                for (int m = 0; m < 5; ++m) {
                    d += w[static_cast<size_t>(m)] *
                         in[base + (w0 + static_cast<std::size_t>(m)) * lay.stride];
                }
                out[base + static_cast<std::size_t>(i) * lay.stride] = d;
            }
        }
    }
}

enum class FirstOrderKind { delta, delta_star };

GridFunction first_order_apply(const GridFunction& f, const NuVector& nu, int j,
                               FirstOrderKind kind) {
    const Grid& grid = f.grid();
    if (grid.dim() != nu.dim()) {
        throw std::invalid_argument("apply_delta: grid and order dimensions differ");
    }
    if (j < 0 || j >= grid.dim()) throw std::invalid_argument("apply_delta: bad coordinate");
    const double nu_j = nu[j];
    // peel the boundary power: delta uses x^{nu+1/2}, delta^* acts on
    // functions with order-(nu+e_j) regularity x^{nu+3/2}
    const double peel = kind == FirstOrderKind::delta ? nu_j + 0.5 : nu_j + 1.5;

    GridFunction regular(f.grid_ptr());
    const AxisLayout lay = axis_layout(grid, j);
    const std::size_t n = grid.axis(j).size();
    std::vector<double> powers(n), inv_powers(n);
    for (std::size_t i = 0; i < n; ++i) {
        powers[i] = std::pow(grid.axis(j).nodes[i], peel);
        inv_powers[i] = 1.0 / powers[i];
    }
    const std::size_t block = n * lay.stride;
    for (std::size_t o = 0; o < lay.outer_count; ++o)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t s = 0; s < lay.stride; ++s) {
                const std::size_t at = o * block + i * lay.stride + s;
                regular[at] = f[at] * inv_powers[i];
            }

    GridFunction dreg(f.grid_ptr());
    tensor_axis_derivative(grid, j, regular.values(), dreg.values());

    GridFunction out(f.grid_ptr());
    for (std::size_t o = 0; o < lay.outer_count; ++o)
        for (std::size_t i = 0; i < n; ++i) {
            const double x = grid.axis(j).nodes[i];
            for (std::size_t s = 0; s < lay.stride; ++s) {
                const std::size_t at = o * block + i * lay.stride + s;
                const double g = regular[at];
                const double dg = dreg[at];
                double v;
                if (kind == FirstOrderKind::delta) {
                    // delta f = x^{nu+1/2} (g' + x g)
                    v = powers[i] * (dg + x * g);
                } else {
                    // delta* f = x^{nu+1/2} (-x g' + x^2 g - (2nu+2) g)
                    v = std::pow(x, nu_j + 0.5) *
                        (-x * dg + x * x * g - (2.0 * nu_j + 2.0) * g);
                }
                out[at] = v;
            }
        }
    return out;
}

}  // namespace

GridFunction apply_delta(const GridFunction& f, const NuVector& nu, int j) {
    return first_order_apply(f, nu, j, FirstOrderKind::delta);
}

GridFunction apply_delta_star(const GridFunction& f, const NuVector& nu, int j) {
    return first_order_apply(f, nu, j, FirstOrderKind::delta_star);
}

CommutationReport check_commutation(const NuVector& nu, int j, double t,
                                    const GridFunction& f, int N) {
    if (!(t > 0.0)) throw std::domain_error("check_commutation: time must be positive");
    const NuVector nu_up = nu.shifted(j);

    // Left route: stencil delta, expand in the shifted basis, weight with
    // the shifted eigenvalues plus alpha.
    const GridFunction df = apply_delta(f, nu, j);
    const SpectralCoeffs d_coeffs = expand(df, nu_up, N);

    // Right route: expand f, weight with the base eigenvalues, shift the
    // coefficients through the eigenvector relation.
    const SpectralCoeffs c = expand(f, nu, N);
    SpectralCoeffs rhs(nu_up, N);
    for (const auto& [k, v] : c.coeffs()) {
        if (k[j] == 0 || v == 0.0) continue;
        rhs.set(k.lowered(j),
                -2.0 * std::sqrt(static_cast<double>(k[j])) * v *
                    std::exp(-t * eigenvalue(k, nu)));
    }
    const GridFunction right = synthesize(rhs, f.grid_ptr());

    auto left_for_alpha = [&](double alpha) {
        SpectralCoeffs lhs(nu_up, N);
        for (const auto& [m, v] : d_coeffs.coeffs()) {
            lhs.set(m, v * std::exp(-t * (eigenvalue(m, nu_up) + alpha)));
        }
        return synthesize(lhs, f.grid_ptr());
    };

    CommutationReport rep;
    rep.defect_alpha2 = sup_norm(left_for_alpha(2.0) - right);
    rep.alpha_case_split = nu[j] >= 0.0 ? 2.0 : 2.0 - 4.0 * nu[j];
    rep.defect_alpha_case_split = sup_norm(left_for_alpha(rep.alpha_case_split) - right);
    return rep;
}

}  // namespace laguerre
