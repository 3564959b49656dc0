#include "laguerre/grid.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace laguerre {

std::vector<double> log_space(double lo, double hi, int n) {
    if (!(lo > 0.0) || !(hi > lo) || n < 2) {
        throw std::invalid_argument("log_space: need 0 < lo < hi and n >= 2");
    }
    std::vector<double> out(static_cast<size_t>(n));
    const double ll = std::log(lo), lh = std::log(hi);
    for (int i = 0; i < n; ++i) {
        out[static_cast<size_t>(i)] = std::exp(ll + (lh - ll) * i / (n - 1.0));
    }
    out.front() = lo;
    out.back() = hi;
    return out;
}

std::vector<double> lin_space(double lo, double hi, int n) {
    if (!(hi > lo) || n < 2) {
        throw std::invalid_argument("lin_space: need lo < hi and n >= 2");
    }
    std::vector<double> out(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        out[static_cast<size_t>(i)] = lo + (hi - lo) * i / (n - 1.0);
    }
    return out;
}

void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights) {
    if (n < 1) throw std::invalid_argument("gauss_legendre: n must be positive");
    nodes.assign(static_cast<size_t>(n), 0.0);
    weights.assign(static_cast<size_t>(n), 0.0);
    const int m = (n + 1) / 2;
    for (int i = 0; i < m; ++i) {
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            // Legendre recurrence up to degree n at x.
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        nodes[static_cast<size_t>(i)] = -x;
        nodes[static_cast<size_t>(n - 1 - i)] = x;
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        weights[static_cast<size_t>(i)] = w;
        weights[static_cast<size_t>(n - 1 - i)] = w;
    }
}

Axis Axis::with_laguerre_boundary(double nu) const {
    Axis out = *this;
    if (domain_lo > 0.0) {
        const double q = 2.0 * nu + 1.0;  // integrand exponent toward 0
        out.weights.front() +=
            std::pow(domain_lo, q + 1.0) / (std::pow(nodes.front(), q) * (q + 1.0));
    }
    return out;
}

Axis make_log_gauss_axis(double x_lo, double x_hi, int panels, int nodes_per_panel) {
    if (!(x_lo > 0.0) || !(x_hi > x_lo) || panels < 1 || nodes_per_panel < 2) {
        throw std::invalid_argument("make_log_gauss_axis: bad parameters");
    }
    std::vector<double> ref_nodes, ref_weights;
    gauss_legendre(nodes_per_panel, ref_nodes, ref_weights);
    const std::vector<double> edges = log_space(x_lo, x_hi, panels + 1);
    Axis ax;
    ax.domain_lo = x_lo;
    ax.nodes.reserve(static_cast<size_t>(panels) * static_cast<size_t>(nodes_per_panel));
    ax.weights.reserve(ax.nodes.capacity());
    for (int p = 0; p < panels; ++p) {
        const double a = edges[static_cast<size_t>(p)];
        const double b = edges[static_cast<size_t>(p) + 1];
        const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
        for (int i = 0; i < nodes_per_panel; ++i) {
            ax.nodes.push_back(mid + half * ref_nodes[static_cast<size_t>(i)]);
            ax.weights.push_back(half * ref_weights[static_cast<size_t>(i)]);
        }
    }
    return ax;
}

Axis make_uniform_axis(double x_lo, double x_hi, int n) {
    if (!(x_lo > 0.0) || !(x_hi > x_lo) || n < 2) {
        throw std::invalid_argument("make_uniform_axis: bad parameters");
    }
    Axis ax;
    ax.domain_lo = x_lo;
    ax.nodes = lin_space(x_lo, x_hi, n);
    const double h = (x_hi - x_lo) / (n - 1.0);
    ax.weights.assign(static_cast<size_t>(n), h);
    ax.weights.front() = 0.5 * h;
    ax.weights.back() = 0.5 * h;
    return ax;
}

Grid::Grid(std::vector<Axis> axes) : axes_(std::move(axes)) {
    if (axes_.empty() || axes_.size() > 3) {
        throw std::invalid_argument("Grid: supports 1 to 3 axes");
    }
    for (const Axis& ax : axes_) {
        if (ax.nodes.size() != ax.weights.size() || ax.nodes.empty()) {
            throw std::invalid_argument("Grid: axis nodes/weights mismatch");
        }
        for (size_t i = 0; i < ax.nodes.size(); ++i) {
            if (!(ax.nodes[i] > 0.0) || !(ax.weights[i] > 0.0)) {
                throw std::invalid_argument("Grid: nodes and weights must be positive");
            }
            if (i > 0 && !(ax.nodes[i] > ax.nodes[i - 1])) {
                throw std::invalid_argument("Grid: nodes must be strictly increasing");
            }
        }
        size_ *= ax.nodes.size();
    }
}

std::size_t Grid::flatten(std::span<const std::size_t> multi) const {
    std::size_t flat = 0;
    for (int a = 0; a < dim(); ++a) {
        flat = flat * axes_[static_cast<size_t>(a)].size() + multi[static_cast<size_t>(a)];
    }
    return flat;
}

void Grid::unflatten(std::size_t flat, std::span<std::size_t> multi) const {
    for (int a = dim() - 1; a >= 0; --a) {
        const std::size_t n = axes_[static_cast<size_t>(a)].size();
        multi[static_cast<size_t>(a)] = flat % n;
        flat /= n;
    }
}

void Grid::point(std::size_t flat, std::span<double> out) const {
    for (int a = dim() - 1; a >= 0; --a) {
        const Axis& ax = axes_[static_cast<size_t>(a)];
        out[static_cast<size_t>(a)] = ax.nodes[flat % ax.size()];
        flat /= ax.size();
    }
}

double Grid::weight(std::size_t flat) const {
    double w = 1.0;
    for (int a = dim() - 1; a >= 0; --a) {
        const Axis& ax = axes_[static_cast<size_t>(a)];
        w *= ax.weights[flat % ax.size()];
        flat /= ax.size();
    }
    return w;
}

Grid Grid::with_laguerre_boundary(const NuVector& nu) const {
    if (nu.dim() != dim()) {
        throw std::invalid_argument("Grid::with_laguerre_boundary: dimension mismatch");
    }
    std::vector<Axis> axes;
    axes.reserve(axes_.size());
    for (int a = 0; a < dim(); ++a) {
        axes.push_back(axes_[static_cast<size_t>(a)].with_laguerre_boundary(nu[a]));
    }
    return Grid(std::move(axes));
}

GridPtr make_grid(Axis axis) {
    return std::make_shared<Grid>(std::vector<Axis>{std::move(axis)});
}

GridPtr make_grid(std::vector<Axis> axes) {
    return std::make_shared<Grid>(std::move(axes));
}

GridFunction::GridFunction(GridPtr grid, std::vector<double> values)
    : grid_(std::move(grid)), values_(std::move(values)) {
    if (!grid_ || values_.size() != grid_->size()) {
        throw std::invalid_argument("GridFunction: value count must match grid size");
    }
}

GridFunction::GridFunction(GridPtr grid)
    : grid_(std::move(grid)), values_(grid_ ? grid_->size() : 0, 0.0) {
    if (!grid_) throw std::invalid_argument("GridFunction: null grid");
}

GridFunction GridFunction::sample(GridPtr grid, const std::function<double(double)>& f) {
    if (grid->dim() != 1) {
        throw std::invalid_argument("GridFunction::sample: grid must be one-dimensional");
    }
    GridFunction out(grid);
    const Axis& ax = grid->axis(0);
    for (size_t i = 0; i < ax.size(); ++i) out[i] = f(ax.nodes[i]);
    return out;
}

GridFunction GridFunction::sample_nd(
    GridPtr grid, const std::function<double(std::span<const double>)>& f) {
    GridFunction out(grid);
    std::vector<double> x(static_cast<size_t>(grid->dim()));
    for (size_t i = 0; i < grid->size(); ++i) {
        grid->point(i, x);
        out[i] = f(x);
    }
    return out;
}

GridFunction& GridFunction::operator+=(const GridFunction& o) {
    if (o.size() != size()) throw std::invalid_argument("GridFunction: size mismatch");
    for (size_t i = 0; i < values_.size(); ++i) values_[i] += o.values_[i];
    return *this;
}

GridFunction& GridFunction::operator-=(const GridFunction& o) {
    if (o.size() != size()) throw std::invalid_argument("GridFunction: size mismatch");
    for (size_t i = 0; i < values_.size(); ++i) values_[i] -= o.values_[i];
    return *this;
}

GridFunction& GridFunction::operator*=(double s) {
    for (double& v : values_) v *= s;
    return *this;
}

GridFunction operator+(GridFunction a, const GridFunction& b) { return a += b; }
GridFunction operator-(GridFunction a, const GridFunction& b) { return a -= b; }
GridFunction operator*(double s, GridFunction a) { return a *= s; }

double integrate(const GridFunction& f) {
    double s = 0.0;
    const Grid& g = f.grid();
    for (size_t i = 0; i < f.size(); ++i) s += g.weight(i) * f[i];
    return s;
}

double inner(const GridFunction& f, const GridFunction& g) {
    if (f.size() != g.size()) throw std::invalid_argument("inner: size mismatch");
    double s = 0.0;
    const Grid& gr = f.grid();
    for (size_t i = 0; i < f.size(); ++i) s += gr.weight(i) * f[i] * g[i];
    return s;
}

double sup_norm(const GridFunction& f) {
    double m = 0.0;
    for (size_t i = 0; i < f.size(); ++i) m = std::max(m, std::abs(f[i]));
    return m;
}

double l2_norm(const GridFunction& f) { return std::sqrt(inner(f, f)); }

TimeQuadrature TimeQuadrature::make_log(double t_min, double t_max, int n) {
    if (!(t_min > 0.0) || !(t_max > t_min) || n < 2) {
        throw std::invalid_argument("TimeQuadrature: need 0 < t_min < t_max, n >= 2");
    }
    TimeQuadrature tq;
    tq.t_nodes = log_space(t_min, t_max, n);
    const double du = (std::log(t_max) - std::log(t_min)) / (n - 1.0);
    tq.weights.assign(static_cast<size_t>(n), du);
    tq.weights.front() = 0.5 * du;
    tq.weights.back() = 0.5 * du;
    return tq;
}

}  // namespace laguerre
