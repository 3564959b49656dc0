// Quadrature-bearing grids on (0,inf)^n and sampled functions on them.
//
// Axes are composite Gauss-Legendre rules with log-spaced panel boundaries.
// The piece [0, x_lo) left of the first panel is handled by a power-law
// extension: integrands in the Laguerre scale behave like x^{2 nu + 1}
// there, so the mass below the grid is folded into the first node weight.

#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <span>
#include <stdexcept>
#include <vector>

#include "laguerre/specfun.hpp"

namespace laguerre {

std::vector<double> log_space(double lo, double hi, int n);
std::vector<double> lin_space(double lo, double hi, int n);

/// Gauss-Legendre nodes and weights on [-1, 1].
void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights);

/// One quadrature axis: strictly increasing positive nodes with positive
/// weights for integration in dx.
struct Axis {
    std::vector<double> nodes;
    std::vector<double> weights;
    double domain_lo = 0.0;  // lower edge of the first panel

    std::size_t size() const { return nodes.size(); }
    double lo() const { return nodes.front(); }
    double hi() const { return nodes.back(); }

    /// Adds the [0, domain_lo) mass to the first weight assuming the
    /// integrand decays like x^{2 nu + 1} toward the origin.
    Axis with_laguerre_boundary(double nu) const;
};

Axis make_log_gauss_axis(double x_lo, double x_hi, int panels, int nodes_per_panel = 16);
Axis make_uniform_axis(double x_lo, double x_hi, int n);

class Grid {
public:
    explicit Grid(std::vector<Axis> axes);

    int dim() const { return static_cast<int>(axes_.size()); }
    const Axis& axis(int a) const { return axes_[static_cast<size_t>(a)]; }
    std::size_t size() const { return size_; }

    std::size_t flatten(std::span<const std::size_t> multi) const;
    void unflatten(std::size_t flat, std::span<std::size_t> multi) const;

    void point(std::size_t flat, std::span<double> out) const;
    double weight(std::size_t flat) const;

    Grid with_laguerre_boundary(const NuVector& nu) const;

private:
    std::vector<Axis> axes_;
    std::size_t size_ = 1;
};

using GridPtr = std::shared_ptr<const Grid>;

GridPtr make_grid(Axis axis);
GridPtr make_grid(std::vector<Axis> axes);

/// Sampled real function on a Grid; values are stored row-major in the
/// axis order.
class GridFunction {
public:
    GridFunction(GridPtr grid, std::vector<double> values);
    explicit GridFunction(GridPtr grid);  // zero-filled

    static GridFunction sample(GridPtr grid, const std::function<double(double)>& f);
    static GridFunction sample_nd(
        GridPtr grid, const std::function<double(std::span<const double>)>& f);

    const Grid& grid() const { return *grid_; }
    const GridPtr& grid_ptr() const { return grid_; }
    std::span<const double> values() const { return values_; }
    std::span<double> values() { return values_; }
    double operator[](std::size_t i) const { return values_[i]; }
    double& operator[](std::size_t i) { return values_[i]; }
    std::size_t size() const { return values_.size(); }

    GridFunction& operator+=(const GridFunction& o);
    GridFunction& operator-=(const GridFunction& o);
    GridFunction& operator*=(double s);

private:
    GridPtr grid_;
    std::vector<double> values_;
};

GridFunction operator+(GridFunction a, const GridFunction& b);
GridFunction operator-(GridFunction a, const GridFunction& b);
GridFunction operator*(double s, GridFunction a);

double integrate(const GridFunction& f);
double inner(const GridFunction& f, const GridFunction& g);
double sup_norm(const GridFunction& f);
double l2_norm(const GridFunction& f);

/// Log-spaced quadrature for integrals against the measure dt/t.
struct TimeQuadrature {
    std::vector<double> t_nodes;
    std::vector<double> weights;  // for sum w_i g(t_i) ~ int g(t) dt/t

    double t_min() const { return t_nodes.front(); }
    double t_max() const { return t_nodes.back(); }
    std::size_t size() const { return t_nodes.size(); }

    static TimeQuadrature make_log(double t_min, double t_max, int n);
};

}  // namespace laguerre
