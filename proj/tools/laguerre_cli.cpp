// Command line front end: evaluations, verification sweeps, and report
// emission. Reports are deterministic for a fixed config (JSON via
// nlohmann, CSV with fixed formatting); exit code 0 means no invariant was
// violated, 2 carries a violation certificate, 64 flags usage errors.

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <string>

#include "laguerre/grid.hpp"
#include "laguerre/heat.hpp"
#include "laguerre/operators.hpp"
#include "laguerre/specfun.hpp"
#include "laguerre/spectral.hpp"
#include "laguerre/sweeps.hpp"
#include "laguerre/weights.hpp"

using json = nlohmann::ordered_json;
using namespace laguerre;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolation = 2;
constexpr int kExitUsage = 64;

// Flat key = value configuration; defaults reproduce the acceptance suite.
class Config {
public:
    void load_file(const std::string& path) {
        std::ifstream in(path);
        if (!in) throw std::invalid_argument("config: cannot open " + path);
        std::string line;
        while (std::getline(in, line)) {
            const auto hash = line.find('#');
            if (hash != std::string::npos) line.erase(hash);
            const auto eq = line.find('=');
            if (eq == std::string::npos) continue;
            auto trim = [](std::string s) {
                const auto a = s.find_first_not_of(" \t\r");
                const auto b = s.find_last_not_of(" \t\r");
                return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
            };
            const std::string key = trim(line.substr(0, eq));
            const std::string value = trim(line.substr(eq + 1));
            if (!key.empty()) kv_[key] = value;
        }
    }

    double get(const std::string& key, double fallback) const {
        const auto it = kv_.find(key);
        return it == kv_.end() ? fallback : std::stod(it->second);
    }
    int get(const std::string& key, int fallback) const {
        const auto it = kv_.find(key);
        return it == kv_.end() ? fallback : std::stoi(it->second);
    }

private:
    std::map<std::string, std::string> kv_;
};

void write_text(const std::string& path, const std::string& payload) {
    if (path.empty()) {
        std::cout << payload;
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot open output file " + path);
    out << payload;
}

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

json bound_report_json(const BoundReport& rep) {
    json j;
    j["claim"] = rep.claim_id;
    j["grid"] = rep.grid_summary;
    j["best_C"] = rep.best_C;
    j["best_c"] = rep.best_c;
    j["worst_point"] = rep.worst_point;
    j["violated"] = rep.violated;
    json cands = json::array();
    for (const auto& [c, C] : rep.candidates) cands.push_back({{"c", c}, {"C", C}});
    j["candidates"] = cands;
    return j;
}

std::string bound_report_csv(std::span<const BoundReport> reps) {
    std::ostringstream os;
    os << "claim,c,C,violated,worst_t,worst_coords\n";
    for (const BoundReport& rep : reps) {
        for (const auto& [c, C] : rep.candidates) {
            os << rep.claim_id << ',' << format_double(c) << ',' << format_double(C) << ','
               << (rep.violated ? 1 : 0) << ',';
            if (!rep.worst_point.empty()) {
                os << format_double(rep.worst_point.front());
                os << ',';
                for (size_t i = 1; i < rep.worst_point.size(); ++i) {
                    os << (i > 1 ? ";" : "") << format_double(rep.worst_point[i]);
                }
            } else {
                os << ',';
            }
            os << '\n';
        }
    }
    return os.str();
}

struct IdentityRow {
    std::string id;
    double defect = 0.0;
    double tolerance = 0.0;
    bool pass() const { return defect < tolerance; }
};

json identity_rows_json(const std::string& set, std::span<const IdentityRow> rows) {
    json j;
    j["set"] = set;
    json out = json::array();
    bool all = true;
    for (const IdentityRow& r : rows) {
        out.push_back({{"id", r.id}, {"defect", r.defect}, {"tolerance", r.tolerance},
                       {"pass", r.pass()}});
        all = all && r.pass();
    }
    j["rows"] = out;
    j["all_pass"] = all;
    return j;
}

GridPtr default_spectral_grid(const Config& cfg) {
    return make_grid(make_log_gauss_axis(cfg.get("grid.x_min", 1e-4),
                                         cfg.get("grid.x_max", 20.0),
                                         cfg.get("grid.panels", 96),
                                         cfg.get("grid.nodes_per_panel", 16)));
}

GridFunction sample_phi(GridPtr grid, int k, double nu) {
    return GridFunction::sample(grid,
                                [k, nu](double x) { return laguerre_function(k, nu, x); });
}

// ---- verify-identities sets ------------------------------------------------

std::vector<IdentityRow> identities_intertwining(const Config& cfg) {
    const GridPtr grid = make_grid(make_uniform_axis(cfg.get("stencil.x_min", 0.05),
                                                     cfg.get("stencil.x_max", 6.0),
                                                     cfg.get("stencil.nodes", 4000)));
    const Axis& ax = grid->axis(0);
    const double tol = cfg.get("tol.intertwining", 1e-5);
    std::vector<IdentityRow> rows;
    for (double nu : {-0.75, -0.5, 0.4}) {
        for (int k = 1; k <= 10; ++k) {
            const GridFunction got = apply_delta(sample_phi(grid, k, nu), NuVector{nu}, 0);
            double worst = 0.0;
            for (size_t i = 0; i < ax.size(); ++i) {
                if (ax.nodes[i] < 0.2 || ax.nodes[i] > 5.0) continue;
                const double want = -2.0 * std::sqrt(static_cast<double>(k)) *
                                    laguerre_function(k - 1, nu + 1.0, ax.nodes[i]);
                worst = std::max(worst, std::abs(got[i] - want));
            }
            std::ostringstream id;
            id << "delta_phi k=" << k << " nu=" << nu;
            rows.push_back({id.str(), worst, tol});
        }
        for (int k = 0; k <= 10; ++k) {
            const GridFunction got =
                apply_delta_star(sample_phi(grid, k, nu + 1.0), NuVector{nu}, 0);
            double worst = 0.0;
            for (size_t i = 0; i < ax.size(); ++i) {
                if (ax.nodes[i] < 0.2 || ax.nodes[i] > 5.0) continue;
                const double want = -2.0 * std::sqrt(k + 1.0) *
                                    laguerre_function(k + 1, nu, ax.nodes[i]);
                worst = std::max(worst, std::abs(got[i] - want));
            }
            std::ostringstream id;
            id << "delta_star_phi k=" << k << " nu=" << nu;
            rows.push_back({id.str(), worst, tol});
        }
    }
    return rows;
}

std::vector<IdentityRow> identities_commutation(const Config& cfg) {
    const GridPtr grid = make_grid(make_log_gauss_axis(1e-4, 20.0, 128, 16));
    const double t = cfg.get("commutation.t", 0.3);
    const double tol = cfg.get("tol.commutation", 1e-7);
    std::vector<IdentityRow> rows;
    for (double nu : {-0.75, -0.5, 0.4}) {
        for (int k : {1, 2, 3}) {
            const CommutationReport rep =
                check_commutation(NuVector{nu}, 0, t, sample_phi(grid, k, nu), 12);
            std::ostringstream id;
            id << "commutation alpha=2 k=" << k << " nu=" << nu;
            rows.push_back({id.str(), rep.defect_alpha2, tol});
        }
    }

    // dual form through (L_{nu+e_j}+2)^{-1/2}
    for (double nu : {-0.75, 0.4}) {
        const double nu_up = nu + 1.0;
        const double t2 = 0.25;
        const GridFunction dstar_f = GridFunction::sample(grid, [&](double x) {
            const double phi = laguerre_function(1, nu_up, x);
            const double dphi = laguerre_function_derivative(1, nu_up, x);
            return -dphi + (x - (nu + 0.5) / x) * phi;
        });
        SpectralCoeffs left_w(NuVector{nu}, 6);
        const SpectralCoeffs dstar_coeffs = expand(dstar_f, NuVector{nu}, 6);
        for (const auto& [k, v] : dstar_coeffs.coeffs()) {
            const double lambda = eigenvalue(k, NuVector{nu});
            left_w.set(k, v * std::exp(-t2 * lambda) / std::sqrt(lambda));
        }
        const double lambda_up = eigenvalue(MultiIndex::scalar(1), NuVector{nu_up}) + 2.0;
        SpectralCoeffs right_w(NuVector{nu}, 6);
        right_w.set(MultiIndex::scalar(2), -2.0 * std::sqrt(2.0) *
                                               std::exp(-t2 * lambda_up) /
                                               std::sqrt(lambda_up));
        const double defect =
            sup_norm(synthesize(left_w, grid) - synthesize(right_w, grid));
        std::ostringstream id;
        id << "dual_riesz nu=" << nu;
        rows.push_back({id.str(), defect, tol});
    }
    return rows;
}

std::vector<IdentityRow> identities_factorization(const Config& cfg) {
    const double tol = cfg.get("tol.factorization", 1e-6);
    std::vector<IdentityRow> rows;
    {
        const GridPtr grid = make_grid(make_uniform_axis(0.05, 7.0, 3000));
        const NuVector nu{-0.6};
        for (int k = 1; k <= 5; ++k) {
            const GridFunction phi = sample_phi(grid, k, nu[0]);
            const GridFunction composed = apply_delta_star(apply_delta(phi, nu, 0), nu, 0);
            double worst = 0.0;
            for (size_t i = 6; i + 6 < grid->axis(0).size(); ++i) {
                worst = std::max(worst, std::abs(composed[i] - 4.0 * k * phi[i]));
            }
            std::ostringstream id;
            id << "factorization n=1 k=" << k;
            rows.push_back({id.str(), worst, tol});
        }
    }
    {
        const GridPtr grid = make_grid(
            {make_uniform_axis(0.05, 6.0, 500), make_uniform_axis(0.05, 6.0, 500)});
        const NuVector nu{-0.6, 0.4};
        for (const MultiIndex& k : indices_up_to(2, 2)) {
            if (k.total() == 0) continue;
            const GridFunction phi = GridFunction::sample_nd(grid, [&](std::span<const double> x) {
                return laguerre_function_nd(k, nu, x);
            });
            GridFunction composed(grid);
            for (int j = 0; j < 2; ++j) {
                composed += apply_delta_star(apply_delta(phi, nu, j), nu, j);
            }
            double worst = 0.0;
            std::vector<std::size_t> multi(2);
            for (size_t i = 0; i < grid->size(); ++i) {
                grid->unflatten(i, multi);
                if (multi[0] < 6 || multi[0] + 6 >= 500 || multi[1] < 6 || multi[1] + 6 >= 500)
                    continue;
                worst = std::max(worst, std::abs(composed[i] - 4.0 * k.total() * phi[i]));
            }
            std::ostringstream id;
            id << "factorization n=2 k=(" << k[0] << "," << k[1] << ")";
            rows.push_back({id.str(), worst, tol});
        }
    }
    return rows;
}

std::vector<IdentityRow> identities_semigroup(const Config& cfg) {
    const double tol = cfg.get("tol.semigroup", 1e-6);
    const Axis axis = make_log_gauss_axis(1e-4, 14.0, 72, 12);
    std::vector<IdentityRow> rows;
    for (double nu : {-0.75, -0.5, 0.4}) {
        const Axis baxis = axis.with_laguerre_boundary(nu);
        for (auto [s, t] : std::vector<std::pair<double, double>>{{0.1, 0.2}, {0.5, 0.5}}) {
            double worst = 0.0;
            for (auto [x, y] : std::vector<std::pair<double, double>>{{1.0, 1.3}, {0.4, 2.0}}) {
                double conv = 0.0;
                for (size_t i = 0; i < baxis.size(); ++i) {
                    conv += baxis.weights[i] * heat_kernel_1d(nu, s, x, baxis.nodes[i]) *
                            heat_kernel_1d(nu, t, baxis.nodes[i], y);
                }
                const double want = heat_kernel_1d(nu, s + t, x, y);
                worst = std::max(worst, std::abs(conv - want) / want);
            }
            std::ostringstream id;
            id << "chapman_kolmogorov nu=" << nu << " s=" << s << " t=" << t;
            rows.push_back({id.str(), worst, tol});
        }
    }
    return rows;
}

std::vector<IdentityRow> identities_product_rule(const Config& cfg) {
    const double tol = cfg.get("tol.product_rule", 1e-8);
    const GridPtr grid = make_grid(make_uniform_axis(0.5, 4.0, 2400));
    const NuVector nu{-0.6};
    auto f = [](double x) { return std::exp(-(x - 2.0) * (x - 2.0)); };
    const GridFunction gf = GridFunction::sample(grid, f);
    const GridFunction xf = GridFunction::sample(grid, [&](double x) { return x * f(x); });
    const GridFunction lhs = apply_delta(xf, nu, 0);
    const GridFunction df = apply_delta(gf, nu, 0);
    double worst = 0.0;
    for (size_t i = 4; i + 4 < grid->axis(0).size(); ++i) {
        worst = std::max(worst,
                         std::abs(lhs[i] - gf[i] - grid->axis(0).nodes[i] * df[i]));
    }
    return {{"delta(x f) = f + x delta f", worst, tol}};
}

std::vector<IdentityRow> identities_bessel(const Config& cfg) {
    const double tol = cfg.get("tol.bessel", 1e-6);
    std::vector<IdentityRow> rows;
    for (double alpha : {-0.75, 0.5}) {
        for (double z : {0.5, 1.0, 5.0}) {
            auto f = [alpha](double u) {
                return std::pow(u, -alpha) * std::exp(u) * bessel_i_scaled(alpha, u);
            };
            const double h = 1e-3;
            const double fd =
                (-f(z + 2 * h) + 8 * f(z + h) - 8 * f(z - h) + f(z - 2 * h)) / (12 * h);
            const double want = std::pow(z, -alpha) * std::exp(z) * bessel_i_scaled(alpha + 1.0, z);
            std::ostringstream id;
            id << "bessel_derivative alpha=" << alpha << " z=" << z;
            rows.push_back({id.str(), std::abs(fd - want) / std::abs(want), tol});
        }
    }
    // neighbor bound, reported as slack (negative defect when satisfied)
    double worst = -1.0;
    for (double alpha = -0.9; alpha <= 2.0; alpha += 0.29) {
        for (double z = 0.01; z <= 50.0; z *= 1.7) {
            const double a = bessel_i_scaled(alpha, z);
            const double b = bessel_i_scaled(alpha + 1.0, z);
            const double slack = std::abs(a - b) - (4.0 * alpha + 6.0) * b / z;
            worst = std::max(worst, slack);
        }
    }
    rows.push_back({"bessel_neighbor_bound", worst, 0.0});
    return rows;
}


std::vector<IdentityRow> identities_orthonormality(const Config& cfg) {
    const double tol = cfg.get("tol.orthonormality", 1e-7);
    const GridPtr grid = default_spectral_grid(cfg);
    std::vector<IdentityRow> rows;
    for (double nu : {-0.9, -0.75, -0.5, 0.0, 1.7}) {
        const Grid bgrid = grid->with_laguerre_boundary(NuVector{nu});
        const Axis& ax = bgrid.axis(0);
        const int N = 20;
        std::vector<std::vector<double>> gram(N + 1, std::vector<double>(N + 1, 0.0));
        for (size_t i = 0; i < ax.size(); ++i) {
            const std::vector<double> seq = laguerre_function_sequence(N, nu, ax.nodes[i]);
            for (int j = 0; j <= N; ++j) {
                const double wj = ax.weights[i] * seq[static_cast<size_t>(j)];
                for (int k = j; k <= N; ++k) {
                    gram[static_cast<size_t>(j)][static_cast<size_t>(k)] +=
                        wj * seq[static_cast<size_t>(k)];
                }
            }
        }
        double worst = 0.0;
        for (int j = 0; j <= N; ++j)
            for (int k = j; k <= N; ++k)
                worst = std::max(worst,
                                 std::abs(gram[static_cast<size_t>(j)][static_cast<size_t>(k)] -
                                          (j == k ? 1.0 : 0.0)));
        std::ostringstream id;
        id << "gram nu=" << nu << " k<=20";
        rows.push_back({id.str(), worst, tol});
    }
    return rows;
}

std::vector<IdentityRow> identities_semigroup_routes(const Config& cfg) {
    const double tol = cfg.get("tol.routes", 1e-5);
    const GridPtr grid = make_grid(make_log_gauss_axis(1e-4, 14.0, 72, 12));
    std::vector<IdentityRow> rows;
    for (double nu : {-0.75, -0.5, 0.4}) {
        std::vector<GridFunction> phis;
        for (int k = 0; k <= 10; ++k) phis.push_back(sample_phi(grid, k, nu));
        for (double t : {0.05, 0.3, 1.0}) {
            const std::vector<GridFunction> kernel_route =
                semigroup_apply_kernel_batch(phis, NuVector{nu}, t);
            double worst = 0.0;
            for (int k = 0; k <= 10; ++k) {
                const double lambda = 4.0 * k + 2.0 * nu + 2.0;
                const GridFunction want =
                    std::exp(-t * lambda) * phis[static_cast<size_t>(k)];
                worst = std::max(worst,
                                 sup_norm(kernel_route[static_cast<size_t>(k)] - want) /
                                     sup_norm(phis[static_cast<size_t>(k)]));
            }
            std::ostringstream id;
            id << "routes nu=" << nu << " t=" << t;
            rows.push_back({id.str(), worst, tol});
        }
    }
    return rows;
}

std::vector<IdentityRow> identities_derivative_fd(const Config& cfg) {
    const double tol = cfg.get("tol.derivative_fd", 1e-5);
    std::mt19937 rng(static_cast<unsigned>(cfg.get("fd.seed", 42)));
    std::uniform_real_distribution<double> logt(std::log(0.05), std::log(2.0));
    std::uniform_real_distribution<double> logx(std::log(0.3), std::log(3.0));
    std::vector<IdentityRow> rows;
    for (double nu : {-0.75, -0.5, 0.7}) {
        double worst_delta = 0.0, worst_dt = 0.0;
        for (int i = 0; i < 20; ++i) {
            const double t = std::exp(logt(rng));
            const double x = std::exp(logx(rng));
            const double y = std::exp(logx(rng));
            const double hx = 1e-3 * std::min(1.0, std::sqrt(t));
            auto p_of_x = [&](double u) { return heat_kernel_1d(nu, t, u, y); };
            const double fd_delta =
                (-p_of_x(x + 2 * hx) + 8 * p_of_x(x + hx) - 8 * p_of_x(x - hx) +
                 p_of_x(x - 2 * hx)) /
                    (12 * hx) +
                (x - (nu + 0.5) / x) * heat_kernel_1d(nu, t, x, y);
            worst_delta = std::max(worst_delta,
                                   std::abs(delta_heat_kernel_1d(nu, t, x, y) - fd_delta) /
                                       std::max(std::abs(fd_delta), 1e-12));
            const double ht = 5e-3 * t;
            auto p_of_t = [&](double s) { return heat_kernel_1d(nu, s, x, y); };
            const double fd_dt = (-p_of_t(t + 2 * ht) + 8 * p_of_t(t + ht) -
                                  8 * p_of_t(t - ht) + p_of_t(t - 2 * ht)) /
                                 (12 * ht);
            worst_dt = std::max(worst_dt, std::abs(dt_heat_kernel_1d(nu, t, x, y) - fd_dt) /
                                              std::max(std::abs(fd_dt), 1e-12));
        }
        std::ostringstream id1, id2;
        id1 << "delta_kernel_fd nu=" << nu;
        id2 << "dt_kernel_fd nu=" << nu;
        rows.push_back({id1.str(), worst_delta, tol});
        rows.push_back({id2.str(), worst_dt, tol});
    }
    return rows;
}

std::vector<IdentityRow> identities_riesz_square(const Config& cfg) {
    const GridPtr grid = make_grid(make_log_gauss_axis(1e-4, 14.0, 48, 8));
    const NuVector nu{-0.5};
    const TimeQuadrature tq = TimeQuadrature::make_log(
        cfg.get("time.t_min", 1e-5), cfg.get("time.t_max", 50.0), cfg.get("time.nodes", 100));
    std::vector<IdentityRow> rows;

    const GridFunction phi1 = sample_phi(grid, 1, nu[0]);
    const RieszQuadratureResult r = riesz_apply_quadrature(phi1, nu, 0, tq);
    const GridFunction r_want = (-2.0 / std::sqrt(5.0)) * sample_phi(grid, 0, 0.5);
    rows.push_back({"riesz_phi1_closed_form", sup_norm(r.value - r_want) / sup_norm(r_want),
                    cfg.get("tol.riesz", 1e-4)});

    const GridFunction s1 = square_function_s(phi1, nu, 0, tq);
    const GridFunction s_want = std::sqrt(2.0 / 5.0) * sample_phi(grid, 0, 0.5);
    rows.push_back({"squareS_phi1_closed_form", sup_norm(s1 - s_want) / sup_norm(s_want),
                    cfg.get("tol.square", 1e-3)});

    const Axis& ax = grid->axis(0);
    for (int k : {0, 2, 5}) {
        const GridFunction phi = sample_phi(grid, k, nu[0]);
        const GridFunction gk = square_function_g(phi, nu, tq, 10);
        double w = 0.0;
        for (size_t i = 0; i < ax.size(); ++i) {
            if (ax.nodes[i] < 0.1 || ax.nodes[i] > 8.0) continue;
            w = std::max(w, std::abs(gk[i] - 0.5 * std::abs(phi[i])));
        }
        std::ostringstream id;
        id << "squareG_phi" << k << "_half";
        rows.push_back({id.str(), w, cfg.get("tol.square", 1e-3)});
    }
    return rows;
}

std::vector<IdentityRow> identities_offdiagonal(const Config& cfg) {
    const Axis axis = make_log_gauss_axis(1e-3, 40.0, 60, 6);
    const std::vector<double> ts = {0.05, 0.2, 1.0};
    const OffDiagonalReport rep =
        offdiagonal_decay(0.25, 0.25, 1.0, 1.0, 2.0, 2, 6, ts, axis);
    std::vector<IdentityRow> rows;
    // pass iff the fitted Gaussian rate exists and norms fall monotonically
    rows.push_back({"offdiagonal_fit_c_positive", rep.fitted_c > 0.0 ? 0.0 : 1.0, 0.5});
    rows.push_back({"offdiagonal_monotone_decay", rep.decay_consistent ? 0.0 : 1.0, 0.5});
    (void)cfg;
    return rows;
}

std::vector<IdentityRow> identities_weight_criteria(const Config& cfg) {
    std::vector<IdentityRow> rows;
    const ExponentRange m = theorem_range(NuVector{-0.75}, TheoremOperator::maximal);
    const ExponentRange r = theorem_range(NuVector{-0.75}, TheoremOperator::riesz, 0);
    rows.push_back({"maximal_range_(4/3,4)",
                    std::abs(m.p_lo() - 4.0 / 3.0) + std::abs(m.p_hi() - 4.0), 1e-12});
    rows.push_back({"riesz_range_(4/3,inf)",
                    std::abs(r.p_lo() - 4.0 / 3.0) + (std::isinf(r.p_hi()) ? 0.0 : 1.0),
                    1e-12});
    std::mt19937 rng(static_cast<unsigned>(cfg.get("weights.seed", 2024)));
    std::uniform_real_distribution<double> sdist(-2.0, 2.2);
    std::uniform_real_distribution<double> pdist(1.3, 3.5);
    std::uniform_real_distribution<double> qdist(1.5, 6.0);
    int checked = 0, mismatches = 0;
    while (checked < 20) {
        const double sigma = sdist(rng);
        const double p = pdist(rng);
        const double q = qdist(rng);
        if (std::abs(sigma + 1.0) < 0.05) continue;
        if (std::abs(sigma - (p - 1.0)) < 0.05) continue;
        if (std::abs(sigma + 1.0 / q) < 0.05) continue;
        ++checked;
        const PowerWeightMembership want = power_weight_class(sigma, p, q, 1);
        const RefinementReport rep = refinement_study(WeightSpec::power(sigma), p, q);
        if (rep.ap_stabilizes != want.in_ap) ++mismatches;
        if (rep.rh_stabilizes != want.in_rh) ++mismatches;
    }
    rows.push_back({"power_weight_vs_refinement_20_cases", static_cast<double>(mismatches),
                    0.5});
    return rows;
}

// ---- command implementations ------------------------------------------------

int cmd_verify_bounds(const std::string& claim, const std::vector<double>& nu_values,
                      double envelope_a, bool reduced,
                      const std::vector<double>& c_candidates, const std::string& out_json,
                      const std::string& out_csv) {
    std::vector<std::string> claims;
    if (claim == "all") {
        claims = known_bound_claims();
    } else {
        claims.push_back(claim);
    }
    std::vector<BoundReport> reports;
    for (const std::string& id : claims) {
        ClaimRequest req;
        req.claim_id = id;
        req.envelope_a = envelope_a;
        req.full_grid = !reduced;
        if (!c_candidates.empty()) req.c_candidates = c_candidates;
        if (!nu_values.empty()) {
            req.nu = NuVector(nu_values);
        } else if (id == "prop31i") {
            req.nu = NuVector::scalar(0.7);
        } else if (id == "prop31ii") {
            req.nu = NuVector::scalar(-0.5);
        } else if (id == "prop-nd") {
            req.nu = NuVector{-0.75, -0.5};
        } else {
            req.nu = NuVector::scalar(-0.75);
        }
        reports.push_back(run_bound_claim(req));
    }

    json j = json::array();
    bool violated = false;
    for (const BoundReport& rep : reports) {
        j.push_back(bound_report_json(rep));
        violated = violated || rep.violated;
    }
    write_text(out_json, j.dump(2) + "\n");
    if (!out_csv.empty()) write_text(out_csv, bound_report_csv(reports));
    if (violated) {
        for (const BoundReport& rep : reports) {
            if (!rep.violated) continue;
            std::cerr << "VIOLATION " << rep.claim_id << " measured_ratio=" << rep.best_C
                      << " worst_point=(";
            for (size_t i = 0; i < rep.worst_point.size(); ++i) {
                std::cerr << (i ? "," : "") << format_double(rep.worst_point[i]);
            }
            std::cerr << ")\n";
        }
        return kExitViolation;
    }
    return kExitOk;
}

int cmd_verify_identities(const std::string& set, const Config& cfg,
                          const std::string& out_json) {
    std::vector<IdentityRow> rows;
    if (set == "intertwining") {
        rows = identities_intertwining(cfg);
    } else if (set == "commutation") {
        rows = identities_commutation(cfg);
    } else if (set == "factorization") {
        rows = identities_factorization(cfg);
    } else if (set == "semigroup") {
        rows = identities_semigroup(cfg);
    } else if (set == "product-rule") {
        rows = identities_product_rule(cfg);
    } else if (set == "bessel") {
        rows = identities_bessel(cfg);
    } else if (set == "orthonormality") {
        rows = identities_orthonormality(cfg);
    } else if (set == "semigroup-routes") {
        rows = identities_semigroup_routes(cfg);
    } else if (set == "derivative-fd") {
        rows = identities_derivative_fd(cfg);
    } else if (set == "riesz-square") {
        rows = identities_riesz_square(cfg);
    } else if (set == "offdiagonal") {
        rows = identities_offdiagonal(cfg);
    } else if (set == "weight-criteria") {
        rows = identities_weight_criteria(cfg);
    } else {
        throw CLI::ValidationError("--set", "unknown identity set " + set);
    }
    const json j = identity_rows_json(set, rows);
    write_text(out_json, j.dump(2) + "\n");
    for (const IdentityRow& r : rows) {
        if (!r.pass()) {
            std::cerr << "VIOLATION " << r.id << " defect=" << r.defect
                      << " tolerance=" << r.tolerance << "\n";
            return kExitViolation;
        }
    }
    return kExitOk;
}

GridFunction parse_input_function(const std::string& spec, GridPtr grid, double nu) {
    const auto colon = spec.find(':');
    const std::string kind = spec.substr(0, colon);
    const std::string args = colon == std::string::npos ? "" : spec.substr(colon + 1);
    if (kind == "phi") {
        return sample_phi(grid, std::stoi(args), nu);
    }
    if (kind == "bump") {
        std::istringstream is(args);
        double mu = 0.0, s = 0.5;
        char comma = ',';
        is >> mu >> comma >> s;
        return GridFunction::sample(grid, [mu, s](double x) {
            const double u = (std::log(x) - mu) / s;
            return std::exp(-0.5 * u * u);
        });
    }
    if (kind == "indicator") {
        std::istringstream is(args);
        double a = 1.0, b = 2.0;
        char comma = ',';
        is >> a >> comma >> b;
        return GridFunction::sample(grid,
                                    [a, b](double x) { return x >= a && x <= b ? 1.0 : 0.0; });
    }
    throw CLI::ValidationError("--input", "unknown input spec " + spec);
}

std::string grid_csv(const GridFunction& f) {
    std::ostringstream os;
    os << "x,value\n";
    const Axis& ax = f.grid().axis(0);
    for (size_t i = 0; i < ax.size(); ++i) {
        os << format_double(ax.nodes[i]) << ',' << format_double(f[i]) << '\n';
    }
    return os.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Laguerre operator toolkit: kernels, transforms, verification sweeps"};
    app.require_subcommand(1);
    std::string config_path;
    app.add_option("--config", config_path, "flat key=value configuration file");

    Config cfg;

    // eval-phi
    auto* eval_phi = app.add_subcommand("eval-phi", "evaluate a Laguerre eigenfunction");
    std::vector<int> ep_k{0};
    std::vector<double> ep_nu{-0.5}, ep_x{1.0};
    eval_phi->add_option("--k", ep_k, "index (one per coordinate)");
    eval_phi->add_option("--nu", ep_nu, "order (one per coordinate)");
    eval_phi->add_option("--x", ep_x, "abscissa (one per coordinate)");

    // heat-kernel
    auto* heat = app.add_subcommand("heat-kernel", "evaluate the heat kernel or a derivative");
    std::vector<double> hk_nu{-0.5}, hk_x{1.0}, hk_y{1.0};
    double hk_t = 0.25;
    std::string hk_deriv = "none";
    heat->add_option("--nu", hk_nu, "order");
    heat->add_option("--t", hk_t, "time");
    heat->add_option("--x", hk_x, "first argument");
    heat->add_option("--y", hk_y, "second argument");
    heat->add_option("--deriv", hk_deriv, "none | delta | delta-star | dt (one dimension)");

    // verify-bounds
    auto* vb = app.add_subcommand("verify-bounds", "fit constants of a kernel inequality");
    std::string vb_claim = "all";
    std::vector<double> vb_nu;
    double vb_a = 0.25;
    bool vb_reduced = false;
    std::string vb_out, vb_csv;
    vb->add_option("--claim", vb_claim, "claim id or 'all'");
    vb->add_option("--nu", vb_nu, "order override");
    vb->add_option("--a", vb_a, "envelope exponent for h-composition");
    std::vector<double> vb_c;
    vb->add_option("--c-candidates", vb_c, "Gaussian constant candidates");
    vb->add_flag("--reduced", vb_reduced, "use the reduced sweep grid");
    vb->add_option("--out", vb_out, "JSON report path (default stdout)");
    vb->add_option("--csv", vb_csv, "CSV sweep table path");

    // verify-identities
    auto* vi = app.add_subcommand("verify-identities", "check closed-form identities");
    std::string vi_set = "intertwining";
    std::string vi_out;
    vi->add_option("--set", vi_set,
                   "intertwining | commutation | factorization | semigroup | product-rule | "
                   "bessel | orthonormality | semigroup-routes | derivative-fd | riesz-square | "
                   "offdiagonal | weight-criteria");
    vi->add_option("--out", vi_out, "JSON report path (default stdout)");

    // riesz
    auto* rz = app.add_subcommand("riesz", "apply the Riesz transform");
    std::vector<double> rz_nu{-0.5};
    int rz_j = 1;
    std::string rz_input = "phi:1", rz_route = "both", rz_out;
    rz->add_option("--nu", rz_nu, "order");
    rz->add_option("--j", rz_j, "coordinate (1-based)");
    rz->add_option("--input", rz_input, "phi:k | bump:mu,s | indicator:a,b");
    rz->add_option("--route", rz_route, "spectral | quadrature | both");
    rz->add_option("--out", rz_out, "CSV output path (default stdout)");

    // square
    auto* sq = app.add_subcommand("square", "apply a vertical square function");
    std::string sq_kind = "G";
    std::vector<double> sq_nu{-0.5};
    int sq_j = 1;
    std::string sq_input = "phi:1", sq_out;
    sq->add_option("--kind", sq_kind, "S | G");
    sq->add_option("--nu", sq_nu, "order");
    sq->add_option("--j", sq_j, "coordinate for S (1-based)");
    sq->add_option("--input", sq_input, "input function spec");
    sq->add_option("--out", sq_out, "CSV output path");

    // maximal
    auto* mx = app.add_subcommand("maximal", "semigroup maximal function");
    std::vector<double> mx_nu{-0.75};
    std::string mx_input = "indicator:1,2", mx_out;
    mx->add_option("--nu", mx_nu, "order");
    mx->add_option("--input", mx_input, "input function spec");
    mx->add_option("--out", mx_out, "CSV output path");

    // weight-check
    auto* wc = app.add_subcommand("weight-check", "power weight class membership");
    double wc_sigma = 0.5, wc_p = 2.0, wc_q = 2.0;
    int wc_n = 1;
    bool wc_refine = false;
    std::string wc_out;
    wc->add_option("--sigma", wc_sigma, "power exponent");
    wc->add_option("--p", wc_p, "Muckenhoupt exponent");
    wc->add_option("--q", wc_q, "reverse Holder exponent");
    wc->add_option("--n", wc_n, "dimension");
    wc->add_flag("--refine", wc_refine, "run the grid refinement study");
    wc->add_option("--out", wc_out, "JSON output path");

    // range
    auto* rg = app.add_subcommand("range", "admissible exponent range of a theorem");
    std::vector<double> rg_nu{-0.75};
    std::string rg_op = "riesz";
    int rg_j = 1;
    rg->add_option("--nu", rg_nu, "order");
    rg->add_option("--op", rg_op, "maximal | riesz | square-s | square-g");
    rg->add_option("--j", rg_j, "coordinate (1-based)");

    // probe-norms
    auto* pn = app.add_subcommand("probe-norms", "empirical operator norm lower bounds");
    std::vector<double> pn_nu{-0.75};
    std::vector<double> pn_p{1.5, 2.0, 4.0, 8.0};
    std::string pn_op = "riesz";
    double pn_sigma = 0.0;
    unsigned pn_seed = 20240701u;
    std::string pn_out;
    pn->add_option("--op", pn_op, "riesz | maximal | square-s | square-g");
    pn->add_option("--nu", pn_nu, "order");
    pn->add_option("--p", pn_p, "exponent list");
    pn->add_option("--weight-sigma", pn_sigma, "power weight exponent");
    auto* pn_seed_opt = pn->add_option("--seed", pn_seed, "probe family seed");
    pn->add_option("--out", pn_out, "CSV output path");

    try {
        app.parse(argc, argv);
        if (!config_path.empty()) cfg.load_file(config_path);

        if (eval_phi->parsed()) {
            const NuVector nu(ep_nu);
            std::vector<int> kv = ep_k;
            const MultiIndex k(kv);
            const double v = laguerre_function_nd(k, nu, ep_x);
            std::cout << format_double(v) << "\n";
            return kExitOk;
        }
        if (heat->parsed()) {
            double v = 0.0;
            if (hk_deriv == "none") {
                v = heat_kernel_nd(KernelQuery{NuVector(hk_nu), hk_t, hk_x, hk_y});
            } else if (hk_nu.size() != 1) {
                throw CLI::ValidationError("--deriv", "derivative kernels are one-dimensional");
            } else if (hk_deriv == "delta") {
                v = delta_heat_kernel_1d(hk_nu[0], hk_t, hk_x.at(0), hk_y.at(0));
            } else if (hk_deriv == "delta-star") {
                v = delta_star_heat_kernel_1d(hk_nu[0], hk_t, hk_x.at(0), hk_y.at(0));
            } else if (hk_deriv == "dt") {
                v = dt_heat_kernel_1d(hk_nu[0], hk_t, hk_x.at(0), hk_y.at(0));
            } else {
                throw CLI::ValidationError("--deriv", "unknown derivative " + hk_deriv);
            }
            std::cout << format_double(v) << "\n";
            return kExitOk;
        }
        if (vb->parsed()) {
            return cmd_verify_bounds(vb_claim, vb_nu, vb_a, vb_reduced, vb_c, vb_out, vb_csv);
        }
        if (vi->parsed()) {
            return cmd_verify_identities(vi_set, cfg, vi_out);
        }
        if (rz->parsed()) {
            const NuVector nu(rz_nu);
            const GridPtr grid = make_grid(make_log_gauss_axis(1e-4, 14.0, 48, 8));
            const GridFunction f = parse_input_function(rz_input, grid, nu[0]);
            const TimeQuadrature tq = TimeQuadrature::make_log(
                cfg.get("time.t_min", 1e-5), cfg.get("time.t_max", 50.0),
                cfg.get("time.nodes", 100));
            std::ostringstream os;
            if (rz_route == "spectral" || rz_route == "both") {
                const GridFunction out =
                    synthesize(riesz_apply_spectral(expand(f, nu, 60), rz_j - 1), grid);
                os << "# route=spectral\n" << grid_csv(out);
            }
            if (rz_route == "quadrature" || rz_route == "both") {
                const RieszQuadratureResult res = riesz_apply_quadrature(f, nu, rz_j - 1, tq);
                os << "# route=quadrature tail_bound=" << format_double(res.tail_bound)
                   << " range_warning=" << (res.range_warning ? 1 : 0) << "\n"
                   << grid_csv(res.value);
            }
            write_text(rz_out, os.str());
            return kExitOk;
        }
        if (sq->parsed()) {
            const NuVector nu(sq_nu);
            const GridPtr grid = make_grid(make_log_gauss_axis(1e-4, 14.0, 48, 8));
            const GridFunction f = parse_input_function(sq_input, grid, nu[0]);
            const TimeQuadrature tq = TimeQuadrature::make_log(
                cfg.get("time.t_min", 1e-5), cfg.get("time.t_max", 50.0),
                cfg.get("time.nodes", 100));
            const GridFunction out =
                sq_kind == "S" ? square_function_s(f, nu, sq_j - 1, tq)
                               : square_function_g(f, nu, tq, 60);
            write_text(sq_out, grid_csv(out));
            return kExitOk;
        }
        if (mx->parsed()) {
            const NuVector nu(mx_nu);
            const GridPtr grid = make_grid(make_log_gauss_axis(1e-4, 14.0, 48, 8));
            const GridFunction f = parse_input_function(mx_input, grid, nu[0]);
            const TimeQuadrature tq = TimeQuadrature::make_log(
                cfg.get("maximal.t_min", 1e-4), cfg.get("maximal.t_max", 20.0),
                cfg.get("maximal.nodes", 30));
            write_text(mx_out, grid_csv(maximal_semigroup(f, nu, tq)));
            return kExitOk;
        }
        if (wc->parsed()) {
            const PowerWeightMembership m = power_weight_class(wc_sigma, wc_p, wc_q, wc_n);
            json j;
            j["sigma"] = wc_sigma;
            j["p"] = wc_p;
            j["q"] = wc_q;
            j["n"] = wc_n;
            j["in_ap"] = m.in_ap;
            j["in_rh"] = m.in_rh;
            if (wc_refine) {
                if (wc_n != 1) {
                    throw CLI::ValidationError("--refine", "refinement study is one-dimensional");
                }
                const RefinementReport rep =
                    refinement_study(WeightSpec::power(wc_sigma), wc_p, wc_q);
                json levels = json::array();
                for (const RefinementLevel& L : rep.levels) {
                    levels.push_back({{"x_min", L.x_min},
                                      {"ap", L.constants.ap},
                                      {"rh", L.constants.rh}});
                }
                j["refinement"] = {{"levels", levels},
                                   {"ap_slope", rep.ap_slope},
                                   {"rh_slope", rep.rh_slope},
                                   {"ap_stabilizes", rep.ap_stabilizes},
                                   {"rh_stabilizes", rep.rh_stabilizes}};
            }
            write_text(wc_out, j.dump(2) + "\n");
            return kExitOk;
        }
        if (rg->parsed()) {
            const NuVector nu(rg_nu);
            TheoremOperator op = TheoremOperator::riesz;
            if (rg_op == "maximal") op = TheoremOperator::maximal;
            else if (rg_op == "riesz") op = TheoremOperator::riesz;
            else if (rg_op == "square-s") op = TheoremOperator::square_s;
            else if (rg_op == "square-g") op = TheoremOperator::square_g;
            else throw CLI::ValidationError("--op", "unknown operator " + rg_op);
            const ExponentRange r = theorem_range(nu, op, rg_j - 1);
            std::cout << "(" << format_double(r.p_lo()) << ", "
                      << (std::isinf(r.p_hi()) ? "inf" : format_double(r.p_hi())) << ")\n";
            const double p_mid = std::isinf(r.p_hi()) ? r.p_lo() + 1.0
                                                      : 0.5 * (r.p_lo() + r.p_hi());
            std::cout << "weights at p=" << format_double(p_mid) << ": A_"
                      << format_double(r.ap_index(p_mid));
            const double rh = r.rh_index(p_mid);
            if (rh == 1.0) {
                std::cout << " (reverse Holder condition void)\n";
            } else {
                std::cout << " and RH_" << format_double(rh) << "\n";
            }
            return kExitOk;
        }
        if (pn->parsed()) {
            if (pn_seed_opt->count() == 0) {
                pn_seed = static_cast<unsigned>(cfg.get("probe.seed", 20240701));
            }
            const NuVector nu(pn_nu);
            const GridPtr grid = make_grid(make_log_gauss_axis(1e-4, 14.0, 48, 8));
            const std::vector<GridFunction> family = standard_probe_family(grid, nu, pn_seed);
            const GridFunction w = GridFunction::sample(
                grid, [pn_sigma](double x) { return std::pow(x, pn_sigma); });
            const TimeQuadrature tq = TimeQuadrature::make_log(1e-5, 50.0, 80);

            std::vector<GridFunction> outputs;
            if (pn_op == "riesz") {
                outputs = riesz_quadrature_batch(family, nu, 0, tq);
            } else if (pn_op == "square-s") {
                outputs = square_s_batch(family, nu, 0, tq);
            } else if (pn_op == "square-g") {
                for (const GridFunction& f : family) {
                    outputs.push_back(square_function_g(f, nu, tq, 60));
                }
            } else if (pn_op == "maximal") {
                const TimeQuadrature mtq = TimeQuadrature::make_log(1e-4, 20.0, 30);
                for (const GridFunction& f : family) {
                    outputs.push_back(maximal_semigroup(f, nu, mtq));
                }
            } else {
                throw CLI::ValidationError("--op", "unknown operator " + pn_op);
            }

            std::ostringstream os;
            os << "op,p,weight_sigma,seed,ratio\n";
            for (double p : pn_p) {
                double best = 0.0;
                for (size_t m = 0; m < family.size(); ++m) {
                    const double denom = weighted_lp_norm(family[m], p, w);
                    if (denom > 0.0) {
                        best = std::max(best, weighted_lp_norm(outputs[m], p, w) / denom);
                    }
                }
                os << pn_op << ',' << format_double(p) << ',' << format_double(pn_sigma)
                   << ',' << pn_seed << ',' << format_double(best) << '\n';
            }
            write_text(pn_out, os.str());
            return kExitOk;
        }
        return kExitUsage;
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitUsage;  // --help is not an error
    } catch (const CLI::Error& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const unsupported_claim& e) {
        std::cerr << "unsupported claim: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
