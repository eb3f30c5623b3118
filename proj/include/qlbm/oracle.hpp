// Copyright 2026 The qlbm Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/**
 * @file
 * Classical LBM reference: loop-based stepper (linearized or full
 * equilibrium), analytic benchmark profiles and the L2 error norm.
 *
 * The stepper is written in push form and evaluates the equilibrium from
 * moments directly, so it shares no code path with the operator matrices
 * it is used to check.
 */
#pragma once

#include <Eigen/Dense>

#include <array>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>

#include "grid.hpp"
#include "lattice.hpp"
#include "operators.hpp"

namespace qlbm {

enum class CaseId { ade, poiseuille, couette, cavity };
enum class Engine { quantum, classical_linear, classical_full };

inline const char *to_string(CaseId id) {
    switch (id) {
    case CaseId::ade: return "ade";
    case CaseId::poiseuille: return "poiseuille";
    case CaseId::couette: return "couette";
    case CaseId::cavity: return "cavity";
    }
    return "?";
}

inline const char *to_string(Engine e) {
    switch (e) {
    case Engine::quantum: return "quantum";
    case Engine::classical_linear: return "classical-linear";
    case Engine::classical_full: return "classical-full";
    }
    return "?";
}

struct CaseConfig {
    CaseId id{CaseId::poiseuille};
    GridSpec grid;
    BcSpec bc;
    double tau{0.8};
    /// Kinematic viscosity (flows) or diffusivity (ade); tau = 3 nu + 1/2.
    double nu{0.1};
    Vec2 body_force{0.0, 0.0};
    /// Lid / top wall speed along x.
    double wall_speed{0.0};
    /// Prescribed advection velocity (ade only).
    Vec2 adv_velocity{0.0, 0.0};
    double c0{1.0};
    double sigma0{2.0};
    double reynolds{10.0};
    double u_max{0.1};
    std::size_t steps{1};
    std::size_t output_every{0};
    Engine engine{Engine::quantum};
    std::string out_dir{"out"};
    std::uint64_t seed{0};
    std::uint64_t shots{0};
    double tolerance{1e-7};

    [[nodiscard]] bool prescribed_velocity() const { return id == CaseId::ade; }
    /// Channel height / cavity side under the halfway-wall convention.
    [[nodiscard]] double height() const { return static_cast<double>(grid.ny); }
};

inline double tau_from_viscosity(double nu) { return 3.0 * nu + 0.5; }

/// Body force that drives a Poiseuille profile with centerline speed u_max.
inline double poiseuille_force(double nu, double u_max, double h) {
    return 8.0 * nu * u_max / (h * h);
}

inline CaseConfig ade_case(std::size_t nx, std::size_t ny, double diffusion, Vec2 u_adv,
                           std::size_t steps) {
    CaseConfig c;
    c.id = CaseId::ade;
    c.grid = GridSpec(nx, ny);
    c.bc = BcSpec::fully_periodic();
    c.nu = diffusion;
    c.tau = tau_from_viscosity(diffusion);
    c.adv_velocity = u_adv;
    c.steps = steps;
    return c;
}

/// Re = u_max h / nu fixes nu; the force follows from the parabola.
inline CaseConfig poiseuille_case(std::size_t nx, std::size_t ny, std::size_t steps,
                                  double reynolds = 10.0, double u_max = 0.1) {
    CaseConfig c;
    c.id = CaseId::poiseuille;
    c.grid = GridSpec(nx, ny);
    c.bc = BcSpec::channel();
    c.reynolds = reynolds;
    c.u_max = u_max;
    c.nu = u_max * c.height() / reynolds;
    c.tau = tau_from_viscosity(c.nu);
    c.body_force = {poiseuille_force(c.nu, u_max, c.height()), 0.0};
    c.steps = steps;
    return c;
}

inline CaseConfig couette_case(std::size_t nx, std::size_t ny, std::size_t steps,
                               double wall_speed, bool pressure_gradient,
                               double reynolds = 10.0, double u_max = 0.1) {
    CaseConfig c = poiseuille_case(nx, ny, steps, reynolds, u_max);
    c.id = CaseId::couette;
    c.wall_speed = wall_speed;
    c.bc = BcSpec::channel({wall_speed, 0.0});
    if (!pressure_gradient) c.body_force = {0.0, 0.0};
    return c;
}

/// Square-ish cavity: nu = u_lid L / Re with L = nx.
inline CaseConfig cavity_case(std::size_t nx, std::size_t ny, std::size_t steps,
                              double lid_speed = 0.1, double reynolds = 10.0) {
    CaseConfig c;
    c.id = CaseId::cavity;
    c.grid = GridSpec(nx, ny);
    c.wall_speed = lid_speed;
    c.bc = BcSpec::cavity({lid_speed, 0.0});
    c.reynolds = reynolds;
    c.nu = lid_speed * static_cast<double>(nx) / reynolds;
    c.tau = tau_from_viscosity(c.nu);
    c.steps = steps;
    return c;
}

inline CollisionKernel case_kernel(const CaseConfig &cfg, const LatticeModel &lat) {
    return cfg.prescribed_velocity() ? advection_diffusion_kernel(lat, cfg.tau, cfg.adv_velocity)
                                     : collision_kernel(lat, cfg.tau);
}

// ---------------------------------------------------------------------------

/// DF vector plus on-demand macroscopic fields.
struct FlowFields {
    GridSpec grid;
    Eigen::VectorXd df;

    [[nodiscard]] double f(std::size_t x, std::size_t y, std::size_t i) const {
        return df(static_cast<Eigen::Index>(flat_index(x, y, i, grid)));
    }
    [[nodiscard]] Eigen::VectorXd rho() const {
        Eigen::VectorXd r = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(grid.n_g()));
        for (std::size_t i = 0; i < kNumDirections; ++i) {
            r += df.segment(static_cast<Eigen::Index>(i * grid.n_g()),
                            static_cast<Eigen::Index>(grid.n_g()));
        }
        return r;
    }
    /// Momentum component (0 = x, 1 = y) per node.
    [[nodiscard]] Eigen::VectorXd momentum(int axis) const {
        const auto lat = d2q9();
        Eigen::VectorXd m = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(grid.n_g()));
        for (std::size_t i = 0; i < kNumDirections; ++i) {
            const int e = lat.velocities[i][static_cast<std::size_t>(axis)];
            if (e == 0) continue;
            m += e * df.segment(static_cast<Eigen::Index>(i * grid.n_g()),
                                static_cast<Eigen::Index>(grid.n_g()));
        }
        return m;
    }
    [[nodiscard]] Eigen::VectorXd ux() const { return momentum(0).cwiseQuotient(rho()); }
    [[nodiscard]] Eigen::VectorXd uy() const { return momentum(1).cwiseQuotient(rho()); }
};

/// Equilibrium populations; linearized drops the velocity-quadratic terms.
inline std::array<double, kNumDirections> equilibrium(double rho, const Vec2 &u,
                                                      const LatticeModel &lat, bool linearized) {
    if (!(rho > 0.0)) {
        throw std::invalid_argument("equilibrium requires positive density");
    }
    const double inv_cs2 = lat.inv_cs2();
    const double uu = u[0] * u[0] + u[1] * u[1];
    std::array<double, kNumDirections> feq{};
    for (std::size_t i = 0; i < kNumDirections; ++i) {
        const double eu = lat.ex(i) * u[0] + lat.ey(i) * u[1];
        double bracket = 1.0 + eu * inv_cs2;
        if (!linearized) {
            bracket += 0.5 * eu * eu * inv_cs2 * inv_cs2 - 0.5 * uu * inv_cs2;
        }
        feq[i] = lat.weight(i) * rho * bracket;
    }
    return feq;
}

/**
 * Collide (BGK + simple force term) then push-stream with periodic wrap,
 * halfway bounce-back and the moving-wall momentum term.
 */
inline FlowFields classical_step(const FlowFields &in, const CaseConfig &cfg, bool linearized) {
    const auto lat = d2q9();
    const GridSpec &g = in.grid;
    const double omega = 1.0 / cfg.tau;
    const double inv_cs2 = lat.inv_cs2();

    FlowFields out{g, Eigen::VectorXd::Zero(in.df.size())};
    const long nx = static_cast<long>(g.nx);
    const long ny = static_cast<long>(g.ny);

    for (std::size_t y = 0; y < g.ny; ++y) {
        for (std::size_t x = 0; x < g.nx; ++x) {
            std::array<double, kNumDirections> f{};
            double rho = 0.0;
            Vec2 mom{0.0, 0.0};
            for (std::size_t i = 0; i < kNumDirections; ++i) {
                f[i] = in.f(x, y, i);
                rho += f[i];
                mom[0] += lat.ex(i) * f[i];
                mom[1] += lat.ey(i) * f[i];
            }

            std::array<double, kNumDirections> feq{};
            if (cfg.prescribed_velocity()) {
                const Vec2 &u = cfg.adv_velocity;
                const double uu = u[0] * u[0] + u[1] * u[1];
                for (std::size_t i = 0; i < kNumDirections; ++i) {
                    const double eu = lat.ex(i) * u[0] + lat.ey(i) * u[1];
                    double b = 1.0 + 3.0 * eu;
                    if (!linearized) b += 4.5 * eu * eu - 1.5 * uu;
                    feq[i] = lat.weight(i) * rho * b;
                }
            } else if (linearized) {
                // rho u enters linearly, so no division by rho is needed.
                for (std::size_t i = 0; i < kNumDirections; ++i) {
                    feq[i] = lat.weight(i) *
                             (rho + inv_cs2 * (lat.ex(i) * mom[0] + lat.ey(i) * mom[1]));
                }
            } else {
                feq = equilibrium(rho, {mom[0] / rho, mom[1] / rho}, lat, false);
            }

            for (std::size_t i = 0; i < kNumDirections; ++i) {
                const double source = lat.weight(i) * inv_cs2 *
                                      (lat.ex(i) * cfg.body_force[0] + lat.ey(i) * cfg.body_force[1]);
                const double post = f[i] - omega * (f[i] - feq[i]) + source;

                const long tx = static_cast<long>(x) + lat.ex(i);
                const long ty = static_cast<long>(y) + lat.ey(i);
                const EdgeBc *walls[2] = {nullptr, nullptr};
                if (tx < 0) walls[0] = &cfg.bc.left;
                if (tx >= nx) walls[0] = &cfg.bc.right;
                if (ty < 0) walls[1] = &cfg.bc.bottom;
                if (ty >= ny) walls[1] = &cfg.bc.top;

                bool reflected = false;
                double momentum_gain = 0.0;
                for (const EdgeBc *w : walls) {
                    if (w == nullptr || !w->is_wall()) continue;
                    reflected = true;
                    const double eu = lat.ex(i) * w->wall_velocity[0] + lat.ey(i) * w->wall_velocity[1];
                    momentum_gain -= 2.0 * lat.weight(i) * w->wall_density * eu * inv_cs2;
                }
                if (reflected) {
                    out.df(static_cast<Eigen::Index>(flat_index(x, y, lat.opposite(i), g))) +=
                        post + momentum_gain;
                } else {
                    const auto wx = static_cast<std::size_t>((tx + nx) % nx);
                    const auto wy = static_cast<std::size_t>((ty + ny) % ny);
                    out.df(static_cast<Eigen::Index>(flat_index(wx, wy, i, g))) += post;
                }
            }
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Analytic references
// ---------------------------------------------------------------------------

/**
 * isotropic: exponent denominator 2 (sigma0^2 + sigma_D^2), the 2-D
 * diffusing Gaussian matching the amplitude factor.
 * as_printed: denominator 2 sigma0^2 + sigma_D^2.
 */
enum class GaussianForm { isotropic, as_printed };

struct GaussianParams {
    double c0{1.0};
    double sigma0{2.0};
    double diffusion{0.005};
    Vec2 u{0.0, 0.0};
    Vec2 x0{0.0, 0.0};
    /// Periodic lengths; zero disables minimum-image wrapping on that axis.
    Vec2 period{0.0, 0.0};
    GaussianForm form{GaussianForm::isotropic};
};

inline double analytic_gaussian(const Vec2 &x, double t, const GaussianParams &p) {
    if (!(p.sigma0 > 0.0) || p.diffusion < 0.0 || t < 0.0) {
        throw std::invalid_argument("gaussian requires sigma0 > 0, D >= 0, t >= 0");
    }
    double r2 = 0.0;
    for (std::size_t a = 0; a < 2; ++a) {
        double d = x[a] - p.x0[a] - p.u[a] * t;
        if (p.period[a] > 0.0) {
            const double L = p.period[a];
            d -= L * std::round(d / L);
        }
        r2 += d * d;
    }
    const double s02 = p.sigma0 * p.sigma0;
    const double sd2 = 2.0 * p.diffusion * t;
    const double denom = p.form == GaussianForm::isotropic ? 2.0 * (s02 + sd2) : 2.0 * s02 + sd2;
    return s02 / (s02 + sd2) * p.c0 * std::exp(-r2 / denom);
}

struct ChannelParams {
    double g{0.0};
    double mu{1.0};
    double h{1.0};
    double u_w{0.0};
};

/// u_x(y) = (G / 2 mu) y (y - h)
inline double analytic_poiseuille(double y, const ChannelParams &p) {
    if (!(p.h > 0.0)) throw std::invalid_argument("channel height must be positive");
    return p.g / (2.0 * p.mu) * y * (y - p.h);
}

/// u_x(y) = u_w y / h + (G / 2 mu) y (y - h)
inline double analytic_couette(double y, const ChannelParams &p) {
    if (!(p.h > 0.0)) throw std::invalid_argument("channel height must be positive");
    return p.u_w * y / p.h + p.g / (2.0 * p.mu) * y * (y - p.h);
}

/// sqrt(sum (ref - got)^2 / sum ref^2)
inline double l2_relative_error(std::span<const double> ref, std::span<const double> got) {
    if (ref.size() != got.size()) {
        throw std::invalid_argument("L2 error: length mismatch");
    }
    double num = 0.0;
    double den = 0.0;
    for (std::size_t k = 0; k < ref.size(); ++k) {
        num += (ref[k] - got[k]) * (ref[k] - got[k]);
        den += ref[k] * ref[k];
    }
    if (den == 0.0) {
        throw std::invalid_argument("L2 error: zero reference");
    }
    return std::sqrt(num / den);
}

inline double l2_relative_error(const Eigen::VectorXd &ref, const Eigen::VectorXd &got) {
    return l2_relative_error(std::span<const double>(ref.data(), static_cast<std::size_t>(ref.size())),
                             std::span<const double>(got.data(), static_cast<std::size_t>(got.size())));
}

// ---------------------------------------------------------------------------

inline GaussianParams case_gaussian(const CaseConfig &cfg) {
    GaussianParams p;
    p.c0 = cfg.c0;
    p.sigma0 = cfg.sigma0;
    p.diffusion = cfg.nu;
    p.u = cfg.adv_velocity;
    p.x0 = {0.5 * static_cast<double>(cfg.grid.nx), 0.5 * static_cast<double>(cfg.grid.ny)};
    p.period = {static_cast<double>(cfg.grid.nx), static_cast<double>(cfg.grid.ny)};
    return p;
}

/// Node-center coordinate of index j (walls sit at 0 and n).
inline double node_center(std::size_t j) { return static_cast<double>(j) + 0.5; }

/// Initial DFs: Gaussian-hill equilibrium for ade, uniform rest state otherwise.
inline FlowFields initial_fields(const CaseConfig &cfg) {
    const auto lat = d2q9();
    const GridSpec &g = cfg.grid;
    FlowFields ff{g, Eigen::VectorXd::Zero(static_cast<Eigen::Index>(g.n_f()))};
    const auto gp = case_gaussian(cfg);
    for (std::size_t y = 0; y < g.ny; ++y) {
        for (std::size_t x = 0; x < g.nx; ++x) {
            const double c = cfg.id == CaseId::ade
                                 ? analytic_gaussian({node_center(x), node_center(y)}, 0.0, gp)
                                 : 1.0;
            const Vec2 u = cfg.id == CaseId::ade ? cfg.adv_velocity : Vec2{0.0, 0.0};
            const auto feq = equilibrium(c, u, lat, true);
            for (std::size_t i = 0; i < kNumDirections; ++i) {
                ff.df(static_cast<Eigen::Index>(flat_index(x, y, i, g))) = feq[i];
            }
        }
    }
    return ff;
}

} // namespace qlbm
