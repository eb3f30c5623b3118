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
 * Linear LB operators on the flat DF vector: the site-local collision
 * matrix, the streaming-with-boundaries permutation, the affine forcing and
 * moving-wall corrections, and the moment extraction matrices.
 */
#pragma once

#include <Eigen/Dense>

#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <fstream>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <variant>
#include <vector>

#include "grid.hpp"
#include "lattice.hpp"

namespace qlbm {

using Vec2 = std::array<double, 2>;
using Kernel9 = Eigen::Matrix<double, 9, 9>;

// ---------------------------------------------------------------------------
// Collision kernels
// ---------------------------------------------------------------------------

/// Per-site 9x9 collision matrix; constant over the grid.
struct CollisionKernel {
    Kernel9 a;
    double tau{1.0};
};

namespace detail {
inline void require_tau(double tau) {
    if (!(tau > 0.5) || !std::isfinite(tau)) {
        throw std::invalid_argument("relaxation time must exceed 0.5 (got " +
                                    std::to_string(tau) + ")");
    }
}
} // namespace detail

/**
 * BGK collision with the linearized equilibrium whose velocity is the local
 * momentum: a[i][k] = delta_ik (1 - 1/tau) + (1/tau) w_i (1 + 3 e_i.e_k).
 */
inline CollisionKernel collision_kernel(const LatticeModel &lat, double tau) {
    detail::require_tau(tau);
    const double omega = 1.0 / tau;
    const double inv_cs2 = lat.inv_cs2();
    CollisionKernel k;
    k.tau = tau;
    for (std::size_t i = 0; i < kNumDirections; ++i) {
        for (std::size_t j = 0; j < kNumDirections; ++j) {
            const int eiek = lat.ex(i) * lat.ex(j) + lat.ey(i) * lat.ey(j);
            const double delta = (i == j) ? 1.0 : 0.0;
            k.a(i, j) = delta * (1.0 - omega) +
                        omega * lat.weight(i) * (1.0 + inv_cs2 * eiek);
        }
    }
    return k;
}

/**
 * BGK collision for a passive scalar advected by a prescribed homogeneous
 * velocity: equilibrium w_i C (1 + 3 e_i.u_adv) with C = sum_k f_k.
 * Diffusivity is cs^2 (tau - 1/2).
 */
inline CollisionKernel advection_diffusion_kernel(const LatticeModel &lat, double tau,
                                                  const Vec2 &u_adv) {
    detail::require_tau(tau);
    const double omega = 1.0 / tau;
    const double inv_cs2 = lat.inv_cs2();
    CollisionKernel k;
    k.tau = tau;
    for (std::size_t i = 0; i < kNumDirections; ++i) {
        const double feq_coeff =
            lat.weight(i) * (1.0 + inv_cs2 * (lat.ex(i) * u_adv[0] + lat.ey(i) * u_adv[1]));
        for (std::size_t j = 0; j < kNumDirections; ++j) {
            const double delta = (i == j) ? 1.0 : 0.0;
            k.a(i, j) = delta * (1.0 - omega) + omega * feq_coeff;
        }
    }
    return k;
}

// ---------------------------------------------------------------------------
// Boundary specification
// ---------------------------------------------------------------------------

enum class EdgeKind { periodic, wall };

struct EdgeBc {
    EdgeKind kind{EdgeKind::periodic};
    Vec2 wall_velocity{0.0, 0.0};
    double wall_density{1.0};

    static EdgeBc periodic() { return {}; }
    static EdgeBc wall(Vec2 velocity = {0.0, 0.0}, double density = 1.0) {
        return {EdgeKind::wall, velocity, density};
    }
    [[nodiscard]] bool is_wall() const { return kind == EdgeKind::wall; }
    [[nodiscard]] bool is_moving() const {
        return is_wall() && (wall_velocity[0] != 0.0 || wall_velocity[1] != 0.0);
    }
};

struct BcSpec {
    EdgeBc left;
    EdgeBc right;
    EdgeBc bottom;
    EdgeBc top;

    /// Periodic edges must pair up across an axis.
    void validate() const {
        if (left.is_wall() != right.is_wall()) {
            throw std::invalid_argument(
                "left/right edges must both be periodic or both be walls");
        }
        if (bottom.is_wall() != top.is_wall()) {
            throw std::invalid_argument(
                "bottom/top edges must both be periodic or both be walls");
        }
    }

    [[nodiscard]] bool has_wall() const {
        return left.is_wall() || right.is_wall() || bottom.is_wall() || top.is_wall();
    }
    [[nodiscard]] bool has_moving_wall() const {
        return left.is_moving() || right.is_moving() || bottom.is_moving() ||
               top.is_moving();
    }

    static BcSpec fully_periodic() { return {}; }
    /// Periodic in x, stationary bottom wall, top wall sliding at top_velocity.
    static BcSpec channel(Vec2 top_velocity = {0.0, 0.0}) {
        return {EdgeBc::periodic(), EdgeBc::periodic(), EdgeBc::wall(),
                EdgeBc::wall(top_velocity)};
    }
    /// Closed box with a sliding lid.
    static BcSpec cavity(Vec2 lid_velocity) {
        return {EdgeBc::wall(), EdgeBc::wall(), EdgeBc::wall(), EdgeBc::wall(lid_velocity)};
    }
};

/// Where the population arriving at (x, y) along direction i comes from.
struct PullSource {
    std::size_t x;
    std::size_t y;
    std::size_t dir;
    bool bounced{false};
    /// Moving-wall momentum term added to the arriving population.
    double wall_term{0.0};
};

/**
 * Pull rule shared by the streaming matrix and the moving-wall correction:
 * take x - e_i with periodic wrap; if any crossed edge is a wall, bounce the
 * opposite population back at the node itself (halfway bounce-back).
 */
inline PullSource pull_source(std::size_t x, std::size_t y, std::size_t i,
                              const GridSpec &g, const BcSpec &bc,
                              const LatticeModel &lat) {
    const long px = static_cast<long>(x) - lat.ex(i);
    const long py = static_cast<long>(y) - lat.ey(i);
    const long nx = static_cast<long>(g.nx);
    const long ny = static_cast<long>(g.ny);

    std::array<const EdgeBc *, 2> crossed{nullptr, nullptr};
    if (px < 0) crossed[0] = &bc.left;
    if (px >= nx) crossed[0] = &bc.right;
    if (py < 0) crossed[1] = &bc.bottom;
    if (py >= ny) crossed[1] = &bc.top;

    bool hits_wall = false;
    for (const auto *edge : crossed) {
        hits_wall = hits_wall || (edge != nullptr && edge->is_wall());
    }
    if (!hits_wall) {
        return {static_cast<std::size_t>((px + nx) % nx),
                static_cast<std::size_t>((py + ny) % ny), i};
    }

    const std::size_t out = lat.opposite(i);
    double term = 0.0;
    for (const auto *edge : crossed) {
        if (edge != nullptr && edge->is_wall()) {
            const double eu = lat.ex(out) * edge->wall_velocity[0] +
                              lat.ey(out) * edge->wall_velocity[1];
            term += -2.0 * lat.weight(out) * edge->wall_density * eu * lat.inv_cs2();
        }
    }
    return {x, y, out, true, term};
}

// ---------------------------------------------------------------------------
// Structured operator
// ---------------------------------------------------------------------------

enum class Structure { generic, kron_local, permutation };

/**
 * Real square operator of dimension padded_len with a structural tag.
 *
 * kron_local stores the 9x9 kernel and acts as kernel (x) I_{n_g} on the
 * first n_f entries; permutation stores, per row, the source column.
 * Both act as identity on the padding tail. dense() materializes any form.
 */
class LbOperator {
  public:
    struct Generic {
        Eigen::MatrixXd m;
    };
    struct KronLocal {
        Eigen::MatrixXd kernel;
        std::size_t n_g;
    };
    struct Permutation {
        std::vector<std::size_t> source;
    };

    static LbOperator generic(Eigen::MatrixXd m) {
        if (m.rows() != m.cols()) {
            throw std::invalid_argument("operator matrix must be square");
        }
        const auto dim = static_cast<std::size_t>(m.rows());
        return LbOperator(dim, Generic{std::move(m)});
    }

    static LbOperator kron_local(Eigen::MatrixXd kernel, std::size_t n_g, std::size_t dim) {
        if (kernel.rows() != kernel.cols()) {
            throw std::invalid_argument("kernel must be square");
        }
        if (static_cast<std::size_t>(kernel.rows()) * n_g > dim) {
            throw std::invalid_argument("kernel (x) I does not fit in operator dimension");
        }
        return LbOperator(dim, KronLocal{std::move(kernel), n_g});
    }

    static LbOperator permutation(std::vector<std::size_t> source) {
        std::vector<bool> seen(source.size(), false);
        for (auto s : source) {
            if (s >= source.size() || seen[s]) {
                throw std::invalid_argument("index map is not a permutation");
            }
            seen[s] = true;
        }
        const auto dim = source.size();
        return LbOperator(dim, Permutation{std::move(source)});
    }

    static LbOperator identity(std::size_t dim) {
        std::vector<std::size_t> id(dim);
        for (std::size_t i = 0; i < dim; ++i) id[i] = i;
        return permutation(std::move(id));
    }

    [[nodiscard]] std::size_t dim() const { return dim_; }

    [[nodiscard]] Structure structure() const {
        if (std::holds_alternative<KronLocal>(rep_)) return Structure::kron_local;
        if (std::holds_alternative<Permutation>(rep_)) return Structure::permutation;
        return Structure::generic;
    }

    [[nodiscard]] const KronLocal &kron() const { return std::get<KronLocal>(rep_); }
    [[nodiscard]] const Permutation &perm() const { return std::get<Permutation>(rep_); }
    [[nodiscard]] const Generic &gen() const { return std::get<Generic>(rep_); }

    [[nodiscard]] Eigen::MatrixXd dense() const {
        const auto n = static_cast<Eigen::Index>(dim_);
        if (const auto *g = std::get_if<Generic>(&rep_)) return g->m;
        Eigen::MatrixXd out = Eigen::MatrixXd::Zero(n, n);
        if (const auto *p = std::get_if<Permutation>(&rep_)) {
            for (Eigen::Index r = 0; r < n; ++r) out(r, static_cast<Eigen::Index>(p->source[r])) = 1.0;
            return out;
        }
        const auto &k = std::get<KronLocal>(rep_);
        const auto ng = static_cast<Eigen::Index>(k.n_g);
        const auto nk = k.kernel.rows();
        for (Eigen::Index i = 0; i < nk; ++i) {
            for (Eigen::Index j = 0; j < nk; ++j) {
                for (Eigen::Index s = 0; s < ng; ++s) out(i * ng + s, j * ng + s) = k.kernel(i, j);
            }
        }
        for (Eigen::Index r = nk * ng; r < n; ++r) out(r, r) = 1.0;
        return out;
    }

    /// y = A x for real or complex x, using the structured form.
    template <class Scalar>
    [[nodiscard]] Eigen::Matrix<Scalar, Eigen::Dynamic, 1>
    apply(const Eigen::Matrix<Scalar, Eigen::Dynamic, 1> &x) const {
        using Vec = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
        if (static_cast<std::size_t>(x.size()) != dim_) {
            throw std::invalid_argument("operator/vector dimension mismatch");
        }
        if (const auto *p = std::get_if<Permutation>(&rep_)) {
            Vec y(x.size());
            for (Eigen::Index r = 0; r < x.size(); ++r) y(r) = x(static_cast<Eigen::Index>(p->source[r]));
            return y;
        }
        if (const auto *k = std::get_if<KronLocal>(&rep_)) {
            const auto ng = static_cast<Eigen::Index>(k->n_g);
            const auto nk = k->kernel.rows();
            Vec y = x;
            using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
            Eigen::Map<const Mat> in(x.data(), ng, nk);
            Eigen::Map<Mat> out(y.data(), ng, nk);
            out.noalias() = in * k->kernel.transpose().template cast<Scalar>();
            return y;
        }
        const auto &m = std::get<Generic>(rep_).m;
        if constexpr (std::is_same_v<Scalar, double>) {
            return m * x;
        } else {
            Eigen::VectorXd re = m * x.real();
            Eigen::VectorXd im = m * x.imag();
            Vec y(x.size());
            y.real() = re;
            y.imag() = im;
            return y;
        }
    }

    [[nodiscard]] LbOperator transpose() const {
        if (const auto *p = std::get_if<Permutation>(&rep_)) {
            std::vector<std::size_t> inv(p->source.size());
            for (std::size_t r = 0; r < inv.size(); ++r) inv[p->source[r]] = r;
            return permutation(std::move(inv));
        }
        if (const auto *k = std::get_if<KronLocal>(&rep_)) {
            return kron_local(k->kernel.transpose(), k->n_g, dim_);
        }
        return generic(std::get<Generic>(rep_).m.transpose());
    }

    /// max |A^T A - I| entry, evaluated on the smallest faithful block.
    [[nodiscard]] double orthogonality_defect() const {
        if (std::holds_alternative<Permutation>(rep_)) return 0.0;
        const Eigen::MatrixXd &m = std::holds_alternative<KronLocal>(rep_)
                                       ? std::get<KronLocal>(rep_).kernel
                                       : std::get<Generic>(rep_).m;
        return (m.transpose() * m - Eigen::MatrixXd::Identity(m.rows(), m.cols()))
            .cwiseAbs()
            .maxCoeff();
    }

    struct Entry {
        std::size_t row;
        std::size_t col;
        double value;
    };

    /// Nonzero entries in row-major order.
    [[nodiscard]] std::vector<Entry> nonzeros() const {
        std::vector<Entry> out;
        if (const auto *p = std::get_if<Permutation>(&rep_)) {
            out.reserve(dim_);
            for (std::size_t r = 0; r < dim_; ++r) out.push_back({r, p->source[r], 1.0});
            return out;
        }
        const Eigen::MatrixXd m = dense();
        for (Eigen::Index r = 0; r < m.rows(); ++r) {
            for (Eigen::Index c = 0; c < m.cols(); ++c) {
                if (m(r, c) != 0.0) {
                    out.push_back({static_cast<std::size_t>(r), static_cast<std::size_t>(c), m(r, c)});
                }
            }
        }
        return out;
    }

  private:
    using Rep = std::variant<Generic, KronLocal, Permutation>;
    LbOperator(std::size_t dim, Rep rep) : dim_(dim), rep_(std::move(rep)) {}

    std::size_t dim_;
    Rep rep_;
};

inline LbOperator build_collision_operator(const CollisionKernel &k, const GridSpec &g) {
    return LbOperator::kron_local(k.a, g.n_g(), g.padded_len());
}

/// Streaming with periodic wrap and halfway bounce-back as one permutation.
inline LbOperator build_streaming_operator(const GridSpec &g, const BcSpec &bc,
                                           const LatticeModel &lat) {
    bc.validate();
    std::vector<std::size_t> source(g.padded_len());
    for (std::size_t r = g.n_f(); r < source.size(); ++r) source[r] = r;
    for (std::size_t i = 0; i < kNumDirections; ++i) {
        for (std::size_t y = 0; y < g.ny; ++y) {
            for (std::size_t x = 0; x < g.nx; ++x) {
                const auto src = pull_source(x, y, i, g, bc, lat);
                source[flat_index(x, y, i, g)] = flat_index(src.x, src.y, src.dir, g);
            }
        }
    }
    return LbOperator::permutation(std::move(source));
}

// ---------------------------------------------------------------------------
// Affine corrections
// ---------------------------------------------------------------------------

enum class CorrectionKind { forcing, moving_wall };

/// Length-n_f vector added once per step outside the linear pipeline.
struct AffineCorrection {
    Eigen::VectorXd values;
    CorrectionKind kind{CorrectionKind::forcing};
};

/// Moving-wall momentum terms at the arriving (bounced) populations.
inline AffineCorrection moving_wall_correction(const GridSpec &g, const BcSpec &bc,
                                               const LatticeModel &lat) {
    bc.validate();
    AffineCorrection c{Eigen::VectorXd::Zero(static_cast<Eigen::Index>(g.n_f())),
                       CorrectionKind::moving_wall};
    for (std::size_t i = 0; i < kNumDirections; ++i) {
        for (std::size_t y = 0; y < g.ny; ++y) {
            for (std::size_t x = 0; x < g.nx; ++x) {
                const auto src = pull_source(x, y, i, g, bc, lat);
                if (src.bounced) {
                    c.values(static_cast<Eigen::Index>(flat_index(x, y, i, g))) = src.wall_term;
                }
            }
        }
    }
    return c;
}

/// S_i = w_i e_i.F_b / cs^2 at every node (added after collision).
inline AffineCorrection forcing_vector(const GridSpec &g, const LatticeModel &lat,
                                       const Vec2 &body_force) {
    AffineCorrection c{Eigen::VectorXd::Zero(static_cast<Eigen::Index>(g.n_f())),
                       CorrectionKind::forcing};
    for (std::size_t i = 0; i < kNumDirections; ++i) {
        const double s = lat.weight(i) * lat.inv_cs2() *
                         (lat.ex(i) * body_force[0] + lat.ey(i) * body_force[1]);
        c.values.segment(static_cast<Eigen::Index>(i * g.n_g()),
                         static_cast<Eigen::Index>(g.n_g()))
            .setConstant(s);
    }
    return c;
}

// ---------------------------------------------------------------------------
// Moments
// ---------------------------------------------------------------------------

/// M0 df = rho, M1x df = rho u_x, M1y df = rho u_y (each n_g x n_f).
struct MomentMatrices {
    Eigen::MatrixXd m0;
    Eigen::MatrixXd m1x;
    Eigen::MatrixXd m1y;
};

inline MomentMatrices moment_matrices(const GridSpec &g, const LatticeModel &lat) {
    const auto ng = static_cast<Eigen::Index>(g.n_g());
    const auto nf = static_cast<Eigen::Index>(g.n_f());
    MomentMatrices m{Eigen::MatrixXd::Zero(ng, nf), Eigen::MatrixXd::Zero(ng, nf),
                     Eigen::MatrixXd::Zero(ng, nf)};
    const Eigen::MatrixXd eye = Eigen::MatrixXd::Identity(ng, ng);
    for (std::size_t i = 0; i < kNumDirections; ++i) {
        const auto col = static_cast<Eigen::Index>(i) * ng;
        m.m0.block(0, col, ng, ng) = eye;
        m.m1x.block(0, col, ng, ng) = lat.ex(i) * eye;
        m.m1y.block(0, col, ng, ng) = lat.ey(i) * eye;
    }
    return m;
}

/// Writes "row,col,value" lines (with header) for spy plots.
inline void write_sparsity_pattern(const LbOperator &op, const std::string &path) {
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("cannot open '" + path + "' for writing");
    }
    out << "row,col,value\n";
    for (const auto &e : op.nonzeros()) {
        out << e.row << ',' << e.col << ',' << e.value << '\n';
    }
    if (!out) {
        throw std::runtime_error("write to '" + path + "' failed");
    }
}

} // namespace qlbm
