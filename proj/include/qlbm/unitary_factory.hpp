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
 * Factorization of LB operators into unitary blocks.
 *
 * A = U diag(sigma) V is normalized by alpha = max(sigma), the normalized
 * diagonal D = sigma / alpha is split as D = (D1 + D2) / 2 with
 * D1,2 = D +- i sqrt(I - D^2), and each factor is dilated over one ancilla
 * qubit: orthogonal factors as diag(W, W), the diagonal as
 * [[D, i sqrt(I - D^2)], [i sqrt(I - D^2), D]].
 */
#pragma once

#include <Eigen/Dense>
#include <Eigen/SVD>

#include <cmath>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>

#include "errors.hpp"
#include "operators.hpp"

namespace qlbm {

inline constexpr double kNormalizationSlack = 1e-12;
inline constexpr double kOrthogonalityTol = 1e-10;

struct UnitaryTriple {
    LbOperator u;
    LbOperator v;
    Eigen::VectorXd sigma;
    double alpha{1.0};
    Eigen::VectorXd d;
    Eigen::VectorXcd d1;
    Eigen::VectorXcd d2;
};

/// Which SVD route to take; dense ignores structure tags.
enum class SvdPath { structured, dense };

/// sqrt(1 - d^2) entrywise, rejecting d > 1 beyond rounding slack.
inline Eigen::VectorXd lcu_complement(const Eigen::VectorXd &d) {
    Eigen::VectorXd s(d.size());
    for (Eigen::Index j = 0; j < d.size(); ++j) {
        if (d(j) > 1.0 + kNormalizationSlack || d(j) < -kNormalizationSlack) {
            throw std::invalid_argument("normalized singular value " + std::to_string(d(j)) +
                                        " outside [0, 1]");
        }
        const double r = 1.0 - d(j) * d(j);
        s(j) = r > 0.0 ? std::sqrt(r) : 0.0;
    }
    return s;
}

inline std::pair<Eigen::VectorXcd, Eigen::VectorXcd> lcu_diagonal(const Eigen::VectorXd &d) {
    const Eigen::VectorXd s = lcu_complement(d);
    const std::complex<double> i{0.0, 1.0};
    Eigen::VectorXcd d1 = d.cast<std::complex<double>>() + i * s.cast<std::complex<double>>();
    Eigen::VectorXcd d2 = d.cast<std::complex<double>>() - i * s.cast<std::complex<double>>();
    return {std::move(d1), std::move(d2)};
}

inline std::pair<Eigen::VectorXcd, Eigen::VectorXcd> lcu_diagonal(const UnitaryTriple &t) {
    return lcu_diagonal(t.d);
}

namespace detail {

inline void require_finite(const Eigen::MatrixXd &m, const char *what) {
    if (!m.allFinite()) {
        throw NumericalError(std::string("SVD produced non-finite ") + what);
    }
}

inline UnitaryTriple finish_triple(LbOperator u, LbOperator v, Eigen::VectorXd sigma) {
    const double alpha = sigma.maxCoeff();
    if (!(alpha > 0.0)) {
        throw NumericalError("operator has no nonzero singular value");
    }
    Eigen::VectorXd d = sigma / alpha;
    auto [d1, d2] = lcu_diagonal(d);
    return {std::move(u), std::move(v), std::move(sigma), alpha,
            std::move(d), std::move(d1), std::move(d2)};
}

inline UnitaryTriple dense_svd(const Eigen::MatrixXd &a) {
    if (!a.allFinite()) {
        throw std::invalid_argument("operator has non-finite entries");
    }
    Eigen::BDCSVD<Eigen::MatrixXd> svd(a, Eigen::ComputeFullU | Eigen::ComputeFullV);
    if (svd.info() != Eigen::Success) {
        throw NumericalError("dense SVD did not converge");
    }
    require_finite(svd.matrixU(), "U");
    require_finite(svd.matrixV(), "V");
    return finish_triple(LbOperator::generic(svd.matrixU()),
                         LbOperator::generic(svd.matrixV().transpose()),
                         svd.singularValues());
}

} // namespace detail

/**
 * SVD of an LB operator. With SvdPath::structured a permutation is returned
 * as (P, 1, I) and a kron_local operator is factored through its kernel and
 * lifted over I_{n_g}; padding contributes unit singular values.
 */
inline UnitaryTriple svd_decompose(const LbOperator &a, SvdPath path = SvdPath::structured) {
    if (path == SvdPath::dense || a.structure() == Structure::generic) {
        return detail::dense_svd(a.dense());
    }
    const auto dim = a.dim();
    if (a.structure() == Structure::permutation) {
        return detail::finish_triple(a, LbOperator::identity(dim),
                                     Eigen::VectorXd::Ones(static_cast<Eigen::Index>(dim)));
    }

    const auto &k = a.kron();
    if (!k.kernel.allFinite()) {
        throw std::invalid_argument("kernel has non-finite entries");
    }
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(k.kernel, Eigen::ComputeFullU | Eigen::ComputeFullV);
    if (svd.info() != Eigen::Success) {
        throw NumericalError("kernel SVD did not converge");
    }
    detail::require_finite(svd.matrixU(), "U");
    detail::require_finite(svd.matrixV(), "V");

    const auto ng = static_cast<Eigen::Index>(k.n_g);
    const auto nk = k.kernel.rows();
    Eigen::VectorXd sigma = Eigen::VectorXd::Ones(static_cast<Eigen::Index>(dim));
    for (Eigen::Index i = 0; i < nk; ++i) {
        sigma.segment(i * ng, ng).setConstant(svd.singularValues()(i));
    }
    return detail::finish_triple(LbOperator::kron_local(svd.matrixU(), k.n_g, dim),
                                 LbOperator::kron_local(svd.matrixV().transpose(), k.n_g, dim),
                                 std::move(sigma));
}

/// Frobenius norm of U diag(sigma) V - A (dense; for verification).
inline double reconstruction_error(const UnitaryTriple &t, const LbOperator &a) {
    const Eigen::MatrixXd rebuilt = t.u.dense() * t.sigma.asDiagonal() * t.v.dense();
    return (rebuilt - a.dense()).norm();
}

/**
 * Unitary on ancilla (x) register: block-diag(W, W) or the diagonal dilation.
 * Amplitude layout is [ancilla=0 block; ancilla=1 block].
 */
class DilatedOperator {
  public:
    struct BlockDiagonal {
        LbOperator w;
    };
    struct DiagonalDilation {
        Eigen::VectorXd d;
        Eigen::VectorXd s;
    };

    static DilatedOperator block_diagonal(LbOperator w) {
        const auto n = w.dim();
        return DilatedOperator(n, BlockDiagonal{std::move(w)});
    }
    static DilatedOperator diagonal(const Eigen::VectorXd &d) {
        const auto n = static_cast<std::size_t>(d.size());
        return DilatedOperator(n, DiagonalDilation{d, lcu_complement(d)});
    }

    /// Register dimension; the dilated operator is twice this.
    [[nodiscard]] std::size_t block_dim() const { return n_; }
    [[nodiscard]] std::size_t dim() const { return 2 * n_; }
    [[nodiscard]] bool is_block_diagonal() const {
        return std::holds_alternative<BlockDiagonal>(rep_);
    }

    [[nodiscard]] Eigen::VectorXcd apply(const Eigen::VectorXcd &amps) const {
        if (static_cast<std::size_t>(amps.size()) != dim()) {
            throw std::invalid_argument("state/operator dimension mismatch");
        }
        const auto n = static_cast<Eigen::Index>(n_);
        Eigen::VectorXcd out(amps.size());
        if (const auto *b = std::get_if<BlockDiagonal>(&rep_)) {
            out.head(n) = b->w.apply<std::complex<double>>(amps.head(n));
            out.tail(n) = b->w.apply<std::complex<double>>(amps.tail(n));
            return out;
        }
        const auto &g = std::get<DiagonalDilation>(rep_);
        const std::complex<double> i{0.0, 1.0};
        for (Eigen::Index j = 0; j < n; ++j) {
            const auto top = amps(j);
            const auto bot = amps(n + j);
            out(j) = g.d(j) * top + i * g.s(j) * bot;
            out(n + j) = i * g.s(j) * top + g.d(j) * bot;
        }
        return out;
    }

    [[nodiscard]] Eigen::MatrixXcd dense() const {
        const auto n = static_cast<Eigen::Index>(n_);
        Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(2 * n, 2 * n);
        if (const auto *b = std::get_if<BlockDiagonal>(&rep_)) {
            const Eigen::MatrixXcd w = b->w.dense().cast<std::complex<double>>();
            m.topLeftCorner(n, n) = w;
            m.bottomRightCorner(n, n) = w;
            return m;
        }
        const auto &g = std::get<DiagonalDilation>(rep_);
        const std::complex<double> i{0.0, 1.0};
        for (Eigen::Index j = 0; j < n; ++j) {
            m(j, j) = g.d(j);
            m(n + j, n + j) = g.d(j);
            m(j, n + j) = i * g.s(j);
            m(n + j, j) = i * g.s(j);
        }
        return m;
    }

    /**
     * max |M^dagger M - I| entry. Exact in structure: the block-diagonal
     * case reduces to W^T W, the diagonal case to d^2 + s^2 per entry (the
     * off-diagonal blocks cancel identically).
     */
    [[nodiscard]] double unitarity_defect() const {
        if (const auto *b = std::get_if<BlockDiagonal>(&rep_)) {
            return b->w.orthogonality_defect();
        }
        const auto &g = std::get<DiagonalDilation>(rep_);
        return (g.d.array().square() + g.s.array().square() - 1.0).abs().maxCoeff();
    }

  private:
    using Rep = std::variant<BlockDiagonal, DiagonalDilation>;
    DilatedOperator(std::size_t n, Rep rep) : n_(n), rep_(std::move(rep)) {}

    std::size_t n_;
    Rep rep_;
};

inline DilatedOperator dilate_orthogonal(const LbOperator &w) {
    const double defect = w.orthogonality_defect();
    if (!(defect <= kOrthogonalityTol)) {
        throw std::invalid_argument("factor is not orthogonal (defect " +
                                    std::to_string(defect) + ")");
    }
    return DilatedOperator::block_diagonal(w);
}

inline DilatedOperator dilate_diagonal(const UnitaryTriple &t) {
    return DilatedOperator::diagonal(t.d);
}

/// The three dilated blocks of one LB operator plus its normalization.
struct DecomposedOperator {
    LbOperator source;
    UnitaryTriple triple;
    DilatedOperator v_dil;
    DilatedOperator d_dil;
    DilatedOperator u_dil;
    double alpha;

    /// U_dil D_dil V_dil amps
    [[nodiscard]] Eigen::VectorXcd apply(const Eigen::VectorXcd &amps) const {
        return u_dil.apply(d_dil.apply(v_dil.apply(amps)));
    }
};

inline DecomposedOperator decompose_operator(const LbOperator &a,
                                             SvdPath path = SvdPath::structured) {
    UnitaryTriple t = svd_decompose(a, path);
    auto v_dil = dilate_orthogonal(t.v);
    auto d_dil = dilate_diagonal(t);
    auto u_dil = dilate_orthogonal(t.u);
    const double alpha = t.alpha;
    return {a, std::move(t), std::move(v_dil), std::move(d_dil), std::move(u_dil), alpha};
}

} // namespace qlbm
