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
 * Exact statevector evolution of one LB time step.
 *
 * Register layout: amps = [ancilla |0> block; ancilla |1> block], each of
 * length padded_len. The step is
 *
 *   encode [df; df] -> V_c D_c U_c -> H on ancilla -> V_s D_s U_s
 *   -> Re(first block) * ||phi|| alpha_c alpha_s / sqrt(2) + corrections.
 *
 * With [df; df] encoding the ancilla Hadamard sends the whole collided state
 * to the first block (the second block is exactly zero), which contributes
 * a factor sqrt(2) that the readout scale removes. The imaginary leakage
 * i U sqrt(I - D^2) V of the collision survives only in the imaginary part
 * of the first block after streaming, so the real part is S C df.
 */
#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <span>
#include <stdexcept>
#include <vector>

#include "grid.hpp"
#include "operators.hpp"
#include "unitary_factory.hpp"

namespace qlbm {

struct QState {
    Eigen::VectorXcd amps;
    /// ||[df; df]|| at encoding time.
    double norm_phi{1.0};
    double alpha_c{1.0};
    double alpha_s{1.0};

    [[nodiscard]] std::size_t block_dim() const {
        return static_cast<std::size_t>(amps.size()) / 2;
    }
    [[nodiscard]] Eigen::VectorXcd top() const { return amps.head(amps.size() / 2); }
    [[nodiscard]] Eigen::VectorXcd bottom() const { return amps.tail(amps.size() / 2); }
};

/// Append-to-self amplitude encoding of a padded DF vector.
inline QState encode(const Eigen::VectorXd &df) {
    if (df.size() == 0) {
        throw std::invalid_argument("cannot encode an empty vector");
    }
    if (!df.allFinite()) {
        throw std::invalid_argument("DF vector has non-finite entries");
    }
    const double norm_df = df.norm();
    if (norm_df == 0.0) {
        throw std::invalid_argument("cannot encode the zero vector");
    }
    const double norm_phi = std::sqrt(2.0) * norm_df;
    QState s;
    s.amps.resize(2 * df.size());
    s.amps.head(df.size()) = df.cast<std::complex<double>>() / norm_phi;
    s.amps.tail(df.size()) = df.cast<std::complex<double>>() / norm_phi;
    s.norm_phi = norm_phi;
    return s;
}

inline QState apply_dilated(QState state, const DilatedOperator &m) {
    state.amps = m.apply(state.amps);
    return state;
}

/// (H (x) I): [top; bottom] -> [top + bottom; top - bottom] / sqrt(2).
inline QState apply_hadamard_ancilla(QState state) {
    const auto n = state.amps.size() / 2;
    const double h = 1.0 / std::sqrt(2.0);
    Eigen::VectorXcd top = state.amps.head(n);
    Eigen::VectorXcd bot = state.amps.tail(n);
    state.amps.head(n) = h * (top + bot);
    state.amps.tail(n) = h * (top - bot);
    return state;
}

/// Real part of the first ancilla block times scale.
inline Eigen::VectorXd readout(const QState &state, double scale) {
    return scale * state.top().real();
}

/// Scale that maps the post-streaming first block back to S C df.
inline double readout_scale(const QState &state) {
    return state.norm_phi * state.alpha_c * state.alpha_s / std::sqrt(2.0);
}

/// Intermediate states of one correct step, for inspection in tests.
struct StepTrace {
    QState encoded;
    QState collided;
    QState mixed;
    QState streamed;
};

inline StepTrace qlb_trace(const Eigen::VectorXd &padded_df, const DecomposedOperator &coll,
                           const DecomposedOperator &strm) {
    StepTrace t;
    t.encoded = encode(padded_df);
    t.encoded.alpha_c = coll.alpha;
    t.encoded.alpha_s = strm.alpha;
    t.collided = apply_dilated(
        apply_dilated(apply_dilated(t.encoded, coll.v_dil), coll.d_dil), coll.u_dil);
    t.mixed = apply_hadamard_ancilla(t.collided);
    t.streamed = apply_dilated(
        apply_dilated(apply_dilated(t.mixed, strm.v_dil), strm.d_dil), strm.u_dil);
    return t;
}

/**
 * One time step through the dilated pipeline. df and the result are
 * n_f-long (unpadded). Forcing corrections are streamed (they enter after
 * collision); moving-wall corrections are added as is.
 */
inline Eigen::VectorXd qlb_step(const Eigen::VectorXd &df, const GridSpec &g,
                                const DecomposedOperator &coll,
                                const DecomposedOperator &strm,
                                std::span<const AffineCorrection> corrections = {}) {
    if (coll.source.dim() != g.padded_len() || strm.source.dim() != g.padded_len()) {
        throw std::invalid_argument("operators were decomposed for a different grid");
    }
    const auto trace = qlb_trace(pad(df, g), coll, strm);
    Eigen::VectorXd out = readout(trace.streamed, readout_scale(trace.streamed));
    for (const auto &c : corrections) {
        if (static_cast<std::size_t>(c.values.size()) != g.n_f()) {
            throw std::invalid_argument("correction length does not match grid");
        }
        if (c.kind == CorrectionKind::forcing) {
            out += strm.source.apply<double>(pad(c.values, g));
        } else {
            out.head(c.values.size()) += c.values;
        }
    }
    return unpad(out, g);
}

/**
 * Pipeline on the zero-padded encoding [df; 0] without the ancilla
 * Hadamard. Returns the first block rescaled by ||df|| alpha_c alpha_s;
 * its real part carries the spurious product of the two LCU complements.
 */
inline Eigen::VectorXcd broken_step_zero_padding(const Eigen::VectorXd &padded_df,
                                                 const DecomposedOperator &coll,
                                                 const DecomposedOperator &strm) {
    const double norm_df = padded_df.norm();
    if (norm_df == 0.0) {
        throw std::invalid_argument("cannot encode the zero vector");
    }
    QState s;
    s.amps = Eigen::VectorXcd::Zero(2 * padded_df.size());
    s.amps.head(padded_df.size()) = padded_df.cast<std::complex<double>>() / norm_df;
    s.amps = strm.apply(coll.apply(s.amps));
    return (norm_df * coll.alpha * strm.alpha) * s.top();
}

/**
 * Pipeline on [df; df] without the ancilla Hadamard. Returns the first
 * block rescaled by ||phi|| alpha_c alpha_s; both its real and imaginary
 * parts are contaminated.
 */
inline Eigen::VectorXcd broken_step_no_hadamard(const Eigen::VectorXd &padded_df,
                                                const DecomposedOperator &coll,
                                                const DecomposedOperator &strm) {
    QState s = encode(padded_df);
    s.amps = strm.apply(coll.apply(s.amps));
    return (s.norm_phi * coll.alpha * strm.alpha) * s.top();
}

/// Multinomial draw of basis-state outcomes from |amps|^2.
inline std::vector<std::uint64_t> sample_counts(const QState &state, std::uint64_t shots,
                                                std::uint64_t seed) {
    if (shots == 0) {
        throw std::invalid_argument("shots must be positive");
    }
    const Eigen::VectorXd probs = state.amps.cwiseAbs2();
    std::discrete_distribution<std::size_t> dist(probs.data(), probs.data() + probs.size());
    std::mt19937_64 rng(seed);
    std::vector<std::uint64_t> counts(static_cast<std::size_t>(probs.size()), 0);
    for (std::uint64_t k = 0; k < shots; ++k) ++counts[dist(rng)];
    return counts;
}

} // namespace qlbm
