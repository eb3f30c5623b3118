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
 * Flat DF-vector indexing (direction-major blocks) and power-of-two padding.
 */
#pragma once

#include <Eigen/Dense>

#include <bit>
#include <cstddef>
#include <stdexcept>
#include <string>

#include "errors.hpp"
#include "lattice.hpp"

namespace qlbm {

struct GridCoords {
    std::size_t x;
    std::size_t y;
    std::size_t dir;

    friend bool operator==(const GridCoords &, const GridCoords &) = default;
};

/**
 * Rectangular nx-by-ny node grid carrying 9 populations per node.
 *
 * The DF vector stores direction blocks of nx*ny entries back to back and
 * is zero-padded up to 2^n_q entries.
 */
struct GridSpec {
    std::size_t nx{1};
    std::size_t ny{1};

    GridSpec() = default;
    GridSpec(std::size_t nx_, std::size_t ny_) : nx(nx_), ny(ny_) {
        if (nx == 0 || ny == 0) {
            throw std::invalid_argument("grid dimensions must be positive");
        }
    }

    [[nodiscard]] std::size_t n_g() const { return nx * ny; }
    [[nodiscard]] std::size_t n_f() const { return kNumDirections * n_g(); }
    [[nodiscard]] std::size_t n_q() const {
        return static_cast<std::size_t>(std::bit_width(n_f() - 1));
    }
    /// Qubits including the single LCU ancilla.
    [[nodiscard]] std::size_t n_qa() const { return n_q() + 1; }
    [[nodiscard]] std::size_t padded_len() const { return std::size_t{1} << n_q(); }

    friend bool operator==(const GridSpec &, const GridSpec &) = default;
};

/// x + y*nx + dir*nx*ny
inline std::size_t flat_index(std::size_t x, std::size_t y, std::size_t dir,
                              const GridSpec &g) {
    if (x >= g.nx || y >= g.ny || dir >= kNumDirections) {
        throw std::out_of_range("grid coordinate (" + std::to_string(x) + ", " +
                                std::to_string(y) + ", " + std::to_string(dir) +
                                ") outside the lattice");
    }
    return x + y * g.nx + dir * g.n_g();
}

inline GridCoords coords_of(std::size_t idx, const GridSpec &g) {
    if (idx >= g.padded_len()) {
        throw std::out_of_range("index " + std::to_string(idx) +
                                " beyond padded length");
    }
    if (idx >= g.n_f()) {
        throw PaddingIndexError("index " + std::to_string(idx) +
                                " lies in the zero-padding region");
    }
    const std::size_t dir = idx / g.n_g();
    const std::size_t site = idx % g.n_g();
    return {site % g.nx, site / g.nx, dir};
}

/// Copy an n_f-long DF vector into a zeroed padded_len vector.
inline Eigen::VectorXd pad(const Eigen::VectorXd &df, const GridSpec &g) {
    if (static_cast<std::size_t>(df.size()) != g.n_f()) {
        throw std::invalid_argument("DF vector length does not match grid");
    }
    Eigen::VectorXd out = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(g.padded_len()));
    out.head(df.size()) = df;
    return out;
}

inline Eigen::VectorXd unpad(const Eigen::VectorXd &padded, const GridSpec &g) {
    if (static_cast<std::size_t>(padded.size()) != g.padded_len()) {
        throw std::invalid_argument("padded vector length does not match grid");
    }
    return padded.head(static_cast<Eigen::Index>(g.n_f()));
}

} // namespace qlbm
