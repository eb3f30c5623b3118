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
 * D2Q9 lattice constants and direction algebra.
 *
 * Weights and the sound speed are kept as exact rationals so that the
 * isotropy identities can be asserted without rounding; operator builders
 * convert them to double once.
 */
#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace qlbm {

/// Minimal exact rational used for lattice weights.
struct Rational {
    std::int64_t num{0};
    std::int64_t den{1};

    constexpr Rational() = default;
    constexpr Rational(std::int64_t n, std::int64_t d = 1) : num(n), den(d) {
        if (den < 0) {
            num = -num;
            den = -den;
        }
        const auto g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
    }

    [[nodiscard]] constexpr double to_double() const {
        return static_cast<double>(num) / static_cast<double>(den);
    }

    friend constexpr Rational operator+(Rational a, Rational b) {
        return {a.num * b.den + b.num * a.den, a.den * b.den};
    }
    friend constexpr Rational operator*(Rational a, Rational b) {
        return {a.num * b.num, a.den * b.den};
    }
    friend constexpr bool operator==(Rational a, Rational b) {
        return a.num == b.num && a.den == b.den;
    }
};

inline constexpr std::size_t kNumDirections = 9;

using IntVec2 = std::array<int, 2>;

struct LatticeModel {
    std::array<IntVec2, kNumDirections> velocities;
    std::array<Rational, kNumDirections> weights;
    std::array<std::size_t, kNumDirections> opposite_of;
    Rational cs2;

    /// Direction j with velocities[j] == -velocities[i].
    [[nodiscard]] constexpr std::size_t opposite(std::size_t i) const {
        if (i >= kNumDirections) {
            throw std::out_of_range("direction index " + std::to_string(i) +
                                    " outside [0, 9)");
        }
        return opposite_of[i];
    }

    [[nodiscard]] double weight(std::size_t i) const {
        return weights.at(i).to_double();
    }
    [[nodiscard]] int ex(std::size_t i) const { return velocities.at(i)[0]; }
    [[nodiscard]] int ey(std::size_t i) const { return velocities.at(i)[1]; }
    [[nodiscard]] double inv_cs2() const { return 1.0 / cs2.to_double(); }
};

/**
 * D2Q9 in the row order 0 = rest, 1..4 = (0,1),(1,0),(0,-1),(-1,0),
 * 5..8 = (1,1),(1,-1),(-1,1),(-1,-1).
 */
constexpr LatticeModel d2q9() {
    LatticeModel m{};
    m.velocities = {{{0, 0},
                     {0, 1},
                     {1, 0},
                     {0, -1},
                     {-1, 0},
                     {1, 1},
                     {1, -1},
                     {-1, 1},
                     {-1, -1}}};
    const Rational rest{4, 9};
    const Rational axis{1, 9};
    const Rational diag{1, 36};
    m.weights = {rest, axis, axis, axis, axis, diag, diag, diag, diag};
    m.cs2 = Rational{1, 3};
    for (std::size_t i = 0; i < kNumDirections; ++i) {
        for (std::size_t j = 0; j < kNumDirections; ++j) {
            if (m.velocities[j][0] == -m.velocities[i][0] &&
                m.velocities[j][1] == -m.velocities[i][1]) {
                m.opposite_of[i] = j;
            }
        }
    }
    return m;
}

} // namespace qlbm
