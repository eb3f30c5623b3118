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

#include <catch_amalgamated.hpp>

#include <random>

#include "qlbm/operators.hpp"

using namespace qlbm;
using Catch::Matchers::WithinAbs;

namespace {

Eigen::VectorXd rest_state(const GridSpec &g) {
    const auto lat = d2q9();
    Eigen::VectorXd f = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(g.padded_len()));
    for (std::size_t i = 0; i < kNumDirections; ++i) {
        f.segment(static_cast<Eigen::Index>(i * g.n_g()), static_cast<Eigen::Index>(g.n_g()))
            .setConstant(lat.weight(i));
    }
    return f;
}

bool is_permutation_matrix(const Eigen::MatrixXd &m) {
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        int ones = 0;
        for (Eigen::Index c = 0; c < m.cols(); ++c) {
            if (m(r, c) == 1.0) ++ones;
            else if (m(r, c) != 0.0) return false;
        }
        if (ones != 1) return false;
    }
    return (m.colwise().sum().array() == 1.0).all();
}

} // namespace

TEST_CASE("collision kernel entries", "[operators]") {
    const auto lat = d2q9();
    const auto k = collision_kernel(lat, 0.8);
    CHECK_THAT(k.a(0, 0), WithinAbs(11.0 / 36.0, 1e-15));
    CHECK_THAT(k.a(1, 3), WithinAbs(-5.0 / 18.0, 1e-15));

    const auto k1 = collision_kernel(lat, 1.0);
    for (std::size_t i = 0; i < 9; ++i) {
        for (std::size_t j = 0; j < 9; ++j) {
            const int ee = lat.ex(i) * lat.ex(j) + lat.ey(i) * lat.ey(j);
            CHECK_THAT(k1.a(i, j), WithinAbs(lat.weight(i) * (1.0 + 3.0 * ee), 1e-15));
        }
    }

    CHECK_THROWS_AS(collision_kernel(lat, 0.5), std::invalid_argument);
    CHECK_THROWS_AS(collision_kernel(lat, 0.3), std::invalid_argument);
}

TEST_CASE("collision kernel conserves mass and keeps the rest state", "[operators]") {
    const auto lat = d2q9();
    for (double tau : {0.515, 0.74, 0.8, 1.0, 1.22}) {
        const auto k = collision_kernel(lat, tau);
        for (int c = 0; c < 9; ++c) CHECK_THAT(k.a.col(c).sum(), WithinAbs(1.0, 1e-14));
        Eigen::Matrix<double, 9, 1> w;
        for (std::size_t i = 0; i < 9; ++i) w(static_cast<Eigen::Index>(i)) = lat.weight(i);
        CHECK((k.a * w - w).cwiseAbs().maxCoeff() < 1e-15);
    }
    // The advection kernel conserves mass but not momentum.
    const auto ka = advection_diffusion_kernel(lat, 0.515, {0.1, 0.1});
    for (int c = 0; c < 9; ++c) CHECK_THAT(ka.a.col(c).sum(), WithinAbs(1.0, 1e-14));
}

TEST_CASE("collision operator is the kernel lifted over sites", "[operators]") {
    const auto lat = d2q9();
    const auto k = collision_kernel(lat, 0.8);

    SECTION("single site reduces to the kernel plus identity padding") {
        const GridSpec g(1, 1);
        const auto op = build_collision_operator(k, g);
        REQUIRE(op.structure() == Structure::kron_local);
        const auto m = op.dense();
        REQUIRE(m.rows() == 16);
        CHECK(m.topLeftCorner(9, 9) == Eigen::MatrixXd(k.a));
        CHECK(m.bottomRightCorner(7, 7) == Eigen::MatrixXd::Identity(7, 7));
        CHECK(m.topRightCorner(9, 7).isZero());
        CHECK(m.bottomLeftCorner(7, 9).isZero());
    }

    SECTION("3x8 grid: local entries and the exhaustive explicit construction") {
        const GridSpec g(3, 8);
        const auto m = build_collision_operator(k, g).dense();
        CHECK(m(flat_index(2, 1, 0, g), flat_index(2, 1, 4, g)) == k.a(0, 4));
        CHECK(m(flat_index(2, 1, 0, g), flat_index(0, 0, 4, g)) == 0.0);

        Eigen::MatrixXd explicit_m = Eigen::MatrixXd::Identity(256, 256);
        explicit_m.topLeftCorner(216, 216).setZero();
        for (std::size_t r = 0; r < g.n_f(); ++r) {
            for (std::size_t c = 0; c < g.n_f(); ++c) {
                const auto a = coords_of(r, g);
                const auto b = coords_of(c, g);
                if (a.x == b.x && a.y == b.y) explicit_m(r, c) = k.a(a.dir, b.dir);
            }
        }
        CHECK(m == explicit_m);
        for (Eigen::Index c = 0; c < 216; ++c) CHECK_THAT(m.col(c).sum(), WithinAbs(1.0, 1e-14));
    }

    SECTION("rest equilibrium is a fixed point") {
        const GridSpec g(3, 8);
        const auto op = build_collision_operator(k, g);
        const auto f = rest_state(g);
        CHECK((op.apply<double>(f) - f).cwiseAbs().maxCoeff() < 1e-15);
    }

    SECTION("structured apply matches the dense matrix") {
        const GridSpec g(4, 5);
        const auto op = build_collision_operator(k, g);
        std::mt19937 rng(7);
        std::normal_distribution<double> nd;
        Eigen::VectorXd x(static_cast<Eigen::Index>(g.padded_len()));
        for (auto &v : x) v = nd(rng);
        CHECK((op.apply<double>(x) - op.dense() * x).cwiseAbs().maxCoeff() < 1e-13);
        Eigen::VectorXcd z = x.cast<std::complex<double>>() * std::complex<double>(0.3, -1.2);
        Eigen::VectorXcd dz = op.dense().cast<std::complex<double>>() * z;
        CHECK((op.apply<std::complex<double>>(z) - dz).cwiseAbs().maxCoeff() < 1e-13);
    }
}

TEST_CASE("streaming operator", "[operators]") {
    const auto lat = d2q9();

    SECTION("fully periodic 4x4") {
        const GridSpec g(4, 4);
        const auto op = build_streaming_operator(g, BcSpec::fully_periodic(), lat);
        REQUIRE(op.structure() == Structure::permutation);
        const auto m = op.dense();
        CHECK(is_permutation_matrix(m));
        CHECK(m.topLeftCorner(16, 16) == Eigen::MatrixXd::Identity(16, 16));
        CHECK(m(flat_index(0, 0, 2, g), flat_index(3, 0, 2, g)) == 1.0);
        CHECK((m.transpose() * m - Eigen::MatrixXd::Identity(256, 256)).isZero());
    }

    SECTION("channel walls bounce back at the boundary node") {
        const GridSpec g(3, 8);
        const auto op = build_streaming_operator(g, BcSpec::channel(), lat);
        const auto m = op.dense();
        CHECK(is_permutation_matrix(m));
        for (std::size_t x = 0; x < g.nx; ++x) {
            CHECK(m(flat_index(x, 0, 1, g), flat_index(x, 0, 3, g)) == 1.0);
            CHECK(m(flat_index(x, 7, 3, g), flat_index(x, 7, 1, g)) == 1.0);
            CHECK(m(flat_index(x, 0, 5, g), flat_index(x, 0, 8, g)) == 1.0);
        }
        // Interior pull with x wrap: (0,3) along (1,1) comes from (2,2).
        CHECK(m(flat_index(0, 3, 5, g), flat_index(2, 2, 5, g)) == 1.0);
    }

    SECTION("cavity corners bounce every crossing direction") {
        const GridSpec g(5, 5);
        const auto m = build_streaming_operator(g, BcSpec::cavity({0.1, 0.0}), lat).dense();
        CHECK(is_permutation_matrix(m));
        CHECK(m(flat_index(0, 4, 6, g), flat_index(0, 4, 7, g)) == 1.0);
        CHECK(m(flat_index(0, 0, 5, g), flat_index(0, 0, 8, g)) == 1.0);
        CHECK(m(flat_index(4, 4, 8, g), flat_index(4, 4, 5, g)) == 1.0);
        CHECK(m(flat_index(0, 2, 2, g), flat_index(0, 2, 4, g)) == 1.0);
    }

    SECTION("nine periodic shifts on a 9x9 grid return the identity") {
        const GridSpec g(9, 9);
        const auto op = build_streaming_operator(g, BcSpec::fully_periodic(), lat);
        std::vector<std::size_t> idx(g.padded_len());
        for (std::size_t r = 0; r < idx.size(); ++r) idx[r] = r;
        Eigen::VectorXd v = Eigen::VectorXd::LinSpaced(static_cast<Eigen::Index>(g.padded_len()), 0, 1);
        Eigen::VectorXd w = v;
        for (int s = 0; s < 9; ++s) {
            w = op.apply<double>(w);
            if (s < 8) CHECK(w != v);
        }
        CHECK(w == v);
    }

    SECTION("inconsistent periodic pairing is rejected") {
        BcSpec bad = BcSpec::fully_periodic();
        bad.left = EdgeBc::wall();
        CHECK_THROWS_AS(build_streaming_operator(GridSpec(3, 3), bad, lat), std::invalid_argument);
        bad = BcSpec::fully_periodic();
        bad.top = EdgeBc::wall();
        CHECK_THROWS_AS(build_streaming_operator(GridSpec(3, 3), bad, lat), std::invalid_argument);
    }

    SECTION("all benchmark BC sets give orthogonal permutations") {
        const GridSpec g(4, 6);
        for (const auto &bc : {BcSpec::fully_periodic(), BcSpec::channel(),
                               BcSpec::channel({0.1, 0.0}), BcSpec::cavity({0.1, 0.0})}) {
            const auto op = build_streaming_operator(g, bc, lat);
            CHECK(op.orthogonality_defect() == 0.0);
            CHECK(is_permutation_matrix(op.dense()));
            CHECK(op.transpose().apply<double>(op.apply<double>(rest_state(g))) == rest_state(g));
        }
    }
}

TEST_CASE("moving wall correction", "[operators]") {
    const auto lat = d2q9();
    const GridSpec g(3, 8);

    CHECK(moving_wall_correction(g, BcSpec::channel(), lat).values.isZero());
    CHECK(moving_wall_correction(g, BcSpec::fully_periodic(), lat).values.isZero());

    const auto c = moving_wall_correction(g, BcSpec::channel({0.1, 0.0}), lat);
    CHECK(c.kind == CorrectionKind::moving_wall);
    for (std::size_t x = 0; x < g.nx; ++x) {
        CHECK_THAT(c.values(flat_index(x, 7, lat.opposite(5), g)), WithinAbs(-1.0 / 60.0, 1e-15));
        CHECK_THAT(c.values(flat_index(x, 7, lat.opposite(7), g)), WithinAbs(1.0 / 60.0, 1e-15));
        CHECK(c.values(flat_index(x, 7, 3, g)) == 0.0);
    }
    for (std::size_t idx = 0; idx < g.n_f(); ++idx) {
        if (c.values(idx) != 0.0) CHECK(coords_of(idx, g).y == 7);
    }
    // Mass neutral: the gains and losses at each lid node cancel.
    CHECK_THAT(c.values.sum(), WithinAbs(0.0, 1e-15));

    const GridSpec gc(5, 5);
    const auto cav = moving_wall_correction(gc, BcSpec::cavity({0.1, 0.0}), lat);
    CHECK_THAT(cav.values(flat_index(0, 4, 6, gc)), WithinAbs(1.0 / 60.0, 1e-15));
    CHECK_THAT(cav.values(flat_index(4, 4, 8, gc)), WithinAbs(-1.0 / 60.0, 1e-15));
    // Side-wall link at the lid row reflects off a stationary wall.
    CHECK(cav.values(flat_index(0, 4, 2, gc)) == 0.0);
}

TEST_CASE("forcing vector", "[operators]") {
    const auto lat = d2q9();
    const GridSpec g(3, 8);
    CHECK(forcing_vector(g, lat, {0.0, 0.0}).values.isZero());

    const auto s = forcing_vector(g, lat, {0.001, 0.0});
    CHECK(s.kind == CorrectionKind::forcing);
    CHECK_THAT(s.values(flat_index(1, 4, 2, g)), WithinAbs(1.0 / 3000.0, 1e-18));
    for (std::size_t y = 0; y < g.ny; ++y) {
        for (std::size_t x = 0; x < g.nx; ++x) {
            double sum = 0.0;
            for (std::size_t i = 0; i < 9; ++i) sum += s.values(flat_index(x, y, i, g));
            CHECK_THAT(sum, WithinAbs(0.0, 1e-18));
        }
    }
}

TEST_CASE("moment matrices", "[operators]") {
    const auto lat = d2q9();
    const GridSpec g(1, 1);
    const auto m = moment_matrices(g, lat);
    REQUIRE(m.m0.rows() == 1);
    REQUIRE(m.m0.cols() == 9);

    Eigen::VectorXd rest(9);
    for (std::size_t i = 0; i < 9; ++i) rest(i) = lat.weight(i);
    CHECK_THAT((m.m0 * rest)(0), WithinAbs(1.0, 1e-15));
    CHECK_THAT((m.m1x * rest)(0), WithinAbs(0.0, 1e-15));
    CHECK_THAT((m.m1y * rest)(0), WithinAbs(0.0, 1e-15));

    Eigen::VectorXd single = Eigen::VectorXd::Zero(9);
    single(2) = 1.0;
    CHECK((m.m0 * single)(0) == 1.0);
    CHECK((m.m1x * single)(0) == 1.0);
    CHECK((m.m1y * single)(0) == 0.0);

    Eigen::VectorXd eq(9);
    for (std::size_t i = 0; i < 9; ++i) eq(i) = lat.weight(i) * (1.0 + 3.0 * 0.1 * lat.ex(i));
    CHECK_THAT((m.m0 * eq)(0), WithinAbs(1.0, 1e-15));
    CHECK_THAT((m.m1x * eq)(0), WithinAbs(0.1, 1e-15));
}

TEST_CASE("LbOperator rejects malformed inputs", "[operators]") {
    CHECK_THROWS_AS(LbOperator::permutation({0, 0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(LbOperator::permutation({0, 3}), std::invalid_argument);
    CHECK_THROWS_AS(LbOperator::generic(Eigen::MatrixXd::Zero(2, 3)), std::invalid_argument);
    const auto id = LbOperator::identity(4);
    CHECK_THROWS_AS(id.apply<double>(Eigen::VectorXd::Zero(3)), std::invalid_argument);
}
