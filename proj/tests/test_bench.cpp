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

#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "qlbm/bench.hpp"

using namespace qlbm;
using Catch::Matchers::ContainsSubstring;
using Catch::Matchers::WithinAbs;

namespace {

CaseConfig parse(const std::string &text) {
    std::istringstream in(text);
    return parse_config(in);
}

std::string slurp(const std::filesystem::path &p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

std::string first_line(const std::filesystem::path &p) {
    std::ifstream in(p);
    std::string line;
    std::getline(in, line);
    return line;
}

} // namespace

TEST_CASE("gate estimates", "[bench]") {
    const auto small = gate_count_estimate(2);
    CHECK(small.diagonal_per_op == 8);
    CHECK(small.generic_per_op == 6);
    CHECK(small.total == 2 * 8 + 4 * 6);

    const auto g9 = gate_count_estimate(9);
    CHECK(g9.diagonal_per_op == 1024);
    CHECK(g9.generic_per_op == 130816);
    CHECK(g9.total == 2 * 1024 + 4 * 130816);

    for (std::size_t n = 2; n <= 30; ++n) {
        const auto g = gate_count_estimate(n);
        const std::uint64_t p = std::uint64_t{1} << n;
        CHECK(g.total == 2 * p * (p + 1));
    }
    for (std::size_t n = 9; n <= 20; ++n) {
        const double ratio = static_cast<double>(gate_count_estimate(n + 1).total) /
                             static_cast<double>(gate_count_estimate(n).total);
        CHECK(ratio > 3.9);
        CHECK(ratio < 4.1);
    }
    CHECK_THROWS_AS(gate_count_estimate(1), std::invalid_argument);
    CHECK_THROWS_AS(gate_count_estimate(32), std::invalid_argument);
}

TEST_CASE("config parsing", "[bench]") {
    SECTION("poiseuille defaults") {
        const auto c = parse("# channel\ncase = poiseuille\nnx = 3\nny = 8\nsteps = 500\n");
        CHECK(c.id == CaseId::poiseuille);
        CHECK(c.grid.nx == 3);
        CHECK(c.grid.n_qa() == 9);
        CHECK(c.steps == 500);
        CHECK_THAT(c.tau, WithinAbs(0.74, 1e-15));
        CHECK_THAT(c.body_force[0], WithinAbs(0.001, 1e-15));
        CHECK(c.engine == Engine::quantum);
    }
    SECTION("ade with explicit keys") {
        const auto c = parse("case = ade\nnx = 10\nny = 10\nsteps = 100\ndiffusion = 0.005\n"
                             "adv_ux = 0\nadv_uy = 0\nengine = classical-full\n");
        CHECK(c.id == CaseId::ade);
        CHECK_THAT(c.tau, WithinAbs(0.515, 1e-15));
        CHECK(c.adv_velocity == Vec2{0.0, 0.0});
        CHECK(c.engine == Engine::classical_full);
    }
    SECTION("tau override recomputes the force") {
        const auto c = parse("case = poiseuille\nnx = 3\nny = 8\nsteps = 1\ntau = 0.8\n");
        CHECK_THAT(c.nu, WithinAbs(0.1, 1e-15));
        CHECK_THAT(c.body_force[0], WithinAbs(8.0 * 0.1 * 0.1 / 64.0, 1e-15));
    }
    SECTION("errors") {
        CHECK_THROWS_AS(parse("case = poiseuille\nnx = 3\nny = 8\nsteps = 1\nviscosity = 1\n"), ConfigError);
        CHECK_THROWS_AS(parse("case = poiseuille\nnx = 3\nnx = 4\nny = 8\nsteps = 1\n"), ConfigError);
        CHECK_THROWS_AS(parse("case = poiseuille\nnx = 3\nsteps = 1\n"), ConfigError);
        CHECK_THROWS_AS(parse("case = vortex\nnx = 3\nny = 8\nsteps = 1\n"), ConfigError);
        CHECK_THROWS_AS(parse("case = poiseuille\nnx = 3\nny = 8\nsteps = 1\ntau = 0.8\nnu = 0.1\n"), ConfigError);
        CHECK_THROWS_AS(parse("case = poiseuille\nnx = 3\nny = 8\nsteps = 1\ntau = 0.5\n"), ConfigError);
        CHECK_THROWS_AS(parse("case = poiseuille\nnx = 3\nny = 8\nsteps = 1\nsigma0 = 2\n"), ConfigError);
        CHECK_THROWS_AS(parse("case = poiseuille\nnx = x\nny = 8\nsteps = 1\n"), ConfigError);
        CHECK_THROWS_AS(parse("case = poiseuille\nnx = 3\nny = 8\nsteps = 1\nengine = gpu\n"), ConfigError);
        CHECK_THROWS_AS(parse("case poiseuille\n"), ConfigError);
        CHECK_THROWS_AS(load_config("/nonexistent/file.cfg"), ConfigError);
    }
    SECTION("grids beyond the qubit ceiling are rejected with a memory estimate") {
        REQUIRE_THROWS_AS(parse("case = cavity\nnx = 32\nny = 32\nsteps = 1\n"), ConfigError);
        try {
            parse("case = cavity\nnx = 32\nny = 32\nsteps = 1\n");
        } catch (const ConfigError &e) {
            CHECK_THAT(e.what(), ContainsSubstring("GiB"));
            CHECK_THAT(e.what(), ContainsSubstring("n_qa = 15"));
        }
        CHECK_NOTHROW(parse("case = cavity\nnx = 20\nny = 20\nsteps = 1\n"));
    }
}

TEST_CASE("run_case smoke", "[bench]") {
    auto cfg = poiseuille_case(3, 8, 20);
    const auto res = run_case(cfg);
    CHECK(res.report.passed);
    REQUIRE(res.report.max_dev_vs_linear.has_value());
    CHECK(*res.report.max_dev_vs_linear <= 1e-7);
    CHECK(res.report.n_qa == 9);
    CHECK(res.report.gates.generic_per_op == 130816);
    CHECK(res.report.alpha_streaming == 1.0);
    CHECK(res.report.alpha_collision >= 1.0);
    CHECK(res.snapshots.size() == 1);

    cfg.engine = Engine::classical_linear;
    const auto lin = run_case(cfg);
    CHECK_FALSE(lin.report.max_dev_vs_linear.has_value());
    CHECK((lin.final_fields.df - res.final_fields.df).cwiseAbs().maxCoeff() < 1e-9);
}

TEST_CASE("artifacts", "[bench]") {
    const auto root = std::filesystem::temp_directory_path() / "qlbm_test_bench";
    std::filesystem::remove_all(root);

    SECTION("channel artifacts are deterministic") {
        auto cfg = poiseuille_case(3, 8, 10);
        cfg.output_every = 5;
        const auto a = emit_artifacts(run_case(cfg), cfg, root / "a");
        const auto b = emit_artifacts(run_case(cfg), cfg, root / "b");
        REQUIRE(a.size() == 4);
        CHECK(first_line(root / "a" / "fields.csv") == "step,x,y,rho,ux,uy");
        CHECK(first_line(root / "a" / "profile.csv") == "y,ux_quantum,ux_analytic");
        CHECK(first_line(root / "a" / "spy.csv") == "row,col,value");
        for (const char *f : {"fields.csv", "profile.csv", "spy.csv"}) {
            CHECK(slurp(root / "a" / f) == slurp(root / "b" / f));
        }
        const auto j = nlohmann::json::parse(slurp(root / "a" / "report.json"));
        CHECK(j["case"] == "poiseuille");
        CHECK(j["n_qa"] == 9);
        CHECK(j["status"] == "PASS");
        CHECK(j["gates"]["generic_per_op"] == 130816);
        // 2 snapshots x 24 nodes + header
        const auto fields = slurp(root / "a" / "fields.csv");
        CHECK(std::count(fields.begin(), fields.end(), '\n') == 1 + 2 * 24);
    }

    SECTION("cavity and ade profiles") {
        auto cav = cavity_case(5, 5, 3);
        cav.engine = Engine::classical_linear;
        emit_artifacts(run_case(cav), cav, root / "cav");
        CHECK(first_line(root / "cav" / "profile_ux.csv") == "y,ux_classical_linear,ux_classical_full");
        CHECK(first_line(root / "cav" / "profile_uy.csv") == "x,uy_classical_linear,uy_classical_full");

        auto ade = ade_case(6, 6, 0.005, {0.1, 0.1}, 2);
        emit_artifacts(run_case(ade), ade, root / "ade");
        CHECK(first_line(root / "ade" / "profile.csv") == "x,c_quantum,c_analytic");
    }
    std::filesystem::remove_all(root);
}
