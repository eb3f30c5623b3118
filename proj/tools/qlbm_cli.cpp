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

// Command-line front end: run a benchmark case, print gate estimates, or
// dump the streaming/collision sparsity patterns of a configured case.
//
// Exit status: 0 PASS, 1 FAILED (tolerance breach or runtime error),
// 2 configuration error.

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "qlbm/bench.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFailed = 1;
constexpr int kExitConfig = 2;

int cmd_run(const std::string &config_path, const std::string &out_override) {
    const auto cfg = qlbm::load_config(config_path);
    const auto res = qlbm::run_case(cfg);
    const std::filesystem::path out = out_override.empty() ? cfg.out_dir : out_override;
    const auto files = qlbm::emit_artifacts(res, cfg, out);

    const auto &r = res.report;
    std::cout << qlbm::to_string(r.id) << ' ' << r.grid.nx << 'x' << r.grid.ny << " n_qa=" << r.n_qa
              << " steps=" << r.steps << " engine=" << qlbm::to_string(r.engine)
              << " L2=" << r.l2_error;
    if (r.max_dev_vs_linear) std::cout << " dev_vs_linear=" << *r.max_dev_vs_linear;
    std::cout << " -> " << r.status() << '\n';
    for (const auto &f : files) std::cout << "  wrote " << f.string() << '\n';
    return r.passed ? kExitPass : kExitFailed;
}

int cmd_estimate(std::size_t qubits) {
    const auto g = qlbm::gate_count_estimate(qubits);
    nlohmann::json j = {{"n_qa", qubits},
                        {"diagonal_per_op", g.diagonal_per_op},
                        {"generic_per_op", g.generic_per_op},
                        {"total", g.total}};
    std::cout << j.dump(2) << '\n';
    return kExitPass;
}

int cmd_spy(const std::string &config_path, const std::string &out_override) {
    const auto cfg = qlbm::load_config(config_path);
    const auto ops = qlbm::build_case_operators(cfg);
    const std::filesystem::path out = out_override.empty() ? cfg.out_dir : out_override;
    std::filesystem::create_directories(out);
    qlbm::write_sparsity_pattern(ops.streaming, (out / "spy.csv").string());
    qlbm::write_sparsity_pattern(ops.collision, (out / "spy_collision.csv").string());
    std::cout << "wrote " << (out / "spy.csv").string() << " and "
              << (out / "spy_collision.csv").string() << '\n';
    return kExitPass;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Quantum lattice Boltzmann statevector benchmarks"};
    app.require_subcommand(1);

    std::string config;
    std::string out;
    std::size_t qubits = 0;

    auto *run = app.add_subcommand("run", "run a case and write artifacts");
    run->add_option("--config", config, "key-value case file")->required();
    run->add_option("--out", out, "output directory (overrides out_dir)");

    auto *est = app.add_subcommand("estimate-gates", "closed-form gate estimates");
    est->add_option("--qubits", qubits, "total qubits including the ancilla")->required();

    auto *spy = app.add_subcommand("spy", "write operator sparsity patterns");
    spy->add_option("--config", config, "key-value case file")->required();
    spy->add_option("--out", out, "output directory (overrides out_dir)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitPass : kExitConfig;
    }

    try {
        if (*run) return cmd_run(config, out);
        if (*est) return cmd_estimate(qubits);
        if (*spy) return cmd_spy(config, out);
    } catch (const qlbm::ConfigError &e) {
        std::cerr << "config error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const std::invalid_argument &e) {
        std::cerr << "invalid argument: " << e.what() << '\n';
        return kExitConfig;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitFailed;
    }
    return kExitFailed;
}
