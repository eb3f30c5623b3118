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
 * Benchmark runner: strict key-value configs, case execution on the
 * quantum or classical engines, closed-form gate estimates and CSV/JSON
 * artifacts.
 */
#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <istream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "errors.hpp"
#include "grid.hpp"
#include "lattice.hpp"
#include "operators.hpp"
#include "oracle.hpp"
#include "qstate.hpp"
#include "unitary_factory.hpp"

namespace qlbm {

inline constexpr std::size_t kMaxQubits = 13;

// ---------------------------------------------------------------------------
// Gate estimates
// ---------------------------------------------------------------------------

struct GateEstimate {
    std::uint64_t diagonal_per_op;
    std::uint64_t generic_per_op;
    std::uint64_t total;
};

/**
 * Diagonal operator: 2^(n+1). Generic unitary: 2^(n-1) (2^n - 1).
 * Per step: two diagonals and four generic unitaries.
 */
inline GateEstimate gate_count_estimate(std::size_t n_qa) {
    if (n_qa < 2 || n_qa > 31) {
        throw std::invalid_argument("gate estimate needs 2 <= n_qa <= 31");
    }
    const std::uint64_t one = 1;
    const std::uint64_t diagonal = one << (n_qa + 1);
    const std::uint64_t generic = (one << (n_qa - 1)) * ((one << n_qa) - 1);
    return {diagonal, generic, 2 * diagonal + 4 * generic};
}

// ---------------------------------------------------------------------------
// Config
// ---------------------------------------------------------------------------

namespace detail {

inline std::string trim(const std::string &s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

inline double parse_double(const std::string &key, const std::string &v) {
    try {
        std::size_t used = 0;
        const double d = std::stod(v, &used);
        if (used != v.size() || !std::isfinite(d)) throw std::invalid_argument(v);
        return d;
    } catch (const std::exception &) {
        throw ConfigError("key '" + key + "': expected a number, got '" + v + "'");
    }
}

inline std::uint64_t parse_uint(const std::string &key, const std::string &v) {
    try {
        std::size_t used = 0;
        if (!v.empty() && v[0] == '-') throw std::invalid_argument(v);
        const auto n = std::stoull(v, &used);
        if (used != v.size()) throw std::invalid_argument(v);
        return n;
    } catch (const std::exception &) {
        throw ConfigError("key '" + key + "': expected a non-negative integer, got '" + v + "'");
    }
}

inline std::string memory_message(const GridSpec &g) {
    const double dim = static_cast<double>(g.padded_len());
    const double dense_gib = dim * dim * 8.0 / (1024.0 * 1024.0 * 1024.0);
    std::ostringstream os;
    os << "grid " << g.nx << "x" << g.ny << " needs n_qa = " << g.n_qa()
       << " qubits (ceiling " << kMaxQubits << "); one dense " << g.padded_len() << "x"
       << g.padded_len() << " operator alone is " << dense_gib
       << " GiB and the state-vector simulation needs six of them";
    return os.str();
}

} // namespace detail

/**
 * Parses "key = value" lines ('#' starts a comment). Required keys: case,
 * nx, ny, steps. Unknown or repeated keys are errors.
 */
inline CaseConfig parse_config(std::istream &in) {
    static const std::vector<std::string> known = {
        "case", "nx",   "ny",     "steps", "tau",  "nu",  "diffusion", "fb_x",
        "fb_y", "uw",   "engine", "out_dir", "seed", "shots", "adv_ux", "adv_uy",
        "c0",   "sigma0", "re",   "umax",  "tolerance", "output_every"};

    std::map<std::string, std::string> kv;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        line = detail::trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw ConfigError("line " + std::to_string(lineno) + ": expected 'key = value'");
        }
        const auto key = detail::trim(line.substr(0, eq));
        const auto value = detail::trim(line.substr(eq + 1));
        if (std::find(known.begin(), known.end(), key) == known.end()) {
            throw ConfigError("line " + std::to_string(lineno) + ": unknown key '" + key + "'");
        }
        if (!kv.emplace(key, value).second) {
            throw ConfigError("line " + std::to_string(lineno) + ": duplicate key '" + key + "'");
        }
    }
    for (const char *req : {"case", "nx", "ny", "steps"}) {
        if (!kv.count(req)) throw ConfigError(std::string("missing required key '") + req + "'");
    }

    auto num = [&](const std::string &k) { return detail::parse_double(k, kv.at(k)); };
    auto uint = [&](const std::string &k) { return detail::parse_uint(k, kv.at(k)); };

    const auto nx = uint("nx");
    const auto ny = uint("ny");
    const auto steps = uint("steps");
    if (nx == 0 || ny == 0) throw ConfigError("nx and ny must be positive");
    if (steps == 0) throw ConfigError("steps must be positive");

    const double re = kv.count("re") ? num("re") : 10.0;
    const double umax = kv.count("umax") ? num("umax") : 0.1;
    const double uw = kv.count("uw") ? num("uw") : 0.1;
    if (!(re > 0.0)) throw ConfigError("re must be positive");

    const std::string &name = kv.at("case");
    CaseConfig cfg;
    if (name == "ade") {
        const Vec2 u{kv.count("adv_ux") ? num("adv_ux") : 0.1,
                     kv.count("adv_uy") ? num("adv_uy") : 0.1};
        const double diffusion = kv.count("diffusion") ? num("diffusion") : 0.005;
        cfg = ade_case(nx, ny, diffusion, u, steps);
        if (kv.count("nu")) throw ConfigError("ade takes 'diffusion', not 'nu'");
    } else if (name == "poiseuille") {
        cfg = poiseuille_case(nx, ny, steps, re, umax);
    } else if (name == "couette") {
        cfg = couette_case(nx, ny, steps, uw, true, re, umax);
    } else if (name == "cavity") {
        cfg = cavity_case(nx, ny, steps, uw, re);
    } else {
        throw ConfigError("unknown case '" + name + "' (ade, poiseuille, couette, cavity)");
    }
    if (name != "ade") {
        for (const char *k : {"adv_ux", "adv_uy", "c0", "sigma0", "diffusion"}) {
            if (kv.count(k)) throw ConfigError(std::string("key '") + k + "' only applies to ade");
        }
    }

    const int given = static_cast<int>(kv.count("tau")) + static_cast<int>(kv.count("nu")) +
                      static_cast<int>(kv.count("diffusion"));
    if (given > 1) throw ConfigError("give at most one of tau / nu / diffusion");
    if (kv.count("nu")) {
        cfg.nu = num("nu");
        cfg.tau = tau_from_viscosity(cfg.nu);
        if (cfg.id == CaseId::poiseuille || cfg.id == CaseId::couette) {
            cfg.body_force = {poiseuille_force(cfg.nu, umax, cfg.height()), 0.0};
        }
    }
    if (kv.count("tau")) {
        cfg.tau = num("tau");
        cfg.nu = (cfg.tau - 0.5) / 3.0;
        if (cfg.id == CaseId::poiseuille || cfg.id == CaseId::couette) {
            cfg.body_force = {poiseuille_force(cfg.nu, umax, cfg.height()), 0.0};
        }
    }
    if (!(cfg.tau > 0.5)) throw ConfigError("relaxation time must exceed 0.5");

    if (kv.count("fb_x")) cfg.body_force[0] = num("fb_x");
    if (kv.count("fb_y")) cfg.body_force[1] = num("fb_y");
    if (kv.count("c0")) cfg.c0 = num("c0");
    if (kv.count("sigma0")) {
        cfg.sigma0 = num("sigma0");
        if (!(cfg.sigma0 > 0.0)) throw ConfigError("sigma0 must be positive");
    }
    if (kv.count("engine")) {
        const auto &e = kv.at("engine");
        if (e == "quantum") cfg.engine = Engine::quantum;
        else if (e == "classical-linear") cfg.engine = Engine::classical_linear;
        else if (e == "classical-full") cfg.engine = Engine::classical_full;
        else throw ConfigError("unknown engine '" + e + "'");
    }
    if (kv.count("out_dir")) cfg.out_dir = kv.at("out_dir");
    if (kv.count("seed")) cfg.seed = uint("seed");
    if (kv.count("shots")) cfg.shots = uint("shots");
    if (kv.count("tolerance")) cfg.tolerance = num("tolerance");
    if (kv.count("output_every")) cfg.output_every = uint("output_every");

    if (cfg.grid.n_qa() > kMaxQubits) {
        throw ConfigError(detail::memory_message(cfg.grid));
    }
    return cfg;
}

inline CaseConfig load_config(const std::string &path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config '" + path + "'");
    try {
        return parse_config(in);
    } catch (const ConfigError &e) {
        throw ConfigError(path + ": " + e.what());
    }
}

// ---------------------------------------------------------------------------
// Running a case
// ---------------------------------------------------------------------------

struct RunReport {
    CaseId id{CaseId::poiseuille};
    GridSpec grid;
    std::size_t n_q{0};
    std::size_t n_qa{0};
    std::size_t steps{0};
    Engine engine{Engine::quantum};
    double l2_error{0.0};
    /// Relative max-norm gap quantum vs classical-linear over the run.
    std::optional<double> max_dev_vs_linear;
    double alpha_collision{1.0};
    double alpha_streaming{1.0};
    double wall_clock_per_step{0.0};
    GateEstimate gates{};
    double tolerance{1e-7};
    bool passed{true};

    [[nodiscard]] const char *status() const { return passed ? "PASS" : "FAILED"; }
};

struct RunResult {
    RunReport report;
    FlowFields final_fields;
    /// Snapshots (step, fields) at each output step, final step included.
    std::vector<std::pair<std::size_t, FlowFields>> snapshots;
    /// Cavity only: classical full-equilibrium run used as reference.
    std::optional<FlowFields> reference_fields;
    LbOperator streaming;
};

/// Relative max-norm distance max|a - b| / max|b|.
inline double relative_max_deviation(const Eigen::VectorXd &a, const Eigen::VectorXd &b) {
    const double scale = b.cwiseAbs().maxCoeff();
    const double diff = (a - b).cwiseAbs().maxCoeff();
    return scale > 0.0 ? diff / scale : diff;
}

/// Everything the steppers need, built once per case.
struct CaseOperators {
    LbOperator collision;
    LbOperator streaming;
    std::vector<AffineCorrection> corrections;
};

inline CaseOperators build_case_operators(const CaseConfig &cfg) {
    const auto lat = d2q9();
    CaseOperators ops{build_collision_operator(case_kernel(cfg, lat), cfg.grid),
                      build_streaming_operator(cfg.grid, cfg.bc, lat),
                      {}};
    if (cfg.body_force[0] != 0.0 || cfg.body_force[1] != 0.0) {
        ops.corrections.push_back(forcing_vector(cfg.grid, lat, cfg.body_force));
    }
    if (cfg.bc.has_moving_wall()) {
        ops.corrections.push_back(moving_wall_correction(cfg.grid, cfg.bc, lat));
    }
    return ops;
}

namespace detail {

inline FlowFields run_classical(const CaseConfig &cfg, bool linearized) {
    FlowFields f = initial_fields(cfg);
    for (std::size_t t = 0; t < cfg.steps; ++t) f = classical_step(f, cfg, linearized);
    return f;
}

inline std::size_t center_index(std::size_t n) { return n / 2; }

/// Column x average over the central column(s).
inline Eigen::VectorXd vertical_centerline(const Eigen::VectorXd &field, const GridSpec &g) {
    Eigen::VectorXd out(static_cast<Eigen::Index>(g.ny));
    for (std::size_t y = 0; y < g.ny; ++y) {
        const auto at = [&](std::size_t x) { return field(static_cast<Eigen::Index>(x + y * g.nx)); };
        out(static_cast<Eigen::Index>(y)) =
            g.nx % 2 == 1 ? at(g.nx / 2) : 0.5 * (at(g.nx / 2 - 1) + at(g.nx / 2));
    }
    return out;
}

inline Eigen::VectorXd horizontal_centerline(const Eigen::VectorXd &field, const GridSpec &g) {
    Eigen::VectorXd out(static_cast<Eigen::Index>(g.nx));
    for (std::size_t x = 0; x < g.nx; ++x) {
        const auto at = [&](std::size_t y) { return field(static_cast<Eigen::Index>(x + y * g.nx)); };
        out(static_cast<Eigen::Index>(x)) =
            g.ny % 2 == 1 ? at(g.ny / 2) : 0.5 * (at(g.ny / 2 - 1) + at(g.ny / 2));
    }
    return out;
}

inline ChannelParams channel_params(const CaseConfig &cfg) {
    return {-cfg.body_force[0], cfg.nu, cfg.height(), cfg.wall_speed};
}

} // namespace detail

/// Analytic u_x at every node for the channel cases.
inline Eigen::VectorXd channel_reference(const CaseConfig &cfg) {
    const auto p = detail::channel_params(cfg);
    Eigen::VectorXd ref(static_cast<Eigen::Index>(cfg.grid.n_g()));
    for (std::size_t y = 0; y < cfg.grid.ny; ++y) {
        const double yc = node_center(y);
        const double u = cfg.id == CaseId::couette ? analytic_couette(yc, p) : analytic_poiseuille(yc, p);
        for (std::size_t x = 0; x < cfg.grid.nx; ++x) ref(static_cast<Eigen::Index>(x + y * cfg.grid.nx)) = u;
    }
    return ref;
}

/// Analytic concentration at every node at time t.
inline Eigen::VectorXd gaussian_reference(const CaseConfig &cfg, double t,
                                          GaussianForm form = GaussianForm::isotropic) {
    auto p = case_gaussian(cfg);
    p.form = form;
    Eigen::VectorXd ref(static_cast<Eigen::Index>(cfg.grid.n_g()));
    for (std::size_t y = 0; y < cfg.grid.ny; ++y) {
        for (std::size_t x = 0; x < cfg.grid.nx; ++x) {
            ref(static_cast<Eigen::Index>(x + y * cfg.grid.nx)) =
                analytic_gaussian({node_center(x), node_center(y)}, t, p);
        }
    }
    return ref;
}

inline Eigen::VectorXd stacked_velocity(const FlowFields &f) {
    Eigen::VectorXd v(2 * f.grid.n_g());
    v << f.ux(), f.uy();
    return v;
}

/**
 * Steps the chosen engine for cfg.steps steps and scores the final state:
 * ade against the analytic Gaussian, channels against their analytic
 * profiles, cavity against the classical full-equilibrium run. The quantum
 * engine is shadowed by the classical linearized stepper every step.
 */
inline RunResult run_case(const CaseConfig &cfg) {
    if (cfg.grid.n_qa() > kMaxQubits) throw ConfigError(detail::memory_message(cfg.grid));
    cfg.bc.validate();

    auto ops = build_case_operators(cfg);
    RunReport rep;
    rep.id = cfg.id;
    rep.grid = cfg.grid;
    rep.n_q = cfg.grid.n_q();
    rep.n_qa = cfg.grid.n_qa();
    rep.steps = cfg.steps;
    rep.engine = cfg.engine;
    rep.tolerance = cfg.tolerance;
    rep.gates = gate_count_estimate(rep.n_qa);

    std::optional<DecomposedOperator> coll;
    std::optional<DecomposedOperator> strm;
    if (cfg.engine == Engine::quantum) {
        coll = decompose_operator(ops.collision);
        strm = decompose_operator(ops.streaming);
        rep.alpha_collision = coll->alpha;
        rep.alpha_streaming = strm->alpha;
    }

    FlowFields state = initial_fields(cfg);
    FlowFields shadow = state;
    std::vector<std::pair<std::size_t, FlowFields>> snapshots;
    double max_dev = 0.0;

    const auto t0 = std::chrono::steady_clock::now();
    for (std::size_t t = 1; t <= cfg.steps; ++t) {
        switch (cfg.engine) {
        case Engine::quantum:
            state.df = qlb_step(state.df, cfg.grid, *coll, *strm, ops.corrections);
            shadow = classical_step(shadow, cfg, true);
            max_dev = std::max(max_dev, relative_max_deviation(state.df, shadow.df));
            break;
        case Engine::classical_linear: state = classical_step(state, cfg, true); break;
        case Engine::classical_full: state = classical_step(state, cfg, false); break;
        }
        if ((cfg.output_every > 0 && t % cfg.output_every == 0) || t == cfg.steps) {
            snapshots.emplace_back(t, state);
        }
    }
    const auto t1 = std::chrono::steady_clock::now();
    rep.wall_clock_per_step =
        std::chrono::duration<double>(t1 - t0).count() / static_cast<double>(cfg.steps);

    std::optional<FlowFields> reference;
    switch (cfg.id) {
    case CaseId::ade:
        rep.l2_error = l2_relative_error(gaussian_reference(cfg, static_cast<double>(cfg.steps)),
                                         state.rho());
        break;
    case CaseId::poiseuille:
    case CaseId::couette: rep.l2_error = l2_relative_error(channel_reference(cfg), state.ux()); break;
    case CaseId::cavity:
        reference = detail::run_classical(cfg, false);
        rep.l2_error = l2_relative_error(stacked_velocity(*reference), stacked_velocity(state));
        break;
    }

    if (cfg.engine == Engine::quantum) {
        rep.max_dev_vs_linear = max_dev;
        rep.passed = max_dev <= cfg.tolerance;
    }
    return {rep, std::move(state), std::move(snapshots), std::move(reference),
            std::move(ops.streaming)};
}

// ---------------------------------------------------------------------------
// Artifacts
// ---------------------------------------------------------------------------

inline nlohmann::json to_json(const RunReport &r) {
    nlohmann::json j;
    j["case"] = to_string(r.id);
    j["grid"] = {{"nx", r.grid.nx}, {"ny", r.grid.ny}};
    j["n_q"] = r.n_q;
    j["n_qa"] = r.n_qa;
    j["steps"] = r.steps;
    j["engine"] = to_string(r.engine);
    j["l2_error"] = r.l2_error;
    j["max_dev_vs_linear"] =
        r.max_dev_vs_linear ? nlohmann::json(*r.max_dev_vs_linear) : nlohmann::json(nullptr);
    j["tolerance"] = r.tolerance;
    j["alpha"] = {{"collision", r.alpha_collision}, {"streaming", r.alpha_streaming}};
    j["wall_clock_per_step_s"] = r.wall_clock_per_step;
    j["gates"] = {{"diagonal_per_op", r.gates.diagonal_per_op},
                  {"generic_per_op", r.gates.generic_per_op},
                  {"total", r.gates.total}};
    j["status"] = r.status();
    return j;
}

namespace detail {

inline std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

class CsvFile {
  public:
    CsvFile(const std::filesystem::path &path, const std::string &header) : path_(path), out_(path) {
        if (!out_) throw std::runtime_error("cannot open '" + path_.string() + "' for writing");
        out_ << header << '\n';
    }
    template <class... Ts>
    void row(const Ts &...vals) {
        bool first = true;
        ((out_ << (first ? "" : ",") << cell(vals), first = false), ...);
        out_ << '\n';
    }
    void close() {
        out_.close();
        if (!out_) throw std::runtime_error("write to '" + path_.string() + "' failed");
    }

  private:
    static std::string cell(double v) { return fmt(v); }
    static std::string cell(std::size_t v) { return std::to_string(v); }

    std::filesystem::path path_;
    std::ofstream out_;
};

} // namespace detail

/**
 * Writes fields.csv, profile.csv (cavity: profile_ux.csv and
 * profile_uy.csv), spy.csv and report.json into out_dir.
 */
inline std::vector<std::filesystem::path> emit_artifacts(const RunResult &res,
                                                         const CaseConfig &cfg,
                                                         const std::filesystem::path &out_dir) {
    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    if (ec) {
        throw std::runtime_error("cannot create '" + out_dir.string() + "': " + ec.message());
    }
    const GridSpec &g = cfg.grid;
    std::string sim = to_string(cfg.engine);
    std::replace(sim.begin(), sim.end(), '-', '_');
    std::vector<std::filesystem::path> written;

    {
        const auto path = out_dir / "fields.csv";
        detail::CsvFile csv(path, "step,x,y,rho,ux,uy");
        for (const auto &[step, f] : res.snapshots) {
            const auto rho = f.rho();
            const auto ux = f.ux();
            const auto uy = f.uy();
            for (std::size_t y = 0; y < g.ny; ++y) {
                for (std::size_t x = 0; x < g.nx; ++x) {
                    const auto k = static_cast<Eigen::Index>(x + y * g.nx);
                    csv.row(step, x, y, rho(k), ux(k), uy(k));
                }
            }
        }
        csv.close();
        written.push_back(path);
    }

    const FlowFields &fin = res.final_fields;
    switch (cfg.id) {
    case CaseId::poiseuille:
    case CaseId::couette: {
        const auto path = out_dir / "profile.csv";
        detail::CsvFile csv(path, "y,ux_" + sim + ",ux_analytic");
        const auto u = detail::vertical_centerline(fin.ux(), g);
        const auto ref = detail::vertical_centerline(channel_reference(cfg), g);
        for (std::size_t y = 0; y < g.ny; ++y) {
            csv.row(node_center(y), u(static_cast<Eigen::Index>(y)), ref(static_cast<Eigen::Index>(y)));
        }
        csv.close();
        written.push_back(path);
        break;
    }
    case CaseId::ade: {
        const auto path = out_dir / "profile.csv";
        detail::CsvFile csv(path, "x,c_" + sim + ",c_analytic");
        const auto c = fin.rho();
        const auto ref = gaussian_reference(cfg, static_cast<double>(cfg.steps));
        Eigen::Index peak = 0;
        c.maxCoeff(&peak);
        const auto row = static_cast<std::size_t>(peak) / g.nx;
        for (std::size_t x = 0; x < g.nx; ++x) {
            const auto k = static_cast<Eigen::Index>(x + row * g.nx);
            csv.row(node_center(x), c(k), ref(k));
        }
        csv.close();
        written.push_back(path);
        break;
    }
    case CaseId::cavity: {
        const FlowFields &ref = res.reference_fields.value();
        {
            const auto path = out_dir / "profile_ux.csv";
            detail::CsvFile csv(path, "y,ux_" + sim + ",ux_classical_full");
            const auto u = detail::vertical_centerline(fin.ux(), g);
            const auto r = detail::vertical_centerline(ref.ux(), g);
            for (std::size_t y = 0; y < g.ny; ++y) {
                csv.row(node_center(y), u(static_cast<Eigen::Index>(y)), r(static_cast<Eigen::Index>(y)));
            }
            csv.close();
            written.push_back(path);
        }
        {
            const auto path = out_dir / "profile_uy.csv";
            detail::CsvFile csv(path, "x,uy_" + sim + ",uy_classical_full");
            const auto u = detail::horizontal_centerline(fin.uy(), g);
            const auto r = detail::horizontal_centerline(ref.uy(), g);
            for (std::size_t x = 0; x < g.nx; ++x) {
                csv.row(node_center(x), u(static_cast<Eigen::Index>(x)), r(static_cast<Eigen::Index>(x)));
            }
            csv.close();
            written.push_back(path);
        }
        break;
    }
    }

    {
        const auto path = out_dir / "spy.csv";
        write_sparsity_pattern(res.streaming, path.string());
        written.push_back(path);
    }
    {
        const auto path = out_dir / "report.json";
        std::ofstream out(path);
        if (!out) throw std::runtime_error("cannot open '" + path.string() + "' for writing");
        out << to_json(res.report).dump(2) << '\n';
        if (!out) throw std::runtime_error("write to '" + path.string() + "' failed");
        written.push_back(path);
    }
    return written;
}

} // namespace qlbm
