// Copyright 2026 The gpgsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>
#include <set>

#include <Eigen/QR>

#include "gpgsim/gpgsim.hpp"
#include "json.hpp"
#include "output.hpp"
#include "parallel.hpp"

namespace gpgsim::harness {

namespace {

using nlohmann::json;

std::string num(double x) {
    if (std::isnan(x)) {
        return "nan";
    }
    if (std::isinf(x)) {
        return x > 0 ? "inf" : "-inf";
    }
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

void require(bool ok, const std::string &key, const std::string &msg) {
    if (!ok) {
        throw ConfigError(key, msg);
    }
}

std::vector<int> spin_counts(const Config &cfg, const std::string &key, bool even) {
    auto ns = cfg.get_int_list(key);
    require(!ns.empty(), key, "needs at least one N");
    for (int n : ns) {
        require(n >= 2, key, "N must be >= 2");
        require(!even || n % 2 == 0, key, "N must be even");
    }
    return ns;
}

double non_negative(const Config &cfg, const std::string &key) {
    double v = cfg.get_double(key);
    require(std::isfinite(v) && v >= 0, key, "must be finite and non-negative");
    return v;
}

std::filesystem::path target_path(const Config &cfg, const RunContext &ctx) {
    std::filesystem::path p = cfg.get_string("output");
    return p.is_absolute() ? p : ctx.out_dir / p;
}

CommandResult write_csv(const std::string &name, const Config &cfg, const RunContext &ctx, const std::string &columns,
                        const std::vector<std::string> &rows) {
    std::string body = csv_header(name, cfg) + columns + "\n";
    for (const auto &r : rows) {
        body += r + "\n";
    }
    auto path = target_path(cfg, ctx);
    write_atomic(path, body);
    return {{path}, 0};
}

CommandResult write_json(const std::string &name, const Config &cfg, const RunContext &ctx, json payload,
                         int exit_code = 0) {
    payload["meta"] = {{"artifact", "gpgsim"},
                       {"version", version()},
                       {"command", name},
                       {"config_hash", config_hash(name, cfg)}};
    auto path = target_path(cfg, ctx);
    write_atomic(path, payload.dump(2) + "\n");
    return {{path}, exit_code};
}

json ordering_json(const std::vector<int> &o) {
    return json(o);
}

// ---- prepare

CommandResult run_prepare(const Config &cfg, const RunContext &ctx) {
    auto ns = spin_counts(cfg, "n", false);
    double m = cfg.get_double("m");
    for (int n : ns) {
        require(std::abs(m) <= n / 2.0 && std::fmod(m + n / 2.0, 1.0) == 0, "m", "M must lie on the ladder of every N");
    }
    auto rows = parallel_map(
        ns,
        [&](int n) {
            DickePreparation p = prepare_dicke(n, m);
            return std::to_string(n) + "," + num(m) + "," + num(p.plan.overlap) + "," + std::to_string(p.plan.n_steps) +
                   "," + num(1 - p.fidelity) + "," + num(1 - predicted_fidelity(p.plan)) + "," +
                   num(std::sqrt(2 / (kPi * n))) + "," + std::to_string(p.gpg_count);
        },
        ctx.threads);
    return write_csv("prepare", cfg, ctx, "N,M,overlap,n_steps,fidelity_error,predicted_error,error_bound,gpg_count",
                     rows);
}

// ---- precision

CommandResult run_precision(const Config &cfg, const RunContext &ctx) {
    long long lo = cfg.get_int("n-min");
    long long hi = cfg.get_int("n-max");
    long long step = cfg.get_int("n-step");
    require(lo >= 2 && lo % 2 == 0, "n-min", "must be even and >= 2");
    require(hi >= lo && hi <= 5000, "n-max", "must lie in [n-min, 5000]");
    require(step >= 2 && step % 2 == 0, "n-step", "must be even and >= 2");
    auto dephasing = cfg.get_double_list("dephasing");
    for (double a : dephasing) {
        require(std::isfinite(a) && a >= 0, "dephasing", "values must be non-negative");
    }
    double kappa = non_negative(cfg, "kappa");
    std::vector<int> ns;
    for (long long n = lo; n <= hi; n += step) {
        ns.push_back(static_cast<int>(n));
    }
    auto best = [](const DickeDensity &rho) {
        try {
            return precision_sq_optimal(rho).delta_eta_sq;
        } catch (const DegenerateEstimatorError &) {
            return std::nan("");
        }
    };
    auto rows = parallel_map(
        ns,
        [&](int n) {
            DickeDensity rho = DickeDensity::from_ket(prepare_dicke(n, 0.0).state);
            double p = best(rho);
            std::string r = std::to_string(n) + "," + num(1.0 / n) + "," + num(crb(n)) + "," + num(p) + "," +
                            num(p / crb(n));
            for (double a : dephasing) {
                r += "," + num(best(noisy_prepare_dicke(n, 0.0, {{kappa}, a}).state));
            }
            return r;
        },
        ctx.threads);
    std::string cols = "N,shot_noise,crb,protocol,protocol_over_crb";
    for (double a : dephasing) {
        cols += ",protocol_A" + num(a);
    }
    return write_csv("precision", cfg, ctx, cols, rows);
}

// ---- mode-decay

CommandResult run_mode_decay(const Config &cfg, const RunContext &ctx) {
    auto ns = spin_counts(cfg, "n", false);
    double kmax = non_negative(cfg, "kappa-max");
    long long points = cfg.get_int("kappa-points");
    require(points >= 1 && points <= 10000, "kappa-points", "must lie in [1, 10000]");
    struct Point {
        double kappa;
        int n;
    };
    std::vector<Point> grid;
    for (long long i = 0; i < points; i++) {
        double k = points == 1 ? kmax : kmax * static_cast<double>(i) / static_cast<double>(points - 1);
        for (int n : ns) {
            grid.push_back({k, n});
        }
    }
    auto rows = parallel_map(
        grid,
        [&](const Point &p) {
            auto r = noisy_phasing_channel(p.n, p.n / 2, {p.kappa}).report;
            return num(p.kappa) + "," + std::to_string(p.n) + "," + num(r.process_fidelity) + "," +
                   num(r.bound_composite) + "," + num(r.bound_per_gate);
        },
        ctx.threads);
    return write_csv("mode-decay", cfg, ctx, "kappa_over_g,N,process_fidelity,bound_composite,bound_per_gate", rows);
}

// ---- filter

CommandResult run_filter(const Config &cfg, const RunContext &ctx) {
    auto ns = spin_counts(cfg, "n", true);
    auto omegas = cfg.get_double_list("omega");
    if (omegas.empty()) {
        double lo = cfg.get_double("omega-min");
        double hi = cfg.get_double("omega-max");
        long long pts = cfg.get_int("points");
        require(lo > 0, "omega-min", "must be positive");
        require(hi > lo, "omega-max", "must exceed omega-min");
        require(pts >= 2 && pts <= 1000000, "points", "must lie in [2, 1e6]");
        for (long long i = 0; i < pts; i++) {
            omegas.push_back(lo * std::pow(hi / lo, static_cast<double>(i) / static_cast<double>(pts - 1)));
        }
    }
    for (double w : omegas) {
        require(std::isfinite(w) && w > 0, "omega", "frequencies must be positive");
    }
    struct Point {
        int n;
        double w;
    };
    std::vector<Point> grid;
    for (int n : ns) {
        for (double w : omegas) {
            grid.push_back({n, w});
        }
    }
    auto rows = parallel_map(
        grid,
        [&](const Point &p) {
            PulseTimeline tl = build_timeline(p.n);
            return std::to_string(p.n) + "," + num(p.w) + "," + num(filter_function(tl, p.w)) + "," +
                   num(bare_filter(tl.total_time, p.w)) + "," + num(filter_approximation_coefficient(p.n) * p.w * p.w);
        },
        ctx.threads);
    return write_csv("filter", cfg, ctx, "N,omega_over_g,f2_decoupled,f2_bare,f2_approx", rows);
}

// ---- permute

CommandResult run_permute(const Config &cfg, const RunContext &ctx) {
    long long n = cfg.get_int("n");
    require(n >= 2 && n % 2 == 0 && n <= 2000, "n", "N must be even in [2, 2000]");
    double wc = cfg.get_double("omega-c");
    require(wc > 0, "omega-c", "must be positive");
    double alpha = non_negative(cfg, "alpha");
    long long budget = cfg.get_int("budget");
    require(budget >= 1 && budget <= 100000000, "budget", "must lie in [1, 1e8]");
    long long seed = cfg.get_int("seed");
    auto s = NoiseSpectrum::ohmic(alpha, wc);
    auto r = permutation_search(static_cast<int>(n), s, static_cast<int>(budget), static_cast<uint64_t>(seed));
    json j = {{"n_spins", n},
              {"omega_c_over_g", wc},
              {"alpha", alpha},
              {"budget", budget},
              {"seed", seed},
              {"ordering", ordering_json(r.ordering)},
              {"ratio", r.report.ratio},
              {"baseline_ratio", r.baseline_ratio},
              {"a_of_t", r.report.a_of_t},
              {"a0_of_t", r.report.a0_of_t},
              {"estimated_error", r.report.estimated_error},
              {"evaluations", r.evaluations}};
    return write_json("permute", cfg, ctx, j);
}

// ---- tolerant

json preparation_json(const TolerantPreparation &p) {
    json outcomes = json::array();
    for (const auto &o : p.outcomes) {
        outcomes.push_back({{"r", o.outcome_r}, {"probability", o.probability}, {"fidelity", o.fidelity}});
    }
    return {{"outcomes", outcomes},
            {"n_grover_steps", p.n_grover_steps},
            {"controlled_gpg_count", p.controlled_gpg_count},
            {"rotation_theta", p.rotation.theta},
            {"rotation_alpha_sq", p.rotation.alpha_sq},
            {"rotation_block_infidelity", p.rotation.block_infidelity},
            {"rotation_precondition_warning", p.rotation.precondition_warning}};
}

CommandResult run_tolerant(const Config &cfg, const RunContext &ctx) {
    long long n = cfg.get_int("n");
    require(n >= 2 && n % 4 == 2 && n <= 2000, "n", "N must be even with N/2 odd, at most 2000");
    TolerantOptions opts;
    opts.ideal_gates = cfg.get_bool("ideal");
    opts.rotation_theta = cfg.get_double("theta");
    opts.ghz_phase_fix = cfg.get_bool("ghz-phase-fix");
    require(std::isfinite(opts.rotation_theta), "theta", "must be finite");
    int ni = static_cast<int>(n);
    json j = {{"n_spins", n},
              {"ideal_gates", opts.ideal_gates},
              {"phi2", preparation_json(prepare_phi2(ni, opts))},
              {"phi1", preparation_json(prepare_phi1(ni, opts))}};
    return write_json("tolerant", cfg, ctx, j);
}

// ---- synthesize

CMatrix haar_unitary(int d, uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> g;
    CMatrix a(d, d);
    for (int i = 0; i < d; i++) {
        for (int k = 0; k < d; k++) {
            a(i, k) = Complex(g(rng), g(rng));
        }
    }
    Eigen::HouseholderQR<CMatrix> qr(a);
    return qr.householderQ();
}

CommandResult run_synthesize(const Config &cfg, const RunContext &ctx) {
    long long n = cfg.get_int("n");
    require(n >= 2 && n <= 40, "n", "N must lie in [2, 40]");
    int ni = static_cast<int>(n);
    SynthesisConfig sc;
    long long restarts = cfg.get_int("restarts");
    require(restarts >= 1 && restarts <= 100000, "restarts", "must lie in [1, 1e5]");
    sc.restarts = static_cast<int>(restarts);
    sc.seed = static_cast<uint64_t>(cfg.get_int("seed"));
    const std::string &target = cfg.get_string("target");
    if (target == "unitary-random") {
        CMatrix u = haar_unitary(ni + 1, sc.seed);
        UnitaryProgram p = synthesize_unitary(ni, u, sc);
        json j = json::parse(program_to_json(p));
        j["target"] = target;
        j["reconstruction_distance"] = aligned_spectral_distance(program_unitary(p), u);
        return write_json("synthesize", cfg, ctx, j);
    }
    DickeKet t = DickeKet::lowest(ni);
    if (target == "center") {
        require(ni % 2 == 0, "target", "center needs even N");
        t = DickeKet::basis(ni, 0.0);
    } else if (target == "random") {
        std::mt19937_64 rng(sc.seed ^ 0x9e3779b97f4a7c15ULL);
        std::normal_distribution<double> g;
        CVector v(ni + 1);
        for (auto &x : v) {
            x = Complex(g(rng), g(rng));
        }
        t = DickeKet::normalized(ni, v);
    } else if (target.rfind("m:", 0) == 0) {
        Config tmp;
        tmp.set("target", target.substr(2));
        t = DickeKet::basis(ni, tmp.get_double("target"));
    } else {
        require(target == "lowest", "target", "expected center, lowest, random, m:<M> or unitary-random");
    }
    StateMapResult r = optimize_state_map(ni, t, sc);
    json j = {{"n_spins", n},
              {"target", target},
              {"infidelity", r.infidelity},
              {"best_restart", r.best_restart},
              {"restarts_run", r.restarts_run},
              {"evaluations", r.evaluations},
              {"parameters", flatten(r.params)}};
    return write_json("synthesize", cfg, ctx, j);
}

// ---- oracle

std::vector<RegisterStep> grover_circuit(int n) {
    GroverPlan p = make_plan(n, 0.0);
    int ell = index_of_m(n, 0.0);
    std::vector<RegisterStep> c{global_rotation(-p.epsilon, kPi / 2)};
    for (int k = 0; k < p.n_steps; k++) {
        for (const auto &g : phasing_schedule(n, ell).gates) {
            c.push_back(GpgStep{g});
        }
        c.push_back(global_rotation(p.epsilon, kPi / 2));
        for (const auto &g : phasing_schedule(n, 0).gates) {
            c.push_back(GpgStep{g});
        }
        c.push_back(global_rotation(-p.epsilon, kPi / 2));
    }
    return c;
}

CommandResult run_oracle(const Config &cfg, const RunContext &ctx) {
    auto reg = spin_counts(cfg, "full-register-n", true);
    for (int n : reg) {
        require(n <= 8, "full-register-n", "full-register checks need N <= 8");
    }
    auto kappas = cfg.get_double_list("kappa");
    for (double k : kappas) {
        require(std::isfinite(k) && k >= 0 && k <= 0.5, "kappa", "values must lie in [0, 0.5]");
    }
    long long ex = cfg.get_int("exhaustive-n");
    require(ex >= 2 && ex % 2 == 0 && ex <= 16, "exhaustive-n", "must be even in [2, 16]");

    json checks = json::array();
    bool all_ok = true;
    auto record = [&](json c, bool ok) {
        c["pass"] = ok;
        all_ok &= ok;
        checks.push_back(std::move(c));
    };

    auto reg_results = parallel_map(
        reg,
        [](int n) { return 1 - full_register_oracle(n, grover_circuit(n)).state.fidelity(prepare_dicke(n, 0.0).state); },
        ctx.threads);
    for (size_t i = 0; i < reg.size(); i++) {
        record({{"check", "full_register_grover"}, {"n_spins", reg[i]}, {"infidelity", reg_results[i]}},
               reg_results[i] < 1e-9);
    }

    GpgParams gate = phasing_schedule(2, 1).gates[0];
    struct Pair {
        double td;
        double vac;
    };
    auto lin = parallel_map(
        kappas,
        [&](double k) {
            auto o = lindblad_spin_channel(2, gpg_pulse_decomposition(gate, PulseOptions{true, k}), {k});
            return Pair{trace_distance(choi_state(o), choi_state(noisy_gpg_channel(2, gate, {k}))),
                        std::abs(1 - o.probe_vacuum_population)};
        },
        ctx.threads);
    for (size_t i = 0; i < kappas.size(); i++) {
        record({{"check", "lindblad_gpg_channel"},
                {"kappa_over_g", kappas[i]},
                {"choi_trace_distance", lin[i].td},
                {"vacuum_deficit", lin[i].vac}},
               lin[i].td < 1e-5 && lin[i].vac < 1e-6);
    }

    int n = static_cast<int>(ex);
    auto s = NoiseSpectrum::ohmic(1.0, 0.1);
    double a0 = ohmic_dephasing_closed_form(bare_sequence(canonical_total_time(n)), s);
    std::vector<int> ord(n / 2);
    for (int k = 0; k < n / 2; k++) {
        ord[k] = k + 1;
    }
    std::vector<int> best = ord;
    double best_v = 1e300;
    do {
        double v = ohmic_dephasing_closed_form(echo_sequence(build_timeline(n, ord)), s) / a0;
        if (v < best_v) {
            best_v = v;
            best = ord;
        }
    } while (std::next_permutation(ord.begin(), ord.end()));
    auto found = permutation_search(n, s, 3000, 1);
    record({{"check", "exhaustive_ordering"},
            {"n_spins", n},
            {"exhaustive_ratio", best_v},
            {"exhaustive_ordering", best},
            {"search_ratio", found.report.ratio},
            {"search_ordering", found.ordering}},
           std::abs(found.report.ratio - best_v) <= 1e-9 * best_v);

    double worst = 0;
    for (int m = 2; m <= 20; m++) {
        for (int ell = 0; ell <= m; ell++) {
            worst = std::max(worst, aligned_max_deviation(schedule_product(phasing_schedule(m, ell)), ideal_phasing(m, ell)));
        }
    }
    record({{"check", "phasing_identity"}, {"max_n", 20}, {"max_deviation", worst}}, worst < 1e-9);

    return write_json("oracle", cfg, ctx, {{"checks", checks}, {"all_pass", all_ok}}, all_ok ? 0 : 1);
}

std::vector<CommandSpec> build_specs() {
    return {
        {"prepare",
         "Grover preparation fidelity table (CSV)",
         {{"n", "10,70,260", "spin counts; lists and a:b:step ranges"},
          {"m", "0", "target M"},
          {"output", "prepare.csv", "output file"}},
         run_prepare},
        {"precision",
         "Field-sensing precision vs N: shot noise, CRB, protocol (CSV)",
         {{"n-min", "2", "smallest even N"},
          {"n-max", "100", "largest N"},
          {"n-step", "2", "N increment"},
          {"dephasing", "", "collective dephasing exponents A per reflection"},
          {"kappa", "0", "mode decay kappa/g for the dephased columns"},
          {"output", "precision.csv", "output file"}},
         run_precision},
        {"mode-decay",
         "Composite phasing process fidelity vs kappa/g (CSV)",
         {{"n", "10,20,40", "spin counts"},
          {"kappa-max", "0.1", "largest kappa/g"},
          {"kappa-points", "21", "grid points from 0"},
          {"output", "mode-decay.csv", "output file"}},
         run_mode_decay},
        {"filter",
         "Decoupled and bare filter functions (CSV)",
         {{"n", "10", "even spin counts"},
          {"omega", "", "explicit omega/g list; overrides the log grid"},
          {"omega-min", "1e-4", "log grid start"},
          {"omega-max", "1", "log grid end"},
          {"points", "200", "log grid points"},
          {"output", "filter.csv", "output file"}},
         run_filter},
        {"permute",
         "GPG ordering search against an Ohmic bath (JSON)",
         {{"n", "20", "even N"},
          {"omega-c", "0.1", "Ohmic cutoff omega_c/g"},
          {"alpha", "1", "Ohmic coupling"},
          {"budget", "10000", "ordering evaluations"},
          {"seed", "1", "RNG seed"},
          {"output", "permute.json", "output file"}},
         run_permute},
        {"tolerant",
         "Ancilla-assisted phi1/phi2 preparation report (JSON)",
         {{"n", "10", "N with N/2 odd"},
          {"ideal", "false", "exact gates in place of GPG circuits"},
          {"theta", "0", "controlled-rotation theta; 0 selects 1e-3/N"},
          {"ghz-phase-fix", "true", "collective z correction after the GHZ step"},
          {"output", "tolerant.json", "output file"}},
         run_tolerant},
        {"synthesize",
         "State-map or unitary synthesis with the GPG ansatz (JSON)",
         {{"n", "4", "spin count"},
          {"target", "center", "center, lowest, random, m:<M> or unitary-random"},
          {"restarts", "50", "optimizer restarts"},
          {"seed", "1", "RNG seed"},
          {"output", "synthesize.json", "output file"}},
         run_synthesize},
        {"oracle",
         "Brute-force cross-checks (JSON); exit 1 if any fails",
         {{"full-register-n", "2,4,6", "N for 2^N register checks"},
          {"kappa", "0.02,0.05,0.1", "kappa/g for the Lindblad check"},
          {"exhaustive-n", "12", "N for the exhaustive ordering check"},
          {"output", "oracle.json", "output file"}},
         run_oracle},
    };
}

}  // namespace

const std::vector<CommandSpec> &command_specs() {
    static const std::vector<CommandSpec> specs = build_specs();
    return specs;
}

const CommandSpec &find_command(const std::string &name) {
    for (const auto &s : command_specs()) {
        if (s.name == name) {
            return s;
        }
    }
    throw ConfigError("", "unknown command '" + name + "'");
}

Config effective_config(const std::string &name, const Config &cfg) {
    const CommandSpec &spec = find_command(name);
    Config out;
    std::set<std::string> known;
    for (const auto &o : spec.options) {
        out.set(o.key, o.default_value);
        known.insert(o.key);
    }
    cfg.restrict_to(known);
    out.merge(cfg);
    return out;
}

CommandResult run_command(const std::string &name, const Config &cfg, const RunContext &ctx) {
    Config eff = effective_config(name, cfg);
    try {
        return find_command(name).run(eff, ctx);
    } catch (const InvalidArgument &e) {
        throw ConfigError("", e.what());
    } catch (const UnsupportedParityError &e) {
        throw ConfigError("", e.what());
    }
}

}  // namespace gpgsim::harness
