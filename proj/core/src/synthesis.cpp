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

#include "gpgsim/synthesis.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include <Eigen/Eigenvalues>

#include "json.hpp"

#include "gpgsim/errors.hpp"

namespace gpgsim {

namespace {

void check_n(int n_spins) {
    if (n_spins < 2) {
        throw InvalidArgument("synthesis needs N >= 2");
    }
}

double wrap_2pi(double x) {
    double r = std::fmod(x, 2 * kPi);
    return r < 0 ? r + 2 * kPi : r;
}

bool is_trivial_phase(double lambda) {
    double r = wrap_2pi(lambda);
    return r < 1e-14 || 2 * kPi - r < 1e-14;
}

double spectral_norm(const CMatrix &m) {
    Eigen::JacobiSVD<CMatrix> svd(m);
    return svd.singularValues()(0);
}

CVector prefix_column(int n_spins) {
    return ansatz_prefix(n_spins).col(0);
}

// K|J,-J> given the constant prefix column.
CVector column_from(int n_spins, const CVector &start, const AnsatzParams &p) {
    CVector v = start;
    for (int s = static_cast<int>(p.gates.size()) - 1; s >= 0; s--) {
        v = v.cwiseProduct(gpg_unitary(n_spins, p.gates[s]));
        v = rotate(n_spins, v, -p.betas[s], kPi / 2);
    }
    return v;
}

// Time-ordered steps of K (reverse = false) or K^dag (reverse = true).
void append_ansatz_steps(std::vector<ProgramStep> &out, const AnsatzParams &p, bool dagger) {
    std::vector<ProgramStep> k;
    k.push_back(RotationStep{kPi / 2});
    k.push_back(GpgParams{kPi / 2, 0.0, kPi / 4});
    k.push_back(RotationStep{-kPi / 2});
    for (int s = static_cast<int>(p.gates.size()) - 1; s >= 0; s--) {
        k.push_back(p.gates[s]);
        k.push_back(RotationStep{p.betas[s]});
    }
    if (!dagger) {
        out.insert(out.end(), k.begin(), k.end());
        return;
    }
    for (auto it = k.rbegin(); it != k.rend(); ++it) {
        if (const auto *r = std::get_if<RotationStep>(&*it)) {
            out.push_back(RotationStep{-r->angle});
        } else {
            GpgParams g = std::get<GpgParams>(*it);
            g.chi = -g.chi;
            out.push_back(g);
        }
    }
}

}  // namespace

int ansatz_parameter_count(int n_spins) {
    check_n(n_spins);
    return 4 * n_spins - 4;
}

std::vector<double> flatten(const AnsatzParams &p) {
    std::vector<double> x;
    for (size_t s = 0; s < p.gates.size(); s++) {
        x.push_back(p.betas[s]);
        x.push_back(p.gates[s].theta);
        x.push_back(p.gates[s].phi);
        x.push_back(p.gates[s].chi);
    }
    return x;
}

AnsatzParams unflatten(int n_spins, const std::vector<double> &x) {
    if (static_cast<int>(x.size()) != ansatz_parameter_count(n_spins)) {
        throw InvalidArgument("ansatz needs exactly 4N-4 parameters");
    }
    AnsatzParams p;
    for (size_t i = 0; i < x.size(); i += 4) {
        p.betas.push_back(x[i]);
        p.gates.push_back({x[i + 1], x[i + 2], x[i + 3]});
    }
    return p;
}

CMatrix ansatz_prefix(int n_spins) {
    check_n(n_spins);
    CMatrix e = exp_i_jy(n_spins, kPi / 2);
    return e.adjoint() * gpg_unitary(n_spins, {kPi / 2, 0.0, kPi / 4}).asDiagonal() * e;
}

CMatrix ansatz_unitary(int n_spins, const AnsatzParams &p) {
    check_n(n_spins);
    if (p.betas.size() != p.gates.size() || static_cast<int>(p.gates.size()) != n_spins - 1) {
        throw InvalidArgument("ansatz needs N-1 rotations and N-1 gates");
    }
    CMatrix k = CMatrix::Identity(n_spins + 1, n_spins + 1);
    for (size_t s = 0; s < p.gates.size(); s++) {
        k = k * exp_i_jy(n_spins, p.betas[s]) * gpg_unitary(n_spins, p.gates[s]).asDiagonal();
    }
    return k * ansatz_prefix(n_spins);
}

CVector ansatz_column(int n_spins, const AnsatzParams &p) {
    if (p.betas.size() != p.gates.size() || static_cast<int>(p.gates.size()) != n_spins - 1) {
        throw InvalidArgument("ansatz needs N-1 rotations and N-1 gates");
    }
    return column_from(n_spins, prefix_column(n_spins), p);
}

NelderMeadResult nelder_mead(const std::function<double(const std::vector<double> &)> &f, std::vector<double> x0,
                             const NelderMeadConfig &cfg) {
    size_t n = x0.size();
    if (n == 0) {
        return {x0, f(x0), 1};
    }
    int evals = 0;
    auto eval = [&](const std::vector<double> &x) {
        evals++;
        return f(x);
    };
    std::vector<double> best = x0;
    double best_f = eval(x0);
    double step = cfg.initial_step;
    for (int round = 0; round <= cfg.reinitializations && evals < cfg.max_evaluations; round++) {
        std::vector<std::vector<double>> pts(n + 1, best);
        std::vector<double> vals(n + 1, best_f);
        for (size_t i = 0; i < n; i++) {
            pts[i + 1][i] += step;
            vals[i + 1] = eval(pts[i + 1]);
        }
        std::vector<size_t> idx(n + 1);
        while (evals < cfg.max_evaluations) {
            std::iota(idx.begin(), idx.end(), 0);
            std::sort(idx.begin(), idx.end(), [&](size_t a, size_t b) { return vals[a] < vals[b]; });
            size_t lo = idx[0];
            size_t hi = idx[n];
            size_t second = idx[n - 1];
            if (vals[hi] - vals[lo] <= cfg.f_tol) {
                break;
            }
            std::vector<double> c(n, 0.0);
            for (size_t i = 0; i <= n; i++) {
                if (i == hi) {
                    continue;
                }
                for (size_t d = 0; d < n; d++) {
                    c[d] += pts[i][d] / n;
                }
            }
            auto along = [&](double t) {
                std::vector<double> x(n);
                for (size_t d = 0; d < n; d++) {
                    x[d] = c[d] + t * (pts[hi][d] - c[d]);
                }
                return x;
            };
            std::vector<double> xr = along(-1.0);
            double fr = eval(xr);
            if (fr < vals[lo]) {
                std::vector<double> xe = along(-2.0);
                double fe = eval(xe);
                if (fe < fr) {
                    pts[hi] = xe;
                    vals[hi] = fe;
                } else {
                    pts[hi] = xr;
                    vals[hi] = fr;
                }
                continue;
            }
            if (fr < vals[second]) {
                pts[hi] = xr;
                vals[hi] = fr;
                continue;
            }
            bool outside = fr < vals[hi];
            std::vector<double> xc = along(outside ? -0.5 : 0.5);
            double fc = eval(xc);
            if (fc < (outside ? fr : vals[hi])) {
                pts[hi] = xc;
                vals[hi] = fc;
                continue;
            }
            for (size_t i = 0; i <= n; i++) {
                if (i == lo) {
                    continue;
                }
                for (size_t d = 0; d < n; d++) {
                    pts[i][d] = pts[lo][d] + 0.5 * (pts[i][d] - pts[lo][d]);
                }
                vals[i] = eval(pts[i]);
            }
        }
        size_t arg = static_cast<size_t>(std::min_element(vals.begin(), vals.end()) - vals.begin());
        if (vals[arg] < best_f) {
            best_f = vals[arg];
            best = pts[arg];
        }
        step *= 0.3;
    }
    return {best, best_f, evals};
}

StateMapResult optimize_state_map(int n_spins, const DickeKet &target, const SynthesisConfig &cfg) {
    check_n(n_spins);
    if (target.n_spins() != n_spins) {
        throw InvalidArgument("optimize_state_map: N mismatch");
    }
    if (cfg.restarts < 1) {
        throw InvalidArgument("optimize_state_map needs at least one restart");
    }
    CVector start = prefix_column(n_spins);
    const CVector &t = target.amplitudes();
    auto objective = [&](const std::vector<double> &x) {
        CVector v = column_from(n_spins, start, unflatten(n_spins, x));
        return 1.0 - std::norm(t.dot(v));
    };
    std::mt19937_64 rng(cfg.seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    StateMapResult best{{}, 2.0, -1, 0, 0};
    int p = ansatz_parameter_count(n_spins);
    for (int r = 0; r < cfg.restarts; r++) {
        std::vector<double> x0(p);
        for (int i = 0; i < p; i += 4) {
            x0[i] = kPi * unit(rng);
            x0[i + 1] = 2 * kPi * unit(rng);
            x0[i + 2] = 2 * kPi * unit(rng);
            x0[i + 3] = kPi * unit(rng);
        }
        NelderMeadResult res = nelder_mead(objective, x0, cfg.local);
        best.evaluations += res.evaluations;
        best.restarts_run = r + 1;
        if (res.value < best.infidelity) {
            best.infidelity = res.value;
            best.params = unflatten(n_spins, res.x);
            best.best_restart = r;
        }
        if (best.infidelity <= cfg.stop_infidelity) {
            break;
        }
    }
    best.infidelity = std::max(best.infidelity, 0.0);
    return best;
}

UnitaryProgram synthesize_unitary(int n_spins, const std::vector<double> &eigenphases, const CMatrix &eigenvectors,
                                  const SynthesisConfig &cfg) {
    check_n(n_spins);
    int d = n_spins + 1;
    if (static_cast<int>(eigenphases.size()) != d || eigenvectors.rows() != d || eigenvectors.cols() != d) {
        throw InvalidArgument("synthesize_unitary needs N+1 eigenphases and an (N+1)x(N+1) basis");
    }
    if ((eigenvectors.adjoint() * eigenvectors - CMatrix::Identity(d, d)).cwiseAbs().maxCoeff() > 1e-10) {
        throw InvalidArgument("eigenvectors must be orthonormal");
    }
    UnitaryProgram prog{n_spins, {}, {}, eigenphases.back(), 0, 2.5 * n_spins * n_spins};
    for (int k = 0; k + 1 < d; k++) {
        double lambda = eigenphases[k] - eigenphases.back();
        if (is_trivial_phase(lambda)) {
            continue;
        }
        DickeKet v = DickeKet::normalized(n_spins, eigenvectors.col(k));
        StateMapResult m = optimize_state_map(n_spins, v, cfg);
        CMatrix kmat = ansatz_unitary(n_spins, m.params);
        CVector w = schedule_product(phasing_schedule(n_spins, 0, -lambda));
        // Drop the schedule's global phase so the factor is exactly rank-one.
        w /= w[1] / std::abs(w[1]);
        CMatrix actual = kmat * w.asDiagonal() * kmat.adjoint();
        CMatrix ideal = CMatrix::Identity(d, d) + (std::polar(1.0, lambda) - 1.0) * v.amplitudes() * v.amplitudes().adjoint();
        double dev = spectral_norm(actual - ideal);
        prog.factors.push_back({k + 1, wrap_2pi(lambda), m.params, m.infidelity, dev});

        append_ansatz_steps(prog.steps, m.params, true);
        for (const GpgParams &g : phasing_schedule(n_spins, 0, -lambda).gates) {
            prog.steps.push_back(g);
        }
        append_ansatz_steps(prog.steps, m.params, false);
    }
    for (const auto &s : prog.steps) {
        prog.gate_count += std::holds_alternative<GpgParams>(s) ? 1 : 0;
    }
    return prog;
}

UnitaryProgram synthesize_unitary(int n_spins, const CMatrix &u, const SynthesisConfig &cfg) {
    check_n(n_spins);
    int d = n_spins + 1;
    if (u.rows() != d || u.cols() != d || (u.adjoint() * u - CMatrix::Identity(d, d)).cwiseAbs().maxCoeff() > 1e-10) {
        throw InvalidArgument("synthesize_unitary needs an (N+1)x(N+1) unitary");
    }
    Eigen::ComplexSchur<CMatrix> schur(u);
    std::vector<double> phases(d);
    for (int i = 0; i < d; i++) {
        phases[i] = std::arg(schur.matrixT()(i, i));
    }
    return synthesize_unitary(n_spins, phases, schur.matrixU(), cfg);
}

CMatrix program_unitary(const UnitaryProgram &program) {
    int n = program.n_spins;
    int d = n + 1;
    CMatrix u = CMatrix::Identity(d, d);
    for (const auto &s : program.steps) {
        if (const auto *r = std::get_if<RotationStep>(&s)) {
            u = exp_i_jy(n, r->angle) * u;
        } else {
            u = gpg_unitary(n, std::get<GpgParams>(s)).asDiagonal() * u;
        }
    }
    return std::polar(1.0, program.global_phase) * u;
}

double aligned_spectral_distance(const CMatrix &a, const CMatrix &b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw InvalidArgument("aligned_spectral_distance: shape mismatch");
    }
    Complex tr = (b.adjoint() * a).trace();
    Complex c = std::abs(tr) > 0 ? tr / std::abs(tr) : Complex(1.0);
    return spectral_norm(a - c * b);
}

std::string program_to_json(const UnitaryProgram &program) {
    nlohmann::json j;
    j["n_spins"] = program.n_spins;
    j["global_phase"] = program.global_phase;
    j["gate_count"] = program.gate_count;
    j["gate_budget"] = program.gate_budget;
    nlohmann::json steps = nlohmann::json::array();
    for (const auto &s : program.steps) {
        if (const auto *r = std::get_if<RotationStep>(&s)) {
            steps.push_back({{"type", "rotation_y"}, {"angle", r->angle}});
        } else {
            const auto &g = std::get<GpgParams>(s);
            steps.push_back({{"type", "gpg"}, {"theta", g.theta}, {"phi", g.phi}, {"chi", g.chi}});
        }
    }
    j["steps"] = steps;
    nlohmann::json factors = nlohmann::json::array();
    for (const auto &f : program.factors) {
        factors.push_back({{"k", f.k},
                           {"lambda", f.lambda},
                           {"state_infidelity", f.state_infidelity},
                           {"deviation", f.deviation}});
    }
    j["factors"] = factors;
    return j.dump(2);
}

}  // namespace gpgsim
