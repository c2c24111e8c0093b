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

#ifndef GPGSIM_DECOUPLING_HPP
#define GPGSIM_DECOUPLING_HPP

#include <array>
#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "gpgsim/dicke.hpp"

namespace gpgsim {

/// Control sign function of the phasing sequence; times in units of 1/g.
struct PulseTimeline {
    int n_spins;
    /// 1-based gate labels k in execution order.
    std::vector<int> ordering;
    /// T^{(0..4)} for each executed gate.
    std::vector<std::array<double, 5>> blocks;
    /// Sign changes of C(t) strictly inside (0, total_time).
    std::vector<double> flip_times;
    double total_time;
};

/// Weighted exponential sum: f(w) = (1/w) sum_j c_j exp(i w t_j).
struct EchoSequence {
    std::vector<double> times;
    std::vector<double> coefficients;
};

/// Requires even N and a permutation of 1..N/2.
PulseTimeline build_timeline(int n_spins, const std::vector<int> &ordering);
PulseTimeline build_timeline(int n_spins);
/// pi N (N+2) / (N+1).
double canonical_total_time(int n_spins);

EchoSequence echo_sequence(const PulseTimeline &timeline);
/// Points {0, T} with coefficients {-1, +1}.
EchoSequence bare_sequence(double total_time);

double filter_function(const EchoSequence &seq, double omega_over_g);
double filter_function(const PulseTimeline &timeline, double omega_over_g);
/// c in |f|^2 = c w^2 + O(w^4).
double filter_low_frequency_coefficient(const PulseTimeline &timeline);
/// pi^4 N^2 (N+2)^2 / (9 (N+1)^2).
double filter_approximation_coefficient(int n_spins);
/// 4 sin^2(T w / 2) / w^2; T^2 at w = 0.
double bare_filter(double total_time, double omega);

/// (1/(b-a)) integral of |f|^2 over [a, b].
double filter_band_average(const EchoSequence &seq, double omega_lo, double omega_hi);

struct NoiseSpectrum {
    enum class Kind { OhmicZeroTemp, Tabulated };
    Kind kind = Kind::OhmicZeroTemp;
    /// S(w) = coupling_alpha w exp(-w / omega_c) for the Ohmic kind.
    double coupling_alpha = 1.0;
    double omega_c_over_g = 0.1;
    /// (w, S) pairs in increasing w, linearly interpolated, zero outside.
    std::vector<std::pair<double, double>> table;

    static NoiseSpectrum ohmic(double coupling_alpha, double omega_c_over_g);
    static NoiseSpectrum tabulated(std::vector<std::pair<double, double>> table);
    /// 2 pi (n(w) + 1/2) I(w) on `grid`, n(w) = 1/(exp(beta w) - 1).
    static NoiseSpectrum thermal(const std::function<double(double)> &interaction, double beta,
                                 const std::vector<double> &grid);

    double operator()(double omega) const;
};

struct QuadratureConfig {
    /// Required relative error of each A(T).
    double rel_tol = 1e-4;
    /// Ohmic tail truncation at omega_c ln(1/tail_epsilon).
    double tail_epsilon = 1e-12;
    double panel_tol = 1e-11;
    int max_panels = 2000000;
};

struct DephasingReport {
    double a_of_t;
    double a0_of_t;
    double ratio;
    /// Larger of the two relative quadrature error estimates.
    double estimated_error;
};

/// A = (1/2pi) integral S |f|^2 over panels of width <= pi/T. Throws QuadratureFailure.
double dephasing_integral(const EchoSequence &seq, const NoiseSpectrum &spectrum, const QuadratureConfig &cfg = {},
                          double *error_estimate = nullptr);
DephasingReport dephasing_integral(const PulseTimeline &timeline, const NoiseSpectrum &spectrum,
                                   const QuadratureConfig &cfg = {});

/// Exact Ohmic kernel: (alpha/2pi) sum_{j,l} c_j c_l (-1/2) ln(1 + omega_c^2 (t_j - t_l)^2).
double ohmic_dephasing_closed_form(const EchoSequence &seq, const NoiseSpectrum &spectrum);
DephasingReport ohmic_dephasing_closed_form(const PulseTimeline &timeline, const NoiseSpectrum &spectrum);

/// Ohmic alpha such that the bare A_0(T) equals gamma_gdp T.
double calibrate_ohmic_alpha(int n_spins, double omega_c_over_g, double gamma_gdp);

struct SearchResult {
    std::vector<int> ordering;
    DephasingReport report;
    double baseline_ratio;
    int evaluations;
};

/// Identity ordering as baseline plus `budget` evaluations of uniform samples with first-improvement
/// pairwise-swap refinement. Ties break toward the lexicographically smaller ordering.
SearchResult permutation_search(int n_spins, const NoiseSpectrum &spectrum, int budget, uint64_t seed,
                                const QuadratureConfig &cfg = {});

/// rho_{M,M'} exp(-(M-M')^2 A).
DickeDensity apply_global_dephasing(const DickeDensity &rho, double a_of_t);

}  // namespace gpgsim

#endif
