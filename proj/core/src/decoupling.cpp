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

#include "gpgsim/decoupling.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "gpgsim/errors.hpp"

namespace gpgsim {

namespace {

constexpr std::array<double, 5> kBlockCoefficients{1, -2, 2, -2, 1};

void check_even(int n) {
    if (n < 2 || n % 2 != 0) {
        throw InvalidArgument("decoupling timelines need an even N >= 2");
    }
}

std::vector<int> identity_ordering(int count) {
    std::vector<int> v(count);
    std::iota(v.begin(), v.end(), 1);
    return v;
}

// e^{ix} - 1 - ix without cancellation for small x.
Complex expm1_minus_linear(double x) {
    double s = std::sin(0.5 * x);
    double re = -2 * s * s;
    double im;
    if (std::abs(x) < 0.1) {
        double x2 = x * x;
        im = x * x2 * (-1.0 / 6 + x2 * (1.0 / 120 + x2 * (-1.0 / 5040 + x2 / 362880)));
    } else {
        im = std::sin(x) - x;
    }
    return {re, im};
}

double max_time(const EchoSequence &seq) {
    double t = 0;
    for (double x : seq.times) {
        t = std::max(t, std::abs(x));
    }
    return t;
}

template <typename F>
double panel_integral(F &&f, double lo, double hi, double width, const QuadratureConfig &cfg, double *err_out) {
    if (!(hi > lo)) {
        if (err_out) {
            *err_out = 0;
        }
        return 0.0;
    }
    long long panels = static_cast<long long>(std::ceil((hi - lo) / width));
    if (panels > cfg.max_panels) {
        throw QuadratureFailure("too many quadrature panels", 0.0, 0.0, static_cast<int>(std::min<long long>(panels, 1 << 30)));
    }
    double h = (hi - lo) / panels;
    double total = 0;
    double err = 0;
    for (long long p = 0; p < panels; p++) {
        double a = lo + p * h;
        double b = (p + 1 == panels) ? hi : a + h;
        double e = 0;
        total += boost::math::quadrature::gauss_kronrod<double, 31>::integrate(f, a, b, 15, cfg.panel_tol, &e);
        err += e;
    }
    if (err_out) {
        *err_out = err;
    }
    return total;
}

std::vector<int> random_permutation(int count, std::mt19937_64 &rng) {
    std::vector<int> v = identity_ordering(count);
    std::shuffle(v.begin(), v.end(), rng);
    return v;
}

}  // namespace

double canonical_total_time(int n_spins) {
    check_even(n_spins);
    return kPi * n_spins * (n_spins + 2.0) / (n_spins + 1.0);
}

PulseTimeline build_timeline(int n_spins) {
    check_even(n_spins);
    return build_timeline(n_spins, identity_ordering(n_spins / 2));
}

PulseTimeline build_timeline(int n_spins, const std::vector<int> &ordering) {
    check_even(n_spins);
    int count = n_spins / 2;
    std::vector<int> sorted = ordering;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != identity_ordering(count)) {
        throw InvalidArgument("ordering must be a permutation of 1..N/2");
    }
    PulseTimeline tl{n_spins, ordering, {}, {}, 0.0};
    double offset = 0;
    for (int k : ordering) {
        double theta = 2 * kPi * k / (n_spins + 1);
        std::array<double, 5> b{};
        for (int m = 0; m < 5; m++) {
            b[m] = offset + m * theta;
        }
        tl.blocks.push_back(b);
        offset += 4 * theta;
    }
    tl.total_time = offset;
    for (size_t k = 0; k < tl.blocks.size(); k++) {
        for (int m = 1; m < 5; m++) {
            if (k + 1 == tl.blocks.size() && m == 4) {
                continue;
            }
            tl.flip_times.push_back(tl.blocks[k][m]);
        }
    }
    return tl;
}

EchoSequence echo_sequence(const PulseTimeline &timeline) {
    EchoSequence seq;
    for (const auto &b : timeline.blocks) {
        for (int m = 0; m < 5; m++) {
            if (!seq.times.empty() && seq.times.back() == b[m]) {
                seq.coefficients.back() += kBlockCoefficients[m];
            } else {
                seq.times.push_back(b[m]);
                seq.coefficients.push_back(kBlockCoefficients[m]);
            }
        }
    }
    return seq;
}

EchoSequence bare_sequence(double total_time) {
    return {{0.0, total_time}, {-1.0, 1.0}};
}

double filter_function(const EchoSequence &seq, double omega_over_g) {
    double w = omega_over_g;
    if (w == 0.0) {
        return 0.0;
    }
    Complex s = 0;
    if (std::abs(w) * max_time(seq) < 1.0) {
        // Both sum c_j and sum c_j t_j vanish for the echo blocks and the bare pair alike.
        double c0 = 0;
        double c1 = 0;
        for (size_t j = 0; j < seq.times.size(); j++) {
            s += seq.coefficients[j] * expm1_minus_linear(w * seq.times[j]);
            c0 += seq.coefficients[j];
            c1 += seq.coefficients[j] * seq.times[j];
        }
        s += c0 + Complex(0.0, w * c1);
    } else {
        for (size_t j = 0; j < seq.times.size(); j++) {
            s += seq.coefficients[j] * std::polar(1.0, w * seq.times[j]);
        }
    }
    return std::norm(s) / (w * w);
}

double filter_function(const PulseTimeline &timeline, double omega_over_g) {
    return filter_function(echo_sequence(timeline), omega_over_g);
}

double filter_low_frequency_coefficient(const PulseTimeline &timeline) {
    EchoSequence seq = echo_sequence(timeline);
    double m2 = 0;
    for (size_t j = 0; j < seq.times.size(); j++) {
        m2 += seq.coefficients[j] * seq.times[j] * seq.times[j];
    }
    return 0.25 * m2 * m2;
}

double filter_approximation_coefficient(int n_spins) {
    double n = n_spins;
    return std::pow(kPi, 4) * n * n * (n + 2) * (n + 2) / (9 * (n + 1) * (n + 1));
}

double bare_filter(double total_time, double omega) {
    if (omega == 0.0) {
        return total_time * total_time;
    }
    double s = std::sin(0.5 * total_time * omega);
    return 4 * s * s / (omega * omega);
}

double filter_band_average(const EchoSequence &seq, double omega_lo, double omega_hi) {
    if (!(omega_hi > omega_lo)) {
        throw InvalidArgument("filter_band_average needs omega_hi > omega_lo");
    }
    QuadratureConfig cfg;
    double width = kPi / std::max(max_time(seq), 1e-300);
    double v = panel_integral([&](double w) { return filter_function(seq, w); }, omega_lo, omega_hi, width, cfg, nullptr);
    return v / (omega_hi - omega_lo);
}

NoiseSpectrum NoiseSpectrum::ohmic(double coupling_alpha, double omega_c_over_g) {
    if (!(coupling_alpha >= 0) || !(omega_c_over_g > 0)) {
        throw InvalidArgument("Ohmic spectrum needs alpha >= 0 and omega_c > 0");
    }
    NoiseSpectrum s;
    s.kind = Kind::OhmicZeroTemp;
    s.coupling_alpha = coupling_alpha;
    s.omega_c_over_g = omega_c_over_g;
    return s;
}

NoiseSpectrum NoiseSpectrum::tabulated(std::vector<std::pair<double, double>> table) {
    if (table.size() < 2) {
        throw InvalidArgument("tabulated spectrum needs at least two points");
    }
    for (size_t i = 0; i < table.size(); i++) {
        if (table[i].first < 0 || table[i].second < 0 || (i > 0 && !(table[i].first > table[i - 1].first))) {
            throw InvalidArgument("tabulated spectrum must be non-negative with increasing frequencies");
        }
    }
    NoiseSpectrum s;
    s.kind = Kind::Tabulated;
    s.table = std::move(table);
    return s;
}

NoiseSpectrum NoiseSpectrum::thermal(const std::function<double(double)> &interaction, double beta,
                                     const std::vector<double> &grid) {
    std::vector<std::pair<double, double>> t;
    for (double w : grid) {
        double occupation = w > 0 ? 1.0 / std::expm1(beta * w) : 0.0;
        t.emplace_back(w, 2 * kPi * (occupation + 0.5) * interaction(w));
    }
    return tabulated(std::move(t));
}

double NoiseSpectrum::operator()(double omega) const {
    if (kind == Kind::OhmicZeroTemp) {
        return omega < 0 ? 0.0 : coupling_alpha * omega * std::exp(-omega / omega_c_over_g);
    }
    if (omega < table.front().first || omega > table.back().first) {
        return 0.0;
    }
    auto it = std::lower_bound(table.begin(), table.end(), omega,
                               [](const std::pair<double, double> &p, double w) { return p.first < w; });
    if (it == table.begin()) {
        return it->second;
    }
    auto prev = it - 1;
    double t = (omega - prev->first) / (it->first - prev->first);
    return prev->second + t * (it->second - prev->second);
}

double dephasing_integral(const EchoSequence &seq, const NoiseSpectrum &spectrum, const QuadratureConfig &cfg,
                          double *error_estimate) {
    double hi;
    if (spectrum.kind == NoiseSpectrum::Kind::OhmicZeroTemp) {
        if (spectrum.coupling_alpha == 0.0) {
            if (error_estimate) {
                *error_estimate = 0;
            }
            return 0.0;
        }
        hi = spectrum.omega_c_over_g * std::log(1 / cfg.tail_epsilon);
    } else {
        hi = spectrum.table.back().first;
    }
    double lo = spectrum.kind == NoiseSpectrum::Kind::Tabulated ? spectrum.table.front().first : 0.0;
    double width = kPi / std::max(max_time(seq), 1e-300);
    double err = 0;
    double v = panel_integral([&](double w) { return spectrum(w) * filter_function(seq, w); }, lo, hi, width, cfg, &err);
    v /= 2 * kPi;
    err /= 2 * kPi;
    double rel = v != 0.0 ? err / std::abs(v) : (err == 0.0 ? 0.0 : 1.0);
    if (!std::isfinite(v) || rel > cfg.rel_tol) {
        throw QuadratureFailure("dephasing integral did not converge", v, err,
                                static_cast<int>(std::ceil((hi - lo) / width)));
    }
    if (error_estimate) {
        *error_estimate = rel;
    }
    return v;
}

DephasingReport dephasing_integral(const PulseTimeline &timeline, const NoiseSpectrum &spectrum,
                                   const QuadratureConfig &cfg) {
    double e1 = 0;
    double e0 = 0;
    double a = dephasing_integral(echo_sequence(timeline), spectrum, cfg, &e1);
    double a0 = dephasing_integral(bare_sequence(timeline.total_time), spectrum, cfg, &e0);
    return {a, a0, a0 > 0 ? a / a0 : 0.0, std::max(e1, e0)};
}

double ohmic_dephasing_closed_form(const EchoSequence &seq, const NoiseSpectrum &spectrum) {
    if (spectrum.kind != NoiseSpectrum::Kind::OhmicZeroTemp) {
        throw InvalidArgument("closed form applies only to the zero-temperature Ohmic spectrum");
    }
    double wc = spectrum.omega_c_over_g;
    double s = 0;
    size_t n = seq.times.size();
    for (size_t j = 0; j < n; j++) {
        for (size_t l = j + 1; l < n; l++) {
            double dt = seq.times[j] - seq.times[l];
            s += seq.coefficients[j] * seq.coefficients[l] * std::log1p(wc * wc * dt * dt);
        }
    }
    // Off-diagonal pairs appear twice in the double sum, each with weight -1/2.
    return spectrum.coupling_alpha / (2 * kPi) * (-s);
}

DephasingReport ohmic_dephasing_closed_form(const PulseTimeline &timeline, const NoiseSpectrum &spectrum) {
    double a = ohmic_dephasing_closed_form(echo_sequence(timeline), spectrum);
    double a0 = ohmic_dephasing_closed_form(bare_sequence(timeline.total_time), spectrum);
    return {a, a0, a0 > 0 ? a / a0 : 0.0, 0.0};
}

double calibrate_ohmic_alpha(int n_spins, double omega_c_over_g, double gamma_gdp) {
    double t = canonical_total_time(n_spins);
    double unit = ohmic_dephasing_closed_form(bare_sequence(t), NoiseSpectrum::ohmic(1.0, omega_c_over_g));
    return gamma_gdp * t / unit;
}

SearchResult permutation_search(int n_spins, const NoiseSpectrum &spectrum, int budget, uint64_t seed,
                                const QuadratureConfig &cfg) {
    check_even(n_spins);
    if (budget < 1) {
        throw InvalidArgument("permutation_search budget must be >= 1");
    }
    int count = n_spins / 2;
    bool ohmic = spectrum.kind == NoiseSpectrum::Kind::OhmicZeroTemp;
    double total_time = canonical_total_time(n_spins);
    double a0 = ohmic ? ohmic_dephasing_closed_form(bare_sequence(total_time), spectrum)
                      : dephasing_integral(bare_sequence(total_time), spectrum, cfg);
    auto ratio_of = [&](const std::vector<int> &ord) {
        EchoSequence seq = echo_sequence(build_timeline(n_spins, ord));
        double a = ohmic ? ohmic_dephasing_closed_form(seq, spectrum) : dephasing_integral(seq, spectrum, cfg);
        return a0 > 0 ? a / a0 : 0.0;
    };
    auto better = [](double r, const std::vector<int> &o, double best_r, const std::vector<int> &best_o) {
        return r < best_r || (r == best_r && o < best_o);
    };

    std::vector<int> best = identity_ordering(count);
    double best_ratio = ratio_of(best);
    double baseline = best_ratio;
    std::mt19937_64 rng(seed);
    int evals = 0;
    while (evals < budget) {
        std::vector<int> cur = random_permutation(count, rng);
        double cur_ratio = ratio_of(cur);
        evals++;
        bool improved = true;
        while (improved && evals < budget) {
            improved = false;
            for (int i = 0; i < count && !improved && evals < budget; i++) {
                for (int j = i + 1; j < count && evals < budget; j++) {
                    std::swap(cur[i], cur[j]);
                    double r = ratio_of(cur);
                    evals++;
                    if (r < cur_ratio) {
                        cur_ratio = r;
                        improved = true;
                        break;
                    }
                    std::swap(cur[i], cur[j]);
                }
            }
        }
        if (better(cur_ratio, cur, best_ratio, best)) {
            best = cur;
            best_ratio = cur_ratio;
        }
    }
    PulseTimeline tl = build_timeline(n_spins, best);
    DephasingReport rep = dephasing_integral(tl, spectrum, cfg);
    return {best, rep, baseline, evals};
}

DickeDensity apply_global_dephasing(const DickeDensity &rho, double a_of_t) {
    if (!(a_of_t >= 0)) {
        throw InvalidArgument("a_of_t must be non-negative");
    }
    CMatrix out = rho.matrix();
    for (Eigen::Index i = 0; i < out.rows(); i++) {
        for (Eigen::Index k = 0; k < out.cols(); k++) {
            double dm = static_cast<double>(i - k);
            out(i, k) *= std::exp(-dm * dm * a_of_t);
        }
    }
    return DickeDensity(rho.n_spins(), out);
}

}  // namespace gpgsim
