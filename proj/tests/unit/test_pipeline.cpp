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

#include <gtest/gtest.h>

#include "gpgsim/errors.hpp"
#include "gpgsim/grover.hpp"
#include "gpgsim/metrology.hpp"
#include "gpgsim/pipeline.hpp"

using namespace gpgsim;

TEST(pipeline, noiseless_matches_pure_path) {
    for (int n : {10, 30}) {
        auto noisy = noisy_prepare_dicke(n, 0.0);
        auto pure = prepare_dicke(n, 0.0);
        EXPECT_NEAR(noisy.fidelity, pure.fidelity, 1e-10) << n;
        EXPECT_NEAR(noisy.state.fidelity(pure.state), 1.0, 1e-10) << n;
    }
    auto off = noisy_prepare_dicke(12, 2.0);
    EXPECT_NEAR(off.fidelity, prepare_dicke(12, 2.0).fidelity, 1e-10);
}

TEST(pipeline, fidelity_monotone_in_decay) {
    double prev = 1.0;
    for (double k : {0.0, 0.002, 0.01, 0.03}) {
        double f = noisy_prepare_dicke(20, 0.0, {{k}, 0.0}).fidelity;
        EXPECT_LT(f, prev + 1e-12) << k;
        prev = f;
    }
}

TEST(pipeline, fidelity_monotone_in_dephasing) {
    double prev = 1.0;
    for (double a : {0.0, 1e-5, 1e-4, 1e-3}) {
        auto r = noisy_prepare_dicke(20, 0.0, {{0.0}, a});
        EXPECT_LT(r.fidelity, prev + 1e-12) << a;
        EXPECT_NEAR(r.state.matrix().trace().real(), 1.0, 1e-10);
        EXPECT_GT(r.state.min_eigenvalue(), -1e-10);
        prev = r.fidelity;
    }
}

TEST(pipeline, precision_degrades_with_decay) {
    double prev = 0.0;
    for (double k : {0.0, 0.001, 0.005}) {
        auto r = noisy_prepare_dicke(40, 0.0, {{k}, 1e-4});
        double v = precision_sq_optimal(r.state).delta_eta_sq;
        EXPECT_GT(v, prev) << k;
        EXPECT_GE(v, crb(40));
        prev = v;
    }
}

TEST(pipeline, degenerate_and_invalid) {
    EXPECT_NEAR(noisy_prepare_dicke(4, -2.0, {{0.1}, 0.01}).fidelity, 1.0, 1e-12);
    EXPECT_THROW(noisy_prepare_dicke(4, 0.0, {{-0.1}, 0.0}), InvalidArgument);
    EXPECT_THROW(noisy_prepare_dicke(4, 0.0, {{0.0}, -1.0}), InvalidArgument);
    EXPECT_THROW(noisy_prepare_dicke(4, 0.5), InvalidArgument);
}
