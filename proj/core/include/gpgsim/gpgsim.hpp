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

#ifndef GPGSIM_GPGSIM_HPP
#define GPGSIM_GPGSIM_HPP

#include "gpgsim/ancilla.hpp"
#include "gpgsim/decoupling.hpp"
#include "gpgsim/dicke.hpp"
#include "gpgsim/errors.hpp"
#include "gpgsim/full_register.hpp"
#include "gpgsim/gpg.hpp"
#include "gpgsim/grover.hpp"
#include "gpgsim/lindblad.hpp"
#include "gpgsim/metrology.hpp"
#include "gpgsim/noise.hpp"
#include "gpgsim/pipeline.hpp"
#include "gpgsim/synthesis.hpp"
#include "gpgsim/types.hpp"

namespace gpgsim {

inline const char *version() {
    return GPGSIM_VERSION_STRING;
}

}  // namespace gpgsim

#endif
