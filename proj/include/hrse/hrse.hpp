// Copyright 2026 The hrse-oracle Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include "hrse/asdt.hpp"
#include "hrse/baselines/optimal.hpp"
#include "hrse/baselines/wcycle.hpp"
#include "hrse/bench/bench.hpp"
#include "hrse/boolsys/anf.hpp"
#include "hrse/boolsys/encode.hpp"
#include "hrse/boolsys/solve.hpp"
#include "hrse/circuit/circuit.hpp"
#include "hrse/circuit/decompose.hpp"
#include "hrse/circuit/qasm.hpp"
#include "hrse/core/cost.hpp"
#include "hrse/core/cost_expr.hpp"
#include "hrse/core/error.hpp"
#include "hrse/core/metrics.hpp"
#include "hrse/core/serialize.hpp"
#include "hrse/core/tree.hpp"
#include "hrse/core/validate.hpp"
#include "hrse/sim/basis.hpp"
#include "hrse/sim/grover.hpp"
#include "hrse/sim/statevector.hpp"
#include "hrse/sim/verify.hpp"
#include "hrse/synth/layout.hpp"
#include "hrse/synth/oracle.hpp"
