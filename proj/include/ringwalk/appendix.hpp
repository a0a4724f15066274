// Copyright 2026 The ringwalk authors
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

#include <array>
#include <iosfwd>

#include "ringwalk/rules.hpp"

namespace ringwalk::appendix {

/// The worked 48-step example: a three-qubit, three-gate run on a
/// twelve-site ring (swap 5 | data 3 | Hadamard 4). Labels: a = the qubit
/// starting at data site 0, etc.
vprog::VProgram program();

/// The three-gate circuit the example executes: CS(1,2), H(2), CS(2,0).
qcore::Circuit equivalent_circuit();

/// Expected two-line glyph text of every step.
const std::array<const char*, 48>& golden_rows();

struct ExpectedEvent {
    int step;  // edge step -> step+1
    rules::GateEvent event;
};
const std::array<ExpectedEvent, 3>& golden_events();

struct VerifyResult {
    int matched_steps = 0;
    int total_steps = 48;
    bool events_match = false;
    bool ok() const { return matched_steps == total_steps && events_match; }
};

/// Enumerates the trajectory and compares it step by step against the
/// golden rows and event list. Mismatch details go to `log` when given.
VerifyResult verify(std::ostream* log = nullptr);

}  // namespace ringwalk::appendix
