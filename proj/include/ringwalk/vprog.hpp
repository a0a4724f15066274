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

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "ringwalk/qcore.hpp"

namespace ringwalk::vprog {

/// Two-qubit cursor register. Encoded 00/01/10/11; the nonzero states cycle
/// Cycle -> HoldCycle -> Gate -> Cycle when the consumed swap bit is 0.
enum class Cursor : std::uint8_t { Empty = 0, Cycle = 1, HoldCycle = 2, Gate = 3 };

inline Cursor cycle_cursor(Cursor c) {
    switch (c) {
        case Cursor::Cycle: return Cursor::HoldCycle;
        case Cursor::HoldCycle: return Cursor::Gate;
        case Cursor::Gate: return Cursor::Cycle;
        case Cursor::Empty: return Cursor::Empty;
    }
    return Cursor::Empty;
}

/// A programming of the circuit V.
///
/// swap_bits / hadamard_bits are written in ring order (top of the region
/// first). The machine consumes one position per iteration: the implicit
/// appended |1> first, then swap_bits[0], swap_bits[1], ...; the final swap
/// bit is the stop marker and is never consumed as a cursor-control bit.
/// slot_to_wire is the initial placement of circuit wires into data slots;
/// the first gate of a compiled circuit fires on iteration one (the cursor
/// starts in the Gate state), so its operands are routed by this placement.
struct VProgram {
    int n = 0;
    std::vector<std::uint8_t> swap_bits;
    std::vector<std::uint8_t> hadamard_bits;
    int iterations = 0;
    std::vector<int> slot_to_wire;

    void validate() const;
};

/// Full machine state between iterations of V. The data statevector lives in
/// the slot basis; slot_to_label tracks which abstract label (= initial slot)
/// each slot currently carries.
struct VState {
    Cursor cursor = Cursor::Gate;
    std::vector<std::uint8_t> swap_program;      // front = upper-most qubit
    std::vector<std::uint8_t> hadamard_program;  // front = upper-most qubit
    qcore::Statevector data;
    std::vector<int> slot_to_label;
};

/// Builds the pre-iteration state for a program: cursor Gate, swap register
/// with the extra |1> on top (phase I cycles it to the bottom before the
/// first read), data permuted from wire order into slots.
VState initial_vstate(const VProgram& prog, const qcore::Statevector& wire_input);

/// One pass of V: phases I-V in order.
VState iterate_v(const VState& state);

/// Emits a programming whose simulation applies the circuit exactly.
/// Every H gate expands into Lambda(S)^3 followed by (I x H)Lambda(S) on a
/// fixed partner pair.
VProgram compile(const qcore::Circuit& circuit);

/// Runs `iterations` passes of V and returns the data register in wire order.
qcore::Statevector simulate_program(const VProgram& prog, const qcore::Statevector& input);

void save_program(const VProgram& prog, std::ostream& out);
VProgram load_program(std::istream& in);

}  // namespace ringwalk::vprog
