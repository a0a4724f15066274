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

#include "ringwalk/appendix.hpp"

#include <ostream>

namespace ringwalk::appendix {

vprog::VProgram program() {
    vprog::VProgram p;
    p.n = 3;
    p.swap_bits = {0, 0, 0, 1};
    p.hadamard_bits = {1, 0, 0, 0};
    p.iterations = 4;
    p.slot_to_wire = {1, 0, 2};
    return p;
}

qcore::Circuit equivalent_circuit() {
    qcore::Circuit c;
    c.n = 3;
    c.gates = {
        {qcore::GateKind::ControlledS, {1, 2}},
        {qcore::GateKind::H, {2}},
        {qcore::GateKind::ControlledS, {2, 0}},
    };
    return c;
}

const std::array<const char*, 48>& golden_rows() {
    static const std::array<const char*, 48> rows = {
        "....g|...|....\n00011|abc|1000",  // start state
        ".....|g..|....\n00011|abc|1000",
        ".....|.g.|....\n00011|bac|1000",
        ".....|..g|....\n00011|bac|1000",
        ".....|...|g...\n00011|bac|1000",
        ".....|...|.g..\n00011|bac|0100",
        ".....|...|..g.\n00011|bac|0010",
        ".....|...|...g\n00011|bac|0001",
        "g....|...|....\n00011|bac|0001",
        ".g...|...|....\n00011|bac|0001",
        "..g..|...|....\n00011|bac|0001",
        "...g.|...|....\n00101|bac|0001",
        "....g|...|....\n00110|bac|0001",
        ".....|c..|....\n00110|bac|0001",
        ".....|.c.|....\n00110|abc|0001",
        ".....|..c|....\n00110|acb|0001",
        ".....|...|c...\n00110|acb|0001",
        ".....|...|.c..\n00110|acb|0001",
        ".....|...|..c.\n00110|acb|0001",
        ".....|...|...c\n00110|acb|0010",
        "c....|...|....\n00110|acb|0010",
        ".c...|...|....\n00110|acb|0010",
        "..c..|...|....\n01010|acb|0010",
        "...c.|...|....\n01100|acb|0010",
        "....c|...|....\n01100|acb|0010",
        ".....|h..|....\n01100|acb|0010",
        ".....|.h.|....\n01100|cab|0010",
        ".....|..h|....\n01100|cab|0010",
        ".....|...|h...\n01100|cab|0010",
        ".....|...|.h..\n01100|cab|0010",
        ".....|...|..h.\n01100|cab|0100",
        ".....|...|...h\n01100|cab|0100",
        "h....|...|....\n01100|cab|0100",
        ".h...|...|....\n10100|cab|0100",
        "..h..|...|....\n11000|cab|0100",
        "...h.|...|....\n11000|cab|0100",
        "....h|...|....\n11000|cab|0100",
        ".....|g..|....\n11000|cab|0100",
        ".....|.g.|....\n11000|acb|0100",
        ".....|..g|....\n11000|acb|0100",
        ".....|...|g...\n11000|acb|0100",
        ".....|...|.g..\n11000|acb|1000",
        ".....|...|..g.\n11000|acb|1000",
        ".....|...|...g\n11000|acb|1000",
        "g....|...|....\n11000|acb|1000",
        ".g...|...|....\n11000|acb|1000",
        "..g..|...|....\n10100|acb|1000",
        "...g.|...|....\n10010|acb|1000",  // stop state
    };
    return rows;
}

const std::array<ExpectedEvent, 3>& golden_events() {
    using rules::GateEvent;
    static const std::array<ExpectedEvent, 3> evts = {{
        {2, {GateEvent::Kind::ControlledS, 0, 2}},   // CS a c
        {3, {GateEvent::Kind::Hadamard, 2, -1}},     // H c
        {38, {GateEvent::Kind::ControlledS, 2, 1}},  // CS c b
    }};
    return evts;
}

VerifyResult verify(std::ostream* log) {
    VerifyResult res;
    rules::Trajectory traj = rules::enumerate_trajectory(program());
    const auto& rows = golden_rows();
    res.total_steps = static_cast<int>(rows.size());
    if (traj.steps.size() != rows.size()) {
        if (log)
            *log << "trajectory has " << traj.steps.size() << " steps, expected " << rows.size()
                 << "\n";
        return res;
    }
    for (std::size_t t = 0; t < rows.size(); ++t) {
        const std::string got = ring::render(traj.steps[t]);
        if (got == rows[t]) {
            ++res.matched_steps;
        } else if (log) {
            *log << "step " << t << " mismatch:\n  expected:\n" << rows[t] << "\n  got:\n"
                 << got << "\n";
        }
    }
    std::vector<ExpectedEvent> got_events;
    for (std::size_t t = 0; t < traj.events.size(); ++t)
        if (traj.events[t]) got_events.push_back({static_cast<int>(t), *traj.events[t]});
    const auto& want = golden_events();
    res.events_match = got_events.size() == want.size();
    if (res.events_match)
        for (std::size_t k = 0; k < want.size(); ++k)
            res.events_match &= got_events[k].step == want[k].step &&
                                got_events[k].event == want[k].event;
    if (!res.events_match && log) {
        *log << "event list mismatch; got:";
        for (const auto& e : got_events) *log << " [step " << e.step << ": " << e.event.tag() << "]";
        *log << "\n";
    }
    return res;
}

}  // namespace ringwalk::appendix
