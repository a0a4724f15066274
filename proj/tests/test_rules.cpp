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

#include <doctest.h>

#include <sstream>

#include "ringwalk/appendix.hpp"
#include "test_util.hpp"

using namespace ringwalk;
using rules::GateEvent;
using rules::RuleKind;
using rules::RuleTable;
using vprog::Cursor;

TEST_CASE("the 48-step worked example reproduces glyph for glyph") {
    std::ostringstream log;
    auto res = appendix::verify(&log);
    INFO(log.str());
    CHECK(res.matched_steps == 48);
    CHECK(res.events_match);
}

TEST_CASE("the worked example's event list composes to its circuit") {
    auto prog = appendix::program();
    auto traj = rules::enumerate_trajectory(prog);
    Eigen::MatrixXcd from_events = testutil::events_unitary(traj, prog);
    Eigen::MatrixXcd direct = qcore::circuit_unitary(appendix::equivalent_circuit());
    CHECK(testutil::max_abs_diff(from_events, direct) < 1e-12);
}

TEST_CASE("rule bundles carry the boundary behaviors") {
    auto lay = ring::build_layout(appendix::program());
    RuleTable table = RuleTable::build(lay);

    // Swap-data boundary: cycling over a 0, pass-through over a 1.
    auto cfg = ring::initial_configuration(appendix::program());
    auto step = table.successor(cfg);  // over the appended 1
    REQUIRE(step);
    CHECK(step->config.cursor[lay.data_begin()] == Cursor::Gate);

    auto cycled = cfg;
    cycled.cell[lay.swap_len - 1] = 0;
    auto step0 = table.successor(cycled);
    REQUIRE(step0);
    CHECK(step0->config.cursor[lay.data_begin()] == Cursor::Cycle);  // Gate -> Cycle

    // Data-Hadamard boundary with cursor Gate over Hadamard bit 1 fires H.
    auto at_dh = cfg;
    at_dh.cursor.assign(lay.ring_size(), Cursor::Empty);
    at_dh.cursor[lay.hadamard_begin() - 1] = Cursor::Gate;
    at_dh.cell[lay.hadamard_begin()] = 1;
    auto hstep = table.successor(at_dh);
    REQUIRE(hstep);
    REQUIRE(hstep->event);
    CHECK(hstep->event->kind == GateEvent::Kind::Hadamard);
    at_dh.cell[lay.hadamard_begin()] = 0;
    auto nostep = table.successor(at_dh);
    REQUIRE(nostep);
    CHECK(!nostep->event);
}

TEST_CASE("successor walks the worked example and stops at the stop state") {
    auto prog = appendix::program();
    auto lay = ring::build_layout(prog);
    RuleTable table = RuleTable::build(lay);
    const auto& rows = appendix::golden_rows();

    auto cfg = ring::parse(rows[0]);
    auto s1 = table.successor(cfg);
    REQUIRE(s1);
    CHECK(ring::render(s1->config) == rows[1]);

    auto s2 = table.successor(s1->config);
    REQUIRE(s2);
    CHECK(ring::render(s2->config) == rows[2]);

    auto last = ring::parse(rows[47]);
    CHECK(!table.successor(last));
    bool stop = false;
    for (const auto* d : table.matching_diagonals(last)) stop |= d->kind == RuleKind::StopProjector;
    CHECK(stop);
}

TEST_CASE("predecessor inverts successor along the whole trace; the start has none") {
    auto prog = appendix::program();
    auto traj = rules::enumerate_trajectory(prog);
    RuleTable table = RuleTable::build(traj.steps.front().layout);
    CHECK(!table.predecessor(traj.steps.front()));
    bool start_projected = false;
    for (const auto* d : table.matching_diagonals(traj.steps.front()))
        start_projected |= d->kind == RuleKind::StartProjector;
    CHECK(start_projected);
    for (std::size_t t = 1; t < traj.steps.size(); ++t) {
        auto back = table.predecessor(traj.steps[t]);
        REQUIRE(back);
        CHECK(back->config == traj.steps[t - 1]);
        CHECK(back->event == traj.events[t - 1]);
    }
}

TEST_CASE("exactly one forward and one backward rule match at interior steps") {
    auto traj = rules::enumerate_trajectory(appendix::program());
    RuleTable table = RuleTable::build(traj.steps.front().layout);
    for (std::size_t t = 0; t < traj.steps.size(); ++t) {
        const int fwd = table.forward_match_count(traj.steps[t]);
        const int bwd = table.backward_match_count(traj.steps[t]);
        CHECK(fwd == (t + 1 < traj.steps.size() ? 1 : 0));
        CHECK(bwd == (t > 0 ? 1 : 0));
    }
}

TEST_CASE("program bits are conserved along the trajectory") {
    auto traj = rules::enumerate_trajectory(appendix::program());
    auto ones = [](const ring::RingConfiguration& c) {
        int count = 0;
        for (int s = 0; s < c.layout.ring_size(); ++s)
            if (c.layout.region_of(s) != ring::Region::Data) count += c.cell[s];
        return count;
    };
    const int want = ones(traj.steps.front());
    for (const auto& c : traj.steps) CHECK(ones(c) == want);
}

TEST_CASE("a single-gate circuit ends on the second stop state") {
    qcore::Circuit c;
    c.n = 2;
    c.gates = {{qcore::GateKind::ControlledS, {0, 1}}};
    auto prog = vprog::compile(c);
    auto traj = rules::enumerate_trajectory(prog);
    CHECK(traj.stop == rules::StopKind::Secondary);
    CHECK(traj.tbar() == 4);  // K - 1 for a one-loop program
    REQUIRE(traj.events.size() == 4);
    int events = 0;
    for (const auto& e : traj.events) events += e.has_value();
    CHECK(events == 1);
}

TEST_CASE("multi-gate compiled programs end on the primary stop state") {
    std::mt19937_64 rng(211);
    auto circuit = testutil::random_circuit(rng, 2, 3, 3, 5);
    auto traj = rules::enumerate_trajectory(vprog::compile(circuit));
    CHECK(traj.stop == rules::StopKind::Primary);
}

TEST_CASE("trajectory length follows loops times ring size minus one") {
    auto prog = appendix::program();
    auto lay = ring::build_layout(prog);
    auto traj = rules::enumerate_trajectory(prog);
    CHECK(traj.tbar() == prog.iterations * lay.ring_size() - 1);
}

TEST_CASE("the step cap trips as a runaway error") {
    CHECK_THROWS_AS(rules::enumerate_trajectory(appendix::program(), 10), RunawayError);
}

TEST_CASE("trajectory dump carries step indices, glyphs and event tags") {
    auto traj = rules::enumerate_trajectory(appendix::program());
    const std::string dump = rules::dump_trajectory(traj);
    CHECK(dump.find("step 0\n....g|...|....\n00011|abc|1000\n") != std::string::npos);
    CHECK(dump.find("step 2 CS a c\n") != std::string::npos);
    CHECK(dump.find("step 3 H c\n") != std::string::npos);
    CHECK(dump.find("step 38 CS c b\n") != std::string::npos);
}

TEST_CASE("gate events compose to the source circuit on random programs") {
    std::mt19937_64 rng(223);
    for (int trial = 0; trial < 20; ++trial) {
        auto circuit = testutil::random_circuit(rng);
        auto prog = vprog::compile(circuit);
        auto traj = rules::enumerate_trajectory(prog);
        CHECK(testutil::max_abs_diff(testutil::events_unitary(traj, prog),
                                     qcore::circuit_unitary(circuit)) < 1e-10);
    }
}
