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

#include "test_util.hpp"

using namespace ringwalk;
using qcore::GateKind;
using qcore::Statevector;
using vprog::Cursor;
using vprog::VProgram;
using vprog::VState;

namespace {

VState plain_state(int n, Cursor cursor, std::vector<std::uint8_t> swap_reg,
                   std::vector<std::uint8_t> had_reg) {
    VState st;
    st.cursor = cursor;
    st.swap_program = std::move(swap_reg);
    st.hadamard_program = std::move(had_reg);
    st.data = Statevector::computational_basis(n, 0);
    st.slot_to_label.resize(n);
    std::iota(st.slot_to_label.begin(), st.slot_to_label.end(), 0);
    return st;
}

}  // namespace

TEST_CASE("behavior 1 iteration cycles every region and holds the cursor") {
    // Top swap bit 1: after phase I it sits at the bottom and no cursor
    // cycle happens; the data and both programs cycle up once.
    auto st = plain_state(3, Cursor::Cycle, {1, 0, 0}, {1, 0, 0});
    auto out = vprog::iterate_v(st);
    CHECK(out.cursor == Cursor::Cycle);
    CHECK(out.swap_program == std::vector<std::uint8_t>{0, 0, 1});
    CHECK(out.hadamard_program == std::vector<std::uint8_t>{0, 0, 1});
    CHECK(out.slot_to_label == std::vector<int>{1, 2, 0});
}

TEST_CASE("behavior 3 iteration cycles the cursor to Gate and fires the pair") {
    // Cursor HoldCycle over a 0 top swap bit: becomes Gate, all-but-last
    // data cycle, controlled-S between the last two slots, H on the last
    // slot when the top Hadamard bit is 1.
    auto st = plain_state(3, Cursor::HoldCycle, {0, 1, 1}, {1, 0, 0});
    st.data = Statevector::computational_basis(3, 0b011);  // slots (0,1,1)
    auto out = vprog::iterate_v(st);
    CHECK(out.cursor == Cursor::Gate);
    CHECK(out.slot_to_label == std::vector<int>{1, 0, 2});
    // Data (0,1,1) -> phase III -> (1,0,1) -> CS phases nothing here is
    // wrong: slots (n-2,n-1) = (0,1) -> no phase; H on the last slot.
    // Check against the explicit gate sequence.
    auto want = Statevector::computational_basis(3, 0b011);
    qcore::Gate sigma{GateKind::SigmaCascade, {0, 1}};
    want = qcore::apply_gate(want, sigma);
    want = qcore::apply_gate(want, {GateKind::ControlledS, {1, 2}});
    want = qcore::apply_gate(want, {GateKind::H, {2}});
    for (std::size_t b = 0; b < want.amps.size(); ++b)
        CHECK(std::abs(out.data.amps[b] - want.amps[b]) == 0.0);
}

TEST_CASE("phase II is a no-op when the consumed bit is 1") {
    auto st = plain_state(2, Cursor::Cycle, {1, 0}, {0, 0});
    auto out = vprog::iterate_v(st);
    CHECK(out.cursor == Cursor::Cycle);
}

TEST_CASE("compile on the empty circuit is the identity program") {
    qcore::Circuit c;
    c.n = 3;
    auto prog = vprog::compile(c);
    CHECK(prog.iterations == 0);
    CHECK(prog.swap_bits.empty());
    CHECK(prog.hadamard_bits.empty());
    std::mt19937_64 rng(5);
    auto v = testutil::random_state(rng, 3);
    auto out = vprog::simulate_program(prog, v);
    for (std::size_t b = 0; b < v.amps.size(); ++b) CHECK(std::abs(out.amps[b] - v.amps[b]) == 0.0);
}

TEST_CASE("single controlled-S on the last two wires compiles to the one-bit program") {
    qcore::Circuit c;
    c.n = 3;
    c.gates = {{GateKind::ControlledS, {1, 2}}};
    auto prog = vprog::compile(c);
    CHECK(prog.iterations == 1);
    CHECK(prog.swap_bits == std::vector<std::uint8_t>{1});
    CHECK(prog.hadamard_bits == std::vector<std::uint8_t>{0});

    auto in = Statevector::computational_basis(3, 0b011);
    auto out = vprog::simulate_program(prog, in);
    CHECK(std::abs(out.amps[0b011] - std::complex<double>(0.0, 1.0)) < 1e-12);
}

TEST_CASE("compiled programs simulate their circuits exactly") {
    std::mt19937_64 rng(101);
    for (int trial = 0; trial < 100; ++trial) {
        auto c = testutil::random_circuit(rng);
        auto prog = vprog::compile(c);
        Eigen::MatrixXcd u = qcore::circuit_unitary(c);
        for (std::uint64_t b = 0; b < (std::uint64_t{1} << c.n); ++b) {
            auto out = vprog::simulate_program(prog, Statevector::computational_basis(c.n, b));
            double dev = 0.0;
            for (std::uint64_t r = 0; r < out.amps.size(); ++r)
                dev = std::max(dev, std::abs(out.amps[r] - u(r, b)));
            CHECK(dev < 1e-10);
        }
    }
}

TEST_CASE("program length stays within the linear bound") {
    std::mt19937_64 rng(131);
    for (int trial = 0; trial < 100; ++trial) {
        auto c = testutil::random_circuit(rng);
        auto prog = vprog::compile(c);
        const int bound = 4 * c.n * (c.t_controlled_s() + 2 * c.t_hadamard());
        CHECK(static_cast<int>(prog.swap_bits.size()) <= bound);
        CHECK(prog.swap_bits.size() == prog.hadamard_bits.size());
        CHECK(prog.iterations == static_cast<int>(prog.swap_bits.size()));
    }
}

TEST_CASE("program registers stay classical bit strings through every iteration") {
    std::mt19937_64 rng(137);
    auto c = testutil::random_circuit(rng, 3, 3, 4, 4);
    auto prog = vprog::compile(c);
    auto st = vprog::initial_vstate(prog, Statevector::computational_basis(3, 5));
    for (int it = 0; it < prog.iterations; ++it) {
        st = vprog::iterate_v(st);
        for (auto b : st.swap_program) CHECK(b <= 1);
        for (auto b : st.hadamard_program) CHECK(b <= 1);
    }
}

TEST_CASE("the cursor visits Cycle, HoldCycle, Gate once per gate block") {
    qcore::Circuit c;
    c.n = 4;
    c.gates = {{GateKind::ControlledS, {0, 2}},
               {GateKind::ControlledS, {3, 1}},
               {GateKind::ControlledS, {1, 2}}};
    auto prog = vprog::compile(c);
    auto st = vprog::initial_vstate(prog, Statevector::computational_basis(4, 0));
    std::vector<Cursor> seen{st.cursor};
    for (int it = 0; it < prog.iterations; ++it) {
        st = vprog::iterate_v(st);
        seen.push_back(st.cursor);
    }
    // Runs of equal cursor values: Gate, then per block Cycle+, HoldCycle+, Gate.
    std::vector<Cursor> runs;
    for (auto cur : seen)
        if (runs.empty() || runs.back() != cur) runs.push_back(cur);
    REQUIRE(runs.size() == 7);
    CHECK(runs[0] == Cursor::Gate);
    for (int block = 0; block < 2; ++block) {
        CHECK(runs[1 + 3 * block] == Cursor::Cycle);
        CHECK(runs[2 + 3 * block] == Cursor::HoldCycle);
        CHECK(runs[3 + 3 * block] == Cursor::Gate);
    }
}

TEST_CASE("compile rejects bad inputs") {
    qcore::Circuit c;
    c.n = 1;
    c.gates = {{GateKind::H, {0}}};
    CHECK_THROWS_AS(vprog::compile(c), DomainError);
    qcore::Circuit bad;
    bad.n = 2;
    bad.gates = {{GateKind::Swap, {0, 1}}};
    CHECK_THROWS_AS(vprog::compile(bad), DomainError);
}

TEST_CASE("program files round-trip") {
    std::mt19937_64 rng(149);
    auto prog = vprog::compile(testutil::random_circuit(rng));
    std::stringstream ss;
    vprog::save_program(prog, ss);
    auto back = vprog::load_program(ss);
    CHECK(back.n == prog.n);
    CHECK(back.swap_bits == prog.swap_bits);
    CHECK(back.hadamard_bits == prog.hadamard_bits);
    CHECK(back.iterations == prog.iterations);
    CHECK(back.slot_to_wire == prog.slot_to_wire);

    std::stringstream junk("not a program\n");
    CHECK_THROWS_AS(vprog::load_program(junk), ParseError);
}
