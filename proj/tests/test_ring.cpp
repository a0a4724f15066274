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

#include <random>

#include "ringwalk/appendix.hpp"

using namespace ringwalk;
using ring::RingConfiguration;
using ring::RingLayout;
using vprog::Cursor;

TEST_CASE("the worked example lays out as swap 5 | data 3 | Hadamard 4") {
    auto lay = ring::build_layout(appendix::program());
    CHECK(lay.swap_len == 5);
    CHECK(lay.data_len == 3);
    CHECK(lay.hadamard_len == 4);
    CHECK(lay.ring_size() == 12);
}

TEST_CASE("the swap region is one site longer than the program") {
    qcore::Circuit c;
    c.n = 2;
    c.gates = {{qcore::GateKind::H, {0}}};
    auto prog = vprog::compile(c);
    auto lay = ring::build_layout(prog);
    CHECK(lay.swap_len == static_cast<int>(prog.swap_bits.size()) + 1);
    CHECK(lay.hadamard_len == static_cast<int>(prog.hadamard_bits.size()));
    CHECK(lay.data_len == 2);
}

TEST_CASE("empty programs have no Hadamard region and are rejected") {
    vprog::VProgram empty;
    empty.n = 2;
    empty.slot_to_wire = {0, 1};
    CHECK_THROWS_AS(ring::build_layout(empty), DomainError);
}

TEST_CASE("the start configuration matches the worked example's first row") {
    auto cfg = ring::initial_configuration(appendix::program());
    CHECK(ring::render(cfg) == "....g|...|....\n00011|abc|1000");
    CHECK(cfg.active_site() == 4);
}

TEST_CASE("compiled programs place 1 on the penultimate swap site") {
    std::mt19937_64 rng(7);
    qcore::Circuit c;
    c.n = 3;
    c.gates = {{qcore::GateKind::ControlledS, {0, 1}}, {qcore::GateKind::H, {2}}};
    auto prog = vprog::compile(c);
    auto cfg = ring::initial_configuration(prog);
    const int last = cfg.layout.swap_len - 1;
    CHECK(cfg.cell[last] == 1);      // appended |1>
    CHECK(cfg.cell[last - 1] == 1);  // stop marker
    CHECK(cfg.cursor[last] == Cursor::Gate);
}

namespace {

RingConfiguration random_config(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> swap_len(2, 6), data_len(2, 5), had_len(1, 5);
    RingConfiguration cfg;
    cfg.layout = {swap_len(rng), data_len(rng), had_len(rng)};
    const int K = cfg.layout.ring_size();
    cfg.cursor.assign(K, Cursor::Empty);
    std::uniform_int_distribution<int> site(0, K - 1), cur(1, 3), bit(0, 1);
    cfg.cursor[site(rng)] = static_cast<Cursor>(cur(rng));
    for (int i = 0; i < K; ++i)
        cfg.cell.push_back(static_cast<std::uint8_t>(bit(rng)));
    std::vector<std::uint8_t> labels(cfg.layout.data_len);
    std::iota(labels.begin(), labels.end(), 0);
    std::shuffle(labels.begin(), labels.end(), rng);
    for (int d = 0; d < cfg.layout.data_len; ++d) cfg.cell[cfg.layout.data_begin() + d] = labels[d];
    return cfg;
}

}  // namespace

TEST_CASE("render and parse round-trip on random configurations") {
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 1000; ++trial) {
        auto cfg = random_config(rng);
        auto back = ring::parse(ring::render(cfg));
        CHECK(back == cfg);
    }
}

TEST_CASE("parse rejects malformed text") {
    CHECK_THROWS_AS(ring::parse("....g|...|....\n00011|abc|100"), ParseError);   // ragged
    CHECK_THROWS_AS(ring::parse("..g.g|...|....\n00011|abc|1000"), ParseError);  // two cursors
    CHECK_THROWS_AS(ring::parse(".....|...|....\n00011|abc|1000"), ParseError);  // no cursor
    CHECK_THROWS_AS(ring::parse("....g|...|....\n00011|aac|1000"), ParseError);  // label repeat
    CHECK_THROWS_AS(ring::parse("....g|...|....\n00011|ab2|1000"), ParseError);  // bad label
    CHECK_THROWS_AS(ring::parse("....g|..x|....\n00011|abc|1000"), ParseError);  // bad glyph
    CHECK_THROWS_AS(ring::parse("....g|...\n00011|abc"), ParseError);            // one boundary
    CHECK_THROWS_AS(ring::parse("....g.|..|....\n00011|abc|1000"), ParseError);  // bars misaligned
}
