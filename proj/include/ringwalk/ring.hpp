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

#include <string>
#include <vector>

#include "ringwalk/vprog.hpp"

namespace ringwalk::ring {

using vprog::Cursor;

enum class Region { Swap, Data, Hadamard };

/// Site geometry of the ring: swap region sites [0, swap_len), data sites
/// [swap_len, swap_len + data_len), Hadamard sites up to K-1. The three
/// boundary markers sit after each region; they are layout attributes, not
/// stored glyphs.
struct RingLayout {
    int swap_len = 0;      // program length + 1 (the extra |1> site)
    int data_len = 0;      // n
    int hadamard_len = 0;  // program length

    int ring_size() const { return swap_len + data_len + hadamard_len; }
    int data_begin() const { return swap_len; }
    int hadamard_begin() const { return swap_len + data_len; }
    Region region_of(int site) const;
    bool operator==(const RingLayout&) const = default;
};

/// Classical glyph assignment: one cursor state per site plus the program/
/// data line. Program sites hold bits; data sites hold permutation labels
/// (0..n-1, rendered 'a'..). The quantum data state is not stored here.
struct RingConfiguration {
    RingLayout layout;
    std::vector<Cursor> cursor;
    std::vector<std::uint8_t> cell;

    /// Index of the single non-empty cursor site. Throws IntegrityError if
    /// the single-active-cursor invariant is broken.
    int active_site() const;
    bool operator==(const RingConfiguration&) const = default;
};

RingLayout build_layout(const vprog::VProgram& prog);

/// The start state: cursor Gate over the last swap site, swap bits =
/// program bits plus the appended |1>, data labels in site order.
RingConfiguration initial_configuration(const vprog::VProgram& prog);

/// Two-line text form. Cursor line: '.'=empty 'c'=cycle 'h'=hold-cycle
/// 'g'=gate; bit line: '0'/'1' and data labels 'a'..'z'; '|' at the two
/// in-line region boundaries on both lines.
std::string render(const RingConfiguration& config);

RingConfiguration parse(const std::string& text);

}  // namespace ringwalk::ring
