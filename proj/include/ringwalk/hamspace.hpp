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

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "ringwalk/rules.hpp"

namespace ringwalk::hamspace {

/// Basis element of the reachable subspace: trajectory step t tensored with
/// an n-bit data string s (data site 0 = most significant bit).
/// Index layout: t * 2^n + s.
struct BasisState {
    int t = 0;
    std::uint32_t data = 0;
};

struct SparseEntry {
    std::size_t row = 0;
    std::size_t col = 0;
    std::complex<double> value;
};

/// The full g + g-dagger Hamiltonian restricted to the closure of
/// {start configuration} x {all data strings} under the transition rules.
struct RestrictedHamiltonian {
    int n = 0;
    int tbar = 0;
    std::size_t dim = 0;
    std::vector<SparseEntry> entries;  // both triangles, sorted by (row, col)
    rules::Trajectory trajectory;

    std::size_t index(int t, std::uint32_t s) const {
        return static_cast<std::size_t>(t) * (std::size_t{1} << n) + s;
    }
    BasisState basis(std::size_t idx) const {
        const std::uint32_t mask = (std::uint32_t{1} << n) - 1;
        return {static_cast<int>(idx >> n), static_cast<std::uint32_t>(idx) & mask};
    }
};

/// Builds the restricted Hamiltonian. n <= 4; throws CapacityError when the
/// closure would exceed `basis_cap` states.
RestrictedHamiltonian build_restricted(const vprog::VProgram& prog,
                                       std::size_t basis_cap = std::size_t{1} << 22);

/// Coordinate text export: "row col re im" per line, 0-indexed, sorted.
void export_coordinate(const RestrictedHamiltonian& h, std::ostream& out);

struct EquivalenceReport {
    int n = 0;
    int tbar = 0;
    std::size_t dim = 0;
    double max_deviation = 0.0;
    int worst_row_block = -1;
    int worst_col_block = -1;
    bool pass = false;  // max_deviation <= 1e-10
};

/// Verifies that in the basis {config_t x U_t|x>} the restriction equals
/// the effective walk matrix tensor identity, where U_t accumulates the
/// edge operators. Reports the largest elementwise deviation.
EquivalenceReport check_effective_equivalence(const vprog::VProgram& prog);

/// Site state for the diagonal penalty picture: cursor (4) x bit (2).
struct SitePattern {
    vprog::Cursor cursor = vprog::Cursor::Empty;
    std::uint8_t bit = 0;
    bool operator==(const SitePattern&) const = default;
};

inline int pattern_code(const SitePattern& p) { return (int(p.cursor) << 1) | p.bit; }

/// H_init as local two-site diagonal projectors: the anchor term
/// I - |desired,desired><...| on the pair left of the swap-data boundary
/// plus, for every other adjacent pair, the seven projectors penalizing a
/// wrong left site next to a desired right site.
struct PenaltyHamiltonian {
    ring::RingLayout layout;
    std::vector<SitePattern> desired;
    int anchor_site = 0;  // pair (anchor_site, anchor_site + 1)
    bool anchor_enabled = true;

    /// Number of violated projectors for a full glyph assignment
    /// (site codes in [0, 8), code = cursor*2 + bit).
    int penalty(const std::vector<std::uint8_t>& codes) const;
    std::vector<std::uint8_t> desired_codes() const;
};

/// Builds H_init for a compiled program and a classical data input string
/// (bit for each data site, site 0 = most significant bit of data_input).
PenaltyHamiltonian build_hinit(const vprog::VProgram& prog, std::uint32_t data_input);

struct KernelReport {
    std::uint64_t count = 0;
    std::optional<std::vector<std::uint8_t>> witness;  // lexicographically first
};

/// Exhaustive 8^K scan. Throws CapacityError for K > 8.
KernelReport count_ground_configs(const PenaltyHamiltonian& h);

/// Trace of the product of per-edge 0/1 compatibility matrices; any K.
std::uint64_t count_ground_configs_transfer(const PenaltyHamiltonian& h);

}  // namespace ringwalk::hamspace
