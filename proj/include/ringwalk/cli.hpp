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

#include <iosfwd>
#include <string>

#include "ringwalk/qcore.hpp"

namespace ringwalk::cli {

inline constexpr const char* kVersion = "ringwalk 1.0.0";

/// Circuit text format: "qubits <n>" then one gate per line, "H <q>" or
/// "CS <control> <target>", 0-indexed; '#' comments and blank lines ignored.
qcore::Circuit parse_circuit(std::istream& in);

/// Runs a subcommand. Exit codes: 0 success, 1 verification failure,
/// 2 usage or input error.
int dispatch(int argc, const char* const* argv);

}  // namespace ringwalk::cli
