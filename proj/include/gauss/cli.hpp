// Copyright 2026 The gausscheck Authors
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
#include <vector>

namespace gauss::cli {

// Exhaustive commands refuse sizes above this.
inline constexpr int kMaxExhaustiveSize = 13;

enum ExitCode : int { kOk = 0, kInputError = 1, kResourceLimit = 2 };

// args excludes the program name. Diagrams are read from `in` unless --input
// names a file.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace gauss::cli
