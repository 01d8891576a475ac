// Copyright 2026 The qdep Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QDEP_TOOLS_COMMANDS_H
#define QDEP_TOOLS_COMMANDS_H

#include <iosfwd>
#include <string>
#include <vector>

namespace qdep::cli {

inline constexpr const char *kToolVersion = "0.1.0";

enum ExitCode : int {
    kOk = 0,
    kSoundnessFinding = 1,
    kInputError = 2,
    kCapacityError = 3,
};

/// Runs one command. `args` excludes the program name. The artifact goes to
/// `out` (or to --out), diagnostics to `err`.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace qdep::cli

#endif
