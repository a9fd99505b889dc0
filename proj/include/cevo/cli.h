// Copyright 2026 The CEVO Authors.
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

#ifndef CEVO_CLI_H_
#define CEVO_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace cevo::cli {

// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitDataError = 1;  // invalid lexicon, unknown class, ...
inline constexpr int kExitEnvError = 2;   // usage, I/O and parse failures

// Runs the `cevo` command line. `args` excludes the program name. Results go
// to `out` unless --out names a file; diagnostics go to `err`.
int run(const std::vector<std::string> &args, std::ostream &out,
        std::ostream &err);

}  // namespace cevo::cli

#endif  // CEVO_CLI_H_
