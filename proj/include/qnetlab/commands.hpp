// Copyright 2026 The qnetlab authors
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

#ifndef QNETLAB_COMMANDS_HPP
#define QNETLAB_COMMANDS_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace qnet::cli {

// Exit codes: 0 all requested checks passed; 1 usage error; 2 missing or
// unreadable file; 3 parse error (circuit grammar or matrix JSON); 4 input
// violates state invariants; 5 a requested check failed its tolerance.
enum ExitCode {
  kOk = 0,
  kUsage = 1,
  kFile = 2,
  kParse = 3,
  kInvalidState = 4,
  kCheckFailed = 5,
};

/// Dispatches one command line (without the program name). The report
/// document goes to `out` unless --out redirects it to a file; diagnostics
/// go to `err`.
int run_command(const std::vector<std::string>& args, std::ostream& out,
                std::ostream& err);

}  // namespace qnet::cli

#endif  // QNETLAB_COMMANDS_HPP
