// Copyright 2026 The magiclab Authors.
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

#ifndef MAGICLAB_CLI_H_
#define MAGICLAB_CLI_H_

#include <iosfwd>
#include <string>
#include <vector>

namespace magiclab {

// Exit codes of the command-line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;  // semantic: not zero-sum, not regular
inline constexpr int kExitUsage = 2;    // bad flags, unreadable or malformed input

// Runs the tool on args (args[0] is the program name). Input named "-" is read
// from in. All diagnostics go to err.
int RunCli(const std::vector<std::string>& args, std::istream& in,
           std::ostream& out, std::ostream& err);

}  // namespace magiclab

#endif  // MAGICLAB_CLI_H_
