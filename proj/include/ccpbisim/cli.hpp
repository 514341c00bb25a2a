// Copyright 2026 The ccpbisim Authors
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

#ifndef CCPBISIM_CLI_HPP_
#define CCPBISIM_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace ccpbisim {

inline constexpr int kExitOk = 0;
inline constexpr int kExitProgramError = 1;
inline constexpr int kExitResourceError = 2;

/// Runs the command line `args` (without the program name). Returns 0 when
/// every request was answered, 1 for unreadable or malformed input, 2 when a
/// configured bound was exhausted.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace ccpbisim

#endif  // CCPBISIM_CLI_HPP_
