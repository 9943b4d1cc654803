/*
   Copyright 2026 The infmod Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef INFMOD_CLI_CLI_HPP
#define INFMOD_CLI_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace infmod::cli {

enum ExitCode : int {
    kOk = 0,
    kParseError = 1,
    kPreconditionError = 2,
    kVerificationError = 3,
};

/// Runs the command line `args` (without the program name). The result
/// document goes to `out` (or the --output file), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace infmod::cli

#endif  // INFMOD_CLI_CLI_HPP
