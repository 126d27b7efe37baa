/*
   Copyright 2026 The polydet Authors

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

#ifndef POLYDET_CLI_HPP
#define POLYDET_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace polydet {

/// Exit codes: 0 success, 1 verification failure, 2 input error, 3 size-regime misuse.
enum ExitCode : int { kExitOk = 0, kExitVerifyFailed = 1, kExitInput = 2, kExitSize = 3 };

/// Runs one command line (args[0] is the program name) against the given streams.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace polydet

#endif
