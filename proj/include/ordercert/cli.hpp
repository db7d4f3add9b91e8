/*
   Copyright 2026 The ordercert Authors

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

#ifndef ORDERCERT_CLI_HPP
#define ORDERCERT_CLI_HPP

#include <ostream>
#include <string>

namespace ordercert {

inline constexpr const char* kToolName = "ordercert";
inline constexpr const char* kVersion = "0.1.0";

/// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInternal = 1;
inline constexpr int kExitInvalid = 2;

/// Round to 12 significant digits, the precision of every emitted float.
double round12(double x);
/// "%.12g" rendering.
std::string format12(double x);

/// Entry point of the command-line tool, with injectable streams.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ordercert

#endif
