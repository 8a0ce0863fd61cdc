// Copyright 2026 The JobPulse Authors.
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

#ifndef JOBPULSE_CLI_HPP_
#define JOBPULSE_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace jobpulse {

// Runs the jobpulse command line. Returns 0 on success, 1 on validation or
// configuration errors and 2 on data contract violations. Diagnostics go to
// |err| one per line.
int RunCli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

int RunCli(int argc, char **argv);

}  // namespace jobpulse

#endif  // JOBPULSE_CLI_HPP_
