// Copyright 2026 The pmlang Authors
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

#ifndef PMLANG_TOOLS_CLI_H
#define PMLANG_TOOLS_CLI_H

#include <ostream>
#include <string>
#include <vector>

namespace pmlang {

/// Runs the command line `args` (without the program name). Returns 0 on
/// success or acceptance, 1 on rejection or verification failure and 2 on
/// usage errors.
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace pmlang

#endif
