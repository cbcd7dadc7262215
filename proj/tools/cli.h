// Copyright 2026 The schurtrace Authors
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

#ifndef SCHURTRACE_TOOLS_CLI_H
#define SCHURTRACE_TOOLS_CLI_H

#include <ostream>
#include <string>
#include <vector>

namespace schurtrace {

/// Entry point of the `schurtrace` command. `args` excludes the program name.
/// Returns the process exit status; errors go to `err` with a one-line reason.
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace schurtrace

#endif
