// Copyright 2026 The hdlab Authors
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

// Command-line entry point: check, denote, sample, demo povm.
//
// Exit codes: 0 success (all checks pass), 1 a check failed, 2 bad input.

#ifndef HDLAB_CLI_H
#define HDLAB_CLI_H

#include <iosfwd>
#include <string>
#include <vector>

namespace hdlab {

/// `args` excludes the program name.
int cli_main(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace hdlab

#endif
