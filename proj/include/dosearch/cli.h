// Copyright 2026 The dosearch Authors
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

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dosearch {

/// Exit codes besides 0 and CLI11's own parse-error codes.
inline constexpr int kExitFailure = 1;
inline constexpr int kExitCheckFailed = 3;

/// Entry point for the `dosearch` tool. Machine-readable output goes to
/// `out`; diagnostics go to `err`.
int run_cli(const std::vector<std::string> &args, std::ostream &out,
            std::ostream &err);

}  // namespace dosearch
