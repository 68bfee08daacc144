/*
   Copyright 2026 The expocalc Authors

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

#pragma once

#include <string>
#include <vector>

#include "json.hpp"

namespace expocalc::cli {

enum ExitCode { kOk = 0, kUsage = 1, kDomainError = 2, kParseError = 3 };

struct Diagnostic {
    std::string message;
    /// 1-based source position; 0 when the failure has none.
    int line = 0;
    int column = 0;
};

struct CommandResult {
    bool ok = false;
    int exit_code = kOk;
    nlohmann::json payload;
    std::vector<Diagnostic> diagnostics;
    /// Informational notes for stderr (order promotion and the like).
    std::vector<std::string> notices;
    /// Help or usage text for stderr.
    std::string usage;

    /// What the tool writes to stdout: the payload, or the error object.
    std::string stdout_text() const;
};

/// Runs one invocation; args excludes the program name.
CommandResult run(const std::vector<std::string>& args);

}  // namespace expocalc::cli
