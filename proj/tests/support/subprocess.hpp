// Copyright (c) the metacheck contributors
// SPDX-License-Identifier: Apache-2.0

#ifndef METACHECK_TESTS_SUPPORT_SUBPROCESS_HPP
#define METACHECK_TESTS_SUPPORT_SUBPROCESS_HPP

#include <array>
#include <cstdio>
#include <stdexcept>
#include <string>
#include <vector>

#include <sys/wait.h>

namespace testsupport {

struct CommandResult {
    int exitCode = -1;
    std::string output; // captured stdout (plus stderr when merged)
};

inline std::string shellQuote(const std::string& arg) {
    std::string quoted = "'";
    for (char c : arg) {
        if (c == '\'') {
            quoted += "'\\''";
        } else {
            quoted += c;
        }
    }
    quoted += "'";
    return quoted;
}

/// Builds a shell command from argv-style pieces, quoting each one.
inline std::string shellCommand(const std::vector<std::string>& argv) {
    std::string command;
    for (const std::string& arg : argv) {
        if (!command.empty()) {
            command += ' ';
        }
        command += shellQuote(arg);
    }
    return command;
}

/// Runs a shell command, capturing stdout. stderr is discarded unless
/// merged (tests that assert on diagnostics merge it; tests that assert
/// byte-exact stdout must not).
inline CommandResult runCommand(const std::string& command, bool mergeStderr = false) {
    const std::string full = command + (mergeStderr ? " 2>&1" : " 2>/dev/null");
    FILE* pipe = popen(full.c_str(), "r");
    if (pipe == nullptr) {
        throw std::runtime_error("popen failed for: " + full);
    }
    CommandResult result;
    std::array<char, 4096> buffer{};
    std::size_t got = 0;
    while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) {
        result.output.append(buffer.data(), got);
    }
    const int status = pclose(pipe);
    result.exitCode = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

} // namespace testsupport

#endif
