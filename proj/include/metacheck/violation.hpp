// Copyright (c) the metacheck contributors
// SPDX-License-Identifier: Apache-2.0

#ifndef METACHECK_VIOLATION_HPP
#define METACHECK_VIOLATION_HPP

#include <string>
#include <string_view>
#include <vector>

namespace metacheck {

enum class ViolationCode {
    WF_CYCLE,
    WF_SELF_GEN,
    WF_DUP_EDGE,
    WF_OVERLAP_ARITY,
    SEM_CONFORMANCE,
    SEM_IDENTITY,
    SEM_DISJOINT,
    SEM_ABSTRACT,
};

std::string_view toString(ViolationCode code);

/// One broken constraint. `subjects` holds the identifiers the code
/// prescribes, in the code's fixed order; subject positions that are
/// unordered pairs are stored sorted.
struct Violation {
    ViolationCode code;
    std::vector<std::string> subjects;
    std::string message;

    friend bool operator==(const Violation&, const Violation&) = default;
};

/// Report order: (rendered code, subjects, message).
bool operator<(const Violation& a, const Violation& b);

/// "CODE subject1 subject2 ...: message"
std::string renderViolation(const Violation& v);

} // namespace metacheck

#endif
