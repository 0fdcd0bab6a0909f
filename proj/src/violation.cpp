// Copyright (c) the metacheck contributors
// SPDX-License-Identifier: Apache-2.0

#include "metacheck/violation.hpp"

#include <tuple>

namespace metacheck {

std::string_view toString(ViolationCode code) {
    switch (code) {
    case ViolationCode::WF_CYCLE:
        return "WF_CYCLE";
    case ViolationCode::WF_SELF_GEN:
        return "WF_SELF_GEN";
    case ViolationCode::WF_DUP_EDGE:
        return "WF_DUP_EDGE";
    case ViolationCode::WF_OVERLAP_ARITY:
        return "WF_OVERLAP_ARITY";
    case ViolationCode::SEM_CONFORMANCE:
        return "SEM_CONFORMANCE";
    case ViolationCode::SEM_IDENTITY:
        return "SEM_IDENTITY";
    case ViolationCode::SEM_DISJOINT:
        return "SEM_DISJOINT";
    case ViolationCode::SEM_ABSTRACT:
        return "SEM_ABSTRACT";
    }
    return "UNKNOWN";
}

bool operator<(const Violation& a, const Violation& b) {
    const std::string_view codeA = toString(a.code);
    const std::string_view codeB = toString(b.code);
    if (codeA != codeB) {
        return codeA < codeB;
    }
    if (a.subjects != b.subjects) {
        return a.subjects < b.subjects;
    }
    return a.message < b.message;
}

std::string renderViolation(const Violation& v) {
    std::string out{toString(v.code)};
    for (const std::string& subject : v.subjects) {
        out += ' ';
        out += subject;
    }
    out += ": ";
    out += v.message;
    return out;
}

} // namespace metacheck
