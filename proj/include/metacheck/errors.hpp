// Copyright (c) the metacheck contributors
// SPDX-License-Identifier: Apache-2.0

#ifndef METACHECK_ERRORS_HPP
#define METACHECK_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace metacheck {

/// Thrown when an identifier does not resolve in its model or snapshot.
class LookupError : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

/// Thrown when an operation is called outside its contract, e.g. a
/// snapshot check on a model that is not well-formed.
class UsageError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Thrown when an enumeration would exceed the configured resource cap.
class CapExceededError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace metacheck

#endif
