// Copyright (c) the metacheck contributors
// SPDX-License-Identifier: Apache-2.0

#ifndef METACHECK_TEXTFORMATS_HPP
#define METACHECK_TEXTFORMATS_HPP

#include <optional>
#include <string>
#include <string_view>

#include "metacheck/model.hpp"
#include "metacheck/snapshot.hpp"

namespace metacheck {

struct ParseError {
    std::string file;
    int line = 0;   // 1-based
    int column = 0; // 1-based
    std::string message;

    friend bool operator==(const ParseError&, const ParseError&) = default;
};

/// "file:line:column: message"
std::string renderParseError(const ParseError& error);

template <typename T>
struct ParseResult {
    std::optional<T> value;
    std::optional<ParseError> error;

    bool ok() const { return value.has_value(); }
};

/// Model DSL. Line-oriented, one declaration per line; `#` starts a comment;
/// blank lines ignored; LF or CRLF accepted.
///
///   model IDENT
///   class IDENT [abstract]
///   gen IDENT : IDENT -> IDENT        (name : child -> parent)
///   overlapping IDENT IDENT ...       (two or more generalization names)
///
/// Declarations must precede their uses; overlapping groups get ids og1,
/// og2, ... in declaration order.
ParseResult<Model> parseModel(std::string_view text, std::string_view filename = "<input>");

/// Snapshot DSL, resolved against a model.
///
///   snapshot IDENT
///   instance IDENT : IDENT [, IDENT ...]
ParseResult<Snapshot> parseSnapshot(std::string_view text, const Model& model,
                                    std::string_view filename = "<input>");

/// Canonical serializers: sorted declarations, LF line endings. Parsing the
/// rendering reproduces the value exactly for any parser-produced input.
std::string renderModel(const Model& model);
std::string renderSnapshot(const Snapshot& snapshot);

} // namespace metacheck

#endif
