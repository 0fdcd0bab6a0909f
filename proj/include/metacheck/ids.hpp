// Copyright (c) the metacheck contributors
// SPDX-License-Identifier: Apache-2.0

#ifndef METACHECK_IDS_HPP
#define METACHECK_IDS_HPP

#include <compare>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace metacheck {

/// Token syntax shared by every identifier category: [A-Za-z_][A-Za-z0-9_]*
bool isValidToken(std::string_view text);

namespace detail {

/// Identifier wrapper tagged by category. Identifiers from different
/// categories (classifier, generalization, group, instance) never compare
/// or convert into each other.
template <typename Tag>
class TokenId {
public:
    explicit TokenId(std::string value) : value_(std::move(value)) {
        if (!isValidToken(value_)) {
            throw std::invalid_argument("invalid identifier token: '" + value_ + "'");
        }
    }

    const std::string& str() const { return value_; }

    friend auto operator<=>(const TokenId&, const TokenId&) = default;

private:
    std::string value_;
};

} // namespace detail

using ClassifierId = detail::TokenId<struct ClassifierIdTag>;
using GeneralizationId = detail::TokenId<struct GeneralizationIdTag>;
using GroupId = detail::TokenId<struct GroupIdTag>;
using InstanceId = detail::TokenId<struct InstanceIdTag>;

} // namespace metacheck

#endif
