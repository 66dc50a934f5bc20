#pragma once

// Instance files:
//
//   {"kind": "arp", "label": "...", "items": [{"v": "6", "c": "2"}, ...]}
//
// Numbers are strings holding an integer, a decimal literal or `p/q`; they are
// read exactly. Bare JSON integers are accepted too, JSON floats are not.

#include "arp/model.hpp"

#include <string>
#include <string_view>

namespace arp {

/// Throws Error(ParseError) with line or field context, Error(EmptyInstance),
/// Error(NonPositiveValue).
[[nodiscard]] Instance parse_instance_file(std::string_view bytes);

/// Pretty-printed JSON; numbers written as canonical `p/q` or integer strings.
[[nodiscard]] std::string write_instance_file(const Instance &inst);

[[nodiscard]] Instance load_instance(const std::string &path);
void save_instance(const Instance &inst, const std::string &path);

} // namespace arp
