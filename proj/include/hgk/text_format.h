// Copyright 2026 The HGK Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef HGK_TEXT_FORMAT_H_
#define HGK_TEXT_FORMAT_H_

#include <charconv>
#include <optional>
#include <string>
#include <string_view>
#include <system_error>

namespace hgk {

// Shortest decimal form that parses back to the same double.
inline std::string format_double(double value) {
  char buf[32];
  const auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  if (ec != std::errc{}) return "nan";
  return std::string(buf, end);
}

// Parses the whole of `text` as a T; nullopt on any trailing garbage.
template <typename T>
std::optional<T> parse_number(std::string_view text) {
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  T value{};
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) return std::nullopt;
  return value;
}

}  // namespace hgk

#endif  // HGK_TEXT_FORMAT_H_
