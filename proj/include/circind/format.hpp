#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "circind/errors.hpp"

namespace circind {

inline constexpr std::string_view kToolVersion = "0.1.0";

// Connection-set syntax: comma-separated values or ranges ("1,3,8",
// "1-24"), with an optional single '^' exclusion suffix ("1-24^5" is
// {1..24} minus {5}; the suffix takes values and ranges too).
std::vector<int> parse_connection_set(std::string_view text);

std::string render_set(const std::vector<int>& set);          // "1,3,8"
std::string render_set_braced(const std::vector<int>& set);   // "{1,3,8}"

// "[1, 30, 345, ...]"
std::string render_bracketed(const std::vector<std::int64_t>& values);

// Reference list file: one connection set per line, '#' comments allowed.
std::vector<std::vector<int>> load_reference_sets(const std::string& path);

}  // namespace circind
