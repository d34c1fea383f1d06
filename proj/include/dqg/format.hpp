#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>

namespace dqg {

// Locale-independent number formatting.
std::string fixed(double v, int decimals = 7);
std::string full(double v);      // 17 significant digits
std::string shortest(double v);  // shortest round-trip form

std::string csv_line(std::initializer_list<std::string_view> cells);

std::uint64_t fnv1a64(std::string_view bytes);
std::string hex64(std::uint64_t v);

}  // namespace dqg
