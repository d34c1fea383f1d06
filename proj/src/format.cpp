#include "dqg/format.hpp"

#include <array>
#include <charconv>
#include <cmath>

namespace dqg {

namespace {

template <typename... Args>
std::string chars(double v, Args... args) {
  if (std::isnan(v)) return "nan";
  std::array<char, 64> buf{};
  auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v, args...);
  return std::string(buf.data(), res.ptr);
}

}  // namespace

std::string fixed(double v, int decimals) {
  std::string s = chars(v, std::chars_format::fixed, decimals);
  if (s.size() > 1 && s[0] == '-' && s.find_first_not_of("-0.") == std::string::npos) s.erase(0, 1);
  return s;
}

std::string full(double v) { return chars(v, std::chars_format::general, 17); }

std::string shortest(double v) { return chars(v); }

std::string csv_line(std::initializer_list<std::string_view> cells) {
  std::string out;
  bool first = true;
  for (auto c : cells) {
    if (!first) out += ',';
    out += c;
    first = false;
  }
  out += '\n';
  return out;
}

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string hex64(std::uint64_t v) {
  static constexpr char digits[] = "0123456789abcdef";
  std::string s(16, '0');
  for (int i = 15; i >= 0; --i) {
    s[static_cast<std::size_t>(i)] = digits[v & 0xf];
    v >>= 4;
  }
  return s;
}

}  // namespace dqg
