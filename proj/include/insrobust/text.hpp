#pragma once

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "insrobust/word.hpp"

namespace insrobust {

enum class SymbolMode { bytes, unicode };

/// One token per byte.
inline std::vector<std::string> split_bytes(std::string_view s) {
  std::vector<std::string> out;
  out.reserve(s.size());
  for (char c : s) out.emplace_back(1, c);
  return out;
}

/// One token per UTF-8 encoded codepoint.
inline std::vector<std::string> split_utf8(std::string_view s) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < s.size();) {
    const auto lead = static_cast<unsigned char>(s[i]);
    std::size_t len = lead < 0x80 ? 1 : (lead >> 5) == 0x6 ? 2 : (lead >> 4) == 0xE ? 3 : (lead >> 3) == 0x1E ? 4 : 0;
    if (len == 0 || i + len > s.size()) throw std::invalid_argument("malformed UTF-8 input");
    for (std::size_t j = 1; j < len; ++j)
      if ((static_cast<unsigned char>(s[i + j]) & 0xC0) != 0x80) throw std::invalid_argument("malformed UTF-8 input");
    out.emplace_back(s.substr(i, len));
    i += len;
  }
  return out;
}

inline std::vector<std::string> tokenize(std::string_view s, SymbolMode mode) {
  return mode == SymbolMode::bytes ? split_bytes(s) : split_utf8(s);
}

/// Distinct symbols across the whole batch, in byte order.
inline Alphabet infer_alphabet(const std::vector<std::string>& words, SymbolMode mode) {
  std::set<std::string> seen;
  for (const auto& w : words)
    for (auto& t : tokenize(w, mode)) seen.insert(std::move(t));
  if (seen.empty()) throw std::invalid_argument("cannot infer an alphabet from empty input");
  return Alphabet(std::vector<std::string>(seen.begin(), seen.end()));
}

}  // namespace insrobust
