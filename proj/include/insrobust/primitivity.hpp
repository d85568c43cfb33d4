#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

#include "insrobust/word.hpp"

namespace insrobust {

/// Failure function: entry i is the length of the longest proper border of
/// w[0..i]. Linear time.
template <typename Symbol>
std::vector<std::size_t> border_array(std::span<const Symbol> w) {
  std::vector<std::size_t> b(w.size(), 0);
  std::size_t k = 0;
  for (std::size_t i = 1; i < w.size(); ++i) {
    while (k > 0 && w[i] != w[k]) k = b[k - 1];
    if (w[i] == w[k]) ++k;
    b[i] = k;
  }
  return b;
}

inline std::vector<std::size_t> border_array(const Word& w) { return border_array(w.symbols()); }

/// Smallest period of a non-empty word.
inline std::size_t smallest_period(const Word& w) {
  if (w.empty()) throw std::invalid_argument("period is undefined for empty word");
  return w.size() - border_array(w).back();
}

// A word w is a proper power iff its smallest period p satisfies p < n and
// p | n; otherwise it is primitive.
inline bool is_primitive(const Word& w) {
  if (w.empty()) throw std::invalid_argument("primitivity is undefined for empty word");
  const std::size_t n = w.size();
  const std::size_t p = smallest_period(w);
  return p == n || n % p != 0;
}

struct PrimitiveRoot {
  Word root;
  std::size_t exponent = 1;

  friend bool operator==(const PrimitiveRoot&, const PrimitiveRoot&) = default;
};

/// The unique primitive v with w = v^e.
inline PrimitiveRoot primitive_root(const Word& w) {
  if (w.empty()) throw std::invalid_argument("primitive root is undefined for empty word");
  const std::size_t n = w.size();
  const std::size_t p = smallest_period(w);
  if (n % p != 0) return {w, 1};
  return {w.factor(0, p), n / p};
}

}  // namespace insrobust
