#pragma once

// Brute-force oracles and word enumerators shared by the test binaries.
// Nothing here calls into the border-array or run machinery it checks.

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "insrobust/word.hpp"

namespace insrobust::testing {

/// Calls fn(word) for every word of length n over k letters, lexicographically.
template <typename Fn>
void for_each_word(std::size_t n, std::size_t k, Fn&& fn) {
  std::vector<symbol> s(n, 0);
  while (true) {
    fn(Word(s, k));
    bool advanced = false;
    for (auto it = s.rbegin(); it != s.rend() && !advanced; ++it) {
      if (*it + 1u < k) {
        ++*it;
        advanced = true;
      } else {
        *it = 0;
      }
    }
    if (!advanced) return;
  }
}

/// Every word of length 1..max_n.
template <typename Fn>
void for_each_word_up_to(std::size_t max_n, std::size_t k, Fn&& fn) {
  for (std::size_t n = 1; n <= max_n; ++n) for_each_word(n, k, fn);
}

/// True when w equals its length-d prefix repeated n/d times.
inline bool is_power_of_prefix(const Word& w, std::size_t d) {
  if (d == 0 || w.size() % d != 0) return false;
  for (std::size_t i = d; i < w.size(); ++i)
    if (w[i] != w[i - d]) return false;
  return true;
}

/// Divisor check: w is primitive iff no proper divisor d of n makes w a power of its prefix.
inline bool brute_is_primitive(const Word& w) {
  for (std::size_t d = 1; d < w.size(); ++d)
    if (is_power_of_prefix(w, d)) return false;
  return true;
}

/// (root length, exponent) by trying divisors from the smallest.
inline std::pair<std::size_t, std::size_t> brute_root(const Word& w) {
  for (std::size_t d = 1; d <= w.size(); ++d)
    if (is_power_of_prefix(w, d)) return {d, w.size() / d};
  return {w.size(), 1};
}

/// Longest proper border of w[0..i] for each i, by testing every length.
inline std::vector<std::size_t> brute_border_array(const Word& w) {
  std::vector<std::size_t> out(w.size(), 0);
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (std::size_t len = i; len-- > 0;) {
      bool ok = true;
      for (std::size_t t = 0; t <= len && ok; ++t) ok = w[t] == w[i - len + t];
      if (ok) { out[i] = len + 1; break; }
    }
  }
  return out;
}

/// Ins-robust by definition: primitive, and every insertion stays primitive.
/// 0 = non-primitive, 1 = ins-robust, 2 = non-ins-robust (Verdict order).
inline int brute_verdict(const Word& w) {
  if (!brute_is_primitive(w)) return 0;
  for (std::size_t pos = 0; pos <= w.size(); ++pos)
    for (std::size_t c = 0; c < w.alphabet_size(); ++c) {
      std::vector<symbol> s(w.begin(), w.end());
      s.insert(s.begin() + static_cast<std::ptrdiff_t>(pos), static_cast<symbol>(c));
      if (!brute_is_primitive(Word(s, w.alphabet_size()))) return 2;
    }
  return 1;
}

inline Word random_small_word(std::mt19937_64& rng, std::size_t max_len, std::size_t k, std::size_t min_len = 1) {
  std::uniform_int_distribution<std::size_t> len(min_len, max_len);
  std::uniform_int_distribution<int> letter(0, static_cast<int>(k) - 1);
  std::vector<symbol> s(len(rng));
  for (auto& x : s) x = static_cast<symbol>(letter(rng));
  return Word(std::move(s), k);
}

}  // namespace insrobust::testing
