#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <numeric>
#include <ostream>
#include <span>
#include <stdexcept>
#include <vector>

#include "insrobust/primitivity.hpp"
#include "insrobust/word.hpp"

namespace insrobust {

/// Non-negative rational kept in lowest terms.
struct Ratio {
  std::size_t num = 0;
  std::size_t den = 1;

  Ratio() = default;
  Ratio(std::size_t n, std::size_t d) : num(n), den(d) {
    if (d == 0) throw std::invalid_argument("ratio with zero denominator");
    const std::size_t g = std::gcd(num, den);
    if (g > 1) { num /= g; den /= g; }
  }

  double value() const noexcept { return static_cast<double>(num) / static_cast<double>(den); }

  friend bool operator==(const Ratio&, const Ratio&) = default;
  friend std::strong_ordering operator<=>(const Ratio& a, const Ratio& b) {
    // Cross-multiplication; lengths and periods stay far below 2^32.
    return a.num * b.den <=> b.num * a.den;
  }
};

inline std::ostream& operator<<(std::ostream& os, const Ratio& r) {
  os << r.num;
  if (r.den != 1) os << '/' << r.den;
  return os;
}

/// Maximal periodic factor w[start..start+length) with minimal period `period`.
struct Run {
  std::size_t start = 0;
  std::size_t length = 0;
  std::size_t period = 0;

  Ratio exponent() const { return Ratio(length, period); }
  std::size_t end() const noexcept { return start + length; }

  friend bool operator==(const Run&, const Run&) = default;
  friend auto operator<=>(const Run&, const Run&) = default;
};

inline std::ostream& operator<<(std::ostream& os, const Run& r) {
  return os << '(' << r.start << ',' << r.length << ',' << r.period << ',' << r.exponent() << ')';
}

namespace detail {

// z[i] = longest common prefix of s and s[i..); z[0] = |s|.
inline std::vector<std::size_t> z_function(std::span<const int> s) {
  const std::size_t n = s.size();
  std::vector<std::size_t> z(n, 0);
  if (n == 0) return z;
  z[0] = n;
  std::size_t l = 0, r = 0;
  for (std::size_t i = 1; i < n; ++i) {
    if (i < r) z[i] = std::min(r - i, z[i - l]);
    while (i + z[i] < n && s[z[i]] == s[i + z[i]]) ++z[i];
    if (i + z[i] > r) { l = i; r = i + z[i]; }
  }
  return z;
}

inline constexpr int separator = -1;

class RunFinder {
 public:
  explicit RunFinder(const Word& w) : w_(w) {}

  std::vector<Run> find() {
    if (w_.size() >= 2) divide(0, w_.size());
    std::sort(found_.begin(), found_.end());
    // Same interval found under several periods: keep the smallest one.
    std::vector<Run> runs;
    for (const Run& r : found_)
      if (runs.empty() || runs.back().start != r.start || runs.back().length != r.length)
        runs.push_back(r);
    return runs;
  }

 private:
  void divide(std::size_t l, std::size_t r) {
    if (r - l < 2) return;
    const std::size_t m = l + (r - l) / 2;
    cross(l, m, r);
    divide(l, m);
    divide(m, r);
  }

  // All p-periodic intervals with exponent >= 2 inside [l, r) that contain
  // both m-1 and m, maximal within [l, r).
  void cross(std::size_t l, std::size_t m, std::size_t r) {
    const std::size_t left_len = m - l;
    const std::size_t right_len = r - m;

    std::vector<int> right(right_len);
    for (std::size_t i = 0; i < right_len; ++i) right[i] = w_[m + i];
    std::vector<int> left_rev(left_len);
    for (std::size_t i = 0; i < left_len; ++i) left_rev[i] = w_[m - 1 - i];

    // Forward LCE(m, m+p) and backward LCE(m-1, m-1-p).
    const auto z_right = z_function(right);
    const auto z_left_rev = z_function(left_rev);

    // Forward LCE(m, x) for x in [l, r).
    std::vector<int> buf(right);
    buf.push_back(separator);
    for (std::size_t x = l; x < r; ++x) buf.push_back(w_[x]);
    const auto z_fwd = z_function(buf);
    auto lce_fwd_from_m = [&](std::size_t x) { return z_fwd[right_len + 1 + (x - l)]; };

    // Backward LCE(m-1, y) for y in [l, r).
    buf.assign(left_rev.begin(), left_rev.end());
    buf.push_back(separator);
    for (std::size_t y = r; y-- > l;) buf.push_back(w_[y]);
    const auto z_bwd = z_function(buf);
    auto lce_bwd_from_m1 = [&](std::size_t y) { return z_bwd[left_len + 1 + (r - 1 - y)]; };

    // Window [m, m+p) inside the interval.
    for (std::size_t p = 1; p <= right_len; ++p) {
      const std::size_t ext_right = p < right_len ? z_right[p] : 0;
      const std::size_t ext_left = lce_bwd_from_m1(m + p - 1);
      if (ext_left == 0) continue;
      if (p + ext_left + ext_right >= 2 * p) emit(l, r, m - ext_left, m + p + ext_right, p);
    }
    // Window [m-p, m) inside the interval.
    for (std::size_t p = 1; p <= left_len; ++p) {
      const std::size_t ext_right = lce_fwd_from_m(m - p);
      const std::size_t ext_left = p < left_len ? z_left_rev[p] : 0;
      if (ext_right == 0) continue;
      if (p + ext_left + ext_right >= 2 * p) emit(l, r, m - p - ext_left, m + ext_right, p);
    }
  }

  void emit(std::size_t l, std::size_t r, std::size_t s, std::size_t e, std::size_t p) {
    // Intervals that keep period p past the segment belong to an enclosing call.
    if (s == l && l > 0 && w_[l - 1] == w_[l - 1 + p]) return;
    if (e == r && r < w_.size() && w_[r] == w_[r - p]) return;
    found_.push_back(Run{s, e - s, p});
  }

  const Word& w_;
  std::vector<Run> found_;
};

inline bool has_period(const Word& w, std::size_t start, std::size_t len, std::size_t p) {
  for (std::size_t k = start; k + p < start + len; ++k)
    if (w[k] != w[k + p]) return false;
  return true;
}

}  // namespace detail

/// All maximal repetitions (runs) of w, sorted by (start, length).
/// Divide and conquer over the midpoint with Z-array LCE queries; O(n log n).
inline std::vector<Run> find_maximal_repetitions(const Word& w) {
  return detail::RunFinder(w).find();
}

inline constexpr std::size_t default_bruteforce_bound = 64;

/// Reference implementation: every (start, length, period) triple is tested
/// directly against the definition.
inline std::vector<Run> runs_bruteforce(const Word& w,
                                        std::size_t bound = default_bruteforce_bound) {
  if (w.size() > bound) throw std::invalid_argument("word longer than the brute-force bound");
  const std::size_t n = w.size();
  std::vector<Run> runs;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t len = 2; i + len <= n; ++len) {
      std::size_t p = 1;
      while (!detail::has_period(w, i, len, p)) ++p;
      if (2 * p > len) continue;
      const bool left_max = i == 0 || w[i - 1] != w[i - 1 + p];
      const bool right_max = i + len == n || w[i + len] != w[i + len - p];
      if (left_max && right_max) runs.push_back(Run{i, len, p});
    }
  }
  return runs;
}

inline constexpr std::size_t default_periodicity_bound = 4096;

/// Maximal periodic factors whose exponent is at least `min_exponent` (> 1).
/// Same maximality and minimal-period semantics as runs. For thresholds of
/// 2 or more this filters the run set; below 2 it scans every factor in
/// quadratic time and is limited to words of at most `bound` symbols.
inline std::vector<Run> maximal_periodicities(const Word& w, Ratio min_exponent,
                                              std::size_t bound = default_periodicity_bound) {
  if (min_exponent <= Ratio(1, 1))
    throw std::invalid_argument("minimum exponent must exceed 1");
  std::vector<Run> out;
  if (min_exponent >= Ratio(2, 1)) {
    for (const Run& r : find_maximal_repetitions(w))
      if (r.exponent() >= min_exponent) out.push_back(r);
    return out;
  }
  if (w.size() > bound) throw std::invalid_argument("word longer than the periodicity scan bound");
  const std::size_t n = w.size();
  for (std::size_t i = 0; i < n; ++i) {
    // Smallest periods of every prefix of w[i..n).
    const auto border = border_array(w.symbols().subspan(i));
    for (std::size_t len = 2; i + len <= n; ++len) {
      const std::size_t p = len - border[len - 1];
      if (Ratio(len, p) < min_exponent) continue;
      const bool left_max = i == 0 || w[i - 1] != w[i - 1 + p];
      const bool right_max = i + len == n || w[i + len] != w[i + len - p];
      if (left_max && right_max) out.push_back(Run{i, len, p});
    }
  }
  return out;
}

}  // namespace insrobust
