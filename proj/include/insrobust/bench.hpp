#pragma once

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <random>
#include <span>
#include <stdexcept>
#include <vector>

#include "insrobust/word.hpp"

namespace insrobust {

/// Uniform random word; reproducible for a given engine state.
inline Word random_word(std::size_t n, std::size_t k, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> pick(0, static_cast<int>(k) - 1);
  std::vector<symbol> s(n);
  for (auto& x : s) x = static_cast<symbol>(pick(rng));
  return Word(std::move(s), k);
}

struct Timing {
  double mean = 0;
  double median = 0;
};

/// Wall-clock seconds of `fn` over `trials` repetitions.
template <typename Fn>
Timing time_trials(Fn&& fn, std::size_t trials) {
  if (trials == 0) throw std::invalid_argument("at least one trial is required");
  std::vector<double> secs;
  for (std::size_t t = 0; t < trials; ++t) {
    const auto t0 = std::chrono::steady_clock::now();
    fn();
    secs.push_back(std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
  }
  Timing out;
  out.mean = std::accumulate(secs.begin(), secs.end(), 0.0) / static_cast<double>(secs.size());
  std::sort(secs.begin(), secs.end());
  const std::size_t h = secs.size() / 2;
  out.median = secs.size() % 2 ? secs[h] : (secs[h - 1] + secs[h]) / 2;
  return out;
}

/// Least-squares slope of log(time) against log(size).
inline double loglog_slope(std::span<const double> sizes, std::span<const double> times) {
  if (sizes.size() != times.size() || sizes.size() < 2)
    throw std::invalid_argument("slope needs at least two (size, time) pairs");
  const double m = static_cast<double>(sizes.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    const double x = std::log(sizes[i]);
    const double y = std::log(std::max(times[i], 1e-12));
    sx += x; sy += y; sxx += x * x; sxy += x * y;
  }
  return (m * sxy - sx * sy) / (m * sxx - sx * sx);
}

/// "a..b" doubles from a up to b; "a,b,c" is taken literally.
inline std::vector<std::size_t> parse_sizes(const std::string& text) {
  std::vector<std::size_t> out;
  if (auto dots = text.find(".."); dots != std::string::npos) {
    const std::size_t lo = std::stoull(text.substr(0, dots));
    const std::size_t hi = std::stoull(text.substr(dots + 2));
    if (lo == 0 || lo > hi) throw std::invalid_argument("size range must satisfy 0 < lo <= hi");
    for (std::size_t s = lo; s <= hi; s *= 2) out.push_back(s);
    return out;
  }
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto comma = text.find(',', start);
    const auto tok = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    if (tok.empty()) throw std::invalid_argument("empty entry in size list");
    std::size_t used = 0;
    const auto v = std::stoull(tok, &used);
    if (used != tok.size() || v == 0) throw std::invalid_argument("invalid size '" + tok + "'");
    out.push_back(v);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace insrobust
