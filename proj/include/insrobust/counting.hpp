#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "insrobust/classify.hpp"
#include "insrobust/parallel.hpp"
#include "insrobust/word.hpp"

namespace insrobust {

using bigint = boost::multiprecision::cpp_int;

/// Distinct prime factors by trial division.
inline std::vector<std::uint64_t> distinct_prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> primes;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d != 0) continue;
    primes.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) primes.push_back(n);
  return primes;
}

inline bigint big_pow(std::uint64_t k, std::uint64_t e) { return boost::multiprecision::pow(bigint(k), static_cast<unsigned>(e)); }

/// Number of primitive words of length n over k letters: inclusion-exclusion
/// over the squarefree products of the distinct primes dividing n.
inline bigint count_primitive(std::uint64_t n, std::uint64_t k) {
  if (n == 0) throw std::invalid_argument("primitive count is undefined for n = 0");
  if (k == 0) throw std::invalid_argument("alphabet size must be positive");
  const auto primes = distinct_prime_factors(n);
  bigint total = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << primes.size()); ++mask) {
    std::uint64_t d = 1;
    int bits = 0;
    for (std::size_t i = 0; i < primes.size(); ++i)
      if (mask >> i & 1) { d *= primes[i]; ++bits; }
    const bigint term = big_pow(k, n / d);
    if (bits % 2 == 0) total += term;
    else total -= term;
  }
  return total;
}

struct CountReport {
  std::uint64_t n = 0;
  std::uint64_t k = 0;
  bigint total;
  bigint primitive;
  bigint nonprimitive;
  bigint qibar_upper;  // upper bound on non-ins-robust primitive words
  bigint qi_lower;     // lower bound on ins-robust words; may be negative

  bool vacuous() const { return qi_lower <= 0; }
};

/// Exact counts for length n and the bounds
///   |non-ins-robust(n)| <= (n+1)(Z(n+1) - k),  |ins-robust(n)| >= psi(n) - that.
inline CountReport count_report(std::uint64_t n, std::uint64_t k) {
  if (n < 2) throw std::invalid_argument("the ins-robust bound is stated for n >= 2");
  if (k < 2) throw std::invalid_argument("alphabet size must be at least 2");
  CountReport rep;
  rep.n = n;
  rep.k = k;
  rep.total = big_pow(k, n);
  rep.primitive = count_primitive(n, k);
  rep.nonprimitive = rep.total - rep.primitive;
  const bigint z_next = big_pow(k, n + 1) - count_primitive(n + 1, k);
  rep.qibar_upper = bigint(n + 1) * (z_next - k);
  rep.qi_lower = rep.primitive - rep.qibar_upper;
  return rep;
}

inline constexpr std::uint64_t default_census_budget = std::uint64_t{1} << 24;

class budget_exceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CensusReport {
  std::size_t n = 0;
  std::size_t k = 0;
  std::array<std::uint64_t, 3> counts{};               // indexed by Verdict
  std::array<std::vector<Word>, 3> words;              // filled only when listing

  std::uint64_t count(Verdict v) const { return counts[static_cast<std::size_t>(v)]; }
  std::uint64_t total() const { return counts[0] + counts[1] + counts[2]; }
};

/// `audit` classifies with both and fails on the first disagreement.
enum class Classifier { fast, oracle, audit };

class classifier_mismatch : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CensusOptions {
  bool list_words = false;
  Classifier classifier = Classifier::fast;
  std::uint64_t budget = default_census_budget;
  std::size_t workers = 1;
};

/// The i-th word of length n in lexicographic order.
inline Word nth_word(std::uint64_t index, std::size_t n, std::size_t k) {
  std::vector<symbol> s(n);
  for (std::size_t j = n; j-- > 0;) {
    s[j] = static_cast<symbol>(index % k);
    index /= k;
  }
  return Word(std::move(s), k);
}

/// Sets `total` to k^n; false once it would pass `cap`.
inline bool word_space_within(std::size_t n, std::size_t k, std::uint64_t cap, std::uint64_t& total) {
  total = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (total > cap / k) return false;
    total *= k;
  }
  return total <= cap;
}

/// Classifies every word of length n over the alphabet.
inline CensusReport census(std::size_t n, const Alphabet& alphabet, const CensusOptions& opt = {}) {
  const std::size_t k = alphabet.size();
  if (n == 0) throw std::invalid_argument("census needs n >= 1");
  if (k < 2) throw std::invalid_argument("census needs an alphabet of at least two letters");
  std::uint64_t total = 0;
  if (!word_space_within(n, k, opt.budget, total))
    throw budget_exceeded("census of " + std::to_string(k) + "^" + std::to_string(n) +
                          " words exceeds the classification budget of " + std::to_string(opt.budget) +
                          "; raise it with --budget");

  constexpr std::size_t shards = 64;
  std::vector<CensusReport> partial(shards);
  for_each_shard(total, shards, opt.workers, [&](std::size_t s, std::uint64_t begin, std::uint64_t end) {
    CensusReport& part = partial[s];
    for (std::uint64_t idx = begin; idx < end; ++idx) {
      Word w = nth_word(idx, n, k);
      const Verdict v = opt.classifier == Classifier::oracle ? classify_oracle(w, alphabet).verdict()
                                                             : classify_fast(w, alphabet).verdict();
      if (opt.classifier == Classifier::audit && classify_oracle(w, alphabet).verdict() != v)
        throw classifier_mismatch("fast and oracle classifiers disagree on '" + alphabet.str(w) + "'");
      const auto slot = static_cast<std::size_t>(v);
      ++part.counts[slot];
      if (opt.list_words) part.words[slot].push_back(std::move(w));
    }
  });

  CensusReport rep;
  rep.n = n;
  rep.k = k;
  for (auto& part : partial) {
    for (std::size_t v = 0; v < 3; ++v) {
      rep.counts[v] += part.counts[v];
      for (auto& w : part.words[v]) rep.words[v].push_back(std::move(w));
    }
  }
  return rep;
}

}  // namespace insrobust
