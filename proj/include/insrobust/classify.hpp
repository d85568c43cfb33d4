#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "insrobust/primitivity.hpp"
#include "insrobust/repetitions.hpp"
#include "insrobust/word.hpp"

namespace insrobust {

/// Inserting `letter` at `position` turns the word into root^power.
struct InsertionWitness {
  std::size_t position = 0;
  symbol letter = 0;
  Word root;
  std::size_t power = 0;

  friend bool operator==(const InsertionWitness&, const InsertionWitness&) = default;
};

struct NonPrimitive {
  Word root;
  std::size_t exponent = 0;
  friend bool operator==(const NonPrimitive&, const NonPrimitive&) = default;
};

struct InsRobust {
  friend bool operator==(const InsRobust&, const InsRobust&) = default;
};

struct NonInsRobust {
  std::vector<InsertionWitness> witnesses;
  friend bool operator==(const NonInsRobust&, const NonInsRobust&) = default;
};

enum class Verdict { non_primitive, ins_robust, non_ins_robust };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::non_primitive: return "non-primitive";
    case Verdict::ins_robust: return "ins-robust";
    case Verdict::non_ins_robust: return "non-ins-robust";
  }
  return "?";
}

struct Classification {
  std::variant<NonPrimitive, InsRobust, NonInsRobust> result;

  Verdict verdict() const noexcept { return static_cast<Verdict>(result.index()); }

  const NonPrimitive* non_primitive() const noexcept { return std::get_if<NonPrimitive>(&result); }
  const NonInsRobust* non_ins_robust() const noexcept { return std::get_if<NonInsRobust>(&result); }

  friend bool operator==(const Classification&, const Classification&) = default;
};

/// Raised when a construction guaranteed by a theorem comes up empty.
class theorem_violation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

namespace detail {

inline void require_classifiable(const Word& w, const Alphabet& alphabet) {
  if (w.empty()) throw std::invalid_argument("classification is undefined for empty word");
  if (alphabet.size() < 2) throw std::invalid_argument("classification needs an alphabet of at least two letters");
  if (w.alphabet_size() != alphabet.size())
    throw std::invalid_argument("word and alphabet sizes disagree");
}

// Witness for (position, letter) if the insertion is a proper power.
inline std::optional<InsertionWitness> try_insertion(const Word& w, std::size_t pos, symbol c) {
  auto [root, exponent] = primitive_root(insert(w, pos, c));
  if (exponent < 2) return std::nullopt;
  return InsertionWitness{pos, c, std::move(root), exponent};
}

}  // namespace detail

/// Every position in [0, n] and every letter, checked by direct insertion.
/// Quadratic; the reference the fast classifier is tested against.
inline Classification classify_oracle(const Word& w, const Alphabet& alphabet) {
  detail::require_classifiable(w, alphabet);
  if (auto [root, e] = primitive_root(w); e > 1) return {NonPrimitive{std::move(root), e}};
  NonInsRobust found;
  for (std::size_t pos = 0; pos <= w.size(); ++pos)
    for (std::size_t c = 0; c < alphabet.size(); ++c)
      if (auto wit = detail::try_insertion(w, pos, static_cast<symbol>(c))) found.witnesses.push_back(std::move(*wit));
  if (found.witnesses.empty()) return {InsRobust{}};
  return {std::move(found)};
}

/// Smallest offset i in [0, n) such that the rotation w[i..n)w[0..i) has
/// period p, or nullopt. Scans ww right to left keeping the length of the
/// current stretch where v[j] == v[j+p].
inline std::optional<std::size_t> periodic_rotation(const Word& w, std::size_t p) {
  const std::size_t n = w.size();
  if (p == 0 || p > n) return std::nullopt;
  if (p == n) return 0;
  const std::size_t need = n - p;
  auto at = [&](std::size_t j) { return w[j >= n ? j - n : j]; };
  std::optional<std::size_t> best;
  std::size_t stretch = 0;
  for (std::size_t j = 2 * n - p; j-- > 0;) {
    stretch = at(j) == at(j + p) ? stretch + 1 : 0;
    if (j < n && stretch >= need) best = j;
  }
  return best;
}

/// Ins-robustness test: w (primitive, length n) is non-ins-robust iff some
/// rotation of w has a period p with p | n+1 and p <= n. Each divisor costs
/// one linear scan over ww. Returns the witness for the smallest (p, offset).
inline Classification classify_fast(const Word& w, const Alphabet& alphabet) {
  detail::require_classifiable(w, alphabet);
  if (auto [root, e] = primitive_root(w); e > 1) return {NonPrimitive{std::move(root), e}};
  const std::size_t n = w.size();
  for (std::size_t p = 1; p <= n; ++p) {
    if ((n + 1) % p != 0) continue;
    const auto offset = periodic_rotation(w, p);
    if (!offset) continue;
    // The rotation is x^(k-1) followed by x minus its last letter; appending
    // that letter completes x^k. The end of the rotation sits at `offset` in w.
    const std::size_t i = *offset;
    const symbol letter = w[(i + p - 1) % n];
    const std::size_t pos = i == 0 ? n : i;
    auto wit = detail::try_insertion(w, pos, letter);
    if (!wit) throw theorem_violation("periodic rotation did not map to a non-primitive insertion");
    return {NonInsRobust{{std::move(*wit)}}};
  }
  return {InsRobust{}};
}

/// Literal transcription of the runs-based IsInsRobust procedure over the
/// runs of ww. Kept as a record of that procedure; it disagrees with the
/// classifiers above on some inputs (e.g. "abba" and "abcab").
inline bool algorithm1_paper(const Word& w) {
  const std::size_t n = w.size();
  for (const Run& run : find_maximal_repetitions(w + w)) {
    const std::size_t p = run.period;
    if (n % p == 0 && p < n) return false;
    if (p <= n && (n + 1) % p == 0 && run.length >= n) return false;
  }
  return true;
}

/// A letter b with w.b^|w| ins-robust, trying letters in alphabet order.
inline symbol density_extension(const Word& w, const Alphabet& alphabet) {
  detail::require_classifiable(w, alphabet);
  for (std::size_t b = 0; b < alphabet.size(); ++b) {
    const Word tail = Word({static_cast<symbol>(b)}, alphabet.size()).power(w.size());
    if (classify_fast(w + tail, alphabet).verdict() == Verdict::ins_robust) return static_cast<symbol>(b);
  }
  throw theorem_violation("no letter b makes w.b^n ins-robust");
}

/// w = root^r . u1 . u2 . root^s with root = u1 . letter . u2.
struct Decomposition {
  std::size_t r = 0;
  Word u1;
  Word u2;
  std::size_t s = 0;

  friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

inline bool is_valid_witness(const Word& w, const InsertionWitness& wit) {
  if (wit.position > w.size() || wit.letter >= w.alphabet_size() || wit.power < 2) return false;
  if (wit.root.empty() || wit.root.alphabet_size() != w.alphabet_size()) return false;
  if (!is_primitive(wit.root)) return false;
  return insert(w, wit.position, wit.letter) == wit.root.power(wit.power);
}

inline Decomposition non_ins_robust_decomposition(const Word& w, const InsertionWitness& wit) {
  if (!is_valid_witness(w, wit)) throw std::invalid_argument("insertion witness is not valid for this word");
  const std::size_t q = wit.root.size();
  const std::size_t r = wit.position / q;
  const std::size_t cut = wit.position % q;
  Decomposition d{r, wit.root.factor(0, cut), wit.root.factor(cut + 1, q - cut - 1), wit.power - r - 1};
  // Symbol-by-symbol reconstruction.
  const Word rebuilt = wit.root.power(d.r) + d.u1 + d.u2 + wit.root.power(d.s);
  if (rebuilt != w || d.r + d.s < 1 || wit.root[cut] != wit.letter)
    throw theorem_violation("witness does not factor as root^r u1 u2 root^s");
  return d;
}

}  // namespace insrobust
