#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace insrobust {

/// Index of a letter inside its Alphabet.
using symbol = std::uint8_t;

inline constexpr std::size_t max_alphabet_size = 256;

/// Finite word over an alphabet of `alphabet_size()` letters. Words are
/// immutable values; every operation below returns a fresh Word.
class Word {
 public:
  Word() = default;

  Word(std::vector<symbol> symbols, std::size_t alphabet_size)
      : symbols_(std::move(symbols)), alphabet_size_(alphabet_size) {
    if (alphabet_size_ == 0 || alphabet_size_ > max_alphabet_size)
      throw std::invalid_argument("alphabet size must be in [1, 256]");
    for (symbol s : symbols_)
      if (s >= alphabet_size_)
        throw std::invalid_argument("symbol index outside the alphabet");
  }

  std::size_t size() const noexcept { return symbols_.size(); }
  bool empty() const noexcept { return symbols_.empty(); }
  std::size_t alphabet_size() const noexcept { return alphabet_size_; }

  symbol operator[](std::size_t i) const noexcept { return symbols_[i]; }
  std::span<const symbol> symbols() const noexcept { return symbols_; }

  auto begin() const noexcept { return symbols_.begin(); }
  auto end() const noexcept { return symbols_.end(); }

  /// w[pos..pos+len)
  Word factor(std::size_t pos, std::size_t len) const {
    if (pos > size() || len > size() - pos)
      throw std::out_of_range("factor out of range");
    return Word(std::vector<symbol>(symbols_.begin() + static_cast<std::ptrdiff_t>(pos),
                                    symbols_.begin() + static_cast<std::ptrdiff_t>(pos + len)),
                alphabet_size_);
  }

  /// this^e
  Word power(std::size_t e) const {
    std::vector<symbol> out;
    out.reserve(size() * e);
    for (std::size_t i = 0; i < e; ++i) out.insert(out.end(), symbols_.begin(), symbols_.end());
    return Word(std::move(out), alphabet_size_);
  }

  friend Word operator+(const Word& a, const Word& b) {
    if (a.alphabet_size_ != b.alphabet_size_)
      throw std::invalid_argument("concatenating words over different alphabets");
    std::vector<symbol> out(a.symbols_);
    out.insert(out.end(), b.symbols_.begin(), b.symbols_.end());
    return Word(std::move(out), a.alphabet_size_);
  }

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;

 private:
  std::vector<symbol> symbols_;
  std::size_t alphabet_size_ = max_alphabet_size;
};

/// Ordered set of distinct atomic symbols. Symbols are strings so that a
/// letter may be a single byte or a multi-byte UTF-8 codepoint.
class Alphabet {
 public:
  explicit Alphabet(std::vector<std::string> symbols) : symbols_(std::move(symbols)) {
    if (symbols_.empty()) throw std::invalid_argument("alphabet must contain at least one symbol");
    if (symbols_.size() > max_alphabet_size)
      throw std::invalid_argument("alphabet holds at most 256 symbols");
    for (std::size_t i = 0; i < symbols_.size(); ++i) {
      if (symbols_[i].empty()) throw std::invalid_argument("alphabet symbols must be non-empty");
      if (!index_.emplace(symbols_[i], static_cast<symbol>(i)).second)
        throw std::invalid_argument("duplicate alphabet symbol '" + symbols_[i] + "'");
    }
  }

  /// One symbol per byte, in the given order.
  static Alphabet from_chars(std::string_view chars) {
    std::vector<std::string> s;
    for (char c : chars) s.emplace_back(1, c);
    return Alphabet(std::move(s));
  }

  /// The first k symbols of a..z A..Z 0..9.
  static Alphabet first(std::size_t k) {
    static constexpr std::string_view pool =
        "abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789";
    if (k == 0 || k > pool.size())
      throw std::invalid_argument("default alphabets have between 1 and 62 letters");
    return from_chars(pool.substr(0, k));
  }

  std::size_t size() const noexcept { return symbols_.size(); }
  const std::string& operator[](symbol s) const { return symbols_.at(s); }
  const std::vector<std::string>& symbols() const noexcept { return symbols_; }

  bool contains(std::string_view token) const { return index_.count(std::string(token)) != 0; }

  symbol index_of(std::string_view token) const {
    auto it = index_.find(std::string(token));
    if (it == index_.end())
      throw std::invalid_argument("symbol '" + std::string(token) + "' is not in the alphabet");
    return it->second;
  }

  /// Word from a sequence of symbol tokens.
  Word word(std::span<const std::string> tokens) const {
    std::vector<symbol> out;
    out.reserve(tokens.size());
    for (const auto& t : tokens) out.push_back(index_of(t));
    return Word(std::move(out), size());
  }

  /// Word from a byte string; only valid when every symbol is one byte long.
  Word word(std::string_view text) const {
    std::vector<symbol> out;
    out.reserve(text.size());
    for (char c : text) out.push_back(index_of(std::string_view(&c, 1)));
    return Word(std::move(out), size());
  }

  Word word(std::initializer_list<symbol> indices) const {
    return Word(std::vector<symbol>(indices), size());
  }

  std::string str(const Word& w) const {
    std::string out;
    for (symbol s : w) out += symbols_.at(s);
    return out;
  }

  friend bool operator==(const Alphabet& a, const Alphabet& b) { return a.symbols_ == b.symbols_; }

 private:
  std::vector<std::string> symbols_;
  std::unordered_map<std::string, symbol> index_;
};

/// w[i..n) . w[0..i)
inline Word rotate(const Word& w, std::size_t i) {
  if (i > w.size()) throw std::out_of_range("rotation offset exceeds word length");
  std::vector<symbol> out(w.begin(), w.end());
  std::rotate(out.begin(), out.begin() + static_cast<std::ptrdiff_t>(i), out.end());
  return Word(std::move(out), w.alphabet_size());
}

inline Word reverse(const Word& w) {
  return Word(std::vector<symbol>(w.symbols().rbegin(), w.symbols().rend()), w.alphabet_size());
}

/// w[0..pos) . c . w[pos..n)
inline Word insert(const Word& w, std::size_t pos, symbol c) {
  if (pos > w.size()) throw std::out_of_range("insertion position exceeds word length");
  if (c >= w.alphabet_size()) throw std::invalid_argument("inserted symbol is not in the word's alphabet");
  std::vector<symbol> out;
  out.reserve(w.size() + 1);
  out.insert(out.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(pos));
  out.push_back(c);
  out.insert(out.end(), w.begin() + static_cast<std::ptrdiff_t>(pos), w.end());
  return Word(std::move(out), w.alphabet_size());
}

}  // namespace insrobust
