#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "insrobust/classify.hpp"
#include "insrobust/word.hpp"

namespace insrobust {

/// Serializable classification of one input word. Letters and roots are
/// rendered through the alphabet the word was parsed with.
struct OutputRecord {
  struct Witness {
    std::size_t position = 0;
    std::string letter;
    std::string root;
    std::size_t power = 0;
    friend bool operator==(const Witness&, const Witness&) = default;
  };

  std::string word;
  std::string verdict;
  std::optional<std::string> root;
  std::optional<std::size_t> exponent;
  std::vector<Witness> witnesses;

  friend bool operator==(const OutputRecord&, const OutputRecord&) = default;
};

inline OutputRecord make_record(const Word& w, const Alphabet& alphabet, const Classification& c) {
  OutputRecord rec;
  rec.word = alphabet.str(w);
  rec.verdict = to_string(c.verdict());
  if (const auto* np = c.non_primitive()) {
    rec.root = alphabet.str(np->root);
    rec.exponent = np->exponent;
  }
  if (const auto* nir = c.non_ins_robust()) {
    auto sorted = nir->witnesses;
    std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
      return a.position != b.position ? a.position < b.position : a.letter < b.letter;
    });
    for (const auto& wit : sorted)
      rec.witnesses.push_back({wit.position, alphabet[wit.letter], alphabet.str(wit.root), wit.power});
  }
  return rec;
}

/// Field order: word, verdict, root, exponent, witnesses.
inline nlohmann::ordered_json to_json(const OutputRecord& rec) {
  nlohmann::ordered_json j;
  j["word"] = rec.word;
  j["verdict"] = rec.verdict;
  if (rec.root) j["root"] = *rec.root;
  if (rec.exponent) j["exponent"] = *rec.exponent;
  if (rec.verdict == "non-ins-robust") {
    j["witnesses"] = nlohmann::ordered_json::array();
    for (const auto& w : rec.witnesses) {
      nlohmann::ordered_json o;
      o["position"] = w.position;
      o["letter"] = w.letter;
      o["root"] = w.root;
      o["power"] = w.power;
      j["witnesses"].push_back(std::move(o));
    }
  }
  return j;
}

inline std::string to_jsonl(const OutputRecord& rec) { return to_json(rec).dump(); }

inline OutputRecord record_from_json(const nlohmann::json& j) {
  OutputRecord rec;
  rec.word = j.at("word").get<std::string>();
  rec.verdict = j.at("verdict").get<std::string>();
  if (j.contains("root")) rec.root = j.at("root").get<std::string>();
  if (j.contains("exponent")) rec.exponent = j.at("exponent").get<std::size_t>();
  if (j.contains("witnesses"))
    for (const auto& o : j.at("witnesses"))
      rec.witnesses.push_back({o.at("position").get<std::size_t>(), o.at("letter").get<std::string>(),
                               o.at("root").get<std::string>(), o.at("power").get<std::size_t>()});
  return rec;
}

inline OutputRecord parse_jsonl(const std::string& line) { return record_from_json(nlohmann::json::parse(line)); }

/// Rechecks a parsed record against its word: non-primitive roots must
/// reconstruct the word and every witness must produce root^power.
/// `tokenize` splits a rendered string into alphabet symbols.
template <typename Tokenize>
bool validate_record(const OutputRecord& rec, const Alphabet& alphabet, Tokenize&& tokenize) {
  const Word w = alphabet.word(tokenize(rec.word));
  if (rec.verdict == "non-primitive") {
    if (!rec.root || !rec.exponent) return false;
    const Word root = alphabet.word(tokenize(*rec.root));
    return is_primitive(root) && *rec.exponent >= 2 && root.power(*rec.exponent) == w;
  }
  if (!is_primitive(w)) return false;
  if (rec.verdict == "ins-robust") return rec.witnesses.empty();
  if (rec.verdict != "non-ins-robust" || rec.witnesses.empty()) return false;
  for (const auto& wr : rec.witnesses) {
    const InsertionWitness wit{wr.position, alphabet.index_of(wr.letter), alphabet.word(tokenize(wr.root)), wr.power};
    if (!is_valid_witness(w, wit)) return false;
  }
  return true;
}

}  // namespace insrobust
