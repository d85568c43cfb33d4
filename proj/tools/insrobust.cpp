// insrobust: classify words by primitivity and ins-robustness, list runs,
// run exhaustive censuses, print exact counts and time the classifiers.
//
// Exit codes: 0 success, 1 internal failure (classifier mismatch),
// 2 usage or input error, 3 resource budget exceeded.

#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "insrobust/bench.hpp"
#include "insrobust/insrobust.hpp"
#include "insrobust/text.hpp"

namespace {

using namespace insrobust;

constexpr int exit_ok = 0;
constexpr int exit_failure = 1;
constexpr int exit_usage = 2;
constexpr int exit_budget = 3;

struct usage_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Common {
  std::string alphabet;
  std::string format = "human";
  bool unicode = false;
  SymbolMode mode() const { return unicode ? SymbolMode::unicode : SymbolMode::bytes; }
};

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> read_lines(std::istream& in, const std::string& source) {
  std::vector<std::string> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto t = trim(line);
    if (t.empty()) {
      if (!line.empty()) std::cerr << "warning: " << source << ":" << lineno << ": skipping whitespace-only line\n";
      continue;
    }
    out.push_back(t);
  }
  return out;
}

Alphabet explicit_alphabet(const Common& c) {
  try {
    return Alphabet(tokenize(c.alphabet, c.mode()));
  } catch (const std::invalid_argument& e) {
    throw usage_error(std::string("--alphabet: ") + e.what());
  }
}

Alphabet resolve_alphabet(const Common& c, const std::vector<std::string>& words) {
  if (!c.alphabet.empty()) {
    Alphabet a = explicit_alphabet(c);
    if (a.size() < 2) throw usage_error("--alphabet must name at least two symbols");
    return a;
  }
  Alphabet a = infer_alphabet(words, c.mode());
  if (a.size() < 2)
    throw usage_error("inferred alphabet {" + a.symbols().front() +
                      "} has a single letter; pass --alphabet with at least two symbols");
  return a;
}

Word parse_word(const Alphabet& a, const std::string& text, SymbolMode mode) {
  try {
    return a.word(tokenize(text, mode));
  } catch (const std::invalid_argument& e) {
    throw usage_error("word '" + text + "': " + e.what());
  }
}

void require_format(const std::string& f, std::initializer_list<const char*> allowed) {
  for (const char* a : allowed)
    if (f == a) return;
  throw usage_error("unsupported --format '" + f + "' for this command");
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string format_ratio(const Ratio& r) {
  std::ostringstream os;
  os << r.value();
  return os.str();
}

// ---- classify ---------------------------------------------------------------

int cmd_classify(const Common& c, const std::vector<std::string>& args, const std::string& file, bool oracle) {
  require_format(c.format, {"human", "jsonl"});
  std::vector<std::string> words;
  if (!file.empty()) {
    std::ifstream in(file);
    if (!in) throw usage_error("cannot open --file '" + file + "'");
    words = read_lines(in, file);
  }
  for (const auto& a : args) {
    if (trim(a).empty()) throw usage_error("empty word argument");
    words.push_back(a);
  }
  if (file.empty() && args.empty()) words = read_lines(std::cin, "<stdin>");
  if (words.empty()) throw usage_error("no words to classify");

  const Alphabet alphabet = resolve_alphabet(c, words);
  std::vector<Word> parsed;
  parsed.reserve(words.size());
  for (const auto& w : words) parsed.push_back(parse_word(alphabet, w, c.mode()));

  std::vector<OutputRecord> records(parsed.size());
  for_each_shard(parsed.size(), 64, worker_count_from_env(), [&](std::size_t, std::size_t b, std::size_t e) {
    for (std::size_t i = b; i < e; ++i) {
      const auto cls = oracle ? classify_oracle(parsed[i], alphabet) : classify_fast(parsed[i], alphabet);
      records[i] = make_record(parsed[i], alphabet, cls);
    }
  });

  for (const auto& rec : records) {
    if (c.format == "jsonl") {
      std::cout << to_jsonl(rec) << '\n';
      continue;
    }
    std::cout << rec.word << '\t' << rec.verdict;
    if (rec.root) std::cout << "\troot=" << *rec.root << " exponent=" << *rec.exponent;
    for (const auto& w : rec.witnesses)
      std::cout << "\tinsert " << w.letter << " at " << w.position << " -> (" << w.root << ")^" << w.power;
    std::cout << '\n';
  }
  return exit_ok;
}

// ---- runs -------------------------------------------------------------------

int cmd_runs(const Common& c, const std::string& text) {
  require_format(c.format, {"human", "csv", "jsonl"});
  if (text.empty()) throw usage_error("runs needs a non-empty word");
  const Alphabet alphabet = c.alphabet.empty() ? infer_alphabet({text}, c.mode()) : explicit_alphabet(c);
  const Word w = parse_word(alphabet, text, c.mode());
  const auto runs = find_maximal_repetitions(w);
  if (c.format == "csv") {
    std::cout << "start,length,period,exponent\n";
    for (const auto& r : runs)
      std::cout << r.start << ',' << r.length << ',' << r.period << ',' << format_ratio(r.exponent()) << '\n';
  } else if (c.format == "jsonl") {
    for (const auto& r : runs) {
      nlohmann::ordered_json j;
      j["start"] = r.start;
      j["length"] = r.length;
      j["period"] = r.period;
      j["exponent"] = r.exponent().value();
      std::cout << j.dump() << '\n';
    }
  } else {
    std::cout << std::left << std::setw(8) << "start" << std::setw(8) << "length" << std::setw(8) << "period"
              << "exponent\n";
    for (const auto& r : runs)
      std::cout << std::setw(8) << r.start << std::setw(8) << r.length << std::setw(8) << r.period
                << format_ratio(r.exponent()) << '\n';
  }
  return exit_ok;
}

// ---- census -----------------------------------------------------------------

int cmd_census(const Common& c, std::size_t n, std::size_t k, bool list, bool oracle, std::uint64_t budget) {
  require_format(c.format, {"human", "csv", "jsonl"});
  Alphabet alphabet = Alphabet::first(2);
  if (!c.alphabet.empty()) {
    alphabet = explicit_alphabet(c);
    if (alphabet.size() != k) throw usage_error("--alphabet size does not match k");
  } else {
    if (k < 2 || k > 62) throw usage_error("k must be between 2 and 62 without --alphabet");
    alphabet = Alphabet::first(k);
  }
  if (n == 0) throw usage_error("n must be at least 1");

  CensusOptions opt;
  opt.list_words = list;
  opt.classifier = oracle ? Classifier::audit : Classifier::fast;
  opt.budget = budget;
  opt.workers = worker_count_from_env();
  const CensusReport rep = census(n, alphabet, opt);

  constexpr Verdict order[] = {Verdict::non_primitive, Verdict::ins_robust, Verdict::non_ins_robust};
  if (c.format == "csv") {
    if (list) {
      std::cout << "n,k,word,verdict\n";
      for (Verdict v : order)
        for (const auto& w : rep.words[static_cast<std::size_t>(v)])
          std::cout << n << ',' << k << ',' << csv_field(alphabet.str(w)) << ',' << to_string(v) << '\n';
    } else {
      std::cout << "n,k,non_primitive,ins_robust,non_ins_robust\n"
                << n << ',' << k << ',' << rep.count(Verdict::non_primitive) << ','
                << rep.count(Verdict::ins_robust) << ',' << rep.count(Verdict::non_ins_robust) << '\n';
    }
  } else if (c.format == "jsonl") {
    nlohmann::ordered_json j;
    j["n"] = n;
    j["k"] = k;
    for (Verdict v : order) j["counts"][to_string(v)] = rep.count(v);
    if (list)
      for (Verdict v : order) {
        auto& arr = j["words"][to_string(v)] = nlohmann::ordered_json::array();
        for (const auto& w : rep.words[static_cast<std::size_t>(v)]) arr.push_back(alphabet.str(w));
      }
    std::cout << j.dump() << '\n';
  } else {
    std::cout << "n=" << n << " k=" << k << (oracle ? " (audited against oracle)" : "") << '\n';
    for (Verdict v : order) {
      std::cout << std::left << std::setw(16) << to_string(v) << rep.count(v) << '\n';
      if (list)
        for (const auto& w : rep.words[static_cast<std::size_t>(v)]) std::cout << "  " << alphabet.str(w) << '\n';
    }
  }
  return exit_ok;
}

// ---- count ------------------------------------------------------------------

int cmd_count(const Common& c, std::uint64_t n, std::uint64_t k) {
  require_format(c.format, {"human", "csv", "jsonl"});
  if (n == 0) throw usage_error("n must be at least 1");
  if (k < 1) throw usage_error("k must be at least 1");
  const bigint total = big_pow(k, n);
  const bigint primitive = count_primitive(n, k);
  std::optional<CountReport> rep;
  if (n >= 2 && k >= 2) rep = count_report(n, k);

  if (c.format == "csv") {
    std::cout << "n,k,total,primitive,nonprimitive,qibar_upper,qi_lower,vacuous\n"
              << n << ',' << k << ',' << total << ',' << primitive << ',' << total - primitive << ',';
    if (rep) std::cout << rep->qibar_upper << ',' << rep->qi_lower << ',' << (rep->vacuous() ? "true" : "false");
    else std::cout << ",,";
    std::cout << '\n';
  } else if (c.format == "jsonl") {
    nlohmann::ordered_json j;
    j["n"] = n;
    j["k"] = k;
    j["total"] = total.str();
    j["primitive"] = primitive.str();
    j["nonprimitive"] = bigint(total - primitive).str();
    if (rep) {
      j["qibar_upper"] = rep->qibar_upper.str();
      j["qi_lower"] = rep->qi_lower.str();
      j["vacuous"] = rep->vacuous();
    }
    std::cout << j.dump() << '\n';
  } else {
    auto row = [](const char* name, const auto& v) { std::cout << std::left << std::setw(14) << name << v << '\n'; };
    row("n", n);
    row("k", k);
    row("total", total);
    row("primitive", primitive);
    row("nonprimitive", bigint(total - primitive));
    if (rep) {
      row("qibar_upper", rep->qibar_upper);
      std::cout << std::left << std::setw(14) << "qi_lower" << rep->qi_lower << (rep->vacuous() ? " (vacuous)" : "")
                << '\n';
    } else {
      std::cout << "note: bound fields need n >= 2 and k >= 2\n";
    }
  }
  return exit_ok;
}

// ---- bench ------------------------------------------------------------------

int cmd_bench(const Common& c, const std::string& sizes_arg, std::size_t trials, std::uint64_t seed,
              std::size_t oracle_cutoff) {
  require_format(c.format, {"human", "csv"});
  std::vector<std::size_t> sizes;
  try {
    sizes = parse_sizes(sizes_arg);
  } catch (const std::exception& e) {
    throw usage_error(std::string("--sizes: ") + e.what());
  }
  if (trials == 0) throw usage_error("--trials must be positive");
  const Alphabet ab = Alphabet::first(2);
  std::mt19937_64 rng(seed);

  std::vector<double> xs, medians;
  if (c.format == "csv") std::cout << "n,fast_mean,fast_median,oracle_mean,oracle_median\n";
  else
    std::cout << std::left << std::setw(10) << "n" << std::setw(14) << "fast_mean" << std::setw(14) << "fast_median"
              << std::setw(14) << "oracle_mean" << "oracle_median\n";
  for (std::size_t n : sizes) {
    const Word w = random_word(n, 2, rng);
    const Timing fast = time_trials([&] { (void)classify_fast(w, ab); }, trials);
    std::optional<Timing> slow;
    if (n <= oracle_cutoff) slow = time_trials([&] { (void)classify_oracle(w, ab); }, trials);
    xs.push_back(static_cast<double>(n));
    medians.push_back(fast.median);
    if (c.format == "csv") {
      std::cout << n << ',' << fast.mean << ',' << fast.median << ',';
      if (slow) std::cout << slow->mean << ',' << slow->median;
      else std::cout << ',';
      std::cout << '\n';
    } else {
      std::cout << std::setw(10) << n << std::setw(14) << fast.mean << std::setw(14) << fast.median;
      if (slow) std::cout << std::setw(14) << slow->mean << slow->median;
      else std::cout << std::setw(14) << "-" << "-";
      std::cout << '\n';
    }
  }
  if (xs.size() >= 2 && c.format == "human")
    std::cout << "log-log slope (classify_fast, median): " << loglog_slope(xs, medians) << '\n';
  return exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Primitivity and ins-robustness of words"};
  app.require_subcommand(1);

  Common common;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--alphabet", common.alphabet, "Alphabet symbols in order (default: inferred)");
    sub->add_option("--format", common.format, "Output format: human|jsonl|csv");
    sub->add_flag("--unicode", common.unicode, "Treat UTF-8 codepoints as symbols instead of bytes");
  };

  std::vector<std::string> classify_words;
  std::string classify_file;
  bool classify_oracle_flag = false;
  auto* classify = app.add_subcommand("classify", "Classify words (args, --file, or stdin one per line)");
  classify->add_option("words", classify_words, "Words to classify");
  classify->add_option("--file", classify_file, "Read words from a file, one per line");
  classify->add_flag("--oracle", classify_oracle_flag, "Use the exhaustive classifier and list every witness");
  add_common(classify);

  std::string runs_word;
  auto* runs = app.add_subcommand("runs", "List the maximal repetitions of a word");
  runs->add_option("word", runs_word, "Word")->required();
  add_common(runs);

  std::size_t census_n = 0, census_k = 0;
  bool census_list = false, census_oracle = false;
  std::uint64_t census_budget = default_census_budget;
  auto* cen = app.add_subcommand("census", "Classify every word of length n over k letters");
  cen->add_option("n", census_n, "Word length")->required();
  cen->add_option("k", census_k, "Alphabet size")->required();
  cen->add_flag("--list", census_list, "List the words in each class");
  cen->add_flag("--oracle", census_oracle, "Re-check every verdict with the exhaustive classifier");
  cen->add_option("--budget", census_budget, "Maximum number of classifications");
  add_common(cen);

  std::uint64_t count_n = 0, count_k = 0;
  auto* cnt = app.add_subcommand("count", "Exact primitive-word counts and ins-robust bounds");
  cnt->add_option("n", count_n, "Word length")->required();
  cnt->add_option("k", count_k, "Alphabet size")->required();
  add_common(cnt);

  std::string bench_sizes = "4096..1048576";
  std::size_t bench_trials = 5;
  std::uint64_t bench_seed = 42;
  std::size_t bench_cutoff = 10000;
  auto* bench = app.add_subcommand("bench", "Time classify_fast (and classify_oracle on small sizes)");
  bench->add_option("--sizes", bench_sizes, "Sizes: lo..hi (doubling) or a comma list");
  bench->add_option("--trials", bench_trials, "Trials per size");
  bench->add_option("--seed", bench_seed, "Random seed");
  bench->add_option("--oracle-cutoff", bench_cutoff, "Largest size timed with the oracle");
  add_common(bench);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return exit_usage;
  }

  try {
    if (*classify) return cmd_classify(common, classify_words, classify_file, classify_oracle_flag);
    if (*runs) return cmd_runs(common, runs_word);
    if (*cen) return cmd_census(common, census_n, census_k, census_list, census_oracle, census_budget);
    if (*cnt) return cmd_count(common, count_n, count_k);
    if (*bench) return cmd_bench(common, bench_sizes, bench_trials, bench_seed, bench_cutoff);
  } catch (const usage_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_usage;
  } catch (const budget_exceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_budget;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_usage;
  } catch (const std::exception& e) {
    std::cerr << "fatal: " << e.what() << '\n';
    return exit_failure;
  }
  return exit_usage;
}
