// Batch workflows behind the keydenoise command-line tool: denoise, train,
// extract, cv and sweep. Each command reads a RunConfig, writes its files
// under the output directory and prints a summary.
#pragma once

#include <cstdint>
#include <filesystem>
#include <iomanip>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "keydenoise/corpus.hpp"
#include "keydenoise/denoiser.hpp"
#include "keydenoise/error.hpp"
#include "keydenoise/eval.hpp"
#include "keydenoise/model.hpp"
#include "keydenoise/vocab.hpp"

namespace keydenoise {

/// Number of keyphrases to extract per document, named after the corpora
/// whose average keyphrase counts they match.
inline std::optional<std::size_t> k_preset(std::string_view name) {
  static const std::map<std::string, std::size_t, std::less<>> kPresets = {
      {"fao780", 8}, {"cern290", 7}, {"nlm500", 15}};
  auto it = kPresets.find(casefold(name));
  if (it == kPresets.end()) return std::nullopt;
  return it->second;
}

struct RunConfig {
  std::string corpus;
  std::string vocab;      // empty: free-text indexing
  std::string stopwords;  // empty: built-in list
  std::string out = ".";
  std::string model;      // model file; default <out>/model.kdm
  double threshold = 0.7;
  std::size_t k = 8;
  std::size_t min_len = 1;
  std::size_t max_len = 5;
  std::uint64_t seed = 1;
  std::string text_variant = "full";
  std::vector<std::string> pairings;  // empty: command default
  std::vector<double> thresholds = default_sweep_thresholds();
  bool free_text = false;  // with a vocabulary, keep unmatched candidates too
  std::size_t workers = 0;
  std::set<std::string> explicit_keys;  // keys set by flag or config file

  std::string model_path() const {
    return model.empty() ? (std::filesystem::path(out) / "model.kdm").string() : model;
  }
};

namespace detail {

inline std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s + ",") {
    if (c == ',') {
      const auto b = cur.find_first_not_of(" \t");
      if (b != std::string::npos) out.push_back(cur.substr(b, cur.find_last_not_of(" \t") - b + 1));
      cur.clear();
    } else {
      cur += c;
    }
  }
  return out;
}

inline double parse_real(const std::string& key, const std::string& v) {
  std::size_t used = 0;
  double d = 0;
  try {
    d = std::stod(v, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != v.size() || v.empty()) throw Error(key + ": not a number: " + v);
  return d;
}

inline std::uint64_t parse_unsigned(const std::string& key, const std::string& v) {
  if (v.empty() || v.find_first_not_of("0123456789") != std::string::npos) {
    throw Error(key + ": not a non-negative integer: " + v);
  }
  try {
    return std::stoull(v);
  } catch (const std::exception&) {
    throw Error(key + ": out of range: " + v);
  }
}

}  // namespace detail

/// Sets one option from its textual value (config-file or flag form).
inline void apply_option(RunConfig& c, const std::string& key, const std::string& value) {
  if (key == "corpus") {
    c.corpus = value;
  } else if (key == "vocab") {
    c.vocab = value;
  } else if (key == "stopwords") {
    c.stopwords = value;
  } else if (key == "out") {
    c.out = value;
  } else if (key == "model") {
    c.model = value;
  } else if (key == "threshold") {
    c.threshold = detail::parse_real(key, value);
  } else if (key == "k") {
    if (auto preset = k_preset(value)) {
      c.k = *preset;
    } else {
      c.k = static_cast<std::size_t>(detail::parse_unsigned(key, value));
    }
  } else if (key == "min-len") {
    c.min_len = static_cast<std::size_t>(detail::parse_unsigned(key, value));
  } else if (key == "max-len") {
    c.max_len = static_cast<std::size_t>(detail::parse_unsigned(key, value));
  } else if (key == "seed") {
    c.seed = detail::parse_unsigned(key, value);
  } else if (key == "text-variant") {
    c.text_variant = casefold(value);
  } else if (key == "pairings") {
    c.pairings = detail::split_commas(value);
  } else if (key == "thresholds") {
    c.thresholds.clear();
    for (const auto& t : detail::split_commas(value)) c.thresholds.push_back(detail::parse_real(key, t));
  } else if (key == "free-text") {
    const std::string v = casefold(value);
    if (v == "true" || v == "1" || v == "yes") {
      c.free_text = true;
    } else if (v == "false" || v == "0" || v == "no") {
      c.free_text = false;
    } else {
      throw Error("free-text: expected true or false: " + value);
    }
  } else if (key == "workers") {
    c.workers = static_cast<std::size_t>(detail::parse_unsigned(key, value));
  } else {
    throw Error("unknown option: " + key);
  }
  c.explicit_keys.insert(key);
}

/// Flat key=value file; '#' starts a comment line. Keys are the long flag
/// names without dashes, e.g. "threshold = 0.7".
inline std::map<std::string, std::string> parse_config_text(std::string_view text) {
  std::map<std::string, std::string> out;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos || line[b] == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw Error("config line " + std::to_string(line_no) + ": expected key=value");
    auto trim = [](std::string s) {
      const auto f = s.find_first_not_of(" \t\r");
      if (f == std::string::npos) return std::string{};
      return s.substr(f, s.find_last_not_of(" \t\r") - f + 1);
    };
    out[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
  }
  return out;
}

/// Range checks shared by all commands.
inline void validate(const RunConfig& c) {
  check_threshold(c.threshold);
  if (c.k < 1) throw Error("k must be at least 1");
  if (c.min_len < 1 || c.min_len > c.max_len) throw Error("phrase lengths need 1 <= min-len <= max-len");
  parse_variant(c.text_variant);
  for (const auto& p : c.pairings) parse_pairing(p);
  if (c.thresholds.empty()) throw Error("thresholds must not be empty");
  for (double t : c.thresholds) check_threshold(t);
  if (c.corpus.empty()) throw Error("--corpus is required");
}

namespace detail {

struct Resources {
  StopwordList stopwords;
  std::optional<Vocabulary> vocabulary;

  const Vocabulary* vocab() const { return vocabulary ? &*vocabulary : nullptr; }
};

inline Resources load_resources(const RunConfig& c) {
  Resources r;
  r.stopwords = c.stopwords.empty() ? StopwordList::builtin() : StopwordList::load(c.stopwords);
  if (!c.vocab.empty()) r.vocabulary = Vocabulary::load(c.vocab);
  return r;
}

inline ModelConfig model_config(const RunConfig& c) {
  ModelConfig m;
  m.min_len = c.min_len;
  m.max_len = c.max_len;
  m.vocabulary_only = !c.free_text;
  return m;
}

inline Document text_variant(const Document& d, TextVariant v, double threshold) {
  if (v == TextVariant::kFull) return d;
  auto parts = split_document(d, denoise(d, threshold));
  return v == TextVariant::kDenoised ? std::move(parts.denoised) : std::move(parts.noise);
}

inline std::vector<Pairing> pairings_of(const RunConfig& c, std::vector<Pairing> fallback) {
  if (c.pairings.empty()) return fallback;
  std::vector<Pairing> out;
  for (const auto& p : c.pairings) out.push_back(parse_pairing(p));
  return out;
}

inline CrossValidationConfig cv_config(const RunConfig& c, std::vector<Pairing> default_pairings) {
  CrossValidationConfig cv;
  cv.threshold = c.threshold;
  cv.k_extract = c.k;
  cv.seed = c.seed;
  cv.pairings = pairings_of(c, std::move(default_pairings));
  cv.model = model_config(c);
  cv.workers = c.workers;
  return cv;
}

inline std::string fixed2(double v) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(2) << v;
  return os.str();
}

inline std::string variant_label(TextVariant v) { return std::string(variant_name(v)) + " Text"; }

}  // namespace detail

/// Results table: one row per pairing with P/R/F and the t value against
/// the Full-Full benchmark.
inline void print_cv_table(const EvaluationReport& report, std::ostream& out) {
  out << std::left << std::setw(16) << "Trained Model" << std::setw(16) << "Test Set" << std::right
      << std::setw(10) << "Precision" << std::setw(10) << "Recall" << std::setw(10) << "F-score" << std::setw(10)
      << "t value" << "\n";
  for (const auto& s : report.summaries) {
    std::string t;
    if (s.pairing == kBenchmark) {
      t = "bench";
    } else {
      t = std::isinf(s.versus_benchmark.t) ? format_double(s.versus_benchmark.t) : detail::fixed2(s.versus_benchmark.t);
      if (s.versus_benchmark.significant_05) t += "*";
    }
    out << std::left << std::setw(16) << detail::variant_label(s.pairing.model) << std::setw(16)
        << detail::variant_label(s.pairing.test) << std::right << std::setw(10) << detail::fixed2(s.precision)
        << std::setw(10) << detail::fixed2(s.recall) << std::setw(10) << detail::fixed2(s.fscore) << std::setw(10)
        << t << "\n";
  }
  out << "threshold " << report.threshold << ", k " << report.k_extract << ", " << report.folds
      << " folds; * significant at alpha 0.05 (|t| > " << kTCritical05 << ")\n";
}

/// Writes <out>/<id>.denoised.txt and <out>/<id>.noise.txt per document.
/// Documents that fail are reported on err and make the exit status 1.
inline int cmd_denoise(const RunConfig& c, std::ostream& out, std::ostream& err) {
  validate(c);
  const auto res = detail::load_resources(c);
  std::filesystem::create_directories(c.out);
  int status = 0;
  DenoiseSummary total;
  std::size_t documents = 0;
  for (const auto& entry : list_corpus(c.corpus)) {
    try {
      const Document doc = load_entry(entry, false, res.stopwords);
      const auto p = denoise(doc, c.threshold);
      write_file(std::filesystem::path(c.out) / (doc.id + ".denoised.txt"), join_sentences(doc, p.denoised));
      write_file(std::filesystem::path(c.out) / (doc.id + ".noise.txt"), join_sentences(doc, p.noise));
      total.input_words += doc.word_count;
      total.denoised_words += word_count_of(doc, p.denoised);
      total.noise_words += word_count_of(doc, p.noise);
      ++documents;
    } catch (const Error& e) {
      err << nlohmann::json{{"error", e.what()}, {"document", entry.id}}.dump() << "\n";
      status = 1;
    }
  }
  out << "documents\t" << documents << "\n"
      << "threshold\t" << c.threshold << "\n"
      << "input_words\t" << total.input_words << "\n"
      << "denoised_words\t" << total.denoised_words << "\n"
      << "noise_words\t" << total.noise_words << "\n";
  return status;
}

/// Trains one model on the chosen text variant of the corpus.
inline int cmd_train(const RunConfig& c, std::ostream& out, std::ostream&) {
  validate(c);
  const auto res = detail::load_resources(c);
  const auto corpus = load_corpus(c.corpus, true, res.stopwords);
  const TextVariant variant = parse_variant(c.text_variant);
  if (variant == TextVariant::kNoise) throw Error("models are trained on full or denoised text only");
  std::vector<Document> training;
  for (const auto& d : corpus) training.push_back(detail::text_variant(d, variant, c.threshold));

  ModelConfig mc = detail::model_config(c);
  mc.text_variant = c.text_variant;
  mc.threshold = variant == TextVariant::kFull ? 1.0 : c.threshold;
  const TrainedModel model = train(training, res.vocab(), mc);
  std::filesystem::create_directories(std::filesystem::path(c.model_path()).parent_path().empty()
                                          ? std::filesystem::path(".")
                                          : std::filesystem::path(c.model_path()).parent_path());
  save_model(model, c.model_path());
  out << "documents\t" << training.size() << "\n"
      << "instances\t" << static_cast<std::size_t>(model.class_counts[0] + model.class_counts[1]) << "\n"
      << "positive_instances\t" << static_cast<std::size_t>(model.class_counts[1]) << "\n"
      << "candidate_phrases\t" << model.df_table.size() << "\n"
      << "model\t" << c.model_path() << "\n";
  return 0;
}

/// Writes <out>/<id>.maui with up to k lines "rank<TAB>surface<TAB>score".
inline int cmd_extract(const RunConfig& c, std::ostream& out, std::ostream&) {
  validate(c);
  const auto res = detail::load_resources(c);
  const TrainedModel model = load_model(c.model_path());
  check_vocabulary(model.config, res.vocab());
  if ((c.explicit_keys.count("min-len") && c.min_len != model.config.min_len) ||
      (c.explicit_keys.count("max-len") && c.max_len != model.config.max_len)) {
    throw Error("model/config mismatch: phrase length bounds differ from the model's");
  }
  if (c.explicit_keys.count("free-text") && c.free_text == model.config.vocabulary_only) {
    throw Error("model/config mismatch: vocabulary mode differs from the model's");
  }
  const TextVariant variant = parse_variant(c.text_variant);
  std::filesystem::create_directories(c.out);
  std::size_t documents = 0;
  for (const auto& entry : list_corpus(c.corpus)) {
    const Document doc = load_entry(entry, false, res.stopwords);
    std::string text;
    if (!doc.sentences.empty()) {
      const Document target = detail::text_variant(doc, variant, c.threshold);
      const auto top = extract_top_k(model, target, c.k, res.vocab());
      for (std::size_t i = 0; i < top.size(); ++i) {
        text += std::to_string(i + 1) + "\t" + top[i].surface_form + "\t" + format_double(top[i].score) + "\n";
      }
    }
    write_file(std::filesystem::path(c.out) / (doc.id + ".maui"), text);
    ++documents;
  }
  out << "documents\t" << documents << "\n";
  return 0;
}

/// Cross-validation report: <out>/report.csv and <out>/report.json.
inline int cmd_cv(const RunConfig& c, std::ostream& out, std::ostream&) {
  validate(c);
  const auto res = detail::load_resources(c);
  const auto corpus = load_corpus(c.corpus, true, res.stopwords);
  const auto report = cross_validate(corpus, res.vocab(), detail::cv_config(c, default_cv_pairings()));
  std::filesystem::create_directories(c.out);
  write_file(std::filesystem::path(c.out) / "report.csv", report_csv(report));
  write_file(std::filesystem::path(c.out) / "report.json", report_json(report).dump(2) + "\n");
  print_cv_table(report, out);
  return 0;
}

/// Threshold sweep: <out>/sweep.csv (per fold), <out>/sweep_curve.csv (means)
/// and <out>/sweep.json (curves and argmin thresholds).
inline int cmd_sweep(const RunConfig& c, std::ostream& out, std::ostream&) {
  validate(c);
  const auto res = detail::load_resources(c);
  const auto corpus = load_corpus(c.corpus, true, res.stopwords);
  const auto sweep = threshold_sweep(corpus, res.vocab(), c.thresholds, detail::cv_config(c, all_pairings()));
  std::filesystem::create_directories(c.out);
  write_file(std::filesystem::path(c.out) / "sweep.csv", sweep_csv(sweep));
  write_file(std::filesystem::path(c.out) / "sweep_curve.csv", sweep_curve_csv(sweep));
  write_file(std::filesystem::path(c.out) / "sweep.json", sweep_json(sweep).dump(2) + "\n");
  out << std::left << std::setw(20) << "pairing";
  for (const auto& r : sweep.reports) out << std::setw(10) << format_double(r.threshold);
  out << "argmin\n";
  for (const auto& [p, t] : sweep.argmin_threshold) {
    out << std::setw(20) << p.name();
    for (double e : sweep.curve(p)) out << std::setw(10) << detail::fixed2(100.0 * e);
    out << format_double(t) << "\n";
  }
  out << "(mean error rate, percent)\n";
  return 0;
}

}  // namespace keydenoise
