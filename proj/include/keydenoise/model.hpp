// Discretized Naive Bayes keyphrase model: training, ranking, persistence.
#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "keydenoise/candidates.hpp"
#include "keydenoise/error.hpp"
#include "keydenoise/features.hpp"
#include "keydenoise/textkit.hpp"
#include "keydenoise/vocab.hpp"

namespace keydenoise {

// ---------------------------------------------------------------------------
// Discretization

namespace detail {

inline double entropy2(double a, double b) {
  const double n = a + b;
  if (n <= 0) return 0.0;
  double h = 0.0;
  for (double c : {a, b}) {
    if (c > 0) {
      const double p = c / n;
      h -= p * std::log2(p);
    }
  }
  return h;
}

inline int classes_present(double a, double b) { return (a > 0 ? 1 : 0) + (b > 0 ? 1 : 0); }

// Recursive minimum-description-length splitting of values[lo, hi). prefix[i]
// holds the number of positives among values[0, i).
inline void mdl_split(const std::vector<double>& values, const std::vector<std::size_t>& prefix,
                      std::size_t lo, std::size_t hi, std::vector<double>& cuts) {
  const std::size_t n = hi - lo;
  if (n < 2) return;
  const double pos = static_cast<double>(prefix[hi] - prefix[lo]);
  const double neg = static_cast<double>(n) - pos;
  const double ent = entropy2(pos, neg);

  std::size_t best = 0;
  double best_e = 0;
  for (std::size_t i = lo + 1; i < hi; ++i) {
    if (!(values[i - 1] < values[i])) continue;
    const double lp = static_cast<double>(prefix[i] - prefix[lo]);
    const double ln = static_cast<double>(i - lo) - lp;
    const double rp = pos - lp;
    const double rn = neg - ln;
    const double e = ((lp + ln) * entropy2(lp, ln) + (rp + rn) * entropy2(rp, rn)) / static_cast<double>(n);
    if (best == 0 || e < best_e) {
      best = i;
      best_e = e;
    }
  }
  if (best == 0) return;

  const double lp = static_cast<double>(prefix[best] - prefix[lo]);
  const double ln = static_cast<double>(best - lo) - lp;
  const double rp = pos - lp;
  const double rn = neg - ln;
  const double e1 = entropy2(lp, ln);
  const double e2 = entropy2(rp, rn);
  const int k = classes_present(pos, neg);
  const int k1 = classes_present(lp, ln);
  const int k2 = classes_present(rp, rn);
  const double gain = ent - best_e;
  const double delta = std::log2(std::pow(3.0, k) - 2.0) - (k * ent - k1 * e1 - k2 * e2);
  const double threshold = (std::log2(static_cast<double>(n - 1)) + delta) / static_cast<double>(n);
  if (!(gain > threshold)) return;

  mdl_split(values, prefix, lo, best, cuts);
  cuts.push_back(values[best - 1] + (values[best] - values[best - 1]) / 2.0);
  mdl_split(values, prefix, best, hi, cuts);
}

}  // namespace detail

/// Fayyad-Irani supervised cut points for one feature, ascending.
inline std::vector<double> mdl_cut_points(std::vector<std::pair<double, bool>> instances) {
  std::sort(instances.begin(), instances.end());
  std::vector<double> values(instances.size());
  std::vector<std::size_t> prefix(instances.size() + 1, 0);
  for (std::size_t i = 0; i < instances.size(); ++i) {
    values[i] = instances[i].first;
    prefix[i + 1] = prefix[i] + (instances[i].second ? 1 : 0);
  }
  std::vector<double> cuts;
  detail::mdl_split(values, prefix, 0, values.size(), cuts);
  return cuts;
}

/// Cut points splitting the values into up to `bins` equally populated bins.
inline std::vector<double> equal_frequency_cut_points(std::vector<double> values, std::size_t bins = 10) {
  std::sort(values.begin(), values.end());
  std::vector<double> cuts;
  const std::size_t n = values.size();
  for (std::size_t q = 1; q < bins; ++q) {
    const std::size_t idx = q * n / bins;
    if (idx == 0 || idx >= n) continue;
    const double lo = values[idx - 1];
    const double hi = values[idx];
    if (!(lo < hi)) continue;
    const double cut = lo + (hi - lo) / 2.0;
    if (cuts.empty() || cuts.back() < cut) cuts.push_back(cut);
  }
  return cuts;
}

/// Bin of a value: the number of cut points strictly below it.
inline std::size_t bin_of(const std::vector<double>& cuts, double value) {
  return static_cast<std::size_t>(std::lower_bound(cuts.begin(), cuts.end(), value) - cuts.begin());
}

// ---------------------------------------------------------------------------
// Model

/// Preprocessing settings recorded in the model so extraction matches training.
struct ModelConfig {
  std::size_t min_len = 1;
  std::size_t max_len = 5;
  bool vocabulary_only = true;
  FeatureSet features = all_features();
  std::string vocabulary_fingerprint;  // empty: free-text model
  std::string text_variant = "full";   // full | denoised | noise
  double threshold = 1.0;              // denoising threshold of the training texts

  CandidateOptions candidate_options() const { return {min_len, max_len, vocabulary_only}; }
};

struct TrainedModel {
  ModelConfig config;
  std::array<std::vector<double>, kFeatureCount> cuts;
  std::array<double, 2> class_counts{0, 0};  // [non-key, key]
  // bin_counts[feature][class][bin]
  std::array<std::array<std::vector<double>, 2>, kFeatureCount> bin_counts;
  std::map<std::string, std::size_t> df_table;
  std::size_t corpus_doc_count = 0;
  KeyphrasenessTable keyphraseness;

  double prior(bool key) const {
    return class_counts[key ? 1 : 0] / (class_counts[0] + class_counts[1]);
  }

  /// Laplace-smoothed P(bin | class).
  double conditional(std::size_t feature, bool key, std::size_t bin) const {
    const auto& counts = bin_counts[feature][key ? 1 : 0];
    const double bins = static_cast<double>(counts.size());
    return (counts[bin] + 1.0) / (class_counts[key ? 1 : 0] + bins);
  }

  /// log P(key | x) - log P(non-key | x).
  double log_odds(const FeatureVector& f) const {
    double lo = std::log(prior(true)) - std::log(prior(false));
    const auto v = f.values();
    for (std::size_t i = 0; i < kFeatureCount; ++i) {
      if (!config.features.test(i)) continue;
      const std::size_t b = bin_of(cuts[i], v[i]);
      lo += std::log(conditional(i, true, b)) - std::log(conditional(i, false, b));
    }
    return lo;
  }
};

struct RankedKeyphrase {
  std::string surface_form;
  std::string normalized_form;
  double score = 0;     // posterior probability of the key class
  double log_odds = 0;  // ranking key; monotone in score
};

/// One labelled training instance.
struct TrainingInstance {
  std::string document_id;
  std::string normalized_form;
  FeatureVector features;
  bool key = false;
};

inline void check_vocabulary(const ModelConfig& config, const Vocabulary* vocabulary) {
  const std::string fp = vocabulary != nullptr ? vocabulary->fingerprint() : std::string{};
  if (fp != config.vocabulary_fingerprint) {
    throw Error("model/config mismatch: vocabulary differs from the one used in training");
  }
}

/// Candidates of every training document with their features and labels.
/// Corpus statistics leave the instance's own document out, so that training
/// features are distributed like those of an unseen document.
inline std::vector<TrainingInstance> training_instances(std::vector<const Document*> docs,
                                                        const Vocabulary* vocabulary, const ModelConfig& config,
                                                        std::map<std::string, std::size_t>* df_out = nullptr,
                                                        KeyphrasenessTable* kp_out = nullptr) {
  std::sort(docs.begin(), docs.end(), [](const Document* a, const Document* b) { return a->id < b->id; });
  std::vector<CandidateSet> sets;
  std::vector<std::set<std::string>> golds;
  sets.reserve(docs.size());
  for (const Document* d : docs) {
    golds.push_back(normalized_gold(*d));
    sets.push_back(generate_candidates(*d, config.candidate_options(), vocabulary));
  }
  auto df = merge_document_frequencies(sets);
  KeyphrasenessTable kp;
  kp.training_doc_count = docs.size();
  for (const auto& g : golds) {
    for (const auto& phrase : g) ++kp.docs_where_gold[phrase];
  }

  std::vector<TrainingInstance> out;
  const std::size_t n = docs.size();
  for (std::size_t d = 0; d < n; ++d) {
    const auto terms = candidate_terms(sets[d]);
    for (const auto& [key, c] : sets[d].candidates) {
      const std::string sk = sorted_key(key);
      const bool positive = golds[d].count(sk) != 0;
      FeatureInputs in;
      in.doc_word_count = sets[d].doc_word_count;
      in.df = df.at(key) - 1;
      in.corpus_doc_count = n - 1;
      in.gold_docs = kp.gold_count(sk) - (positive ? 1 : 0);
      in.training_docs = n - 1;
      if (vocabulary != nullptr && c.term_id) {
        in.node_degree = vocabulary->node_degree(*c.term_id, terms);
        in.generality = vocabulary->generality(*c.term_id);
      }
      out.push_back({docs[d]->id, key, features_from(c, in), positive});
    }
  }
  if (df_out) *df_out = std::move(df);
  if (kp_out) *kp_out = std::move(kp);
  return out;
}

inline TrainedModel train(const std::vector<Document>& training_docs, const Vocabulary* vocabulary,
                          ModelConfig config) {
  if (training_docs.size() < 2) throw Error("training needs at least two documents");
  config.vocabulary_fingerprint = vocabulary != nullptr ? vocabulary->fingerprint() : std::string{};
  std::vector<const Document*> docs;
  std::set<std::string> ids;
  for (const auto& d : training_docs) {
    if (!ids.insert(d.id).second) throw Error("duplicate document id: " + d.id);
    docs.push_back(&d);
  }

  TrainedModel model;
  model.config = config;
  const auto instances = training_instances(docs, vocabulary, config, &model.df_table, &model.keyphraseness);
  model.corpus_doc_count = training_docs.size();

  for (const auto& inst : instances) model.class_counts[inst.key ? 1 : 0] += 1;
  if (model.class_counts[1] == 0) throw Error("degenerate training set");

  for (std::size_t f = 0; f < kFeatureCount; ++f) {
    if (!config.features.test(f)) continue;
    std::vector<std::pair<double, bool>> column;
    column.reserve(instances.size());
    for (const auto& inst : instances) column.emplace_back(inst.features.values()[f], inst.key);
    auto cuts = mdl_cut_points(column);
    if (cuts.empty()) {
      std::vector<double> values;
      values.reserve(column.size());
      for (const auto& [v, k] : column) values.push_back(v);
      cuts = equal_frequency_cut_points(std::move(values), 10);
    }
    model.cuts[f] = std::move(cuts);
    for (auto& c : model.bin_counts[f]) c.assign(model.cuts[f].size() + 1, 0.0);
    for (const auto& inst : instances) {
      const std::size_t b = bin_of(model.cuts[f], inst.features.values()[f]);
      model.bin_counts[f][inst.key ? 1 : 0][b] += 1;
    }
  }
  return model;
}

/// Features of a test document's candidates against the model's tables.
inline std::vector<std::pair<const CandidatePhrase*, FeatureVector>> test_features(
    const TrainedModel& model, const CandidateSet& set, const Vocabulary* vocabulary) {
  std::vector<std::pair<const CandidatePhrase*, FeatureVector>> out;
  const auto terms = candidate_terms(set);
  for (const auto& [key, c] : set.candidates) {
    out.emplace_back(&c, compute_features(c, set.doc_word_count, model.df_table, model.corpus_doc_count,
                                          vocabulary, terms, model.keyphraseness));
  }
  return out;
}

/// Sorts by log-odds (equivalently posterior) descending, then normalized form.
inline void sort_ranking(std::vector<RankedKeyphrase>& ranked) {
  std::sort(ranked.begin(), ranked.end(), [](const RankedKeyphrase& a, const RankedKeyphrase& b) {
    if (a.log_odds != b.log_odds) return a.log_odds > b.log_odds;
    return a.normalized_form < b.normalized_form;
  });
}

inline std::vector<RankedKeyphrase> rank_candidate_set(const TrainedModel& model, const CandidateSet& set,
                                                       const Vocabulary* vocabulary) {
  std::vector<RankedKeyphrase> ranked;
  if (set.doc_word_count == 0) return ranked;
  for (const auto& [c, f] : test_features(model, set, vocabulary)) {
    const double lo = model.log_odds(f);
    ranked.push_back({c->surface_form, c->normalized_form, 1.0 / (1.0 + std::exp(-lo)), lo});
  }
  sort_ranking(ranked);
  return ranked;
}

inline std::vector<RankedKeyphrase> rank_candidates(const TrainedModel& model, const Document& document,
                                                    const Vocabulary* vocabulary = nullptr) {
  check_vocabulary(model.config, vocabulary);
  return rank_candidate_set(model, generate_candidates(document, model.config.candidate_options(), vocabulary),
                            vocabulary);
}

inline std::vector<RankedKeyphrase> extract_top_k(const TrainedModel& model, const Document& document,
                                                  std::size_t k, const Vocabulary* vocabulary = nullptr) {
  if (k < 1) throw Error("k must be at least 1");
  auto ranked = rank_candidates(model, document, vocabulary);
  if (ranked.size() > k) ranked.resize(k);
  return ranked;
}

// ---------------------------------------------------------------------------
// Persistence
//
//   KEYDENOISE-MODEL
//   version 1
//   bytes <payload size>
//   fnv1a64 <16 hex digits of the payload hash>
//   <JSON payload>

inline constexpr int kModelFormatVersion = 1;

namespace detail {

inline std::string fnv1a64_hex(std::string_view data) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << h;
  return os.str();
}

}  // namespace detail

inline std::string serialize_model(const TrainedModel& m) {
  using nlohmann::json;
  json j;
  j["config"] = {{"min_len", m.config.min_len},
                 {"max_len", m.config.max_len},
                 {"vocabulary_only", m.config.vocabulary_only},
                 {"features", m.config.features.to_string()},
                 {"vocabulary_fingerprint", m.config.vocabulary_fingerprint},
                 {"text_variant", m.config.text_variant},
                 {"threshold", m.config.threshold}};
  j["feature_names"] = kFeatureNames;
  j["cuts"] = m.cuts;
  j["class_counts"] = m.class_counts;
  j["bin_counts"] = m.bin_counts;
  j["df_table"] = m.df_table;
  j["corpus_doc_count"] = m.corpus_doc_count;
  j["keyphraseness"] = {{"docs_where_gold", m.keyphraseness.docs_where_gold},
                        {"training_doc_count", m.keyphraseness.training_doc_count}};
  const std::string payload = j.dump();
  std::ostringstream os;
  os << "KEYDENOISE-MODEL\nversion " << kModelFormatVersion << "\nbytes " << payload.size() << "\nfnv1a64 "
     << detail::fnv1a64_hex(payload) << "\n"
     << payload;
  return os.str();
}

inline TrainedModel deserialize_model(const std::string& data) {
  std::istringstream in(data);
  std::string line;
  if (!std::getline(in, line) || line != "KEYDENOISE-MODEL") throw Error("not a model file");
  int version = 0;
  std::string word;
  if (!std::getline(in, line) || (std::istringstream(line) >> word >> version, word != "version")) {
    throw Error("corrupted model file: missing version");
  }
  if (version != kModelFormatVersion) {
    throw Error("unsupported model format version " + std::to_string(version));
  }
  std::size_t bytes = 0;
  if (!std::getline(in, line) || (std::istringstream(line) >> word >> bytes, word != "bytes")) {
    throw Error("corrupted model file: missing size");
  }
  std::string checksum;
  if (!std::getline(in, line) || (std::istringstream(line) >> word >> checksum, word != "fnv1a64")) {
    throw Error("corrupted model file: missing checksum");
  }
  const auto offset = static_cast<std::size_t>(in.tellg());
  if (offset > data.size() || data.size() - offset != bytes) throw Error("corrupted model file: truncated payload");
  const std::string payload = data.substr(offset);
  if (detail::fnv1a64_hex(payload) != checksum) throw Error("corrupted model file: checksum mismatch");

  using nlohmann::json;
  TrainedModel m;
  try {
    const json j = json::parse(payload);
    const auto& c = j.at("config");
    m.config.min_len = c.at("min_len").get<std::size_t>();
    m.config.max_len = c.at("max_len").get<std::size_t>();
    m.config.vocabulary_only = c.at("vocabulary_only").get<bool>();
    m.config.features = FeatureSet(c.at("features").get<std::string>());
    m.config.vocabulary_fingerprint = c.at("vocabulary_fingerprint").get<std::string>();
    m.config.text_variant = c.at("text_variant").get<std::string>();
    m.config.threshold = c.at("threshold").get<double>();
    j.at("cuts").get_to(m.cuts);
    j.at("class_counts").get_to(m.class_counts);
    j.at("bin_counts").get_to(m.bin_counts);
    j.at("df_table").get_to(m.df_table);
    m.corpus_doc_count = j.at("corpus_doc_count").get<std::size_t>();
    j.at("keyphraseness").at("docs_where_gold").get_to(m.keyphraseness.docs_where_gold);
    m.keyphraseness.training_doc_count = j.at("keyphraseness").at("training_doc_count").get<std::size_t>();
  } catch (const json::exception& e) {
    throw Error(std::string("corrupted model file: ") + e.what());
  }
  for (std::size_t f = 0; f < kFeatureCount; ++f) {
    if (!m.config.features.test(f)) continue;
    for (const auto& counts : m.bin_counts[f]) {
      if (counts.size() != m.cuts[f].size() + 1) throw Error("corrupted model file: bin table size");
    }
  }
  return m;
}

inline void save_model(const TrainedModel& model, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write model: " + path);
  out << serialize_model(model);
  if (!out) throw Error("cannot write model: " + path);
}

inline TrainedModel load_model(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open model: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return deserialize_model(ss.str());
}

}  // namespace keydenoise
