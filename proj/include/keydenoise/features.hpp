// Per-candidate feature vectors.
#pragma once

#include <array>
#include <bitset>
#include <cmath>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "keydenoise/candidates.hpp"
#include "keydenoise/error.hpp"
#include "keydenoise/textkit.hpp"
#include "keydenoise/vocab.hpp"

namespace keydenoise {

enum class Feature : std::size_t {
  kTf,
  kIdf,
  kTfIdf,
  kFirstOccurrence,
  kLastOccurrence,
  kSpread,
  kLength,
  kNodeDegree,
  kGenerality,
  kKeyphraseness,
};

inline constexpr std::size_t kFeatureCount = 10;

inline constexpr std::array<std::string_view, kFeatureCount> kFeatureNames = {
    "tf",     "idf",         "tfidf",      "first_occurrence", "last_occurrence",
    "spread", "length_words", "node_degree", "generality",       "keyphraseness"};

/// Enabled-feature mask; all features on by default.
using FeatureSet = std::bitset<kFeatureCount>;

inline FeatureSet all_features() { return FeatureSet{}.set(); }

struct FeatureVector {
  double tf = 0;
  double idf = 0;
  double tfidf = 0;
  double first_occurrence = 0;
  double last_occurrence = 0;
  double spread = 0;
  double length_words = 0;
  double node_degree = 0;
  double generality = 0;
  double keyphraseness = 0;

  std::array<double, kFeatureCount> values() const {
    return {tf,     idf,          tfidf,       first_occurrence, last_occurrence,
            spread, length_words, node_degree, generality,       keyphraseness};
  }
};

/// For each normalized gold phrase, the number of training documents that
/// list it as a keyphrase.
struct KeyphrasenessTable {
  std::map<std::string, std::size_t> docs_where_gold;
  std::size_t training_doc_count = 0;

  std::size_t gold_count(const std::string& normalized) const {
    auto it = docs_where_gold.find(normalized);
    return it == docs_where_gold.end() ? 0 : it->second;
  }
};

/// Normalized (sorted-stem), deduplicated gold phrases of a document.
inline std::set<std::string> normalized_gold(const Document& doc) {
  if (!doc.gold_keyphrases) throw Error("document " + doc.id + " has no gold keyphrases");
  std::set<std::string> out;
  for (const auto& g : *doc.gold_keyphrases) {
    auto n = normalize_phrase(g);
    if (!n.empty()) out.insert(std::move(n));
  }
  return out;
}

inline KeyphrasenessTable build_keyphraseness_table(const std::vector<Document>& training_docs) {
  KeyphrasenessTable table;
  table.training_doc_count = training_docs.size();
  for (const auto& d : training_docs) {
    for (const auto& g : normalized_gold(d)) ++table.docs_where_gold[g];
  }
  return table;
}

/// The corpus-level quantities one candidate's features depend on.
struct FeatureInputs {
  std::size_t doc_word_count = 0;
  std::size_t df = 0;
  std::size_t corpus_doc_count = 0;
  std::size_t gold_docs = 0;
  std::size_t training_docs = 0;
  std::size_t node_degree = 0;
  double generality = 0;
};

inline FeatureVector features_from(const CandidatePhrase& c, const FeatureInputs& in) {
  if (in.doc_word_count == 0) throw Error("empty document");
  if (in.corpus_doc_count == 0) throw Error("corpus document count must be positive");
  const double words = static_cast<double>(in.doc_word_count);
  FeatureVector f;
  f.tf = static_cast<double>(c.freq) / words;
  f.idf = std::max(0.0, std::log2(static_cast<double>(in.corpus_doc_count) / static_cast<double>(in.df + 1)));
  f.tfidf = f.tf * f.idf;
  f.first_occurrence = static_cast<double>(c.first_pos) / words;
  f.last_occurrence = static_cast<double>(c.last_pos) / words;
  f.spread = f.last_occurrence - f.first_occurrence;
  f.length_words = static_cast<double>(c.length_words);
  f.node_degree = static_cast<double>(in.node_degree);
  f.generality = in.generality;
  f.keyphraseness = in.training_docs == 0
                        ? 0.0
                        : static_cast<double>(in.gold_docs) / static_cast<double>(in.training_docs);
  return f;
}

/// Vocabulary terms attached to the candidates of one document.
inline std::set<std::string> candidate_terms(const CandidateSet& set) {
  std::set<std::string> terms;
  for (const auto& [key, c] : set.candidates) {
    if (c.term_id) terms.insert(*c.term_id);
  }
  return terms;
}

/// Features of a candidate against corpus tables. node_degree and
/// generality are 0 without a vocabulary or a matched term; terms is the
/// set of terms matched by the document's candidates.
inline FeatureVector compute_features(const CandidatePhrase& candidate, std::size_t doc_word_count,
                                      const std::map<std::string, std::size_t>& df_table,
                                      std::size_t corpus_doc_count, const Vocabulary* vocabulary,
                                      const std::set<std::string>& terms,
                                      const KeyphrasenessTable& keyphraseness) {
  FeatureInputs in;
  in.doc_word_count = doc_word_count;
  in.corpus_doc_count = corpus_doc_count;
  if (auto it = df_table.find(candidate.normalized_form); it != df_table.end()) in.df = it->second;
  in.gold_docs = keyphraseness.gold_count(sorted_key(candidate.normalized_form));
  in.training_docs = keyphraseness.training_doc_count;
  if (vocabulary != nullptr && candidate.term_id) {
    in.node_degree = vocabulary->node_degree(*candidate.term_id, terms);
    in.generality = vocabulary->generality(*candidate.term_id);
  }
  return features_from(candidate, in);
}

}  // namespace keydenoise
