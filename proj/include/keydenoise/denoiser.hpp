// Fog-index sentence scoring and the denoised/noise split.
#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <string>
#include <vector>

#include "keydenoise/error.hpp"
#include "keydenoise/textkit.hpp"

namespace keydenoise {

/// Gunning Fog grade for one sentence: 0.4 * (W + 100 * C / W), where W is
/// the word count and C the number of words of three or more syllables.
inline double fog_score(const Sentence& sentence) {
  const std::size_t words = sentence.tokens.size();
  if (words == 0) throw Error("empty sentence");
  std::size_t complex = 0;
  for (const auto& t : sentence.tokens) {
    if (is_complex_word(t.surface)) ++complex;
  }
  const double w = static_cast<double>(words);
  return 0.4 * (w + 100.0 * static_cast<double>(complex) / w);
}

struct ScoredSentence {
  const Sentence* sentence = nullptr;
  double fog = 0.0;
};

/// Sentence indices (doc_order) of each part, both ascending.
struct DenoisePartition {
  double threshold = 1.0;
  std::vector<std::size_t> denoised;
  std::vector<std::size_t> noise;
};

/// Number of sentences kept at a threshold: ceil(threshold * total). The
/// product is nudged down by 1e-9 so that e.g. 0.7 * 10 gives 7 and not 8.
inline std::size_t denoised_count(double threshold, std::size_t total) {
  const double raw = threshold * static_cast<double>(total);
  const auto n = static_cast<std::size_t>(std::ceil(raw - 1e-9));
  return std::clamp<std::size_t>(n, total == 0 ? 0 : 1, total);
}

inline void check_threshold(double threshold) {
  if (!(threshold > 0.0 && threshold <= 1.0)) throw Error("invalid threshold");
}

inline std::vector<ScoredSentence> score_sentences(const Document& document) {
  std::vector<ScoredSentence> scored;
  scored.reserve(document.sentences.size());
  for (const auto& s : document.sentences) scored.push_back({&s, fog_score(s)});
  return scored;
}

/// Ranks sentences by fog score (hardest first, earlier sentence on ties)
/// and keeps the top ceil(threshold * S) as the denoised part.
inline DenoisePartition denoise(const Document& document, double threshold) {
  check_threshold(threshold);
  if (document.sentences.empty()) throw Error("empty document");
  const auto scored = score_sentences(document);
  std::vector<std::size_t> order(scored.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return scored[a].fog > scored[b].fog; });

  const std::size_t keep = denoised_count(threshold, order.size());
  std::vector<bool> selected(order.size(), false);
  for (std::size_t i = 0; i < keep; ++i) selected[order[i]] = true;

  DenoisePartition p;
  p.threshold = threshold;
  for (std::size_t i = 0; i < selected.size(); ++i) {
    (selected[i] ? p.denoised : p.noise).push_back(i);
  }
  return p;
}

inline std::size_t word_count_of(const Document& document, const std::vector<std::size_t>& sentences) {
  std::size_t n = 0;
  for (auto i : sentences) n += document.sentences[i].tokens.size();
  return n;
}

/// The denoised and noise parts as standalone documents with ids
/// "<id>.denoised" and "<id>.noise".
struct DocumentVariants {
  Document denoised;
  Document noise;
};

inline DocumentVariants split_document(const Document& document, const DenoisePartition& p) {
  return {subdocument(document, p.denoised, document.id + ".denoised"),
          subdocument(document, p.noise, document.id + ".noise")};
}

/// Selected sentences joined by one space, in document order.
inline std::string join_sentences(const Document& document, const std::vector<std::size_t>& sentences) {
  std::string out;
  for (auto i : sentences) {
    if (!out.empty()) out += ' ';
    out += sentence_text(document, document.sentences[i]);
  }
  return out;
}

struct DenoiseSummary {
  std::size_t input_words = 0;
  std::size_t denoised_words = 0;
  std::size_t noise_words = 0;
};

struct CorpusDenoiseResult {
  std::vector<std::string> document_ids;
  std::vector<DenoisePartition> partitions;
  DenoiseSummary summary;
};

inline CorpusDenoiseResult denoise_corpus(const std::vector<Document>& corpus, double threshold) {
  check_threshold(threshold);
  CorpusDenoiseResult result;
  for (const auto& doc : corpus) {
    DenoisePartition p;
    try {
      p = denoise(doc, threshold);
    } catch (const Error& e) {
      throw Error("document " + doc.id + ": " + e.what());
    }
    result.summary.input_words += doc.word_count;
    result.summary.denoised_words += word_count_of(doc, p.denoised);
    result.summary.noise_words += word_count_of(doc, p.noise);
    result.document_ids.push_back(doc.id);
    result.partitions.push_back(std::move(p));
  }
  return result;
}

}  // namespace keydenoise
