// Candidate phrase generation with occurrence statistics.
#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "keydenoise/error.hpp"
#include "keydenoise/textkit.hpp"
#include "keydenoise/vocab.hpp"

namespace keydenoise {

struct CandidatePhrase {
  std::string normalized_form;  // stems joined by single spaces, in text order
  std::string surface_form;     // most frequent raw form, earliest on ties
  std::size_t length_words = 0;
  std::optional<std::string> term_id;
  std::size_t freq = 0;
  std::size_t first_pos = 0;  // word index of the first token of the first occurrence
  std::size_t last_pos = 0;   // word index of the first token of the last occurrence
};

struct CandidateSet {
  std::string document_id;
  std::map<std::string, CandidatePhrase> candidates;
  std::size_t doc_word_count = 0;
};

struct CandidateOptions {
  std::size_t min_len = 1;
  std::size_t max_len = 5;
  /// With a vocabulary: keep only candidates that match a vocabulary term.
  bool vocabulary_only = true;
};

/// Sorted-stem key of a candidate, comparable with normalize_phrase().
inline std::string sorted_key(const std::string& normalized_form) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : normalized_form) {
    if (c == ' ') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) parts.push_back(cur);
  std::sort(parts.begin(), parts.end());
  std::string out;
  for (const auto& p : parts) {
    if (!out.empty()) out += ' ';
    out += p;
  }
  return out;
}

/// Every within-sentence n-gram of min_len..max_len tokens that neither
/// starts nor ends with a stopword and is not made only of numbers.
inline CandidateSet generate_candidates(const Document& document, const CandidateOptions& options = {},
                                        const Vocabulary* vocabulary = nullptr) {
  if (options.min_len < 1 || options.min_len > options.max_len) {
    throw Error("invalid phrase length bounds");
  }
  CandidateSet set;
  set.document_id = document.id;
  set.doc_word_count = document.word_count;

  struct Forms {
    std::map<std::string, std::pair<std::size_t, std::size_t>> counts;  // surface -> (count, first pos)
  };
  std::map<std::string, Forms> forms;

  for (const auto& sentence : document.sentences) {
    const auto& toks = sentence.tokens;
    for (std::size_t i = 0; i < toks.size(); ++i) {
      if (toks[i].is_stopword) continue;
      for (std::size_t len = options.min_len; len <= options.max_len && i + len <= toks.size(); ++len) {
        const Token& last = toks[i + len - 1];
        if (last.is_stopword) continue;
        bool all_numeric = true;
        std::string key;
        std::string surface;
        for (std::size_t j = i; j < i + len; ++j) {
          if (!is_numeric(toks[j].surface)) all_numeric = false;
          if (j > i) {
            key += ' ';
            surface += ' ';
          }
          key += toks[j].stem;
          surface += toks[j].surface;
        }
        if (all_numeric) continue;

        auto [it, inserted] = set.candidates.try_emplace(key);
        CandidatePhrase& c = it->second;
        if (inserted) {
          c.normalized_form = key;
          c.length_words = len;
          c.first_pos = toks[i].position;
        }
        ++c.freq;
        c.last_pos = toks[i].position;
        auto& entry = forms[key].counts[surface];
        if (entry.first == 0) entry.second = toks[i].position;
        ++entry.first;
      }
    }
  }

  for (auto& [key, c] : set.candidates) {
    std::size_t best_count = 0;
    std::size_t best_pos = 0;
    for (const auto& [surface, cp] : forms[key].counts) {
      if (cp.first > best_count || (cp.first == best_count && cp.second < best_pos)) {
        best_count = cp.first;
        best_pos = cp.second;
        c.surface_form = surface;
      }
    }
  }

  if (vocabulary != nullptr) {
    for (auto it = set.candidates.begin(); it != set.candidates.end();) {
      it->second.term_id = vocabulary->match_normalized(sorted_key(it->first));
      if (options.vocabulary_only && !it->second.term_id) {
        it = set.candidates.erase(it);
      } else {
        ++it;
      }
    }
  }
  return set;
}

/// Number of candidate sets containing each phrase.
inline std::map<std::string, std::size_t> merge_document_frequencies(const std::vector<CandidateSet>& sets) {
  std::set<std::string> seen;
  std::map<std::string, std::size_t> df;
  for (const auto& s : sets) {
    if (!seen.insert(s.document_id).second) throw Error("duplicate document id: " + s.document_id);
    for (const auto& [key, c] : s.candidates) ++df[key];
  }
  return df;
}

}  // namespace keydenoise
