// Test-only generators: fuzzed documents and a planted-keyphrase corpus
// whose gold phrases live mostly in long, polysyllabic sentences.
#pragma once

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "keydenoise/corpus.hpp"
#include "keydenoise/textkit.hpp"
#include "keydenoise/vocab.hpp"

namespace testsupport {

inline std::size_t pick(std::mt19937_64& rng, std::size_t n) {
  return static_cast<std::size_t>(rng() % n);
}

template <class T>
const T& pick(std::mt19937_64& rng, const std::vector<T>& v) {
  return v[pick(rng, v.size())];
}

inline std::string capitalize(std::string w) {
  if (!w.empty() && w[0] >= 'a' && w[0] <= 'z') w[0] = static_cast<char>(w[0] - 'a' + 'A');
  return w;
}

// Mixed pool for fuzzing: short and long words, stopwords, numbers.
inline const std::vector<std::string>& fuzz_words() {
  static const std::vector<std::string> words = {
      "the",        "of",         "and",       "a",          "in",          "to",         "is",
      "for",        "with",       "on",        "cat",        "soil",        "rain",       "crop",
      "yield",      "farm",       "water",     "river",      "market",      "price",      "system",
      "analysis",   "irrigation", "fertilizer", "agriculture", "population", "economy",    "policy",
      "biodiversity", "sustainable", "productivity", "region",  "national",    "energy",     "physics",
      "particle",   "detector",   "collision", "protein",    "enzyme",      "cell",       "genetic",
      "2009",       "3.5",        "12",        "high-energy", "farmers'",   "it's",       "data",
      "model",      "indexing",   "running",   "systems",    "information", "retrieval", "document"};
  return words;
}

/// Random text of roughly `max_words` words in sentences of 1..max_sentence words.
inline std::string random_text(std::mt19937_64& rng, std::size_t max_words, std::size_t max_sentence = 25) {
  const std::size_t target = 1 + pick(rng, max_words);
  static const char* kEnds[] = {".", ".", ".", "!", "?"};
  std::string text;
  std::size_t words = 0;
  while (words < target) {
    const std::size_t len = std::min(target - words, 1 + pick(rng, max_sentence));
    for (std::size_t i = 0; i < len; ++i) {
      std::string w = pick(rng, fuzz_words());
      if (i == 0) w = capitalize(w);
      if (!text.empty()) text += ' ';
      text += w;
      if (i + 1 < len && pick(rng, 12) == 0) text += ',';
    }
    text += kEnds[pick(rng, 5)];
    words += len;
  }
  return text;
}

// ---------------------------------------------------------------------------
// Planted-keyphrase corpus

struct SyntheticDocument {
  std::string id;
  std::string text;
  std::vector<std::string> gold;
};

struct SyntheticCorpusOptions {
  std::uint64_t seed = 2024;
  std::size_t documents = 60;
  std::size_t content_sentences = 18;    // long, polysyllabic, carry the topical gold phrases
  std::size_t aside_sentences = 3;       // short remarks naming one gold phrase in passing
  std::size_t plain_sentences = 9;       // short, monosyllabic, no phrases
  std::size_t topical_gold = 6;
  std::size_t aside_gold = 2;
  std::size_t distractors = 5;           // other-document phrases mentioned in content sentences
  std::size_t gold_min_mentions = 2;
  std::size_t gold_max_mentions = 5;
  std::size_t distractor_max_mentions = 2;
};

namespace detail {

inline const std::vector<std::string>& modifiers() {
  static const std::vector<std::string> v = {"agricultural", "sustainable", "environmental", "industrial",
                                             "biological",   "national",    "political",     "genetic",
                                             "economical",   "molecular",   "municipal",     "territorial"};
  return v;
}

inline const std::vector<std::string>& heads() {
  static const std::vector<std::string> v = {"productivity", "irrigation", "fertilizer",   "population",
                                             "development",  "policy",     "biodiversity", "commodity",
                                             "nutrition",    "education",  "technology",   "innovation"};
  return v;
}

inline const std::vector<std::string>& fillers() {
  static const std::vector<std::string> v = {
      "analysis",      "evaluation",     "considerable", "significantly", "particularly",  "additional",
      "comparative",   "variation",      "relationship", "indicator",     "methodology",   "observation",
      "distribution",  "generally",      "approximately", "substantial",  "operational",   "estimated",
      "corresponding", "representative", "interpretation", "preliminary", "experimental",  "consistently",
      "conventional",  "availability",   "institutional", "residential",  "contribution",  "organization"};
  return v;
}

inline const std::vector<std::string>& glue() {
  static const std::vector<std::string> v = {"the", "of", "and", "in",   "for",  "with", "was",  "were",
                                             "is",  "by", "on",  "from", "this", "that", "these", "their"};
  return v;
}

// Second-vocabulary pairs for the once-mentioned asides, each used by one
// document only.
inline const std::vector<std::string>& aside_modifiers() {
  static const std::vector<std::string> v = {"regional",   "federal",   "seasonal",  "technical",
                                             "official",   "historical", "financial", "educational",
                                             "provincial", "cultural",  "medical",   "statistical"};
  return v;
}

inline const std::vector<std::string>& aside_heads() {
  static const std::vector<std::string> v = {"cooperation", "assistance", "committee",  "initiative",
                                             "agreement",   "inventory",  "legislation", "memorandum",
                                             "procedure",   "directory",  "documentary", "category"};
  return v;
}

inline const std::vector<std::string>& plain() {
  static const std::vector<std::string> v = {"we",   "thank", "see",  "note", "the",  "for",  "our", "help",
                                             "team", "staff", "year", "time", "list", "back", "top", "end",
                                             "part", "one",   "two",  "all",  "here", "this", "page", "work",
                                             "grant", "fund", "was",  "were", "it",   "on",   "at",  "each"};
  return v;
}

}  // namespace detail

/// Every modifier x head pair: the pool gold phrases are drawn from.
inline std::vector<std::string> phrase_pool() {
  std::vector<std::string> pool;
  for (const auto& m : detail::modifiers()) {
    for (const auto& h : detail::heads()) pool.push_back(m + " " + h);
  }
  return pool;
}

/// A corpus whose topical gold phrases recur in long sentences dense with
/// three-plus-syllable words, plus a few gold phrases named once in short
/// asides, and short plain sentences with no phrases at all.
inline std::vector<SyntheticDocument> synthetic_corpus(const SyntheticCorpusOptions& o = {}) {
  std::mt19937_64 rng(o.seed);
  const auto pool = phrase_pool();
  std::vector<std::string> aside_pool;
  for (const auto& m : detail::aside_modifiers()) {
    for (const auto& h : detail::aside_heads()) aside_pool.push_back(m + " " + h);
  }
  std::shuffle(aside_pool.begin(), aside_pool.end(), rng);
  std::size_t next_aside = 0;
  std::vector<SyntheticDocument> docs;
  for (std::size_t d = 0; d < o.documents; ++d) {
    // distinct phrases: topical gold, aside gold, distractors
    std::vector<std::string> chosen;
    std::set<std::string> used;
    while (chosen.size() < o.topical_gold + o.distractors) {
      const auto& p = pick(rng, pool);
      if (used.insert(p).second) chosen.push_back(p);
    }
    const std::vector<std::string> topical(chosen.begin(), chosen.begin() + o.topical_gold);
    const std::vector<std::string> distract(chosen.begin() + o.topical_gold, chosen.end());
    std::vector<std::string> asides;
    for (std::size_t i = 0; i < o.aside_gold; ++i) asides.push_back(aside_pool[next_aside++ % aside_pool.size()]);

    // topical mentions: gold phrases gold_min..gold_max times, distractors
    // once up to distractor_max times
    std::vector<std::string> mentions;
    for (const auto& g : topical) {
      const std::size_t n = o.gold_min_mentions + pick(rng, o.gold_max_mentions - o.gold_min_mentions + 1);
      for (std::size_t i = 0; i < n; ++i) mentions.push_back(g);
    }
    for (const auto& g : distract) {
      const std::size_t n = 1 + pick(rng, o.distractor_max_mentions);
      for (std::size_t i = 0; i < n; ++i) mentions.push_back(g);
    }
    std::shuffle(mentions.begin(), mentions.end(), rng);

    std::vector<std::string> sentences;
    for (std::size_t s = 0; s < o.content_sentences; ++s) {
      std::vector<std::string> words;
      const std::size_t len = 12 + pick(rng, 10);
      for (std::size_t i = 0; i < len; ++i) {
        const std::size_t r = pick(rng, 20);
        words.push_back(r < 7 ? pick(rng, detail::glue()) : r < 9 ? pick(rng, detail::plain()) : pick(rng, detail::fillers()));
      }
      // spread the mentions evenly over the content sentences
      const std::size_t from = s * mentions.size() / o.content_sentences;
      const std::size_t to = (s + 1) * mentions.size() / o.content_sentences;
      for (std::size_t m = from; m < to; ++m) {
        const std::size_t at = 1 + pick(rng, words.size() - 1);
        words.insert(words.begin() + static_cast<std::ptrdiff_t>(at), {"the", mentions[m], "of"});
      }
      std::string text;
      for (std::size_t i = 0; i < words.size(); ++i) {
        if (i > 0) text += ' ';
        text += i == 0 ? capitalize(words[i]) : words[i];
      }
      sentences.push_back(text + ".");
    }
    for (std::size_t s = 0; s < o.aside_sentences; ++s) {
      std::string text = "See";
      const std::size_t len = 4 + pick(rng, 4);
      for (std::size_t i = 0; i < len; ++i) text += " " + pick(rng, detail::plain());
      if (s < asides.size()) text += " on " + asides[s];
      sentences.push_back(text + ".");
    }
    for (std::size_t s = 0; s < o.plain_sentences; ++s) {
      std::string text;
      const std::size_t len = 4 + pick(rng, 5);
      for (std::size_t i = 0; i < len; ++i) {
        // now and then a topical word, as in "Irrigation was on time."
        const std::size_t r = pick(rng, 10);
        const auto& w = r == 0 ? pick(rng, detail::fillers()) : r == 1 ? pick(rng, detail::heads()) : pick(rng, detail::plain());
        text += i == 0 ? capitalize(w) : " " + w;
      }
      sentences.push_back(text + ".");
    }
    std::shuffle(sentences.begin(), sentences.end(), rng);

    SyntheticDocument doc;
    char id[16];
    std::snprintf(id, sizeof id, "doc%03zu", d);
    doc.id = id;
    for (const auto& s : sentences) {
      if (!doc.text.empty()) doc.text += ' ';
      doc.text += s;
    }
    doc.gold = topical;
    doc.gold.insert(doc.gold.end(), asides.begin(), asides.end());
    docs.push_back(std::move(doc));
  }
  return docs;
}

/// Thesaurus over the corpus phrases: every head word is a root term and
/// each two-word phrase sits below its head.
inline keydenoise::Vocabulary synthetic_vocabulary() {
  std::vector<keydenoise::VocabTerm> terms;
  auto add_family = [&](const std::vector<std::string>& mods, const std::vector<std::string>& heads,
                        const std::string& prefix) {
    for (std::size_t h = 0; h < heads.size(); ++h) {
      const std::string root = prefix + "h" + std::to_string(h);
      terms.push_back({root, heads[h], {}, {}, {}, 0});
      for (std::size_t m = 0; m < mods.size(); ++m) {
        terms.push_back({prefix + "p" + std::to_string(h) + "_" + std::to_string(m), mods[m] + " " + heads[h], {},
                         {root}, {}, 0});
      }
    }
  };
  add_family(detail::modifiers(), detail::heads(), "t");
  add_family(detail::aside_modifiers(), detail::aside_heads(), "a");
  return keydenoise::Vocabulary::build(std::move(terms));
}

inline std::vector<keydenoise::Document> to_documents(const std::vector<SyntheticDocument>& docs) {
  std::vector<keydenoise::Document> out;
  for (const auto& d : docs) out.push_back(keydenoise::make_document(d.id, d.text, d.gold));
  return out;
}

/// Writes <id>.txt and <id>.key for every document.
inline void write_corpus(const std::filesystem::path& dir, const std::vector<SyntheticDocument>& docs) {
  std::filesystem::create_directories(dir);
  for (const auto& d : docs) {
    keydenoise::write_file(dir / (d.id + ".txt"), d.text + "\n");
    std::string key;
    for (const auto& g : d.gold) key += g + "\n";
    keydenoise::write_file(dir / (d.id + ".key"), key);
  }
}

}  // namespace testsupport
