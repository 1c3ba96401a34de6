// Low-level text processing: sentence segmentation, tokenization,
// syllable counting and stemming. Everything here is a pure function of its
// input.
#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <fstream>
#include <numeric>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "keydenoise/error.hpp"
#include "keydenoise/porter.hpp"

namespace keydenoise {

struct Token {
  std::string surface;
  std::string stem;
  std::size_t position = 0;  // word index within the document
  bool is_stopword = false;
};

struct CharSpan {
  std::size_t begin = 0;
  std::size_t end = 0;  // one past the last byte
};

struct Sentence {
  std::vector<Token> tokens;
  std::size_t doc_order = 0;
  CharSpan char_span;
};

struct Document {
  std::string id;
  std::string text;
  std::vector<Sentence> sentences;
  std::size_t word_count = 0;
  std::optional<std::vector<std::string>> gold_keyphrases;
};

namespace detail {

inline constexpr std::array<std::string_view, 153> kBuiltinStopwords = {
    "a", "about", "above", "after", "again", "against", "all", "also", "am",
    "an", "and", "any", "are", "as", "at", "be", "because", "been", "before",
    "being", "below", "between", "both", "but", "by", "can", "could", "did",
    "do", "does", "doing", "down", "during", "each", "either", "else", "etc",
    "ever", "every", "few", "for", "from", "further", "had", "has", "have",
    "having", "he", "her", "here", "hers", "herself", "him", "himself", "his",
    "how", "however", "i", "if", "in", "into", "is", "it", "its", "itself",
    "just", "least", "less", "may", "me", "might", "more", "most", "much",
    "must", "my", "myself", "neither", "no", "nor", "not", "now", "of", "off",
    "on", "once", "only", "or", "other", "our", "ours", "ourselves", "out",
    "over", "own", "per", "same", "shall", "she", "should", "since", "so",
    "some", "such", "than", "that", "the", "their", "theirs", "them",
    "themselves", "then", "there", "these", "they", "this", "those", "though",
    "through", "thus", "to", "too", "under", "until", "up", "upon", "us",
    "very", "via", "was", "we", "were", "what", "when", "where", "whether",
    "which", "while", "who", "whom", "whose", "why", "will", "with", "within",
    "without", "would", "yet", "you", "your", "yours", "yourself",
    "yourselves",

};

inline bool is_ascii_alpha(char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z'); }
inline bool is_ascii_digit(char c) { return c >= '0' && c <= '9'; }
inline bool is_ascii_lower(char c) { return c >= 'a' && c <= 'z'; }
inline bool is_space(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}

// Decodes the code point starting at text[pos]. Malformed bytes decode as
// themselves with length 1.
inline std::pair<char32_t, std::size_t> decode_utf8(std::string_view text, std::size_t pos) {
  const auto b0 = static_cast<unsigned char>(text[pos]);
  if (b0 < 0x80) return {b0, 1};
  std::size_t len = 0;
  char32_t cp = 0;
  if ((b0 & 0xE0) == 0xC0) {
    len = 2;
    cp = b0 & 0x1F;
  } else if ((b0 & 0xF0) == 0xE0) {
    len = 3;
    cp = b0 & 0x0F;
  } else if ((b0 & 0xF8) == 0xF0) {
    len = 4;
    cp = b0 & 0x07;
  } else {
    return {b0, 1};
  }
  if (pos + len > text.size()) return {b0, 1};
  for (std::size_t i = 1; i < len; ++i) {
    const auto b = static_cast<unsigned char>(text[pos + i]);
    if ((b & 0xC0) != 0x80) return {b0, 1};
    cp = (cp << 6) | (b & 0x3F);
  }
  return {cp, len};
}

inline bool is_unicode_punct(char32_t cp) {
  return (cp >= 0x00A0 && cp <= 0x00BF) || cp == 0x00D7 || cp == 0x00F7 ||
         (cp >= 0x2000 && cp <= 0x206F) || (cp >= 0x2190 && cp <= 0x2BFF) ||
         (cp >= 0x3000 && cp <= 0x303F) || cp == 0xFEFF;
}

inline bool is_word_cp(char32_t cp) {
  if (cp < 0x80) {
    const char c = static_cast<char>(cp);
    return is_ascii_alpha(c) || is_ascii_digit(c);
  }
  return !is_unicode_punct(cp);
}

inline bool is_digit_cp(char32_t cp) { return cp >= '0' && cp <= '9'; }

inline bool is_apostrophe_cp(char32_t cp) { return cp == '\'' || cp == 0x2019; }

}  // namespace detail

inline std::string casefold(std::string_view s) {
  std::string out(s);
  for (auto& c : out) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  }
  return out;
}

/// A set of lowercase function words.
class StopwordList {
 public:
  StopwordList() = default;
  explicit StopwordList(std::set<std::string, std::less<>> words) : words_(std::move(words)) {}

  /// The versioned English list shipped as data/stopwords_en.txt.
  static const StopwordList& builtin() {
    static const StopwordList list = [] {
      std::set<std::string, std::less<>> words;
      for (auto w : detail::kBuiltinStopwords) words.emplace(w);
      return StopwordList(std::move(words));
    }();
    return list;
  }

  /// Reads one word per line; blank lines and lines starting with '#' are skipped.
  static StopwordList parse(std::istream& in) {
    std::set<std::string, std::less<>> words;
    std::string line;
    while (std::getline(in, line)) {
      auto first = line.find_first_not_of(" \t\r");
      if (first == std::string::npos || line[first] == '#') continue;
      auto last = line.find_last_not_of(" \t\r");
      words.insert(casefold(std::string_view(line).substr(first, last - first + 1)));
    }
    return StopwordList(std::move(words));
  }

  static StopwordList load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open stopword file: " + path);
    return parse(in);
  }

  bool contains(std::string_view lowercase_word) const {
    return words_.find(lowercase_word) != words_.end();
  }
  std::size_t size() const { return words_.size(); }
  const std::set<std::string, std::less<>>& words() const { return words_; }

 private:
  std::set<std::string, std::less<>> words_;
};

/// True for tokens made only of digits and decimal separators.
inline bool is_numeric(std::string_view word) {
  bool digit = false;
  for (char c : word) {
    if (detail::is_ascii_digit(c)) {
      digit = true;
    } else if (c != '.' && c != ',') {
      return false;
    }
  }
  return digit;
}

/// Orthographic syllable estimate: vowel groups (y counts as a vowel after a
/// consonant), minus one for a silent final e, never below one.
inline int count_syllables(std::string_view word) {
  if (is_numeric(word)) return 1;
  const std::string w = casefold(word);
  auto is_vowel_letter = [](char c) {
    return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u';
  };
  int groups = 0;
  bool prev_vowel = false;
  for (std::size_t i = 0; i < w.size(); ++i) {
    const char c = w[i];
    bool vowel = is_vowel_letter(c);
    if (c == 'y' && i > 0 && detail::is_ascii_alpha(w[i - 1]) && !is_vowel_letter(w[i - 1]) &&
        w[i - 1] != 'y') {
      vowel = true;
    }
    if (vowel && !prev_vowel) ++groups;
    prev_vowel = vowel;
  }
  if (!w.empty() && w.back() == 'e' && groups > 1) --groups;
  return std::max(groups, 1);
}

inline bool is_complex_word(std::string_view word) { return count_syllables(word) >= 3; }

/// Case-folded Porter stem, iterated until it no longer changes so that
/// stem(stem(w)) == stem(w). Hyphen- and apostrophe-separated parts are
/// stemmed independently; parts that are not plain ASCII letters are kept.
inline std::string stem(std::string_view word) {
  const std::string lower = casefold(word);
  std::string out;
  out.reserve(lower.size());
  std::size_t i = 0;
  while (i < lower.size()) {
    std::size_t j = i;
    while (j < lower.size() && lower[j] != '-' && lower[j] != '\'') ++j;
    std::string part = lower.substr(i, j - i);
    const bool alpha = !part.empty() && std::all_of(part.begin(), part.end(), detail::is_ascii_lower);
    if (alpha) {
      for (;;) {
        std::string next = porter_stem(part);
        if (next == part) break;
        part = std::move(next);
      }
    }
    out += part;
    if (j < lower.size()) out += lower[j];
    i = j + 1;
  }
  return out;
}

/// Byte spans of the words in text. A word is a maximal run of letters and
/// digits; hyphens and apostrophes may join two word characters, and '.' or
/// ',' may join two digits.
inline std::vector<CharSpan> word_spans(std::string_view text) {
  std::vector<CharSpan> spans;
  std::size_t pos = 0;
  const std::size_t n = text.size();
  while (pos < n) {
    auto [cp, len] = detail::decode_utf8(text, pos);
    if (!detail::is_word_cp(cp)) {
      pos += len;
      continue;
    }
    const std::size_t begin = pos;
    char32_t prev = cp;
    pos += len;
    while (pos < n) {
      auto [c, l] = detail::decode_utf8(text, pos);
      if (detail::is_word_cp(c)) {
        prev = c;
        pos += l;
        continue;
      }
      const bool joiner = c == '-' || detail::is_apostrophe_cp(c);
      const bool decimal = (c == '.' || c == ',') && detail::is_digit_cp(prev);
      if ((joiner || decimal) && pos + l < n) {
        auto [after, al] = detail::decode_utf8(text, pos + l);
        if ((joiner && detail::is_word_cp(after)) || (decimal && detail::is_digit_cp(after))) {
          prev = after;
          pos += l + al;
          continue;
        }
      }
      break;
    }
    spans.push_back({begin, pos});
  }
  return spans;
}

/// Tokens of one sentence. Positions count from 0 within the given text;
/// document assembly renumbers them.
inline std::vector<Token> tokenize(std::string_view sentence_text,
                                   const StopwordList& stopwords = StopwordList::builtin()) {
  std::vector<Token> tokens;
  for (auto span : word_spans(sentence_text)) {
    Token t;
    t.surface = std::string(sentence_text.substr(span.begin, span.end - span.begin));
    t.stem = stem(t.surface);
    t.is_stopword = stopwords.contains(casefold(t.surface));
    t.position = tokens.size();
    tokens.push_back(std::move(t));
  }
  return tokens;
}

namespace detail {

inline bool is_abbreviation(std::string_view word) {
  static constexpr std::array<std::string_view, 13> kAbbrev = {
      "dr", "mr", "mrs", "ms", "prof", "fig", "figs", "al", "e.g", "i.e", "vs", "cf", "eq"};
  const std::string w = casefold(word);
  return std::find(kAbbrev.begin(), kAbbrev.end(), w) != kAbbrev.end();
}

inline bool is_closing_cp(char32_t cp) {
  return cp == '"' || cp == '\'' || cp == ')' || cp == ']' || cp == 0x2019 || cp == 0x201D;
}

inline bool is_opening(char c) { return c == '(' || c == '[' || c == '"' || c == '\''; }

// Whether a terminator run text[term, after) ends a sentence.
inline bool ends_sentence(std::string_view text, std::size_t term, std::size_t after) {
  if (after >= text.size()) return true;
  if (!is_space(text[after])) return false;
  std::size_t next = after;
  while (next < text.size() && is_space(text[next])) ++next;
  if (next >= text.size()) return true;
  if (is_ascii_lower(text[next]) || is_ascii_digit(text[next])) return false;
  if (text[term] == '.' && (term + 1 == after || !(text[term + 1] == '.'))) {
    std::size_t b = term;
    while (b > 0 && !is_space(text[b - 1])) --b;
    while (b < term && is_opening(text[b])) ++b;
    const std::string_view word = text.substr(b, term - b);
    if (is_abbreviation(word)) return false;
    if (word.size() == 1 && text[b] >= 'A' && text[b] <= 'Z') return false;  // initial
  }
  return true;
}

// Blank line starting at text[pos] == '\n': only spaces/tabs/CR up to the next '\n'.
inline bool blank_line_at(std::string_view text, std::size_t pos) {
  std::size_t i = pos + 1;
  while (i < text.size() && (text[i] == ' ' || text[i] == '\t' || text[i] == '\r')) ++i;
  return i < text.size() && text[i] == '\n';
}

}  // namespace detail

/// Splits raw text into sentences on '.', '!' and '?' (and on blank lines).
/// No split after a listed abbreviation or a single capital initial, or when
/// the next word starts with a lowercase letter or digit. Segments without
/// any word are dropped. Token positions run from 0 across the whole text.
inline std::vector<Sentence> segment_sentences(std::string_view raw_text,
                                               const StopwordList& stopwords = StopwordList::builtin()) {
  std::vector<Sentence> sentences;
  std::size_t position = 0;
  auto emit = [&](std::size_t begin, std::size_t end) {
    while (end > begin && detail::is_space(raw_text[end - 1])) --end;
    if (end <= begin) return;
    Sentence s;
    s.char_span = {begin, end};
    s.tokens = tokenize(raw_text.substr(begin, end - begin), stopwords);
    if (s.tokens.empty()) return;
    for (auto& t : s.tokens) t.position = position++;
    s.doc_order = sentences.size();
    sentences.push_back(std::move(s));
  };
  auto skip_space = [&](std::size_t i) {
    while (i < raw_text.size() && detail::is_space(raw_text[i])) ++i;
    return i;
  };

  const std::size_t n = raw_text.size();
  std::size_t start = skip_space(0);
  std::size_t i = start;
  while (i < n) {
    const char c = raw_text[i];
    if (c == '.' || c == '!' || c == '?') {
      std::size_t j = i;
      while (j < n && (raw_text[j] == '.' || raw_text[j] == '!' || raw_text[j] == '?')) ++j;
      while (j < n) {
        auto [cp, len] = detail::decode_utf8(raw_text, j);
        if (!detail::is_closing_cp(cp)) break;
        j += len;
      }
      if (detail::ends_sentence(raw_text, i, j)) {
        emit(start, j);
        start = skip_space(j);
        i = start;
      } else {
        i = j;
      }
      continue;
    }
    if (c == '\n' && detail::blank_line_at(raw_text, i)) {
      emit(start, i);
      start = skip_space(i);
      i = start;
      continue;
    }
    ++i;
  }
  if (start < n) emit(start, n);
  return sentences;
}

/// Sentence text with every whitespace run collapsed to one space.
inline std::string sentence_text(const Document& doc, const Sentence& s) {
  std::string out;
  bool pending_space = false;
  for (std::size_t i = s.char_span.begin; i < s.char_span.end; ++i) {
    const char c = doc.text[i];
    if (detail::is_space(c)) {
      pending_space = true;
      continue;
    }
    if (pending_space && !out.empty()) out += ' ';
    pending_space = false;
    out += c;
  }
  return out;
}

inline Document make_document(std::string id, std::string raw_text,
                              std::optional<std::vector<std::string>> gold = std::nullopt,
                              const StopwordList& stopwords = StopwordList::builtin()) {
  Document doc;
  doc.id = std::move(id);
  doc.text = std::move(raw_text);
  doc.sentences = segment_sentences(doc.text, stopwords);
  doc.word_count = 0;
  for (const auto& s : doc.sentences) doc.word_count += s.tokens.size();
  doc.gold_keyphrases = std::move(gold);
  return doc;
}

/// A new document made of the selected sentences (ascending doc_order), with
/// text rebuilt as the sentence texts joined by single spaces and positions
/// renumbered from 0. Gold keyphrases are carried over.
inline Document subdocument(const Document& doc, std::span<const std::size_t> sentence_indices,
                            std::string id) {
  Document out;
  out.id = std::move(id);
  out.gold_keyphrases = doc.gold_keyphrases;
  std::size_t position = 0;
  for (std::size_t idx : sentence_indices) {
    const Sentence& src = doc.sentences.at(idx);
    const std::string text = sentence_text(doc, src);
    if (!out.text.empty()) out.text += ' ';
    Sentence s;
    s.char_span = {out.text.size(), out.text.size() + text.size()};
    out.text += text;
    s.doc_order = out.sentences.size();
    s.tokens = src.tokens;
    for (auto& t : s.tokens) t.position = position++;
    out.sentences.push_back(std::move(s));
  }
  out.word_count = position;
  return out;
}

/// Normalized phrase key used for vocabulary and gold matching: case-folded,
/// stemmed tokens sorted and joined by single spaces.
inline std::string normalize_phrase(std::string_view phrase) {
  std::vector<std::string> stems;
  for (auto span : word_spans(phrase)) {
    stems.push_back(stem(phrase.substr(span.begin, span.end - span.begin)));
  }
  std::sort(stems.begin(), stems.end());
  std::string out;
  for (const auto& s : stems) {
    if (!out.empty()) out += ' ';
    out += s;
  }
  return out;
}

}  // namespace keydenoise
