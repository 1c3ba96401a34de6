// Controlled vocabulary: labels, broader/related links and the hierarchy
// measures used as candidate features.
//
// File format (UTF-8, tab separated, '#' comment lines allowed):
//
//   id  preferred_label  alt_labels  broader_ids  related_ids
//
// The first non-comment line is the header. The last three columns hold
// ';'-separated lists and may be empty. Narrower links are the inverse of
// broader links and are never stored.
#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "keydenoise/error.hpp"
#include "keydenoise/textkit.hpp"

namespace keydenoise {

struct VocabTerm {
  std::string term_id;
  std::string preferred_label;
  std::vector<std::string> alt_labels;
  std::vector<std::string> broader;
  std::vector<std::string> related;
  std::size_t depth = 0;
};

class Vocabulary {
 public:
  Vocabulary() = default;

  /// Validates links, rejects broader cycles and computes depths.
  static Vocabulary build(std::vector<VocabTerm> terms) {
    Vocabulary v;
    for (auto& t : terms) {
      if (t.term_id.empty()) throw Error("vocabulary term with empty id");
      if (!v.index_.emplace(t.term_id, v.terms_.size()).second) {
        throw Error("duplicate vocabulary id: " + t.term_id);
      }
      v.terms_.push_back(std::move(t));
    }
    v.link();
    v.compute_depths();
    v.index_labels();
    v.fingerprint_ = v.compute_fingerprint();
    return v;
  }

  static Vocabulary parse(std::istream& in) {
    std::vector<VocabTerm> terms;
    std::string line;
    bool header_seen = false;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
      ++line_no;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.find_first_not_of(" \t") == std::string::npos) continue;
      if (line[line.find_first_not_of(" \t")] == '#') continue;
      auto cols = split(line, '\t');
      if (!header_seen) {
        header_seen = true;
        static const std::vector<std::string> kHeader = {"id", "preferred_label", "alt_labels",
                                                         "broader_ids", "related_ids"};
        if (cols != kHeader) throw Error("vocabulary header must be: id, preferred_label, alt_labels, broader_ids, related_ids");
        continue;
      }
      cols.resize(5);
      if (cols[0].empty() || cols[1].empty()) {
        throw Error("vocabulary line " + std::to_string(line_no) + ": id and preferred_label are required");
      }
      VocabTerm t;
      t.term_id = cols[0];
      t.preferred_label = cols[1];
      t.alt_labels = split_list(cols[2]);
      t.broader = split_list(cols[3]);
      t.related = split_list(cols[4]);
      terms.push_back(std::move(t));
    }
    return build(std::move(terms));
  }

  static Vocabulary load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open vocabulary: " + path);
    return parse(in);
  }

  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  std::size_t max_depth() const { return max_depth_; }
  const std::vector<VocabTerm>& terms() const { return terms_; }
  const std::map<std::string, std::string>& label_index() const { return label_index_; }

  bool contains(const std::string& term_id) const { return index_.count(term_id) != 0; }

  const VocabTerm& term(const std::string& term_id) const { return terms_[index_of(term_id)]; }

  /// Term whose normalized label equals the normalized phrase. Preferred
  /// labels win over alternative labels.
  std::optional<std::string> match_normalized(const std::string& normalized) const {
    auto it = label_index_.find(normalized);
    if (it == label_index_.end()) return std::nullopt;
    return it->second;
  }

  std::optional<std::string> match_phrase(std::span<const Token> phrase) const {
    std::vector<std::string> stems;
    stems.reserve(phrase.size());
    for (const auto& t : phrase) stems.push_back(t.stem);
    std::sort(stems.begin(), stems.end());
    std::string key;
    for (const auto& s : stems) {
      if (!key.empty()) key += ' ';
      key += s;
    }
    return match_normalized(key);
  }

  /// Hierarchy and related links of a term, both directions, deduplicated.
  const std::set<std::size_t>& neighbours(const std::string& term_id) const {
    return neighbours_[index_of(term_id)];
  }

  /// Number of distinct linked terms of term_id among the other candidates.
  std::size_t node_degree(const std::string& term_id, const std::set<std::string>& candidate_terms) const {
    const std::size_t self = index_of(term_id);
    std::size_t degree = 0;
    for (const auto& other : candidate_terms) {
      const std::size_t o = index_of(other);
      if (o != self && neighbours_[self].count(o)) ++degree;
    }
    return degree;
  }

  /// 1 - depth / max_depth; every term is a root when max_depth is 0.
  double generality(const std::string& term_id) const {
    const auto& t = term(term_id);
    if (max_depth_ == 0) return 1.0;
    return 1.0 - static_cast<double>(t.depth) / static_cast<double>(max_depth_);
  }

  /// Stable 64-bit fingerprint of the vocabulary content, as 16 hex digits.
  const std::string& fingerprint() const { return fingerprint_; }

 private:
  std::vector<VocabTerm> terms_;
  std::map<std::string, std::size_t> index_;
  std::map<std::string, std::string> label_index_;
  std::vector<std::set<std::size_t>> neighbours_;
  std::size_t max_depth_ = 0;
  std::string fingerprint_ = compute_fingerprint();

  std::string compute_fingerprint() const {
    std::uint64_t h = 1469598103934665603ULL;
    auto mix = [&h](std::string_view s) {
      for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
      }
      h ^= 0xFF;
      h *= 1099511628211ULL;
    };
    std::vector<const VocabTerm*> sorted;
    for (const auto& t : terms_) sorted.push_back(&t);
    std::sort(sorted.begin(), sorted.end(),
              [](const VocabTerm* a, const VocabTerm* b) { return a->term_id < b->term_id; });
    for (const auto* t : sorted) {
      mix(t->term_id);
      mix(t->preferred_label);
      for (const auto& s : t->alt_labels) mix(s);
      mix("|");
      for (const auto& s : t->broader) mix(s);
      mix("|");
      for (const auto& s : t->related) mix(s);
      mix("\n");
    }
    std::ostringstream os;
    os << std::hex;
    os.width(16);
    os.fill('0');
    os << h;
    return os.str();
  }

  std::size_t index_of(const std::string& term_id) const {
    auto it = index_.find(term_id);
    if (it == index_.end()) throw Error("unknown vocabulary id: " + term_id);
    return it->second;
  }

  static std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
      if (c == sep) {
        out.push_back(cur);
        cur.clear();
      } else {
        cur += c;
      }
    }
    out.push_back(cur);
    return out;
  }

  static std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    for (auto& item : split(s, ';')) {
      auto b = item.find_first_not_of(" \t");
      if (b == std::string::npos) continue;
      auto e = item.find_last_not_of(" \t");
      out.push_back(item.substr(b, e - b + 1));
    }
    return out;
  }

  void link() {
    neighbours_.assign(terms_.size(), {});
    for (std::size_t i = 0; i < terms_.size(); ++i) {
      for (const auto& b : terms_[i].broader) {
        auto it = index_.find(b);
        if (it == index_.end()) {
          throw Error("term " + terms_[i].term_id + " references missing broader id: " + b);
        }
        neighbours_[i].insert(it->second);
        neighbours_[it->second].insert(i);
      }
      for (const auto& r : terms_[i].related) {
        auto it = index_.find(r);
        if (it == index_.end()) {
          throw Error("term " + terms_[i].term_id + " references missing related id: " + r);
        }
        neighbours_[i].insert(it->second);
        neighbours_[it->second].insert(i);
      }
    }
    for (std::size_t i = 0; i < terms_.size(); ++i) neighbours_[i].erase(i);
  }

  // Rejects broader cycles (reporting one), then assigns depth as the
  // shortest broader chain to a root.
  void compute_depths() {
    const std::size_t n = terms_.size();
    std::vector<std::vector<std::size_t>> parents(n);
    std::vector<std::vector<std::size_t>> children(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (const auto& b : terms_[i].broader) {
        const std::size_t p = index_.at(b);
        parents[i].push_back(p);
        children[p].push_back(i);
      }
    }

    enum class Mark { kNew, kActive, kDone };
    std::vector<Mark> mark(n, Mark::kNew);
    std::vector<std::size_t> stack;
    for (std::size_t root = 0; root < n; ++root) {
      if (mark[root] != Mark::kNew) continue;
      // iterative DFS along broader links; frame = (node, next parent slot)
      std::vector<std::pair<std::size_t, std::size_t>> frames{{root, 0}};
      mark[root] = Mark::kActive;
      stack = {root};
      while (!frames.empty()) {
        auto& [node, slot] = frames.back();
        if (slot < parents[node].size()) {
          const std::size_t p = parents[node][slot++];
          if (mark[p] == Mark::kActive) {
            std::string cycle;
            auto from = std::find(stack.begin(), stack.end(), p);
            for (auto it = from; it != stack.end(); ++it) cycle += terms_[*it].term_id + " -> ";
            cycle += terms_[p].term_id;
            throw Error("broader cycle: " + cycle);
          }
          if (mark[p] == Mark::kNew) {
            mark[p] = Mark::kActive;
            stack.push_back(p);
            frames.push_back({p, 0});
          }
        } else {
          mark[node] = Mark::kDone;
          stack.pop_back();
          frames.pop_back();
        }
      }
    }

    constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
    std::vector<std::size_t> depth(n, kUnset);
    std::deque<std::size_t> queue;
    for (std::size_t i = 0; i < n; ++i) {
      if (parents[i].empty()) {
        depth[i] = 0;
        queue.push_back(i);
      }
    }
    while (!queue.empty()) {
      const std::size_t u = queue.front();
      queue.pop_front();
      for (auto c : children[u]) {
        if (depth[c] == kUnset) {
          depth[c] = depth[u] + 1;
          queue.push_back(c);
        }
      }
    }
    max_depth_ = 0;
    for (std::size_t i = 0; i < n; ++i) {
      terms_[i].depth = depth[i];
      max_depth_ = std::max(max_depth_, depth[i]);
    }
  }

  void index_labels() {
    for (const auto& t : terms_) label_index_.emplace(normalize_phrase(t.preferred_label), t.term_id);
    for (const auto& t : terms_) {
      for (const auto& alt : t.alt_labels) label_index_.emplace(normalize_phrase(alt), t.term_id);
    }
  }
};

inline Vocabulary load_vocabulary(const std::string& path) { return Vocabulary::load(path); }

}  // namespace keydenoise
