// Corpus directories: <id>.txt full text plus optional <id>.key gold list.
#pragma once

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "keydenoise/error.hpp"
#include "keydenoise/textkit.hpp"

namespace keydenoise {

namespace fs = std::filesystem;

inline std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw Error("cannot read " + path.string());
  return ss.str();
}

inline void write_file(const fs::path& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path.string());
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!out) throw Error("cannot write " + path.string());
}

/// One keyphrase per non-blank line, surrounding whitespace trimmed.
inline std::vector<std::string> parse_key_file(std::string_view text) {
  std::vector<std::string> out;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    const auto b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos) continue;
    const auto e = line.find_last_not_of(" \t\r");
    out.push_back(line.substr(b, e - b + 1));
  }
  return out;
}

struct CorpusEntry {
  std::string id;
  fs::path text_path;
  std::optional<fs::path> key_path;
};

/// Lists <id>.txt files (ignoring this tool's own *.denoised.txt and
/// *.noise.txt outputs), sorted by id. Ids that differ only in case are
/// rejected because their output files would collide on some systems.
inline std::vector<CorpusEntry> list_corpus(const fs::path& dir) {
  if (!fs::is_directory(dir)) throw Error("corpus directory not found: " + dir.string());
  std::vector<CorpusEntry> entries;
  std::map<std::string, std::string> folded;
  for (const auto& e : fs::directory_iterator(dir)) {
    if (!e.is_regular_file()) continue;
    const std::string name = e.path().filename().string();
    if (name.size() <= 4 || name.substr(name.size() - 4) != ".txt") continue;
    const std::string id = name.substr(0, name.size() - 4);
    auto ends_with = [&](std::string_view suffix) {
      return id.size() > suffix.size() && id.compare(id.size() - suffix.size(), suffix.size(), suffix) == 0;
    };
    if (ends_with(".denoised") || ends_with(".noise")) continue;
    auto [it, inserted] = folded.emplace(casefold(id), id);
    if (!inserted) throw Error("duplicate document id: " + it->second + " and " + id);
    CorpusEntry entry{id, e.path(), std::nullopt};
    const fs::path key = dir / (id + ".key");
    if (fs::is_regular_file(key)) entry.key_path = key;
    entries.push_back(std::move(entry));
  }
  std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
  return entries;
}

inline Document load_entry(const CorpusEntry& entry, bool require_keys,
                           const StopwordList& stopwords = StopwordList::builtin()) {
  std::optional<std::vector<std::string>> gold;
  if (entry.key_path) {
    gold = parse_key_file(read_file(*entry.key_path));
  } else if (require_keys) {
    throw Error("document " + entry.id + " has no .key file");
  }
  return make_document(entry.id, read_file(entry.text_path), std::move(gold), stopwords);
}

inline std::vector<Document> load_corpus(const fs::path& dir, bool require_keys,
                                         const StopwordList& stopwords = StopwordList::builtin()) {
  std::vector<Document> docs;
  for (const auto& e : list_corpus(dir)) docs.push_back(load_entry(e, require_keys, stopwords));
  return docs;
}

}  // namespace keydenoise
