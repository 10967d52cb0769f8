#include "charnet/extract.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>

#include "charnet/common.hpp"
#include "charnet/csv.hpp"

namespace charnet {

namespace {

bool is_token_char(unsigned char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c >= 0x80;
}

char fold(char c) { return c >= 'A' && c <= 'Z' ? static_cast<char>(c - 'A' + 'a') : c; }

std::string join_tokens(const std::vector<std::string>& tokens) {
  std::string out;
  for (const auto& t : tokens) {
    if (!out.empty()) out.push_back(' ');
    out += t;
  }
  return out;
}

}  // namespace

std::vector<std::string> tokenize(std::string_view text) {
  std::vector<std::string> tokens;
  std::string current;
  for (char c : text) {
    if (is_token_char(static_cast<unsigned char>(c))) {
      current.push_back(fold(c));
    } else if (!current.empty()) {
      tokens.push_back(std::move(current));
      current.clear();
    }
  }
  if (!current.empty()) tokens.push_back(std::move(current));
  return tokens;
}

void AliasTable::add_character(const std::string& canonical) {
  auto [it, inserted] = canonical_index_.emplace(canonical, static_cast<int>(names_.size()));
  if (inserted) {
    names_.push_back(canonical);
    add(canonical, canonical);  // a canonical name is one of its own aliases
  }
}

void AliasTable::add(const std::string& canonical, const std::string& alias) {
  add_character(canonical);
  int character = canonical_index_.at(canonical);

  auto tokens = tokenize(alias);
  if (tokens.empty()) throw DataError("alias '" + alias + "' has no tokens");
  std::string key = join_tokens(tokens);
  auto [it, inserted] = alias_owner_.emplace(key, character);
  if (!inserted) {
    if (it->second != character)
      throw DataError("alias '" + key + "' assigned to both '" + names_[it->second] + "' and '" +
                      canonical + "'");
    return;  // duplicate declaration of the same alias
  }
  auto& bucket = by_first_token_[tokens[0]];
  bucket.push_back({std::move(tokens), character});
  std::sort(bucket.begin(), bucket.end(), [](const AliasEntry& a, const AliasEntry& b) {
    return a.tokens.size() > b.tokens.size();
  });
}

const std::vector<AliasTable::AliasEntry>* AliasTable::candidates(const std::string& first_token) const {
  auto it = by_first_token_.find(first_token);
  return it == by_first_token_.end() ? nullptr : &it->second;
}

AliasTable AliasTable::from_csv(std::istream& in) {
  AliasTable table;
  for (const auto& row : read_csv(in)) {
    if (row.empty() || (row.size() == 1 && row[0].empty())) continue;
    const std::string& canonical = row[0];
    table.add_character(canonical);
    for (std::size_t i = 1; i < row.size(); ++i) {
      if (!row[i].empty()) table.add(canonical, row[i]);
    }
  }
  if (table.character_count() == 0) throw DataError("alias table declares no characters");
  return table;
}

AliasTable AliasTable::from_csv_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open " + path);
  return from_csv(in);
}

OccurrenceStream scan_occurrences(const std::vector<std::string>& tokens, const AliasTable& aliases) {
  OccurrenceStream hits;
  std::size_t i = 0;
  while (i < tokens.size()) {
    const auto* bucket = aliases.candidates(tokens[i]);
    std::size_t matched = 0;
    if (bucket) {
      for (const auto& entry : *bucket) {  // longest first
        if (entry.tokens.size() > tokens.size() - i) continue;
        if (std::equal(entry.tokens.begin(), entry.tokens.end(), tokens.begin() + static_cast<std::ptrdiff_t>(i))) {
          hits.push_back({i, entry.character});
          matched = entry.tokens.size();
          break;
        }
      }
    }
    i += matched > 0 ? matched : 1;
  }
  return hits;
}

Graph build_network(const OccurrenceStream& occurrences, const WindowConfig& cfg,
                    const AliasTable& aliases) {
  if (cfg.distance < 1) throw DataError("window distance must be >= 1");
  const int n = aliases.character_count();
  for (std::size_t i = 0; i < occurrences.size(); ++i) {
    if (occurrences[i].character < 0 || occurrences[i].character >= n)
      throw DataError("occurrence references an undeclared character");
    if (i > 0 && occurrences[i].position < occurrences[i - 1].position)
      throw DataError("occurrence positions must be non-decreasing");
  }
  GraphBuilder builder(n);
  for (int v = 0; v < n; ++v) builder.set_label(v, aliases.names()[v]);

  std::map<std::pair<int, int>, double> counts;
  std::set<int> partners;
  for (std::size_t j = 0; j < occurrences.size(); ++j) {
    const auto& hit = occurrences[j];
    partners.clear();
    for (std::size_t i = j; i-- > 0;) {
      const auto& prev = occurrences[i];
      if (hit.position - prev.position > cfg.distance) break;
      if (prev.character == hit.character) continue;
      // Same-keystone rule: several in-window hits of one partner character
      // count once for this hit.
      partners.insert(prev.character);
    }
    for (int partner : partners) {
      int a = std::min(partner, hit.character);
      int b = std::max(partner, hit.character);
      counts[{a, b}] += 1.0;
    }
  }
  for (const auto& [pair, w] : counts) builder.add_edge(pair.first, pair.second, w);
  return builder.build();
}

Graph extract_pipeline(std::string_view text, const AliasTable& aliases, const WindowConfig& cfg) {
  auto tokens = tokenize(text);
  auto hits = scan_occurrences(tokens, aliases);
  return build_network(hits, cfg, aliases);
}

}  // namespace charnet
