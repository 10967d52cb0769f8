#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "charnet/graph.hpp"

namespace charnet {

// Lowercased maximal runs of alphanumeric characters; punctuation and
// whitespace separate tokens. Bytes outside ASCII are kept as token
// characters so accented names stay intact (only ASCII is case-folded).
std::vector<std::string> tokenize(std::string_view text);

// Canonical character names and their aliases. Aliases are stored lowercase
// and tokenized; every canonical name doubles as one of its own aliases; one
// alias string can belong to only one character.
class AliasTable {
 public:
  // One CSV row per character: canonical name first, aliases after.
  static AliasTable from_csv(std::istream& in);
  static AliasTable from_csv_file(const std::string& path);

  // Registers the canonical name (if new) and an alias for it.
  void add(const std::string& canonical, const std::string& alias);
  void add_character(const std::string& canonical);

  int character_count() const { return static_cast<int>(names_.size()); }
  // Canonical names in declaration order; index doubles as the node id of
  // the extracted graph.
  const std::vector<std::string>& names() const { return names_; }

  struct AliasEntry {
    std::vector<std::string> tokens;
    int character;
  };
  // Aliases starting with the given token, longest first.
  const std::vector<AliasEntry>* candidates(const std::string& first_token) const;

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, int> canonical_index_;
  std::unordered_map<std::string, int> alias_owner_;         // joined alias -> character
  std::unordered_map<std::string, std::vector<AliasEntry>> by_first_token_;
};

struct Occurrence {
  std::size_t position;  // token index of the alias's first token
  int character;         // index into AliasTable::names()
};
using OccurrenceStream = std::vector<Occurrence>;

struct WindowConfig {
  std::size_t distance = 15;  // max token distance between alias start positions
};

// Greedy longest-match scan, left to right. A matched multi-token alias
// consumes its tokens; no overlapping match may start inside it.
OccurrenceStream scan_occurrences(const std::vector<std::string>& tokens, const AliasTable& aliases);

// Counts co-occurrences of distinct characters whose hit positions are at
// most cfg.distance apart. For each hit, earlier in-window hits of the same
// partner character count once (same-keystone rule). Characters in the alias
// table with no co-occurrences appear as isolated nodes.
Graph build_network(const OccurrenceStream& occurrences, const WindowConfig& cfg,
                    const AliasTable& aliases);

Graph extract_pipeline(std::string_view text, const AliasTable& aliases, const WindowConfig& cfg);

}  // namespace charnet
