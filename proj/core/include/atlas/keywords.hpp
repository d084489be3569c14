#pragma once

#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "atlas/inventory.hpp"

namespace atlas {

// Sentinel for DerivationConfig::fields_included: the item name plus every metadata
// column. The original macro/sub theme columns are only counted when named explicitly
// ("macro_theme", "sub_theme").
inline constexpr std::string_view kAllFields = "all";

struct DerivationConfig {
  // A term is kept iff its corpus count is strictly greater than this.
  std::size_t threshold_x = 10;
  // Normalized tokens; see normalize_term.
  std::set<std::string> exclusion_list;
  std::size_t min_token_length = 3;
  // Column names, "name" for the item name, or the kAllFields sentinel.
  std::vector<std::string> fields_included{std::string(kAllFields)};

  // Defaults with the bundled Spanish exclusion list.
  static DerivationConfig defaults();

  // Applies "key = value" lines (threshold_x, min_token_length, fields_included,
  // extra_exclusions) on top of `base`. List values are comma-separated;
  // extra_exclusions adds normalized terms to the exclusion list. Throws ParseError.
  static DerivationConfig parse(std::string_view text, DerivationConfig base);

  // Throws InvalidArgument when min_token_length is 0 or fields_included is empty.
  void validate() const;

  // Stable 16-hex-digit hash over every field.
  std::string fingerprint() const;

  bool operator==(const DerivationConfig&) const = default;
};

// The exclusion list that ships in data/exclusions_es.txt.
const std::set<std::string>& default_exclusion_list();

// One token per line, '#' comments, blank lines ignored. Entries are normalized with
// normalize_term so accented spellings match.
std::set<std::string> parse_exclusion_list(std::string_view text);

// Splits on anything that is not a letter or digit, lowercases, and folds Latin
// diacritics to their base letter (including ñ -> n). No filtering.
std::vector<std::string> tokenize(std::string_view raw);

// tokenize() joined back with single spaces; used to canonicalize single terms.
std::string normalize_term(std::string_view raw);

// tokenize() then drop tokens shorter than min_token_length (in code points) and tokens
// in the exclusion list. Order and duplicates are preserved.
std::vector<std::string> normalize_text(std::string_view raw, const DerivationConfig& config);

// The item's text fields selected by config.fields_included, in a stable order.
std::vector<std::string_view> included_fields(const InventoryItem& item, const DerivationConfig& config);

// Term -> occurrences over the item's included fields.
std::map<std::string, std::size_t> term_counts(const InventoryItem& item, const DerivationConfig& config);

std::size_t count_matches(const InventoryItem& item, std::string_view term, const DerivationConfig& config);

struct KeywordDictionary {
  std::map<std::string, std::size_t> entries;
  std::string config_fingerprint;

  bool contains(std::string_view term) const { return entries.find(std::string(term)) != entries.end(); }
  bool operator==(const KeywordDictionary&) const = default;
};

KeywordDictionary build_dictionary(const Corpus& corpus, const DerivationConfig& config);

// First surviving token of a user-typed keyword. Throws InvalidArgument
// ("keyword excluded by normalization") when nothing survives. Extra tokens are
// reported through `ignored` when given.
std::string query_term(std::string_view keyword, const DerivationConfig& config,
                       std::vector<std::string>* ignored = nullptr);

}  // namespace atlas
