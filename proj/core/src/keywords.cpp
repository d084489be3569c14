#include "atlas/keywords.hpp"

#include <algorithm>
#include <charconv>

#include "atlas/error.hpp"
#include "latin_fold.inc.hpp"
#include "utf8.hpp"

namespace atlas {

// Defined in the generated default_exclusions.cpp.
std::string_view bundled_exclusion_text() noexcept;

namespace {

bool is_combining_mark(char32_t cp) {
  return (cp >= 0x0300 && cp <= 0x036F) || (cp >= 0x1AB0 && cp <= 0x1AFF) ||
         (cp >= 0x1DC0 && cp <= 0x1DFF) || (cp >= 0x20D0 && cp <= 0x20FF) ||
         (cp >= 0xFE20 && cp <= 0xFE2F);
}

// Code points above the Latin tables count as letters unless they fall in a
// punctuation, symbol or space block.
bool is_separator_block(char32_t cp) {
  return (cp >= 0x2000 && cp <= 0x2BFF) || (cp >= 0x3000 && cp <= 0x303F) ||
         (cp >= 0xFE10 && cp <= 0xFE1F) || (cp >= 0xFE30 && cp <= 0xFE6F) ||
         (cp >= 0xFF00 && cp <= 0xFF0F) || (cp >= 0xFF1A && cp <= 0xFF20) ||
         (cp >= 0xFF3B && cp <= 0xFF40) || (cp >= 0xFF5B && cp <= 0xFF65) || cp >= 0xFFF0 ||
         cp == detail::kReplacement;
}

std::size_t code_point_length(std::string_view token) {
  std::size_t n = 0;
  for (std::size_t pos = 0; pos < token.size(); ++n) detail::next_code_point(token, pos);
  return n;
}

std::vector<std::string> split_list(std::string_view text) {
  std::vector<std::string> out;
  while (true) {
    const auto comma = text.find(',');
    const auto part = detail::trim(text.substr(0, comma));
    if (!part.empty()) out.emplace_back(part);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return out;
}

}  // namespace

std::vector<std::string> tokenize(std::string_view raw) {
  std::vector<std::string> tokens;
  std::string current;
  auto flush = [&] {
    if (!current.empty()) tokens.push_back(std::move(current));
    current.clear();
  };

  std::size_t pos = 0;
  while (pos < raw.size()) {
    const char32_t cp = detail::next_code_point(raw, pos);
    if (cp < 0x80) {
      const auto c = static_cast<char>(cp);
      if (c >= 'A' && c <= 'Z') {
        current.push_back(static_cast<char>(c - 'A' + 'a'));
      } else if ((c >= 'a' && c <= 'z') || (c >= '0' && c <= '9')) {
        current.push_back(c);
      } else {
        flush();
      }
    } else if (cp <= detail::kFoldTableLast) {
      if (const char* folded = detail::kLatinFold[cp - detail::kFoldTableFirst]) {
        current += folded;
      } else {
        flush();
      }
    } else if (is_combining_mark(cp)) {
      // Decomposed accents: drop the mark, keep the token going.
    } else if (is_separator_block(cp)) {
      flush();
    } else {
      detail::append_utf8(current, cp);
    }
  }
  flush();
  return tokens;
}

std::string normalize_term(std::string_view raw) {
  std::string out;
  for (const auto& token : tokenize(raw)) {
    if (!out.empty()) out.push_back(' ');
    out += token;
  }
  return out;
}

std::vector<std::string> normalize_text(std::string_view raw, const DerivationConfig& config) {
  auto tokens = tokenize(raw);
  std::erase_if(tokens, [&](const std::string& t) {
    return code_point_length(t) < config.min_token_length || config.exclusion_list.contains(t);
  });
  return tokens;
}

std::set<std::string> parse_exclusion_list(std::string_view text) {
  std::set<std::string> out;
  while (!text.empty()) {
    const auto eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text.remove_prefix(eol == std::string_view::npos ? text.size() : eol + 1);
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    // A line holding several words contributes each of them.
    for (auto& token : tokenize(line)) out.insert(std::move(token));
  }
  return out;
}

const std::set<std::string>& default_exclusion_list() {
  static const std::set<std::string> list = parse_exclusion_list(bundled_exclusion_text());
  return list;
}

DerivationConfig DerivationConfig::defaults() {
  DerivationConfig config;
  config.exclusion_list = default_exclusion_list();
  return config;
}

DerivationConfig DerivationConfig::parse(std::string_view text, DerivationConfig base) {
  std::size_t line_no = 0;
  auto parse_count = [&](std::string_view value) {
    std::size_t out = 0;
    const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
    if (ec != std::errc{} || ptr != value.data() + value.size()) {
      throw ParseError("<derivation config>", line_no,
                       "expected a non-negative integer, got '" + std::string(value) + "'");
    }
    return out;
  };
  while (!text.empty()) {
    ++line_no;
    const auto eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text.remove_prefix(eol == std::string_view::npos ? text.size() : eol + 1);
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = detail::trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) throw ParseError("<derivation config>", line_no, "expected key = value");
    const auto key = detail::trim(line.substr(0, eq));
    const auto value = detail::trim(line.substr(eq + 1));
    if (key == "threshold_x") {
      base.threshold_x = parse_count(value);
    } else if (key == "min_token_length") {
      base.min_token_length = parse_count(value);
    } else if (key == "fields_included") {
      base.fields_included = split_list(value);
    } else if (key == "extra_exclusions") {
      for (const auto& term : split_list(value)) {
        if (auto folded = normalize_term(term); !folded.empty()) base.exclusion_list.insert(std::move(folded));
      }
    } else {
      throw ParseError("<derivation config>", line_no, "unknown key '" + std::string(key) + "'");
    }
  }
  base.validate();
  return base;
}

void DerivationConfig::validate() const {
  if (min_token_length == 0) throw InvalidArgument("min_token_length must be at least 1");
  if (fields_included.empty()) throw InvalidArgument("fields_included must not be empty");
}

std::string DerivationConfig::fingerprint() const {
  std::string canonical = "x=" + std::to_string(threshold_x) + ";min=" + std::to_string(min_token_length) + ";fields=";
  for (const auto& f : fields_included) canonical += f + '\x1f';
  canonical += ";excl=";
  for (const auto& e : exclusion_list) canonical += e + '\x1f';
  return detail::hex64(detail::fnv1a(canonical));
}

std::vector<std::string_view> included_fields(const InventoryItem& item, const DerivationConfig& config) {
  std::vector<std::string_view> out;
  const bool all = std::find(config.fields_included.begin(), config.fields_included.end(), kAllFields) !=
                   config.fields_included.end();
  if (all) {
    out.emplace_back(item.name);
    for (const auto& entry : item.metadata) out.emplace_back(entry.second);
  }
  for (const auto& field : config.fields_included) {
    if (field == kAllFields) continue;
    if (field == "name") {
      if (!all) out.emplace_back(item.name);
    } else if (field == "macro_theme") {
      out.emplace_back(item.macro_theme);
    } else if (field == "sub_theme") {
      out.emplace_back(item.sub_theme);
    } else if (!all) {
      if (const auto* value = item.field(field)) out.emplace_back(*value);
    }
  }
  return out;
}

std::map<std::string, std::size_t> term_counts(const InventoryItem& item, const DerivationConfig& config) {
  std::map<std::string, std::size_t> counts;
  for (const auto field : included_fields(item, config)) {
    for (auto& token : normalize_text(field, config)) ++counts[std::move(token)];
  }
  return counts;
}

std::size_t count_matches(const InventoryItem& item, std::string_view term, const DerivationConfig& config) {
  std::size_t n = 0;
  for (const auto field : included_fields(item, config)) {
    for (const auto& token : normalize_text(field, config)) n += token == term ? 1 : 0;
  }
  return n;
}

KeywordDictionary build_dictionary(const Corpus& corpus, const DerivationConfig& config) {
  config.validate();
  std::map<std::string, std::size_t> totals;
  for (const auto& item : corpus.items) {
    for (const auto& [term, n] : term_counts(item, config)) totals[term] += n;
  }
  KeywordDictionary dictionary;
  dictionary.config_fingerprint = config.fingerprint();
  for (auto& [term, n] : totals) {
    if (n > config.threshold_x) dictionary.entries.emplace(term, n);
  }
  return dictionary;
}

std::string query_term(std::string_view keyword, const DerivationConfig& config,
                       std::vector<std::string>* ignored) {
  auto tokens = normalize_text(keyword, config);
  if (tokens.empty()) throw InvalidArgument("keyword excluded by normalization");
  if (ignored) ignored->assign(tokens.begin() + 1, tokens.end());
  return tokens.front();
}

}  // namespace atlas
