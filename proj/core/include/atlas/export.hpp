#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "atlas/analytics.hpp"
#include "atlas/inventory.hpp"
#include "atlas/keywords.hpp"
#include "atlas/layout.hpp"
#include "atlas/network.hpp"

// Canonical JSON documents. Every document carries a "schema" field; field order is
// fixed, so identical inputs always produce identical bytes. The field-level contract
// lives in docs/json-schemas.md.
namespace atlas {

inline constexpr std::string_view kCorpusSchema = "atlas.corpus/1";
inline constexpr std::string_view kNetworkSchema = "atlas.network/1";
inline constexpr std::string_view kDictionarySchema = "atlas.keywords/1";
inline constexpr std::string_view kLayoutSchema = "atlas.layout/1";
inline constexpr std::string_view kSummarySchema = "atlas.summary/1";
inline constexpr std::string_view kRankingSchema = "atlas.ranking/1";
inline constexpr std::string_view kItemSchema = "atlas.item/1";
inline constexpr std::string_view kErrorSchema = "atlas.error/1";

std::string export_corpus_json(const Corpus& corpus);
// Throws ParseError on malformed JSON or a schema version mismatch.
Corpus import_corpus_json(std::string_view text);

struct NetworkDocument {
  ThematicNetwork network;
  ClusterAssignment assignment;
};

std::string export_network_json(const ThematicNetwork& network, const ClusterAssignment& assignment);
NetworkDocument import_network_json(std::string_view text);

std::string export_dictionary_json(const KeywordDictionary& dictionary);
KeywordDictionary import_dictionary_json(std::string_view text);

std::string export_derivation_config_json(const DerivationConfig& config);
DerivationConfig import_derivation_config_json(std::string_view text);

std::string export_layout_json(const LayoutResult& layout);
std::string export_summary_json(const ThemeSummary& summary);
std::string export_ranking_json(std::string_view term, const std::vector<RankedMatch>& ranking);
std::string export_item_detail_json(const ItemDetail& detail);
std::string export_error_json(int status, std::string_view message);

}  // namespace atlas
