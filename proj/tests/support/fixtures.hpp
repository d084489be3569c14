#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "atlas/inventory.hpp"
#include "atlas/keywords.hpp"
#include "atlas/layout.hpp"
#include "atlas/network.hpp"

namespace atlas::fixtures {

// Three items: I1 register (vivienda), I2 operation (salud), I3 register (salud).
Corpus f1_corpus();
// Bundled stopwords plus "encuesta", threshold X.
DerivationConfig f1_config(std::size_t threshold = 2);

// Small random corpus for oracle comparisons: at most max_items items and max_fields
// text columns, drawn from a vocabulary mixing accents, case, stopwords, digits and
// punctuation.
Corpus random_corpus(std::uint64_t seed, std::size_t max_items = 50, std::size_t max_fields = 10);

// Topic-structured corpus: every item mentions one main topic twice and a second topic
// once, so each of the `topics` words clears the default threshold for large enough
// item counts.
Corpus synthetic_corpus(std::size_t items, std::size_t topics, std::uint64_t seed);
const std::vector<std::string>& topic_words();

// Writes synthetic rows as CSV text with columns nombre,objetivo,tema,subtema,entidad.
std::string synthetic_csv(std::size_t rows, std::size_t topics, std::uint64_t seed, ItemKind kind);

// Independent recount: ASCII letters/digits plus a fixed table of accented Latin
// letters, everything else separates tokens.
std::vector<std::string> oracle_tokens(std::string_view text);
std::map<std::string, std::size_t> oracle_item_counts(const InventoryItem& item, const std::set<std::string>& excluded,
                                                      std::size_t min_length);
std::map<std::string, std::size_t> oracle_dictionary(const Corpus& corpus, const std::set<std::string>& excluded,
                                                     std::size_t min_length, std::size_t threshold);

// Recursive squarified treemap written straight from the row/worst formulation,
// without the greedy loop, used to cross-check cell coordinates.
std::vector<Rect> oracle_squarify(const std::vector<double>& weights, const Rect& rect);

std::string read_text(const std::string& path);

}  // namespace atlas::fixtures
