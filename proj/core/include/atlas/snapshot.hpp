#pragma once

#include <string>
#include <string_view>

#include "atlas/inventory.hpp"
#include "atlas/keywords.hpp"
#include "atlas/network.hpp"

namespace atlas {

inline constexpr std::string_view kDerivedSchema = "atlas.derived/1";

// Everything the query layer reads. Built once, then shared read-only.
struct Snapshot {
  Corpus corpus;
  DerivationConfig config;
  KeywordDictionary dictionary;
  ThematicNetwork network;
  ClusterAssignment assignment;
  std::string corpus_fingerprint;
};

// Hash of the canonical corpus JSON.
std::string corpus_fingerprint(const Corpus& corpus);

// Runs the whole derivation: dictionary, network, clusters.
Snapshot build_snapshot(Corpus corpus, DerivationConfig config);

// The derive step's output: config, dictionary, network + assignment and the
// fingerprint of the corpus it was derived from.
std::string export_derived_json(const Snapshot& snapshot);

// Pairs a corpus document with a derived document. Throws ParseError naming the
// offending source when either is malformed or the two do not belong together.
Snapshot load_snapshot(std::string_view corpus_json, std::string_view derived_json,
                       std::string_view corpus_source = "<corpus>", std::string_view derived_source = "<derived>");

}  // namespace atlas
