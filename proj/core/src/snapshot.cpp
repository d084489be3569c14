#include "atlas/snapshot.hpp"

#include <json.hpp>

#include "atlas/error.hpp"
#include "atlas/export.hpp"
#include "utf8.hpp"

namespace atlas {

using Json = nlohmann::ordered_json;

std::string corpus_fingerprint(const Corpus& corpus) {
  return detail::hex64(detail::fnv1a(export_corpus_json(corpus)));
}

Snapshot build_snapshot(Corpus corpus, DerivationConfig config) {
  config.validate();
  Snapshot s;
  s.corpus_fingerprint = corpus_fingerprint(corpus);
  s.dictionary = build_dictionary(corpus, config);
  s.network = derive_network(corpus, s.dictionary, config);
  s.assignment = assign_clusters(s.network);
  s.corpus = std::move(corpus);
  s.config = std::move(config);
  return s;
}

std::string export_derived_json(const Snapshot& snapshot) {
  Json doc;
  doc["schema"] = kDerivedSchema;
  doc["corpus_fingerprint"] = snapshot.corpus_fingerprint;
  doc["config"] = Json::parse(export_derivation_config_json(snapshot.config));
  doc["dictionary"] = Json::parse(export_dictionary_json(snapshot.dictionary));
  doc["network"] = Json::parse(export_network_json(snapshot.network, snapshot.assignment));
  return doc.dump(2) + "\n";
}

Snapshot load_snapshot(std::string_view corpus_json, std::string_view derived_json, std::string_view corpus_source,
                       std::string_view derived_source) {
  const std::string corpus_name(corpus_source);
  const std::string derived_name(derived_source);
  auto fail = [](const std::string& source, const std::string& message) -> ParseError {
    return ParseError(source, 0, message);
  };

  Snapshot s;
  try {
    s.corpus = import_corpus_json(corpus_json);
  } catch (const ParseError& e) {
    throw fail(corpus_name, e.what());
  }

  try {
    const Json doc = Json::parse(derived_json);
    if (!doc.is_object() || doc.value("schema", "") != kDerivedSchema) {
      throw fail(derived_name, "expected schema " + std::string(kDerivedSchema));
    }
    s.corpus_fingerprint = doc.at("corpus_fingerprint").get<std::string>();
    s.config = import_derivation_config_json(doc.at("config").dump());
    s.dictionary = import_dictionary_json(doc.at("dictionary").dump());
    auto network = import_network_json(doc.at("network").dump());
    s.network = std::move(network.network);
    s.assignment = std::move(network.assignment);
  } catch (const ParseError& e) {
    if (e.source() == derived_name) throw;
    throw fail(derived_name, e.what());
  } catch (const Json::exception& e) {
    throw fail(derived_name, e.what());
  }

  if (s.corpus_fingerprint != corpus_fingerprint(s.corpus)) {
    throw fail(derived_name, "derived from a different corpus than " + corpus_name);
  }
  if (s.dictionary.config_fingerprint != s.config.fingerprint()) {
    throw fail(derived_name, "dictionary was built with a different configuration");
  }
  std::size_t item = 0;
  for (const auto& node : s.network.nodes) {
    if (node.role != NodeRole::Item) {
      if (!s.dictionary.contains(node.label)) throw fail(derived_name, "keyword node '" + node.label + "' not in dictionary");
      continue;
    }
    if (item >= s.corpus.items.size() || s.corpus.items[item].id != node.id) {
      throw fail(derived_name, "network items do not match the corpus");
    }
    ++item;
  }
  if (item != s.corpus.items.size()) throw fail(derived_name, "network items do not match the corpus");
  return s;
}

}  // namespace atlas
