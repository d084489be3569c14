#include <gtest/gtest.h>

#include "atlas/error.hpp"
#include "atlas/keywords.hpp"
#include "fixtures.hpp"

using namespace atlas;

namespace {

std::map<std::string, std::size_t> entries(std::initializer_list<std::pair<const std::string, std::size_t>> list) {
  return list;
}

}  // namespace

TEST(Tokenize, LowercasesFoldsAndSplits) {
  EXPECT_EQ(tokenize("Créditos de Vivienda"), (std::vector<std::string>{"creditos", "de", "vivienda"}));
  EXPECT_EQ(tokenize("NIÑEZ/año-2020 (RIPS)"), (std::vector<std::string>{"ninez", "ano", "2020", "rips"}));
  EXPECT_EQ(tokenize("Ärger über Çà"), (std::vector<std::string>{"arger", "uber", "ca"}));
  EXPECT_TRUE(tokenize("").empty());
  EXPECT_TRUE(tokenize(" ,;-- ").empty());
}

TEST(Tokenize, CombiningMarksFoldToo) {
  // "é" spelled as e + U+0301.
  EXPECT_EQ(tokenize("cre\xCC\x81" "ditos"), (std::vector<std::string>{"creditos"}));
}

TEST(NormalizeText, DropsShortAndExcludedTokensInOrder) {
  DerivationConfig config;
  config.exclusion_list = {"de", "registro"};
  EXPECT_EQ(normalize_text("Créditos de Vivienda", config), (std::vector<std::string>{"creditos", "vivienda"}));
  EXPECT_EQ(normalize_text("RIPS – Registro Individual", config), (std::vector<std::string>{"rips", "individual"}));
  EXPECT_EQ(normalize_text("salud y salud", config), (std::vector<std::string>{"salud", "salud"}));
  EXPECT_TRUE(normalize_text("", config).empty());
}

TEST(NormalizeText, MinLengthCountsCodePoints) {
  DerivationConfig config;
  config.min_token_length = 3;
  // "año" folds to three letters and survives.
  EXPECT_EQ(normalize_text("año ab", config), (std::vector<std::string>{"ano"}));
}

TEST(ExclusionList, ParsesCommentsAndFoldsAccents) {
  const auto list = parse_exclusion_list("# comment\nDe\n\n  Información \nestadística\n");
  EXPECT_EQ(list, (std::set<std::string>{"de", "informacion", "estadistica"}));
}

TEST(ExclusionList, BundledListCoversStopwordsAndBoilerplate) {
  const auto& list = default_exclusion_list();
  for (const char* word : {"de", "la", "y", "para", "registro", "operacion", "estadistica", "informacion", "nacional",
                           "datos"}) {
    EXPECT_TRUE(list.count(word)) << word;
  }
  for (const auto& entry : list) EXPECT_EQ(normalize_term(entry), entry);
}

TEST(DerivationConfig, ParseValidateFingerprint) {
  const auto base = DerivationConfig::defaults();
  const auto config = DerivationConfig::parse("threshold_x = 2\nmin_token_length=4\nfields_included = name, objetivo\n", base);
  EXPECT_EQ(config.threshold_x, 2u);
  EXPECT_EQ(config.min_token_length, 4u);
  EXPECT_EQ(config.fields_included, (std::vector<std::string>{"name", "objetivo"}));
  EXPECT_NE(config.fingerprint(), base.fingerprint());
  EXPECT_EQ(base.fingerprint(), DerivationConfig::defaults().fingerprint());
  EXPECT_EQ(base.fingerprint().size(), 16u);
  EXPECT_THROW(DerivationConfig::parse("threshold_x = -1\n", base), ParseError);
  EXPECT_THROW(DerivationConfig::parse("colour = red\n", base), ParseError);
  const auto extra = DerivationConfig::parse("extra_exclusions = Encuesta, Ñandú\n", base);
  EXPECT_TRUE(extra.exclusion_list.contains("encuesta"));
  EXPECT_TRUE(extra.exclusion_list.contains("nandu"));
  EXPECT_EQ(extra.exclusion_list.size(), base.exclusion_list.size() + 2);

  DerivationConfig bad = base;
  bad.min_token_length = 0;
  EXPECT_THROW(bad.validate(), InvalidArgument);
  bad = base;
  bad.fields_included.clear();
  EXPECT_THROW(bad.validate(), InvalidArgument);
}

TEST(IncludedFields, AllMeansNameAndMetadataButNotThemes) {
  const auto item = fixtures::f1_corpus().items[1];
  DerivationConfig config;
  EXPECT_EQ(included_fields(item, config).size(), 2u);
  config.fields_included = {"macro_theme", "sub_theme"};
  const auto fields = included_fields(item, config);
  ASSERT_EQ(fields.size(), 2u);
  EXPECT_EQ(fields[0], "Social");
  config.fields_included = {"objetivo"};
  EXPECT_EQ(included_fields(item, config), (std::vector<std::string_view>{item.metadata[0].second}));
}

TEST(CountMatches, F1HandCounts) {
  const auto corpus = fixtures::f1_corpus();
  const auto config = fixtures::f1_config();
  EXPECT_EQ(count_matches(corpus.items[1], "salud", config), 3u);
  EXPECT_EQ(count_matches(corpus.items[0], "salud", config), 0u);
  EXPECT_EQ(count_matches(corpus.items[2], "servicios", config), 2u);
}

TEST(BuildDictionary, F1Thresholds) {
  const auto corpus = fixtures::f1_corpus();
  EXPECT_EQ(build_dictionary(corpus, fixtures::f1_config(2)).entries,
            entries({{"salud", 5}, {"servicios", 3}, {"vivienda", 3}}));
  EXPECT_EQ(build_dictionary(corpus, fixtures::f1_config(0)).entries,
            entries({{"cobertura", 1},
                     {"creditos", 2},
                     {"financiacion", 1},
                     {"prestacion", 1},
                     {"salud", 5},
                     {"servicios", 3},
                     {"vivienda", 3}}));
  EXPECT_TRUE(build_dictionary(corpus, fixtures::f1_config(999)).entries.empty());
}

TEST(BuildDictionary, CarriesConfigFingerprint) {
  const auto config = fixtures::f1_config();
  EXPECT_EQ(build_dictionary(fixtures::f1_corpus(), config).config_fingerprint, config.fingerprint());
}

TEST(BuildDictionary, MatchesBruteForceRecount) {
  for (std::uint64_t seed = 100; seed < 130; ++seed) {
    const Corpus corpus = fixtures::random_corpus(seed);
    for (std::size_t x : {0u, 1u, 2u, 5u}) {
      DerivationConfig config = DerivationConfig::defaults();
      config.threshold_x = x;
      EXPECT_EQ(build_dictionary(corpus, config).entries,
                fixtures::oracle_dictionary(corpus, config.exclusion_list, config.min_token_length, x))
          << "seed " << seed << " X " << x;
    }
  }
}

TEST(BuildDictionary, Properties) {
  for (std::uint64_t seed = 200; seed < 220; ++seed) {
    const Corpus corpus = fixtures::random_corpus(seed);
    DerivationConfig config = DerivationConfig::defaults();
    config.threshold_x = 1;
    const auto loose = build_dictionary(corpus, config);
    config.threshold_x = 4;
    const auto strict = build_dictionary(corpus, config);
    for (const auto& [term, freq] : strict.entries) {
      // Monotone in X.
      ASSERT_TRUE(loose.contains(term));
      EXPECT_GT(freq, 4u);
      EXPECT_FALSE(config.exclusion_list.count(term));
      EXPECT_GE(term.size(), config.min_token_length);
      // Sum rule.
      std::size_t sum = 0;
      for (const auto& item : corpus.items) sum += count_matches(item, term, config);
      EXPECT_EQ(sum, freq);
    }
    EXPECT_EQ(build_dictionary(corpus, config), strict);
  }
}

TEST(QueryTerm, NormalizesAndRejectsStopwords) {
  const auto config = fixtures::f1_config();
  EXPECT_EQ(query_term("Salud ", config), "salud");
  EXPECT_EQ(query_term("MINERÍA", config), "mineria");
  std::vector<std::string> ignored;
  EXPECT_EQ(query_term("salud pública", config, &ignored), "salud");
  EXPECT_EQ(ignored, (std::vector<std::string>{"publica"}));
  try {
    query_term("de", config);
    FAIL();
  } catch (const InvalidArgument& e) {
    EXPECT_STREQ(e.what(), "keyword excluded by normalization");
  }
  EXPECT_THROW(query_term("", config), InvalidArgument);
}
