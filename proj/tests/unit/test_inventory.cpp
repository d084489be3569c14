#include <gtest/gtest.h>

#include "atlas/csv.hpp"
#include "atlas/error.hpp"
#include "atlas/export.hpp"
#include "atlas/inventory.hpp"
#include "fixtures.hpp"

using namespace atlas;

TEST(Csv, QuotedCommasEscapesAndMultilineFields) {
  const auto records = csv::read_records("a,b,c\n\"x, y\",\"say \"\"hi\"\"\",\"two\nlines\"\nlast,,\n");
  ASSERT_EQ(records.size(), 3u);
  EXPECT_EQ(records[1].fields, (std::vector<std::string>{"x, y", "say \"hi\"", "two\nlines"}));
  EXPECT_EQ(records[1].line, 2u);
  EXPECT_EQ(records[2].fields, (std::vector<std::string>{"last", "", ""}));
  EXPECT_EQ(records[2].line, 4u);
}

TEST(Csv, CrlfAndBomAndMissingFinalNewline) {
  const auto records = csv::read_records("\xEF\xBB\xBFnombre,tema\r\nuno,dos\r\ntres,cuatro");
  ASSERT_EQ(records.size(), 3u);
  EXPECT_EQ(records[0].fields[0], "nombre");
  EXPECT_EQ(records[2].fields, (std::vector<std::string>{"tres", "cuatro"}));
}

TEST(Csv, UnterminatedQuoteReportsStartLine) {
  try {
    csv::read_records("a\nb\n\"open\nstill open", "in.csv");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.source(), "in.csv");
    EXPECT_EQ(e.row(), 3u);
  }
}

TEST(Csv, EscapeRoundTrip) {
  EXPECT_EQ(csv::escape_field("plain"), "plain");
  EXPECT_EQ(csv::escape_field("a,b"), "\"a,b\"");
  EXPECT_EQ(csv::escape_field("q\"q"), "\"q\"\"q\"");
  const std::string nasty = "x, \"y\"\nz";
  const auto records = csv::read_records(csv::escape_field(nasty) + "\n");
  EXPECT_EQ(records.at(0).fields.at(0), nasty);
}

TEST(ParseInventory, MapsThemeColumnsAndKeepsTheRestAsMetadata) {
  const auto items = parse_inventory("nombre,tema,subtema,objetivo\nA,T1,S1,obj a\nB,T2,S2,obj b\n",
                                     ItemKind::StatisticalOperation, SchemaConfig{});
  ASSERT_EQ(items.size(), 2u);
  EXPECT_EQ(items[0].id, "1");
  EXPECT_EQ(items[1].id, "2");
  EXPECT_EQ(items[1].name, "B");
  EXPECT_EQ(items[1].macro_theme, "T2");
  EXPECT_EQ(items[1].sub_theme, "S2");
  EXPECT_EQ(items[1].kind, ItemKind::StatisticalOperation);
  EXPECT_EQ(items[1].metadata, (Metadata{{"objetivo", "obj b"}}));
}

TEST(ParseInventory, HeaderOnlyIsEmpty) {
  EXPECT_TRUE(parse_inventory("nombre,tema,subtema\n", ItemKind::AdministrativeRegister, {}).empty());
}

TEST(ParseInventory, FiveHundredRowsTwentyColumns) {
  std::string text = "nombre,tema,subtema";
  for (int c = 4; c <= 20; ++c) text += ",col" + std::to_string(c);
  text += "\n";
  for (int r = 0; r < 500; ++r) {
    text += "item " + std::to_string(r) + ",t,s";
    for (int c = 4; c <= 20; ++c) text += ",v";
    text += "\n";
  }
  const auto part = load_inventory(text, ItemKind::AdministrativeRegister, {}, "r", "r.csv");
  EXPECT_EQ(part.items.size(), 500u);
  EXPECT_EQ(part.columns.size(), 20u);
  EXPECT_EQ(merge_inventories({part}).schema.size(), 20u);
}

TEST(ParseInventory, MissingMappedColumnIsNamed) {
  try {
    parse_inventory("nombre,tema\nA,T\n", ItemKind::AdministrativeRegister, {}, "x.csv");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("subtema"), std::string::npos);
  }
}

TEST(ParseInventory, UnmappedOptionalThemeColumns) {
  SchemaConfig schema;
  schema.macro_theme_column.clear();
  schema.sub_theme_column.clear();
  const auto items = parse_inventory("nombre\nsolo\n", ItemKind::AdministrativeRegister, schema);
  ASSERT_EQ(items.size(), 1u);
  EXPECT_TRUE(items[0].macro_theme.empty());
}

TEST(ParseInventory, MalformedRowCarriesOneBasedLine) {
  try {
    parse_inventory("nombre,tema,subtema\nA,T,S\nB,T\n", ItemKind::AdministrativeRegister, {}, "bad.csv");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.row(), 3u);
    EXPECT_EQ(e.source(), "bad.csv");
  }
}

TEST(ParseInventory, InvalidUtf8IsRejected) {
  EXPECT_THROW(parse_inventory("nombre,tema,subtema\n\xC3\x28,T,S\n", ItemKind::AdministrativeRegister, {}),
               ParseError);
}

TEST(ParseInventory, BlankRowsAreSkippedWithWarning) {
  std::vector<Issue> warnings;
  const auto items =
      parse_inventory("nombre,tema,subtema\nA,T,S\n,,\nB,T,S\n", ItemKind::AdministrativeRegister, {}, "b.csv", &warnings);
  ASSERT_EQ(items.size(), 2u);
  EXPECT_EQ(items[1].id, "3");
  ASSERT_EQ(warnings.size(), 1u);
  EXPECT_EQ(warnings[0].locator, "b.csv:3");
}

TEST(ParseInventory, CellTextIsVerbatim) {
  const auto items =
      parse_inventory("nombre,tema,subtema\n\"  Créditos, VIS  \",T,S\n", ItemKind::AdministrativeRegister, {});
  EXPECT_EQ(items.at(0).name, "  Créditos, VIS  ");
}

TEST(ParseInventory, Deterministic) {
  const std::string text = fixtures::synthetic_csv(40, 8, 3, ItemKind::StatisticalOperation);
  EXPECT_EQ(parse_inventory(text, ItemKind::StatisticalOperation, {}),
            parse_inventory(text, ItemKind::StatisticalOperation, {}));
}

TEST(SchemaConfig, ParsesKeys) {
  const auto schema = SchemaConfig::parse("# mapping\nname = Nombre OE\nmacro_theme = Tema\nsub_theme =\n");
  EXPECT_EQ(schema.name_column, "Nombre OE");
  EXPECT_EQ(schema.macro_theme_column, "Tema");
  EXPECT_TRUE(schema.sub_theme_column.empty());
  EXPECT_THROW(SchemaConfig::parse("colour = red\n"), ParseError);
  EXPECT_THROW(SchemaConfig::parse("name =\n"), ParseError);
}

TEST(MergeInventories, ConcatenatesWithTagPrefixes) {
  const std::string header = "nombre,tema,subtema\n";
  auto rows = [&](int n) {
    std::string text = header;
    for (int i = 0; i < n; ++i) text += "n" + std::to_string(i) + ",t,s\n";
    return text;
  };
  std::vector<InventoryPart> parts;
  parts.push_back(load_inventory(rows(3), ItemKind::AdministrativeRegister, {}, "ra", "ra.csv"));
  parts.push_back(load_inventory(rows(2), ItemKind::AdministrativeRegister, {}, "rb", "rb.csv"));
  parts.push_back(load_inventory(rows(4), ItemKind::StatisticalOperation, {}, "op", "op.csv"));
  const Corpus corpus = merge_inventories(parts);
  EXPECT_EQ(corpus.items.size(), 9u);
  EXPECT_EQ(corpus.source_files.size(), 3u);
  EXPECT_EQ(corpus.items[0].id, "ra:1");
  EXPECT_EQ(corpus.items[8].id, "op:4");
  EXPECT_EQ(corpus.count(ItemKind::StatisticalOperation), 4u);
  EXPECT_EQ(corpus.source_files[2].row_count, 4u);
}

TEST(MergeInventories, EmptyPartAndSameFileTwice) {
  EXPECT_TRUE(merge_inventories({load_inventory("nombre,tema,subtema\n", ItemKind::AdministrativeRegister, {}, "e", "e")})
                  .items.empty());
  const std::string text = "nombre,tema,subtema\nA,T,S\n";
  const Corpus corpus = merge_inventories({load_inventory(text, ItemKind::AdministrativeRegister, {}, "a", "f.csv"),
                                           load_inventory(text, ItemKind::AdministrativeRegister, {}, "b", "f.csv")});
  ASSERT_EQ(corpus.items.size(), 2u);
  EXPECT_NE(corpus.items[0].id, corpus.items[1].id);
}

TEST(MergeInventories, DuplicateTagAndIdThrows) {
  const auto part = load_inventory("nombre,tema,subtema\nA,T,S\n", ItemKind::AdministrativeRegister, {}, "a", "f");
  EXPECT_THROW(merge_inventories({part, part}), InvalidArgument);
}

TEST(ValidateCorpus, F1IsClean) {
  const auto report = validate_corpus(fixtures::f1_corpus());
  EXPECT_TRUE(report.errors.empty());
  EXPECT_TRUE(report.warnings.empty());
  EXPECT_TRUE(report.usable());
}

TEST(ValidateCorpus, BlankSubThemeWarns) {
  Corpus corpus = fixtures::f1_corpus();
  corpus.items[0].sub_theme = "  ";
  const auto report = validate_corpus(corpus);
  EXPECT_EQ(report.warnings.size(), 1u);
  EXPECT_TRUE(report.errors.empty());
}

TEST(ValidateCorpus, ForgedDuplicateIdIsAnError) {
  Corpus corpus = fixtures::f1_corpus();
  corpus.items[2].id = corpus.items[0].id;
  const auto report = validate_corpus(corpus);
  EXPECT_EQ(report.errors.size(), 1u);
  EXPECT_FALSE(report.usable());
}

TEST(ValidateCorpus, DuplicateNamesAndEmptyNamesWarn) {
  Corpus corpus = fixtures::f1_corpus();
  corpus.items[1].name = corpus.items[0].name;
  corpus.items[2].name = "";
  const auto report = validate_corpus(corpus);
  EXPECT_EQ(report.warnings.size(), 2u);
}

TEST(CorpusJson, RoundTripsRandomCorpora) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const Corpus corpus = fixtures::random_corpus(seed);
    EXPECT_EQ(import_corpus_json(export_corpus_json(corpus)), corpus);
  }
}

TEST(ItemKind, Strings) {
  EXPECT_EQ(to_string(ItemKind::AdministrativeRegister), "register");
  EXPECT_EQ(item_kind_from_string("operation"), ItemKind::StatisticalOperation);
  EXPECT_THROW(item_kind_from_string("census"), InvalidArgument);
}
