#include "fixtures.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "atlas/csv.hpp"
#include "atlas/random.hpp"

namespace atlas::fixtures {

namespace {

InventoryItem make_item(std::string id, std::string name, ItemKind kind, std::string macro, std::string sub,
                        std::string objective) {
  InventoryItem item;
  item.id = std::move(id);
  item.name = std::move(name);
  item.kind = kind;
  item.macro_theme = std::move(macro);
  item.sub_theme = std::move(sub);
  item.metadata = {{"objetivo", std::move(objective)}};
  return item;
}

std::size_t pick(SplitMix64& rng, std::size_t n) { return static_cast<std::size_t>(rng.next() % n); }

const std::vector<std::string>& random_vocabulary() {
  static const std::vector<std::string> words = {
      "salud", "Salud", "SALUD", "vivienda", "créditos", "creditos", "Créditos", "financiación", "niñez", "NIÑEZ",
      "educación", "educacion", "agua", "empleo", "pobreza", "censo", "año", "años", "de", "la", "los", "del",
      "para", "registro", "Registros", "operación", "estadística", "información", "nacional", "datos", "ab", "xy",
      "no", "2020", "covid19", "ipc", "über", "pingüino", "e", "y", "Bogotá", "ÁREA", "área", "café", "acción"};
  return words;
}

const std::vector<std::string>& separators() {
  static const std::vector<std::string> seps = {" ", ", ", ". ", "-", "/", " (", ") ", ";\n", "  ", " \"", "\" "};
  return seps;
}

std::string random_text(SplitMix64& rng, std::size_t max_words) {
  const auto& words = random_vocabulary();
  const auto& seps = separators();
  std::string text;
  const std::size_t n = pick(rng, max_words + 1);
  for (std::size_t i = 0; i < n; ++i) {
    if (i > 0) text += seps[pick(rng, seps.size())];
    text += words[pick(rng, words.size())];
  }
  return text;
}

struct SyntheticRow {
  std::string name;
  std::string objective;
  std::string macro;
  std::string sub;
  std::string entity;
  ItemKind kind;
};

SyntheticRow synthetic_row(std::size_t index, std::size_t topics, SplitMix64& rng) {
  const auto& words = topic_words();
  const std::size_t main = index % topics;
  std::size_t second = pick(rng, topics - 1);
  if (second >= main) ++second;
  const std::size_t repeats = 1 + pick(rng, 3);

  SyntheticRow row;
  row.name = "Registro de " + words[main];
  for (std::size_t r = 0; r < repeats; ++r) row.objective += (r == 0 ? "" : " y ") + words[main];
  row.objective += " de " + words[second];
  row.macro = "Tema " + std::to_string(main / 5 + 1);
  row.sub = "Subtema " + words[main];
  row.entity = "E" + std::to_string(pick(rng, 9) + 1);
  row.kind = pick(rng, 2) == 0 ? ItemKind::AdministrativeRegister : ItemKind::StatisticalOperation;
  return row;
}

}  // namespace

Corpus f1_corpus() {
  Corpus corpus;
  corpus.items.push_back(make_item("I1", "Registro de créditos de vivienda", ItemKind::AdministrativeRegister,
                                   "Económica", "Moneda banca y finanzas",
                                   "créditos para vivienda y financiación de vivienda"));
  corpus.items.push_back(make_item("I2", "Encuesta de salud", ItemKind::StatisticalOperation, "Social", "Salud",
                                   "servicios de salud y cobertura de salud"));
  corpus.items.push_back(make_item("I3", "Registro de servicios de salud", ItemKind::AdministrativeRegister, "Social",
                                   "Salud", "prestación de servicios de salud"));
  corpus.source_files = {{"f1", "<f1>", ItemKind::AdministrativeRegister, 3}};
  corpus.schema = {"nombre", "objetivo", "tema", "subtema"};
  return corpus;
}

DerivationConfig f1_config(std::size_t threshold) {
  DerivationConfig config = DerivationConfig::defaults();
  config.exclusion_list.insert("encuesta");
  config.threshold_x = threshold;
  return config;
}

Corpus random_corpus(std::uint64_t seed, std::size_t max_items, std::size_t max_fields) {
  SplitMix64 rng(seed);
  Corpus corpus;
  const std::size_t items = pick(rng, max_items + 1);
  const std::size_t fields = 1 + pick(rng, max_fields);
  corpus.schema = {"nombre", "tema", "subtema"};
  for (std::size_t f = 1; f < fields; ++f) corpus.schema.push_back("c" + std::to_string(f));
  for (std::size_t i = 0; i < items; ++i) {
    InventoryItem item;
    item.id = "R" + std::to_string(i + 1);
    item.name = random_text(rng, 8);
    item.kind = pick(rng, 2) == 0 ? ItemKind::AdministrativeRegister : ItemKind::StatisticalOperation;
    item.macro_theme = random_text(rng, 3);
    item.sub_theme = random_text(rng, 3);
    for (std::size_t f = 1; f < fields; ++f) item.metadata.emplace_back("c" + std::to_string(f), random_text(rng, 12));
    corpus.items.push_back(std::move(item));
  }
  return corpus;
}

const std::vector<std::string>& topic_words() {
  static const std::vector<std::string> words = {
      "salud",       "vivienda",   "educacion",     "empleo",        "pobreza",   "agua",       "energia",
      "transporte",  "mineria",    "agricultura",   "comercio",      "turismo",   "justicia",   "seguridad",
      "cultura",     "deporte",    "ambiente",      "clima",         "industria", "vias",       "precios",
      "moneda",      "credito",    "leasing",       "exportaciones", "importaciones", "poblacion", "migracion",
      "victimas",    "nutricion",  "vacunacion",    "hospitales",    "colegios",  "docentes",   "cosechas",
      "ganado",      "bosques",    "residuos",      "telefonia",     "internet"};
  return words;
}

Corpus synthetic_corpus(std::size_t items, std::size_t topics, std::uint64_t seed) {
  if (topics < 2 || topics > topic_words().size()) throw std::invalid_argument("topics out of range");
  SplitMix64 rng(seed);
  Corpus corpus;
  corpus.schema = {"nombre", "objetivo", "tema", "subtema", "entidad"};
  for (std::size_t i = 0; i < items; ++i) {
    SyntheticRow row = synthetic_row(i, topics, rng);
    InventoryItem item;
    item.id = "S" + std::to_string(i + 1);
    item.name = std::move(row.name);
    item.kind = row.kind;
    item.macro_theme = std::move(row.macro);
    item.sub_theme = std::move(row.sub);
    item.metadata = {{"objetivo", std::move(row.objective)}, {"entidad", std::move(row.entity)}};
    corpus.items.push_back(std::move(item));
  }
  return corpus;
}

std::string synthetic_csv(std::size_t rows, std::size_t topics, std::uint64_t seed, ItemKind kind) {
  SplitMix64 rng(seed);
  std::string out = "nombre,objetivo,tema,subtema,entidad\r\n";
  for (std::size_t i = 0; i < rows; ++i) {
    SyntheticRow row = synthetic_row(i, topics, rng);
    // Vary the quoting so the reader sees embedded commas and quotes.
    if (kind == ItemKind::StatisticalOperation) row.name = "Encuesta \"" + row.name + "\", anual";
    for (const auto* field : {&row.name, &row.objective, &row.macro, &row.sub, &row.entity}) {
      if (field != &row.name) out += ',';
      out += csv::escape_field(*field);
    }
    out += "\r\n";
  }
  return out;
}

std::vector<std::string> oracle_tokens(std::string_view text) {
  // Two-byte UTF-8 sequences of the accented letters the generators use.
  static const std::map<std::string, char> accented = {
      {"á", 'a'}, {"é", 'e'}, {"í", 'i'}, {"ó", 'o'}, {"ú", 'u'}, {"ü", 'u'}, {"ñ", 'n'}, {"Á", 'a'},
      {"É", 'e'}, {"Í", 'i'}, {"Ó", 'o'}, {"Ú", 'u'}, {"Ü", 'u'}, {"Ñ", 'n'}, {"à", 'a'}, {"è", 'e'},
      {"ò", 'o'}, {"â", 'a'}, {"ê", 'e'}, {"ô", 'o'}, {"ç", 'c'}, {"Ç", 'c'}};
  std::vector<std::string> tokens;
  std::string current;
  auto flush = [&] {
    if (!current.empty()) tokens.push_back(current);
    current.clear();
  };
  for (std::size_t i = 0; i < text.size();) {
    const unsigned char c = static_cast<unsigned char>(text[i]);
    if (c < 0x80) {
      if (std::isalnum(c)) {
        current += static_cast<char>(std::tolower(c));
      } else {
        flush();
      }
      ++i;
      continue;
    }
    if (i + 1 < text.size()) {
      const auto it = accented.find(std::string(text.substr(i, 2)));
      if (it != accented.end()) {
        current += it->second;
        i += 2;
        continue;
      }
    }
    throw std::runtime_error("oracle_tokens: unexpected byte sequence");
  }
  flush();
  return tokens;
}

std::map<std::string, std::size_t> oracle_item_counts(const InventoryItem& item, const std::set<std::string>& excluded,
                                                      std::size_t min_length) {
  std::map<std::string, std::size_t> counts;
  std::vector<std::string_view> fields{item.name};
  for (const auto& [column, value] : item.metadata) fields.push_back(value);
  for (const auto field : fields) {
    for (const auto& token : oracle_tokens(field)) {
      if (token.size() < min_length || excluded.count(token) > 0) continue;
      ++counts[token];
    }
  }
  return counts;
}

std::map<std::string, std::size_t> oracle_dictionary(const Corpus& corpus, const std::set<std::string>& excluded,
                                                     std::size_t min_length, std::size_t threshold) {
  std::map<std::string, std::size_t> totals;
  for (const auto& item : corpus.items) {
    for (const auto& [term, n] : oracle_item_counts(item, excluded, min_length)) totals[term] += n;
  }
  std::erase_if(totals, [&](const auto& entry) { return entry.second <= threshold; });
  return totals;
}

namespace {

double worst(const std::vector<double>& row, double side) {
  if (row.empty()) return std::numeric_limits<double>::infinity();
  const double s = std::accumulate(row.begin(), row.end(), 0.0);
  double w = 0.0;
  for (double r : row) w = std::max({w, side * side * r / (s * s), s * s / (side * side * r)});
  return w;
}

void layout_row(const std::vector<std::pair<std::size_t, double>>& row, Rect& free, std::vector<Rect>& out) {
  double s = 0.0;
  for (const auto& [index, area] : row) s += area;
  if (free.width >= free.height) {
    const double w = s / free.height;
    double y = free.y;
    for (const auto& [index, area] : row) {
      out[index] = {free.x, y, w, area / w};
      y += area / w;
    }
    free = {free.x + w, free.y, free.width - w, free.height};
  } else {
    const double h = s / free.width;
    double x = free.x;
    for (const auto& [index, area] : row) {
      out[index] = {x, free.y, area / h, h};
      x += area / h;
    }
    free = {free.x, free.y + h, free.width, free.height - h};
  }
}

void squarify_rec(std::vector<std::pair<std::size_t, double>> children, std::vector<std::pair<std::size_t, double>> row,
                  Rect& free, std::vector<Rect>& out) {
  if (children.empty()) {
    layout_row(row, free, out);
    return;
  }
  const double side = std::min(free.width, free.height);
  std::vector<double> current;
  for (const auto& entry : row) current.push_back(entry.second);
  std::vector<double> extended = current;
  extended.push_back(children.front().second);
  if (row.empty() || worst(extended, side) <= worst(current, side)) {
    row.push_back(children.front());
    children.erase(children.begin());
    squarify_rec(std::move(children), std::move(row), free, out);
  } else {
    layout_row(row, free, out);
    squarify_rec(std::move(children), {}, free, out);
  }
}

}  // namespace

std::vector<Rect> oracle_squarify(const std::vector<double>& weights, const Rect& rect) {
  const double total = std::accumulate(weights.begin(), weights.end(), 0.0);
  std::vector<std::pair<std::size_t, double>> children;
  for (std::size_t i = 0; i < weights.size(); ++i) children.emplace_back(i, weights[i] / total * rect.area());
  std::stable_sort(children.begin(), children.end(), [](const auto& a, const auto& b) { return a.second > b.second; });
  std::vector<Rect> out(weights.size());
  Rect free = rect;
  squarify_rec(std::move(children), {}, free, out);
  return out;
}

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

}  // namespace atlas::fixtures
