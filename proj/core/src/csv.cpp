#include "atlas/csv.hpp"

#include "atlas/error.hpp"

namespace atlas::csv {

std::vector<Record> read_records(std::string_view text, std::string_view source) {
  if (text.starts_with("\xEF\xBB\xBF")) text.remove_prefix(3);

  std::vector<Record> records;
  Record current;
  std::string field;
  std::size_t line = 1;
  current.line = line;

  enum class State { FieldStart, Unquoted, Quoted, QuoteInQuoted };
  State state = State::FieldStart;

  auto end_field = [&] {
    current.fields.push_back(std::move(field));
    field.clear();
  };
  auto end_record = [&] {
    end_field();
    records.push_back(std::move(current));
    current = Record{};
    current.line = line;
  };

  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    switch (state) {
      case State::FieldStart:
      case State::Unquoted:
        if (c == '"') {
          if (state == State::Unquoted) {
            throw ParseError(std::string(source), line, "unexpected quote inside unquoted field");
          }
          state = State::Quoted;
        } else if (c == ',') {
          end_field();
          state = State::FieldStart;
        } else if (c == '\r' || c == '\n') {
          if (c == '\r' && i + 1 < text.size() && text[i + 1] == '\n') ++i;
          ++line;
          end_record();
          state = State::FieldStart;
        } else {
          field.push_back(c);
          state = State::Unquoted;
        }
        break;
      case State::Quoted:
        if (c == '"') {
          state = State::QuoteInQuoted;
        } else {
          if (c == '\n') ++line;
          field.push_back(c);
        }
        break;
      case State::QuoteInQuoted:
        if (c == '"') {
          field.push_back('"');
          state = State::Quoted;
        } else if (c == ',') {
          end_field();
          state = State::FieldStart;
        } else if (c == '\r' || c == '\n') {
          if (c == '\r' && i + 1 < text.size() && text[i + 1] == '\n') ++i;
          ++line;
          end_record();
          state = State::FieldStart;
        } else {
          throw ParseError(std::string(source), current.line,
                           "unexpected character after closing quote");
        }
        break;
    }
  }

  if (state == State::Quoted) {
    throw ParseError(std::string(source), current.line, "unterminated quoted field");
  }
  // A final record without a trailing newline.
  if (state != State::FieldStart || !current.fields.empty()) end_record();
  return records;
}

std::string escape_field(std::string_view field) {
  if (field.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(field);
  std::string out;
  out.reserve(field.size() + 2);
  out.push_back('"');
  for (char c : field) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

}  // namespace atlas::csv
