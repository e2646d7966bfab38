#pragma once

#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "basicfn/laurent.hpp"
#include "basicfn/weight.hpp"

namespace basicfn {

using Json = nlohmann::ordered_json;

enum class Format { Text, Json, Csv };

/// Parses "text", "json" or "csv"; throws InvalidInput otherwise.
Format parse_format(const std::string& s);

/// One cell of a report row. `label` is the text-mode key; an empty
/// label hides the cell in text mode.
struct Field {
  std::string key;
  std::string label;
  Json value;
  std::string text;
};

using Row = std::vector<Field>;

/// A report: header fields, rows, and free-form trailing lines for text.
struct Report {
  std::string kind;
  Json header = Json::object();
  std::vector<Row> rows;
  std::string rows_key = "rows";
  /// CSV header used when there are no rows.
  std::vector<std::string> columns;
  std::vector<std::string> notes;
};

Field weight_field(const std::string& key, const std::string& label, const Weight& w);
Field int_field(const std::string& key, const std::string& label, long long v);
Field integer_field(const std::string& key, const std::string& label, const Integer& v);
Field rational_field(const std::string& key, const std::string& label, const Rational& v);
Field poly_field(const std::string& key, const std::string& label, const LaurentV& p);
Field text_field(const std::string& key, const std::string& label, const std::string& s);
Field bool_field(const std::string& key, const std::string& label, bool b);

Json weight_json(const Weight& w);
/// [[exponent of v, "coefficient"], ...]
Json laurent_json(const LaurentV& p);

std::string csv_escape(const std::string& s);

/// Text: aligned key=value columns per row, then notes.
/// JSON: {"schema_version":1,"kind":...,<header>,"rows":[...]}.
/// CSV: header line of keys and one line per row.
void emit_report(const Report& r, Format f, std::ostream& out);

}  // namespace basicfn
