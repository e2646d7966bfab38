#include "basicfn/report.hpp"

#include <algorithm>

#include "basicfn/errors.hpp"

namespace basicfn {

Format parse_format(const std::string& s) {
  if (s == "text") return Format::Text;
  if (s == "json") return Format::Json;
  if (s == "csv") return Format::Csv;
  fail(ErrorKind::InvalidInput, "unknown format '" + s + "'");
}

Json weight_json(const Weight& w) {
  Json a = Json::array();
  for (auto x : w.coords) a.push_back(x);
  return a;
}

Json laurent_json(const LaurentV& p) {
  Json a = Json::array();
  for (const auto& [e, c] : p.terms()) a.push_back(Json::array({e, c.get_str()}));
  return a;
}

Field weight_field(const std::string& key, const std::string& label, const Weight& w) {
  return {key, label, weight_json(w), w.to_string()};
}

Field int_field(const std::string& key, const std::string& label, long long v) {
  return {key, label, v, std::to_string(v)};
}

Field integer_field(const std::string& key, const std::string& label, const Integer& v) {
  // Small values stay JSON numbers; large ones become decimal strings.
  Json j = v.fits_slong_p() ? Json(v.get_si()) : Json(v.get_str());
  return {key, label, j, v.get_str()};
}

Field rational_field(const std::string& key, const std::string& label, const Rational& v) {
  return {key, label, to_string(v), to_string(v)};
}

Field poly_field(const std::string& key, const std::string& label, const LaurentV& p) {
  return {key, label, p.to_string(), p.to_string()};
}

Field text_field(const std::string& key, const std::string& label, const std::string& s) {
  return {key, label, s, s};
}

Field bool_field(const std::string& key, const std::string& label, bool b) {
  return {key, label, b, b ? "true" : "false"};
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

namespace {

void emit_text(const Report& r, std::ostream& out) {
  std::vector<std::vector<std::string>> cells;
  std::vector<std::size_t> width;
  for (const auto& row : r.rows) {
    std::vector<std::string> line;
    for (const auto& f : row)
      if (!f.label.empty()) line.push_back(f.label + "=" + f.text);
    if (width.size() < line.size()) width.resize(line.size(), 0);
    for (std::size_t i = 0; i < line.size(); ++i) width[i] = std::max(width[i], line[i].size());
    cells.push_back(std::move(line));
  }
  for (const auto& line : cells) {
    std::string s;
    for (std::size_t i = 0; i < line.size(); ++i) {
      if (i > 0) s += ' ';
      s += line[i];
      if (i + 1 < line.size()) s.append(width[i] - line[i].size(), ' ');
    }
    out << s << '\n';
  }
  for (const auto& n : r.notes) out << n << '\n';
}

void emit_json(const Report& r, std::ostream& out) {
  Json j;
  j["schema_version"] = 1;
  j["kind"] = r.kind;
  for (const auto& [k, v] : r.header.items()) j[k] = v;
  Json rows = Json::array();
  for (const auto& row : r.rows) {
    Json o = Json::object();
    for (const auto& f : row) o[f.key] = f.value;
    rows.push_back(std::move(o));
  }
  j[r.rows_key] = std::move(rows);
  out << j.dump(2) << '\n';
}

void emit_csv(const Report& r, std::ostream& out) {
  std::vector<std::string> keys;
  if (!r.rows.empty()) {
    for (const auto& f : r.rows.front()) keys.push_back(f.key);
  } else {
    keys = r.columns;
  }
  for (std::size_t i = 0; i < keys.size(); ++i) out << (i ? "," : "") << csv_escape(keys[i]);
  out << '\n';
  for (const auto& row : r.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << csv_escape(row[i].text);
    out << '\n';
  }
}

}  // namespace

void emit_report(const Report& r, Format f, std::ostream& out) {
  switch (f) {
    case Format::Text:
      emit_text(r, out);
      break;
    case Format::Json:
      emit_json(r, out);
      break;
    case Format::Csv:
      emit_csv(r, out);
      break;
  }
}

}  // namespace basicfn
