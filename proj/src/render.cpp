#include "gravicat/render.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace gravicat {

namespace {

struct Cell {
  enum class Kind { text, integer, number };
  Kind kind = Kind::text;
  std::string text;
  long long integer = 0;
  double number = 0.0;
  const char* si_unit = nullptr;  // nullptr: dimensionless
};

Cell text_cell(std::string s) {
  Cell c;
  c.kind = Cell::Kind::text;
  c.text = std::move(s);
  return c;
}

Cell int_cell(long long v) {
  Cell c;
  c.kind = Cell::Kind::integer;
  c.integer = v;
  return c;
}

Cell num_cell(double v, const char* unit = nullptr) {
  Cell c;
  c.kind = Cell::Kind::number;
  c.number = v;
  c.si_unit = unit;
  return c;
}

struct ColumnDef {
  const char* name;       // machine key, unit suffix included
  const char* md_header;  // human header
  Cell (*get)(const FeasibilityReport&);
};

const ColumnDef kColumns[] = {
    {"id", "id", [](const FeasibilityReport& r) { return text_cell(r.id); }},
    {"f_m_hz", "f_m",
     [](const FeasibilityReport& r) { return num_cell(r.f_m_hz, "Hz"); }},
    {"mass_kg", "mass",
     [](const FeasibilityReport& r) { return num_cell(r.mass_kg, "kg"); }},
    {"q_factor", "Q",
     [](const FeasibilityReport& r) { return num_cell(r.q_factor); }},
    {"t_bath_k", "T_bath",
     [](const FeasibilityReport& r) { return num_cell(r.t_bath_k, "K"); }},
    {"material", "material",
     [](const FeasibilityReport& r) { return text_cell(r.material.str()); }},
    {"x_zpf_m", "x_zpf",
     [](const FeasibilityReport& r) { return num_cell(r.x_zpf, "m"); }},
    {"a_m", "a",
     [](const FeasibilityReport& r) { return num_cell(r.a, "m"); }},
    {"r_char_m", "R_char",
     [](const FeasibilityReport& r) { return num_cell(r.r_char, "m"); }},
    {"required_dx_m", "2R_char",
     [](const FeasibilityReport& r) {
       return num_cell(r.plan.required_dx, "m");
     }},
    {"dx_m", "dx",
     [](const FeasibilityReport& r) { return num_cell(r.plan.dx, "m"); }},
    {"n", "n_raw",
     [](const FeasibilityReport& r) { return int_cell(r.plan.n); }},
    {"n_label", "n",
     [](const FeasibilityReport& r) { return text_cell(r.plan.display()); }},
    {"n_th", "n_th",
     [](const FeasibilityReport& r) { return num_cell(r.n_th); }},
    {"t_coh_s", "t_coh",
     [](const FeasibilityReport& r) { return num_cell(r.t_coh, "s"); }},
    {"t_gr_s", "t_GR",
     [](const FeasibilityReport& r) { return num_cell(r.t_gr, "s"); }},
    {"ratio", "t_coh/t_GR",
     [](const FeasibilityReport& r) { return num_cell(r.ratio); }},
    {"verdict", "verdict",
     [](const FeasibilityReport& r) {
       return text_cell(std::string(to_string(r.verdict)));
     }},
    {"sep_margin", "sep_margin",
     [](const FeasibilityReport& r) {
       return num_cell(r.margins.lower_margin);
     }},
    {"coh_margin", "coh_margin",
     [](const FeasibilityReport& r) {
       return num_cell(r.margins.upper_margin);
     }},
    {"window", "window",
     [](const FeasibilityReport& r) {
       return text_cell(r.margins.window_exists ? "open" : "closed");
     }},
};

const ColumnDef* find_column(const std::string& name) {
  for (const ColumnDef& c : kColumns)
    if (name == c.name) return &c;
  return nullptr;
}

std::string two_significant(double m) {
  // m in [1, 1000); round to two significant digits.
  const int decade = static_cast<int>(std::floor(std::log10(m)));
  const double scale = std::pow(10.0, decade - 1);
  const double rounded = std::round(m / scale) * scale;
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.*f", decade >= 1 ? 0 : 1, rounded);
  std::string s = buf;
  if (s.size() > 2 && s.ends_with(".0")) s.resize(s.size() - 2);
  return s;
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string md_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '|') out += '\\';
    out += c;
  }
  return out;
}

std::string short_unitless(double v) {
  if (std::isinf(v)) return "inf";
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2g", v);
  return buf;
}

std::string md_cell(const Cell& c) {
  switch (c.kind) {
    case Cell::Kind::text: return md_escape(c.text);
    case Cell::Kind::integer: return std::to_string(c.integer);
    case Cell::Kind::number:
      return c.si_unit ? format_si(c.number, c.si_unit)
                       : short_unitless(c.number);
  }
  return {};
}

std::string machine_cell(const Cell& c) {
  switch (c.kind) {
    case Cell::Kind::text: return c.text;
    case Cell::Kind::integer: return std::to_string(c.integer);
    case Cell::Kind::number: return format_raw(c.number);
  }
  return {};
}

}  // namespace

Format parse_format(std::string_view text) {
  if (text == "md" || text == "markdown") return Format::markdown;
  if (text == "csv") return Format::csv;
  if (text == "json") return Format::json;
  throw std::invalid_argument("unknown format '" + std::string(text) +
                              "' (expected md, csv or json)");
}

const std::vector<std::string>& known_columns() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const ColumnDef& c : kColumns) v.emplace_back(c.name);
    return v;
  }();
  return names;
}

const std::vector<std::string>& default_columns() {
  static const std::vector<std::string> names = {
      "id",  "f_m_hz", "mass_kg", "q_factor", "t_bath_k", "x_zpf_m",
      "n_label", "n_th",   "t_coh_s", "t_gr_s",   "ratio",    "verdict"};
  return names;
}

void RenderSpec::validate() const {
  std::string unknown;
  for (const std::string& name : columns)
    if (!find_column(name)) unknown += (unknown.empty() ? "" : ", ") + name;
  if (!unknown.empty())
    throw std::invalid_argument("unknown column name(s): " + unknown);
}

std::string format_raw(double value) {
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  if (std::isnan(value)) return "nan";
  char buf[32];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, ptr);
}

std::string format_si(double value, std::string_view unit) {
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  if (std::isnan(value)) return "nan";

  std::string base{unit};
  if (unit == "kg") {  // prefix against grams
    value *= 1e3;
    base = "g";
  }
  if (value == 0.0) return "0 " + base;

  const char* sign = value < 0 ? "-" : "";
  double mag = std::abs(value);

  static const char* kPrefixes[] = {"y", "z", "a", "f", "p", "n", "µ", "m",
                                    "",  "k", "M", "G", "T", "P", "E"};
  int idx = static_cast<int>(std::floor(std::log10(mag) / 3.0));
  idx = std::clamp(idx, -8, 6);
  double mantissa = mag / std::pow(1000.0, idx);
  // Rounding may push the mantissa to 1000; bump the prefix.
  if (mantissa >= 999.5 && idx < 6) {
    ++idx;
    mantissa /= 1000.0;
  }
  return sign + two_significant(mantissa) + " " + kPrefixes[idx + 8] + base;
}

std::string render_reports(const std::vector<FeasibilityReport>& reports,
                           const RenderSpec& spec) {
  spec.validate();
  const std::vector<std::string>& names =
      spec.columns.empty() ? default_columns() : spec.columns;
  std::vector<const ColumnDef*> cols;
  cols.reserve(names.size());
  for (const std::string& n : names) cols.push_back(find_column(n));

  if (spec.format == Format::json) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const FeasibilityReport& r : reports) {
      nlohmann::ordered_json row;
      for (const ColumnDef* c : cols) {
        const Cell cell = c->get(r);
        switch (cell.kind) {
          case Cell::Kind::text: row[c->name] = cell.text; break;
          case Cell::Kind::integer: row[c->name] = cell.integer; break;
          case Cell::Kind::number:
            if (std::isfinite(cell.number))
              row[c->name] = cell.number;
            else
              row[c->name] = format_raw(cell.number);
            break;
        }
      }
      rows.push_back(std::move(row));
    }
    return rows.dump(2) + "\n";
  }

  if (spec.format == Format::csv) {
    std::string out;
    for (std::size_t i = 0; i < cols.size(); ++i)
      out += std::string(i ? "," : "") + cols[i]->name;
    out += "\n";
    for (const FeasibilityReport& r : reports) {
      for (std::size_t i = 0; i < cols.size(); ++i)
        out += (i ? "," : "") + csv_escape(machine_cell(cols[i]->get(r)));
      out += "\n";
    }
    return out;
  }

  // Markdown: pad cells for readability.
  std::vector<std::vector<std::string>> grid;
  grid.emplace_back();
  for (const ColumnDef* c : cols) grid.back().emplace_back(c->md_header);
  for (const FeasibilityReport& r : reports) {
    grid.emplace_back();
    for (const ColumnDef* c : cols) grid.back().push_back(md_cell(c->get(r)));
  }
  std::vector<std::size_t> width(cols.size(), 0);
  for (const auto& row : grid)
    for (std::size_t i = 0; i < row.size(); ++i)
      width[i] = std::max(width[i], row[i].size());

  std::ostringstream out;
  auto emit = [&](const std::vector<std::string>& row) {
    out << "|";
    for (std::size_t i = 0; i < row.size(); ++i)
      out << " " << row[i] << std::string(width[i] - row[i].size(), ' ')
          << " |";
    out << "\n";
  };
  emit(grid[0]);
  out << "|";
  for (std::size_t i = 0; i < cols.size(); ++i)
    out << std::string(width[i] + 2, '-') << "|";
  out << "\n";
  for (std::size_t i = 1; i < grid.size(); ++i) emit(grid[i]);
  return out.str();
}

}  // namespace gravicat
