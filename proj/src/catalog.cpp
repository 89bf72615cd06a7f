#include "gravicat/catalog.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace gravicat {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
    s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' ||
                        s.back() == '\r'))
    s.remove_suffix(1);
  return s;
}

[[noreturn]] void fail(std::size_t line, const std::string& msg) {
  throw catalog_error("catalog line " + std::to_string(line) + ": " + msg);
}

double parse_number(std::string_view text, std::size_t line,
                    const std::string& key) {
  double value = 0.0;
  const char* begin = text.data();
  const char* end = begin + text.size();
  const auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc{} || ptr != end)
    fail(line, "field '" + key + "': cannot parse number '" +
                   std::string(text) + "'");
  return value;
}

std::string format_number(double v) {
  char buf[32];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ptr);
}

struct RawField {
  std::string value;
  std::size_t line;
};

CatalogEntry build_entry(const std::map<std::string, RawField>& fields,
                         std::size_t record_line) {
  static const std::set<std::string> known = {
      "id",       "label",    "f_m_hz", "mass_kg",
      "q_factor", "material", "t_bath_k", "notes"};
  for (const auto& [key, raw] : fields)
    if (!known.count(key)) fail(raw.line, "unknown key '" + key + "'");

  auto required = [&](const char* key) -> const RawField& {
    const auto it = fields.find(key);
    if (it == fields.end())
      fail(record_line, std::string("record is missing required key '") +
                            key + "'");
    return it->second;
  };
  auto positive = [&](const char* key) {
    const RawField& raw = required(key);
    const double v = parse_number(raw.value, raw.line, key);
    if (!(v > 0.0) || !std::isfinite(v))
      fail(raw.line, std::string("field '") + key + "' must be positive");
    return v;
  };

  CatalogEntry entry;
  entry.id = required("id").value;
  entry.label = required("label").value;
  entry.f_m_hz = positive("f_m_hz");
  entry.mass_kg = positive("mass_kg");
  entry.q_factor = positive("q_factor");
  {
    const RawField& raw = required("material");
    try {
      entry.material = Material::parse(raw.value);
    } catch (const catalog_error& e) {
      fail(raw.line, e.what());
    }
  }
  if (const auto it = fields.find("t_bath_k"); it != fields.end()) {
    entry.t_bath_k = parse_number(it->second.value, it->second.line,
                                  "t_bath_k");
    if (!(entry.t_bath_k > 0.0) || !std::isfinite(entry.t_bath_k))
      fail(it->second.line, "field 't_bath_k' must be positive");
  }
  if (const auto it = fields.find("notes"); it != fields.end())
    entry.notes = it->second.value;
  return entry;
}

}  // namespace

Material Material::other(int A) {
  if (A < 1) throw catalog_error("material mass number must be >= 1");
  return {Kind::Other, A};
}

Material Material::parse(std::string_view text) {
  text = trim(text);
  if (text == "Si") return si();
  if (text == "Al") return al();
  if (text == "SiN") return sin();
  if (text.starts_with("other:")) {
    const std::string_view num = text.substr(6);
    int a = 0;
    const auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), a);
    if (ec != std::errc{} || ptr != num.data() + num.size() || a < 1)
      throw catalog_error("bad material mass number '" + std::string(num) +
                          "'");
    return other(a);
  }
  throw catalog_error("unknown material '" + std::string(text) +
                      "' (expected Si, Al, SiN or other:<A>)");
}

std::string Material::str() const {
  switch (kind_) {
    case Kind::Si: return "Si";
    case Kind::Al: return "Al";
    case Kind::SiN: return "SiN";
    case Kind::Other: return "other:" + std::to_string(mass_number_);
  }
  return {};
}

RModel RModel::fixed(double R) {
  if (!(R > 0.0) || !std::isfinite(R))
    throw std::invalid_argument("fixed R model requires a positive length");
  return {Kind::fixed, R};
}

RModel RModel::parse(std::string_view text) {
  text = trim(text);
  if (text == "nucleus") return nucleus();
  if (text == "zpf") return zpf_wavepacket();
  if (text.starts_with("fixed:")) {
    const std::string_view num = text.substr(6);
    double r = 0.0;
    const auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), r);
    if (ec != std::errc{} || ptr != num.data() + num.size())
      throw std::invalid_argument("bad fixed R value '" + std::string(num) +
                                  "'");
    return fixed(r);
  }
  throw std::invalid_argument("unknown R model '" + std::string(text) +
                              "' (expected nucleus, zpf or fixed:<meters>)");
}

std::string RModel::str() const {
  switch (kind_) {
    case Kind::nucleus: return "nucleus";
    case Kind::zpf_wavepacket: return "zpf";
    case Kind::fixed: return "fixed:" + format_number(fixed_R_);
  }
  return {};
}

std::vector<CatalogEntry> load_catalog(std::string_view text) {
  std::vector<CatalogEntry> entries;
  std::set<std::string> seen_ids;

  std::map<std::string, RawField> fields;
  std::size_t record_line = 0;

  auto flush = [&] {
    if (fields.empty()) return;
    CatalogEntry entry = build_entry(fields, record_line);
    if (!seen_ids.insert(entry.id).second)
      fail(record_line, "duplicate id '" + entry.id + "'");
    entries.push_back(std::move(entry));
    fields.clear();
    record_line = 0;
  };

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t nl = text.find('\n', pos);
    const std::string_view raw_line =
        text.substr(pos, nl == std::string_view::npos ? text.size() - pos
                                                      : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;

    const std::string_view line = trim(raw_line);
    if (line.empty()) {
      flush();
      continue;
    }
    if (line.front() == '#') continue;

    const std::size_t colon = line.find(':');
    if (colon == std::string_view::npos)
      fail(line_no, "expected 'key: value', got '" + std::string(line) + "'");
    const std::string key{trim(line.substr(0, colon))};
    const std::string value{trim(line.substr(colon + 1))};
    if (fields.count(key)) fail(line_no, "duplicate key '" + key + "'");
    if (fields.empty()) record_line = line_no;
    fields[key] = {value, line_no};
  }
  flush();
  return entries;
}

std::vector<CatalogEntry> load_catalog_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw catalog_error("cannot open catalog file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return load_catalog(buf.str());
}

std::string serialize_catalog(const std::vector<CatalogEntry>& entries) {
  std::string out;
  bool first = true;
  for (const CatalogEntry& e : entries) {
    if (!first) out += "\n";
    first = false;
    out += "id: " + e.id + "\n";
    out += "label: " + e.label + "\n";
    out += "f_m_hz: " + format_number(e.f_m_hz) + "\n";
    out += "mass_kg: " + format_number(e.mass_kg) + "\n";
    out += "q_factor: " + format_number(e.q_factor) + "\n";
    out += "material: " + e.material.str() + "\n";
    out += "t_bath_k: " + format_number(e.t_bath_k) + "\n";
    if (!e.notes.empty()) out += "notes: " + e.notes + "\n";
  }
  return out;
}

double characteristic_size(const CatalogEntry& entry, const RModel& model) {
  switch (model.kind()) {
    case RModel::Kind::nucleus:
      return entry.nucleus().a;
    case RModel::Kind::zpf_wavepacket:
      return zero_point_fluctuation(entry.mode());
    case RModel::Kind::fixed:
      return model.fixed_R();
  }
  throw std::logic_error("unreachable R model kind");
}

}  // namespace gravicat
