#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "gravicat/physics.hpp"

// Oscillator catalog: the data model for candidate mechanical systems,
// a line-oriented text format for loading user catalogs, and the
// built-in catalog of ten reference systems.
//
// File format: one record per oscillator, records separated by blank
// lines, one `key: value` field per line, `#` starts a comment line.
// Required keys: id, label, f_m_hz, mass_kg, q_factor, material.
// Optional keys: t_bath_k (default 0.01), notes.
// material is one of Si, Al, SiN, other:<A>. Scientific notation is
// accepted for all numbers.

namespace gravicat {

struct catalog_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Oscillator material, reduced to the mass number of its dominant
/// nucleus: Si -> 28, Al -> 27. Silicon-nitride devices are modeled
/// with the silicon nucleus; anything else carries an explicit A.
class Material {
 public:
  enum class Kind { Si, Al, SiN, Other };

  static Material si() { return {Kind::Si, 28}; }
  static Material al() { return {Kind::Al, 27}; }
  static Material sin() { return {Kind::SiN, 28}; }
  static Material other(int A);

  static Material parse(std::string_view text);
  std::string str() const;

  Kind kind() const { return kind_; }
  int mass_number() const { return mass_number_; }

  friend bool operator==(const Material&, const Material&) = default;

 private:
  Material(Kind kind, int A) : kind_(kind), mass_number_(A) {}
  Kind kind_;
  int mass_number_;
};

struct CatalogEntry {
  std::string id;
  std::string label;
  double f_m_hz = 0.0;
  double mass_kg = 0.0;
  double q_factor = 0.0;
  double t_bath_k = 0.01;  // dilution-refrigerator default
  Material material = Material::si();
  std::string notes;

  OscillatorMode mode() const {
    return OscillatorMode(f_m_hz, mass_kg, q_factor, t_bath_k);
  }
  NucleusModel nucleus() const { return nucleus_model(material.mass_number()); }

  friend bool operator==(const CatalogEntry&, const CatalogEntry&) = default;
};

/// Choice of the characteristic size R of the object in superposition:
/// the nucleus radius a(A), the ground-state wavepacket extent x_zpf,
/// or an explicit fixed length.
class RModel {
 public:
  enum class Kind { nucleus, zpf_wavepacket, fixed };

  static RModel nucleus() { return {Kind::nucleus, 0.0}; }
  static RModel zpf_wavepacket() { return {Kind::zpf_wavepacket, 0.0}; }
  static RModel fixed(double R);

  /// Accepts "nucleus", "zpf", or "fixed:<meters>".
  static RModel parse(std::string_view text);
  std::string str() const;

  Kind kind() const { return kind_; }
  double fixed_R() const { return fixed_R_; }

 private:
  RModel(Kind kind, double R) : kind_(kind), fixed_R_(R) {}
  Kind kind_;
  double fixed_R_;
};

/// Parses a catalog document. Throws catalog_error with a line-numbered
/// message on schema violations, bad numbers, nonpositive values or
/// duplicate ids. An empty document yields an empty catalog.
std::vector<CatalogEntry> load_catalog(std::string_view text);

std::vector<CatalogEntry> load_catalog_file(const std::string& path);

/// Canonical serialization: fixed key order, shortest round-trip number
/// spelling, one blank line between records. load(serialize(x)) == x.
std::string serialize_catalog(const std::vector<CatalogEntry>& entries);

/// The ten built-in reference systems, in catalog order.
const std::vector<CatalogEntry>& builtin_catalog();
std::string_view builtin_catalog_text();

/// Characteristic size R of the entry under the given model.
double characteristic_size(const CatalogEntry& entry, const RModel& model);

}  // namespace gravicat
