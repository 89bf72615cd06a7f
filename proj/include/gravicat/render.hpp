#pragma once

#include <string>
#include <vector>

#include "gravicat/feasibility.hpp"

// Report renderers. Markdown is the human format: values carry
// SI-prefixed units (fm, ng, ms, ...) at two significant digits. csv and
// json are machine formats: raw SI floats in shortest round-trip
// spelling, headers carrying the unit suffix, and the literal token
// "inf" for unbounded times. Machine output is byte-stable for fixed
// inputs.

namespace gravicat {

enum class Format { markdown, csv, json };

Format parse_format(std::string_view text);  // "md", "csv", "json"

struct RenderSpec {
  Format format = Format::markdown;
  std::vector<std::string> columns;  // empty -> default column set

  /// Throws std::invalid_argument listing any unknown column names.
  void validate() const;
};

/// Column names accepted by RenderSpec, in canonical order.
const std::vector<std::string>& known_columns();
const std::vector<std::string>& default_columns();

std::string render_reports(const std::vector<FeasibilityReport>& reports,
                           const RenderSpec& spec);

/// Raw SI float, shortest round-trip spelling; infinity renders as
/// "inf".
std::string format_raw(double value);

/// Two-significant-digit value with an SI prefix: format_si(6.3e-6, "s")
/// -> "6.3 µs". Mass is prefixed against grams, so 5e-10 kg -> "500 ng".
std::string format_si(double value, std::string_view unit);

}  // namespace gravicat
