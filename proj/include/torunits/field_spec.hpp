#pragma once

#include <optional>
#include <string>
#include <vector>

#include "torunits/ideal.hpp"
#include "torunits/unit_group.hpp"

namespace torunits {

struct IdealSpec {
  std::string label;
  /// Basis vectors in integral-basis coordinates (one inner vector per basis element).
  std::optional<std::vector<std::vector<Integer>>> basis;
  std::vector<std::vector<Rational>> generators;
};

/// Parsed but unverified field file.
struct FieldSpecFile {
  std::string source;
  std::string name;
  RationalPolynomial poly;
  /// One inner vector per basis element, in power coordinates.
  std::optional<std::vector<std::vector<Rational>>> integral_basis;
  std::optional<std::vector<std::vector<Rational>>> units;
  std::vector<IdealSpec> ideals;
};

/// Format chosen by extension (.toml or .json). Errors carry file:line
/// (TOML) or file:/json/pointer (JSON).
FieldSpecFile parse_field_spec(const std::string& path);
FieldSpecFile parse_field_spec_text(const std::string& text, const std::string& format, const std::string& source);

/// "p/q", "n", or an integer literal.
Rational parse_rational(const std::string& text);

/// Verified field, unit group and ideals.
struct Workspace {
  std::string source;
  std::string name;
  FieldPtr field;
  UnitGroupData units;
  std::vector<IntegralIdeal> ideals;
  /// True when the free units were computed rather than read from the file.
  bool units_computed = false;

  const IntegralIdeal& ideal(const std::string& label) const;
};

Workspace build_workspace(const FieldSpecFile& spec);
Workspace load_workspace(const std::string& path);

}  // namespace torunits
