#pragma once

#include <cmath>
#include <compare>
#include <stdexcept>
#include <string>

#include "gravicat/constants.hpp"

// Minimal quantity-with-unit discipline over the SI base dimensions we
// need (length, mass, time, temperature). This is a test-time checking
// tool: the computational code paths work on raw doubles, and the unit
// tests re-assemble every formula with Quantity to verify that each one
// is dimensionally consistent.

namespace gravicat::units {

struct Dimension {
  int length = 0;
  int mass = 0;
  int time = 0;
  int temperature = 0;

  friend constexpr bool operator==(const Dimension&, const Dimension&) = default;

  constexpr Dimension operator+(const Dimension& o) const {
    return {length + o.length, mass + o.mass, time + o.time,
            temperature + o.temperature};
  }
  constexpr Dimension operator-(const Dimension& o) const {
    return {length - o.length, mass - o.mass, time - o.time,
            temperature - o.temperature};
  }
  constexpr Dimension operator*(int k) const {
    return {length * k, mass * k, time * k, temperature * k};
  }

  std::string str() const {
    auto part = [](const char* sym, int e) {
      if (e == 0) return std::string{};
      return std::string{" "} + sym + "^" + std::to_string(e);
    };
    std::string s = part("L", length) + part("M", mass) + part("T", time) +
                    part("K", temperature);
    return s.empty() ? std::string{"1"} : s.substr(1);
  }
};

inline constexpr Dimension kDimensionless{};
inline constexpr Dimension kLength{1, 0, 0, 0};
inline constexpr Dimension kMass{0, 1, 0, 0};
inline constexpr Dimension kTime{0, 0, 1, 0};
inline constexpr Dimension kTemperature{0, 0, 0, 1};
inline constexpr Dimension kFrequency{0, 0, -1, 0};
inline constexpr Dimension kEnergy{2, 1, -2, 0};

struct dimension_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// A real number tagged with its dimension exponents. Addition,
/// subtraction and comparison demand identical dimensions and throw
/// dimension_error otherwise; multiplication and division combine the
/// exponent vectors.
class Quantity {
 public:
  constexpr Quantity(double value, Dimension dim) : value_(value), dim_(dim) {}
  constexpr explicit Quantity(double value) : value_(value), dim_{} {}

  constexpr double value() const { return value_; }
  constexpr const Dimension& dim() const { return dim_; }

  Quantity operator+(const Quantity& o) const {
    require_same(o, "+");
    return {value_ + o.value_, dim_};
  }
  Quantity operator-(const Quantity& o) const {
    require_same(o, "-");
    return {value_ - o.value_, dim_};
  }
  constexpr Quantity operator*(const Quantity& o) const {
    return {value_ * o.value_, dim_ + o.dim_};
  }
  constexpr Quantity operator/(const Quantity& o) const {
    return {value_ / o.value_, dim_ - o.dim_};
  }
  constexpr Quantity operator*(double s) const { return {value_ * s, dim_}; }
  constexpr Quantity operator/(double s) const { return {value_ / s, dim_}; }
  friend constexpr Quantity operator*(double s, const Quantity& q) {
    return q * s;
  }
  friend constexpr Quantity operator/(double s, const Quantity& q) {
    return Quantity{s} / q;
  }

  std::partial_ordering operator<=>(const Quantity& o) const {
    require_same(o, "<=>");
    return value_ <=> o.value_;
  }
  bool operator==(const Quantity& o) const {
    require_same(o, "==");
    return value_ == o.value_;
  }

  /// Integer power: exponents scale, value is iterated multiplication.
  Quantity pow_int(int k) const;

  /// Square root; every dimension exponent must be even.
  Quantity sqrt() const;

 private:
  void require_same(const Quantity& o, const char* op) const {
    if (dim_ != o.dim_)
      throw dimension_error(std::string{"dimension mismatch in '"} + op +
                            "': " + dim_.str() + " vs " + o.dim_.str());
  }

  double value_;
  Dimension dim_;
};

/// Constant table as dimension-tagged quantities, for symbolic formula
/// checks in tests.
struct TaggedConstants {
  Quantity G{kConstants.G, Dimension{3, -1, -2, 0}};
  Quantity c{kConstants.c, Dimension{1, 0, -1, 0}};
  Quantity hbar{kConstants.hbar, kEnergy + kTime};
  Quantity h{kConstants.h, kEnergy + kTime};
  Quantity k_B{kConstants.k_B, kEnergy - kTemperature};
  Quantity m_u{kConstants.m_u, kMass};
  Quantity R0{kConstants.R0, kLength};
};

inline Quantity Quantity::pow_int(int k) const {
  double v = 1.0;
  for (int i = 0; i < (k < 0 ? -k : k); ++i) v *= value_;
  if (k < 0) v = 1.0 / v;
  return {v, dim_ * k};
}

inline Quantity Quantity::sqrt() const {
  if (dim_.length % 2 || dim_.mass % 2 || dim_.time % 2 ||
      dim_.temperature % 2)
    throw dimension_error("sqrt of odd dimension exponents: " + dim_.str());
  return {std::sqrt(value_),
          {dim_.length / 2, dim_.mass / 2, dim_.time / 2,
           dim_.temperature / 2}};
}

}  // namespace gravicat::units
