#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "carkwork/integer.hpp"
#include "carkwork/modular_group.hpp"
#include "carkwork/quadratic_forms.hpp"

namespace carkwork {

/// rational + coefficient * sqrt(radicand), radicand > 0 and not a square.
struct QuadraticSurd {
  Rational rational;
  Rational coefficient;
  Integer radicand;

  double value() const;
  /// "r + c*sqrt(d)"
  std::string to_string() const;
  friend bool operator==(const QuadraticSurd&, const QuadraticSurd&) = default;
};

/// A half circle orthogonal to the real axis, all data exact.
struct Geodesic {
  Rational center;
  Rational radius_squared;
  std::array<QuadraticSurd, 2> endpoints;  // ascending by value

  double radius() const;
  /// Whether the half circle passes through i (its disk image is a diameter).
  bool through_i() const;
};

/// Axis of a hyperbolic element: the half circle through its fixed points.
/// Throws no_real_geodesic unless |trace| > 2, vertical_geodesic when r == 0.
Geodesic geodesic_of_element(const GroupElement& w);

/// Half circle through the roots of a z^2 + b z + c. Throws vertical_geodesic
/// when a == 0 and not_indefinite for definite or degenerate forms.
Geodesic geodesic_of_form(const QuadForm& f);

using Point = std::complex<double>;

/// Cayley map z -> (z - i) / (z + i) and its inverse w -> i (1 + w) / (1 - w).
Point to_disk(Point z);
Point from_disk(Point w);

/// Image of a half-plane geodesic in the unit disk: an arc of a circle
/// orthogonal to the unit circle, or a diameter (no center, infinite radius).
struct DiskGeodesic {
  std::optional<Point> center;
  double radius;
  std::array<Point, 2> endpoints;
};

DiskGeodesic to_disk(const Geodesic& g);

/// n >= 2 points along the half circle from the lower endpoint to the upper
/// one, equally spaced in angle.
std::vector<Point> sample_geodesic(const Geodesic& g, std::size_t n);

/// Cayley images of sample_geodesic.
std::vector<Point> sample_disk_geodesic(const Geodesic& g, std::size_t n);

}  // namespace carkwork
