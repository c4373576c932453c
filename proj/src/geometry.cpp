#include "carkwork/geometry.hpp"

#include <cmath>
#include <numbers>

#include "carkwork/error.hpp"

namespace carkwork {

double QuadraticSurd::value() const {
  const long double root = std::sqrt(static_cast<long double>(to_double(radicand)));
  return static_cast<double>(static_cast<long double>(to_double(rational)) +
                             static_cast<long double>(to_double(coefficient)) * root);
}

std::string QuadraticSurd::to_string() const {
  return carkwork::to_string(rational) + " + " + carkwork::to_string(coefficient) + "*sqrt(" +
         carkwork::to_string(radicand) + ")";
}

double Geodesic::radius() const { return std::sqrt(to_double(radius_squared)); }

bool Geodesic::through_i() const { return center * center + 1 == radius_squared; }

namespace {

Geodesic make_geodesic(Rational center, const Integer& leading, const Integer& radicand) {
  const Integer two_leading = 2 * leading;
  Rational coefficient = ratio(1, abs(two_leading));
  Rational radius_squared = ratio(radicand, two_leading * two_leading);
  QuadraticSurd low{center, -coefficient, radicand};
  QuadraticSurd high{center, coefficient, radicand};
  return {std::move(center), std::move(radius_squared), {std::move(low), std::move(high)}};
}

}  // namespace

Geodesic geodesic_of_element(const GroupElement& w) {
  const ElementClass kind = classify_element(w);
  if (kind != ElementClass::hyperbolic) {
    throw DomainError(ErrorCode::no_real_geodesic,
                      "no real geodesic: element is " + std::string(to_string(kind)));
  }
  if (w.r().is_zero()) {
    throw DomainError(ErrorCode::vertical_geodesic, "vertical-line geodesic: r = 0");
  }
  const Integer t = w.trace();
  return make_geodesic(ratio(w.p() - w.s(), 2 * w.r()), w.r(), t * t - 4);
}

Geodesic geodesic_of_form(const QuadForm& f) {
  if (f.a().is_zero()) {
    throw DomainError(ErrorCode::vertical_geodesic, "vertical geodesic: a = 0 in " + f.to_string());
  }
  require_indefinite(f, "geodesic_of_form");
  return make_geodesic(ratio(-f.b(), 2 * f.a()), f.a(), f.discriminant());
}

Point to_disk(Point z) {
  const Point i(0.0, 1.0);
  return (z - i) / (z + i);
}

Point from_disk(Point w) {
  const Point i(0.0, 1.0);
  return i * (1.0 + w) / (1.0 - w);
}

DiskGeodesic to_disk(const Geodesic& g) {
  const Point u = to_disk(Point(g.endpoints[0].value(), 0.0));
  const Point v = to_disk(Point(g.endpoints[1].value(), 0.0));
  if (g.through_i()) {
    return {std::nullopt, HUGE_VAL, {u, v}};
  }
  // The circle through u and v orthogonal to |w| = 1 is centred on their
  // bisector at (u + v) / (1 + cos angle(u, v)).
  const Point center = (u + v) / (1.0 + (u * std::conj(v)).real());
  return {center, std::sqrt(std::norm(center) - 1.0), {u, v}};
}

std::vector<Point> sample_geodesic(const Geodesic& g, std::size_t n) {
  if (n < 2) {
    throw std::invalid_argument("sample_geodesic needs at least 2 points");
  }
  const double c = to_double(g.center);
  const double r = g.radius();
  std::vector<Point> out;
  out.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double theta = std::numbers::pi * (1.0 - static_cast<double>(k) / static_cast<double>(n - 1));
    out.emplace_back(c + r * std::cos(theta), r * std::sin(theta));
  }
  out.front() = Point(g.endpoints[0].value(), 0.0);
  out.back() = Point(g.endpoints[1].value(), 0.0);
  return out;
}

std::vector<Point> sample_disk_geodesic(const Geodesic& g, std::size_t n) {
  std::vector<Point> out = sample_geodesic(g, n);
  for (auto& z : out) {
    z = to_disk(z);
  }
  return out;
}

}  // namespace carkwork
