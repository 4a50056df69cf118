#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gf2conics/gf2n.hpp"

namespace gf2conics {

/// Point of PG(2, 2^n) in homogeneous coordinates, normalized so that the
/// leftmost nonzero coordinate (order x, y, z) equals 1.
class Point {
 public:
  Point(const Field& field, std::uint32_t x, std::uint32_t y, std::uint32_t z);

  const Field& field() const { return field_; }
  std::uint32_t x() const { return x_; }
  std::uint32_t y() const { return y_; }
  std::uint32_t z() const { return z_; }

  friend bool operator==(const Point&, const Point&) = default;

 private:
  Field field_;
  std::uint32_t x_, y_, z_;
};

/// Line l*x + m*y + n*z = 0, normalized like a point.
class Line {
 public:
  Line(const Field& field, std::uint32_t l, std::uint32_t m, std::uint32_t n);

  const Field& field() const { return field_; }
  std::uint32_t l() const { return l_; }
  std::uint32_t m() const { return m_; }
  std::uint32_t n() const { return n_; }

  /// Value of the linear form at a point of the same field.
  std::uint32_t evaluate(const Point& p) const;

  friend bool operator==(const Line&, const Line&) = default;

 private:
  Field field_;
  std::uint32_t l_, m_, n_;
};

/// Ternary quadratic form
///   a_xx x^2 + a_yy y^2 + a_zz z^2 + a_xy xy + a_xz xz + a_yz yz
/// with coefficients stored in that order. Never identically zero.
class Conic {
 public:
  static constexpr std::size_t kXX = 0, kYY = 1, kZZ = 2;
  static constexpr std::size_t kXY = 3, kXZ = 4, kYZ = 5;

  Conic(const Field& field, const std::array<std::uint32_t, 6>& coeff);

  const Field& field() const { return field_; }
  const std::array<std::uint32_t, 6>& coeff() const { return coeff_; }
  std::uint32_t operator[](std::size_t i) const { return coeff_[i]; }

  friend bool operator==(const Conic&, const Conic&) = default;

 private:
  Field field_;
  std::array<std::uint32_t, 6> coeff_;
};

/// Invertible 3x3 coordinate substitution, row-major entries.
class Transform {
 public:
  Transform(const Field& field, const std::array<std::uint32_t, 9>& entries);

  static Transform identity(const Field& field);

  const Field& field() const { return field_; }
  const std::array<std::uint32_t, 9>& entries() const { return entries_; }
  std::uint32_t determinant() const;

 private:
  Field field_;
  std::array<std::uint32_t, 9> entries_;
};

enum class ConicClass {
  kNondegenerate,
  kRealLinePair,
  kRepeatedLine,
  kImaginaryLinePair,
};

/// Classification verdict together with the evidence backing it.
struct Classification {
  ConicClass verdict;
  std::uint32_t point_count;
  // RealLinePair: the two distinct lines, lexicographically ordered.
  std::optional<std::pair<Line, Line>> lines;
  // RepeatedLine: the single line.
  std::optional<Line> line;
  // Line pairs (real or imaginary): the common point of the two lines.
  std::optional<Point> vertex;
};

/// All q^2 + q + 1 normalized points: (1:y:z) ascending, (0:1:z), (0:0:1).
std::vector<Point> enumerate_points(const Field& field);

/// Value of the form at a normalized point.
std::uint32_t evaluate(const Conic& conic, const Point& p);

/// The points with evaluate = 0, by full enumeration, in enumeration order.
std::vector<Point> point_set(const Conic& conic);
std::uint32_t point_count(const Conic& conic);

/// Points of the conic at which all three formal partials vanish.
/// In characteristic 2 the partials are linear: d/dx = a_xy y + a_xz z, etc.
std::vector<Point> singular_points(const Conic& conic);

/// Four-way classification: nucleus of the partials system, membership
/// test, and a point count that separates real from imaginary line pairs.
/// For real pairs the two lines are reconstructed and their product is
/// checked against the conic. Throws on an all-zero form (never built) and
/// on internal inconsistency.
Classification classify(const Conic& conic);

/// The form composed with the substitution (x,y,z) <- T(x,y,z).
Conic apply_transform(const Conic& conic, const Transform& t);

/// All six coefficients multiplied by a nonzero scalar; same point set.
Conic scale(const Conic& conic, std::uint32_t s);

/// The line through two distinct points.
Line line_through(const Point& p, const Point& q);

/// Conic with the coefficients of the product of two linear forms.
Conic line_product(const Line& a, const Line& b);

/// True when b = s * a coefficient-wise for a single nonzero scalar s.
bool proportional(const Conic& a, const Conic& b);

std::string to_string(ConicClass verdict);
std::string to_string(const Point& p);   // x:y:z, lowercase hex
std::string to_string(const Line& l);    // l:m:n
std::string to_string(const Conic& c);   // six comma-separated hex values

/// Parse six comma-separated hex coefficients. nullopt on malformed input;
/// throws std::invalid_argument("zero conic") on a well-formed zero tuple.
std::optional<Conic> parse_conic(const Field& field, const std::string& text);

}  // namespace gf2conics
