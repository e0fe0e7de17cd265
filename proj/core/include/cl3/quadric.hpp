#pragma once

#include <array>
#include <span>

#include "cl3/geometry.hpp"
#include "cl3/line_class.hpp"

namespace cl3 {

/// Quadratic form in four variables, coefficients in upper-triangular order
/// c00,c01,c02,c03,c11,c12,c13,c22,c23,c33.
struct QuadraticForm {
  std::array<Field::Code, 10> coeffs{};

  Field::Code evaluate(const Field& f, std::span<const Field::Code, 4> x) const;
  /// Symmetric Gram matrix of the polar form: B_ii = c_ii, B_ij = c_ij / 2.
  /// Needs odd characteristic, which Field already guarantees.
  std::array<Field::Code, 16> gram(const Field& f) const;

  bool operator==(const QuadraticForm&) const = default;
};

/// x0*x1 + x2^2 - d*x3^2 with d the least-code nonsquare of the field.
QuadraticForm default_elliptic_form(const Field& f);

enum class LineType : std::uint8_t { Tangent, Secant, External };

enum class BdBase { Secants, Externals };

/// The elliptic quadric cut out by a form with q^2+1 zeros, together with
/// its polarity, the tangent/secant/external split, and the square-class
/// tangent labels.
///
/// Label convention: a tangent gets label 1 when the form evaluates to a
/// square at its off-quadric points, label 2 otherwise. The class is well
/// defined because the value scales by squares along the line.
class EllipticQuadric {
 public:
  /// NotElliptic unless the zero set has exactly q^2+1 points.
  EllipticQuadric(const Geometry& g, QuadraticForm form);

  const Geometry& geometry() const noexcept { return *geom_; }
  const QuadraticForm& form() const noexcept { return form_; }

  std::span<const Id> points() const noexcept { return quadric_points_; }
  bool on_quadric(Id point) const { return on_[static_cast<std::size_t>(point)] != 0; }

  LineType line_type(Id line) const { return static_cast<LineType>(type_[line]); }
  long long n_tangents() const noexcept { return n_tangents_; }
  long long n_secants() const noexcept { return n_secants_; }
  long long n_externals() const noexcept { return n_externals_; }

  /// 1 or 2; NotTangent for secants and externals.
  int tangent_label(Id line) const;
  /// The unique quadric point on a tangent; NotTangent otherwise.
  Id tangency_point(Id line) const;
  /// Polar plane of a quadric point; InvalidArgument off the quadric.
  Id tangent_plane(Id point) const;

  Id polar_plane(Id point) const;
  Id polar_point(Id plane) const;
  Id polar_line(Id line) const;

  /// S ∪ T^label or E ∪ T^label; label must be 1 or 2.
  LineClass bruen_drudge(BdBase base, int label) const;

 private:
  const Geometry* geom_;
  QuadraticForm form_;
  std::array<Field::Code, 16> gram_;
  std::array<Field::Code, 16> gram_inv_;

  std::vector<Id> quadric_points_;
  std::vector<std::uint8_t> on_;
  std::vector<std::uint8_t> type_;   // LineType per line
  std::vector<std::uint8_t> label_;  // 0 for non-tangents
  std::vector<Id> touch_;            // tangency point per line, -1 otherwise
  long long n_tangents_ = 0, n_secants_ = 0, n_externals_ = 0;
};

}  // namespace cl3
