#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "cl3/field.hpp"

namespace cl3 {

using Id = std::int32_t;

/// Frozen incidence tables of PG(3,q).
///
/// Points and planes are homogeneous 4-tuples over GF(q), normalized so the
/// first nonzero coordinate is 1, indexed by lexicographic order of their
/// code tuples. Lines are normalized Plucker 6-tuples (p01,p02,p03,p12,p13,
/// p23), indexed the same way. All incidence lists are sorted ascending, so
/// two builds over the same field produce identical tables.
///
/// Immutable after construction; every query is read-only.
class Geometry {
 public:
  explicit Geometry(Field field);

  Geometry(const Geometry&) = delete;
  Geometry& operator=(const Geometry&) = delete;

  const Field& field() const noexcept { return field_; }
  int q() const noexcept { return q_; }

  Id n_points() const noexcept { return static_cast<Id>(points_.size()); }
  Id n_planes() const noexcept { return static_cast<Id>(planes_.size()); }
  Id n_lines() const noexcept { return n_lines_; }

  // Sizes that recur in every invariant.
  int lines_per_point() const noexcept { return q_ * q_ + q_ + 1; }
  int points_per_line() const noexcept { return q_ + 1; }

  std::span<const Field::Code, 4> point(Id id) const {
    return std::span<const Field::Code, 4>(points_[id].data(), 4);
  }
  std::span<const Field::Code, 4> plane(Id id) const {
    return std::span<const Field::Code, 4>(planes_[id].data(), 4);
  }
  std::span<const Field::Code, 6> plucker(Id line) const {
    return std::span<const Field::Code, 6>(&plucker_[static_cast<std::size_t>(line) * 6], 6);
  }

  std::span<const Id> line_points(Id line) const;
  std::span<const Id> line_planes(Id line) const;
  std::span<const Id> star(Id point) const;
  std::span<const Id> lines_in_plane(Id plane) const;
  std::span<const Id> points_in_plane(Id plane) const;
  std::span<const Id> planes_through_point(Id point) const;

  /// The q+1 lines through `point` inside `plane`; NonIncidentPair if the
  /// pair is not incident. Equals star(point) intersected with
  /// lines_in_plane(plane).
  std::vector<Id> pencil(Id point, Id plane) const;

  bool incident(Id point, Id plane) const;
  bool line_contains_point(Id line, Id point) const;
  bool line_in_plane(Id line, Id plane) const;

  /// Plucker bilinear pairing test; true iff the lines share a point.
  bool lines_meet(Id a, Id b) const;

  /// Line spanned by two distinct points (EqualPoints otherwise).
  Id line_through(Id p, Id r) const;

  /// Lookups by coordinates. Inputs need not be normalized.
  Id point_id(std::span<const Field::Code, 4> coords) const;
  Id plane_id(std::span<const Field::Code, 4> coords) const;
  std::optional<Id> line_id(std::span<const Field::Code, 6> plucker) const;

  std::array<Field::Code, 4> normalized4(std::span<const Field::Code, 4> v) const;

 private:
  Field field_;
  int q_ = 0;
  Id n_lines_ = 0;

  std::vector<std::array<Field::Code, 4>> points_;
  std::vector<std::array<Field::Code, 4>> planes_;
  std::vector<Field::Code> plucker_;  // 6 per line

  std::vector<Id> line_points_;   // (q+1) per line, ascending
  std::vector<Id> line_planes_;   // (q+1) per line, ascending
  std::vector<Id> point_planes_;  // (q^2+q+1) per point, ascending
  std::vector<Id> plane_points_;  // (q^2+q+1) per plane, ascending
  std::vector<Id> star_;          // (q^2+q+1) per point, ascending
  std::vector<Id> plane_lines_;   // (q^2+q+1) per plane, ascending

  struct TupleHash {
    std::size_t operator()(const std::array<Field::Code, 6>& t) const noexcept;
  };
  // unordered lookup keyed by packed coordinates
  std::vector<std::pair<std::uint64_t, Id>> point_index_;  // sorted for binary search
  std::vector<std::pair<std::uint64_t, Id>> plane_index_;
  std::vector<std::array<Field::Code, 6>> line_keys_;  // sorted = id order

  Field::Code dot4(std::span<const Field::Code, 4> a, std::span<const Field::Code, 4> b) const;
};

/// Semilinear collineation: coordinate-wise Frobenius power followed by an
/// invertible matrix. Points transform by `matrix`, planes by the inverse
/// transpose, lines by the induced action on two spanning points.
struct Collineation {
  std::array<Field::Code, 16> matrix;   // row-major
  std::array<Field::Code, 16> inverse;  // cached for the plane action
  int automorphism = 0;                 // Frobenius power, in [0, h)
};

/// Validates invertibility (SingularMatrix otherwise) and caches the inverse.
Collineation make_collineation(const Field& f, const std::array<Field::Code, 16>& m,
                               int automorphism);

Id apply_to_point(const Geometry& g, const Collineation& c, Id point);
Id apply_to_plane(const Geometry& g, const Collineation& c, Id plane);
Id apply_to_line(const Geometry& g, const Collineation& c, Id line);

/// 4x4 inverse over GF(q); nullopt when singular.
std::optional<std::array<Field::Code, 16>> invert4(const Field& f,
                                                   const std::array<Field::Code, 16>& m);

}  // namespace cl3
