#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "cl3/geometry.hpp"

namespace cl3 {

/// Membership set over the line ids of one geometry.
///
/// Treated as a value: complement, switching, and collineation images all
/// return new instances. Two classes compare equal when their geometries are
/// structurally identical (same field) and their membership bits agree.
class LineClass {
 public:
  explicit LineClass(const Geometry& g);
  LineClass(const Geometry& g, const std::vector<Id>& members);

  const Geometry& geometry() const noexcept { return *geom_; }
  long long size() const noexcept { return size_; }
  bool contains(Id line) const {
    return (bits_[static_cast<std::size_t>(line) >> 6] >> (line & 63)) & 1u;
  }
  void set(Id line, bool member);

  LineClass complement() const;
  std::vector<Id> member_ids() const;  // ascending

  bool operator==(const LineClass& other) const;
  bool operator!=(const LineClass& other) const { return !(*this == other); }

 private:
  const Geometry* geom_;
  std::vector<std::uint64_t> bits_;
  long long size_ = 0;
};

/// |lines_in_plane(pi) ∩ L| indexed by plane id.
std::vector<int> plane_counts(const LineClass& L);
/// |star(P) ∩ L| indexed by point id.
std::vector<int> point_counts(const LineClass& L);

/// Exact histograms: member count -> number of planes (points) attaining it.
std::map<int, long long> plane_spectrum(const LineClass& L);
std::map<int, long long> point_spectrum(const LineClass& L);

/// Image of a class under a collineation.
LineClass apply_to_class(const LineClass& L, const Collineation& c);

}  // namespace cl3
