#include "cl3/geometry.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace cl3 {

namespace {

std::uint64_t pack4(std::span<const Field::Code, 4> v) {
  return (static_cast<std::uint64_t>(v[0]) << 48) | (static_cast<std::uint64_t>(v[1]) << 32) |
         (static_cast<std::uint64_t>(v[2]) << 16) | static_cast<std::uint64_t>(v[3]);
}

// Sorted-range intersection; inputs ascending, result ascending.
void intersect_sorted(std::span<const Id> a, std::span<const Id> b, std::vector<Id>& out) {
  out.clear();
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] < b[j]) {
      ++i;
    } else if (b[j] < a[i]) {
      ++j;
    } else {
      out.push_back(a[i]);
      ++i;
      ++j;
    }
  }
}

}  // namespace

std::size_t Geometry::TupleHash::operator()(const std::array<Field::Code, 6>& t) const noexcept {
  std::uint64_t h = 1469598103934665603ull;  // FNV-1a
  for (Field::Code c : t) {
    h ^= static_cast<std::uint64_t>(c);
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

std::array<Field::Code, 4> Geometry::normalized4(std::span<const Field::Code, 4> v) const {
  std::array<Field::Code, 4> r{v[0], v[1], v[2], v[3]};
  int lead = -1;
  for (int i = 0; i < 4; ++i)
    if (r[i] != 0) {
      lead = i;
      break;
    }
  if (lead < 0) fail(Errc::InvalidArgument, "zero coordinate tuple");
  const Field::Code s = field_.inv(r[lead]);
  for (auto& c : r) c = field_.mul(c, s);
  return r;
}

Field::Code Geometry::dot4(std::span<const Field::Code, 4> a,
                           std::span<const Field::Code, 4> b) const {
  Field::Code acc = 0;
  for (int i = 0; i < 4; ++i) acc = field_.add(acc, field_.mul(a[i], b[i]));
  return acc;
}

Geometry::Geometry(Field field) : field_(std::move(field)) {
  q_ = field_.q();
  const int q = q_;
  const Id n_expected = static_cast<Id>(static_cast<long long>(q) * q * q + q * q + q + 1);

  // Normalized point representatives: leading coordinate 1, zeros before it.
  points_.reserve(n_expected);
  for (int lead = 0; lead < 4; ++lead) {
    const int tail = 3 - lead;
    long long combos = 1;
    for (int i = 0; i < tail; ++i) combos *= q;
    for (long long c = 0; c < combos; ++c) {
      std::array<Field::Code, 4> pt{};
      pt[lead] = 1;
      long long rest = c;
      for (int i = lead + 1; i < 4; ++i) {
        pt[i] = static_cast<Field::Code>(rest % q);
        rest /= q;
      }
      points_.push_back(pt);
    }
  }
  std::sort(points_.begin(), points_.end());
  if (static_cast<Id>(points_.size()) != n_expected)
    throw std::logic_error("point enumeration size mismatch");
  planes_ = points_;  // self-dual coordinates

  point_index_.reserve(points_.size());
  for (Id i = 0; i < n_points(); ++i) point_index_.emplace_back(pack4(point(i)), i);
  plane_index_ = point_index_;

  // Point-plane incidence.
  const int per = lines_per_point();  // also planes per point / points per plane
  plane_points_.assign(static_cast<std::size_t>(n_expected) * per, -1);
  point_planes_.assign(static_cast<std::size_t>(n_expected) * per, -1);
  std::vector<int> plane_fill(n_expected, 0), point_fill(n_expected, 0);
  for (Id b = 0; b < n_planes(); ++b) {
    for (Id a = 0; a < n_points(); ++a) {
      if (dot4(plane(b), point(a)) == 0) {
        plane_points_[static_cast<std::size_t>(b) * per + plane_fill[b]++] = a;
        point_planes_[static_cast<std::size_t>(a) * per + point_fill[a]++] = b;
      }
    }
  }
  for (Id i = 0; i < n_expected; ++i)
    if (plane_fill[i] != per || point_fill[i] != per)
      throw std::logic_error("point-plane incidence count mismatch");

  // Lines, deduplicated by normalized Plucker tuple.
  const auto plucker_of = [&](std::span<const Field::Code, 4> pu,
                              std::span<const Field::Code, 4> rv) {
    std::array<Field::Code, 6> t;
    int k = 0;
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j)
        t[k++] = field_.sub(field_.mul(pu[i], rv[j]), field_.mul(pu[j], rv[i]));
    return t;
  };
  const auto normalize6 = [&](std::array<Field::Code, 6> t) {
    int lead = -1;
    for (int i = 0; i < 6; ++i)
      if (t[i] != 0) {
        lead = i;
        break;
      }
    if (lead < 0) fail(Errc::EqualPoints, "degenerate span");
    const Field::Code s = field_.inv(t[lead]);
    for (auto& c : t) c = field_.mul(c, s);
    return t;
  };

  const long long lines_expected =
      (static_cast<long long>(q) * q + 1) * (static_cast<long long>(q) * q + q + 1);
  std::unordered_map<std::array<Field::Code, 6>, std::pair<Id, Id>, TupleHash> seen;
  seen.reserve(static_cast<std::size_t>(lines_expected) * 2);
  for (Id i = 0; i < n_points(); ++i)
    for (Id j = i + 1; j < n_points(); ++j) {
      auto key = normalize6(plucker_of(point(i), point(j)));
      seen.emplace(key, std::make_pair(i, j));
    }
  if (static_cast<long long>(seen.size()) != lines_expected)
    throw std::logic_error("line enumeration size mismatch");

  line_keys_.reserve(seen.size());
  for (const auto& [key, span_pair] : seen) line_keys_.push_back(key);
  std::sort(line_keys_.begin(), line_keys_.end());
  n_lines_ = static_cast<Id>(line_keys_.size());

  plucker_.resize(static_cast<std::size_t>(n_lines_) * 6);
  line_points_.resize(static_cast<std::size_t>(n_lines_) * (q + 1));
  line_planes_.resize(static_cast<std::size_t>(n_lines_) * (q + 1));
  std::vector<Id> planes_buf;
  for (Id l = 0; l < n_lines_; ++l) {
    const auto& key = line_keys_[l];
    std::copy(key.begin(), key.end(), plucker_.begin() + static_cast<std::size_t>(l) * 6);

    const auto [a, b] = seen.find(key)->second;
    // Points of span{A,B}: A itself plus c*A + B for every scalar c.
    Id* pts = &line_points_[static_cast<std::size_t>(l) * (q + 1)];
    pts[0] = a;
    for (int c = 0; c < q; ++c) {
      std::array<Field::Code, 4> v;
      for (int i = 0; i < 4; ++i)
        v[i] = field_.add(field_.mul(static_cast<Field::Code>(c), point(a)[i]), point(b)[i]);
      pts[1 + c] = point_id(v);
    }
    std::sort(pts, pts + q + 1);

    intersect_sorted(std::span<const Id>(&point_planes_[static_cast<std::size_t>(a) * per], per),
                     std::span<const Id>(&point_planes_[static_cast<std::size_t>(b) * per], per),
                     planes_buf);
    if (static_cast<int>(planes_buf.size()) != q + 1)
      throw std::logic_error("line-plane incidence count mismatch");
    std::copy(planes_buf.begin(), planes_buf.end(),
              line_planes_.begin() + static_cast<std::size_t>(l) * (q + 1));
  }

  // Stars and plane line sets; ascending because lines are visited in order.
  star_.assign(static_cast<std::size_t>(n_expected) * per, -1);
  plane_lines_.assign(static_cast<std::size_t>(n_expected) * per, -1);
  std::fill(point_fill.begin(), point_fill.end(), 0);
  std::fill(plane_fill.begin(), plane_fill.end(), 0);
  for (Id l = 0; l < n_lines_; ++l) {
    for (Id p : line_points(l)) star_[static_cast<std::size_t>(p) * per + point_fill[p]++] = l;
    for (Id b : line_planes(l))
      plane_lines_[static_cast<std::size_t>(b) * per + plane_fill[b]++] = l;
  }
  for (Id i = 0; i < n_expected; ++i)
    if (plane_fill[i] != per || point_fill[i] != per)
      throw std::logic_error("star/plane line count mismatch");
}

std::span<const Id> Geometry::line_points(Id line) const {
  return {&line_points_[static_cast<std::size_t>(line) * (q_ + 1)],
          static_cast<std::size_t>(q_ + 1)};
}

std::span<const Id> Geometry::line_planes(Id line) const {
  return {&line_planes_[static_cast<std::size_t>(line) * (q_ + 1)],
          static_cast<std::size_t>(q_ + 1)};
}

std::span<const Id> Geometry::star(Id point) const {
  return {&star_[static_cast<std::size_t>(point) * lines_per_point()],
          static_cast<std::size_t>(lines_per_point())};
}

std::span<const Id> Geometry::lines_in_plane(Id plane) const {
  return {&plane_lines_[static_cast<std::size_t>(plane) * lines_per_point()],
          static_cast<std::size_t>(lines_per_point())};
}

std::span<const Id> Geometry::points_in_plane(Id plane) const {
  return {&plane_points_[static_cast<std::size_t>(plane) * lines_per_point()],
          static_cast<std::size_t>(lines_per_point())};
}

std::span<const Id> Geometry::planes_through_point(Id point) const {
  return {&point_planes_[static_cast<std::size_t>(point) * lines_per_point()],
          static_cast<std::size_t>(lines_per_point())};
}

std::vector<Id> Geometry::pencil(Id point, Id plane) const {
  if (!incident(point, plane)) fail(Errc::NonIncidentPair, "pencil of a non-incident pair");
  std::vector<Id> out;
  intersect_sorted(star(point), lines_in_plane(plane), out);
  return out;
}

bool Geometry::incident(Id point_id_, Id plane_id_) const {
  return dot4(point(point_id_), plane(plane_id_)) == 0;
}

bool Geometry::line_contains_point(Id line, Id point) const {
  auto pts = line_points(line);
  return std::binary_search(pts.begin(), pts.end(), point);
}

bool Geometry::line_in_plane(Id line, Id plane) const {
  auto pls = line_planes(line);
  return std::binary_search(pls.begin(), pls.end(), plane);
}

bool Geometry::lines_meet(Id a, Id b) const {
  const Field::Code* t = &plucker_[static_cast<std::size_t>(a) * 6];
  const Field::Code* m = &plucker_[static_cast<std::size_t>(b) * 6];
  // p01 q23 - p02 q13 + p03 q12 + p23 q01 - p13 q02 + p12 q03
  Field::Code acc = field_.mul(t[0], m[5]);
  acc = field_.sub(acc, field_.mul(t[1], m[4]));
  acc = field_.add(acc, field_.mul(t[2], m[3]));
  acc = field_.add(acc, field_.mul(t[5], m[0]));
  acc = field_.sub(acc, field_.mul(t[4], m[1]));
  acc = field_.add(acc, field_.mul(t[3], m[2]));
  return acc == 0;
}

Id Geometry::line_through(Id p, Id r) const {
  if (p == r) fail(Errc::EqualPoints, "line through a repeated point");
  std::array<Field::Code, 6> t;
  int k = 0;
  auto pu = point(p), rv = point(r);
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      t[k++] = field_.sub(field_.mul(pu[i], rv[j]), field_.mul(pu[j], rv[i]));
  int lead = -1;
  for (int i = 0; i < 6; ++i)
    if (t[i] != 0) {
      lead = i;
      break;
    }
  if (lead < 0) fail(Errc::EqualPoints, "degenerate span");
  const Field::Code s = field_.inv(t[lead]);
  for (auto& c : t) c = field_.mul(c, s);
  auto it = std::lower_bound(line_keys_.begin(), line_keys_.end(), t);
  if (it == line_keys_.end() || *it != t) throw std::logic_error("line lookup failed");
  return static_cast<Id>(it - line_keys_.begin());
}

Id Geometry::point_id(std::span<const Field::Code, 4> coords) const {
  const std::uint64_t key = pack4(normalized4(coords));
  auto it = std::lower_bound(point_index_.begin(), point_index_.end(), key,
                             [](const auto& e, std::uint64_t k) { return e.first < k; });
  if (it == point_index_.end() || it->first != key) throw std::logic_error("point lookup failed");
  return it->second;
}

Id Geometry::plane_id(std::span<const Field::Code, 4> coords) const {
  const std::uint64_t key = pack4(normalized4(coords));
  auto it = std::lower_bound(plane_index_.begin(), plane_index_.end(), key,
                             [](const auto& e, std::uint64_t k) { return e.first < k; });
  if (it == plane_index_.end() || it->first != key) throw std::logic_error("plane lookup failed");
  return it->second;
}

std::optional<Id> Geometry::line_id(std::span<const Field::Code, 6> plucker) const {
  std::array<Field::Code, 6> t;
  std::copy(plucker.begin(), plucker.end(), t.begin());
  auto it = std::lower_bound(line_keys_.begin(), line_keys_.end(), t);
  if (it == line_keys_.end() || *it != t) return std::nullopt;
  return static_cast<Id>(it - line_keys_.begin());
}

std::optional<std::array<Field::Code, 16>> invert4(const Field& f,
                                                   const std::array<Field::Code, 16>& m) {
  // Gauss-Jordan on [m | I].
  std::array<std::array<Field::Code, 8>, 4> a{};
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) a[r][c] = m[4 * r + c];
    a[r][4 + r] = 1;
  }
  for (int col = 0; col < 4; ++col) {
    int pivot = -1;
    for (int r = col; r < 4; ++r)
      if (a[r][col] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) return std::nullopt;
    std::swap(a[col], a[pivot]);
    const Field::Code s = f.inv(a[col][col]);
    for (int c = 0; c < 8; ++c) a[col][c] = f.mul(a[col][c], s);
    for (int r = 0; r < 4; ++r) {
      if (r == col || a[r][col] == 0) continue;
      const Field::Code factor = a[r][col];
      for (int c = 0; c < 8; ++c) a[r][c] = f.sub(a[r][c], f.mul(factor, a[col][c]));
    }
  }
  std::array<Field::Code, 16> inv;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) inv[4 * r + c] = a[r][4 + c];
  return inv;
}

Collineation make_collineation(const Field& f, const std::array<Field::Code, 16>& m,
                               int automorphism) {
  if (automorphism < 0 || automorphism >= f.h())
    fail(Errc::InvalidArgument, "automorphism index out of range");
  auto inv = invert4(f, m);
  if (!inv) fail(Errc::SingularMatrix, "collineation matrix is singular");
  return Collineation{m, *inv, automorphism};
}

Id apply_to_point(const Geometry& g, const Collineation& c, Id point) {
  const Field& f = g.field();
  auto x = g.point(point);
  std::array<Field::Code, 4> sx;
  for (int i = 0; i < 4; ++i) sx[i] = f.frobenius(x[i], c.automorphism);
  std::array<Field::Code, 4> y{};
  for (int r = 0; r < 4; ++r)
    for (int col = 0; col < 4; ++col)
      y[r] = f.add(y[r], f.mul(c.matrix[4 * r + col], sx[col]));
  return g.point_id(y);
}

Id apply_to_plane(const Geometry& g, const Collineation& c, Id plane) {
  const Field& f = g.field();
  auto n = g.plane(plane);
  std::array<Field::Code, 4> sn;
  for (int i = 0; i < 4; ++i) sn[i] = f.frobenius(n[i], c.automorphism);
  // Inverse transpose keeps incidence: (M^-T n) . (M x) = n . x.
  std::array<Field::Code, 4> w{};
  for (int r = 0; r < 4; ++r)
    for (int col = 0; col < 4; ++col)
      w[r] = f.add(w[r], f.mul(c.inverse[4 * col + r], sn[col]));
  return g.plane_id(w);
}

Id apply_to_line(const Geometry& g, const Collineation& c, Id line) {
  auto pts = g.line_points(line);
  return g.line_through(apply_to_point(g, c, pts[0]), apply_to_point(g, c, pts[1]));
}

}  // namespace cl3
