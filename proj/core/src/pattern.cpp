#include "cl3/pattern.hpp"

#include <algorithm>

namespace cl3 {

PatternMatrix pattern(const LineClass& L, Id line) {
  const Geometry& g = L.geometry();
  const int dim = g.q() + 1;
  PatternMatrix t;
  t.dim = dim;
  t.line = line;
  t.in_class = L.contains(line);
  auto planes = g.line_planes(line);
  auto points = g.line_points(line);
  t.row_planes.assign(planes.begin(), planes.end());
  t.col_points.assign(points.begin(), points.end());
  t.entries.assign(static_cast<std::size_t>(dim) * dim, 0);
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) {
      int count = 0;
      for (Id m : g.pencil(points[j], planes[i]))
        if (m != line && L.contains(m)) ++count;
      t.entries[static_cast<std::size_t>(i) * dim + j] = count;
    }
  }
  return t;
}

PatternMatrix with_front(const PatternMatrix& t, Id plane, Id point) {
  const auto rit = std::find(t.row_planes.begin(), t.row_planes.end(), plane);
  const auto cit = std::find(t.col_points.begin(), t.col_points.end(), point);
  if (rit == t.row_planes.end() || cit == t.col_points.end())
    fail(Errc::NotIncident, "plane or point does not belong to the pattern's line");
  const int r0 = static_cast<int>(rit - t.row_planes.begin());
  const int c0 = static_cast<int>(cit - t.col_points.begin());

  std::vector<int> rows(t.dim), cols(t.dim);
  rows[0] = r0;
  cols[0] = c0;
  for (int i = 0, k = 1; i < t.dim; ++i)
    if (i != r0) rows[k++] = i;
  for (int j = 0, k = 1; j < t.dim; ++j)
    if (j != c0) cols[k++] = j;

  PatternMatrix out = t;
  for (int i = 0; i < t.dim; ++i) {
    out.row_planes[i] = t.row_planes[rows[i]];
    for (int j = 0; j < t.dim; ++j)
      out.entries[static_cast<std::size_t>(i) * t.dim + j] = t.at(rows[i], cols[j]);
  }
  for (int j = 0; j < t.dim; ++j) out.col_points[j] = t.col_points[cols[j]];
  return out;
}

PatternIdentityReport check_pattern_identities(const PatternMatrix& t, const LineClass& L,
                                               long long x) {
  const Geometry& g = L.geometry();
  const int dim = t.dim;
  const int q = dim - 1;
  PatternIdentityReport rep;

  std::vector<long long> row_sum(dim, 0), col_sum(dim, 0);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) {
      row_sum[i] += t.at(i, j);
      col_sum[j] += t.at(i, j);
    }

  rep.row_col_sums = true;
  for (int i = 0; i < dim && rep.row_col_sums; ++i) {
    long long in_plane = 0;
    for (Id m : g.lines_in_plane(t.row_planes[i]))
      if (m != t.line && L.contains(m)) ++in_plane;
    if (row_sum[i] != in_plane) rep.row_col_sums = false;
  }
  for (int j = 0; j < dim && rep.row_col_sums; ++j) {
    long long in_star = 0;
    for (Id m : g.star(t.col_points[j]))
      if (m != t.line && L.contains(m)) ++in_star;
    if (col_sum[j] != in_star) rep.row_col_sums = false;
  }

  rep.linear_relation = true;
  for (int k = 0; k < dim && rep.linear_relation; ++k)
    for (int l = 0; l < dim && rep.linear_relation; ++l) {
      const long long lhs = col_sum[l] + row_sum[k];
      const long long rhs = t.in_class ? x + static_cast<long long>(q + 1) * (t.at(k, l) + 1) - 2
                                       : x + static_cast<long long>(q + 1) * t.at(k, l);
      if (lhs != rhs) rep.linear_relation = false;
    }

  rep.additivity = true;
  for (int k = 0; k < dim && rep.additivity; ++k)
    for (int l = 0; l < dim && rep.additivity; ++l)
      for (int r = 0; r < dim && rep.additivity; ++r)
        for (int s = 0; s < dim && rep.additivity; ++s)
          if (t.at(k, l) + t.at(r, s) != t.at(k, s) + t.at(r, l)) rep.additivity = false;

  long long sq = 0;
  for (int v : t.entries) sq += static_cast<long long>(v) * v;
  const long long q3 = static_cast<long long>(q) * q * q;
  const long long want = t.in_class ? q3 + static_cast<long long>(q) * q + (x - 1) * (x - 1) +
                                          static_cast<long long>(q) * (x - 1)
                                    : x * (q + x);
  rep.square_sum = sq == want;
  return rep;
}

namespace {

struct PairCounts {
  long long pencil = 0, plane = 0, star = 0;
};

PairCounts pair_counts(const LineClass& L, Id point, Id plane) {
  const Geometry& g = L.geometry();
  PairCounts c;
  for (Id m : g.pencil(point, plane))
    if (L.contains(m)) ++c.pencil;
  for (Id m : g.lines_in_plane(plane))
    if (L.contains(m)) ++c.plane;
  for (Id m : g.star(point))
    if (L.contains(m)) ++c.star;
  return c;
}

// Forward: the plane's non-star lines are all out, the star's non-plane
// lines all in. Reverse swaps the roles.
bool forward_ok(const PairCounts& c, long long q2) {
  return c.plane == c.pencil && c.star - c.pencil == q2;
}
bool reverse_ok(const PairCounts& c, long long q2) {
  return c.star == c.pencil && c.plane - c.pencil == q2;
}

}  // namespace

bool is_switchable(const LineClass& L, Id point, Id plane) {
  const Geometry& g = L.geometry();
  if (!g.incident(point, plane)) fail(Errc::NotIncident, "pair is not incident");
  const long long q2 = static_cast<long long>(g.q()) * g.q();
  const PairCounts c = pair_counts(L, point, plane);
  return forward_ok(c, q2) || reverse_ok(c, q2);
}

std::vector<SwitchablePair> switchable_pairs(const LineClass& L) {
  const Geometry& g = L.geometry();
  const long long q2 = static_cast<long long>(g.q()) * g.q();
  const std::vector<int> in_plane = plane_counts(L);
  const std::vector<int> in_star = point_counts(L);
  std::vector<SwitchablePair> out;
  for (Id p = 0; p < g.n_points(); ++p) {
    for (Id pl : g.planes_through_point(p)) {
      long long pencil = 0;
      for (Id m : g.pencil(p, pl))
        if (L.contains(m)) ++pencil;
      PairCounts c{pencil, in_plane[pl], in_star[p]};
      if (forward_ok(c, q2) || reverse_ok(c, q2)) out.push_back({p, pl});
    }
  }
  return out;
}

LineClass switch_class_unchecked(const LineClass& L, Id point, Id plane) {
  const Geometry& g = L.geometry();
  if (!g.incident(point, plane)) fail(Errc::NotIncident, "pair is not incident");
  LineClass out = L;
  for (Id m : g.lines_in_plane(plane))
    if (!g.line_contains_point(m, point)) out.set(m, true);
  for (Id m : g.star(point))
    if (!g.line_in_plane(m, plane)) out.set(m, false);
  return out;
}

LineClass switch_class(const LineClass& L, Id point, Id plane) {
  const Geometry& g = L.geometry();
  if (!g.incident(point, plane)) fail(Errc::NotIncident, "pair is not incident");
  const long long q2 = static_cast<long long>(g.q()) * g.q();
  const PairCounts c = pair_counts(L, point, plane);
  const bool fwd = forward_ok(c, q2);
  if (!fwd && !reverse_ok(c, q2))
    fail(Errc::ConditionsViolated, "pair does not satisfy the switching conditions");
  LineClass out = L;
  for (Id m : g.lines_in_plane(plane))
    if (!g.line_contains_point(m, point)) out.set(m, fwd);
  for (Id m : g.star(point))
    if (!g.line_in_plane(m, plane)) out.set(m, !fwd);
  return out;
}

ParameterSolution solve_parameter_system(int q, int t) {
  if (t < 0 || t > q + 1) fail(Errc::InvalidArgument, "pencil count out of range");
  // Linear equation: 2t + q^2 = x + t(q+1).
  const long long x = static_cast<long long>(q) * q - static_cast<long long>(t) * (q - 1);
  const long long q2 = static_cast<long long>(q) * q;
  const long long lhs = static_cast<long long>(t) * t + q2 * q + q2 * (q - t) * (q - t);
  if (lhs != x * (q + x) || x < 0)
    fail(Errc::NoSolution, "no parameter satisfies the system at t=" + std::to_string(t));
  return {t, x};
}

std::vector<ParameterSolution> all_parameter_solutions(int q) {
  std::vector<ParameterSolution> out;
  for (int t = 0; t <= q + 1; ++t) {
    try {
      out.push_back(solve_parameter_system(q, t));
    } catch (const Error& e) {
      if (e.code() != Errc::NoSolution) throw;
    }
  }
  return out;
}

int switch_boundary_t(const PatternMatrix& t) {
  const int dim = t.dim;
  const int q = dim - 1;
  if (dim < 2) fail(Errc::InvalidArgument, "pattern too small");
  const int corner = t.at(0, 0);
  const int u = t.at(0, 1);
  const int v = t.at(1, 0);
  const int w = t.at(1, 1);
  for (int j = 1; j < dim; ++j)
    if (t.at(0, j) != u) fail(Errc::InvalidArgument, "first row is not constant past the corner");
  for (int i = 1; i < dim; ++i)
    if (t.at(i, 0) != v)
      fail(Errc::InvalidArgument, "first column is not constant past the corner");
  for (int i = 1; i < dim; ++i)
    for (int j = 1; j < dim; ++j)
      if (t.at(i, j) != w) fail(Errc::InvalidArgument, "interior is not constant");
  // One boundary full (q), the other empty (0), in either orientation.
  if (!((u == 0 && v == q) || (u == q && v == 0)))
    fail(Errc::InvalidArgument, "boundary is not a full/empty split");
  if (w != q - corner) fail(Errc::InvalidArgument, "interior does not match the corner");
  return corner;
}

}  // namespace cl3
