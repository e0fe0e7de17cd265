#include "cl3/quadric.hpp"

#include <algorithm>
#include <stdexcept>

namespace cl3 {

namespace {
// Index into the upper-triangular coefficient list for i <= j.
constexpr int tri_index(int i, int j) {
  int k = 0;
  for (int r = 0; r < i; ++r) k += 4 - r;
  return k + (j - i);
}
}  // namespace

Field::Code QuadraticForm::evaluate(const Field& f, std::span<const Field::Code, 4> x) const {
  Field::Code acc = 0;
  int k = 0;
  for (int i = 0; i < 4; ++i)
    for (int j = i; j < 4; ++j)
      acc = f.add(acc, f.mul(coeffs[k++], f.mul(x[i], x[j])));
  return acc;
}

std::array<Field::Code, 16> QuadraticForm::gram(const Field& f) const {
  const Field::Code half = f.inv(f.add(1, 1));
  std::array<Field::Code, 16> b{};
  for (int i = 0; i < 4; ++i) {
    for (int j = i; j < 4; ++j) {
      const Field::Code c = coeffs[tri_index(i, j)];
      if (i == j) {
        b[4 * i + i] = c;
      } else {
        const Field::Code v = f.mul(c, half);
        b[4 * i + j] = v;
        b[4 * j + i] = v;
      }
    }
  }
  return b;
}

QuadraticForm default_elliptic_form(const Field& f) {
  Field::Code d = 0;
  for (Field::Code a = 1; a < f.q(); ++a)
    if (!f.is_square(a)) {
      d = a;
      break;
    }
  QuadraticForm form;
  form.coeffs[tri_index(0, 1)] = 1;
  form.coeffs[tri_index(2, 2)] = 1;
  form.coeffs[tri_index(3, 3)] = f.neg(d);
  return form;
}

EllipticQuadric::EllipticQuadric(const Geometry& g, QuadraticForm form)
    : geom_(&g), form_(form) {
  const Field& f = g.field();
  const int q = g.q();

  gram_ = form_.gram(f);
  auto inv = invert4(f, gram_);
  if (!inv) fail(Errc::NotElliptic, "degenerate quadratic form");
  gram_inv_ = *inv;

  on_.assign(g.n_points(), 0);
  for (Id p = 0; p < g.n_points(); ++p) {
    if (form_.evaluate(f, g.point(p)) == 0) {
      on_[p] = 1;
      quadric_points_.push_back(p);
    }
  }
  const long long want = static_cast<long long>(q) * q + 1;
  if (static_cast<long long>(quadric_points_.size()) != want)
    fail(Errc::NotElliptic, "zero set has " + std::to_string(quadric_points_.size()) +
                                " points, expected " + std::to_string(want));

  type_.assign(g.n_lines(), 0);
  label_.assign(g.n_lines(), 0);
  touch_.assign(g.n_lines(), -1);
  for (Id l = 0; l < g.n_lines(); ++l) {
    int hits = 0;
    Id touch = -1;
    Id off = -1;
    for (Id p : g.line_points(l)) {
      if (on_[p]) {
        ++hits;
        touch = p;
      } else {
        off = p;
      }
    }
    if (hits == 1) {
      type_[l] = static_cast<std::uint8_t>(LineType::Tangent);
      touch_[l] = touch;
      label_[l] = f.is_square(form_.evaluate(f, g.point(off))) ? 1 : 2;
      ++n_tangents_;
    } else if (hits == 2) {
      type_[l] = static_cast<std::uint8_t>(LineType::Secant);
      ++n_secants_;
    } else if (hits == 0) {
      type_[l] = static_cast<std::uint8_t>(LineType::External);
      ++n_externals_;
    } else {
      fail(Errc::NotElliptic, "line meets the zero set in " + std::to_string(hits) + " points");
    }
  }
}

int EllipticQuadric::tangent_label(Id line) const {
  if (line_type(line) != LineType::Tangent) fail(Errc::NotTangent, "line is not a tangent");
  return label_[line];
}

Id EllipticQuadric::tangency_point(Id line) const {
  if (line_type(line) != LineType::Tangent) fail(Errc::NotTangent, "line is not a tangent");
  return touch_[line];
}

Id EllipticQuadric::tangent_plane(Id point) const {
  if (!on_quadric(point)) fail(Errc::InvalidArgument, "point is not on the quadric");
  return polar_plane(point);
}

Id EllipticQuadric::polar_plane(Id point) const {
  const Field& f = geom_->field();
  auto x = geom_->point(point);
  std::array<Field::Code, 4> w{};
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) w[r] = f.add(w[r], f.mul(gram_[4 * r + c], x[c]));
  return geom_->plane_id(w);
}

Id EllipticQuadric::polar_point(Id plane) const {
  const Field& f = geom_->field();
  auto n = geom_->plane(plane);
  std::array<Field::Code, 4> x{};
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) x[r] = f.add(x[r], f.mul(gram_inv_[4 * r + c], n[c]));
  return geom_->point_id(x);
}

Id EllipticQuadric::polar_line(Id line) const {
  auto pts = geom_->line_points(line);
  const Id pa = polar_plane(pts[0]);
  const Id pb = polar_plane(pts[1]);
  // The polar line is the intersection of the two polar planes.
  auto la = geom_->lines_in_plane(pa);
  auto lb = geom_->lines_in_plane(pb);
  std::size_t i = 0, j = 0;
  while (i < la.size() && j < lb.size()) {
    if (la[i] < lb[j]) {
      ++i;
    } else if (lb[j] < la[i]) {
      ++j;
    } else {
      return la[i];
    }
  }
  throw std::logic_error("polar planes share no line");
}

LineClass EllipticQuadric::bruen_drudge(BdBase base, int label) const {
  if (label != 1 && label != 2) fail(Errc::InvalidArgument, "tangent label must be 1 or 2");
  const LineType keep = base == BdBase::Secants ? LineType::Secant : LineType::External;
  LineClass out(*geom_);
  for (Id l = 0; l < geom_->n_lines(); ++l) {
    const LineType t = line_type(l);
    if (t == keep || (t == LineType::Tangent && label_[l] == label)) out.set(l, true);
  }
  return out;
}

}  // namespace cl3
