#include <algorithm>
#include <set>
#include <vector>

#include "doctest.h"

#include "cl3/quadric.hpp"
#include "cl3/rng.hpp"
#include "helpers.hpp"

using cl3::BdBase;
using cl3::EllipticQuadric;
using cl3::Errc;
using cl3::Field;
using cl3::Geometry;
using cl3::Id;
using cl3::LineType;
using cl3::QuadraticForm;
using Code = cl3::Field::Code;

namespace {

// Independent count of the form's zero set.
long long count_zeros(const Geometry& g, const QuadraticForm& f) {
  long long n = 0;
  for (Id p = 0; p < g.n_points(); ++p)
    if (f.evaluate(g.field(), g.point(p)) == 0) ++n;
  return n;
}

}  // namespace

TEST_CASE("default form is x0*x1 + x2^2 - d*x3^2 with d the least nonsquare") {
  Field f3(3);
  QuadraticForm q3 = default_elliptic_form(f3);
  // d = 2 over GF(3), so c33 = -2 = 1
  QuadraticForm expect3;
  expect3.coeffs = {0, 1, 0, 0, 0, 0, 0, 1, 0, 1};
  CHECK(q3 == expect3);

  Field f5(5);
  QuadraticForm q5 = default_elliptic_form(f5);
  // d = 2 over GF(5), so c33 = -2 = 3
  QuadraticForm expect5;
  expect5.coeffs = {0, 1, 0, 0, 0, 0, 0, 1, 0, 3};
  CHECK(q5 == expect5);
}

TEST_CASE("evaluate expands the ten upper-triangular terms") {
  Field f(7);
  QuadraticForm form;
  form.coeffs = {1, 2, 3, 4, 5, 6, 1, 2, 3, 4};
  Geometry g{Field(7)};
  cl3::SeededRng rng(11);
  for (int n = 0; n < 200; ++n) {
    std::array<Code, 4> x;
    for (auto& c : x) c = static_cast<Code>(rng.below(7));
    int v[4] = {x[0], x[1], x[2], x[3]};
    int want = (1 * v[0] * v[0] + 2 * v[0] * v[1] + 3 * v[0] * v[2] +
                4 * v[0] * v[3] + 5 * v[1] * v[1] + 6 * v[1] * v[2] +
                1 * v[1] * v[3] + 2 * v[2] * v[2] + 3 * v[2] * v[3] +
                4 * v[3] * v[3]) %
               7;
    CHECK(form.evaluate(f, x) == Code(want));
  }
  // gram matrix reproduces the form: Q(x) = x^T B x
  auto B = form.gram(f);
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) CHECK(B[4 * r + c] == B[4 * c + r]);
  for (int n = 0; n < 100; ++n) {
    std::array<Code, 4> x;
    for (auto& c : x) c = static_cast<Code>(rng.below(7));
    Code acc = f.zero();
    for (int r = 0; r < 4; ++r)
      for (int c = 0; c < 4; ++c)
        acc = f.add(acc, f.mul(B[4 * r + c], f.mul(x[r], x[c])));
    CHECK(acc == form.evaluate(f, x));
  }
}

TEST_CASE("elliptic quadrics have q^2+1 points") {
  for (auto [p, h] : {std::pair{3, 1}, std::pair{5, 1}, std::pair{3, 2}}) {
    Geometry g{Field(p, h)};
    int q = g.q();
    EllipticQuadric quad(g, default_elliptic_form(g.field()));
    CHECK(quad.points().size() == std::size_t(q * q + 1));
    CHECK(count_zeros(g, quad.form()) == q * q + 1);
    for (Id pt : quad.points()) CHECK(quad.on_quadric(pt));
    long long on = 0;
    for (Id pt = 0; pt < g.n_points(); ++pt)
      if (quad.on_quadric(pt)) ++on;
    CHECK(on == q * q + 1);
    // e0 = (1,0,0,0) satisfies x0*x1 + x2^2 - d*x3^2 = 0
    std::array<Code, 4> e0{1, 0, 0, 0};
    CHECK(quad.on_quadric(g.point_id(e0)));
  }
}

TEST_CASE("line classification matches per-line point counts") {
  for (int q : {3, 5}) {
    Geometry g{Field(q)};
    EllipticQuadric quad(g, default_elliptic_form(g.field()));
    long long tan = 0, sec = 0, ext = 0;
    for (Id l = 0; l < g.n_lines(); ++l) {
      int hits = 0;
      for (Id p : g.line_points(l))
        if (quad.on_quadric(p)) ++hits;
      REQUIRE(hits <= 2);
      switch (hits) {
        case 0:
          CHECK(quad.line_type(l) == LineType::External);
          ++ext;
          break;
        case 1:
          CHECK(quad.line_type(l) == LineType::Tangent);
          CHECK(quad.on_quadric(quad.tangency_point(l)));
          CHECK(g.line_contains_point(l, quad.tangency_point(l)));
          ++tan;
          break;
        default:
          CHECK(quad.line_type(l) == LineType::Secant);
          ++sec;
      }
    }
    // (q^2+1)(q+1) tangents, q^2(q^2+1)/2 secants, externals the rest
    CHECK(tan == static_cast<long long>(q * q + 1) * (q + 1));
    CHECK(sec == static_cast<long long>(q * q) * (q * q + 1) / 2);
    CHECK(quad.n_tangents() == tan);
    CHECK(quad.n_secants() == sec);
    CHECK(quad.n_externals() == ext);
    CHECK(tan + sec + ext == g.n_lines());
  }
  Geometry g3{Field(3)};
  EllipticQuadric q3(g3, default_elliptic_form(g3.field()));
  CHECK(q3.n_tangents() == 40);
  CHECK(q3.n_secants() == 45);
  CHECK(q3.n_externals() == 45);
}

TEST_CASE("tangent labels are well defined and split evenly") {
  for (int q : {3, 5}) {
    Geometry g{Field(q)};
    const Field& f = g.field();
    EllipticQuadric quad(g, default_elliptic_form(f));
    long long label1 = 0, label2 = 0;
    for (Id l = 0; l < g.n_lines(); ++l) {
      if (quad.line_type(l) != LineType::Tangent) {
        CHECK(thrown_code([&] { quad.tangent_label(l); }) == Errc::NotTangent);
        CHECK(thrown_code([&] { quad.tangency_point(l); }) == Errc::NotTangent);
        continue;
      }
      int label = quad.tangent_label(l);
      REQUIRE((label == 1 || label == 2));
      (label == 1 ? label1 : label2)++;
      // the form takes a single square class on the off-quadric points
      for (Id p : g.line_points(l)) {
        if (quad.on_quadric(p)) continue;
        Code value = quad.form().evaluate(f, g.point(p));
        REQUIRE(value != f.zero());
        CHECK(f.is_square(value) == (label == 1));
      }
    }
    CHECK(label1 == label2);
    CHECK(label1 == static_cast<long long>(q * q + 1) * (q + 1) / 2);

    // each quadric point sees (q+1)/2 tangents of each label
    for (Id p : quad.points()) {
      int l1 = 0, l2 = 0;
      for (Id l : g.star(p)) {
        if (quad.line_type(l) != LineType::Tangent) continue;
        REQUIRE(quad.tangency_point(l) == p);
        (quad.tangent_label(l) == 1 ? l1 : l2)++;
      }
      CHECK(l1 == (q + 1) / 2);
      CHECK(l2 == (q + 1) / 2);
    }
  }
}

TEST_CASE("the polarity is an incidence-reversing involution") {
  for (int q : {3, 5}) {
    Geometry g{Field(q)};
    EllipticQuadric quad(g, default_elliptic_form(g.field()));
    for (Id p = 0; p < g.n_points(); ++p)
      CHECK(quad.polar_point(quad.polar_plane(p)) == p);
    for (Id h = 0; h < g.n_planes(); ++h)
      CHECK(quad.polar_plane(quad.polar_point(h)) == h);
    for (Id l = 0; l < g.n_lines(); ++l)
      CHECK(quad.polar_line(quad.polar_line(l)) == l);
    // incidence reversal: P on polar(R) iff R on polar(P)
    cl3::SeededRng rng(13);
    for (int n = 0; n < 300; ++n) {
      Id p = static_cast<Id>(rng.below(g.n_points()));
      Id r = static_cast<Id>(rng.below(g.n_points()));
      CHECK(g.incident(p, quad.polar_plane(r)) ==
            g.incident(r, quad.polar_plane(p)));
    }
  }
}

TEST_CASE("tangent planes meet the quadric exactly in their pole") {
  Geometry g{Field(3)};
  EllipticQuadric quad(g, default_elliptic_form(g.field()));
  std::set<Id> tangent_planes;
  for (Id p : quad.points()) {
    Id h = quad.tangent_plane(p);
    CHECK(h == quad.polar_plane(p));
    tangent_planes.insert(h);
    int on = 0;
    for (Id r : g.points_in_plane(h))
      if (quad.on_quadric(r)) ++on;
    CHECK(on == 1);
    CHECK(g.incident(p, h));
  }
  CHECK(tangent_planes.size() == quad.points().size());
  // all other planes cut a conic of q+1 points
  for (Id h = 0; h < g.n_planes(); ++h) {
    if (tangent_planes.count(h)) continue;
    int on = 0;
    for (Id r : g.points_in_plane(h))
      if (quad.on_quadric(r)) ++on;
    CHECK(on == g.q() + 1);
  }
  Id off = -1;
  for (Id p = 0; p < g.n_points(); ++p)
    if (!quad.on_quadric(p)) {
      off = p;
      break;
    }
  CHECK(thrown_code([&] { quad.tangent_plane(off); }) == Errc::InvalidArgument);
}

TEST_CASE("the polarity swaps secants and externals and permutes tangents") {
  for (int q : {3, 5}) {
    Geometry g{Field(q)};
    EllipticQuadric quad(g, default_elliptic_form(g.field()));
    for (Id l = 0; l < g.n_lines(); ++l) {
      switch (quad.line_type(l)) {
        case LineType::Secant:
          CHECK(quad.line_type(quad.polar_line(l)) == LineType::External);
          break;
        case LineType::External:
          CHECK(quad.line_type(quad.polar_line(l)) == LineType::Secant);
          break;
        case LineType::Tangent:
          CHECK(quad.line_type(quad.polar_line(l)) == LineType::Tangent);
          // a tangent meets its polar in the tangency point
          CHECK(quad.tangency_point(quad.polar_line(l)) ==
                quad.tangency_point(l));
          break;
      }
    }
    // the polarity acts on tangent labels uniformly: the image label only
    // depends on the source label
    int image_of_1 = quad.tangent_label(quad.polar_line([&] {
      for (Id l = 0;; ++l)
        if (quad.line_type(l) == LineType::Tangent && quad.tangent_label(l) == 1)
          return l;
    }()));
    for (Id l = 0; l < g.n_lines(); ++l) {
      if (quad.line_type(l) != LineType::Tangent) continue;
      int expect = quad.tangent_label(l) == 1 ? image_of_1 : 3 - image_of_1;
      CHECK(quad.tangent_label(quad.polar_line(l)) == expect);
    }
  }
}

TEST_CASE("bruen_drudge unions have the advertised size and partition") {
  for (int q : {3, 5}) {
    Geometry g{Field(q)};
    EllipticQuadric quad(g, default_elliptic_form(g.field()));
    auto s1 = quad.bruen_drudge(BdBase::Secants, 1);
    auto s2 = quad.bruen_drudge(BdBase::Secants, 2);
    auto e1 = quad.bruen_drudge(BdBase::Externals, 1);
    auto e2 = quad.bruen_drudge(BdBase::Externals, 2);
    long long expect =
        static_cast<long long>(q * q) * (q * q + 1) / 2 +
        static_cast<long long>(q * q + 1) * (q + 1) / 2;
    CHECK(s1.size() == expect);
    CHECK(s2.size() == expect);
    CHECK(e1.size() == expect);
    CHECK(e2.size() == expect);
    // S∪T^1 and E∪T^2 tile the line set, likewise S∪T^2 and E∪T^1
    for (Id l = 0; l < g.n_lines(); ++l) {
      CHECK(int(s1.contains(l)) + int(e2.contains(l)) == 1);
      CHECK(int(s2.contains(l)) + int(e1.contains(l)) == 1);
      bool is_sec = quad.line_type(l) == LineType::Secant;
      bool is_ext = quad.line_type(l) == LineType::External;
      if (is_sec) CHECK((s1.contains(l) && s2.contains(l)));
      if (is_ext) CHECK((e1.contains(l) && e2.contains(l)));
      if (quad.line_type(l) == LineType::Tangent)
        CHECK(s1.contains(l) == (quad.tangent_label(l) == 1));
    }
  }
  Geometry g3{Field(3)};
  EllipticQuadric q3(g3, default_elliptic_form(g3.field()));
  CHECK(q3.bruen_drudge(BdBase::Secants, 1).size() == 65);
  CHECK(thrown_code([&] { q3.bruen_drudge(BdBase::Secants, 3); }) ==
        Errc::InvalidArgument);
  CHECK(thrown_code([&] { q3.bruen_drudge(BdBase::Externals, 0); }) ==
        Errc::InvalidArgument);
}

TEST_CASE("non-elliptic forms are rejected") {
  Geometry g{Field(3)};
  // x0*x1 + x2*x3 is hyperbolic: (q+1)^2 zeros
  QuadraticForm hyp;
  hyp.coeffs[1] = 1;  // c01
  hyp.coeffs[8] = 1;  // c23
  CHECK(count_zeros(g, hyp) == 16);
  CHECK(thrown_code([&] { EllipticQuadric quad(g, hyp); }) == Errc::NotElliptic);
  // x0^2 is degenerate
  QuadraticForm deg;
  deg.coeffs[0] = 1;
  CHECK(thrown_code([&] { EllipticQuadric quad(g, deg); }) == Errc::NotElliptic);
}
