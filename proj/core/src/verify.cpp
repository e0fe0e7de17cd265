#include "cl3/verify.hpp"

#include <algorithm>
#include <thread>

#include "cl3/pattern.hpp"
#include "cl3/rng.hpp"

namespace cl3 {

void validate_spread(const Geometry& g, const Spread& s) {
  const long long want = static_cast<long long>(g.q()) * g.q() + 1;
  if (static_cast<long long>(s.lines.size()) != want)
    fail(Errc::PartitionFailure,
         "spread has " + std::to_string(s.lines.size()) + " lines, expected " +
             std::to_string(want));
  for (std::size_t i = 0; i < s.lines.size(); ++i)
    for (std::size_t j = i + 1; j < s.lines.size(); ++j)
      if (g.lines_meet(s.lines[i], s.lines[j]))
        fail(Errc::PartitionFailure, "spread lines " + std::to_string(s.lines[i]) + " and " +
                                         std::to_string(s.lines[j]) + " meet");
  std::vector<std::uint8_t> covered(g.n_points(), 0);
  for (Id l : s.lines)
    for (Id p : g.line_points(l)) {
      if (covered[p]) fail(Errc::PartitionFailure, "point covered twice");
      covered[p] = 1;
    }
  // q^2+1 skew lines of q+1 points each cover all points once counts add up.
}

Spread regular_spread(const Geometry& g) {
  const Field& f = g.field();
  const int q = f.q();
  Field::Code d = 0;
  for (Field::Code a = 1; a < q; ++a)
    if (!f.is_square(a)) {
      d = a;
      break;
    }
  // GF(q^2) element u0 + u1*s with s^2 = d.
  const auto mul2 = [&](Field::Code a0, Field::Code a1, Field::Code b0, Field::Code b1) {
    return std::pair<Field::Code, Field::Code>(
        f.add(f.mul(a0, b0), f.mul(d, f.mul(a1, b1))), f.add(f.mul(a0, b1), f.mul(a1, b0)));
  };

  Spread s;
  s.lines.reserve(static_cast<std::size_t>(q) * q + 1);
  for (Field::Code m0 = 0; m0 < q; ++m0)
    for (Field::Code m1 = 0; m1 < q; ++m1) {
      // Line {(a, m*a)}: spanned by a = 1 and a = s.
      const auto ms = mul2(m0, m1, 0, 1);
      const std::array<Field::Code, 4> pa{1, 0, m0, m1};
      const std::array<Field::Code, 4> pb{0, 1, ms.first, ms.second};
      s.lines.push_back(g.line_through(g.point_id(pa), g.point_id(pb)));
    }
  const std::array<Field::Code, 4> za{0, 0, 1, 0};
  const std::array<Field::Code, 4> zb{0, 0, 0, 1};
  s.lines.push_back(g.line_through(g.point_id(za), g.point_id(zb)));
  std::sort(s.lines.begin(), s.lines.end());
  validate_spread(g, s);
  return s;
}

std::vector<Spread> sample_spreads(const Geometry& g, int n, std::uint64_t seed) {
  if (n < 1) fail(Errc::InvalidArgument, "need at least one sample");
  const Field& f = g.field();
  SeededRng rng(seed);
  const Spread base = regular_spread(g);
  std::vector<Spread> out;
  out.reserve(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    std::array<Field::Code, 16> m;
    std::optional<std::array<Field::Code, 16>> inv;
    do {
      for (auto& c : m) c = static_cast<Field::Code>(rng.below(f.q()));
      inv = invert4(f, m);
    } while (!inv);
    const int phi = static_cast<int>(rng.below(static_cast<std::uint64_t>(f.h())));
    const Collineation col{m, *inv, phi};
    Spread img;
    img.lines.reserve(base.lines.size());
    for (Id l : base.lines) img.lines.push_back(apply_to_line(g, col, l));
    std::sort(img.lines.begin(), img.lines.end());
    validate_spread(g, img);
    out.push_back(std::move(img));
  }
  return out;
}

long long spread_intersection(const LineClass& L, const Spread& s) {
  long long count = 0;
  for (Id l : s.lines)
    if (L.contains(l)) ++count;
  return count;
}

namespace {

// Bilinear Plucker pairing against a packed member tuple.
inline bool meets(const Field& f, const Field::Code* t, const Field::Code* m) {
  Field::Code acc = f.mul(t[0], m[5]);
  acc = f.sub(acc, f.mul(t[1], m[4]));
  acc = f.add(acc, f.mul(t[2], m[3]));
  acc = f.add(acc, f.mul(t[5], m[0]));
  acc = f.sub(acc, f.mul(t[4], m[1]));
  acc = f.add(acc, f.mul(t[3], m[2]));
  return acc == 0;
}

}  // namespace

DegreeCheckResult degree_check(const LineClass& L, long long x, int workers) {
  const Geometry& g = L.geometry();
  const Field& f = g.field();
  const Id n = g.n_lines();
  const long long q = g.q();

  DegreeCheckResult r;
  r.expected_nonmember = (q + 1) * x;
  r.expected_member = (q + 1) * x + q * q - 1;

  const std::vector<Id> members = L.member_ids();
  std::vector<Field::Code> mp(members.size() * 6);
  for (std::size_t k = 0; k < members.size(); ++k) {
    auto t = g.plucker(members[k]);
    std::copy(t.begin(), t.end(), mp.begin() + k * 6);
  }

  if (workers < 1) workers = 1;
  if (workers > n) workers = n;

  struct ChunkResult {
    Id violator = -1;
    long long degree = -1;
  };
  std::vector<ChunkResult> chunk(workers);

  const auto run = [&](int w) {
    const Id lo = static_cast<Id>(static_cast<long long>(n) * w / workers);
    const Id hi = static_cast<Id>(static_cast<long long>(n) * (w + 1) / workers);
    for (Id l = lo; l < hi; ++l) {
      const Field::Code* t = g.plucker(l).data();
      long long count = 0;
      for (std::size_t k = 0; k < members.size(); ++k)
        if (meets(f, t, &mp[k * 6])) ++count;
      // A member meets itself (the self-pairing is the Plucker relation).
      const long long expected =
          L.contains(l) ? r.expected_member + 1 : r.expected_nonmember;
      if (count != expected) {
        chunk[w].violator = l;
        chunk[w].degree = L.contains(l) ? count - 1 : count;
        return;  // ids above l in this chunk are larger; smaller chunks run independently
      }
    }
  };

  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) pool.emplace_back(run, w);
    for (auto& th : pool) th.join();
  }

  r.pass = true;
  for (const ChunkResult& c : chunk) {
    if (c.violator < 0) continue;
    if (r.pass || c.violator < r.counterexample) {
      r.counterexample = c.violator;
      r.counterexample_degree = c.degree;
    }
    r.pass = false;
  }
  return r;
}

VerificationReport full_verify(const LineClass& L, int spread_samples, std::uint64_t seed,
                               int workers) {
  const Geometry& g = L.geometry();
  VerificationReport r;
  r.seed = seed;
  r.size = L.size();
  const long long per = g.lines_per_point();
  if (r.size % per != 0)
    fail(Errc::SizeNotMultiple, "size " + std::to_string(r.size) + " is not a multiple of " +
                                    std::to_string(per));
  r.x = r.size / per;

  r.degree = degree_check(L, r.x, workers);

  r.regular_spread_intersection = spread_intersection(L, regular_spread(g));
  r.spreads_all_x = r.regular_spread_intersection == r.x;
  r.spreads_sampled = spread_samples;
  if (spread_samples > 0) {
    for (const Spread& s : sample_spreads(g, spread_samples, seed)) {
      const long long v = spread_intersection(L, s);
      ++r.spread_histogram[v];
      if (v != r.x) r.spreads_all_x = false;
    }
  }

  const std::vector<int> planes = plane_counts(L);
  const std::vector<int> points = point_counts(L);
  for (int c : planes) {
    ++r.plane_spec[c];
    if (c == 0) r.disjoint_plane = true;
    if (c == per) r.contained_plane = true;
  }
  for (int c : points) {
    ++r.point_spec[c];
    if (c == 0) r.disjoint_star = true;
    if (c == per) r.contained_star = true;
  }

  r.switchable_pair_count = static_cast<long long>(switchable_pairs(L).size());
  return r;
}

const char* to_string(Comparison c) {
  return c == Comparison::Distinct ? "Distinct" : "Indistinguishable";
}

Comparison compare_invariants(const LineClass& a, const LineClass& b) {
  if (&a.geometry() != &b.geometry() && !a.geometry().field().same_as(b.geometry().field()))
    fail(Errc::GeometryMismatch, "classes live in different geometries");
  if (a.size() != b.size()) return Comparison::Distinct;
  const auto pa = plane_spectrum(a), qa = point_spectrum(a);
  const auto pb = plane_spectrum(b), qb = point_spectrum(b);
  if (pa == pb && qa == qb) return Comparison::Indistinguishable;
  // A duality swaps the roles of planes and points.
  if (pa == qb && qa == pb) return Comparison::Indistinguishable;
  return Comparison::Distinct;
}

}  // namespace cl3
