#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "cl3/line_class.hpp"

namespace cl3 {

/// q^2+1 pairwise skew lines covering every point.
struct Spread {
  std::vector<Id> lines;  // ascending
};

/// PartitionFailure unless the lines are pairwise non-meeting and their
/// points tile the whole space.
void validate_spread(const Geometry& g, const Spread& s);

/// The spread of the quadratic field-extension model: points of PG(3,q)
/// read as pairs (a,b) over GF(q^2) = GF(q)[s]/(s^2 - d) with d the least
/// nonsquare; lines are b = m*a for each m, plus a = 0.
Spread regular_spread(const Geometry& g);

/// Images of the regular spread under n seeded pseudo-random collineations
/// (uniform matrix entries, retried until invertible, then a uniform
/// Frobenius power). Each image is validated.
std::vector<Spread> sample_spreads(const Geometry& g, int n, std::uint64_t seed);

long long spread_intersection(const LineClass& L, const Spread& s);

struct DegreeCheckResult {
  bool pass = false;
  long long expected_nonmember = 0;  // (q+1)x
  long long expected_member = 0;     // (q+1)x + q^2 - 1
  Id counterexample = -1;            // smallest violating line, -1 when passing
  long long counterexample_degree = -1;
};

/// The authoritative Cameron-Liebler test: every non-member must meet
/// (q+1)x members and every member (q+1)x + q^2 - 1 others. Lines are split
/// into contiguous chunks across workers; the reported counterexample is the
/// smallest violating id regardless of the worker count.
DegreeCheckResult degree_check(const LineClass& L, long long x, int workers = 1);

struct VerificationReport {
  long long size = 0;
  long long x = 0;
  DegreeCheckResult degree;
  long long regular_spread_intersection = -1;
  int spreads_sampled = 0;
  std::map<long long, int> spread_histogram;  // intersection value -> spreads
  bool spreads_all_x = false;
  std::map<int, long long> plane_spec;
  std::map<int, long long> point_spec;
  long long switchable_pair_count = 0;
  bool contained_plane = false;  // some plane's lines all members
  bool disjoint_plane = false;   // some plane's lines all non-members
  bool contained_star = false;
  bool disjoint_star = false;
  std::uint64_t seed = 0;

  bool pass() const { return degree.pass && spreads_all_x; }
};

/// Infers x from size (SizeNotMultiple when q^2+q+1 does not divide it),
/// then runs the degree check, spread sampling, spectra, the switchable-pair
/// scan, and the containment flags. Workers never change the result.
VerificationReport full_verify(const LineClass& L, int spread_samples, std::uint64_t seed,
                               int workers = 1);

enum class Comparison { Distinct, Indistinguishable };
const char* to_string(Comparison c);

/// Compares size and both spectra as multisets, directly and under the
/// point-plane duality swap. Indistinguishable does not prove equivalence;
/// Distinct rules it out. GeometryMismatch across different fields.
Comparison compare_invariants(const LineClass& a, const LineClass& b);

}  // namespace cl3
