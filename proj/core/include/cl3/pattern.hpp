#pragma once

#include <vector>

#include "cl3/line_class.hpp"

namespace cl3 {

/// The (q+1)x(q+1) pattern of a line with respect to a class: rows are the
/// planes through the line, columns its points, entry (i,j) the number of
/// class members other than the line itself in pencil(P_j, pi_i).
struct PatternMatrix {
  int dim = 0;                 // q+1
  std::vector<int> entries;    // row-major, dim*dim
  std::vector<Id> row_planes;  // plane ids in row order
  std::vector<Id> col_points;  // point ids in column order
  Id line = -1;
  bool in_class = false;

  int at(int r, int c) const { return entries[static_cast<std::size_t>(r) * dim + c]; }
};

/// Rows and columns in ascending plane/point id order.
PatternMatrix pattern(const LineClass& L, Id line);

/// Same matrix with the given plane's row and point's column moved to the
/// front (remaining order preserved); NotIncident if they do not belong to
/// the line's planes/points.
PatternMatrix with_front(const PatternMatrix& t, Id plane, Id point);

struct PatternIdentityReport {
  bool row_col_sums = false;   // row/column sums count class members in each plane/star
  bool linear_relation = false;  // rowsum_k + colsum_l = x + (q+1)t_kl, membership-adjusted
  bool additivity = false;       // t_kl + t_rs = t_ks + t_rl
  bool square_sum = false;       // sum of squares matches the parameter formula
  bool all() const { return row_col_sums && linear_relation && additivity && square_sum; }
};

/// Checks the four pattern identities of a class claiming parameter x.
PatternIdentityReport check_pattern_identities(const PatternMatrix& t, const LineClass& L,
                                               long long x);

struct SwitchablePair {
  Id point = -1;
  Id plane = -1;
  bool operator==(const SwitchablePair&) const = default;
};

/// An incident pair is switchable when, of the two line sets
/// A = lines_in_plane(plane) outside the point's star and
/// B = star(point) outside the plane,
/// one is fully inside the class and the other disjoint from it. Either
/// orientation qualifies; the switched class swaps them, so switching is an
/// involution and the switched class is switchable at the same pair.
/// NotIncident on non-incident input.
bool is_switchable(const LineClass& L, Id point, Id plane);

/// All switchable incident pairs, ascending by (point, plane).
std::vector<SwitchablePair> switchable_pairs(const LineClass& L);

/// Exchange the full region for the empty one at a switchable pair. Size is
/// preserved (q^2 lines out, q^2 in) and pencil memberships are untouched.
/// NotIncident / ConditionsViolated on bad pairs.
LineClass switch_class(const LineClass& L, Id point, Id plane);

/// The raw exchange L ∪ A ∖ B (A, B as above) without the switchability
/// check; still requires incidence. The result need not have the
/// Cameron-Liebler property and the size may change.
LineClass switch_class_unchecked(const LineClass& L, Id point, Id plane);

struct ParameterSolution {
  int t = 0;
  long long x = 0;
  bool operator==(const ParameterSolution&) const = default;
};

/// Solves {2t + q^2 = x + t(q+1), t^2 + q^3 + q^2(q-t)^2 = x(q+x)} for the
/// given pencil count t in [0, q+1]. NoSolution when the system is
/// inconsistent at that t; the only solvable inputs are t=0 (x=q^2) and
/// t=(q+1)/2 (x=(q^2+1)/2).
ParameterSolution solve_parameter_system(int q, int t);

/// Every solvable (t, x) over t in [0, q+1], ascending in t.
std::vector<ParameterSolution> all_parameter_solutions(int q);

/// Reads the pencil count off a switchable-line pattern: one boundary line
/// (first row or first column) is constant, the rest of the matrix splits
/// into a constant complementary boundary and a constant interior, and the
/// corner entry is t. Both orientations are accepted; InvalidArgument when
/// the matrix has no such shape.
int switch_boundary_t(const PatternMatrix& t);

}  // namespace cl3
