#pragma once

#include <vector>

#include "isogr/rational.hpp"

namespace isogr {

// Integer vectors represent rays and inequality rows (an inequality row a
// means a . x >= 0).
using IVec = std::vector<Int>;

// Rescales a nonzero rational vector to the primitive integer vector on the
// same ray (gcd of entries 1, direction preserved).
IVec primitive(const std::vector<Rat>& v);

// Extreme rays of the pointed cone { x : a . x >= 0 for all rows }, computed
// by incremental double description with the combinatorial adjacency test
// and a final extremality filter.  Throws math_error("not_pointed") when the
// rows do not span: callers here only deal with pointed cones.
// The result is deduplicated, primitive, and sorted.
std::vector<IVec> extreme_rays_dd(const std::vector<IVec>& ineqs, int dim);

// Independent oracle: enumerates all (dim-1)-subsets of rows, solves for
// one-dimensional null spaces, keeps feasible directions whose tight set has
// rank dim-1.  Exponential, fine for the small systems used here.
std::vector<IVec> extreme_rays_bruteforce(const std::vector<IVec>& ineqs, int dim);

// Exact membership test: is x a nonnegative combination of the rays?
// Decided by a phase-one simplex over the rationals with Bland's rule.
bool in_cone(const std::vector<IVec>& rays, const std::vector<Rat>& x);

// Ray-set equality after primitivization and sorting.
bool same_ray_set(std::vector<IVec> a, std::vector<IVec> b);

// Finite strict partial order on {0, ..., size-1}.
struct Poset {
  int size = 0;
  std::vector<std::vector<bool>> lt;  // lt[i][j] == true iff i < j

  explicit Poset(int m = 0) : size(m), lt(m, std::vector<bool>(m, false)) {}
};

// All antichains (including the empty one), each sorted ascending, in
// lexicographic order of the element lists.
std::vector<std::vector<int>> antichains(const Poset& p);

}  // namespace isogr
