#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "isogr/charts.hpp"
#include "isogr/clifford.hpp"

namespace isogr {

// ---------------------------------------------------------------------------
// The rational map from the projective space of forms onto the isotropic
// Grassmannian, and the iterated blow-up that resolves it.
//
// Source coordinates: x00 together with the entries of an n x n matrix X,
// symmetric for the Lagrangian family and skew-symmetric for the orthogonal
// family.  The map sends (x00 : X) to the row span of (x00 * I | X).
// ---------------------------------------------------------------------------

struct LMPoint {
  Family family = Family::LG;
  int n = 0;
  Rat x00;
  Mat X;
};

// Validates the shape and the (skew-)symmetry of X, and that the
// homogeneous coordinates are not all zero.
LMPoint make_lm_point(Family family, int n, const Rat& x00, Mat X);

// Row span of (x00 * I | X), columns labeled (e_1..e_n, e*_1..e*_n).
// Undefined exactly where x00 = 0 and det X = 0: math_error("base_locus").
IsotropicPoint lm_eval(const LMPoint& p);

// The linear projections under which the composite with the ambient
// embedding becomes invertible: keep the Plucker coordinates of weight 0
// and 1 (Lagrangian), or the exterior degrees 0 and 2 (orthogonal).
// Throws math_error("indeterminate") when the kept part vanishes.
PluckerVector kal_project_lg(const PluckerVector& v);
ExtElement kal_project_og(const ExtElement& e);

// Read a source point back off the projected coordinates.
//
// Lagrangian: the coordinate at (1..n) recovers x00 (as x00^n), and the
// coordinate at (1..j^..n, n+i) equals (-1)^(n-j) x00^(n-1) X_ji.
// Orthogonal: the empty coefficient recovers x00 and the degree-two
// coefficient at {i,j} equals -X_ij / x00 after scaling.
// The result is projectively equal to the original whenever x00 != 0.
LMPoint lm_invert_lg(const PluckerVector& v);
LMPoint lm_invert_og(const ExtElement& e);

// Equality in the projective space of forms.
bool lm_equal_projective(const LMPoint& p, const LMPoint& q);

// ---------------------------------------------------------------------------
// Blow-up centers, evaluated at a point.
//
// Without x00 (the Y-chain): the locus rank(X) <= l, generated by the
// (l+1)-minors of X (Lagrangian) or by the principal sub-Pfaffians of size
// 2*(floor(l/2)+1) (orthogonal; sub-Pfaffians of that size vanish exactly
// when rank(X) <= l).
// With x00 (the Z-chain): {x00} for l = 0, and {x00} plus the generators of
// the rank(X) <= n-l locus for 1 <= l <= n-1.
// ---------------------------------------------------------------------------

struct CenterSpec {
  Family family = Family::LG;
  int n = 0;
  bool with_x00 = false;
  int l = 0;  // 0 .. n-1
};

std::vector<Rat> center_generators(const CenterSpec& spec, const LMPoint& p);

// Lengths of the blow-up towers over the source projective space:
// (full tower, reduced tower that skips the centers meeting the open locus
// where the map is an isomorphism).
std::pair<int, int> blowup_step_counts(Family family, int n);

// ---------------------------------------------------------------------------
// Degree of the generic fiber direction.
//
// In the chart at l = 0 every coordinate except b_1 is frozen at a generic
// nonzero rational; the ambient embedding is then sampled at the D+2 integer
// values b_1 = 0..D+1 (D = n for the Lagrangian family, floor(n/2) for the
// orthogonal one) and each coordinate's degree is read off by exact finite
// differences.  residual_ok records that level D+1 vanished identically
// (no coordinate exceeds degree D); unit_coordinate_ok that the
// distinguished coordinate stayed constantly 1.
// ---------------------------------------------------------------------------

struct FiberReport {
  int max_degree = -1;
  bool unit_coordinate_ok = false;
  bool residual_ok = false;
};

FiberReport fiber_degree_lg(int n, std::uint64_t seed);
FiberReport fiber_degree_og(int n, std::uint64_t seed);

}  // namespace isogr
