#pragma once

#include <map>
#include <utility>
#include <vector>

#include "isogr/indexing.hpp"
#include "isogr/matrix.hpp"

namespace isogr {

// LG: subspaces Lagrangian for the symplectic form
//       omega((v1,a1),(v2,a2)) = a2(v1) - a1(v2);
// OG: subspaces isotropic for the symmetric form
//       beta((v1,a1),(v2,a2)) = a1(v2) + a2(v1),
// both on the 2n-dimensional space V + V* with columns ordered
// (e_1..e_n, e*_1..e*_n).
enum class Family { LG, OG };

using CoordKey = std::pair<int, int>;

// ---------------------------------------------------------------------------
// Chart coordinates.  Coordinates absent from a map are treated as zero, so
// a default-constructed coordinate set is the chart origin.
//
// All index keys are 1-based and match the display names used by the CLI:
// a_i, b_i, y_i, x_i_j (off-diagonal block), xi_i_j (always stored with
// i < j).
// ---------------------------------------------------------------------------

// Layered chart of the Lagrangian family on the open cell around
// span(e_{l+1},...,e_n, e*_1,...,e*_l).
struct ChartCoordsI {
  int n = 0;
  int l = 0;
  std::map<int, Rat> a;        // keys n-l+1 .. n
  std::map<int, Rat> b;        // keys l+1 .. n
  std::map<CoordKey, Rat> x;   // (i,j) with 1 <= i <= l < j <= n
  std::map<CoordKey, Rat> xi;  // strictly upper pairs inside a block
};

// Variant of the Lagrangian chart in which the layers selected by tau are
// glued into 2x2 blocks M = [[y_k, 1], [1, y_{k+1}]]; defined on the open
// locus y_k * y_{k+1} != 1.
struct ChartCoordsII {
  int n = 0;
  int l = 0;
  Type2Tau tau;
  std::map<int, Rat> a;
  std::map<int, Rat> b;
  std::map<int, Rat> y;  // keys k and k+1 for every k in tau
  std::map<CoordKey, Rat> x;
  std::map<CoordKey, Rat> xi;
};

// Layered chart of the orthogonal family (l must be even); layers come in
// antisymmetric 2x2 blocks J = [[0, 1], [-1, 0]].
struct ChartCoordsO {
  int n = 0;
  int l = 0;
  std::map<int, Rat> a;        // keys floor(n/2)-l/2+1 .. floor(n/2)
  std::map<int, Rat> b;        // keys l/2+1 .. floor(n/2)
  std::map<CoordKey, Rat> x;   // (i,j) with 1 <= i <= l < j <= n
  std::map<CoordKey, Rat> xi;  // stored with first index < second index
};

// The exact sets of coordinate keys a chart admits; used for validation,
// for random fills in the randomized suites, and to list CLI names.
struct ChartShape {
  std::vector<int> a_keys;
  std::vector<int> b_keys;
  std::vector<int> y_keys;
  std::vector<CoordKey> x_keys;
  std::vector<CoordKey> xi_keys;
};

ChartShape chart_shape(const ChartCoordsI& c);
ChartShape chart_shape(const ChartCoordsII& c);
ChartShape chart_shape(const ChartCoordsO& c);

// ---------------------------------------------------------------------------
// Chart matrices.
//
// chart_layout returns the n x 2n matrix in block form
//     [ Z      | 0       | I_l | X ]
//     [ -X^T   | I_{n-l} | 0   | W ]
// with Z = sum of layer products times rank-one (LG) or rank-two (OG)
// symmetric layers, W likewise.  In this layout the columns are already
// labeled (e_1..e_n, e*_1..e*_n) and the row span is isotropic.
//
// to_standard rescales the dual-half columns by (-1)^(n-1).  This sign
// normalization makes the distinguished maximal minors of the chart matrix
// equal to plain monomials in the layer coordinates (see
// pullback_monomial); it preserves isotropy.
// ---------------------------------------------------------------------------

Mat chart_layout(const ChartCoordsI& c);
Mat chart_layout(const ChartCoordsII& c);  // math_error("open_locus") if y_k y_{k+1} = 1
Mat chart_layout(const ChartCoordsO& c);

Mat to_standard(const Mat& layout);

// A point of the isotropic Grassmannian: an n x 2n matrix of full rank whose
// row span is isotropic, with columns labeled (e_1..e_n, e*_1..e*_n).
struct IsotropicPoint {
  Family family = Family::LG;
  int n = 0;
  Mat m;
};

IsotropicPoint chart_point(const ChartCoordsI& c);
IsotropicPoint chart_point(const ChartCoordsII& c);
IsotropicPoint chart_point(const ChartCoordsO& c);

// Bilinear/quadratic form values between rows of an n x 2n matrix.
Rat omega_form(const Mat& m, std::size_t r1, std::size_t r2);
Rat beta_form(const Mat& m, std::size_t r1, std::size_t r2);
Rat q_form(const Mat& m, std::size_t r);

// True iff the defining form of the family vanishes on the row span
// (for OG: all q values and all pairwise beta values are zero).
bool is_isotropic(const IsotropicPoint& p);

// ---------------------------------------------------------------------------
// Plucker coordinates.
// ---------------------------------------------------------------------------

// Sparse vector of maximal minors; zero coordinates are omitted.  Keys are
// the sorted column labels, compared lexicographically.
struct PluckerVector {
  int n = 0;
  std::map<std::vector<int>, Rat> coords;
};

// All maximal minors, by index.  Throws math_error("rank") when the matrix
// does not have full rank n (the embedding is undefined there).
PluckerVector plucker_embed(const IsotropicPoint& p);

// The part of weight exactly k (k = number of column labels > n); the result
// may be identically zero.
PluckerVector weight_truncate(const PluckerVector& v, int k);

// Scales so the first nonzero coordinate in lexicographic order is 1.
PluckerVector normalize_projective(PluckerVector v);

bool proj_equal(const PluckerVector& x, const PluckerVector& y);

// Closed form of the distinguished minor on columns (k+1, ..., n+k) of the
// standard chart matrix: 1 at k = l, a cascade product of a-coordinates for
// k < l and of b-coordinates for k > l.
Rat distinguished_minor_formula(const ChartCoordsI& c, int k);

// Evaluates that minor on chart_point(c) and checks it against the closed
// form; a mismatch is an internal bug (logic_error).  Returns the value.
Rat pullback_monomial(const ChartCoordsI& c, int k);

// ---------------------------------------------------------------------------
// Rank stratum ideals, restricted to a chart.
//
// On the chart around span(e_{l+1},..,e_n,e*_1,..,e*_l), the closure of the
// rank-k stratum is cut out by:
//   LG:  all (l-k)-minors of Z   (k < l),  all (k-l)-minors of W  (k > l),
//   OG:  Pfaffians of principal (l-2k)-submatrices of Z  (2k < l),
//        Pfaffians of principal (2k-l)-submatrices of W  (2k > l),
// and the unit ideal {1} when the stratum meets the chart center (k = l,
// resp. 2k = l).
// ---------------------------------------------------------------------------

struct IdealSpec {
  Family family = Family::LG;
  int n = 0;
  int l = 0;  // chart label; even for OG
  int k = 0;  // stratum: rank k (LG), rank 2k (OG)
};

std::vector<Rat> ideal_generators(const IdealSpec& spec, const ChartCoordsI& c);
std::vector<Rat> ideal_generators(const IdealSpec& spec, const ChartCoordsO& c);

}  // namespace isogr
