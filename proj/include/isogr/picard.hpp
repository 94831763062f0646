#pragma once

#include <string>
#include <utility>
#include <vector>

#include "isogr/charts.hpp"
#include "isogr/cone.hpp"

namespace isogr {

// Basis of the divisor class lattice: H (the hyperplane pullback) followed
// by the exceptional classes D+_1..D+_np and D-_1..D-_nm.
//   LG(n):        np = nm = n-1
//   OG(n), n even: np = nm = n/2 - 1
//   OG(n), n odd:  np = floor(n/2) - 1, nm = floor(n/2)
struct PicardBasis {
  Family family = Family::LG;
  int n = 0;
  int nplus = 0;
  int nminus = 0;
  std::vector<std::string> labels;  // "H", "D+_1", ..., "D-_1", ...
};

PicardBasis picard_basis(Family family, int n);

// Divisor classes as integer coordinate vectors in the basis above;
// curve classes as the vectors of intersection numbers against the basis.
using DivClass = std::vector<Int>;

struct CurveClass {
  std::string label;
  std::vector<Int> pairings;  // against (H, D+_1.., D-_1..)
};

// The section classes B_k: pullbacks of the rank-stratum hyperplane
// sections, expanded in the basis.  Valid k: 0..n (LG), 0..floor(n/2) (OG).
DivClass class_B(Family family, int n, int k);

// Delta_k^± = -(k D_1^± + (k-1) D_2^± + ... + D_k^±); k = 0 gives zero.
DivClass class_Delta(Family family, int n, int sign, int k);

// The canonical class, written two independent ways: first directly in the
// basis, second as minus a sum of section classes minus all exceptional
// classes.  Both must agree; callers verify.
std::pair<DivClass, DivClass> class_K(Family family, int n);

// kind: 'g' for the fiber curves gamma_l, '+'/'-' for the exceptional
// curves zeta^±_j.
CurveClass curve_class(Family family, int n, char kind, int idx);

// Generators of the cone of effective curves, in the order
// gamma_0.., zeta^-_1.., zeta^+_1..
std::vector<CurveClass> mori_generators(Family family, int n);

Int pair_div_curve(const DivClass& d, const CurveClass& c);

// --- Nef cone, in the coordinates (h, a_1..a_na, b_1..b_nb) of the
// expression h*H + sum a_i Delta^-_i + sum b_j Delta^+_j.
// na = nminus, nb = nplus of the basis. ---

std::vector<IVec> nef_inequalities(Family family, int n);

// Extreme rays computed from the inequalities by double description.
std::vector<IVec> nef_extremal_rays(Family family, int n);

// The closed-form ray list H + Delta^+_i + Delta^-_j over admissible (i, j).
std::vector<IVec> nef_claimed(Family family, int n);

// Rays read off the chain polytope of the two-chain poset: one ray per
// antichain. Must coincide with the other two descriptions.
std::vector<IVec> chain_polytope_rays(Family family, int n);

// The poset itself (elements: a_1..a_na then b_1..b_nb).
Poset nef_poset(Family family, int n);

// Converts a nef-coordinate vector back to a divisor class.
DivClass nef_vector_to_div(Family family, int n, const IVec& v);

// Generators of the effective cone of divisors.
std::vector<DivClass> eff_generators(Family family, int n);

// The intersection row of a divisor class against all Mori generators.
std::vector<Int> pairing_row(Family family, int n, const DivClass& d);

struct FanoReport {
  std::string verdict;  // "fano" or "weak_fano"
  std::vector<std::pair<std::string, Int>> pairings;  // (-K) . C for each generator
};

// Pairs -K with every Mori generator.  All values positive -> "fano";
// all nonnegative with a zero -> "weak_fano"; a negative value would mean
// the two sides of the computation disagree and raises math_error.
FanoReport fano_classify(Family family, int n);

}  // namespace isogr
