#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "isogr/charts.hpp"
#include "isogr/matrix.hpp"

namespace isogr {

// Element of the exterior algebra on the dual basis e*_1, ..., e*_n.
// A monomial e*_{i_1} ^ ... ^ e*_{i_k} (i_1 < ... < i_k) is stored as the
// bitmask with bits i_t - 1 set; coefficients of value zero are omitted.
struct ExtElement {
  int n = 0;
  std::map<std::uint32_t, Rat> terms;

  friend bool operator==(const ExtElement& x, const ExtElement& y) {
    return x.n == y.n && x.terms == y.terms;
  }
};

std::uint32_t subset_to_mask(const std::vector<int>& subset);  // 1-based entries
std::vector<int> mask_to_subset(std::uint32_t mask);

// Lexicographic order on the sorted subsets (not on the raw masks); this is
// the order used for serialization and projective normalization.
bool subset_lex_less(std::uint32_t a, std::uint32_t b);

ExtElement ext_unit(int n);  // the scalar 1

// Left exterior multiplication by e*_j (1-based j).
ExtElement wedge(int j, const ExtElement& e);

// Contraction against e_j (1-based j), the antiderivation dual to wedge.
ExtElement contract(int j, const ExtElement& e);

// Action of (v, alpha) in V + V*: wedge by alpha plus contraction by v.
// Squares to q(v, alpha) = alpha(v) times the identity.
ExtElement clifford_act(const std::vector<Rat>& v, const std::vector<Rat>& alpha,
                        const ExtElement& e);

// Scales so the lexicographically first nonzero coefficient is 1.
ExtElement normalize_projective(ExtElement e);

bool ext_proj_equal(const ExtElement& x, const ExtElement& y);

// The spinor annihilated by the graph subspace L_A = { u - A u } of the
// chart around span(e_{l+1},..,e_n,e*_1,..,e*_l): the sum over even index
// sets S of Pf(A_S) times the reduction of e_S acting on
// e*_{j_1} ^ ... ^ e*_{j_s} ^ e*_1 ^ ... ^ e*_l, where the entries of S that
// exceed l contribute wedges and the rest contribute contractions.
// A must be skew (math_error otherwise).
ExtElement pure_spinor(int n, int l, const Mat& A);

// True iff every row of the graph matrix of A annihilates pure_spinor(A).
bool annihilation_check(int n, int l, const Mat& A);

// Row span of the graph matrix of A in the chart around
// span(e_{l+1},..,e_n,e*_1,..,e*_l): row c is u_c - sum_s A[c][s] u'_s with
// u = (e*_1..e*_l, e_{l+1}..e_n) and u' = (e_1..e_l, e*_{l+1}..e*_n).
Mat graph_rows(int n, int l, const Mat& A);

// Reads the matrix A off an orthogonal point lying in the chart with label l
// and returns its spinor.  Throws math_error("chart") when the point lies
// outside the chart (the u-column block is singular) and
// math_error("not_skew") when the normalized block is not skew, i.e. the
// point is not isotropic for the symmetric form.
ExtElement spinor_embed(const IsotropicPoint& p, int l);

// Degree truncation: keeps the terms whose monomial size is in `degrees`.
ExtElement degree_truncate(const ExtElement& e, const std::vector<int>& degrees);

}  // namespace isogr
