#pragma once

#include <vector>

#include "isogr/errors.hpp"

namespace isogr {

// Index of a maximal minor of an n x 2n matrix: n strictly increasing column
// labels drawn from {1, ..., 2n}.
struct PluckerIndex {
  int n = 0;
  std::vector<int> entries;

  friend bool operator==(const PluckerIndex& x, const PluckerIndex& y) {
    return x.n == y.n && x.entries == y.entries;
  }
  friend bool operator<(const PluckerIndex& x, const PluckerIndex& y) {
    return x.entries < y.entries;
  }
};

// Number of entries in the dual half, i.e. entries > n.
int gm_weight(const PluckerIndex& idx);

// All C(2n, n) indices in lexicographic order.
std::vector<PluckerIndex> enum_plucker(int n);

// The indices of weight exactly k, in lexicographic order.
std::vector<PluckerIndex> enum_weight_stratum(int n, int k);

// Even-size subsets of {1, ..., n}, grouped by size and lexicographic within
// each size.  These index the coordinates of a half-spinor.
std::vector<std::vector<int>> enum_spinor_indices(int n);

// A pair of "sparse" index sets selecting which layers of a chart are glued
// into 2 x 2 blocks: plus entries lie in {1, ..., l-1}, minus entries in
// {l+1, ..., n-1}, and within each list consecutive entries differ by at
// least 2.
struct Type2Tau {
  std::vector<int> plus;
  std::vector<int> minus;

  friend bool operator==(const Type2Tau& x, const Type2Tau& y) {
    return x.plus == y.plus && x.minus == y.minus;
  }
};

// All admissible pairs for the given (n, l), ordered lexicographically by
// (plus, minus).  The empty pair comes first.
std::vector<Type2Tau> enum_type2(int n, int l);

}  // namespace isogr
