#include "isogr/indexing.hpp"

#include <algorithm>

namespace isogr {

namespace {

// All k-subsets of {lo, ..., hi} in lexicographic order.
void combinations(int lo, int hi, int k, std::vector<int>& cur,
                  std::vector<std::vector<int>>& out) {
  if (k == 0) {
    out.push_back(cur);
    return;
  }
  for (int v = lo; v <= hi - k + 1; ++v) {
    cur.push_back(v);
    combinations(v + 1, hi, k - 1, cur, out);
    cur.pop_back();
  }
}

// Subsets of {lo, ..., hi} with no two consecutive members, ordered
// lexicographically as tuples (empty first).
std::vector<std::vector<int>> sparse_subsets(int lo, int hi) {
  std::vector<std::vector<int>> all;
  std::vector<int> cur;
  for (int k = 0; k <= (hi - lo + 2) / 2; ++k) {
    std::vector<std::vector<int>> level;
    combinations(lo, hi, k, cur, level);
    for (auto& s : level) {
      bool ok = true;
      for (std::size_t i = 0; i + 1 < s.size(); ++i) {
        if (s[i + 1] <= s[i] + 1) {
          ok = false;
          break;
        }
      }
      if (ok) all.push_back(std::move(s));
    }
  }
  std::sort(all.begin(), all.end());
  return all;
}

}  // namespace

int gm_weight(const PluckerIndex& idx) {
  int w = 0;
  for (int e : idx.entries) {
    if (e > idx.n) ++w;
  }
  return w;
}

std::vector<PluckerIndex> enum_plucker(int n) {
  if (n < 1) throw usage_error("enum_plucker requires n >= 1");
  std::vector<std::vector<int>> subsets;
  std::vector<int> cur;
  combinations(1, 2 * n, n, cur, subsets);
  std::vector<PluckerIndex> out;
  out.reserve(subsets.size());
  for (auto& s : subsets) out.push_back(PluckerIndex{n, std::move(s)});
  return out;
}

std::vector<PluckerIndex> enum_weight_stratum(int n, int k) {
  if (k < 0 || k > n) throw usage_error("weight stratum index out of range");
  std::vector<PluckerIndex> out;
  for (auto& idx : enum_plucker(n)) {
    if (gm_weight(idx) == k) out.push_back(idx);
  }
  return out;
}

std::vector<std::vector<int>> enum_spinor_indices(int n) {
  if (n < 1) throw usage_error("enum_spinor_indices requires n >= 1");
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  for (int k = 0; k <= n; k += 2) {
    combinations(1, n, k, cur, out);
  }
  return out;
}

std::vector<Type2Tau> enum_type2(int n, int l) {
  if (n < 1 || l < 0 || l > n) throw usage_error("enum_type2 index out of range");
  std::vector<Type2Tau> out;
  for (const auto& p : sparse_subsets(1, l - 1)) {
    for (const auto& m : sparse_subsets(l + 1, n - 1)) {
      out.push_back(Type2Tau{p, m});
    }
  }
  return out;
}

}  // namespace isogr
