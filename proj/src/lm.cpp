#include "isogr/lm.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

#include "isogr/prng.hpp"

namespace isogr {

namespace {

void check(bool ok, const std::string& what) {
  if (!ok) throw usage_error(what);
}

bool all_zero(const Mat& m) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (m.at(i, j) != 0) return false;
    }
  }
  return true;
}

void subsets_rec(std::size_t from, std::size_t top, std::size_t size,
                 std::vector<std::size_t>& cur,
                 std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == size) {
    out.push_back(cur);
    return;
  }
  for (std::size_t v = from; v + (size - cur.size()) <= top; ++v) {
    cur.push_back(v);
    subsets_rec(v + 1, top, size, cur, out);
    cur.pop_back();
  }
}

// All strictly increasing index sets of the given size inside {0..top-1}.
std::vector<std::vector<std::size_t>> subsets_of_size(std::size_t top,
                                                      std::size_t size) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  subsets_rec(0, top, size, cur, out);
  return out;
}

// Degree of the polynomial sampled at consecutive integers, by finite
// differences.  `cap` is the design bound: a nonzero difference above it
// clears residual_ok.  The sample vector has cap + 2 entries.
int table_degree(const std::vector<Rat>& vals, int cap, bool& residual_ok) {
  std::vector<Rat> row = vals;
  int level = 0;
  int last_nonzero = -1;
  for (;;) {
    if (std::any_of(row.begin(), row.end(),
                    [](const Rat& v) { return v != 0; })) {
      last_nonzero = level;
    }
    if (row.size() <= 1) break;
    std::vector<Rat> next(row.size() - 1);
    for (std::size_t i = 0; i + 1 < row.size(); ++i) next[i] = row[i + 1] - row[i];
    row = std::move(next);
    ++level;
  }
  if (last_nonzero > cap) residual_ok = false;
  return std::max(last_nonzero, 0);
}

}  // namespace

LMPoint make_lm_point(Family family, int n, const Rat& x00, Mat X) {
  check(n >= 1, "n must be at least 1");
  check(family == Family::LG || n >= 2, "the orthogonal family needs n >= 2");
  check(X.rows() == static_cast<std::size_t>(n) &&
            X.cols() == static_cast<std::size_t>(n),
        "X must be an n x n matrix");
  if (family == Family::LG) {
    for (std::size_t i = 0; i < X.rows(); ++i) {
      for (std::size_t j = i + 1; j < X.cols(); ++j) {
        if (X.at(i, j) != X.at(j, i)) {
          throw math_error("not_symmetric", "X must be symmetric");
        }
      }
    }
  } else {
    require_skew(X);
  }
  if (x00 == 0 && all_zero(X)) {
    throw usage_error("the homogeneous coordinates cannot all vanish");
  }
  return LMPoint{family, n, x00, std::move(X)};
}

IsotropicPoint lm_eval(const LMPoint& p) {
  const std::size_t n = static_cast<std::size_t>(p.n);
  if (p.x00 == 0 && det(p.X) == 0) {
    throw math_error("base_locus",
                     "the map is undefined where x00 = 0 and det X = 0");
  }
  Mat m(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    m.at(i, i) = p.x00;
    for (std::size_t j = 0; j < n; ++j) m.at(i, n + j) = p.X.at(i, j);
  }
  return IsotropicPoint{p.family, p.n, std::move(m)};
}

PluckerVector kal_project_lg(const PluckerVector& v) {
  PluckerVector out;
  out.n = v.n;
  for (const auto& [idx, val] : v.coords) {
    const long w = std::count_if(idx.begin(), idx.end(),
                                 [&](int c) { return c > v.n; });
    if (w <= 1) out.coords.emplace(idx, val);
  }
  if (out.coords.empty()) {
    throw math_error("indeterminate",
                     "the weight-(0,1) part of the embedding vanishes");
  }
  return out;
}

ExtElement kal_project_og(const ExtElement& e) {
  ExtElement out = degree_truncate(e, {0, 2});
  if (out.terms.empty()) {
    throw math_error("indeterminate",
                     "the degree-(0,2) part of the embedding vanishes");
  }
  return out;
}

LMPoint lm_invert_lg(const PluckerVector& v) {
  const int n = v.n;
  check(n >= 1, "n must be at least 1");
  const auto get = [&v](const std::vector<int>& idx) -> Rat {
    const auto it = v.coords.find(idx);
    return it == v.coords.end() ? Rat(0) : it->second;
  };
  std::vector<int> full(n);
  std::iota(full.begin(), full.end(), 1);
  const Rat x00 = get(full);
  Mat X(n, n);
  bool any = x00 != 0;
  for (int j = 1; j <= n; ++j) {
    for (int i = 1; i <= n; ++i) {
      std::vector<int> idx;
      for (int c = 1; c <= n; ++c) {
        if (c != j) idx.push_back(c);
      }
      idx.push_back(n + i);
      Rat coeff = get(idx);
      if ((n - j) % 2 != 0) coeff = -coeff;
      if (coeff != 0) any = true;
      X.at(j - 1, i - 1) = coeff;
    }
  }
  if (!any) {
    throw math_error("indeterminate", "all projected coordinates vanish");
  }
  return make_lm_point(Family::LG, n, x00, std::move(X));
}

LMPoint lm_invert_og(const ExtElement& e) {
  const int n = e.n;
  check(n >= 2, "the orthogonal family needs n >= 2");
  const auto get = [&e](std::uint32_t mask) -> Rat {
    const auto it = e.terms.find(mask);
    return it == e.terms.end() ? Rat(0) : it->second;
  };
  const Rat x00 = get(0);
  Mat X(n, n);
  bool any = x00 != 0;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      const Rat coeff = get(subset_to_mask({i, j}));
      if (coeff != 0) any = true;
      X.at(i - 1, j - 1) = -coeff;
      X.at(j - 1, i - 1) = coeff;
    }
  }
  if (!any) {
    throw math_error("indeterminate", "all projected coordinates vanish");
  }
  return make_lm_point(Family::OG, n, x00, std::move(X));
}

bool lm_equal_projective(const LMPoint& p, const LMPoint& q) {
  if (p.family != q.family || p.n != q.n) return false;
  const std::size_t n = static_cast<std::size_t>(p.n);
  std::vector<Rat> u, w;
  u.push_back(p.x00);
  w.push_back(q.x00);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      u.push_back(p.X.at(i, j));
      w.push_back(q.X.at(i, j));
    }
  }
  std::size_t pivot = 0;
  while (pivot < u.size() && u[pivot] == 0) ++pivot;
  if (pivot == u.size() || w[pivot] == 0) return false;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i] * w[pivot] != w[i] * u[pivot]) return false;
  }
  return true;
}

std::vector<Rat> center_generators(const CenterSpec& spec, const LMPoint& p) {
  check(p.family == spec.family && p.n == spec.n,
        "point does not match the center parameters");
  check(spec.l >= 0 && spec.l <= spec.n - 1, "center index out of range");
  std::vector<Rat> gens;
  if (spec.with_x00) {
    gens.push_back(p.x00);
    if (spec.l == 0) return gens;
  }
  const std::size_t n = static_cast<std::size_t>(spec.n);
  const int threshold = spec.with_x00 ? spec.n - spec.l : spec.l;
  if (spec.family == Family::LG) {
    const std::size_t size = static_cast<std::size_t>(threshold + 1);
    for (const auto& rows : subsets_of_size(n, size)) {
      for (const auto& cols : subsets_of_size(n, size)) {
        gens.push_back(minor_det(p.X, rows, cols));
      }
    }
  } else {
    const std::size_t size = static_cast<std::size_t>(2 * (threshold / 2 + 1));
    if (size <= n) {
      for (const auto& idx : subsets_of_size(n, size)) {
        gens.push_back(pfaffian_sub(p.X, idx));
      }
    }
  }
  return gens;
}

std::pair<int, int> blowup_step_counts(Family family, int n) {
  check(n >= 1, "n must be at least 1");
  if (family == Family::LG) return {2 * (n - 1), n - 1};
  check(n >= 2, "the orthogonal family needs n >= 2");
  return {n - 2, n / 2 - 1};
}

FiberReport fiber_degree_lg(int n, std::uint64_t seed) {
  check(n >= 1, "n must be at least 1");
  ChartCoordsI c;
  c.n = n;
  c.l = 0;
  const ChartShape shape = chart_shape(c);
  SmallRatRng rng(seed);
  for (int k : shape.b_keys) {
    if (k != 1) c.b[k] = rng.nonzero_rat();
  }
  for (const CoordKey& k : shape.xi_keys) c.xi[k] = rng.nonzero_rat();

  const int cap = n;
  std::map<std::vector<int>, std::vector<Rat>> table;
  for (int t = 0; t <= cap + 1; ++t) {
    c.b[1] = t;
    const PluckerVector v = plucker_embed(chart_point(c));
    for (const auto& [idx, val] : v.coords) {
      auto& samples = table[idx];
      if (samples.empty()) samples.assign(cap + 2, Rat(0));
      samples[t] = val;
    }
  }

  FiberReport rep;
  rep.residual_ok = true;
  rep.max_degree = 0;
  std::vector<int> unit_idx(n);
  std::iota(unit_idx.begin(), unit_idx.end(), 1);
  const auto uit = table.find(unit_idx);
  rep.unit_coordinate_ok =
      uit != table.end() &&
      std::all_of(uit->second.begin(), uit->second.end(),
                  [](const Rat& v) { return v == 1; });
  for (const auto& [idx, samples] : table) {
    rep.max_degree =
        std::max(rep.max_degree, table_degree(samples, cap, rep.residual_ok));
  }
  return rep;
}

FiberReport fiber_degree_og(int n, std::uint64_t seed) {
  check(n >= 2, "the orthogonal family needs n >= 2");
  ChartCoordsO c;
  c.n = n;
  c.l = 0;
  const ChartShape shape = chart_shape(c);
  SmallRatRng rng(seed);
  for (int k : shape.b_keys) {
    if (k != 1) c.b[k] = rng.nonzero_rat();
  }
  for (const CoordKey& k : shape.xi_keys) c.xi[k] = rng.nonzero_rat();

  const int cap = n / 2;
  std::map<std::uint32_t, std::vector<Rat>> table;
  for (int t = 0; t <= cap + 1; ++t) {
    c.b[1] = t;
    const ExtElement e = spinor_embed(chart_point(c), 0);
    for (const auto& [mask, val] : e.terms) {
      auto& samples = table[mask];
      if (samples.empty()) samples.assign(cap + 2, Rat(0));
      samples[t] = val;
    }
  }

  FiberReport rep;
  rep.residual_ok = true;
  rep.max_degree = 0;
  const auto uit = table.find(0);
  rep.unit_coordinate_ok =
      uit != table.end() &&
      std::all_of(uit->second.begin(), uit->second.end(),
                  [](const Rat& v) { return v == 1; });
  for (const auto& [mask, samples] : table) {
    rep.max_degree =
        std::max(rep.max_degree, table_degree(samples, cap, rep.residual_ok));
  }
  return rep;
}

}  // namespace isogr
