#include "isogr/charts.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace isogr {

namespace {

Rat mget(const std::map<int, Rat>& m, int key) {
  const auto it = m.find(key);
  return it == m.end() ? Rat(0) : it->second;
}

Rat pget(const std::map<CoordKey, Rat>& m, int i, int j) {
  const auto it = m.find({i, j});
  return it == m.end() ? Rat(0) : it->second;
}

void add_scaled_outer(Mat& acc, const Rat& scale, const std::vector<Rat>& v) {
  if (scale == 0) return;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    const Rat si = scale * v[i];
    for (std::size_t j = 0; j < v.size(); ++j) {
      if (v[j] == 0) continue;
      acc.at(i, j) += si * v[j];
    }
  }
}

void add_scaled(Mat& acc, const Rat& scale, const Mat& m) {
  if (scale == 0) return;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (m.at(i, j) != 0) acc.at(i, j) += scale * m.at(i, j);
    }
  }
}

// Direction vector of the k-th layer (1-based k): inside the first block for
// k <= l, inside the second block for k > l.
std::vector<Rat> layer_vector(int n, int l, int k, const std::map<CoordKey, Rat>& xi) {
  if (k <= l) {
    std::vector<Rat> v(l, Rat(0));
    for (int j = 1; j <= l - k; ++j) v[j - 1] = pget(xi, j, l - k + 1);
    v[l - k] = 1;
    return v;
  }
  std::vector<Rat> v(n - l, Rat(0));
  v[k - l - 1] = 1;
  for (int j = k + 1; j <= n; ++j) v[j - l - 1] = pget(xi, k, j);
  return v;
}

Mat assemble(int n, int l, const Mat& Z, const Mat& W, const std::map<CoordKey, Rat>& x) {
  Mat m(n, 2 * n);
  for (int i = 0; i < l; ++i) {
    for (int j = 0; j < l; ++j) m.at(i, j) = Z.at(i, j);
    m.at(i, n + i) = 1;
    for (int j = l + 1; j <= n; ++j) m.at(i, n + l + (j - l - 1)) = pget(x, i + 1, j);
  }
  for (int i = 0; i < n - l; ++i) {
    const int r = l + i;
    for (int j = 0; j < l; ++j) m.at(r, j) = -pget(x, j + 1, l + 1 + i);
    m.at(r, l + i) = 1;
    for (int j = 0; j < n - l; ++j) m.at(r, n + l + j) = W.at(i, j);
  }
  return m;
}

void check_range(bool ok, const std::string& what) {
  if (!ok) throw usage_error(what);
}

template <typename K>
void check_keys(const std::map<K, Rat>& got, const std::vector<K>& allowed,
                const std::string& label) {
  const std::set<K> ok(allowed.begin(), allowed.end());
  for (const auto& [key, value] : got) {
    (void)value;
    if (!ok.count(key)) {
      throw usage_error("coordinate outside this chart: " + label);
    }
  }
}

void validate(const ChartCoordsI& c, const ChartShape& s) {
  check_keys(c.a, s.a_keys, "a");
  check_keys(c.b, s.b_keys, "b");
  check_keys(c.x, s.x_keys, "x");
  check_keys(c.xi, s.xi_keys, "xi");
}

}  // namespace

ChartShape chart_shape(const ChartCoordsI& c) {
  check_range(c.n >= 1 && c.l >= 0 && c.l <= c.n, "chart requires 0 <= l <= n");
  ChartShape s;
  for (int i = c.n - c.l + 1; i <= c.n; ++i) s.a_keys.push_back(i);
  for (int i = c.l + 1; i <= c.n; ++i) s.b_keys.push_back(i);
  for (int i = 1; i <= c.l; ++i) {
    for (int j = c.l + 1; j <= c.n; ++j) s.x_keys.push_back({i, j});
  }
  for (int k = 1; k <= c.l - 1; ++k) {
    for (int j = 1; j <= c.l - k; ++j) s.xi_keys.push_back({j, c.l - k + 1});
  }
  for (int k = c.l + 1; k <= c.n - 1; ++k) {
    for (int j = k + 1; j <= c.n; ++j) s.xi_keys.push_back({k, j});
  }
  std::sort(s.xi_keys.begin(), s.xi_keys.end());
  return s;
}

ChartShape chart_shape(const ChartCoordsII& c) {
  check_range(c.n >= 1 && c.l >= 0 && c.l <= c.n, "chart requires 0 <= l <= n");
  auto check_sparse = [](const std::vector<int>& v, int lo, int hi) {
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (v[i] < lo || v[i] > hi) return false;
      if (i + 1 < v.size() && v[i + 1] <= v[i] + 1) return false;
    }
    return true;
  };
  check_range(check_sparse(c.tau.plus, 1, c.l - 1), "tau plus entries must be sparse in [1, l-1]");
  check_range(check_sparse(c.tau.minus, c.l + 1, c.n - 1),
              "tau minus entries must be sparse in [l+1, n-1]");

  std::set<int> paired(c.tau.plus.begin(), c.tau.plus.end());
  paired.insert(c.tau.minus.begin(), c.tau.minus.end());
  std::set<int> dropped;
  for (int k : paired) dropped.insert(k + 1);

  ChartShape s;
  for (int i = 1; i <= c.l; ++i) {
    if (!dropped.count(i)) s.a_keys.push_back(c.n - c.l + i);
  }
  for (int i = c.l + 1; i <= c.n; ++i) {
    if (!dropped.count(i)) s.b_keys.push_back(i);
  }
  for (int k : paired) {
    s.y_keys.push_back(k);
    s.y_keys.push_back(k + 1);
  }
  std::sort(s.y_keys.begin(), s.y_keys.end());
  for (int i = 1; i <= c.l; ++i) {
    for (int j = c.l + 1; j <= c.n; ++j) s.x_keys.push_back({i, j});
  }
  for (int k = 1; k <= c.l - 1; ++k) {
    if (dropped.count(k)) continue;
    if (paired.count(k)) {
      for (int j = 1; j <= c.l - k - 1; ++j) {
        s.xi_keys.push_back({j, c.l - k});
        s.xi_keys.push_back({j, c.l - k + 1});
      }
    } else {
      for (int j = 1; j <= c.l - k; ++j) s.xi_keys.push_back({j, c.l - k + 1});
    }
  }
  for (int k = c.l + 1; k <= c.n - 1; ++k) {
    if (dropped.count(k)) continue;
    if (paired.count(k)) {
      for (int j = k + 2; j <= c.n; ++j) {
        s.xi_keys.push_back({k, j});
        s.xi_keys.push_back({k + 1, j});
      }
    } else {
      for (int j = k + 1; j <= c.n; ++j) s.xi_keys.push_back({k, j});
    }
  }
  std::sort(s.xi_keys.begin(), s.xi_keys.end());
  return s;
}

ChartShape chart_shape(const ChartCoordsO& c) {
  check_range(c.n >= 1 && c.l >= 0 && c.l <= c.n && c.l % 2 == 0,
              "orthogonal chart requires even l with 0 <= l <= n");
  const int h = c.n / 2;
  const int l2 = c.l / 2;
  ChartShape s;
  for (int i = 1; i <= l2; ++i) s.a_keys.push_back(h - l2 + i);
  for (int i = l2 + 1; i <= h; ++i) s.b_keys.push_back(i);
  for (int i = 1; i <= c.l; ++i) {
    for (int j = c.l + 1; j <= c.n; ++j) s.x_keys.push_back({i, j});
  }
  for (int k = 1; k <= l2 - 1; ++k) {
    for (int j = 1; j <= c.l - 2 * k; ++j) {
      s.xi_keys.push_back({j, c.l - 2 * k + 1});
      s.xi_keys.push_back({j, c.l - 2 * k + 2});
    }
  }
  for (int k = l2 + 1; k <= h; ++k) {
    for (int j = 2 * k + 1; j <= c.n; ++j) {
      s.xi_keys.push_back({2 * k - 1, j});
      s.xi_keys.push_back({2 * k, j});
    }
  }
  std::sort(s.xi_keys.begin(), s.xi_keys.end());
  return s;
}

Mat chart_layout(const ChartCoordsI& c) {
  const ChartShape shape = chart_shape(c);
  validate(c, shape);
  const int n = c.n;
  const int l = c.l;
  Mat Z(l, l);
  for (int k = 1; k <= l; ++k) {
    Rat prod = 1;
    for (int i = 1; i <= k; ++i) prod *= mget(c.a, n - l + i);
    add_scaled_outer(Z, prod, layer_vector(n, l, k, c.xi));
  }
  Mat W(n - l, n - l);
  for (int k = l + 1; k <= n; ++k) {
    Rat prod = 1;
    for (int i = l + 1; i <= k; ++i) prod *= mget(c.b, i);
    add_scaled_outer(W, prod, layer_vector(n, l, k, c.xi));
  }
  return assemble(n, l, Z, W, c.x);
}

Mat chart_layout(const ChartCoordsII& c) {
  const ChartShape shape = chart_shape(c);
  check_keys(c.a, shape.a_keys, "a");
  check_keys(c.b, shape.b_keys, "b");
  check_keys(c.y, shape.y_keys, "y");
  check_keys(c.x, shape.x_keys, "x");
  check_keys(c.xi, shape.xi_keys, "xi");

  const int n = c.n;
  const int l = c.l;
  std::set<int> plus(c.tau.plus.begin(), c.tau.plus.end());
  std::set<int> minus(c.tau.minus.begin(), c.tau.minus.end());
  std::set<int> dropped;
  for (int k : plus) dropped.insert(k + 1);
  for (int k : minus) dropped.insert(k + 1);

  // 2x2 glued block and its inverse for a paired layer k.
  auto block = [&](int k, Mat& M, Mat& Minv) {
    const Rat yk = mget(c.y, k);
    const Rat yk1 = mget(c.y, k + 1);
    const Rat d = yk * yk1 - 1;
    if (d == 0) {
      throw math_error("open_locus", "chart undefined where y_k y_{k+1} = 1");
    }
    M = Mat(2, 2);
    M.at(0, 0) = yk;
    M.at(0, 1) = 1;
    M.at(1, 0) = 1;
    M.at(1, 1) = yk1;
    Minv = Mat(2, 2);
    Minv.at(0, 0) = yk1 / d;
    Minv.at(0, 1) = Rat(-1) / d;
    Minv.at(1, 0) = Rat(-1) / d;
    Minv.at(1, 1) = yk / d;
  };

  Mat Z(l, l);
  for (int k = 1; k <= l; ++k) {
    if (dropped.count(k)) continue;
    Rat prod = 1;
    for (int i = 1; i <= k; ++i) {
      if (!dropped.count(i)) prod *= mget(c.a, n - l + i);
    }
    if (plus.count(k)) {
      const int sz = l - k - 1;
      Mat M, Minv;
      block(k, M, Minv);
      Mat Xi(2, sz);
      for (int r = 0; r < 2; ++r) {
        for (int j = 1; j <= sz; ++j) Xi.at(r, j - 1) = pget(c.xi, j, l - k + r);
      }
      Mat O(l, l);
      for (int p = 0; p < sz; ++p) {
        for (int q = 0; q < sz; ++q) {
          Rat v = 0;
          for (int r = 0; r < 2; ++r) {
            for (int s = 0; s < 2; ++s) v += Xi.at(r, p) * Minv.at(r, s) * Xi.at(s, q);
          }
          O.at(p, q) = v;
        }
      }
      for (int p = 0; p < sz; ++p) {
        for (int r = 0; r < 2; ++r) {
          O.at(p, sz + r) = Xi.at(r, p);
          O.at(sz + r, p) = Xi.at(r, p);
        }
      }
      for (int r = 0; r < 2; ++r) {
        for (int s = 0; s < 2; ++s) O.at(sz + r, sz + s) = M.at(r, s);
      }
      add_scaled(Z, prod, O);
    } else {
      add_scaled_outer(Z, prod, layer_vector(n, l, k, c.xi));
    }
  }

  Mat W(n - l, n - l);
  for (int k = l + 1; k <= n; ++k) {
    if (dropped.count(k)) continue;
    Rat prod = 1;
    for (int i = l + 1; i <= k; ++i) {
      if (!dropped.count(i)) prod *= mget(c.b, i);
    }
    if (minus.count(k)) {
      const int off = k - l - 1;
      const int sz = n - k - 1;
      Mat M, Minv;
      block(k, M, Minv);
      Mat Xi(2, sz);
      for (int r = 0; r < 2; ++r) {
        for (int j = 0; j < sz; ++j) Xi.at(r, j) = pget(c.xi, k + r, k + 2 + j);
      }
      Mat O(n - l, n - l);
      for (int r = 0; r < 2; ++r) {
        for (int s = 0; s < 2; ++s) O.at(off + r, off + s) = M.at(r, s);
      }
      for (int r = 0; r < 2; ++r) {
        for (int q = 0; q < sz; ++q) {
          O.at(off + r, off + 2 + q) = Xi.at(r, q);
          O.at(off + 2 + q, off + r) = Xi.at(r, q);
        }
      }
      for (int p = 0; p < sz; ++p) {
        for (int q = 0; q < sz; ++q) {
          Rat v = 0;
          for (int r = 0; r < 2; ++r) {
            for (int s = 0; s < 2; ++s) v += Xi.at(r, p) * Minv.at(r, s) * Xi.at(s, q);
          }
          O.at(off + 2 + p, off + 2 + q) = v;
        }
      }
      add_scaled(W, prod, O);
    } else {
      add_scaled_outer(W, prod, layer_vector(n, l, k, c.xi));
    }
  }
  return assemble(n, l, Z, W, c.x);
}

Mat chart_layout(const ChartCoordsO& c) {
  const ChartShape shape = chart_shape(c);
  check_keys(c.a, shape.a_keys, "a");
  check_keys(c.b, shape.b_keys, "b");
  check_keys(c.x, shape.x_keys, "x");
  check_keys(c.xi, shape.xi_keys, "xi");

  const int n = c.n;
  const int l = c.l;
  const int h = n / 2;
  const int l2 = l / 2;

  Mat Z(l, l);
  for (int k = 1; k <= l2; ++k) {
    Rat prod = 1;
    for (int i = 1; i <= k; ++i) prod *= mget(c.a, h - l2 + i);
    const int sz = l - 2 * k;
    Mat Xi(2, sz);
    for (int r = 0; r < 2; ++r) {
      for (int j = 1; j <= sz; ++j) Xi.at(r, j - 1) = pget(c.xi, j, l - 2 * k + 1 + r);
    }
    Mat O(l, l);
    for (int p = 0; p < sz; ++p) {
      for (int q = 0; q < sz; ++q) {
        // (Xi^T J Xi)_{pq} = Xi_{0p} Xi_{1q} - Xi_{1p} Xi_{0q}
        O.at(p, q) = Xi.at(0, p) * Xi.at(1, q) - Xi.at(1, p) * Xi.at(0, q);
      }
    }
    for (int p = 0; p < sz; ++p) {
      for (int r = 0; r < 2; ++r) {
        O.at(p, sz + r) = -Xi.at(r, p);
        O.at(sz + r, p) = Xi.at(r, p);
      }
    }
    O.at(sz, sz + 1) = 1;
    O.at(sz + 1, sz) = -1;
    add_scaled(Z, prod, O);
  }

  Mat W(n - l, n - l);
  for (int k = l2 + 1; k <= h; ++k) {
    Rat prod = 1;
    for (int i = l2 + 1; i <= k; ++i) prod *= mget(c.b, i);
    const int off = 2 * k - l - 2;
    const int sz = n - 2 * k;
    Mat Xi(2, sz);
    for (int r = 0; r < 2; ++r) {
      for (int j = 0; j < sz; ++j) Xi.at(r, j) = pget(c.xi, 2 * k - 1 + r, 2 * k + 1 + j);
    }
    Mat O(n - l, n - l);
    O.at(off, off + 1) = 1;
    O.at(off + 1, off) = -1;
    for (int r = 0; r < 2; ++r) {
      for (int q = 0; q < sz; ++q) {
        O.at(off + r, off + 2 + q) = Xi.at(r, q);
        O.at(off + 2 + q, off + r) = -Xi.at(r, q);
      }
    }
    for (int p = 0; p < sz; ++p) {
      for (int q = 0; q < sz; ++q) {
        O.at(off + 2 + p, off + 2 + q) =
            Xi.at(0, p) * Xi.at(1, q) - Xi.at(1, p) * Xi.at(0, q);
      }
    }
    add_scaled(W, prod, O);
  }
  return assemble(n, l, Z, W, c.x);
}

Mat to_standard(const Mat& layout) {
  const std::size_t n = layout.rows();
  if (layout.cols() != 2 * n) throw math_error("shape", "expected an n x 2n matrix");
  Mat m = layout;
  if (n % 2 == 0) {  // (-1)^(n-1) = -1
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = n; j < 2 * n; ++j) m.at(i, j) = -m.at(i, j);
    }
  }
  return m;
}

IsotropicPoint chart_point(const ChartCoordsI& c) {
  return IsotropicPoint{Family::LG, c.n, to_standard(chart_layout(c))};
}

IsotropicPoint chart_point(const ChartCoordsII& c) {
  return IsotropicPoint{Family::LG, c.n, to_standard(chart_layout(c))};
}

IsotropicPoint chart_point(const ChartCoordsO& c) {
  return IsotropicPoint{Family::OG, c.n, to_standard(chart_layout(c))};
}

Rat omega_form(const Mat& m, std::size_t r1, std::size_t r2) {
  const std::size_t n = m.cols() / 2;
  Rat v = 0;
  for (std::size_t j = 0; j < n; ++j) {
    v += m.at(r2, n + j) * m.at(r1, j) - m.at(r1, n + j) * m.at(r2, j);
  }
  return v;
}

Rat beta_form(const Mat& m, std::size_t r1, std::size_t r2) {
  const std::size_t n = m.cols() / 2;
  Rat v = 0;
  for (std::size_t j = 0; j < n; ++j) {
    v += m.at(r1, n + j) * m.at(r2, j) + m.at(r2, n + j) * m.at(r1, j);
  }
  return v;
}

Rat q_form(const Mat& m, std::size_t r) {
  const std::size_t n = m.cols() / 2;
  Rat v = 0;
  for (std::size_t j = 0; j < n; ++j) v += m.at(r, j) * m.at(r, n + j);
  return v;
}

bool is_isotropic(const IsotropicPoint& p) {
  const std::size_t n = p.m.rows();
  if (p.m.cols() != 2 * n) throw math_error("shape", "expected an n x 2n matrix");
  if (p.family == Family::OG) {
    for (std::size_t i = 0; i < n; ++i) {
      if (q_form(p.m, i) != 0) return false;
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const Rat v = (p.family == Family::LG) ? omega_form(p.m, i, j) : beta_form(p.m, i, j);
      if (v != 0) return false;
    }
  }
  return true;
}

PluckerVector plucker_embed(const IsotropicPoint& p) {
  const int n = p.n;
  if (p.m.rows() != static_cast<std::size_t>(n) ||
      p.m.cols() != static_cast<std::size_t>(2 * n)) {
    throw math_error("shape", "expected an n x 2n matrix");
  }
  if (rank(p.m) != static_cast<std::size_t>(n)) {
    throw math_error("rank", "matrix does not have full rank; embedding undefined");
  }
  std::vector<std::size_t> all_rows(n);
  for (int i = 0; i < n; ++i) all_rows[i] = i;
  PluckerVector out;
  out.n = n;
  for (const auto& idx : enum_plucker(n)) {
    std::vector<std::size_t> cols(idx.entries.size());
    for (std::size_t t = 0; t < cols.size(); ++t) {
      cols[t] = static_cast<std::size_t>(idx.entries[t] - 1);
    }
    Rat v = minor_det(p.m, all_rows, cols);
    if (v != 0) out.coords.emplace(idx.entries, std::move(v));
  }
  return out;
}

PluckerVector weight_truncate(const PluckerVector& v, int k) {
  PluckerVector out;
  out.n = v.n;
  for (const auto& [idx, val] : v.coords) {
    int w = 0;
    for (int e : idx) {
      if (e > v.n) ++w;
    }
    if (w == k) out.coords.emplace(idx, val);
  }
  return out;
}

PluckerVector normalize_projective(PluckerVector v) {
  if (v.coords.empty()) return v;
  const Rat lead = v.coords.begin()->second;
  for (auto& [idx, val] : v.coords) {
    (void)idx;
    val /= lead;
  }
  return v;
}

bool proj_equal(const PluckerVector& x, const PluckerVector& y) {
  if (x.n != y.n) return false;
  const PluckerVector a = normalize_projective(x);
  const PluckerVector b = normalize_projective(y);
  return a.coords == b.coords;
}

Rat distinguished_minor_formula(const ChartCoordsI& c, int k) {
  if (k < 0 || k > c.n) throw usage_error("distinguished minor index out of range");
  if (k == c.l) return 1;
  Rat prod = 1;
  if (k < c.l) {
    for (int i = 1; i <= c.l - k; ++i) {
      const Rat base = mget(c.a, c.n - c.l + i);
      for (int e = 0; e < c.l - k + 1 - i; ++e) prod *= base;
    }
    return prod;
  }
  for (int i = c.l + 1; i <= k; ++i) {
    const Rat base = mget(c.b, i);
    for (int e = 0; e < k + 1 - i; ++e) prod *= base;
  }
  return prod;
}

Rat pullback_monomial(const ChartCoordsI& c, int k) {
  const IsotropicPoint p = chart_point(c);
  std::vector<std::size_t> rows(c.n), cols(c.n);
  for (int i = 0; i < c.n; ++i) {
    rows[i] = i;
    cols[i] = static_cast<std::size_t>(k + i);  // column labels k+1 .. n+k
  }
  const Rat value = minor_det(p.m, rows, cols);
  const Rat expected = distinguished_minor_formula(c, k);
  if (value != expected) {
    throw std::logic_error("distinguished minor does not match its closed form");
  }
  return value;
}

namespace {

// All size-k subsets of {0, ..., m-1}, lexicographic.
std::vector<std::vector<std::size_t>> index_subsets(std::size_t m, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  auto rec = [&](auto&& self, std::size_t lo) -> void {
    if (cur.size() == k) {
      out.push_back(cur);
      return;
    }
    for (std::size_t v = lo; v + (k - cur.size()) <= m; ++v) {
      cur.push_back(v);
      self(self, v + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

Mat z_block(const Mat& layout, int l) {
  Mat Z(l, l);
  for (int i = 0; i < l; ++i) {
    for (int j = 0; j < l; ++j) Z.at(i, j) = layout.at(i, j);
  }
  return Z;
}

Mat w_block(const Mat& layout, int n, int l) {
  Mat W(n - l, n - l);
  for (int i = 0; i < n - l; ++i) {
    for (int j = 0; j < n - l; ++j) W.at(i, j) = layout.at(l + i, n + l + j);
  }
  return W;
}

std::vector<Rat> all_minors(const Mat& m, std::size_t size) {
  std::vector<Rat> out;
  const auto rows = index_subsets(m.rows(), size);
  const auto cols = index_subsets(m.cols(), size);
  for (const auto& r : rows) {
    for (const auto& c : cols) out.push_back(minor_det(m, r, c));
  }
  return out;
}

std::vector<Rat> all_principal_pfaffians(const Mat& m, std::size_t size) {
  std::vector<Rat> out;
  for (const auto& idx : index_subsets(m.rows(), size)) {
    out.push_back(pfaffian_sub(m, idx));
  }
  return out;
}

}  // namespace

std::vector<Rat> ideal_generators(const IdealSpec& spec, const ChartCoordsI& c) {
  if (spec.family != Family::LG) throw usage_error("chart/family mismatch");
  if (spec.n != c.n || spec.l != c.l) throw usage_error("ideal spec does not match chart");
  if (spec.k < 0 || spec.k > spec.n) throw usage_error("stratum index out of range");
  if (spec.k == spec.l) return {Rat(1)};
  const Mat layout = chart_layout(c);
  if (spec.k < spec.l) {
    return all_minors(z_block(layout, spec.l), static_cast<std::size_t>(spec.l - spec.k));
  }
  return all_minors(w_block(layout, spec.n, spec.l),
                    static_cast<std::size_t>(spec.k - spec.l));
}

std::vector<Rat> ideal_generators(const IdealSpec& spec, const ChartCoordsO& c) {
  if (spec.family != Family::OG) throw usage_error("chart/family mismatch");
  if (spec.n != c.n || spec.l != c.l) throw usage_error("ideal spec does not match chart");
  if (spec.k < 0 || 2 * spec.k > spec.n) throw usage_error("stratum index out of range");
  if (2 * spec.k == spec.l) return {Rat(1)};
  const Mat layout = chart_layout(c);
  if (2 * spec.k < spec.l) {
    return all_principal_pfaffians(z_block(layout, spec.l),
                                   static_cast<std::size_t>(spec.l - 2 * spec.k));
  }
  return all_principal_pfaffians(w_block(layout, spec.n, spec.l),
                                 static_cast<std::size_t>(2 * spec.k - spec.l));
}

}  // namespace isogr
