#include "isogr/cone.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "isogr/errors.hpp"
#include "isogr/matrix.hpp"

namespace isogr {

namespace {

Rat dot(const IVec& a, const std::vector<Rat>& x) {
  Rat v = 0;
  for (std::size_t i = 0; i < a.size(); ++i) v += Rat(a[i]) * x[i];
  return v;
}

IVec normalize_int(IVec v) {
  Int g = 0;
  for (const Int& e : v) g = boost::multiprecision::gcd(g, e);
  if (g == 0) throw math_error("zero_ray", "zero vector is not a ray");
  for (Int& e : v) e /= g;
  return v;
}

std::size_t rows_rank(const std::vector<IVec>& rows, int dim) {
  Mat m(rows.size(), dim);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (int j = 0; j < dim; ++j) m.at(i, j) = Rat(rows[i][j]);
  }
  return rank(m);
}

}  // namespace

IVec primitive(const std::vector<Rat>& v) {
  Int scale = 1;
  for (const Rat& r : v) {
    scale = boost::multiprecision::lcm(scale, denominator(r));
  }
  IVec w(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    w[i] = numerator(v[i]) * (scale / denominator(v[i]));
  }
  return normalize_int(std::move(w));
}

std::vector<IVec> extreme_rays_dd(const std::vector<IVec>& ineqs, int dim) {
  for (const IVec& a : ineqs) {
    if (static_cast<int>(a.size()) != dim) {
      throw usage_error("inequality row has wrong dimension");
    }
  }

  std::vector<std::vector<Rat>> lin;
  for (int i = 0; i < dim; ++i) {
    std::vector<Rat> e(dim, Rat(0));
    e[i] = 1;
    lin.push_back(std::move(e));
  }
  std::vector<std::vector<Rat>> rays;
  std::vector<IVec> processed;

  auto dedupe = [&]() {
    std::set<IVec> seen;
    std::vector<std::vector<Rat>> kept;
    for (auto& r : rays) {
      bool zero = true;
      for (const Rat& v : r) {
        if (v != 0) {
          zero = false;
          break;
        }
      }
      if (zero) continue;
      const IVec key = primitive(r);
      if (seen.insert(key).second) kept.push_back(std::move(r));
    }
    rays = std::move(kept);
  };

  for (const IVec& a : ineqs) {
    int p = -1;
    for (std::size_t i = 0; i < lin.size(); ++i) {
      if (dot(a, lin[i]) != 0) {
        p = static_cast<int>(i);
        break;
      }
    }
    if (p >= 0) {
      // One lineality direction leaves the lineality space and becomes a ray.
      std::vector<Rat> ell = lin[p];
      Rat c = dot(a, ell);
      if (c < 0) {
        for (Rat& v : ell) v = -v;
        c = -c;
      }
      std::vector<std::vector<Rat>> newlin;
      for (std::size_t q = 0; q < lin.size(); ++q) {
        if (static_cast<int>(q) == p) continue;
        const Rat f = dot(a, lin[q]) / c;
        std::vector<Rat> w = lin[q];
        for (int j = 0; j < dim; ++j) w[j] -= f * ell[j];
        newlin.push_back(std::move(w));
      }
      for (auto& r : rays) {
        const Rat f = dot(a, r) / c;
        for (int j = 0; j < dim; ++j) r[j] -= f * ell[j];
      }
      rays.push_back(std::move(ell));
      lin = std::move(newlin);
      dedupe();
    } else {
      std::vector<Rat> vals(rays.size());
      std::vector<std::size_t> pos, neg;
      std::vector<std::vector<Rat>> next;
      for (std::size_t i = 0; i < rays.size(); ++i) {
        vals[i] = dot(a, rays[i]);
        if (vals[i] > 0) {
          pos.push_back(i);
        } else if (vals[i] < 0) {
          neg.push_back(i);
        }
      }
      if (neg.empty()) {
        processed.push_back(a);
        continue;  // constraint is redundant for the current cone
      }
      // Tight sets against the constraints processed so far, for adjacency.
      std::vector<std::vector<bool>> tight(rays.size(),
                                           std::vector<bool>(processed.size(), false));
      for (std::size_t i = 0; i < rays.size(); ++i) {
        for (std::size_t t = 0; t < processed.size(); ++t) {
          tight[i][t] = (dot(processed[t], rays[i]) == 0);
        }
      }
      auto adjacent = [&](std::size_t i, std::size_t j) {
        for (std::size_t r = 0; r < rays.size(); ++r) {
          if (r == i || r == j) continue;
          bool covers = true;
          for (std::size_t t = 0; t < processed.size(); ++t) {
            if (tight[i][t] && tight[j][t] && !tight[r][t]) {
              covers = false;
              break;
            }
          }
          if (covers) return false;
        }
        return true;
      };
      for (std::size_t i = 0; i < rays.size(); ++i) {
        if (vals[i] >= 0) next.push_back(rays[i]);
      }
      for (std::size_t i : pos) {
        for (std::size_t j : neg) {
          if (!adjacent(i, j)) continue;
          std::vector<Rat> combo(dim);
          for (int t = 0; t < dim; ++t) {
            combo[t] = vals[i] * rays[j][t] - vals[j] * rays[i][t];
          }
          next.push_back(std::move(combo));
        }
      }
      rays = std::move(next);
      dedupe();
    }
    processed.push_back(a);
  }

  if (!lin.empty()) {
    throw math_error("not_pointed", "inequalities do not define a pointed cone");
  }

  // Feasibility plus extremality filter against the full system.
  std::set<IVec> out;
  for (const auto& r : rays) {
    bool feasible = true;
    std::vector<IVec> tight_rows;
    for (const IVec& a : ineqs) {
      const Rat v = dot(a, r);
      if (v < 0) {
        feasible = false;
        break;
      }
      if (v == 0) tight_rows.push_back(a);
    }
    if (!feasible) continue;
    if (rows_rank(tight_rows, dim) != static_cast<std::size_t>(dim - 1)) continue;
    out.insert(primitive(r));
  }
  return std::vector<IVec>(out.begin(), out.end());
}

std::vector<IVec> extreme_rays_bruteforce(const std::vector<IVec>& ineqs, int dim) {
  const std::size_t m = ineqs.size();
  const std::size_t k = static_cast<std::size_t>(dim - 1);
  std::set<IVec> out;

  std::vector<std::size_t> pick;
  auto consider = [&](const std::vector<std::size_t>& rows) {
    Mat sys(rows.size(), dim);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      for (int j = 0; j < dim; ++j) sys.at(i, j) = Rat(ineqs[rows[i]][j]);
    }
    // Null space must be one-dimensional.
    Mat a = sys;
    std::vector<int> pivot_col;
    std::size_t r = 0;
    for (int col = 0; col < dim && r < a.rows(); ++col) {
      std::size_t piv = r;
      while (piv < a.rows() && a.at(piv, col) == 0) ++piv;
      if (piv == a.rows()) continue;
      if (piv != r) {
        for (int j = 0; j < dim; ++j) std::swap(a.at(piv, j), a.at(r, j));
      }
      const Rat d = a.at(r, col);
      for (int j = 0; j < dim; ++j) a.at(r, j) /= d;
      for (std::size_t i = 0; i < a.rows(); ++i) {
        if (i == r || a.at(i, col) == 0) continue;
        const Rat f = a.at(i, col);
        for (int j = 0; j < dim; ++j) a.at(i, j) -= f * a.at(r, j);
      }
      pivot_col.push_back(col);
      ++r;
    }
    if (r != k) return;  // null space not one-dimensional
    std::vector<bool> is_pivot(dim, false);
    for (int c : pivot_col) is_pivot[c] = true;
    int free_col = -1;
    for (int c = 0; c < dim; ++c) {
      if (!is_pivot[c]) {
        free_col = c;
        break;
      }
    }
    std::vector<Rat> v(dim, Rat(0));
    v[free_col] = 1;
    for (std::size_t i = 0; i < pivot_col.size(); ++i) {
      v[pivot_col[i]] = -a.at(i, free_col);
    }
    // Orient so the direction is feasible; check extremality via tight rank.
    int sign = 0;
    for (const IVec& row : ineqs) {
      const Rat d = dot(row, v);
      if (d == 0) continue;
      const int s = (d > 0) ? 1 : -1;
      if (sign == 0) {
        sign = s;
      } else if (sign != s) {
        return;  // infeasible both ways
      }
    }
    if (sign < 0) {
      for (Rat& e : v) e = -e;
    }
    std::vector<IVec> tight_rows;
    for (const IVec& row : ineqs) {
      if (dot(row, v) == 0) tight_rows.push_back(row);
    }
    if (rows_rank(tight_rows, dim) != k) return;
    out.insert(primitive(v));
  };

  auto rec = [&](auto&& self, std::size_t lo) -> void {
    if (pick.size() == k) {
      consider(pick);
      return;
    }
    for (std::size_t v = lo; v + (k - pick.size()) <= m; ++v) {
      pick.push_back(v);
      self(self, v + 1);
      pick.pop_back();
    }
  };
  if (dim == 1) {
    // Rays of a pointed one-dimensional cone: +1 or -1 if feasible.
    for (int s : {1, -1}) {
      std::vector<Rat> v{Rat(s)};
      bool ok = true;
      bool any_pos = false;
      for (const IVec& row : ineqs) {
        const Rat d = dot(row, v);
        if (d < 0) ok = false;
        if (d > 0) any_pos = true;
      }
      if (ok && any_pos) out.insert(primitive(v));
    }
    return std::vector<IVec>(out.begin(), out.end());
  }
  rec(rec, 0);
  return std::vector<IVec>(out.begin(), out.end());
}

bool in_cone(const std::vector<IVec>& rays, const std::vector<Rat>& x) {
  const std::size_t d = x.size();
  const std::size_t m = rays.size();
  for (const IVec& r : rays) {
    if (r.size() != d) throw usage_error("ray dimension mismatch");
  }
  bool all_zero = true;
  for (const Rat& v : x) {
    if (v != 0) {
      all_zero = false;
      break;
    }
  }
  if (all_zero) return true;

  // Phase-one simplex: min sum(s) s.t. R lambda + s = x (rows flipped so the
  // right-hand side is nonnegative), lambda, s >= 0.
  const std::size_t cols = m + d;
  std::vector<std::vector<Rat>> T(d, std::vector<Rat>(cols + 1, Rat(0)));
  for (std::size_t i = 0; i < d; ++i) {
    const bool flip = x[i] < 0;
    for (std::size_t j = 0; j < m; ++j) {
      T[i][j] = Rat(rays[j][i]);
      if (flip) T[i][j] = -T[i][j];
    }
    T[i][m + i] = 1;
    T[i][cols] = flip ? -x[i] : x[i];
  }
  std::vector<std::size_t> basis(d);
  std::vector<Rat> z(cols + 1, Rat(0));
  for (std::size_t i = 0; i < d; ++i) {
    basis[i] = m + i;
    for (std::size_t j = 0; j <= cols; ++j) z[j] -= T[i][j];
  }
  for (std::size_t j = m; j < cols; ++j) z[j] += 1;  // cost of artificials

  for (;;) {
    std::size_t enter = cols;
    for (std::size_t j = 0; j < cols; ++j) {
      if (z[j] < 0) {
        enter = j;
        break;  // Bland: smallest index
      }
    }
    if (enter == cols) break;
    std::size_t leave = d;
    Rat best = 0;
    for (std::size_t i = 0; i < d; ++i) {
      if (T[i][enter] <= 0) continue;
      const Rat ratio = T[i][cols] / T[i][enter];
      if (leave == d || ratio < best ||
          (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave == d) {
      throw std::logic_error("phase-one simplex unbounded");
    }
    const Rat piv = T[leave][enter];
    for (std::size_t j = 0; j <= cols; ++j) T[leave][j] /= piv;
    for (std::size_t i = 0; i < d; ++i) {
      if (i == leave || T[i][enter] == 0) continue;
      const Rat f = T[i][enter];
      for (std::size_t j = 0; j <= cols; ++j) T[i][j] -= f * T[leave][j];
    }
    const Rat fz = z[enter];
    if (fz != 0) {
      for (std::size_t j = 0; j <= cols; ++j) z[j] -= fz * T[leave][j];
    }
    basis[leave] = enter;
  }

  Rat value = 0;
  for (std::size_t i = 0; i < d; ++i) {
    if (basis[i] >= m) value += T[i][cols];
  }
  return value == 0;
}

bool same_ray_set(std::vector<IVec> a, std::vector<IVec> b) {
  for (auto& r : a) r = normalize_int(std::move(r));
  for (auto& r : b) r = normalize_int(std::move(r));
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

std::vector<std::vector<int>> antichains(const Poset& p) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto comparable = [&](int i, int j) { return p.lt[i][j] || p.lt[j][i]; };
  auto rec = [&](auto&& self, int start) -> void {
    out.push_back(cur);
    for (int v = start; v < p.size; ++v) {
      bool ok = true;
      for (int u : cur) {
        if (comparable(u, v)) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      cur.push_back(v);
      self(self, v + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

}  // namespace isogr
