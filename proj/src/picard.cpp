#include "isogr/picard.hpp"

#include <algorithm>
#include <stdexcept>

namespace isogr {

namespace {

void check(bool ok, const std::string& what) {
  if (!ok) throw usage_error(what);
}

int half(int n) { return n / 2; }

// Position of D^{sign}_i in the coefficient vector (H first).
std::size_t dpos(const PicardBasis& basis, int sign, int i) {
  if (sign > 0) return static_cast<std::size_t>(i);
  return static_cast<std::size_t>(basis.nplus + i);
}

DivClass zero_class(const PicardBasis& basis) {
  return DivClass(1 + basis.nplus + basis.nminus, Int(0));
}

void add_scaled(DivClass& acc, const Int& c, const DivClass& d) {
  for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += c * d[i];
}

}  // namespace

PicardBasis picard_basis(Family family, int n) {
  PicardBasis b;
  b.family = family;
  b.n = n;
  if (family == Family::LG) {
    check(n >= 1, "LG requires n >= 1");
    b.nplus = b.nminus = n - 1;
  } else {
    check(n >= 2, "OG requires n >= 2");
    b.nplus = half(n) - 1;
    b.nminus = (n % 2 == 0) ? half(n) - 1 : half(n);
  }
  b.labels.push_back("H");
  for (int i = 1; i <= b.nplus; ++i) b.labels.push_back("D+_" + std::to_string(i));
  for (int i = 1; i <= b.nminus; ++i) b.labels.push_back("D-_" + std::to_string(i));
  return b;
}

DivClass class_B(Family family, int n, int k) {
  const PicardBasis basis = picard_basis(family, n);
  DivClass d = zero_class(basis);
  d[0] = 1;
  if (family == Family::LG) {
    check(k >= 0 && k <= n, "section class index out of range");
    if (k == 0) {
      for (int i = 1; i <= n - 1; ++i) d[dpos(basis, +1, i)] -= (n + 1 - i);
    } else if (k == n) {
      for (int i = 1; i <= n - 1; ++i) d[dpos(basis, -1, i)] -= (n + 1 - i);
    } else {
      for (int i = 1; i <= n - k; ++i) d[dpos(basis, +1, i)] -= (n - k + 1 - i);
      for (int i = 1; i <= k; ++i) d[dpos(basis, -1, i)] -= (k + 1 - i);
    }
    return d;
  }
  const int h = half(n);
  check(k >= 0 && k <= h, "section class index out of range");
  if (k == 0) {
    for (int i = 1; i <= h - 1; ++i) d[dpos(basis, +1, i)] -= (h + 1 - i);
  } else if (k == h) {
    const int top = (n % 2 == 0) ? h - 1 : h;
    for (int i = 1; i <= top; ++i) d[dpos(basis, -1, i)] -= (h + 1 - i);
  } else {
    for (int i = 1; i <= h - k; ++i) d[dpos(basis, +1, i)] -= (h - k + 1 - i);
    for (int i = 1; i <= k; ++i) d[dpos(basis, -1, i)] -= (k + 1 - i);
  }
  return d;
}

DivClass class_Delta(Family family, int n, int sign, int k) {
  const PicardBasis basis = picard_basis(family, n);
  const int top = (sign > 0) ? basis.nplus : basis.nminus;
  check(k >= 0 && k <= top, "Delta index out of range");
  DivClass d = zero_class(basis);
  for (int i = 1; i <= k; ++i) d[dpos(basis, sign, i)] -= (k + 1 - i);
  return d;
}

std::pair<DivClass, DivClass> class_K(Family family, int n) {
  const PicardBasis basis = picard_basis(family, n);
  DivClass direct = zero_class(basis);
  DivClass via_sections = zero_class(basis);

  if (family == Family::LG) {
    direct[0] = -(n + 1);
    for (int i = 1; i <= n - 1; ++i) {
      const Int c = Int(n + 3 - i) * (n - i) / 2;
      direct[dpos(basis, +1, i)] += c;
      direct[dpos(basis, -1, i)] += c;
    }
    for (int m = 1; m <= n - 1; ++m) add_scaled(via_sections, -1, class_B(family, n, m));
    for (int i = 1; i <= n - 1; ++i) {
      via_sections[dpos(basis, +1, i)] -= 1;
      via_sections[dpos(basis, -1, i)] -= 1;
    }
    add_scaled(via_sections, -1, class_B(family, n, 0));  // D+_n
    add_scaled(via_sections, -1, class_B(family, n, n));  // D-_n
    return {direct, via_sections};
  }

  const int h = half(n);
  direct[0] = -2 * (n - 1);
  if (n % 2 == 0) {
    for (int i = 1; i <= h - 1; ++i) {
      const Int c = Int(n + 3 - 2 * i) * (n - 2 * i) / 2;
      direct[dpos(basis, +1, i)] += c;
      direct[dpos(basis, -1, i)] += c;
    }
    for (int m = 1; m <= h - 1; ++m) add_scaled(via_sections, -4, class_B(family, n, m));
    for (int i = 1; i <= h - 1; ++i) {
      via_sections[dpos(basis, +1, i)] -= 1;
      via_sections[dpos(basis, -1, i)] -= 1;
    }
    add_scaled(via_sections, -1, class_B(family, n, h));  // D-_h
    add_scaled(via_sections, -1, class_B(family, n, 0));  // D+_h
  } else {
    for (int i = 1; i <= h - 1; ++i) {
      direct[dpos(basis, +1, i)] += Int(n + 2 - 2 * i) * (n - 1 - 2 * i) / 2;
    }
    for (int i = 1; i <= h; ++i) {
      direct[dpos(basis, -1, i)] += Int(n + 3 - 2 * i) * (n - 2 * i) / 2;
    }
    add_scaled(via_sections, -3, class_B(family, n, h));
    for (int m = 1; m <= h - 1; ++m) add_scaled(via_sections, -4, class_B(family, n, m));
    for (int i = 1; i <= h; ++i) via_sections[dpos(basis, -1, i)] -= 1;
    for (int i = 1; i <= h - 1; ++i) via_sections[dpos(basis, +1, i)] -= 1;
    add_scaled(via_sections, -1, class_B(family, n, 0));  // D+_h
  }
  return {direct, via_sections};
}

CurveClass curve_class(Family family, int n, char kind, int idx) {
  const PicardBasis basis = picard_basis(family, n);
  const int gmax = (family == Family::LG) ? n - 1 : half(n) - 1;
  const int top_for_plus = (family == Family::LG) ? n : half(n);
  CurveClass c;
  c.pairings.assign(1 + basis.nplus + basis.nminus, Int(0));

  auto bump = [&](int sign, int i, int delta) {
    const int top = (sign > 0) ? basis.nplus : basis.nminus;
    if (i >= 1 && i <= top) c.pairings[dpos(basis, sign, i)] += delta;
  };

  if (kind == 'g') {
    check(idx >= 0 && idx <= gmax, "gamma index out of range");
    c.label = "gamma_" + std::to_string(idx);
    c.pairings[0] = 1;
    bump(-1, idx + 1, +1);
    bump(-1, idx + 2, -1);
    bump(+1, top_for_plus - idx, +1);
    bump(+1, top_for_plus - idx + 1, -1);
    return c;
  }
  const int sign = (kind == '+') ? +1 : -1;
  check(kind == '+' || kind == '-', "unknown curve kind");
  const int top = (sign > 0) ? basis.nplus : basis.nminus;
  check(idx >= 1 && idx <= top, "zeta index out of range");
  c.label = std::string("zeta") + kind + "_" + std::to_string(idx);
  bump(sign, idx, -1);
  bump(sign, idx + 1, +2);
  bump(sign, idx + 2, -1);
  return c;
}

std::vector<CurveClass> mori_generators(Family family, int n) {
  const PicardBasis basis = picard_basis(family, n);
  const int gmax = (family == Family::LG) ? n - 1 : half(n) - 1;
  std::vector<CurveClass> out;
  for (int l = 0; l <= gmax; ++l) out.push_back(curve_class(family, n, 'g', l));
  for (int j = 1; j <= basis.nminus; ++j) out.push_back(curve_class(family, n, '-', j));
  for (int j = 1; j <= basis.nplus; ++j) out.push_back(curve_class(family, n, '+', j));
  return out;
}

Int pair_div_curve(const DivClass& d, const CurveClass& c) {
  if (d.size() != c.pairings.size()) throw usage_error("divisor/curve dimension mismatch");
  Int v = 0;
  for (std::size_t i = 0; i < d.size(); ++i) v += d[i] * c.pairings[i];
  return v;
}

std::vector<IVec> nef_inequalities(Family family, int n) {
  const PicardBasis basis = picard_basis(family, n);
  const int na = basis.nminus;
  const int nb = basis.nplus;
  const int dim = 1 + na + nb;
  const int lmax = (family == Family::LG) ? n - 1 : half(n) - 1;
  const int nmax = (family == Family::LG) ? n : half(n);
  std::vector<IVec> rows;
  for (int l = 0; l <= lmax; ++l) {
    IVec r(dim, Int(0));
    r[0] = 1;
    for (int i = l + 1; i <= na; ++i) r[i] = -1;
    for (int j = nmax - l; j <= nb; ++j) r[na + j] = -1;
    rows.push_back(std::move(r));
  }
  for (int c = 1; c < dim; ++c) {
    IVec r(dim, Int(0));
    r[c] = 1;
    rows.push_back(std::move(r));
  }
  return rows;
}

std::vector<IVec> nef_extremal_rays(Family family, int n) {
  const PicardBasis basis = picard_basis(family, n);
  return extreme_rays_dd(nef_inequalities(family, n), 1 + basis.nminus + basis.nplus);
}

std::vector<IVec> nef_claimed(Family family, int n) {
  const PicardBasis basis = picard_basis(family, n);
  const int na = basis.nminus;
  const int nb = basis.nplus;
  const int nmax = (family == Family::LG) ? n : half(n);
  std::vector<IVec> rays;
  for (int i = 0; i <= nb; ++i) {        // Delta^+ index (0 = absent)
    for (int j = 0; j <= na; ++j) {      // Delta^- index (0 = absent)
      if (i + j > nmax) continue;
      IVec v(1 + na + nb, Int(0));
      v[0] = 1;
      if (j >= 1) v[j] = 1;
      if (i >= 1) v[na + i] = 1;
      rays.push_back(std::move(v));
    }
  }
  std::sort(rays.begin(), rays.end());
  rays.erase(std::unique(rays.begin(), rays.end()), rays.end());
  return rays;
}

Poset nef_poset(Family family, int n) {
  const PicardBasis basis = picard_basis(family, n);
  const int na = basis.nminus;
  const int nb = basis.nplus;
  const int nmax = (family == Family::LG) ? n : half(n);
  Poset p(na + nb);
  for (int i = 0; i < na; ++i) {
    for (int j = i + 1; j < na; ++j) p.lt[i][j] = true;
  }
  for (int i = 0; i < nb; ++i) {
    for (int j = i + 1; j < nb; ++j) p.lt[na + i][na + j] = true;
  }
  // a_j (element j-1) precedes b_i (element na+i-1) whenever i + j > nmax.
  for (int j = 1; j <= na; ++j) {
    for (int i = 1; i <= nb; ++i) {
      if (i + j > nmax) p.lt[j - 1][na + i - 1] = true;
    }
  }
  return p;
}

std::vector<IVec> chain_polytope_rays(Family family, int n) {
  const PicardBasis basis = picard_basis(family, n);
  const int na = basis.nminus;
  const int nb = basis.nplus;
  const Poset p = nef_poset(family, n);
  std::vector<IVec> rays;
  for (const auto& chain : antichains(p)) {
    IVec v(1 + na + nb, Int(0));
    v[0] = 1;
    for (int e : chain) v[1 + e] = 1;
    rays.push_back(std::move(v));
  }
  std::sort(rays.begin(), rays.end());
  return rays;
}

DivClass nef_vector_to_div(Family family, int n, const IVec& v) {
  const PicardBasis basis = picard_basis(family, n);
  const int na = basis.nminus;
  const int nb = basis.nplus;
  if (static_cast<int>(v.size()) != 1 + na + nb) {
    throw usage_error("nef vector has wrong dimension");
  }
  DivClass d = zero_class(basis);
  d[0] = v[0];
  for (int j = 1; j <= na; ++j) add_scaled(d, v[j], class_Delta(family, n, -1, j));
  for (int i = 1; i <= nb; ++i) add_scaled(d, v[na + i], class_Delta(family, n, +1, i));
  return d;
}

std::vector<DivClass> eff_generators(Family family, int n) {
  const PicardBasis basis = picard_basis(family, n);
  std::vector<DivClass> out;
  auto basis_vector = [&](int sign, int i) {
    DivClass d = zero_class(basis);
    d[dpos(basis, sign, i)] = 1;
    return d;
  };
  if (family == Family::LG) {
    for (int i = 1; i <= n - 1; ++i) out.push_back(basis_vector(+1, i));
    out.push_back(class_B(family, n, 0));  // D+_n
    for (int i = 1; i <= n - 1; ++i) out.push_back(basis_vector(-1, i));
    out.push_back(class_B(family, n, n));  // D-_n
    return out;
  }
  const int h = half(n);
  for (int i = 1; i <= h - 1; ++i) out.push_back(basis_vector(+1, i));
  out.push_back(class_B(family, n, 0));  // D+_h
  for (int i = 1; i <= basis.nminus; ++i) out.push_back(basis_vector(-1, i));
  out.push_back(class_B(family, n, h));  // D-_h (even) / modified section (odd)
  return out;
}

std::vector<Int> pairing_row(Family family, int n, const DivClass& d) {
  std::vector<Int> out;
  for (const auto& c : mori_generators(family, n)) {
    out.push_back(pair_div_curve(d, c));
  }
  return out;
}

FanoReport fano_classify(Family family, int n) {
  const auto [k1, k2] = class_K(family, n);
  if (k1 != k2) {
    throw std::logic_error("canonical class expressions disagree");
  }
  DivClass minus_k = k1;
  for (Int& c : minus_k) c = -c;
  FanoReport rep;
  bool any_zero = false;
  for (const auto& curve : mori_generators(family, n)) {
    const Int v = pair_div_curve(minus_k, curve);
    if (v < 0) {
      throw math_error("negative_pairing",
                       "-K pairs negatively with " + curve.label);
    }
    if (v == 0) any_zero = true;
    rep.pairings.emplace_back(curve.label, v);
  }
  rep.verdict = any_zero ? "weak_fano" : "fano";
  return rep;
}

}  // namespace isogr
