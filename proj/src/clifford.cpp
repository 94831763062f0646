#include "isogr/clifford.hpp"

#include <algorithm>
#include <bit>

#include "isogr/errors.hpp"

namespace isogr {

namespace {

int bits_below(std::uint32_t mask, int bit) {
  return std::popcount(mask & ((std::uint32_t{1} << bit) - 1));
}

void add_term(ExtElement& e, std::uint32_t mask, const Rat& c) {
  if (c == 0) return;
  auto [it, inserted] = e.terms.emplace(mask, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) e.terms.erase(it);
  }
}

}  // namespace

std::uint32_t subset_to_mask(const std::vector<int>& subset) {
  std::uint32_t m = 0;
  for (int v : subset) m |= std::uint32_t{1} << (v - 1);
  return m;
}

std::vector<int> mask_to_subset(std::uint32_t mask) {
  std::vector<int> out;
  for (int i = 0; mask != 0; ++i, mask >>= 1) {
    if (mask & 1u) out.push_back(i + 1);
  }
  return out;
}

bool subset_lex_less(std::uint32_t a, std::uint32_t b) {
  return mask_to_subset(a) < mask_to_subset(b);
}

ExtElement ext_unit(int n) {
  ExtElement e;
  e.n = n;
  e.terms.emplace(0u, Rat(1));
  return e;
}

ExtElement wedge(int j, const ExtElement& e) {
  const int bit = j - 1;
  ExtElement out;
  out.n = e.n;
  for (const auto& [mask, c] : e.terms) {
    if (mask & (std::uint32_t{1} << bit)) continue;
    const Rat s = (bits_below(mask, bit) % 2 == 0) ? c : -c;
    add_term(out, mask | (std::uint32_t{1} << bit), s);
  }
  return out;
}

ExtElement contract(int j, const ExtElement& e) {
  const int bit = j - 1;
  ExtElement out;
  out.n = e.n;
  for (const auto& [mask, c] : e.terms) {
    if (!(mask & (std::uint32_t{1} << bit))) continue;
    const Rat s = (bits_below(mask, bit) % 2 == 0) ? c : -c;
    add_term(out, mask & ~(std::uint32_t{1} << bit), s);
  }
  return out;
}

ExtElement clifford_act(const std::vector<Rat>& v, const std::vector<Rat>& alpha,
                        const ExtElement& e) {
  if (static_cast<int>(v.size()) != e.n || static_cast<int>(alpha.size()) != e.n) {
    throw math_error("shape", "clifford_act operand length mismatch");
  }
  ExtElement out;
  out.n = e.n;
  for (int j = 1; j <= e.n; ++j) {
    if (alpha[j - 1] != 0) {
      for (const auto& [mask, c] : wedge(j, e).terms) {
        add_term(out, mask, alpha[j - 1] * c);
      }
    }
    if (v[j - 1] != 0) {
      for (const auto& [mask, c] : contract(j, e).terms) {
        add_term(out, mask, v[j - 1] * c);
      }
    }
  }
  return out;
}

ExtElement normalize_projective(ExtElement e) {
  if (e.terms.empty()) return e;
  std::uint32_t lead = e.terms.begin()->first;
  for (const auto& [mask, c] : e.terms) {
    (void)c;
    if (subset_lex_less(mask, lead)) lead = mask;
  }
  const Rat d = e.terms.at(lead);
  for (auto& [mask, c] : e.terms) {
    (void)mask;
    c /= d;
  }
  return e;
}

bool ext_proj_equal(const ExtElement& x, const ExtElement& y) {
  const ExtElement a = normalize_projective(x);
  const ExtElement b = normalize_projective(y);
  return a == b;
}

ExtElement pure_spinor(int n, int l, const Mat& A) {
  if (n < 1 || n > 31) throw usage_error("pure_spinor supports 1 <= n <= 31");
  if (l < 0 || l > n) throw usage_error("pure_spinor requires 0 <= l <= n");
  if (A.rows() != static_cast<std::size_t>(n) || A.cols() != static_cast<std::size_t>(n)) {
    throw math_error("shape", "pure_spinor requires an n x n matrix");
  }
  require_skew(A);

  ExtElement phi;
  phi.n = n;
  // Index sets are enumerated as bitmasks over {1..n}; only even sizes can
  // contribute (odd-size principal submatrices of a skew matrix are
  // singular, and the Pfaffian is only defined for even sizes).
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
    const auto subset = mask_to_subset(mask);
    if (subset.size() % 2 != 0) continue;
    std::vector<std::size_t> idx(subset.size());
    for (std::size_t t = 0; t < subset.size(); ++t) idx[t] = subset[t] - 1;
    const Rat coef = pfaffian_sub(A, idx);
    if (coef == 0) continue;

    std::vector<int> lows, highs;  // entries <= l contract, entries > l wedge
    for (int s : subset) {
      (s <= l ? lows : highs).push_back(s);
    }
    ExtElement term = ext_unit(n);
    for (int f = l; f >= 1; --f) term = wedge(f, term);
    for (auto it = highs.rbegin(); it != highs.rend(); ++it) term = wedge(*it, term);
    for (auto it = lows.rbegin(); it != lows.rend(); ++it) term = contract(*it, term);
    for (const auto& [m, c] : term.terms) add_term(phi, m, coef * c);
  }
  return phi;
}

Mat graph_rows(int n, int l, const Mat& A) {
  Mat m(n, 2 * n);
  for (int c = 0; c < n; ++c) {
    if (c < l) {
      m.at(c, n + c) = 1;  // u_c = e*_{c+1}
    } else {
      m.at(c, c) = 1;  // u_c = e_{c+1}
    }
    for (int s = 0; s < n; ++s) {
      if (A.at(c, s) == 0) continue;
      if (s < l) {
        m.at(c, s) -= A.at(c, s);  // u'_s = e_{s+1}
      } else {
        m.at(c, n + s) -= A.at(c, s);  // u'_s = e*_{s+1}
      }
    }
  }
  return m;
}

bool annihilation_check(int n, int l, const Mat& A) {
  const ExtElement phi = pure_spinor(n, l, A);
  const Mat rows = graph_rows(n, l, A);
  for (int r = 0; r < n; ++r) {
    std::vector<Rat> v(n), alpha(n);
    for (int j = 0; j < n; ++j) {
      v[j] = rows.at(r, j);
      alpha[j] = rows.at(r, n + j);
    }
    if (!clifford_act(v, alpha, phi).terms.empty()) return false;
  }
  return true;
}

ExtElement spinor_embed(const IsotropicPoint& p, int l) {
  const int n = p.n;
  if (p.family != Family::OG) throw usage_error("spinor_embed expects the orthogonal family");
  if (l < 0 || l > n) throw usage_error("spinor_embed requires 0 <= l <= n");
  if (p.m.rows() != static_cast<std::size_t>(n) ||
      p.m.cols() != static_cast<std::size_t>(2 * n)) {
    throw math_error("shape", "expected an n x 2n matrix");
  }

  // Columns of the chart's base subspace: e*_c for c <= l, e_c for c > l.
  Mat sub(n, n);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      sub.at(r, c) = (c < l) ? p.m.at(r, n + c) : p.m.at(r, c);
    }
  }
  Mat inv;
  try {
    inv = inverse(sub);
  } catch (const math_error&) {
    throw math_error("chart", "point lies outside the requested chart");
  }
  const Mat norm = inv * p.m;

  Mat M(n, n);
  for (int c = 0; c < n; ++c) {
    for (int s = 0; s < n; ++s) {
      M.at(c, s) = (s < l) ? norm.at(c, s) : norm.at(c, n + s);
    }
  }
  Mat A(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) A.at(i, j) = -M.at(i, j);
  }
  require_skew(A);  // fails iff the row span is not isotropic
  return pure_spinor(n, l, A);
}

ExtElement degree_truncate(const ExtElement& e, const std::vector<int>& degrees) {
  ExtElement out;
  out.n = e.n;
  for (const auto& [mask, c] : e.terms) {
    const int deg = std::popcount(mask);
    if (std::find(degrees.begin(), degrees.end(), deg) != degrees.end()) {
      out.terms.emplace(mask, c);
    }
  }
  return out;
}

}  // namespace isogr
