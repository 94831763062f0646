#include "isogr/matrix.hpp"

#include <cstdint>

#include "isogr/errors.hpp"

namespace isogr {

Mat Mat::identity(std::size_t n) {
  Mat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Mat operator*(const Mat& x, const Mat& y) {
  if (x.cols() != y.rows()) {
    throw math_error("shape", "matrix product shape mismatch");
  }
  Mat out(x.rows(), y.cols());
  for (std::size_t i = 0; i < x.rows(); ++i) {
    for (std::size_t k = 0; k < x.cols(); ++k) {
      const Rat& v = x.at(i, k);
      if (v == 0) continue;
      for (std::size_t j = 0; j < y.cols(); ++j) {
        out.at(i, j) += v * y.at(k, j);
      }
    }
  }
  return out;
}

Mat transpose(const Mat& m) {
  Mat out(m.cols(), m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out.at(j, i) = m.at(i, j);
  }
  return out;
}

Mat inverse(const Mat& m) {
  if (m.rows() != m.cols()) throw math_error("shape", "inverse of non-square matrix");
  const std::size_t n = m.rows();
  Mat a = m;
  Mat inv = Mat::identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a.at(piv, col) == 0) ++piv;
    if (piv == n) throw math_error("singular", "matrix is singular");
    if (piv != col) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a.at(piv, j), a.at(col, j));
        std::swap(inv.at(piv, j), inv.at(col, j));
      }
    }
    const Rat d = a.at(col, col);
    for (std::size_t j = 0; j < n; ++j) {
      a.at(col, j) /= d;
      inv.at(col, j) /= d;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a.at(r, col) == 0) continue;
      const Rat f = a.at(r, col);
      for (std::size_t j = 0; j < n; ++j) {
        a.at(r, j) -= f * a.at(col, j);
        inv.at(r, j) -= f * inv.at(col, j);
      }
    }
  }
  return inv;
}

Rat det(const Mat& m) {
  if (m.rows() != m.cols()) throw math_error("shape", "determinant of non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  Mat a = m;
  Rat prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a.at(k, k) == 0) {
      std::size_t piv = k + 1;
      while (piv < n && a.at(piv, k) == 0) ++piv;
      if (piv == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(piv, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a.at(i, j) = (a.at(k, k) * a.at(i, j) - a.at(i, k) * a.at(k, j)) / prev;
      }
      a.at(i, k) = 0;
    }
    prev = a.at(k, k);
  }
  Rat d = a.at(n - 1, n - 1);
  if (sign < 0) d = -d;
  return d;
}

Rat det_cofactor(const Mat& m) {
  if (m.rows() != m.cols()) throw math_error("shape", "determinant of non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  if (n == 1) return m.at(0, 0);
  Rat tot = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (m.at(0, j) == 0) continue;
    Mat sub(n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r) {
      std::size_t cc = 0;
      for (std::size_t c = 0; c < n; ++c) {
        if (c == j) continue;
        sub.at(r - 1, cc++) = m.at(r, c);
      }
    }
    const Rat term = m.at(0, j) * det_cofactor(sub);
    if (j % 2 == 0) {
      tot += term;
    } else {
      tot -= term;
    }
  }
  return tot;
}

Rat minor_det(const Mat& m, const std::vector<std::size_t>& rows,
              const std::vector<std::size_t>& cols) {
  if (rows.size() != cols.size()) {
    throw math_error("shape", "minor requires equally many rows and columns");
  }
  Mat sub(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i] >= m.rows()) throw math_error("shape", "minor row index out of range");
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (cols[j] >= m.cols()) throw math_error("shape", "minor column index out of range");
      sub.at(i, j) = m.at(rows[i], cols[j]);
    }
  }
  return det(sub);
}

void require_skew(const Mat& m) {
  if (m.rows() != m.cols()) throw math_error("not_skew", "skew matrix must be square");
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = i; j < m.cols(); ++j) {
      if (m.at(i, j) != -m.at(j, i)) {
        throw math_error("not_skew", "matrix is not skew-symmetric");
      }
    }
  }
}

namespace {

Rat pf_rec(const Mat& m, const std::vector<std::size_t>& idx) {
  if (idx.empty()) return 1;
  Rat tot = 0;
  for (std::size_t t = 1; t < idx.size(); ++t) {
    const Rat& c = m.at(idx[0], idx[t]);
    if (c == 0) continue;
    std::vector<std::size_t> rest;
    rest.reserve(idx.size() - 2);
    for (std::size_t s = 1; s < idx.size(); ++s) {
      if (s != t) rest.push_back(idx[s]);
    }
    const Rat term = c * pf_rec(m, rest);
    if (t % 2 == 1) {
      tot += term;
    } else {
      tot -= term;
    }
  }
  return tot;
}

// Parity of the permutation given as the flattened pair sequence.
int flat_sign(const std::vector<std::size_t>& seq) {
  int inv = 0;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    for (std::size_t j = i + 1; j < seq.size(); ++j) {
      if (seq[i] > seq[j]) ++inv;
    }
  }
  return (inv % 2 == 0) ? 1 : -1;
}

void pf_matchings(const Mat& m, std::vector<bool>& used,
                  std::vector<std::size_t>& flat, Rat& acc) {
  std::size_t a = 0;
  while (a < used.size() && used[a]) ++a;
  if (a == used.size()) {
    Rat term = flat_sign(flat);
    for (std::size_t t = 0; t + 1 < flat.size(); t += 2) {
      term *= m.at(flat[t], flat[t + 1]);
    }
    acc += term;
    return;
  }
  used[a] = true;
  for (std::size_t b = a + 1; b < used.size(); ++b) {
    if (used[b]) continue;
    used[b] = true;
    flat.push_back(a);
    flat.push_back(b);
    pf_matchings(m, used, flat, acc);
    flat.pop_back();
    flat.pop_back();
    used[b] = false;
  }
  used[a] = false;
}

}  // namespace

Rat pfaffian(const Mat& m) {
  require_skew(m);
  if (m.rows() % 2 != 0) throw math_error("odd_size", "pfaffian requires even size");
  std::vector<std::size_t> idx(m.rows());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  return pf_rec(m, idx);
}

Rat pfaffian_perm_sum(const Mat& m) {
  require_skew(m);
  if (m.rows() % 2 != 0) throw math_error("odd_size", "pfaffian requires even size");
  if (m.rows() == 0) return 1;
  Rat acc = 0;
  std::vector<bool> used(m.rows(), false);
  std::vector<std::size_t> flat;
  pf_matchings(m, used, flat, acc);
  return acc;
}

Rat pfaffian_sub(const Mat& m, const std::vector<std::size_t>& idx) {
  Mat sub(idx.size(), idx.size());
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (idx[i] >= m.rows() || idx[i] >= m.cols()) {
      throw math_error("shape", "pfaffian_sub index out of range");
    }
    for (std::size_t j = 0; j < idx.size(); ++j) {
      sub.at(i, j) = m.at(idx[i], idx[j]);
    }
  }
  return pfaffian(sub);
}

std::size_t rank(const Mat& m) {
  Mat a = m;
  std::size_t r = 0;
  for (std::size_t col = 0; col < a.cols() && r < a.rows(); ++col) {
    std::size_t piv = r;
    while (piv < a.rows() && a.at(piv, col) == 0) ++piv;
    if (piv == a.rows()) continue;
    if (piv != r) {
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a.at(piv, j), a.at(r, j));
    }
    for (std::size_t i = r + 1; i < a.rows(); ++i) {
      if (a.at(i, col) == 0) continue;
      const Rat f = a.at(i, col) / a.at(r, col);
      for (std::size_t j = col; j < a.cols(); ++j) {
        a.at(i, j) -= f * a.at(r, j);
      }
    }
    ++r;
  }
  return r;
}

}  // namespace isogr
