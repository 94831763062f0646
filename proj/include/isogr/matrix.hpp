#pragma once

#include <cstddef>
#include <vector>

#include "isogr/rational.hpp"

namespace isogr {

// Dense matrix of exact rationals, row major.
class Mat {
 public:
  Mat() = default;
  Mat(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols) {}

  static Mat identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rat& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Rat& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  friend bool operator==(const Mat& x, const Mat& y) {
    return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rat> a_;
};

Mat operator*(const Mat& x, const Mat& y);
Mat transpose(const Mat& m);

// Gauss-Jordan inverse; throws math_error("singular") when not invertible.
Mat inverse(const Mat& m);

// Determinant by fraction-free Bareiss elimination with row pivoting.
// det of the empty (0 x 0) matrix is 1.
Rat det(const Mat& m);

// Independent oracle: recursive Laplace expansion along the first row.
Rat det_cofactor(const Mat& m);

// Determinant of the submatrix formed by KEEPING the given rows/columns
// (0-based, strictly increasing).  Empty index sets give 1.
Rat minor_det(const Mat& m, const std::vector<std::size_t>& rows,
              const std::vector<std::size_t>& cols);

// Throws math_error("not_skew") unless m is square with m^T = -m
// (in particular the diagonal must be exactly zero).
void require_skew(const Mat& m);

// Pfaffian of an even-size skew matrix, by recursive expansion along the
// first row: Pf(A) = sum_{j>=2} (-1)^j a_{1j} Pf(A with rows/cols 1,j removed),
// with Pf of the empty matrix equal to 1.  Rejects odd sizes and non-skew
// input (math_error).
Rat pfaffian(const Mat& m);

// Independent oracle: the signed sum over perfect matchings
// sum sgn(sigma) a_{sigma(1)sigma(2)} ... a_{sigma(2r-1)sigma(2r)} where
// sigma runs over permutations with sigma(2m-1) < sigma(2m) and
// sigma(1) < sigma(3) < ... < sigma(2r-1).  Practical for sizes <= 10.
Rat pfaffian_perm_sum(const Mat& m);

// Pfaffian of the principal submatrix on the given (0-based, strictly
// increasing) index set.
Rat pfaffian_sub(const Mat& m, const std::vector<std::size_t>& idx);

// Rank over the rationals (exact Gaussian elimination).
std::size_t rank(const Mat& m);

}  // namespace isogr
