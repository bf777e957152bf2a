#pragma once

#include <initializer_list>
#include <map>
#include <numeric>
#include <utility>
#include <vector>

#include "intrep/errors.hpp"
#include "intrep/field.hpp"

namespace intrep {

// Dense matrix over an exact field. Matrices with zero rows or columns are
// ordinary values; every formula downstream leans on that.
template <class F>
class Matrix {
 public:
  using Element = typename F::Element;

  Matrix() = default;
  Matrix(F field, int rows, int cols)
      : field_(std::move(field)),
        rows_(rows),
        cols_(cols),
        data_(static_cast<std::size_t>(rows) * cols, field_.zero()) {}

  static Matrix identity(F field, int n) {
    Matrix m(field, n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = field.one();
    return m;
  }

  static Matrix from_int_rows(F field, int rows, int cols,
                              std::initializer_list<std::initializer_list<long>> vals) {
    Matrix m(field, rows, cols);
    int i = 0;
    for (const auto& row : vals) {
      int j = 0;
      for (long v : row) m.at(i, j++) = field.from_int(v);
      ++i;
    }
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const F& field() const { return field_; }

  Element& at(int i, int j) { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
  const Element& at(int i, int j) const {
    return data_[static_cast<std::size_t>(i) * cols_ + j];
  }

  Matrix transpose() const {
    Matrix t(field_, cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
  }

  Matrix negate() const {
    Matrix r = *this;
    for (auto& e : r.data_) e = field_.neg(e);
    return r;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_ || !(a.field_ == b.field_))
      throw ShapeMismatch("matrix product shape mismatch");
    Matrix c(a.field_, a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
      for (int k = 0; k < a.cols_; ++k) {
        const auto& aik = a.at(i, k);
        if (a.field_.is_zero(aik)) continue;
        for (int j = 0; j < b.cols_; ++j)
          c.at(i, j) = a.field_.add(c.at(i, j), a.field_.mul(aik, b.at(k, j)));
      }
    return c;
  }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_ || !(a.field_ == b.field_))
      throw ShapeMismatch("matrix sum shape mismatch");
    Matrix c = a;
    for (std::size_t k = 0; k < c.data_.size(); ++k)
      c.data_[k] = a.field_.add(c.data_[k], b.data_[k]);
    return c;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_ || !(a.field_ == b.field_))
      return false;
    for (std::size_t k = 0; k < a.data_.size(); ++k)
      if (!a.field_.eq(a.data_[k], b.data_[k])) return false;
    return true;
  }

  bool is_zero() const {
    for (const auto& e : data_)
      if (!field_.is_zero(e)) return false;
    return true;
  }

 private:
  F field_{};
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Element> data_;
};

// Row/column block sizes for assembling matrices of morphisms. Zero sizes
// are legal and make the corresponding strip vanish.
struct BlockLayout {
  std::vector<int> row_sizes;
  std::vector<int> col_sizes;

  int total_rows() const {
    return std::accumulate(row_sizes.begin(), row_sizes.end(), 0);
  }
  int total_cols() const {
    return std::accumulate(col_sizes.begin(), col_sizes.end(), 0);
  }
  int row_offset(int i) const {
    return std::accumulate(row_sizes.begin(), row_sizes.begin() + i, 0);
  }
  int col_offset(int j) const {
    return std::accumulate(col_sizes.begin(), col_sizes.begin() + j, 0);
  }
};

// Assembles a flat matrix from blocks keyed by (block-row, block-col).
// Absent blocks are zero; present blocks must match the layout cell.
template <class F>
Matrix<F> block_assemble(const F& field, const BlockLayout& layout,
                         const std::map<std::pair<int, int>, Matrix<F>>& blocks) {
  Matrix<F> out(field, layout.total_rows(), layout.total_cols());
  for (const auto& [key, blk] : blocks) {
    auto [bi, bj] = key;
    if (bi < 0 || bi >= static_cast<int>(layout.row_sizes.size()) || bj < 0 ||
        bj >= static_cast<int>(layout.col_sizes.size()))
      throw ShapeMismatch("block index outside layout");
    if (blk.rows() != layout.row_sizes[bi] || blk.cols() != layout.col_sizes[bj])
      throw ShapeMismatch("block does not match its layout cell");
    const int r0 = layout.row_offset(bi), c0 = layout.col_offset(bj);
    for (int i = 0; i < blk.rows(); ++i)
      for (int j = 0; j < blk.cols(); ++j) out.at(r0 + i, c0 + j) = blk.at(i, j);
  }
  return out;
}

namespace detail {

// Fraction-free Bareiss elimination on an integer copy of the matrix.
inline int rank_bareiss(std::vector<std::vector<mpz_class>> a) {
  const int m = static_cast<int>(a.size());
  const int n = m == 0 ? 0 : static_cast<int>(a[0].size());
  int r = 0;
  mpz_class prev(1);
  for (int c = 0; c < n && r < m; ++c) {
    int pivot = -1;
    for (int i = r; i < m; ++i)
      if (a[i][c] != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    std::swap(a[r], a[pivot]);
    for (int i = r + 1; i < m; ++i) {
      for (int j = c + 1; j < n; ++j) {
        mpz_class t = a[r][c] * a[i][j] - a[i][c] * a[r][j];
        mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    ++r;
  }
  return r;
}

}  // namespace detail

// Rank over the field: fraction-free elimination after clearing row
// denominators for Q, plain modular elimination for prime fields.
template <class F>
int rank(const Matrix<F>& A) {
  if (A.rows() == 0 || A.cols() == 0) return 0;
  if constexpr (F::is_rational) {
    std::vector<std::vector<mpz_class>> b(
        A.rows(), std::vector<mpz_class>(A.cols()));
    for (int i = 0; i < A.rows(); ++i) {
      mpz_class lcm(1);
      for (int j = 0; j < A.cols(); ++j)
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(),
                A.at(i, j).get_den().get_mpz_t());
      for (int j = 0; j < A.cols(); ++j) {
        mpq_class scaled = A.at(i, j) * lcm;
        b[i][j] = scaled.get_num();
      }
    }
    return detail::rank_bareiss(std::move(b));
  } else {
    const F& f = A.field();
    Matrix<F> a = A;
    int r = 0;
    for (int c = 0; c < a.cols() && r < a.rows(); ++c) {
      int pivot = -1;
      for (int i = r; i < a.rows(); ++i)
        if (!f.is_zero(a.at(i, c))) {
          pivot = i;
          break;
        }
      if (pivot < 0) continue;
      if (pivot != r)
        for (int j = c; j < a.cols(); ++j) std::swap(a.at(r, j), a.at(pivot, j));
      auto pinv = f.inv(a.at(r, c));
      for (int i = r + 1; i < a.rows(); ++i) {
        if (f.is_zero(a.at(i, c))) continue;
        auto factor = f.mul(a.at(i, c), pinv);
        for (int j = c; j < a.cols(); ++j)
          a.at(i, j) = f.sub(a.at(i, j), f.mul(factor, a.at(r, j)));
      }
      ++r;
    }
    return r;
  }
}

namespace detail {

// Reduced row echelon form in place; returns pivot column indices.
template <class F>
std::vector<int> rref(Matrix<F>& a) {
  const F& f = a.field();
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < a.cols() && r < a.rows(); ++c) {
    int pivot = -1;
    for (int i = r; i < a.rows(); ++i)
      if (!f.is_zero(a.at(i, c))) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != r)
      for (int j = 0; j < a.cols(); ++j) std::swap(a.at(r, j), a.at(pivot, j));
    auto pinv = f.inv(a.at(r, c));
    for (int j = 0; j < a.cols(); ++j) a.at(r, j) = f.mul(a.at(r, j), pinv);
    for (int i = 0; i < a.rows(); ++i) {
      if (i == r || f.is_zero(a.at(i, c))) continue;
      auto factor = a.at(i, c);
      for (int j = 0; j < a.cols(); ++j)
        a.at(i, j) = f.sub(a.at(i, j), f.mul(factor, a.at(r, j)));
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace detail

// Columns form a basis of the right null space; cols = cols(A) - rank(A).
template <class F>
Matrix<F> kernel_basis(const Matrix<F>& A) {
  const F& f = A.field();
  Matrix<F> a = A;
  auto pivots = detail::rref(a);
  std::vector<bool> is_pivot(A.cols(), false);
  for (int c : pivots) is_pivot[c] = true;
  Matrix<F> K(f, A.cols(), A.cols() - static_cast<int>(pivots.size()));
  int k = 0;
  for (int c = 0; c < A.cols(); ++c) {
    if (is_pivot[c]) continue;
    K.at(c, k) = f.one();
    for (int r = 0; r < static_cast<int>(pivots.size()); ++r)
      K.at(pivots[r], k) = f.neg(a.at(r, c));
    ++k;
  }
  return K;
}

// Full-row-rank Q with Q * A = 0 and rows(Q) = rows(A) - rank(A); the rows
// describe a complement of the column space.
template <class F>
Matrix<F> cokernel_projection(const Matrix<F>& A) {
  return kernel_basis(A.transpose()).transpose();
}

}  // namespace intrep
