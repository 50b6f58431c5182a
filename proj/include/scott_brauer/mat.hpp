#pragma once

// Dense row-major matrices over a finite field, with exact Gaussian
// elimination. Subspaces are carried as matrices of row vectors in reduced
// row echelon form, which makes equal subspaces compare equal.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "scott_brauer/field.hpp"

namespace sb {

using Vec = std::vector<Elem>;

class Mat {
 public:
  Mat() = default;
  Mat(Field f, std::size_t rows, std::size_t cols) : f_(std::move(f)), r_(rows), c_(cols), a_(rows * cols, 0) {}

  static Mat identity(const Field& f, std::size_t n);
  static Mat from_rows(const Field& f, const std::vector<Vec>& rows, std::size_t cols);
  static Mat from_ints(const Field& f, const std::vector<std::vector<long long>>& rows);
  static Mat scalar(const Field& f, std::size_t n, Elem c);

  const Field& field() const { return f_; }
  std::size_t rows() const { return r_; }
  std::size_t cols() const { return c_; }
  bool is_square() const { return r_ == c_; }
  bool empty() const { return r_ == 0 || c_ == 0; }

  Elem operator()(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }
  Elem& operator()(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }
  std::span<const Elem> row(std::size_t i) const { return {a_.data() + i * c_, c_}; }
  std::span<Elem> row(std::size_t i) { return {a_.data() + i * c_, c_}; }
  Vec row_vec(std::size_t i) const { return Vec(row(i).begin(), row(i).end()); }
  Vec col_vec(std::size_t j) const;
  const Vec& data() const { return a_; }

  void append_row(std::span<const Elem> v);
  Mat transpose() const;
  bool is_zero() const;
  bool is_identity() const;
  /// Rows [r0, r0+nr) and columns [c0, c0+nc).
  Mat block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const Mat& b);
  /// Row-major flattening as a single row.
  Vec flatten() const { return a_; }
  static Mat unflatten(const Field& f, std::span<const Elem> v, std::size_t rows, std::size_t cols);

  std::string to_string() const;

  friend bool operator==(const Mat& a, const Mat& b) {
    return a.r_ == b.r_ && a.c_ == b.c_ && a.a_ == b.a_ && (a.a_.empty() || a.f_ == b.f_);
  }

 private:
  Field f_;
  std::size_t r_ = 0, c_ = 0;
  Vec a_;
};

Mat operator*(const Mat& a, const Mat& b);
Mat operator+(const Mat& a, const Mat& b);
Mat operator-(const Mat& a, const Mat& b);
Mat scale(const Mat& a, Elem c);
Vec mat_vec(const Mat& a, std::span<const Elem> v);
Mat matrix_power(const Mat& a, std::uint64_t e);
Mat vstack(const Mat& a, const Mat& b);
Mat hstack(const Mat& a, const Mat& b);
Mat commutator(const Mat& a, const Mat& b);

/// dst += c * src
void axpy(const Field& f, std::span<Elem> dst, std::span<const Elem> src, Elem c);

struct RrefResult {
  Mat r;
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
};

RrefResult rref(Mat a);
std::size_t rank(const Mat& a);
/// Rows spanning {x : A x = 0}, in reduced row echelon form.
Mat kernel_basis(const Mat& a);
/// Rows spanning the column space of A, in reduced row echelon form.
Mat image_basis(const Mat& a);
/// Nonzero rows of rref(a): canonical basis of the row space.
Mat row_space(const Mat& a);
/// Some x with A x = b, or nullopt. Throws PreconditionError on dimension mismatch.
std::optional<Vec> solve(const Mat& a, std::span<const Elem> b);
std::optional<Mat> inverse(const Mat& a);
bool is_invertible(const Mat& a);
bool is_nilpotent(const Mat& a);

/// Entrywise image under the canonical embedding `from` -> `to`.
Mat extend_scalars(const Mat& a, const Field& from, const Field& to);

/// Rows kept in semi-echelon form for incremental membership tests: each row
/// has a leading 1 at its pivot and is zero at the pivots of earlier rows.
class SemiEchelon {
 public:
  SemiEchelon(Field f, std::size_t dim) : f_(std::move(f)), dim_(dim) {}
  /// Reduces v in place; afterwards v is zero at every pivot.
  void reduce(Vec& v) const;
  /// Same reduction, also recording coefficients: v_original = sum coeff[i]*row[i] + v_reduced.
  void reduce(Vec& v, Vec& coeff) const;
  bool contains(Vec v) const;
  /// Adds v if it is independent; returns whether it was added.
  bool add(Vec v);
  std::size_t size() const { return rows_.size(); }
  std::size_t dim() const { return dim_; }
  const std::vector<Vec>& rows() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  Mat to_mat() const { return Mat::from_rows(f_, rows_, dim_); }

 private:
  Field f_;
  std::size_t dim_;
  std::vector<Vec> rows_;
  std::vector<std::size_t> pivots_;
};

// Subspaces as RREF row bases.
Mat subspace_sum(const Mat& a, const Mat& b);
Mat subspace_intersection(const Mat& a, const Mat& b);
bool subspace_contains(const Mat& basis, std::span<const Elem> v);

/// Quotient U/T for subspaces T <= U of F^n given by row bases. The chosen
/// complement W has pivots disjoint from those of rref(T); coordinates of a
/// vector of U are read off at the pivots of W after reducing modulo T.
class QuotientSpace {
 public:
  QuotientSpace(const Mat& u, const Mat& t);
  std::size_t dim() const { return w_.rows(); }
  /// Representatives of a basis of U/T, as rows.
  const Mat& complement() const { return w_; }
  const Mat& sub() const { return t_; }
  /// Coordinates of v + T in the complement basis; v must lie in U.
  Vec coordinates(std::span<const Elem> v) const;
  /// Reduction of v modulo T (zero at the pivots of T).
  Vec reduce(std::span<const Elem> v) const;

 private:
  Mat t_;
  std::vector<std::size_t> t_pivots_;
  Mat w_;
  std::vector<std::size_t> w_pivots_;
};

}  // namespace sb
