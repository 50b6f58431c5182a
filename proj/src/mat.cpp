#include "scott_brauer/mat.hpp"

#include <algorithm>
#include <sstream>

#include "scott_brauer/error.hpp"

namespace sb {

Mat Mat::identity(const Field& f, std::size_t n) { return scalar(f, n, f.one()); }

Mat Mat::scalar(const Field& f, std::size_t n, Elem c) {
  Mat m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = c;
  return m;
}

Mat Mat::from_rows(const Field& f, const std::vector<Vec>& rows, std::size_t cols) {
  Mat m(f, rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    detail::require(rows[i].size() == cols, "Mat::from_rows: ragged rows");
    std::copy(rows[i].begin(), rows[i].end(), m.row(i).begin());
  }
  return m;
}

Mat Mat::from_ints(const Field& f, const std::vector<std::vector<long long>>& rows) {
  std::size_t cols = rows.empty() ? 0 : rows[0].size();
  Mat m(f, rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    detail::require(rows[i].size() == cols, "Mat::from_ints: ragged rows");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = f.from_int(rows[i][j]);
  }
  return m;
}

Mat Mat::unflatten(const Field& f, std::span<const Elem> v, std::size_t rows, std::size_t cols) {
  detail::require(v.size() == rows * cols, "Mat::unflatten: size mismatch");
  Mat m(f, rows, cols);
  std::copy(v.begin(), v.end(), m.a_.begin());
  return m;
}

Vec Mat::col_vec(std::size_t j) const {
  Vec v(r_);
  for (std::size_t i = 0; i < r_; ++i) v[i] = (*this)(i, j);
  return v;
}

void Mat::append_row(std::span<const Elem> v) {
  detail::require(v.size() == c_ || r_ == 0, "append_row: length mismatch");
  if (r_ == 0) c_ = v.size();
  a_.insert(a_.end(), v.begin(), v.end());
  ++r_;
}

Mat Mat::transpose() const {
  Mat t(f_, c_, r_);
  for (std::size_t i = 0; i < r_; ++i)
    for (std::size_t j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool Mat::is_zero() const {
  return std::all_of(a_.begin(), a_.end(), [](Elem x) { return x == 0; });
}

bool Mat::is_identity() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < r_; ++i)
    for (std::size_t j = 0; j < c_; ++j)
      if ((*this)(i, j) != (i == j ? 1u : 0u)) return false;
  return true;
}

Mat Mat::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  detail::require(r0 + nr <= r_ && c0 + nc <= c_, "Mat::block out of range");
  Mat b(f_, nr, nc);
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
  return b;
}

void Mat::set_block(std::size_t r0, std::size_t c0, const Mat& b) {
  detail::require(r0 + b.rows() <= r_ && c0 + b.cols() <= c_, "Mat::set_block out of range");
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) (*this)(r0 + i, c0 + j) = b(i, j);
}

std::string Mat::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < r_; ++i) {
    os << "[";
    for (std::size_t j = 0; j < c_; ++j) os << (j ? " " : "") << f_.format((*this)(i, j));
    os << "]\n";
  }
  return os.str();
}

void axpy(const Field& f, std::span<Elem> dst, std::span<const Elem> src, Elem c) {
  if (c == 0) return;
  const std::size_t n = dst.size();
  if (f.characteristic() == 2 && f.degree() == 1) {
    for (std::size_t i = 0; i < n; ++i) dst[i] ^= src[i];
    return;
  }
  if (f.is_prime_field()) {
    const std::uint64_t p = f.characteristic();
    for (std::size_t i = 0; i < n; ++i)
      if (src[i]) dst[i] = static_cast<Elem>((dst[i] + std::uint64_t{c} * src[i]) % p);
    return;
  }
  for (std::size_t i = 0; i < n; ++i)
    if (src[i]) dst[i] = f.add(dst[i], f.mul(c, src[i]));
}

Mat operator*(const Mat& a, const Mat& b) {
  detail::require(a.cols() == b.rows(), "matrix product: dimension mismatch");
  Mat c(a.field(), a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k)
      if (Elem x = a(i, k)) axpy(a.field(), c.row(i), b.row(k), x);
  return c;
}

Mat operator+(const Mat& a, const Mat& b) {
  detail::require(a.rows() == b.rows() && a.cols() == b.cols(), "matrix sum: dimension mismatch");
  Mat c = a;
  for (std::size_t i = 0; i < a.rows(); ++i) axpy(a.field(), c.row(i), b.row(i), a.field().one());
  return c;
}

Mat operator-(const Mat& a, const Mat& b) {
  detail::require(a.rows() == b.rows() && a.cols() == b.cols(), "matrix difference: dimension mismatch");
  Mat c = a;
  Elem m1 = a.field().neg(a.field().one());
  for (std::size_t i = 0; i < a.rows(); ++i) axpy(a.field(), c.row(i), b.row(i), m1);
  return c;
}

Mat scale(const Mat& a, Elem c) {
  Mat out(a.field(), a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) axpy(a.field(), out.row(i), a.row(i), c);
  return out;
}

Vec mat_vec(const Mat& a, std::span<const Elem> v) {
  detail::require(a.cols() == v.size(), "mat_vec: dimension mismatch");
  const Field& f = a.field();
  Vec out(a.rows(), 0);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Elem s = 0;
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (a(i, j) && v[j]) s = f.add(s, f.mul(a(i, j), v[j]));
    out[i] = s;
  }
  return out;
}

Mat matrix_power(const Mat& a, std::uint64_t e) {
  detail::require(a.is_square(), "matrix_power of a non-square matrix");
  Mat r = Mat::identity(a.field(), a.rows());
  Mat b = a;
  while (e) {
    if (e & 1u) r = r * b;
    e >>= 1u;
    if (e) b = b * b;
  }
  return r;
}

Mat vstack(const Mat& a, const Mat& b) {
  if (a.rows() == 0) return b;
  if (b.rows() == 0) return a;
  detail::require(a.cols() == b.cols(), "vstack: column mismatch");
  Mat c(a.field(), a.rows() + b.rows(), a.cols());
  c.set_block(0, 0, a);
  c.set_block(a.rows(), 0, b);
  return c;
}

Mat hstack(const Mat& a, const Mat& b) {
  detail::require(a.rows() == b.rows(), "hstack: row mismatch");
  Mat c(a.field(), a.rows(), a.cols() + b.cols());
  c.set_block(0, 0, a);
  c.set_block(0, a.cols(), b);
  return c;
}

Mat commutator(const Mat& a, const Mat& b) { return a * b - b * a; }

RrefResult rref(Mat a) {
  const Field f = a.field();
  RrefResult out;
  std::size_t r = 0;
  for (std::size_t col = 0; col < a.cols() && r < a.rows(); ++col) {
    std::size_t piv = r;
    while (piv < a.rows() && a(piv, col) == 0) ++piv;
    if (piv == a.rows()) continue;
    if (piv != r) std::swap_ranges(a.row(piv).begin(), a.row(piv).end(), a.row(r).begin());
    Elem s = f.inv(a(r, col));
    if (s != 1)
      for (auto& x : a.row(r)) x = f.mul(x, s);
    for (std::size_t i = 0; i < a.rows(); ++i)
      if (i != r && a(i, col)) axpy(f, a.row(i), a.row(r), f.neg(a(i, col)));
    out.pivots.push_back(col);
    ++r;
  }
  out.rank = r;
  out.r = std::move(a);
  return out;
}

std::size_t rank(const Mat& a) { return rref(a).rank; }

Mat row_space(const Mat& a) {
  auto rr = rref(a);
  return rr.r.block(0, 0, rr.rank, a.cols());
}

Mat kernel_basis(const Mat& a) {
  const Field& f = a.field();
  auto rr = rref(a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto c : rr.pivots) is_pivot[c] = true;
  Mat k(f, 0, a.cols());
  for (std::size_t free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vec x(a.cols(), 0);
    x[free] = f.one();
    for (std::size_t i = 0; i < rr.rank; ++i) x[rr.pivots[i]] = f.neg(rr.r(i, free));
    k.append_row(x);
  }
  if (k.rows() == 0) return Mat(f, 0, a.cols());
  return row_space(k);
}

Mat image_basis(const Mat& a) { return row_space(a.transpose()); }

std::optional<Vec> solve(const Mat& a, std::span<const Elem> b) {
  detail::require(a.rows() == b.size(), "solve: right-hand side length mismatch");
  Mat aug(a.field(), a.rows(), a.cols() + 1);
  aug.set_block(0, 0, a);
  for (std::size_t i = 0; i < a.rows(); ++i) aug(i, a.cols()) = b[i];
  auto rr = rref(std::move(aug));
  Vec x(a.cols(), 0);
  for (std::size_t i = 0; i < rr.rank; ++i) {
    if (rr.pivots[i] == a.cols()) return std::nullopt;
    x[rr.pivots[i]] = rr.r(i, a.cols());
  }
  return x;
}

std::optional<Mat> inverse(const Mat& a) {
  detail::require(a.is_square(), "inverse of a non-square matrix");
  const std::size_t n = a.rows();
  auto rr = rref(hstack(a, Mat::identity(a.field(), n)));
  if (rr.rank < n || (n > 0 && rr.pivots[n - 1] != n - 1)) return std::nullopt;
  return rr.r.block(0, n, n, n);
}

bool is_invertible(const Mat& a) { return a.is_square() && rank(a) == a.rows(); }

bool is_nilpotent(const Mat& a) {
  detail::require(a.is_square(), "is_nilpotent of a non-square matrix");
  Mat b = a;
  for (std::size_t k = 1; k < a.rows(); k *= 2) b = b * b;
  return b.is_zero();
}

Mat extend_scalars(const Mat& a, const Field& from, const Field& to) {
  detail::require(a.field() == from, "extend_scalars: matrix is not over the source field");
  const auto& emb = field_embedding(from, to);
  Mat out(to, a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = emb[a(i, j)];
  return out;
}

// ---------------------------------------------------------------- SemiEchelon

void SemiEchelon::reduce(Vec& v) const {
  for (std::size_t i = 0; i < rows_.size(); ++i)
    if (Elem c = v[pivots_[i]]) axpy(f_, v, rows_[i], f_.neg(c));
}

void SemiEchelon::reduce(Vec& v, Vec& coeff) const {
  coeff.assign(rows_.size(), 0);
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (Elem c = v[pivots_[i]]) {
      coeff[i] = c;
      axpy(f_, v, rows_[i], f_.neg(c));
    }
  }
}

bool SemiEchelon::contains(Vec v) const {
  reduce(v);
  return std::all_of(v.begin(), v.end(), [](Elem x) { return x == 0; });
}

bool SemiEchelon::add(Vec v) {
  detail::require(v.size() == dim_, "SemiEchelon::add: length mismatch");
  reduce(v);
  auto it = std::find_if(v.begin(), v.end(), [](Elem x) { return x != 0; });
  if (it == v.end()) return false;
  std::size_t piv = static_cast<std::size_t>(it - v.begin());
  Elem s = f_.inv(v[piv]);
  for (auto& x : v) x = f_.mul(x, s);
  rows_.push_back(std::move(v));
  pivots_.push_back(piv);
  return true;
}

// ---------------------------------------------------------------- subspaces

Mat subspace_sum(const Mat& a, const Mat& b) { return row_space(vstack(a, b)); }

Mat subspace_intersection(const Mat& a, const Mat& b) {
  if (a.rows() == 0) return a;
  if (b.rows() == 0) return b;
  // x in both iff x = sum s_i a_i = sum t_j b_j; solve [A; -B]^T (s,t) = 0.
  Mat stacked = vstack(a, scale(b, a.field().neg(a.field().one())));
  Mat rel = kernel_basis(stacked.transpose());
  if (rel.rows() == 0) return Mat(a.field(), 0, a.cols());
  return row_space(rel.block(0, 0, rel.rows(), a.rows()) * a);
}

bool subspace_contains(const Mat& basis, std::span<const Elem> v) {
  SemiEchelon e(basis.field(), basis.cols());
  for (std::size_t i = 0; i < basis.rows(); ++i) e.add(basis.row_vec(i));
  return e.contains(Vec(v.begin(), v.end()));
}

QuotientSpace::QuotientSpace(const Mat& u, const Mat& t) {
  const Field& f = u.field();
  auto rt = rref(t);
  t_ = rt.r.block(0, 0, rt.rank, t.cols());
  t_pivots_ = rt.pivots;
  Mat reduced(f, 0, u.cols());
  for (std::size_t i = 0; i < u.rows(); ++i) reduced.append_row(reduce(u.row(i)));
  if (reduced.rows() == 0) reduced = Mat(f, 0, u.cols());
  auto rw = rref(reduced);
  w_ = rw.r.block(0, 0, rw.rank, u.cols());
  w_pivots_ = rw.pivots;
  detail::check(w_.rows() + t_.rows() == rank(u), "QuotientSpace: T is not contained in U");
}

Vec QuotientSpace::reduce(std::span<const Elem> v) const {
  const Field& f = t_.field();
  Vec r(v.begin(), v.end());
  for (std::size_t i = 0; i < t_.rows(); ++i)
    if (Elem c = r[t_pivots_[i]]) axpy(f, r, t_.row(i), f.neg(c));
  return r;
}

Vec QuotientSpace::coordinates(std::span<const Elem> v) const {
  Vec r = reduce(v);
  Vec out(w_.rows());
  for (std::size_t i = 0; i < w_.rows(); ++i) out[i] = r[w_pivots_[i]];
  return out;
}

}  // namespace sb
