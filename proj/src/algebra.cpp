#include "scott_brauer/algebra.hpp"

#include <cstdint>

#include "scott_brauer/error.hpp"

namespace sb {

namespace {

Mat unflatten_row(const Field& f, std::span<const Elem> v, std::size_t n) { return Mat::unflatten(f, v, n, n); }

}  // namespace

Algebra Algebra::generated_by(const Field& f, std::size_t n, const std::vector<Mat>& gens) {
  Algebra a;
  a.f_ = f;
  a.n_ = n;
  auto ech = std::make_shared<SemiEchelon>(f, n * n);
  std::vector<Mat> words;
  auto push = [&](const Mat& x) {
    if (ech->add(x.flatten())) words.push_back(x);
  };
  push(Mat::identity(f, n));
  for (std::size_t head = 0; head < words.size(); ++head)
    for (const auto& g : gens) push(words[head] * g);
  for (const auto& row : ech->rows()) a.basis_.push_back(unflatten_row(f, row, n));
  a.ech_ = std::move(ech);
  return a;
}

Algebra Algebra::from_span(const Field& f, std::size_t n, const std::vector<Mat>& spanning, bool check_closed) {
  Algebra a;
  a.f_ = f;
  a.n_ = n;
  auto ech = std::make_shared<SemiEchelon>(f, n * n);
  ech->add(Mat::identity(f, n).flatten());
  for (const auto& x : spanning) {
    detail::require(x.rows() == n && x.cols() == n, "algebra element has the wrong shape");
    ech->add(x.flatten());
  }
  for (const auto& row : ech->rows()) a.basis_.push_back(unflatten_row(f, row, n));
  a.ech_ = std::move(ech);
  if (check_closed) {
    for (const auto& x : a.basis_)
      for (const auto& y : a.basis_)
        detail::require(a.ech_->contains((x * y).flatten()), "spanning set is not closed under multiplication");
  }
  return a;
}

std::optional<Vec> Algebra::coordinates(const Mat& x) const {
  if (x.rows() != n_ || x.cols() != n_) return std::nullopt;
  Vec v = x.flatten();
  Vec coeff;
  ech_->reduce(v, coeff);
  for (Elem e : v)
    if (e != 0) return std::nullopt;
  coeff.resize(dim(), 0);
  return coeff;
}

Mat Algebra::element(std::span<const Elem> coords) const {
  detail::require(coords.size() == dim(), "algebra coordinates have the wrong length");
  Mat out(f_, n_, n_);
  for (std::size_t i = 0; i < dim(); ++i)
    if (coords[i]) out = out + scale(basis_[i], coords[i]);
  return out;
}

std::vector<Mat> Algebra::left_regular() const {
  const std::size_t d = dim();
  std::vector<Mat> out;
  for (std::size_t t = 0; t < d; ++t) {
    Mat l(f_, d, d);
    for (std::size_t u = 0; u < d; ++u) {
      auto c = coordinates(basis_[t] * basis_[u]);
      detail::check(c.has_value(), "algebra is not closed under multiplication");
      for (std::size_t r = 0; r < d; ++r) l(r, u) = (*c)[r];
    }
    out.push_back(std::move(l));
  }
  return out;
}

namespace {

using IMat = std::vector<std::uint64_t>;

IMat imul(const IMat& a, const IMat& b, std::size_t n, std::uint64_t mod) {
  IMat c(n * n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      std::uint64_t x = a[i * n + k];
      if (!x) continue;
      for (std::size_t j = 0; j < n; ++j) c[i * n + j] += x * b[k * n + j];
    }
  for (auto& x : c) x %= mod;
  return c;
}

// The F_p-matrix of x in Mat_n(F_q), each entry replaced by its
// multiplication matrix on the polynomial basis of F_q.
IMat blow_up(const Mat& x, const std::vector<Elem>& powers) {
  const Field& f = x.field();
  const std::size_t n = x.rows(), m = f.degree(), nn = n * m;
  IMat out(nn * nn, 0);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t s = 0; s < n; ++s) {
      Elem c = x(r, s);
      if (!c) continue;
      for (std::size_t k = 0; k < m; ++k) {
        auto co = f.coords(f.mul(c, powers[k]));
        for (std::size_t kk = 0; kk < m; ++kk) out[(r * m + kk) * nn + s * m + k] = co[kk];
      }
    }
  return out;
}

// (Tr(x~^{p^i}) mod p^{i+1}) / p^i
Elem trace_functional(const Mat& x, unsigned i, const std::vector<Elem>& powers) {
  const unsigned p = x.field().characteristic();
  const std::size_t nn = x.rows() * x.field().degree();
  std::uint64_t pi = 1;
  for (unsigned k = 0; k < i; ++k) pi *= p;
  const std::uint64_t mod = pi * p;
  IMat base = blow_up(x, powers);
  IMat acc;
  bool have = false;
  for (std::uint64_t e = pi; e; e >>= 1) {
    if (e & 1) {
      acc = have ? imul(acc, base, nn, mod) : base;
      have = true;
    }
    if (e > 1) base = imul(base, base, nn, mod);
  }
  std::uint64_t tr = 0;
  for (std::size_t d = 0; d < nn; ++d) tr += acc[d * nn + d];
  tr %= mod;
  detail::check(tr % pi == 0, "radical: trace not divisible at this level");
  return static_cast<Elem>(tr / pi);
}

}  // namespace

Mat radical(const Algebra& a) {
  const Field& f = a.field();
  const unsigned p = f.characteristic(), m = f.degree();
  const std::size_t d = a.dim();
  std::vector<Mat> rep = a.basis();
  std::size_t n = a.degree();
  if (d < n) {
    rep = a.left_regular();
    n = d;
  }
  const std::size_t nn = n * m, dp = d * m;
  std::vector<Elem> powers(m);
  for (unsigned k = 0; k < m; ++k) powers[k] = k == 0 ? 1 : f.mul(powers[k - 1], f.gen());

  Field fp = Field::make(p);
  auto element_of = [&](std::span<const Elem> c) {
    Mat x(f, n, n);
    for (std::size_t j = 0; j < d; ++j) {
      std::vector<Elem> co(c.begin() + j * m, c.begin() + (j + 1) * m);
      Elem s = f.from_coords(co);
      if (s) x = x + scale(rep[j], s);
    }
    return x;
  };
  std::vector<Mat> fp_basis;
  for (std::size_t j = 0; j < d; ++j)
    for (unsigned k = 0; k < m; ++k) fp_basis.push_back(scale(rep[j], powers[k]));

  unsigned levels = 0;
  for (std::size_t t = p; t <= nn; t *= p) ++levels;

  Mat ideal = Mat::identity(fp, dp);
  for (unsigned i = 0; i <= levels && ideal.rows() > 0; ++i) {
    Mat g(fp, ideal.rows(), dp);
    for (std::size_t s = 0; s < ideal.rows(); ++s) {
      Mat x = element_of(ideal.row(s));
      for (std::size_t t = 0; t < dp; ++t) g(s, t) = trace_functional(x * fp_basis[t], i, powers);
    }
    Mat ker = kernel_basis(g.transpose());
    ideal = ker.rows() ? row_space(ker * ideal) : Mat(fp, 0, dp);
  }

  Mat out(f, 0, d);
  for (std::size_t s = 0; s < ideal.rows(); ++s) {
    Vec c(d);
    auto row = ideal.row(s);
    for (std::size_t j = 0; j < d; ++j) c[j] = f.from_coords(std::vector<Elem>(row.begin() + j * m, row.begin() + (j + 1) * m));
    out.append_row(c);
  }
  return row_space(out);
}

}  // namespace sb
