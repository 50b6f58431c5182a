#include "scott_brauer/poly.hpp"

#include <algorithm>
#include <sstream>

#include "scott_brauer/error.hpp"

namespace sb {

Poly::Poly(Field f, Vec coeffs) : f_(std::move(f)), c_(std::move(coeffs)) {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly Poly::monomial(const Field& f, std::size_t degree, Elem c) {
  Vec v(degree + 1, 0);
  v[degree] = c;
  return Poly(f, std::move(v));
}

Poly Poly::x_minus(const Field& f, Elem root) { return Poly(f, {f.neg(root), f.one()}); }

Poly Poly::monic() const {
  if (c_.empty() || c_.back() == 1) return *this;
  Elem s = f_.inv(c_.back());
  Vec v = c_;
  for (auto& x : v) x = f_.mul(x, s);
  return Poly(f_, std::move(v));
}

Elem Poly::eval(Elem x) const {
  Elem acc = 0;
  for (std::size_t i = c_.size(); i-- > 0;) acc = f_.add(f_.mul(acc, x), c_[i]);
  return acc;
}

std::string Poly::to_string() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = c_.size(); i-- > 0;) {
    if (c_[i] == 0) continue;
    if (!first) os << " + ";
    first = false;
    bool unit = c_[i] == 1;
    if (!unit || i == 0) os << f_.format(c_[i]);
    if (i > 0) os << (unit ? "" : "*") << "x";
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

Poly operator+(const Poly& a, const Poly& b) {
  const Field& f = a.is_zero() ? b.field() : a.field();
  Vec v(std::max(a.coeffs().size(), b.coeffs().size()), 0);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = f.add(a.coeff(i), b.coeff(i));
  return Poly(f, std::move(v));
}

Poly operator-(const Poly& a, const Poly& b) {
  const Field& f = a.is_zero() ? b.field() : a.field();
  Vec v(std::max(a.coeffs().size(), b.coeffs().size()), 0);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = f.sub(a.coeff(i), b.coeff(i));
  return Poly(f, std::move(v));
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly(a.field(), {});
  const Field& f = a.field();
  Vec v(a.coeffs().size() + b.coeffs().size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs().size(); ++i)
    for (std::size_t j = 0; j < b.coeffs().size(); ++j) v[i + j] = f.add(v[i + j], f.mul(a.coeff(i), b.coeff(j)));
  return Poly(f, std::move(v));
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw PreconditionError("polynomial division by zero");
  const Field& f = b.field();
  Vec r = a.coeffs();
  const std::size_t db = b.coeffs().size() - 1;
  if (r.size() <= db) return {Poly(f, {}), a};
  Vec q(r.size() - db, 0);
  Elem li = f.inv(b.lead());
  for (std::size_t k = r.size(); k-- > db;) {
    Elem c = f.mul(r[k], li);
    if (c == 0) continue;
    q[k - db] = c;
    for (std::size_t j = 0; j <= db; ++j) r[k - db + j] = f.sub(r[k - db + j], f.mul(c, b.coeff(j)));
  }
  return {Poly(f, std::move(q)), Poly(f, std::move(r))};
}

Poly poly_gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

Mat eval(const Poly& f, const Mat& a) {
  detail::require(a.is_square(), "polynomial evaluation at a non-square matrix");
  Mat acc(a.field(), a.rows(), a.cols());
  for (std::size_t i = f.coeffs().size(); i-- > 0;) {
    acc = acc * a;
    for (std::size_t d = 0; d < a.rows(); ++d) acc(d, d) = a.field().add(acc(d, d), f.coeff(i));
  }
  return acc;
}

Poly min_poly(const Mat& a) {
  detail::require(a.is_square(), "min_poly of a non-square matrix");
  const Field& f = a.field();
  const std::size_t n = a.rows();
  // Krylov sequence of matrix powers, tracking each echelon row as a
  // polynomial in a.
  std::vector<Vec> rows, exprs;
  std::vector<std::size_t> pivots;
  Mat power = Mat::identity(f, n);
  for (std::size_t j = 0;; ++j) {
    Vec v = power.flatten();
    Vec expr(j + 1, 0);
    expr[j] = f.one();
    for (std::size_t i = 0; i < rows.size(); ++i) {
      Elem c = v[pivots[i]];
      if (c == 0) continue;
      axpy(f, v, rows[i], f.neg(c));
      Vec e = exprs[i];
      e.resize(expr.size(), 0);
      axpy(f, expr, e, f.neg(c));
    }
    auto it = std::find_if(v.begin(), v.end(), [](Elem x) { return x != 0; });
    if (it == v.end()) {
      Poly mp(f, expr);
      detail::check(divmod(char_poly(a), mp).second.is_zero(), "minimal polynomial does not divide the characteristic polynomial");
      return mp;
    }
    std::size_t piv = static_cast<std::size_t>(it - v.begin());
    Elem s = f.inv(v[piv]);
    for (auto& x : v) x = f.mul(x, s);
    for (auto& x : expr) x = f.mul(x, s);
    rows.push_back(std::move(v));
    exprs.push_back(std::move(expr));
    pivots.push_back(piv);
    power = power * a;
  }
}

Poly char_poly(const Mat& a) {
  detail::require(a.is_square(), "char_poly of a non-square matrix");
  const Field& f = a.field();
  const std::size_t n = a.rows();
  Mat h = a;
  // Reduce to upper Hessenberg form by similarity.
  for (std::size_t j = 0; j + 2 < n; ++j) {
    std::size_t piv = j + 1;
    while (piv < n && h(piv, j) == 0) ++piv;
    if (piv == n) continue;
    if (piv != j + 1) {
      for (std::size_t c = 0; c < n; ++c) std::swap(h(piv, c), h(j + 1, c));
      for (std::size_t r = 0; r < n; ++r) std::swap(h(r, piv), h(r, j + 1));
    }
    Elem pinv = f.inv(h(j + 1, j));
    for (std::size_t i = j + 2; i < n; ++i) {
      Elem u = f.mul(h(i, j), pinv);
      if (u == 0) continue;
      for (std::size_t c = 0; c < n; ++c) h(i, c) = f.sub(h(i, c), f.mul(u, h(j + 1, c)));
      for (std::size_t r = 0; r < n; ++r) h(r, j + 1) = f.add(h(r, j + 1), f.mul(u, h(r, i)));
    }
  }
  // p_k = (x - h_kk) p_{k-1} - sum_i h_{k-i,k} (prod_{j=k-i+1..k} h_{j,j-1}) p_{k-i-1}
  std::vector<Poly> p{Poly(f, {f.one()})};
  for (std::size_t k = 1; k <= n; ++k) {
    Poly pk = Poly::x_minus(f, h(k - 1, k - 1)) * p[k - 1];
    Elem t = f.one();
    for (std::size_t i = 1; i < k; ++i) {
      t = f.mul(t, h(k - i, k - i - 1));
      Elem c = f.mul(h(k - i - 1, k - 1), t);
      if (c != 0) pk = pk - Poly(f, {c}) * p[k - i - 1];
    }
    p.push_back(std::move(pk));
  }
  return p[n];
}

}  // namespace sb
