#pragma once

#include <string>
#include <vector>

#include "scott_brauer/mat.hpp"

namespace sb {

/// Univariate polynomial over a finite field, coefficients low to high with
/// no trailing zeros (the zero polynomial has no coefficients).
class Poly {
 public:
  Poly() = default;
  Poly(Field f, Vec coeffs);
  static Poly monomial(const Field& f, std::size_t degree, Elem c);
  static Poly x_minus(const Field& f, Elem root);

  const Field& field() const { return f_; }
  const Vec& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  Elem coeff(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
  Elem lead() const { return c_.empty() ? 0 : c_.back(); }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }
  Poly monic() const;
  Elem eval(Elem x) const;
  std::string to_string() const;

  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

 private:
  Field f_;
  Vec c_;
};

Poly operator+(const Poly& a, const Poly& b);
Poly operator-(const Poly& a, const Poly& b);
Poly operator*(const Poly& a, const Poly& b);
/// Quotient and remainder; throws PreconditionError on division by zero.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
Poly poly_gcd(Poly a, Poly b);

/// f(A) for square A.
Mat eval(const Poly& f, const Mat& a);

/// Monic minimal polynomial. Asserts that it divides the characteristic polynomial.
Poly min_poly(const Mat& a);
/// Monic characteristic polynomial det(xI - A).
Poly char_poly(const Mat& a);

}  // namespace sb
