#pragma once

// Finite-dimensional matrix algebras over GF(q) and their Jacobson radicals.

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "scott_brauer/mat.hpp"

namespace sb {

/// A unital subalgebra of Mat_n(F), stored by a basis in semi-echelon form
/// (on flattened matrices) so coordinates are cheap.
class Algebra {
 public:
  Algebra() = default;

  /// Algebra generated by `gens` and the identity.
  static Algebra generated_by(const Field& f, std::size_t n, const std::vector<Mat>& gens);
  /// Span of the identity and `spanning`, which must already be closed under
  /// products. Closure is verified when `check_closed`.
  static Algebra from_span(const Field& f, std::size_t n, const std::vector<Mat>& spanning,
                           bool check_closed = true);

  const Field& field() const { return f_; }
  std::size_t dim() const { return basis_.size(); }
  /// Size of the matrices.
  std::size_t degree() const { return n_; }
  /// basis()[0] is the identity.
  const std::vector<Mat>& basis() const { return basis_; }

  std::optional<Vec> coordinates(const Mat& a) const;
  bool contains(const Mat& a) const { return coordinates(a).has_value(); }
  Mat element(std::span<const Elem> coords) const;

  /// Left multiplication by each basis element, in coordinates (dim x dim).
  std::vector<Mat> left_regular() const;

 private:
  Field f_;
  std::size_t n_ = 0;
  std::vector<Mat> basis_;
  std::shared_ptr<const SemiEchelon> ech_;
};

/// Jacobson radical as coordinate rows (RREF, dim() columns). Computed over
/// the prime field by the trace-form chain for characteristic p, applied to
/// the smaller of the natural and the left regular representation.
Mat radical(const Algebra& a);

}  // namespace sb
