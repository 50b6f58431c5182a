#pragma once

// Endomorphism rings, decomposition into indecomposable summands, Scott
// modules, vertices and radical layers.

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "scott_brauer/algebra.hpp"
#include "scott_brauer/module.hpp"

namespace sb {

struct Summand {
  Module module;
  Mat inclusion;   ///< dim M x dim S; columns span the summand inside M
  Mat projection;  ///< dim S x dim M; projection * inclusion = identity
  /// dim of End(S)/J(End(S)) over the field; 1 means absolutely indecomposable.
  unsigned residue_degree = 1;
};

struct Decomposition {
  Field field;  ///< field of the summands (an extension in absolute mode)
  std::vector<Summand> summands;
  /// Degree of the scalar extension performed, 1 if none.
  unsigned extension_degree = 1;

  std::vector<std::size_t> dims() const;
};

struct DecomposeOptions {
  /// Split until every summand is absolutely indecomposable, extending the
  /// field when a residue field larger than the ground field appears.
  bool absolute = true;
  /// Seed of the randomized zero-divisor search (used only when the
  /// deterministic candidates fail).
  std::uint64_t seed = 0;
  std::size_t max_dim = 512;
  /// Try basis elements of End(M) as splitting maps before analysing End/J.
  bool quick_split = true;
};

/// Seed from SCOTT_BRAUER_SEED, or 0.
std::uint64_t default_seed();

/// End_{kG}(M), identity first.
Algebra end_algebra(const Module& m);

enum class Indecomposability { yes, no, extended };

struct AbsoluteVerdict {
  Indecomposability verdict = Indecomposability::yes;
  /// Residue degree of End(M)/J over the ground field when M is indecomposable.
  unsigned residue_degree = 1;
  /// For `extended`: the field over which M was seen to split.
  std::optional<Field> extension;
};

/// yes: End(M)/J is the ground field. extended: End(M)/J is a field of degree
/// d > 1, so M splits after extending scalars by d. no: M already splits.
/// The zero module counts as `no`.
AbsoluteVerdict is_absolutely_indecomposable(const Module& m);

/// M = im(f^n) + ker(f^n) for an endomorphism f; none when one part is zero.
std::optional<std::pair<Summand, Summand>> fitting_split(const Module& m, const Mat& f);

Decomposition decompose(const Module& m, const DecomposeOptions& opts = {});

/// Nonzero and indecomposable (after extension when `absolute`).
bool is_indecomposable(const Module& m, bool absolute = true);
/// Nonzero, or zero, and indecomposable: the shape used by Brauer indecomposability.
bool is_indecomposable_or_zero(const Module& m, bool absolute = true);

bool is_isomorphic(const Module& a, const Module& b);

/// The summand of Ind_H^G k with the trivial module in its head.
Module scott_module(const Group& g, const Group& h, const Field& f);

/// Higman's criterion: id in tr_Q^G(End_{kQ}(M)).
bool is_relatively_projective(const Module& m, const Group& q);
/// A vertex of the indecomposable M inside the p-group P (M must be
/// P-projective). With `verify`, every relatively projective subgroup of P of
/// the same order is checked to be G-conjugate to the answer.
Group vertex(const Module& m, const Group& p, bool verify = true);

/// rad(M) = J(A) M for the algebra A spanned by the action.
Mat module_radical(const Module& m);
/// soc(M) = {v : J(A) v = 0}.
Mat module_socle(const Module& m);
Module module_head(const Module& m);
std::size_t loewy_length(const Module& m);

}  // namespace sb
