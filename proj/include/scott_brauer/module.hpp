#pragma once

// kG-modules as matrix representations acting on column vectors:
// g . v = action(g) * v. Subspaces are returned as row bases in reduced
// row echelon form.

#include <cstddef>
#include <vector>

#include "scott_brauer/mat.hpp"
#include "scott_brauer/permgroup.hpp"

namespace sb {

struct Module {
  Group group;
  Field field;
  std::size_t dim = 0;
  /// One invertible dim x dim matrix per generator of `group`, same order.
  std::vector<Mat> action;
};

/// Checks matrix shapes, invertibility and that the generator assignment is a
/// homomorphism on sampled element pairs. Throws PreconditionError otherwise.
void validate_module(const Module& m, std::size_t samples = 64);

Module trivial_module(const Group& g, const Field& f);
Module zero_module(const Group& g, const Field& f);
Module direct_sum(const Module& a, const Module& b);
/// Same group and field, the matrices in the new basis given by the columns
/// of `basis` (invertible).
Module change_basis(const Module& m, const Mat& basis);
Module extend_module(const Module& m, const Field& to);

/// Ind_H^G k: basis = left cosets xH ordered by their least element, G acting by
/// left multiplication.
Module perm_module(const Group& g, const Group& h, const Field& f);

Mat element_matrix(const Module& m, const Perm& g);
/// Matrices of every element, indexed like m.group.elements().
std::vector<Mat> all_element_matrices(const Module& m);

Module restrict(const Module& m, const Group& h);

/// M^Q as a row basis.
Mat fixed_points(const Module& m, const Group& q);
/// tr_K^H(M^K) as a row basis, K <= H <= G. Recomputed with a second
/// transversal and checked for agreement.
Mat relative_trace_image(const Module& m, const Group& k, const Group& h);
/// The linear map sum_{x in [H/K]} x on the whole of M.
Mat relative_trace_operator(const Module& m, const Group& k, const Group& h);

bool is_invariant(const Module& m, const Mat& subspace_rows);
/// Module on an invariant subspace (basis = the given rows).
Module submodule(const Module& m, const Mat& subspace_rows);
/// Module on M/U for an invariant subspace U.
Module quotient_module(const Module& m, const Mat& subspace_rows);

struct BrauerQuotient {
  Group normalizer;       ///< N_G(Q), the acting group of `module`
  Mat fixed;              ///< M^Q
  Mat traces;             ///< sum of tr_K^Q(M^K) over the chosen K
  Mat complement;         ///< representatives of the quotient basis
  Module module;          ///< M(Q) over N_G(Q)
};

/// M(Q) = M^Q / sum_{K < Q} tr_K^Q(M^K). With all_proper=false the sum runs over
/// maximal subgroups of Q only; with true it runs over every proper subgroup.
BrauerQuotient brauer_quotient(const Module& m, const Group& q, bool all_proper = false);
Module brauer_construction(const Module& m, const Group& q);

/// {g : g acts as the identity}.
Group module_kernel(const Module& m);

/// Basis of Hom_{kG}(M, N): all X (dim N x dim M) with X action_M(g) = action_N(g) X.
std::vector<Mat> hom_space(const Module& m, const Module& n);
bool is_homomorphism(const Module& m, const Module& n, const Mat& x);

}  // namespace sb
