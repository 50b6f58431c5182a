#pragma once

// Brauer indecomposability: the definition, the criterion through a normal
// subgroup R in the kernel, its index-p shortcut, and the normal-P special
// cases.

#include <optional>
#include <string>
#include <vector>

#include "scott_brauer/decomp.hpp"

namespace sb {

enum class Verdict { indecomposable, zero, decomposable };
enum class Criterion { definition, kernel_lemma, normal_corollary, main_theorem, index_p_corollary };

std::string to_string(Verdict v);
std::string to_string(Criterion c);

struct QRecord {
  Group q;
  std::size_t class_id = 0;
  std::size_t brauer_dim = 0;           ///< dim M(Q)
  std::vector<std::size_t> summands;    ///< dims of Res_{Q C_G(Q)} M(Q) summands
  Verdict verdict = Verdict::zero;      ///< for Res to Q C_G(Q)
  std::vector<std::size_t> centralizer_summands;
  Verdict centralizer_verdict = Verdict::zero;  ///< for Res to C_G(Q)
  Criterion criterion = Criterion::definition;
};

struct BrauerReport {
  std::size_t group_order = 0;
  std::size_t module_dim = 0;
  Group p;
  std::vector<QRecord> records;
  bool overall = true;
  /// Orders of the fields over which some decomposition had to be refined.
  std::vector<std::size_t> extensions;
  std::vector<std::string> anomalies;

  /// Overall verdict recomputed from the records.
  bool recompute_overall() const;
};

struct BrauerOptions {
  /// One Q per G-conjugacy class (otherwise every subgroup of P).
  bool conjugacy_reduction = true;
  /// Check that P is a vertex of M before anything else.
  bool verify_vertex = true;
  /// Throw InternalError when a criterion disagrees with the definition.
  bool assert_equivalence = true;
};

/// |N_G(P) : P C_G(P)|
std::size_t outer_automizer_order(const Group& g, const Group& p);

/// For every Q <= P (up to G-conjugacy), decomposes Res^{N_G(Q)}_{Q C_G(Q)} M(Q)
/// over the algebraic closure (via finite extensions). True iff every one is
/// indecomposable or zero.
BrauerReport is_brauer_indecomposable_definition(const Module& m, const Group& p, const BrauerOptions& opts = {});

struct TheoremResult {
  bool verdict = false;
  std::optional<Group> witness;  ///< the R for which every Q in [R, P] passes
  std::vector<Group> candidates;  ///< normal subgroups of G inside P and ker M, largest first
  BrauerReport report;            ///< per-Q records of the witness (or of the last candidate)
  BrauerReport definition;
  bool agrees = true;
};

/// M is Brauer indecomposable iff for some R normal in G with R <= P and
/// R <= ker M, Res^{N_G(Q)}_{C_G(Q)} M(Q) is indecomposable for every Q
/// with R <= Q <= P. A zero M(Q) there is reported as an anomaly.
TheoremResult check_theorem_main(const Module& m, const Group& p, const BrauerOptions& opts = {});

struct IndexPResult {
  bool verdict = false;
  Group r;
  BrauerReport definition;
  bool agrees = true;
};

/// When p does not divide |N_G(P) : P C_G(P)| and some R normal in G with
/// R <= P, R <= ker M has index p in P: M is Brauer indecomposable iff
/// Res_{C_G(R)} M is indecomposable. None when the hypotheses fail.
std::optional<IndexPResult> check_corollary_index_p(const Module& m, const Group& p, const BrauerOptions& opts = {});

/// True when p does not divide |N_G(P) : P C_G(P)| and P <= ker M; none otherwise.
std::optional<bool> check_lemma_kernel(const Module& m, const Group& p, const BrauerOptions& opts = {});

/// P normal in G: true when p does not divide |G : P C_G(P)|, none otherwise.
std::optional<bool> check_corollary_normal(const Module& m, const Group& p, const BrauerOptions& opts = {});

/// P normal in G: p does not divide |G : P C_G(P)|.
bool saturation_criterion(const Group& g, const Group& p, unsigned prime);

struct ProductWithREvidence {
  Group q, qr;
  std::size_t dim_q = 0, dim_qr = 0;
  /// The map M(QR) -> M(Q) induced by M^{QR} <= M^Q, in the quotient bases.
  Mat iso;
  bool iso_ok = false;  ///< invertible and N_G(Q)-equivariant
  bool qr_restricted_indecomposable = false;  ///< Res_{C_G(Q)} M(QR)
  bool q_restricted_indecomposable = false;   ///< Res_{C_G(Q)} M(Q)
  bool implication_holds = false;
};

/// For R normal in G with R <= ker M and a p-subgroup Q: compares M(Q) with
/// M(QR) restricted to N_G(Q).
ProductWithREvidence verify_product_with_r(const Module& m, const Group& q, const Group& r);

}  // namespace sb
