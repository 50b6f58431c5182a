#include "scott_brauer/brauer.hpp"

#include <algorithm>

#include "scott_brauer/error.hpp"

namespace sb {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::indecomposable: return "indecomposable";
    case Verdict::zero: return "zero";
    case Verdict::decomposable: return "decomposable";
  }
  return "?";
}

std::string to_string(Criterion c) {
  switch (c) {
    case Criterion::definition: return "definition";
    case Criterion::kernel_lemma: return "kernel-lemma";
    case Criterion::normal_corollary: return "normal-p";
    case Criterion::main_theorem: return "normal-kernel-criterion";
    case Criterion::index_p_corollary: return "index-p";
  }
  return "?";
}

bool BrauerReport::recompute_overall() const {
  return std::all_of(records.begin(), records.end(),
                     [](const QRecord& r) { return r.verdict != Verdict::decomposable; });
}

std::size_t outer_automizer_order(const Group& g, const Group& p) {
  Group n = normalizer(g, p);
  Group pc = product_set(p, centralizer(g, p));
  return n.order() / pc.order();
}

namespace {

struct Split {
  Verdict verdict;
  std::vector<std::size_t> dims;
};

Split classify(const Module& m, BrauerReport& report) {
  if (m.dim == 0) return {Verdict::zero, {}};
  DecomposeOptions opts;
  opts.seed = default_seed();
  auto d = decompose(m, opts);
  if (d.extension_degree > 1 &&
      std::find(report.extensions.begin(), report.extensions.end(), d.field.order()) == report.extensions.end())
    report.extensions.push_back(d.field.order());
  return {d.summands.size() == 1 ? Verdict::indecomposable : Verdict::decomposable, d.dims()};
}

// Subgroups of P containing R, one per G-class when reducing.
std::vector<std::pair<Group, std::size_t>> q_list(const Group& g, const Group& r, const Group& p, bool reduce) {
  auto all = subgroups_between(r, p);
  auto ids = conjugacy_reduce(all, g);
  std::vector<std::pair<Group, std::size_t>> out;
  std::vector<bool> seen;
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (reduce) {
      if (ids[i] < seen.size() && seen[ids[i]]) continue;
      if (ids[i] >= seen.size()) seen.resize(ids[i] + 1, false);
      seen[ids[i]] = true;
    }
    out.emplace_back(all[i], ids[i]);
  }
  return out;
}

void require_p_subgroup(const Module& m, const Group& p) {
  detail::require(is_subgroup(p, m.group), "P is not a subgroup of the module's group");
  detail::require(p.is_p_group(m.field.characteristic()),
                  "P is not a " + std::to_string(m.field.characteristic()) + "-group");
}

void require_vertex(const Module& m, const Group& p) {
  Group v = vertex(m, p, true);
  if (!are_conjugate(v, p, m.group))
    throw PreconditionError("P (order " + std::to_string(p.order()) + ") is not a vertex of the module; vertex has order " +
                            std::to_string(v.order()));
}

}  // namespace

BrauerReport is_brauer_indecomposable_definition(const Module& m, const Group& p, const BrauerOptions& opts) {
  require_p_subgroup(m, p);
  if (opts.verify_vertex) require_vertex(m, p);
  const Group& g = m.group;
  BrauerReport report;
  report.group_order = g.order();
  report.module_dim = m.dim;
  report.p = p;
  for (const auto& [q, id] : q_list(g, Group::trivial(g.degree()), p, opts.conjugacy_reduction)) {
    QRecord rec;
    rec.q = q;
    rec.class_id = id;
    auto bq = brauer_quotient(m, q);
    rec.brauer_dim = bq.module.dim;
    Group cq = centralizer(g, q);
    Split s1 = classify(restrict(bq.module, product_set(q, cq)), report);
    Split s2 = classify(restrict(bq.module, cq), report);
    rec.verdict = s1.verdict;
    rec.summands = s1.dims;
    rec.centralizer_verdict = s2.verdict;
    rec.centralizer_summands = s2.dims;
    report.records.push_back(std::move(rec));
  }
  report.overall = report.recompute_overall();
  return report;
}

TheoremResult check_theorem_main(const Module& m, const Group& p, const BrauerOptions& opts) {
  require_p_subgroup(m, p);
  const Group& g = m.group;
  TheoremResult out;
  out.definition = is_brauer_indecomposable_definition(m, p, opts);

  Group k = intersection(p, module_kernel(m));
  for (auto& r : subgroups_between(Group::trivial(g.degree()), k))
    if (is_normal(r, g)) out.candidates.push_back(std::move(r));
  std::stable_sort(out.candidates.begin(), out.candidates.end(),
                   [](const Group& a, const Group& b) { return a.order() > b.order(); });

  for (const auto& r : out.candidates) {
    BrauerReport rep;
    rep.group_order = g.order();
    rep.module_dim = m.dim;
    rep.p = p;
    for (const auto& [q, id] : q_list(g, r, p, opts.conjugacy_reduction)) {
      QRecord rec;
      rec.q = q;
      rec.class_id = id;
      rec.criterion = Criterion::main_theorem;
      auto bq = brauer_quotient(m, q);
      rec.brauer_dim = bq.module.dim;
      Split s = classify(restrict(bq.module, centralizer(g, q)), rep);
      rec.centralizer_verdict = rec.verdict = s.verdict;
      rec.centralizer_summands = rec.summands = s.dims;
      if (s.verdict == Verdict::zero)
        rep.anomalies.push_back("M(Q) = 0 for Q of order " + std::to_string(q.order()) + " between R (order " +
                                std::to_string(r.order()) + ") and P");
      rep.records.push_back(std::move(rec));
    }
    rep.overall = rep.anomalies.empty() &&
                  std::all_of(rep.records.begin(), rep.records.end(),
                              [](const QRecord& x) { return x.verdict == Verdict::indecomposable; });
    out.report = std::move(rep);
    if (out.report.overall) {
      out.verdict = true;
      out.witness = r;
      break;
    }
  }
  out.agrees = out.verdict == out.definition.overall;
  if (opts.assert_equivalence && !out.agrees)
    throw InternalError("normal-kernel criterion disagrees with the definition of Brauer indecomposability");
  return out;
}

std::optional<IndexPResult> check_corollary_index_p(const Module& m, const Group& p, const BrauerOptions& opts) {
  require_p_subgroup(m, p);
  const Group& g = m.group;
  const unsigned prime = m.field.characteristic();
  if (outer_automizer_order(g, p) % prime == 0) return std::nullopt;
  Group k = intersection(p, module_kernel(m));
  std::vector<Group> rs;
  for (auto& r : subgroups_between(Group::trivial(g.degree()), k))
    if (r.order() * prime == p.order() && is_normal(r, g)) rs.push_back(std::move(r));
  if (rs.empty()) return std::nullopt;

  IndexPResult out;
  out.r = rs.front();
  out.verdict = is_indecomposable(restrict(m, centralizer(g, out.r)));
  for (std::size_t i = 1; i < rs.size(); ++i)
    detail::check(is_indecomposable(restrict(m, centralizer(g, rs[i]))) == out.verdict,
                  "index-p criterion depends on the choice of R");
  out.definition = is_brauer_indecomposable_definition(m, p, opts);
  out.agrees = out.verdict == out.definition.overall;
  if (opts.assert_equivalence && !out.agrees)
    throw InternalError("index-p criterion disagrees with the definition of Brauer indecomposability");
  return out;
}

std::optional<bool> check_lemma_kernel(const Module& m, const Group& p, const BrauerOptions& opts) {
  require_p_subgroup(m, p);
  const unsigned prime = m.field.characteristic();
  if (outer_automizer_order(m.group, p) % prime == 0) return std::nullopt;
  if (!is_subgroup(p, module_kernel(m))) return std::nullopt;
  if (opts.assert_equivalence && !is_brauer_indecomposable_definition(m, p, opts).overall)
    throw InternalError("kernel lemma applies but the definition says not Brauer indecomposable");
  return true;
}

bool saturation_criterion(const Group& g, const Group& p, unsigned prime) {
  detail::require(is_normal(p, g), "saturation_criterion: P is not normal in G");
  return (g.order() / product_set(p, centralizer(g, p)).order()) % prime != 0;
}

std::optional<bool> check_corollary_normal(const Module& m, const Group& p, const BrauerOptions& opts) {
  require_p_subgroup(m, p);
  detail::require(is_normal(p, m.group), "check_corollary_normal: P is not normal in G");
  if (!saturation_criterion(m.group, p, m.field.characteristic())) return std::nullopt;
  if (opts.assert_equivalence && !is_brauer_indecomposable_definition(m, p, opts).overall)
    throw InternalError("normal-P criterion holds but the definition says not Brauer indecomposable");
  return true;
}

ProductWithREvidence verify_product_with_r(const Module& m, const Group& q, const Group& r) {
  const Group& g = m.group;
  detail::require(is_normal(r, g), "verify_product_with_r: R is not normal in G");
  detail::require(is_subgroup(r, module_kernel(m)), "verify_product_with_r: R is not in the kernel");
  detail::require(is_subgroup(q, g) && q.is_p_group(m.field.characteristic()), "verify_product_with_r: Q is not a p-subgroup");
  ProductWithREvidence ev;
  ev.q = q;
  ev.qr = product_set(q, r);
  detail::require(ev.qr.is_p_group(m.field.characteristic()), "verify_product_with_r: QR is not a p-group");
  auto bq = brauer_quotient(m, q);
  auto bqr = brauer_quotient(m, ev.qr);
  ev.dim_q = bq.module.dim;
  ev.dim_qr = bqr.module.dim;

  QuotientSpace qs(bq.fixed, bq.traces);
  Mat x(m.field, ev.dim_q, ev.dim_qr);
  for (std::size_t j = 0; j < ev.dim_qr; ++j) {
    Vec c = qs.coordinates(bqr.complement.row(j));
    for (std::size_t i = 0; i < ev.dim_q; ++i) x(i, j) = c[i];
  }
  ev.iso = x;
  Module res = restrict(bqr.module, bq.normalizer);
  ev.iso_ok = ev.dim_q == ev.dim_qr && (ev.dim_q == 0 || (is_invertible(x) && is_homomorphism(res, bq.module, x)));

  Group cq = centralizer(g, q);
  ev.qr_restricted_indecomposable = is_indecomposable(restrict(bqr.module, cq));
  ev.q_restricted_indecomposable = is_indecomposable(restrict(bq.module, cq));
  ev.implication_holds = !ev.qr_restricted_indecomposable || ev.q_restricted_indecomposable;
  return ev;
}

}  // namespace sb
