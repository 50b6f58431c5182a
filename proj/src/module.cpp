#include "scott_brauer/module.hpp"

#include <random>

#include "scott_brauer/error.hpp"

namespace sb {

namespace {

void require_same_group(const Module& a, const Module& b, const char* what) {
  detail::require(a.group.degree() == b.group.degree() && a.group.generators() == b.group.generators(),
                  std::string(what) + ": modules are over different groups");
  detail::require(a.field == b.field, std::string(what) + ": modules are over different fields");
}

}  // namespace

void validate_module(const Module& m, std::size_t samples) {
  detail::require(m.action.size() == m.group.generators().size(),
                  "module needs exactly one matrix per group generator");
  for (const auto& a : m.action) {
    detail::require(a.rows() == m.dim && a.cols() == m.dim, "action matrix has the wrong shape");
    detail::require(m.dim == 0 || a.field() == m.field, "action matrix is over the wrong field");
    detail::require(is_invertible(a), "action matrix is not invertible");
  }
  if (m.dim == 0) return;
  auto mats = all_element_matrices(m);
  const Group& g = m.group;
  std::mt19937_64 rng(0x5c077);
  std::uniform_int_distribution<std::size_t> pick(0, g.order() - 1);
  std::size_t pairs = std::min(samples, g.order() * g.order());
  for (std::size_t s = 0; s < pairs; ++s) {
    std::size_t i = pick(rng), j = pick(rng);
    std::size_t k = *g.index_of(g.element(i) * g.element(j));
    if (!(mats[i] * mats[j] == mats[k]))
      throw PreconditionError("generator matrices do not define a representation (relation check failed)");
  }
  for (std::size_t k = 0; k < g.generators().size(); ++k) {
    std::size_t ord = g.generators()[k].order();
    if (!matrix_power(m.action[k], ord).is_identity())
      throw PreconditionError("generator matrix order does not divide the permutation order");
  }
}

Module trivial_module(const Group& g, const Field& f) {
  return Module{g, f, 1, std::vector<Mat>(g.generators().size(), Mat::identity(f, 1))};
}

Module zero_module(const Group& g, const Field& f) {
  return Module{g, f, 0, std::vector<Mat>(g.generators().size(), Mat(f, 0, 0))};
}

Module direct_sum(const Module& a, const Module& b) {
  require_same_group(a, b, "direct_sum");
  Module out{a.group, a.field, a.dim + b.dim, {}};
  for (std::size_t k = 0; k < a.action.size(); ++k) {
    Mat s(a.field, out.dim, out.dim);
    s.set_block(0, 0, a.action[k]);
    s.set_block(a.dim, a.dim, b.action[k]);
    out.action.push_back(std::move(s));
  }
  return out;
}

Module change_basis(const Module& m, const Mat& basis) {
  auto inv = inverse(basis);
  detail::require(inv.has_value(), "change_basis: basis matrix is singular");
  Module out{m.group, m.field, m.dim, {}};
  for (const auto& a : m.action) out.action.push_back(*inv * a * basis);
  return out;
}

Module extend_module(const Module& m, const Field& to) {
  Module out{m.group, to, m.dim, {}};
  for (const auto& a : m.action) out.action.push_back(m.dim == 0 ? Mat(to, 0, 0) : extend_scalars(a, m.field, to));
  return out;
}

Module perm_module(const Group& g, const Group& h, const Field& f) {
  detail::require(is_subgroup(h, g), "perm_module: H is not a subgroup of G");
  auto reps = left_coset_reps(g, h);
  std::vector<std::size_t> coset_of(g.order());
  for (std::size_t c = 0; c < reps.size(); ++c)
    for (const auto& y : h.elements()) coset_of[*g.index_of(reps[c] * y)] = c;
  Module out{g, f, reps.size(), {}};
  for (const auto& x : g.generators()) {
    Mat a(f, reps.size(), reps.size());
    for (std::size_t c = 0; c < reps.size(); ++c) a(coset_of[*g.index_of(x * reps[c])], c) = f.one();
    out.action.push_back(std::move(a));
  }
  return out;
}

Mat element_matrix(const Module& m, const Perm& g) {
  auto idx = m.group.index_of(g);
  detail::require(idx.has_value(), "element_matrix: element is not in the module's group");
  Mat out = Mat::identity(m.field, m.dim);
  // element = gen[w0] * gen[w1] * ... ; multiply from the right end.
  auto w = m.group.word(*idx);
  for (std::size_t i = w.size(); i-- > 0;) out = m.action[w[i]] * out;
  return out;
}

std::vector<Mat> all_element_matrices(const Module& m) {
  const Group& g = m.group;
  std::vector<Mat> mats(g.order());
  for (std::size_t idx : g.bfs_order()) {
    if (idx == 0)
      mats[0] = Mat::identity(m.field, m.dim);
    else
      mats[idx] = m.action[g.parent_generator(idx)] * mats[g.parent(idx)];
  }
  return mats;
}

Module restrict(const Module& m, const Group& h) {
  detail::require(is_subgroup(h, m.group), "restrict: H is not a subgroup of the module's group");
  Module out{h, m.field, m.dim, {}};
  for (const auto& x : h.generators()) out.action.push_back(element_matrix(m, x));
  return out;
}

Mat fixed_points(const Module& m, const Group& q) {
  detail::require(is_subgroup(q, m.group), "fixed_points: Q is not a subgroup of the module's group");
  Mat stacked(m.field, 0, m.dim);
  for (const auto& x : q.generators()) {
    Mat d = element_matrix(m, x) - Mat::identity(m.field, m.dim);
    stacked = vstack(stacked, d);
  }
  if (stacked.rows() == 0) return Mat::identity(m.field, m.dim);
  return kernel_basis(stacked);
}

namespace {

Mat trace_over(const Module& m, const std::vector<Perm>& reps) {
  Mat t(m.field, m.dim, m.dim);
  for (const auto& x : reps) t = t + element_matrix(m, x);
  return t;
}

Mat apply_to_rows(const Mat& op, const Mat& rows) {
  if (rows.rows() == 0) return Mat(op.field(), 0, op.cols());
  return row_space((op * rows.transpose()).transpose());
}

}  // namespace

Mat relative_trace_operator(const Module& m, const Group& k, const Group& h) {
  detail::require(is_subgroup(k, h) && is_subgroup(h, m.group), "relative trace needs K <= H <= G");
  return trace_over(m, left_coset_reps(h, k));
}

Mat relative_trace_image(const Module& m, const Group& k, const Group& h) {
  detail::require(is_subgroup(k, h) && is_subgroup(h, m.group), "relative trace needs K <= H <= G");
  Mat mk = fixed_points(m, k);
  auto reps = left_coset_reps(h, k);
  Mat image = apply_to_rows(trace_over(m, reps), mk);
  // Second transversal: the greatest element of each coset.
  std::vector<Perm> alt;
  for (const auto& x : reps) {
    Perm best = x;
    for (const auto& y : k.elements()) best = std::max(best, x * y);
    alt.push_back(best);
  }
  detail::check(apply_to_rows(trace_over(m, alt), mk) == image, "relative trace depends on the transversal");
  return image;
}

bool is_invariant(const Module& m, const Mat& rows) {
  if (rows.rows() == 0) return true;
  Mat basis = row_space(rows);
  for (const auto& a : m.action) {
    Mat img = (a * basis.transpose()).transpose();
    if (!(row_space(vstack(basis, img)).rows() == basis.rows())) return false;
  }
  return true;
}

Module submodule(const Module& m, const Mat& rows) {
  detail::require(is_invariant(m, rows), "submodule: subspace is not invariant");
  Mat basis = row_space(rows);
  const std::size_t d = basis.rows();
  Module out{m.group, m.field, d, {}};
  if (d == 0) return zero_module(m.group, m.field);
  QuotientSpace coords(basis, Mat(m.field, 0, m.dim));
  for (const auto& a : m.action) {
    Mat s(m.field, d, d);
    for (std::size_t i = 0; i < d; ++i) {
      Vec c = coords.coordinates(mat_vec(a, basis.row(i)));
      for (std::size_t j = 0; j < d; ++j) s(j, i) = c[j];
    }
    out.action.push_back(std::move(s));
  }
  return out;
}

Module quotient_module(const Module& m, const Mat& rows) {
  detail::require(is_invariant(m, rows), "quotient_module: subspace is not invariant");
  QuotientSpace qs(Mat::identity(m.field, m.dim), rows);
  const std::size_t d = qs.dim();
  if (d == 0) return zero_module(m.group, m.field);
  Module out{m.group, m.field, d, {}};
  for (const auto& a : m.action) {
    Mat s(m.field, d, d);
    for (std::size_t i = 0; i < d; ++i) {
      Vec c = qs.coordinates(mat_vec(a, qs.complement().row(i)));
      for (std::size_t j = 0; j < d; ++j) s(j, i) = c[j];
    }
    out.action.push_back(std::move(s));
  }
  return out;
}

BrauerQuotient brauer_quotient(const Module& m, const Group& q, bool all_proper) {
  detail::require(is_subgroup(q, m.group), "brauer_construction: Q is not a subgroup of the module's group");
  const unsigned p = m.field.characteristic();
  if (!q.is_p_group(p))
    throw PreconditionError("brauer_construction: Q (order " + std::to_string(q.order()) + ") is not a " +
                            std::to_string(p) + "-group");
  BrauerQuotient out;
  out.normalizer = normalizer(m.group, q);
  out.fixed = fixed_points(m, q);
  Mat traces(m.field, 0, m.dim);
  std::vector<Group> ks;
  if (all_proper) {
    for (auto& k : subgroups_between(Group::trivial(q.degree()), q, q.order()))
      if (k.order() < q.order()) ks.push_back(std::move(k));
  } else {
    ks = maximal_subgroups(q);
  }
  for (const auto& k : ks) traces = subspace_sum(traces, relative_trace_image(m, k, q));
  out.traces = traces.rows() ? traces : Mat(m.field, 0, m.dim);

  QuotientSpace qs(out.fixed, out.traces);
  out.complement = qs.complement();
  const std::size_t d = qs.dim();
  if (d == 0) {
    out.module = zero_module(out.normalizer, m.field);
    return out;
  }
  out.module = Module{out.normalizer, m.field, d, {}};
  for (const auto& x : out.normalizer.generators()) {
    Mat a = element_matrix(m, x);
    Mat s(m.field, d, d);
    for (std::size_t i = 0; i < d; ++i) {
      Vec c = qs.coordinates(mat_vec(a, out.complement.row(i)));
      for (std::size_t j = 0; j < d; ++j) s(j, i) = c[j];
    }
    out.module.action.push_back(std::move(s));
  }
  return out;
}

Module brauer_construction(const Module& m, const Group& q) { return brauer_quotient(m, q).module; }

Group module_kernel(const Module& m) {
  auto mats = all_element_matrices(m);
  std::vector<Perm> ker;
  for (std::size_t i = 0; i < mats.size(); ++i)
    if (mats[i].is_identity() || m.dim == 0) ker.push_back(m.group.element(i));
  return group_from_elements(m.group.degree(), std::move(ker));
}

bool is_homomorphism(const Module& m, const Module& n, const Mat& x) {
  for (std::size_t k = 0; k < m.action.size(); ++k)
    if (!(x * m.action[k] == n.action[k] * x)) return false;
  return true;
}

std::vector<Mat> hom_space(const Module& m, const Module& n) {
  require_same_group(m, n, "hom_space");
  const Field& f = m.field;
  const std::size_t dm = m.dim, dn = n.dim;
  if (dm == 0 || dn == 0) return {};
  const std::size_t ngens = m.action.size();

  // Spin a basis of M from standard basis vectors: b_j is either a seed or
  // gen[k] * b_parent. A homomorphism is then fixed by the images of the seeds.
  struct SpinVec {
    Vec v;
    std::size_t seed;
    long parent;  // -1 for seeds
    std::size_t gen;
  };
  std::vector<SpinVec> spin;
  SemiEchelon span(f, dm);
  std::size_t nseeds = 0;
  for (std::size_t e = 0; e < dm && spin.size() < dm; ++e) {
    Vec v(dm, 0);
    v[e] = f.one();
    if (!span.add(v)) continue;
    std::size_t head = spin.size();
    spin.push_back({v, nseeds, -1, 0});
    for (; head < spin.size(); ++head) {
      for (std::size_t k = 0; k < ngens; ++k) {
        Vec w = mat_vec(m.action[k], spin[head].v);
        if (span.add(w)) spin.push_back({std::move(w), nseeds, static_cast<long>(head), k});
      }
    }
    ++nseeds;
  }
  detail::check(spin.size() == dm, "hom_space: spinning did not reach a basis");

  Mat basis(f, dm, dm);  // columns b_j
  for (std::size_t j = 0; j < dm; ++j)
    for (std::size_t i = 0; i < dm; ++i) basis(i, j) = spin[j].v[i];
  Mat basis_inv = *inverse(basis);

  // phi(b_j) = W_j * u_{seed(j)} with W_seed = I, W_child = B_k W_parent.
  std::vector<Mat> w(dm);
  for (std::size_t j = 0; j < dm; ++j)
    w[j] = spin[j].parent < 0 ? Mat::identity(f, dn) : n.action[spin[j].gen] * w[spin[j].parent];

  const std::size_t unknowns = nseeds * dn;
  std::vector<Vec> eqs;
  for (std::size_t k = 0; k < ngens; ++k) {
    Mat c = basis_inv * m.action[k] * basis;  // A_k b_j = sum_l c(l,j) b_l
    for (std::size_t j = 0; j < dm; ++j) {
      // sum_l c(l,j) W_l u_{s(l)} - B_k W_j u_{s(j)} = 0
      Mat block(f, dn, unknowns);
      for (std::size_t l = 0; l < dm; ++l) {
        Elem cl = c(l, j);
        if (cl == 0) continue;
        std::size_t off = spin[l].seed * dn;
        for (std::size_t r = 0; r < dn; ++r) axpy(f, block.row(r).subspan(off, dn), w[l].row(r), cl);
      }
      Mat bw = n.action[k] * w[j];
      std::size_t off = spin[j].seed * dn;
      Elem m1 = f.neg(f.one());
      for (std::size_t r = 0; r < dn; ++r) axpy(f, block.row(r).subspan(off, dn), bw.row(r), m1);
      for (std::size_t r = 0; r < dn; ++r) {
        auto row = block.row(r);
        if (std::any_of(row.begin(), row.end(), [](Elem x) { return x != 0; })) eqs.emplace_back(row.begin(), row.end());
      }
    }
  }

  Mat solutions = eqs.empty() ? Mat::identity(f, unknowns) : kernel_basis(Mat::from_rows(f, eqs, unknowns));
  std::vector<Mat> out;
  for (std::size_t s = 0; s < solutions.rows(); ++s) {
    auto u = solutions.row(s);
    Mat phi(f, dn, dm);  // columns phi(b_j)
    for (std::size_t j = 0; j < dm; ++j) {
      Vec col = mat_vec(w[j], u.subspan(spin[j].seed * dn, dn));
      for (std::size_t r = 0; r < dn; ++r) phi(r, j) = col[r];
    }
    out.push_back(phi * basis_inv);
  }
  return out;
}

}  // namespace sb
