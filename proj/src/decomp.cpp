#include "scott_brauer/decomp.hpp"

#include <cstdlib>
#include <numeric>
#include <random>

#include "scott_brauer/error.hpp"
#include "scott_brauer/poly.hpp"

namespace sb {

std::vector<std::size_t> Decomposition::dims() const {
  std::vector<std::size_t> out;
  for (const auto& s : summands) out.push_back(s.module.dim);
  return out;
}

std::uint64_t default_seed() {
  const char* s = std::getenv("SCOTT_BRAUER_SEED");
  if (!s || !*s) return 0;
  char* end = nullptr;
  unsigned long long v = std::strtoull(s, &end, 10);
  if (*end != '\0') throw ParseError("SCOTT_BRAUER_SEED must be a non-negative integer");
  return v;
}

Algebra end_algebra(const Module& m) { return Algebra::from_span(m.field, m.dim, hom_space(m, m), true); }

namespace {

bool is_power_of_linear(const Poly& mu, Elem lambda) {
  const Field& f = mu.field();
  Poly lin = Poly::x_minus(f, lambda), acc(f, {f.one()});
  for (long k = 0; k < mu.degree(); ++k) acc = acc * lin;
  return acc == mu;
}

std::optional<Elem> find_root(const Poly& mu) {
  const Field& f = mu.field();
  for (Elem x = 0; x < f.order(); ++x)
    if (mu.eval(x) == 0) return x;
  return std::nullopt;
}

Poly mulmod(const Poly& a, const Poly& b, const Poly& mod) { return divmod(a * b, mod).second; }

Poly powmod(Poly base, std::uint64_t e, const Poly& mod) {
  const Field& f = mod.field();
  Poly acc(f, {f.one()});
  base = divmod(base, mod).second;
  for (; e; e >>= 1) {
    if (e & 1) acc = mulmod(acc, base, mod);
    if (e > 1) base = mulmod(base, base, mod);
  }
  return acc;
}

// The semisimple quotient S = A/J(A), elements as coordinate vectors on a
// complement of J, with left multiplication matrices.
class Semisimple {
 public:
  Semisimple(const Algebra& a, const Mat& jac)
      : f_(a.field()), qs_(Mat::identity(a.field(), a.dim()), jac) {
    const std::size_t d = a.dim(), s = qs_.dim();
    auto areg = a.left_regular();
    for (std::size_t i = 0; i < s; ++i) {
      Mat lw(f_, d, d);
      auto w = qs_.complement().row(i);
      for (std::size_t t = 0; t < d; ++t)
        if (w[t]) lw = lw + scale(areg[t], w[t]);
      Mat l(f_, s, s);
      for (std::size_t j = 0; j < s; ++j) {
        Vec c = qs_.coordinates(mat_vec(lw, qs_.complement().row(j)));
        for (std::size_t r = 0; r < s; ++r) l(r, j) = c[r];
      }
      left_.push_back(std::move(l));
    }
    Vec e0(d, 0);
    e0[0] = f_.one();
    one_ = qs_.coordinates(e0);
  }

  std::size_t dim() const { return left_.size(); }
  const Vec& one() const { return one_; }
  Vec basis(std::size_t i) const {
    Vec v(dim(), 0);
    v[i] = f_.one();
    return v;
  }

  Mat lmat(const Vec& x) const {
    Mat l(f_, dim(), dim());
    for (std::size_t i = 0; i < dim(); ++i)
      if (x[i]) l = l + scale(left_[i], x[i]);
    return l;
  }
  Vec mul(const Vec& x, const Vec& y) const { return mat_vec(lmat(x), y); }
  Vec add(const Vec& x, const Vec& y, Elem c = 1) const {
    Vec out = x;
    axpy(f_, out, y, c);
    return out;
  }
  Vec pow(Vec x, std::uint64_t e) const {
    Vec acc = one_;
    for (; e; e >>= 1) {
      if (e & 1) acc = mul(acc, x);
      if (e > 1) x = mul(x, x);
    }
    return acc;
  }
  Vec poly_at(const Poly& u, const Vec& x) const {
    Mat lx = lmat(x);
    Vec acc(dim(), 0);
    for (std::size_t k = u.coeffs().size(); k-- > 0;) {
      acc = mat_vec(lx, acc);
      axpy(f_, acc, one_, u.coeff(k));
    }
    return acc;
  }
  bool is_scalar(const Vec& x) const { return rank(Mat::from_rows(f_, {one_, x}, dim())) < 2; }
  /// Non-invertible and non-nilpotent.
  bool splits(const Vec& x) const {
    Mat l = lmat(x);
    return !is_invertible(l) && !is_nilpotent(l);
  }

  /// Coordinates in A of a representative of x.
  Vec lift(const Vec& x) const {
    Vec out(qs_.complement().cols(), 0);
    for (std::size_t i = 0; i < dim(); ++i)
      if (x[i]) axpy(f_, out, qs_.complement().row(i), x[i]);
    return out;
  }

  /// Basis of Z(S) as rows.
  Mat center() const {
    const std::size_t s = dim();
    Mat stacked(f_, 0, s);
    for (std::size_t i = 0; i < s; ++i) {
      // z w_i - w_i z = R_i z - L_i z with R_i[:, j] = L_j[:, i]
      Mat r(f_, s, s);
      for (std::size_t j = 0; j < s; ++j)
        for (std::size_t k = 0; k < s; ++k) r(k, j) = left_[j](k, i);
      stacked = vstack(stacked, r - left_[i]);
    }
    return kernel_basis(stacked);
  }

 private:
  Field f_;
  QuotientSpace qs_;
  std::vector<Mat> left_;
  Vec one_;
};

// Non-invertible, non-nilpotent element of S = A/J built from x, if x reveals one.
std::optional<Vec> split_from(const Semisimple& s, const Vec& x, std::mt19937_64& rng) {
  if (s.splits(x)) return x;
  Mat lx = s.lmat(x);
  Poly mu = min_poly(lx);
  const Field& fld = mu.field();
  const std::size_t r = static_cast<std::size_t>(mu.degree());
  if (r <= 1) return std::nullopt;
  const std::uint64_t q = fld.order();

  // Frobenius u -> u^q on F[t]/mu.
  Mat frob(fld, r, r);
  Poly tq = powmod(Poly::monomial(fld, 1, fld.one()), q, mu);
  Poly col(fld, {fld.one()});
  for (std::size_t k = 0; k < r; ++k) {
    for (std::size_t i = 0; i < r; ++i) frob(i, k) = col.coeff(i);
    col = mulmod(col, tq, mu);
  }
  Mat berl = kernel_basis(frob - Mat::identity(fld, r));
  if (berl.rows() > 1) {
    for (std::size_t b = 0; b < berl.rows(); ++b) {
      Poly u(fld, berl.row_vec(b));
      if (u.degree() < 1) continue;
      for (Elem lambda = 0; lambda < fld.order(); ++lambda) {
        Poly v = u - Poly(fld, {lambda});
        if (poly_gcd(v, mu).degree() >= 1) {
          Vec y = s.poly_at(v, x);
          detail::check(s.splits(y), "Berlekamp element does not split");
          return y;
        }
      }
    }
    detail::fail_internal("Berlekamp subalgebra without a root");
  }
  // F[x] is local; look for a nonzero nilpotent z and a non-nilpotent z t.
  Mat qt = frob;
  for (std::uint64_t qq = q; qq < r; qq *= q) qt = qt * frob;
  Mat nil = kernel_basis(qt);
  if (nil.rows() == 0) return std::nullopt;
  Vec z = s.poly_at(Poly(fld, nil.row_vec(0)), x);
  for (std::size_t j = 0; j < s.dim(); ++j) {
    Vec y = s.mul(z, s.basis(j));
    if (s.splits(y)) return y;
    y = s.mul(s.basis(j), z);
    if (s.splits(y)) return y;
  }
  std::uniform_int_distribution<Elem> pick(0, static_cast<Elem>(fld.order() - 1));
  for (int attempt = 0; attempt < 64; ++attempt) {
    Vec t(s.dim());
    for (auto& c : t) c = pick(rng);
    Vec y = s.mul(z, t);
    if (s.splits(y)) return y;
  }
  return std::nullopt;
}

struct Analysis {
  std::optional<Mat> splitter;
  unsigned residue_degree = 1;
};

Analysis analyze(const Module& m, std::mt19937_64& rng, bool quick = true) {
  const Field& f = m.field;
  if (m.dim <= 1) return {};
  Algebra a = Algebra::from_span(f, m.dim, hom_space(m, m), false);
  if (a.dim() == 1) return {};

  // Cheap pass over basis elements.
  for (std::size_t i = 1; quick && i < a.dim(); ++i) {
    const Mat& b = a.basis()[i];
    Poly mu = min_poly(b);
    if (mu.coeff(0) == 0 && !is_power_of_linear(mu, 0)) return {b, 1};
    if (f.order() <= 256) {
      for (Elem lambda = 1; lambda < f.order(); ++lambda) {
        if (mu.eval(lambda) != 0) continue;
        if (!is_power_of_linear(mu, lambda)) return {b - Mat::scalar(f, m.dim, lambda), 1};
        break;
      }
    }
  }

  Mat jac = radical(a);
  Semisimple s(a, jac);
  if (s.dim() == 1) return {};
  auto lift = [&](const Vec& y) { return a.element(s.lift(y)); };

  Mat z = s.center();
  // Berlekamp subalgebra of the centre: z^q = z.
  const std::uint64_t q = f.order();
  Mat images(f, s.dim(), z.rows());
  for (std::size_t k = 0; k < z.rows(); ++k) {
    Vec zk = z.row_vec(k);
    Vec phi = s.add(s.pow(zk, q), zk, f.neg(f.one()));
    for (std::size_t r = 0; r < s.dim(); ++r) images(r, k) = phi[r];
  }
  Mat berl = kernel_basis(images);
  if (berl.rows() > 1) {
    for (std::size_t b = 0; b < berl.rows(); ++b) {
      Vec elem(s.dim(), 0);
      for (std::size_t k = 0; k < z.rows(); ++k)
        if (berl(b, k)) axpy(f, elem, z.row(k), berl(b, k));
      if (s.is_scalar(elem)) continue;
      auto root = find_root(min_poly(s.lmat(elem)));
      detail::check(root.has_value(), "central Berlekamp element without an eigenvalue");
      Vec y = s.add(elem, s.one(), f.neg(*root));
      detail::check(s.splits(y), "central Berlekamp element does not split");
      return {lift(y), 1};
    }
    detail::fail_internal("Berlekamp subalgebra has no non-scalar element");
  }
  if (z.rows() == s.dim()) {
    // S is a field of degree dim S over the ground field.
    return {std::nullopt, static_cast<unsigned>(s.dim())};
  }

  // S is simple and not a field: it has zero divisors.
  std::vector<Vec> candidates;
  for (std::size_t i = 0; i < s.dim(); ++i) candidates.push_back(s.basis(i));
  for (std::size_t i = 0; i < s.dim(); ++i)
    for (std::size_t j = i + 1; j < s.dim(); ++j) {
      candidates.push_back(s.add(s.basis(i), s.basis(j)));
      candidates.push_back(s.mul(s.basis(i), s.basis(j)));
    }
  for (const auto& x : candidates)
    if (auto y = split_from(s, x, rng)) return {lift(*y), 1};
  std::uniform_int_distribution<Elem> pick(0, static_cast<Elem>(f.order() - 1));
  for (int attempt = 0; attempt < 4096; ++attempt) {
    Vec x(s.dim());
    for (auto& c : x) c = pick(rng);
    if (auto y = split_from(s, x, rng)) return {lift(*y), 1};
  }
  detail::fail_internal("no zero divisor found in a non-commutative semisimple quotient");
}

void split_recursive(Summand s, std::mt19937_64& rng, bool quick, std::vector<Summand>& leaves) {
  Analysis an = analyze(s.module, rng, quick);
  if (!an.splitter) {
    s.residue_degree = an.residue_degree;
    leaves.push_back(std::move(s));
    return;
  }
  auto parts = fitting_split(s.module, *an.splitter);
  detail::check(parts.has_value(), "splitting endomorphism did not split");
  for (Summand* part : {&parts->first, &parts->second}) {
    part->inclusion = s.inclusion * part->inclusion;
    part->projection = part->projection * s.projection;
    split_recursive(std::move(*part), rng, quick, leaves);
  }
}

Summand whole(const Module& m) {
  return Summand{m, Mat::identity(m.field, m.dim), Mat::identity(m.field, m.dim), 1};
}

}  // namespace

std::optional<std::pair<Summand, Summand>> fitting_split(const Module& m, const Mat& f) {
  detail::require(f.rows() == m.dim && f.cols() == m.dim && is_homomorphism(m, m, f),
                  "fitting_split: not an endomorphism of the module");
  if (m.dim == 0) return std::nullopt;
  Mat g = matrix_power(f, m.dim);
  Mat im = image_basis(g), ker = kernel_basis(g);
  if (im.rows() == 0 || ker.rows() == 0) return std::nullopt;
  Mat basis = hstack(im.transpose(), ker.transpose());
  auto inv = inverse(basis);
  detail::check(inv.has_value(), "Fitting decomposition is not direct");
  const std::size_t du = im.rows(), dk = ker.rows();
  Module mu{m.group, m.field, du, {}}, mk{m.group, m.field, dk, {}};
  for (const auto& a : m.action) {
    Mat b = *inv * a * basis;
    detail::check(b.block(0, du, du, dk).is_zero() && b.block(du, 0, dk, du).is_zero(),
                  "Fitting summands are not submodules");
    mu.action.push_back(b.block(0, 0, du, du));
    mk.action.push_back(b.block(du, du, dk, dk));
  }
  Summand su{std::move(mu), im.transpose(), inv->block(0, 0, du, m.dim), 1};
  Summand sk{std::move(mk), ker.transpose(), inv->block(du, 0, dk, m.dim), 1};
  return std::make_pair(std::move(su), std::move(sk));
}

Decomposition decompose(const Module& m, const DecomposeOptions& opts) {
  if (m.dim > opts.max_dim)
    throw ResourceError("decompose: module dimension " + std::to_string(m.dim) + " exceeds the cap " +
                        std::to_string(opts.max_dim));
  Decomposition out;
  out.field = m.field;
  if (m.dim == 0) return out;
  std::mt19937_64 rng(opts.seed);
  split_recursive(whole(m), rng, opts.quick_split, out.summands);
  if (!opts.absolute) return out;

  unsigned lcm = 1;
  for (const auto& s : out.summands) lcm = std::lcm(lcm, s.residue_degree);
  if (lcm == 1) return out;

  Field ext = extension_field(m.field, lcm);
  std::vector<Summand> refined;
  for (const auto& s : out.summands) {
    Summand e{extend_module(s.module, ext), extend_scalars(s.inclusion, m.field, ext),
              extend_scalars(s.projection, m.field, ext), 1};
    std::vector<Summand> leaves;
    split_recursive(std::move(e), rng, opts.quick_split, leaves);
    for (auto& l : leaves) {
      detail::check(l.residue_degree == 1, "summand not absolutely indecomposable after extension");
      refined.push_back(std::move(l));
    }
  }
  out.field = ext;
  out.summands = std::move(refined);
  out.extension_degree = lcm;
  return out;
}

AbsoluteVerdict is_absolutely_indecomposable(const Module& m) {
  AbsoluteVerdict v;
  if (m.dim == 0) {
    v.verdict = Indecomposability::no;
    return v;
  }
  std::mt19937_64 rng(default_seed());
  Analysis an = analyze(m, rng);
  if (an.splitter) {
    v.verdict = Indecomposability::no;
  } else if (an.residue_degree > 1) {
    v.verdict = Indecomposability::extended;
    v.residue_degree = an.residue_degree;
    v.extension = extension_field(m.field, an.residue_degree);
  }
  return v;
}

bool is_indecomposable(const Module& m, bool absolute) {
  if (m.dim == 0) return false;
  auto v = is_absolutely_indecomposable(m);
  return v.verdict == Indecomposability::yes || (!absolute && v.verdict == Indecomposability::extended);
}

bool is_indecomposable_or_zero(const Module& m, bool absolute) { return m.dim == 0 || is_indecomposable(m, absolute); }

namespace {

bool isomorphic_indecomposables(const Module& u, const Module& v) {
  if (u.dim != v.dim) return false;
  auto h1 = hom_space(u, v);
  for (const auto& x : h1)
    if (is_invertible(x)) return true;
  auto h2 = hom_space(v, u);
  for (const auto& x : h1)
    for (const auto& y : h2)
      if (is_invertible(y * x)) return true;
  return false;
}

}  // namespace

bool is_isomorphic(const Module& a, const Module& b) {
  detail::require(a.field == b.field, "is_isomorphic: modules over different fields");
  detail::require(a.group.generators() == b.group.generators(), "is_isomorphic: modules over different groups");
  if (a.dim != b.dim) return false;
  if (a.dim == 0) return true;
  for (const auto& x : hom_space(a, b))
    if (is_invertible(x)) return true;
  DecomposeOptions opts;
  opts.absolute = false;
  opts.seed = default_seed();
  auto da = decompose(a, opts), db = decompose(b, opts);
  if (da.summands.size() != db.summands.size()) return false;
  std::vector<bool> used(db.summands.size(), false);
  for (const auto& s : da.summands) {
    bool found = false;
    for (std::size_t j = 0; j < db.summands.size() && !found; ++j) {
      if (used[j] || !isomorphic_indecomposables(s.module, db.summands[j].module)) continue;
      used[j] = found = true;
    }
    if (!found) return false;
  }
  return true;
}

Module scott_module(const Group& g, const Group& h, const Field& f) {
  Module perm = perm_module(g, h, f);
  DecomposeOptions opts;
  opts.seed = default_seed();
  auto d = decompose(perm, opts);
  Module triv = trivial_module(g, d.field);
  const Summand* found = nullptr;
  for (const auto& s : d.summands) {
    if (hom_space(s.module, triv).empty()) continue;
    detail::check(found == nullptr, "scott_module: more than one summand has a trivial quotient");
    found = &s;
  }
  detail::check(found != nullptr, "scott_module: no summand has a trivial quotient");
  detail::check(!hom_space(triv, found->module).empty(), "scott_module: Scott summand has no trivial submodule");
  return found->module;
}

bool is_relatively_projective(const Module& m, const Group& q) {
  detail::require(is_subgroup(q, m.group), "is_relatively_projective: Q is not a subgroup");
  if (m.dim == 0) return true;
  Module res = restrict(m, q);
  auto ends = hom_space(res, res);
  std::vector<std::pair<Mat, Mat>> conj;
  for (const auto& x : left_coset_reps(m.group, q))
    conj.emplace_back(element_matrix(m, x), element_matrix(m, x.inverse()));
  SemiEchelon span(m.field, m.dim * m.dim);
  for (const auto& e : ends) {
    Mat t(m.field, m.dim, m.dim);
    for (const auto& [a, ainv] : conj) t = t + a * e * ainv;
    span.add(t.flatten());
  }
  return span.contains(Mat::identity(m.field, m.dim).flatten());
}

Group vertex(const Module& m, const Group& p, bool verify) {
  detail::require(is_subgroup(p, m.group), "vertex: P is not a subgroup");
  detail::require(p.is_p_group(m.field.characteristic()), "vertex: P is not a p-group");
  detail::require(is_indecomposable(m, false), "vertex: module is decomposable");
  detail::require(is_relatively_projective(m, p), "vertex: module is not relatively P-projective");
  Group q = p;
  for (bool descended = true; descended;) {
    descended = false;
    for (const auto& k : maximal_subgroups(q)) {
      if (is_relatively_projective(m, k)) {
        q = k;
        descended = true;
        break;
      }
    }
  }
  if (verify) {
    for (const auto& h : subgroups_between(Group::trivial(p.degree()), p)) {
      if (h.order() != q.order() || h == q) continue;
      if (is_relatively_projective(m, h))
        detail::check(are_conjugate(h, q, m.group), "vertex: two non-conjugate minimal subgroups");
    }
  }
  return q;
}

namespace {

std::vector<Mat> action_radical(const Module& m) {
  Algebra a = Algebra::generated_by(m.field, m.dim, m.action);
  Mat jac = radical(a);
  std::vector<Mat> out;
  for (std::size_t r = 0; r < jac.rows(); ++r) out.push_back(a.element(jac.row(r)));
  return out;
}

Mat apply_all(const std::vector<Mat>& ops, const Mat& rows, const Field& f, std::size_t n) {
  Mat out(f, 0, n);
  if (rows.rows() == 0) return out;
  for (const auto& j : ops) out = vstack(out, (j * rows.transpose()).transpose());
  return out.rows() ? row_space(out) : out;
}

}  // namespace

Mat module_radical(const Module& m) {
  if (m.dim == 0) return Mat(m.field, 0, 0);
  return apply_all(action_radical(m), Mat::identity(m.field, m.dim), m.field, m.dim);
}

Mat module_socle(const Module& m) {
  if (m.dim == 0) return Mat(m.field, 0, 0);
  auto jac = action_radical(m);
  if (jac.empty()) return Mat::identity(m.field, m.dim);
  Mat stacked(m.field, 0, m.dim);
  for (const auto& j : jac) stacked = vstack(stacked, j);
  return kernel_basis(stacked);
}

Module module_head(const Module& m) { return quotient_module(m, module_radical(m)); }

std::size_t loewy_length(const Module& m) {
  if (m.dim == 0) return 0;
  auto jac = action_radical(m);
  Mat layer = Mat::identity(m.field, m.dim);
  std::size_t len = 0;
  while (layer.rows() > 0) {
    ++len;
    layer = apply_all(jac, layer, m.field, m.dim);
    detail::check(len <= m.dim, "loewy_length: radical series does not terminate");
  }
  return len;
}

}  // namespace sb