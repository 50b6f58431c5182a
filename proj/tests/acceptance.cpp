// Acceptance suite: one PASS/FAIL line per criterion.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "scott_brauer/brauer.hpp"
#include "scott_brauer/error.hpp"
#include "scott_brauer/fixtures.hpp"

using namespace sb;
using namespace sb::fixtures;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

class Checker {
 public:
  void expect(bool ok, const std::string& what) {
    ++count_;
    if (!ok) {
      out_.pass = false;
      if (failures_++ < 5) out_.detail += (out_.detail.empty() ? "" : "; ") + what;
    }
  }
  void note(const std::string& s) { notes_ += (notes_.empty() ? "" : ", ") + s; }
  Outcome finish() {
    if (out_.pass) out_.detail = notes_;
    else if (failures_ > 5) out_.detail += "; ... " + std::to_string(failures_) + " failures";
    return out_;
  }
  std::size_t count() const { return count_; }

 private:
  Outcome out_;
  std::string notes_;
  std::size_t count_ = 0, failures_ = 0;
};

std::string dims_str(std::vector<std::size_t> d) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < d.size(); ++i) os << (i ? "," : "") << d[i];
  os << "]";
  return os.str();
}

const Field& gf2() {
  static const Field f = Field::make(2);
  return f;
}

// ---------------------------------------------------------------- AC1

Outcome ac1() {
  Checker c;
  auto s = s4();
  Module m = scott_module(s.g, s.p, gf2());
  c.expect(m.dim == 2, "dim Sc(S4, O_2(S4)) = " + std::to_string(m.dim));
  auto res = decompose(restrict(m, s.p));
  bool trivial = true;
  for (const auto& x : res.summands) trivial = trivial && is_isomorphic(x.module, trivial_module(s.p, res.field));
  c.expect(res.summands.size() == 2 && trivial, "Res_P M summands " + dims_str(res.dims()));
  auto rep = is_brauer_indecomposable_definition(m, s.p);
  c.expect(!rep.overall, "definition says Brauer indecomposable");
  std::size_t idx = outer_automizer_order(s.g, s.p);
  c.expect(idx == 6, "|N_G(P)/P C_G(P)| = " + std::to_string(idx));
  c.note("dim 2, Res_P M = k+k, BI false, |N/PC| = 6");
  return c.finish();
}

// ---------------------------------------------------------------- AC2

Outcome ac2() {
  Checker c;
  auto e = example_3_4();
  const Group& g = e.base.g;
  c.expect(g.order() == 96, "|G| = " + std::to_string(g.order()));
  Module ind = perm_module(g, e.p, gf2());
  Module sc = scott_module(g, e.p, gf2());
  c.expect(sc.dim == 12 && ind.dim == 12 && is_isomorphic(sc, ind), "Sc(G,P) is not the dim-12 permutation module");
  c.expect(is_normal(e.r, g), "R not normal");
  c.expect(is_subgroup(e.r, module_kernel(ind)), "R not in ker M");
  Group cr = centralizer(g, e.r);
  c.expect(cr.order() == 48, "|C_G(R)| = " + std::to_string(cr.order()));
  auto res = decompose(restrict(ind, cr));
  c.expect(res.summands.size() >= 2, "Res_{C_G(R)} M summands " + dims_str(res.dims()));
  c.expect(is_indecomposable(restrict(brauer_construction(ind, e.p), centralizer(g, e.p))),
           "M(P) over C_G(P) decomposable");
  c.expect(is_indecomposable(restrict(brauer_construction(ind, e.q), centralizer(g, e.q))),
           "M(Q) over C_G(Q) decomposable");
  BrauerOptions opts;
  opts.assert_equivalence = false;
  auto def = is_brauer_indecomposable_definition(ind, e.p, opts);
  c.expect(!def.overall, "definition verdict true");
  auto th = check_theorem_main(ind, e.p, opts);
  c.expect(!th.verdict, "normal-kernel criterion verdict true");
  auto ip = check_corollary_index_p(ind, e.p, opts);
  c.expect(ip.has_value() && !ip->verdict, "index-p criterion not applicable or true");
  c.note("|G| = 96, |C_G(R)| = 48, Res_{C_G(R)} M = " + dims_str(res.dims()) + ", BI false x3");
  return c.finish();
}

// ---------------------------------------------------------------- AC3

Outcome ac3() {
  Checker c;
  auto e = example_3_5();
  const Group& g = e.base.g;
  c.expect(e.p.order() == 16, "|P| = " + std::to_string(e.p.order()));
  Module ind = perm_module(g, e.p, gf2());
  c.expect(ind.dim == 6 && is_indecomposable(ind), "Ind_P^G k not indecomposable of dim 6");
  Module sc = scott_module(g, e.p, gf2());
  c.expect(is_isomorphic(sc, ind), "Sc(G,P) differs from Ind_P^G k");

  Group c2 = generated_subgroup(g.degree(), {e.base.b});
  Module v = perm_module(e.base.a4, c2, gf2());
  std::size_t head = v.dim - module_radical(v).rows(), soc = module_socle(v).rows(), ll = loewy_length(v);
  c.expect(head == 3 && soc == 3 && ll == 2,
           "Ind_C2^A4 k head/socle/Loewy = " + std::to_string(head) + "/" + std::to_string(soc) + "/" + std::to_string(ll));
  auto hd = decompose(module_head(v));
  bool distinct = hd.summands.size() == 3;
  for (std::size_t i = 0; distinct && i < 3; ++i)
    for (std::size_t j = i + 1; j < 3; ++j)
      distinct = distinct && hd.summands[i].module.dim == 1 && !is_isomorphic(hd.summands[i].module, hd.summands[j].module);
  c.expect(distinct, "head factors " + dims_str(hd.dims()) + " not 3 distinct");

  c.expect(e.p.order() / e.r.order() == 2, "|P:R| != 2");
  c.expect(is_subgroup(e.r, module_kernel(ind)), "R not in ker M");
  c.expect(is_indecomposable(restrict(ind, centralizer(g, e.r))), "Res_{C_G(R)} M decomposable");
  c.expect(outer_automizer_order(g, e.p) == 1, "N_G(P)/P C_G(P) not trivial");
  BrauerOptions opts;
  opts.assert_equivalence = false;
  c.expect(is_brauer_indecomposable_definition(ind, e.p, opts).overall, "definition verdict false");
  c.expect(check_theorem_main(ind, e.p, opts).verdict, "normal-kernel criterion verdict false");
  auto ip = check_corollary_index_p(ind, e.p, opts);
  c.expect(ip.has_value() && ip->verdict, "index-p criterion not applicable or false");
  c.note("dim 6 indecomposable, head 3 (" + hd.field.name() + "), socle 3, LL 2, BI true x3");
  return c.finish();
}

// ---------------------------------------------------------------- AC4

Outcome ac4() {
  Checker c;
  auto cat = bi_catalog();
  std::size_t agree = 0, bi_true = 0;
  std::set<unsigned> primes;
  BrauerOptions opts;
  opts.assert_equivalence = false;
  for (const auto& entry : cat) {
    Field f = Field::make(entry.prime);
    primes.insert(entry.prime);
    Module m = scott_module(entry.g, entry.p, f);
    auto th = check_theorem_main(m, entry.p, opts);
    c.expect(th.agrees, entry.name + ": criterion " + std::to_string(th.verdict) + " vs definition " +
                            std::to_string(th.definition.overall));
    c.expect(th.report.anomalies.empty() || !th.verdict, entry.name + ": anomaly in the witness range");
    agree += th.agrees;
    bi_true += th.definition.overall;
  }
  c.expect(cat.size() >= 20, "catalog has only " + std::to_string(cat.size()) + " instances");
  c.expect(primes.count(2) && primes.count(3), "catalog lacks p = 2 or p = 3");
  c.note(std::to_string(agree) + "/" + std::to_string(cat.size()) + " agree (" + std::to_string(bi_true) +
         " Brauer indecomposable)");
  return c.finish();
}

// ---------------------------------------------------------------- AC5

struct PropertyCase {
  Module m;
  Group p, r;
};

// Modules with a normal p-subgroup R <= P in the kernel.
std::vector<PropertyCase> kernel_cases() {
  std::vector<PropertyCase> out;
  auto e4 = example_3_4();
  out.push_back({perm_module(e4.base.g, e4.p, gf2()), e4.p, e4.r});
  auto e5 = example_3_5();
  out.push_back({perm_module(e5.base.g, e5.p, gf2()), e5.p, e5.r});
  for (const auto& entry : bi_catalog()) {
    if (entry.g.order() > 100) continue;
    Module m = scott_module(entry.g, entry.p, Field::make(entry.prime));
    Group k = intersection(entry.p, module_kernel(m));
    for (auto& r : subgroups_between(Group::trivial(entry.g.degree()), k))
      if (!r.is_trivial() && is_normal(r, entry.g)) out.push_back({m, entry.p, r});
  }
  return out;
}

Outcome ac5() {
  Checker c;
  std::mt19937 rng(2024);
  std::vector<std::string> counts;
  auto cases = kernel_cases();
  auto pick = [&](const auto& v) -> const auto& { return v[rng() % v.size()]; };

  // trace transitivity
  {
    std::size_t n = 0;
    for (int t = 0; t < 100; ++t) {
      const auto& pc = pick(cases);
      auto subs = subgroups_between(Group::trivial(pc.p.degree()), pc.p);
      const Group& h = pick(subs);
      auto below = subgroups_between(Group::trivial(h.degree()), h);
      const Group& k = pick(below);
      auto mids = subgroups_between(k, h);
      const Group& l = pick(mids);
      Mat mk = fixed_points(pc.m, k);
      Mat op = relative_trace_operator(pc.m, l, h) * relative_trace_operator(pc.m, k, l);
      Mat composed = mk.rows() ? row_space((op * mk.transpose()).transpose()) : mk;
      c.expect(composed == relative_trace_image(pc.m, k, h), "trace transitivity");
      ++n;
    }
    counts.push_back("transitivity " + std::to_string(n));
  }
  // trace vanishing
  {
    std::size_t n25 = 0, n26 = 0;
    for (int t = 0; t < 400 && (n25 < 100 || n26 < 100); ++t) {
      const auto& pc = pick(cases);
      auto qs = subgroups_between(Group::trivial(pc.p.degree()), pc.p);
      const Group& q = pick(qs);
      Group qr = product_set(q, pc.r);
      for (const auto& h : subgroups_between(Group::trivial(qr.degree()), qr)) {
        if (h == qr || is_subgroup(pc.r, h)) continue;
        c.expect(relative_trace_image(pc.m, h, qr).rows() == 0, "trace from H with R not in H is nonzero");
        ++n25;
      }
      Group qnr = intersection(q, pc.r);
      for (const auto& k : subgroups_between(Group::trivial(q.degree()), q)) {
        if (k == q || is_subgroup(qnr, k)) continue;
        c.expect(relative_trace_image(pc.m, k, q).rows() == 0, "trace from K with Q^R not in K is nonzero");
        ++n26;
      }
    }
    c.expect(n25 >= 100 && n26 >= 100, "too few vanishing cases");
    counts.push_back("vanishing " + std::to_string(n25) + "+" + std::to_string(n26));
  }
  // interval correspondence and compatible cosets
  {
    std::size_t n27 = 0, n28 = 0;
    for (int t = 0; t < 1000 && (n27 < 100 || n28 < 100); ++t) {
      const auto& pc = pick(cases);
      const Group& g = pc.m.group;
      auto normals = std::vector<Group>{pc.r, Group::trivial(g.degree())};
      const Group& r = pick(normals);
      auto qs = subgroups_between(Group::trivial(pc.p.degree()), pc.p);
      const Group& q = pick(qs);
      Group qr = product_set(q, r), qnr = intersection(q, r);
      std::size_t i1 = 0, i2 = 0;
      for (const auto& k : subgroups_between(qnr, q)) {
        i1 += !(k == q);
        // KR = QR iff K = Q
        c.expect((product_set(k, r) == qr) == (k == q), "KR = QR without K = Q");
      }
      for (const auto& h : subgroups_between(r, qr)) i2 += !(h == qr);
      auto pairs = interval_correspondence(q, r);
      c.expect(pairs.size() == i1 && i1 == i2, "interval sizes differ");
      ++n27;
      for (const auto& [k, kr] : pairs) {
        auto reps = compatible_coset_reps(q, k, r);
        std::set<Perm> cover_q, cover_qr;
        for (const auto& x : reps) {
          for (const auto& y : k.elements()) cover_q.insert(x * y);
          for (const auto& y : kr.elements()) cover_qr.insert(x * y);
        }
        c.expect(reps.size() * k.order() == q.order() && cover_q.size() == q.order(), "Q is not the disjoint union");
        c.expect(reps.size() * kr.order() == qr.order() && cover_qr.size() == qr.order(), "QR is not the disjoint union");
        ++n28;
      }
    }
    c.expect(n27 >= 100 && n28 >= 100, "too few interval cases");
    counts.push_back("intervals " + std::to_string(n27) + ", cosets " + std::to_string(n28));
  }
  // M(Q) versus M(QR)
  {
    std::size_t n = 0;
    for (int t = 0; t < 100; ++t) {
      const auto& pc = pick(cases);
      auto qs = subgroups_between(Group::trivial(pc.p.degree()), pc.p);
      const Group& q = pick(qs);
      auto ev = verify_product_with_r(pc.m, q, pc.r);
      c.expect(ev.dim_q == ev.dim_qr, "dim M(Q) != dim M(QR)");
      c.expect(ev.iso_ok, "no N_G(Q)-isomorphism M(QR) -> M(Q)");
      c.expect(ev.implication_holds, "indecomposability does not descend from QR to Q");
      ++n;
    }
    counts.push_back("QR " + std::to_string(n));
  }
  // Brauer quotients of permutation modules
  {
    std::size_t n = 0;
    std::vector<std::pair<Group, unsigned>> groups{{symmetric_group(4), 2}, {symmetric_group(4), 3},
                                                   {example_3_4().base.g, 2}, {alternating_group(5), 2}};
    for (int t = 0; t < 100; ++t) {
      const auto& [g, p] = pick(groups);
      Group syl = sylow_subgroup(g, p);
      auto subs = subgroups_between(Group::trivial(g.degree()), syl);
      const Group& h = pick(subs);
      const Group& q = pick(subs);
      Module m = perm_module(g, h, Field::make(p));
      std::size_t fixed = 0;
      for (const auto& x : left_coset_reps(g, h)) {
        bool f = true;
        for (const auto& u : q.generators()) f = f && h.contains(x.inverse() * u * x);
        fixed += f;
      }
      c.expect(brauer_construction(m, q).dim == fixed, "dim M(Q) != fixed coset count");
      ++n;
    }
    counts.push_back("fixed cosets " + std::to_string(n));
  }
  // decompositions: Krull-Schmidt and projection identities
  {
    std::size_t n = 0;
    std::vector<std::pair<Group, unsigned>> groups{{symmetric_group(3), 2}, {symmetric_group(3), 3},
                                                   {symmetric_group(4), 2}, {symmetric_group(4), 3},
                                                   {alternating_group(4), 2}, {dihedral_group(4), 2}};
    for (int t = 0; t < 100; ++t) {
      const auto& [g, p] = pick(groups);
      auto subs = subgroups_between(Group::trivial(g.degree()), g);
      const Group& h = pick(subs);
      Field f = Field::make(p, 1 + rng() % 2);
      Module m = perm_module(g, h, f);
      if (rng() % 3 == 0) m = direct_sum(m, perm_module(g, pick(subs), f));
      DecomposeOptions o1, o2;
      o1.seed = rng();
      o2.seed = rng();
      o2.quick_split = false;
      auto d1 = decompose(m, o1), d2 = decompose(m, o2);
      // projection identities
      Mat sum(d1.field, m.dim, m.dim);
      for (std::size_t i = 0; i < d1.summands.size(); ++i) {
        Mat pi = d1.summands[i].inclusion * d1.summands[i].projection;
        c.expect(pi * pi == pi, "projection not idempotent");
        for (std::size_t j = 0; j < d1.summands.size(); ++j)
          if (j != i) c.expect((pi * d1.summands[j].inclusion * d1.summands[j].projection).is_zero(), "projections not orthogonal");
        sum = sum + pi;
      }
      c.expect(sum.is_identity(), "projections do not sum to the identity");
      // Krull-Schmidt
      bool matched = d1.summands.size() == d2.summands.size() && d1.field == d2.field;
      std::vector<bool> used(d2.summands.size(), false);
      for (const auto& s : d1.summands) {
        bool found = false;
        for (std::size_t j = 0; matched && j < d2.summands.size() && !found; ++j)
          if (!used[j] && is_isomorphic(s.module, d2.summands[j].module)) used[j] = found = true;
        matched = matched && found;
      }
      c.expect(matched, "decompositions with different seeds do not match");
      ++n;
    }
    counts.push_back("decompositions " + std::to_string(n));
  }
  std::string all;
  for (const auto& s : counts) all += (all.empty() ? "" : ", ") + s;
  c.note(all);
  return c.finish();
}

// ---------------------------------------------------------------- AC6

// Idempotents of the group algebra kG, elements as coefficient vectors over
// the canonical element order.
class GroupAlgebra {
 public:
  GroupAlgebra(const Group& g, const Field& f) : g_(g), f_(f), n_(g.order()), table_(n_ * n_) {
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) table_[i * n_ + j] = *g.index_of(g.element(i) * g.element(j));
  }

  Vec mul(const Vec& a, const Vec& b) const {
    Vec c(n_, 0);
    for (std::size_t i = 0; i < n_; ++i) {
      if (!a[i]) continue;
      for (std::size_t j = 0; j < n_; ++j)
        if (b[j]) c[table_[i * n_ + j]] = f_.add(c[table_[i * n_ + j]], f_.mul(a[i], b[j]));
    }
    return c;
  }

  // Exhaustive enumeration of all idempotents.
  std::vector<Vec> idempotents() const {
    std::vector<Vec> out;
    Vec e(n_, 0);
    const Elem q = static_cast<Elem>(f_.order());
    while (true) {
      if (is_idempotent(e)) out.push_back(e);
      std::size_t i = 0;
      while (i < n_ && ++e[i] == q) e[i++] = 0;
      if (i == n_) break;
    }
    return out;
  }

  // dim kG e
  std::size_t left_ideal_dim(const Vec& e) const {
    Mat m(f_, n_, n_);
    for (std::size_t i = 0; i < n_; ++i) {
      Vec x(n_, 0);
      x[i] = f_.one();
      Vec y = mul(x, e);
      for (std::size_t r = 0; r < n_; ++r) m(r, i) = y[r];
    }
    return rank(m);
  }

 private:
  bool is_idempotent(const Vec& e) const {
    // coefficient k of e*e, checked one at a time
    for (std::size_t k = 0; k < n_; ++k) {
      Elem s = 0;
      for (std::size_t i = 0; i < n_; ++i) {
        if (!e[i]) continue;
        for (std::size_t j = 0; j < n_; ++j)
          if (e[j] && table_[i * n_ + j] == k) s = f_.add(s, f_.mul(e[i], e[j]));
      }
      if (s != e[k]) return false;
    }
    return true;
  }

  Group g_;
  Field f_;
  std::size_t n_;
  std::vector<std::size_t> table_;
};

std::vector<std::size_t> brute_force_summands(const Group& g, const Field& f) {
  GroupAlgebra a(g, f);
  auto idem = a.idempotents();
  Vec one(g.order(), 0);
  one[0] = f.one();
  std::vector<std::size_t> dims;
  std::function<void(const Vec&)> split = [&](const Vec& e) {
    for (const auto& x : idem) {
      if (std::all_of(x.begin(), x.end(), [](Elem v) { return v == 0; }) || x == e) continue;
      if (a.mul(e, x) == x && a.mul(x, e) == x) {
        Vec rest = e;
        axpy(f, rest, x, f.neg(f.one()));
        split(x);
        split(rest);
        return;
      }
    }
    dims.push_back(a.left_ideal_dim(e));
  };
  split(one);
  std::sort(dims.begin(), dims.end());
  return dims;
}

Outcome ac6() {
  Checker c;
  std::vector<std::pair<std::string, Group>> groups{{"C2", cyclic_group(2)},
                                                    {"C2xC2", direct_product(cyclic_group(2), cyclic_group(2))},
                                                    {"S3", symmetric_group(3)},
                                                    {"A4", alternating_group(4)}};
  std::size_t n = 0;
  for (const auto& [name, g] : groups)
    for (const Field& f : {Field::make(2), Field::make(2, 2), Field::make(3)}) {
      Module reg = perm_module(g, Group::trivial(g.degree()), f);
      DecomposeOptions opts;
      opts.absolute = false;
      auto d = decompose(reg, opts).dims();
      std::sort(d.begin(), d.end());
      auto brute = brute_force_summands(g, f);
      c.expect(d == brute, name + " over " + f.name() + ": " + dims_str(d) + " vs " + dims_str(brute));
      ++n;
    }
  c.note(std::to_string(n) + " (group, field) pairs");
  return c.finish();
}

}  // namespace

int main() {
  struct Criterion {
    const char* id;
    const char* title;
    double limit_s;
    Outcome (*run)();
  };
  const Criterion criteria[] = {
      {"AC1", "S4 example", 5, ac1},
      {"AC2", "D8 x A4, P = <y,z,ab>", 60, ac2},
      {"AC3", "D8 x A4, P = D8 x <b>", 60, ac3},
      {"AC4", "criterion vs definition sweep", 600, ac4},
      {"AC5", "property suites", 0, ac5},
      {"AC6", "regular modules vs brute-force idempotents", 0, ac6},
  };
  int failed = 0;
  for (const auto& cr : criteria) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = cr.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (cr.limit_s > 0 && secs >= cr.limit_s) {
      o.pass = false;
      o.detail += " (over the " + std::to_string(static_cast<int>(cr.limit_s)) + " s limit)";
    }
    failed += !o.pass;
    std::printf("[%s] %s %s: %s (%.2f s)\n", o.pass ? "PASS" : "FAIL", cr.id, cr.title, o.detail.c_str(), secs);
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
