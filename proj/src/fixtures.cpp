#include "scott_brauer/fixtures.hpp"

#include "scott_brauer/error.hpp"

namespace sb::fixtures {

namespace {

Perm cycle(std::size_t n, std::vector<int> c) { return Perm::from_cycles(n, {std::move(c)}); }

Group gen(std::size_t n, std::vector<Perm> gens) { return Group::from_generators(n, std::move(gens)); }

void relation(bool ok, const char* what) {
  if (!ok) throw InternalError(std::string("fixture relation fails: ") + what);
}

// Subgroup of G generated by the listed elements.
Group sub(const Group& g, std::vector<Perm> gens) {
  Group h = generated_subgroup(g.degree(), gens);
  detail::check(is_subgroup(h, g), "fixture subgroup escapes its group");
  return h;
}

}  // namespace

Group symmetric_group(std::size_t n) {
  if (n <= 1) return Group::trivial(std::max<std::size_t>(n, 1));
  std::vector<int> c(n);
  for (std::size_t i = 0; i < n; ++i) c[i] = static_cast<int>(i);
  return gen(n, {cycle(n, {0, 1}), cycle(n, c)});
}

Group alternating_group(std::size_t n) {
  if (n <= 2) return Group::trivial(std::max<std::size_t>(n, 1));
  std::vector<Perm> gens;
  for (std::size_t i = 2; i < n; ++i) gens.push_back(cycle(n, {0, 1, static_cast<int>(i)}));
  return gen(n, gens);
}

Group cyclic_group(std::size_t n) {
  if (n == 1) return Group::trivial(1);
  std::vector<int> c(n);
  for (std::size_t i = 0; i < n; ++i) c[i] = static_cast<int>(i);
  return gen(n, {cycle(n, c)});
}

Group dihedral_group(std::size_t n) {
  std::vector<int> c(n);
  for (std::size_t i = 0; i < n; ++i) c[i] = static_cast<int>(i);
  std::vector<std::vector<int>> refl;
  for (std::size_t i = 1; i < n - i; ++i) refl.push_back({static_cast<int>(i), static_cast<int>(n - i)});
  return gen(n, {cycle(n, c), Perm::from_cycles(n, refl)});
}

S4Data s4() {
  S4Data d;
  d.g = gen(4, {cycle(4, {0, 1}), cycle(4, {0, 1, 2, 3})});
  d.p = o_p(d.g, 2);
  d.a4 = sub(d.g, {cycle(4, {0, 1, 2}), cycle(4, {1, 2, 3})});
  relation(d.g.order() == 24 && d.p.order() == 4 && d.a4.order() == 12, "S4 orders");
  return d;
}

D8xA4 d8_x_a4() {
  // Small faithful realizations, then their regular representations.
  Perm a4p = Perm::from_cycles(4, {{0, 1}, {2, 3}});
  Perm y4 = Perm::from_cycles(4, {{1, 3}});
  Perm z4 = Perm::from_cycles(4, {{0, 2}, {1, 3}});
  Group d8small = Group::from_generators(4, {a4p, y4, z4});
  Perm t4 = Perm::from_cycles(4, {{1, 2, 3}});
  Perm b4 = Perm::from_cycles(4, {{0, 1}, {2, 3}});
  Perm c4 = b4.conjugated_by(t4.inverse());  // t^-1 b t
  Group a4small = Group::from_generators(4, {t4, b4, c4});

  D8xA4 d;
  Group d8reg = regular_representation(d8small), a4reg = regular_representation(a4small);
  d.g = direct_product(d8reg, a4reg);
  const auto& gs = d.g.generators();
  detail::check(gs.size() == 6, "D8 x A4 needs six generators");
  d.a = gs[0], d.y = gs[1], d.z = gs[2], d.t = gs[3], d.b = gs[4], d.c = gs[5];
  const std::size_t n = d.g.degree();
  auto one = [&](const Perm& u) { return u.is_identity(); };
  relation(n == 20, "degree 8 + 12");
  relation(one(d.a * d.a) && one(d.y * d.y) && one(d.z * d.z), "a^2 = y^2 = z^2 = 1");
  relation(one(commutator(d.a, d.z)) && one(commutator(d.y, d.z)), "[a,z] = [y,z] = 1");
  relation(commutator(d.a, d.y) == d.z, "[a,y] = z");
  relation(one(d.t.pow(3)) && one(d.b * d.b) && one(d.c * d.c), "t^3 = b^2 = c^2 = 1");
  relation(one(commutator(d.b, d.c)), "[b,c] = 1");
  // x^t = t^-1 x t
  auto conj = [](const Perm& u, const Perm& t) { return t.inverse() * u * t; };
  relation(conj(d.b, d.t) == d.c, "b^t = c");
  relation(conj(d.c, d.t) == d.b * d.c, "c^t = bc");
  d.d8 = sub(d.g, {d.a, d.y, d.z});
  d.a4 = sub(d.g, {d.t, d.b, d.c});
  relation(d.g.order() == 96 && d.d8.order() == 8 && d.a4.order() == 12, "orders 96, 8, 12");
  return d;
}

Example34 example_3_4() {
  Example34 e;
  e.base = d8_x_a4();
  const auto& d = e.base;
  e.x = d.a * d.b;
  e.r = sub(d.g, {d.y, d.z});
  e.p = sub(d.g, {d.y, d.z, e.x});
  e.q = sub(d.g, {e.x, d.z});
  relation(e.p.order() == 8 && e.r.order() == 4 && e.q.order() == 4, "orders of P, R, Q (P of order 8)");
  return e;
}

Example35 example_3_5() {
  Example35 e;
  e.base = d8_x_a4();
  const auto& d = e.base;
  e.d = d.d8;
  e.p = sub(d.g, {d.a, d.y, d.z, d.b});
  e.r = e.d;
  relation(e.p.order() == 16, "order of P = D x <b>");
  return e;
}

std::vector<CatalogEntry> bi_catalog() {
  std::vector<CatalogEntry> out;
  auto add = [&](std::string name, const Group& g, const Group& p, unsigned prime) {
    detail::check(is_subgroup(p, g) && p.is_p_group(prime), "catalog entry: P is not a p-subgroup");
    out.push_back({std::move(name), g, p, prime});
  };
  Group s3 = symmetric_group(3), s4g = symmetric_group(4), a4 = alternating_group(4), a5 = alternating_group(5);
  Group s3xs3 = direct_product(s3, s3), s4xc2 = direct_product(s4g, cyclic_group(2));
  Group a4xc2 = direct_product(a4, cyclic_group(2)), c3xa4 = direct_product(cyclic_group(3), a4);
  Group s3xc3 = direct_product(s3, cyclic_group(3)), d12 = dihedral_group(6);
  Group s3wrc2 = Group::from_generators(6, {cycle(6, {0, 1, 2}), cycle(6, {0, 1}), Perm::from_cycles(6, {{0, 3}, {1, 4}, {2, 5}})});
  auto ex34 = example_3_4();
  auto ex35 = example_3_5();
  auto sg = [](const Group& g, std::vector<Perm> gens) { return sub(g, std::move(gens)); };

  // p = 2
  add("S3, P = C2", s3, sg(s3, {cycle(3, {0, 1})}), 2);
  add("S4, P = O_2(S4)", s4g, o_p(s4g, 2), 2);
  add("S4, P = Sylow D8", s4g, sylow_subgroup(s4g, 2), 2);
  add("S4, P = <(0 1)>", s4g, sg(s4g, {cycle(4, {0, 1})}), 2);
  add("S4, P = <(0 1)(2 3)>", s4g, sg(s4g, {Perm::from_cycles(4, {{0, 1}, {2, 3}})}), 2);
  add("S4, P = <(0 1 2 3)>", s4g, sg(s4g, {cycle(4, {0, 1, 2, 3})}), 2);
  add("A4, P = V4", a4, o_p(a4, 2), 2);
  add("A4, P = C2", a4, sg(a4, {Perm::from_cycles(4, {{0, 1}, {2, 3}})}), 2);
  add("D12, P = C2 x C2", d12, sylow_subgroup(d12, 2), 2);
  add("S3 x S3, P = C2 x C2", s3xs3, sylow_subgroup(s3xs3, 2), 2);
  add("A4 x C2, P = V4 x C2", a4xc2, sylow_subgroup(a4xc2, 2), 2);
  add("S4 x C2, P = Sylow", s4xc2, sylow_subgroup(s4xc2, 2), 2);
  add("S4 x C2, P = O_2(S4) x C2", s4xc2, o_p(s4xc2, 2), 2);
  add("A5, P = V4", a5, sylow_subgroup(a5, 2), 2);
  add("D8 x A4, P = <y,z,ab>", ex34.base.g, ex34.p, 2);
  add("D8 x A4, P = D8 x <b>", ex35.base.g, ex35.p, 2);
  add("D8 x A4, P = <y,z>", ex34.base.g, ex34.r, 2);
  // p = 3
  add("S3, P = C3", s3, sylow_subgroup(s3, 3), 3);
  add("A4, P = C3", a4, sylow_subgroup(a4, 3), 3);
  add("S4, P = C3", s4g, sylow_subgroup(s4g, 3), 3);
  add("S3 x S3, P = C3 x C3", s3xs3, sylow_subgroup(s3xs3, 3), 3);
  add("S3 x S3, P = C3 x 1", s3xs3, sg(s3xs3, {cycle(6, {0, 1, 2})}), 3);
  add("S3 x C3, P = C3 x C3", s3xc3, sylow_subgroup(s3xc3, 3), 3);
  add("C3 x A4, P = C3 x C3", c3xa4, sylow_subgroup(c3xa4, 3), 3);
  add("S3 wr C2, P = C3 x C3", s3wrc2, sylow_subgroup(s3wrc2, 3), 3);
  add("A5, P = C3", a5, sylow_subgroup(a5, 3), 3);
  for (const auto& e : out) detail::check(e.g.order() <= 200 && e.p.order() <= 16, "catalog bounds");
  return out;
}

}  // namespace sb::fixtures
