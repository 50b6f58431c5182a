#include "scott_brauer/permgroup.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_map>

#include "scott_brauer/error.hpp"

namespace sb {

// ---------------------------------------------------------------- Perm

Perm::Perm(std::vector<Point> images) : images_(std::move(images)) {
  if (images_.empty() || images_.size() > kMaxDegree)
    throw ParseError("permutation degree must be in [1, 255], got " + std::to_string(images_.size()));
  std::vector<bool> seen(images_.size(), false);
  for (Point x : images_) {
    if (x >= images_.size() || seen[x]) throw ParseError("image array is not a bijection");
    seen[x] = true;
  }
}

Perm Perm::identity(std::size_t degree) {
  std::vector<Point> im(degree);
  std::iota(im.begin(), im.end(), Point{0});
  return Perm(std::move(im));
}

Perm Perm::from_ints(std::span<const int> images) {
  std::vector<Point> im;
  im.reserve(images.size());
  for (int x : images) {
    if (x < 0 || x >= static_cast<int>(kMaxDegree)) throw ParseError("point index out of range: " + std::to_string(x));
    im.push_back(static_cast<Point>(x));
  }
  return Perm(std::move(im));
}

Perm Perm::from_cycles(std::size_t degree, const std::vector<std::vector<int>>& cycles) {
  std::vector<int> im(degree);
  std::iota(im.begin(), im.end(), 0);
  for (const auto& c : cycles) {
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (c[i] < 0 || static_cast<std::size_t>(c[i]) >= degree) throw ParseError("cycle point out of range");
      im[c[i]] = c[(i + 1) % c.size()];
    }
  }
  return from_ints(im);
}

Perm Perm::operator*(const Perm& rhs) const {
  detail::require(degree() == rhs.degree(), "permutation degree mismatch");
  std::vector<Point> im(degree());
  for (std::size_t i = 0; i < im.size(); ++i) im[i] = images_[rhs.images_[i]];
  Perm out;
  out.images_ = std::move(im);
  return out;
}

Perm Perm::inverse() const {
  Perm out;
  out.images_.resize(degree());
  for (std::size_t i = 0; i < degree(); ++i) out.images_[images_[i]] = static_cast<Point>(i);
  return out;
}

Perm Perm::pow(long e) const {
  Perm base = e < 0 ? inverse() : *this;
  unsigned long n = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
  Perm acc = identity(degree());
  while (n) {
    if (n & 1u) acc = acc * base;
    base = base * base;
    n >>= 1u;
  }
  return acc;
}

Perm Perm::conjugated_by(const Perm& g) const { return g * *this * g.inverse(); }

bool Perm::is_identity() const {
  for (std::size_t i = 0; i < degree(); ++i)
    if (images_[i] != i) return false;
  return true;
}

std::size_t Perm::order() const {
  std::size_t ord = 1;
  std::vector<bool> seen(degree(), false);
  for (std::size_t i = 0; i < degree(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      ++len;
    }
    ord = std::lcm(ord, len);
  }
  return ord;
}

std::string Perm::to_string() const {
  std::ostringstream os;
  std::vector<bool> seen(degree(), false);
  bool any = false;
  for (std::size_t i = 0; i < degree(); ++i) {
    if (seen[i] || images_[i] == i) continue;
    os << '(';
    for (std::size_t j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      if (j != i) os << ' ';
      os << j;
    }
    os << ')';
    any = true;
  }
  return any ? os.str() : "()";
}

Perm commutator(const Perm& a, const Perm& b) { return a.inverse() * b.inverse() * a * b; }

std::size_t PermHash::operator()(const Perm& g) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (Point x : g.images()) h = (h ^ x) * 1099511628211ull;
  return h;
}

// ---------------------------------------------------------------- Group

Group Group::from_generators(std::size_t degree, std::vector<Perm> gens, std::size_t max_order) {
  if (degree == 0 || degree > kMaxDegree) throw PreconditionError("degree must be in [1, 255]");
  for (const auto& g : gens)
    if (g.degree() != degree)
      throw PreconditionError("generator degree " + std::to_string(g.degree()) + " does not match group degree " +
                              std::to_string(degree));

  std::vector<Perm> elems{Perm::identity(degree)};
  std::vector<std::size_t> parent{0}, via{0};
  std::unordered_map<Perm, std::size_t, PermHash> index{{elems[0], 0}};
  for (std::size_t head = 0; head < elems.size(); ++head) {
    for (std::size_t k = 0; k < gens.size(); ++k) {
      Perm next = gens[k] * elems[head];
      if (index.count(next)) continue;
      if (elems.size() >= max_order)
        throw ResourceError("group order exceeds cap of " + std::to_string(max_order) + " elements");
      index.emplace(next, elems.size());
      elems.push_back(std::move(next));
      parent.push_back(head);
      via.push_back(k);
    }
  }

  // Canonical (lexicographic) order; enumeration order survives in bfs_order.
  std::vector<std::size_t> perm(elems.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) { return elems[a] < elems[b]; });
  std::vector<std::size_t> rank(elems.size());
  for (std::size_t i = 0; i < perm.size(); ++i) rank[perm[i]] = i;

  auto d = std::make_shared<Data>();
  d->degree = degree;
  d->generators = std::move(gens);
  d->elements.resize(elems.size());
  d->parent.resize(elems.size());
  d->via.resize(elems.size());
  d->bfs_order.resize(elems.size());
  for (std::size_t old = 0; old < elems.size(); ++old) {
    std::size_t i = rank[old];
    d->elements[i] = std::move(elems[old]);
    d->parent[i] = rank[parent[old]];
    d->via[i] = via[old];
    d->bfs_order[old] = i;
  }
  return Group(std::move(d));
}

Group Group::trivial(std::size_t degree) { return from_generators(degree, {}); }

std::optional<std::size_t> Group::index_of(const Perm& g) const {
  const auto& el = d_->elements;
  if (g.degree() != degree()) return std::nullopt;
  auto it = std::lower_bound(el.begin(), el.end(), g);
  if (it == el.end() || *it != g) return std::nullopt;
  return static_cast<std::size_t>(it - el.begin());
}

std::vector<std::size_t> Group::word(std::size_t i) const {
  std::vector<std::size_t> w;
  while (i != 0) {
    w.push_back(d_->via[i]);
    i = d_->parent[i];
  }
  return w;
}

bool Group::is_p_group(unsigned p) const {
  std::size_t n = order();
  while (n % p == 0) n /= p;
  return n == 1;
}

std::size_t Group::exponent() const {
  std::size_t e = 1;
  for (const auto& g : elements()) e = std::lcm(e, g.order());
  return e;
}

std::string Group::describe() const {
  std::ostringstream os;
  os << "order " << order() << " <";
  for (std::size_t i = 0; i < generators().size(); ++i) os << (i ? ", " : "") << generators()[i].to_string();
  os << ">";
  return os.str();
}

// ---------------------------------------------------------------- constructions

Group group_from_elements(std::size_t degree, std::vector<Perm> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  std::vector<Perm> gens;
  Group cur = Group::trivial(degree);
  for (const auto& e : elements) {
    if (cur.contains(e)) continue;
    gens.push_back(e);
    cur = Group::from_generators(degree, gens);
    if (cur.order() > elements.size()) break;
  }
  detail::check(cur.elements() == elements, "element set passed to group_from_elements is not a group");
  return cur;
}

Group generated_subgroup(std::size_t degree, const std::vector<Perm>& gens) {
  Group full = Group::from_generators(degree, gens);
  return group_from_elements(degree, full.elements());
}

bool is_subgroup(const Group& h, const Group& g) {
  detail::require(h.degree() == g.degree(), "subgroup test on groups of different degree");
  if (g.order() % h.order() != 0) return false;
  return std::all_of(h.generators().begin(), h.generators().end(), [&](const Perm& x) { return g.contains(x); });
}

bool is_normal(const Group& h, const Group& g) {
  if (!is_subgroup(h, g)) return false;
  for (const auto& x : g.generators())
    for (const auto& y : h.generators())
      if (!h.contains(y.conjugated_by(x))) return false;
  return true;
}

Group centralizer(const Group& g, const Group& s) {
  detail::require(is_subgroup(s, g), "centralizer: S is not a subgroup of G");
  std::vector<Perm> out;
  for (const auto& x : g.elements()) {
    bool ok = std::all_of(s.generators().begin(), s.generators().end(),
                          [&](const Perm& y) { return x * y == y * x; });
    if (ok) out.push_back(x);
  }
  return group_from_elements(g.degree(), std::move(out));
}

Group normalizer(const Group& g, const Group& s) {
  detail::require(is_subgroup(s, g), "normalizer: S is not a subgroup of G");
  std::vector<Perm> out;
  for (const auto& x : g.elements()) {
    bool ok = std::all_of(s.generators().begin(), s.generators().end(),
                          [&](const Perm& y) { return s.contains(y.conjugated_by(x)); });
    if (ok) out.push_back(x);
  }
  return group_from_elements(g.degree(), std::move(out));
}

Group intersection(const Group& a, const Group& b) {
  detail::require(a.degree() == b.degree(), "intersection of groups of different degree");
  const Group& small = a.order() <= b.order() ? a : b;
  const Group& big = a.order() <= b.order() ? b : a;
  std::vector<Perm> out;
  for (const auto& x : small.elements())
    if (big.contains(x)) out.push_back(x);
  return group_from_elements(a.degree(), std::move(out));
}

Group conjugate_subgroup(const Perm& g, const Group& h) {
  std::vector<Perm> out;
  out.reserve(h.order());
  for (const auto& x : h.elements()) out.push_back(x.conjugated_by(g));
  return group_from_elements(h.degree(), std::move(out));
}

namespace {

bool is_p_power(std::size_t n, unsigned p) {
  while (n > 1 && n % p == 0) n /= p;
  return n == 1;
}

}  // namespace

Group o_p(const Group& g, unsigned p) {
  // An element lies in O_p(G) iff its normal closure is a p-group.
  std::vector<Perm> gens;
  std::vector<bool> done(g.order(), false);
  for (std::size_t i = 0; i < g.order(); ++i) {
    const Perm& x = g.element(i);
    if (done[i] || !is_p_power(x.order(), p)) continue;
    std::vector<Perm> cls;
    for (const auto& y : g.elements()) {
      Perm c = x.conjugated_by(y);
      done[*g.index_of(c)] = true;
      cls.push_back(std::move(c));
    }
    Group closure = Group::from_generators(g.degree(), cls);
    if (closure.is_p_group(p)) gens.insert(gens.end(), cls.begin(), cls.end());
  }
  if (gens.empty()) return Group::trivial(g.degree());
  return generated_subgroup(g.degree(), gens);
}

Group sylow_subgroup(const Group& g, unsigned p) {
  Group s = Group::trivial(g.degree());
  while ((g.order() / s.order()) % p == 0) {
    Group n = normalizer(g, s);
    bool grown = false;
    for (const auto& x : n.elements()) {
      if (s.contains(x) || !s.contains(x.pow(p))) continue;
      auto gens = s.generators();
      gens.push_back(x);
      s = generated_subgroup(g.degree(), gens);
      grown = true;
      break;
    }
    detail::check(grown, "sylow_subgroup: p-subgroup could not be extended");
  }
  return s;
}

Group product_set(const Group& q, const Group& r) {
  detail::require(q.degree() == r.degree(), "product_set of groups of different degree");
  std::set<Perm> prod;
  for (const auto& a : q.elements())
    for (const auto& b : r.elements()) prod.insert(a * b);
  auto gens = q.generators();
  gens.insert(gens.end(), r.generators().begin(), r.generators().end());
  Group joined = Group::from_generators(q.degree(), gens);
  if (joined.order() != prod.size()) throw PreconditionError("product set QR is not a subgroup");
  return group_from_elements(q.degree(), std::vector<Perm>(prod.begin(), prod.end()));
}

std::vector<Perm> left_coset_reps(const Group& g, const Group& h) {
  detail::require(is_subgroup(h, g), "left_coset_reps: H is not a subgroup of G");
  std::vector<bool> used(g.order(), false);
  std::vector<Perm> reps;
  for (std::size_t i = 0; i < g.order(); ++i) {
    if (used[i]) continue;
    reps.push_back(g.element(i));
    for (const auto& y : h.elements()) used[*g.index_of(g.element(i) * y)] = true;
  }
  return reps;
}

namespace {

bool canonical_less(const Group& a, const Group& b) {
  if (a.order() != b.order()) return a.order() < b.order();
  return a.elements() < b.elements();
}

}  // namespace

std::vector<Group> subgroups_between(const Group& r, const Group& p, std::size_t max_order) {
  detail::require(is_subgroup(r, p), "subgroups_between: R is not a subgroup of P");
  if (p.order() > max_order)
    throw ResourceError("subgroup lattice of a group of order " + std::to_string(p.order()) + " exceeds cap " +
                        std::to_string(max_order));
  std::set<std::vector<Perm>> seen{r.elements()};
  std::vector<Group> found{r};
  for (std::size_t head = 0; head < found.size(); ++head) {
    Group s = found[head];
    for (const auto& g : left_coset_reps(p, s)) {
      if (s.contains(g)) continue;
      auto gens = s.generators();
      gens.push_back(g);
      Group t = Group::from_generators(p.degree(), gens);
      if (seen.insert(t.elements()).second) found.push_back(group_from_elements(p.degree(), t.elements()));
    }
  }
  std::sort(found.begin(), found.end(), canonical_less);
  return found;
}

std::vector<Group> maximal_subgroups(const Group& q) {
  if (q.is_trivial()) return {};
  unsigned p = 0;
  for (unsigned c = 2; c <= q.order(); ++c)
    if (q.order() % c == 0) {
      p = c;
      break;
    }
  detail::require(q.is_p_group(p), "maximal_subgroups expects a p-group");
  // Every maximal subgroup contains the Frattini subgroup <x^p, [x,y]>.
  std::vector<Perm> frattini_gens;
  for (const auto& x : q.elements()) {
    frattini_gens.push_back(x.pow(p));
    for (const auto& y : q.generators()) frattini_gens.push_back(commutator(x, y));
  }
  Group phi = generated_subgroup(q.degree(), frattini_gens);
  std::vector<Group> out;
  for (auto& s : subgroups_between(phi, q, q.order()))
    if (s.order() * p == q.order()) out.push_back(std::move(s));
  return out;
}

std::vector<std::pair<Group, Group>> interval_correspondence(const Group& q, const Group& r) {
  Group qr = product_set(q, r);
  Group qcapr = intersection(q, r);
  std::vector<std::pair<Group, Group>> out;
  for (const auto& k : subgroups_between(qcapr, q, q.order())) {
    if (k == q) continue;
    out.emplace_back(k, product_set(k, r));
  }
  std::vector<Group> targets;
  for (const auto& h : subgroups_between(r, qr, qr.order()))
    if (!(h == qr)) targets.push_back(h);
  std::set<std::vector<Perm>> images;
  for (const auto& [k, kr] : out) {
    bool in_target = is_subgroup(r, kr) && kr.order() < qr.order() && is_subgroup(kr, qr);
    detail::check(in_target, "interval_correspondence: K R falls outside {H : R <= H < QR}");
    images.insert(kr.elements());
  }
  detail::check(images.size() == out.size(), "interval_correspondence: K -> KR is not injective");
  detail::check(images.size() == targets.size(), "interval_correspondence: K -> KR is not surjective");
  return out;
}

std::vector<Perm> compatible_coset_reps(const Group& q, const Group& k, const Group& r) {
  detail::require(is_subgroup(k, q) && k.order() < q.order(), "compatible_coset_reps: K must be a proper subgroup of Q");
  detail::require(is_subgroup(intersection(q, r), k), "compatible_coset_reps: Q ∩ R must lie in K");
  Group qr = product_set(q, r);
  Group kr = product_set(k, r);
  auto reps = left_coset_reps(q, k);

  std::vector<int> hit_q(q.order(), 0), hit_qr(qr.order(), 0);
  for (const auto& x : reps) {
    for (const auto& y : k.elements()) ++hit_q[*q.index_of(x * y)];
    for (const auto& y : kr.elements()) ++hit_qr[*qr.index_of(x * y)];
  }
  auto all_once = [](const std::vector<int>& v) { return std::all_of(v.begin(), v.end(), [](int c) { return c == 1; }); };
  detail::check(all_once(hit_q), "compatible_coset_reps: q_i K do not partition Q");
  detail::check(all_once(hit_qr), "compatible_coset_reps: q_i KR do not partition QR");
  return reps;
}

namespace {

Perm shifted(const Perm& g, std::size_t offset, std::size_t degree) {
  std::vector<Point> im(degree);
  std::iota(im.begin(), im.end(), Point{0});
  for (std::size_t i = 0; i < g.degree(); ++i) im[i + offset] = static_cast<Point>(g[i] + offset);
  return Perm(std::move(im));
}

}  // namespace

Group direct_product(const Group& g, const Group& h) {
  std::size_t degree = g.degree() + h.degree();
  if (degree > kMaxDegree) throw ResourceError("direct product degree exceeds 255");
  std::vector<Perm> gens;
  for (const auto& x : g.generators()) gens.push_back(shifted(x, 0, degree));
  for (const auto& y : h.generators()) gens.push_back(shifted(y, g.degree(), degree));
  return Group::from_generators(degree, std::move(gens));
}

Group diagonal_subgroup(const Group& p) {
  std::size_t degree = 2 * p.degree();
  if (degree > kMaxDegree) throw ResourceError("diagonal subgroup degree exceeds 255");
  std::vector<Perm> gens;
  for (const auto& u : p.generators()) gens.push_back(shifted(u, 0, degree) * shifted(u, p.degree(), degree));
  return Group::from_generators(degree, std::move(gens));
}

bool are_conjugate(const Group& a, const Group& b, const Group& g) {
  if (a.order() != b.order()) return false;
  for (const auto& x : g.elements()) {
    bool ok = std::all_of(a.generators().begin(), a.generators().end(),
                          [&](const Perm& y) { return b.contains(y.conjugated_by(x)); });
    if (ok) return true;
  }
  return false;
}

std::vector<std::size_t> conjugacy_reduce(const std::vector<Group>& subgroups, const Group& g) {
  std::vector<std::size_t> ids(subgroups.size());
  std::vector<std::size_t> reps;  // index into subgroups
  for (std::size_t i = 0; i < subgroups.size(); ++i) {
    bool matched = false;
    for (std::size_t c = 0; c < reps.size() && !matched; ++c) {
      if (are_conjugate(subgroups[i], subgroups[reps[c]], g)) {
        ids[i] = c;
        matched = true;
      }
    }
    if (!matched) {
      ids[i] = reps.size();
      reps.push_back(i);
    }
  }
  return ids;
}

std::vector<Group> conjugacy_class_reps(const std::vector<Group>& subgroups, const Group& g) {
  auto ids = conjugacy_reduce(subgroups, g);
  std::vector<Group> reps;
  for (std::size_t i = 0; i < subgroups.size(); ++i)
    if (ids[i] == reps.size()) reps.push_back(subgroups[i]);
  return reps;
}

Perm regular_image(const Group& g, const Perm& x) {
  if (g.order() > kMaxDegree) throw ResourceError("regular representation needs |G| <= 255");
  std::vector<Point> im(g.order());
  for (std::size_t i = 0; i < g.order(); ++i) {
    auto j = g.index_of(x * g.element(i));
    detail::require(j.has_value(), "regular_image: element not in group");
    im[i] = static_cast<Point>(*j);
  }
  return Perm(std::move(im));
}

Group regular_representation(const Group& g) {
  std::vector<Perm> gens;
  for (const auto& x : g.generators()) gens.push_back(regular_image(g, x));
  return Group::from_generators(g.order(), std::move(gens));
}

}  // namespace sb
