#pragma once

// Permutation groups of small degree, held as fully enumerated element lists.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace sb {

using Point = std::uint8_t;

inline constexpr std::size_t kMaxDegree = 255;
inline constexpr std::size_t kDefaultMaxGroupOrder = 1'000'000;
inline constexpr std::size_t kDefaultMaxSubgroupLattice = 1u << 10;

/// A bijection of {0, ..., degree-1}. Products compose right to left:
/// (g * h)(i) = g(h(i)).
class Perm {
 public:
  Perm() = default;
  /// Throws ParseError when `images` is not a bijection.
  explicit Perm(std::vector<Point> images);

  static Perm identity(std::size_t degree);
  static Perm from_ints(std::span<const int> images);
  /// Cycle notation, e.g. {{0,1},{2,3,4}}, on `degree` points.
  static Perm from_cycles(std::size_t degree, const std::vector<std::vector<int>>& cycles);

  std::size_t degree() const { return images_.size(); }
  Point operator[](std::size_t i) const { return images_[i]; }
  const std::vector<Point>& images() const { return images_; }

  Perm operator*(const Perm& rhs) const;
  Perm inverse() const;
  Perm pow(long e) const;
  /// g * this * g^-1
  Perm conjugated_by(const Perm& g) const;
  bool is_identity() const;
  std::size_t order() const;
  std::string to_string() const;

  auto operator<=>(const Perm&) const = default;
  bool operator==(const Perm&) const = default;

 private:
  std::vector<Point> images_;
};

/// a^-1 b^-1 a b
Perm commutator(const Perm& a, const Perm& b);

struct PermHash {
  std::size_t operator()(const Perm& g) const noexcept;
};

/// An immutable permutation group: generators plus the canonically sorted
/// element list. Every element carries a factorization g = gen[k] * parent
/// recorded by the breadth-first enumeration, so words in the generators are
/// available for evaluating representations. Copies share storage.
class Group {
 public:
  Group() : Group(trivial(1)) {}

  static Group from_generators(std::size_t degree, std::vector<Perm> gens,
                               std::size_t max_order = kDefaultMaxGroupOrder);
  static Group trivial(std::size_t degree);

  std::size_t degree() const { return d_->degree; }
  std::size_t order() const { return d_->elements.size(); }
  const std::vector<Perm>& generators() const { return d_->generators; }
  const std::vector<Perm>& elements() const { return d_->elements; }
  const Perm& element(std::size_t i) const { return d_->elements[i]; }
  const Perm& identity() const { return d_->elements.front(); }

  bool contains(const Perm& g) const { return index_of(g).has_value(); }
  std::optional<std::size_t> index_of(const Perm& g) const;

  /// Element indices in enumeration order: parents precede children.
  const std::vector<std::size_t>& bfs_order() const { return d_->bfs_order; }
  /// For a non-identity element i: element(i) == generators()[parent_generator(i)] * element(parent(i)).
  std::size_t parent(std::size_t i) const { return d_->parent[i]; }
  std::size_t parent_generator(std::size_t i) const { return d_->via[i]; }
  /// Generator indices w with element(i) == gen[w[0]] * gen[w[1]] * ... .
  std::vector<std::size_t> word(std::size_t i) const;

  bool is_trivial() const { return order() == 1; }
  bool is_p_group(unsigned p) const;
  std::size_t exponent() const;

  /// Same element set (generators may differ).
  friend bool operator==(const Group& a, const Group& b) { return a.d_ == b.d_ || a.elements() == b.elements(); }

  std::string describe() const;

 private:
  struct Data {
    std::size_t degree = 0;
    std::vector<Perm> generators;
    std::vector<Perm> elements;
    std::vector<std::size_t> parent;
    std::vector<std::size_t> via;
    std::vector<std::size_t> bfs_order;
  };
  explicit Group(std::shared_ptr<const Data> d) : d_(std::move(d)) {}
  std::shared_ptr<const Data> d_;
};

/// Subgroup of the ambient degree whose element set is exactly `elements`
/// (must already be closed). Generators are chosen greedily in canonical order.
Group group_from_elements(std::size_t degree, std::vector<Perm> elements);
/// Subgroup generated by `gens`, generators reduced greedily to a canonical set.
Group generated_subgroup(std::size_t degree, const std::vector<Perm>& gens);

bool is_subgroup(const Group& h, const Group& g);
bool is_normal(const Group& h, const Group& g);

Group centralizer(const Group& g, const Group& s);
Group normalizer(const Group& g, const Group& s);
Group intersection(const Group& a, const Group& b);
Group conjugate_subgroup(const Perm& g, const Group& h);

/// Largest normal p-subgroup.
Group o_p(const Group& g, unsigned p);
Group sylow_subgroup(const Group& g, unsigned p);

/// The group QR; throws PreconditionError when the product set is not closed.
Group product_set(const Group& q, const Group& r);

/// Left coset representatives of h in g, each the least element of its coset,
/// in increasing order.
std::vector<Perm> left_coset_reps(const Group& g, const Group& h);

/// All subgroups Q with r <= Q <= p, ordered by size then element list.
std::vector<Group> subgroups_between(const Group& r, const Group& p,
                                     std::size_t max_order = kDefaultMaxSubgroupLattice);
/// Subgroups of a p-group of index p.
std::vector<Group> maximal_subgroups(const Group& q);

/// Pairs (K, KR) for Q∩R <= K < Q, verified to be a bijection onto
/// {H : R <= H < QR}.
std::vector<std::pair<Group, Group>> interval_correspondence(const Group& q, const Group& r);

/// q_1..q_n with Q = ⊔ q_i K and QR = ⊔ q_i KR, n = |Q:K|.
std::vector<Perm> compatible_coset_reps(const Group& q, const Group& k, const Group& r);

/// G x H acting on disjoint point sets (G first).
Group direct_product(const Group& g, const Group& h);
/// {(u,u)} inside P x P, as a subgroup of direct_product(P, P).
Group diagonal_subgroup(const Group& p);

/// Conjugacy classes under g of the given subgroups: class id per input,
/// numbered by first appearance.
std::vector<std::size_t> conjugacy_reduce(const std::vector<Group>& subgroups, const Group& g);
/// First representative of every class, in input order.
std::vector<Group> conjugacy_class_reps(const std::vector<Group>& subgroups, const Group& g);
bool are_conjugate(const Group& a, const Group& b, const Group& g);

/// Left multiplication by x on the elements of g, as a permutation of
/// {0, ..., |g|-1} indexed by the canonical element order.
Perm regular_image(const Group& g, const Perm& x);
/// Regular representation of g; generator i is regular_image of generator i.
Group regular_representation(const Group& g);

}  // namespace sb
