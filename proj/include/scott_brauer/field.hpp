#pragma once

// Finite fields GF(p^m). Elements are encoded as integers sum c_i p^i where
// c_i is the coefficient of x^i in the residue modulo the field's modulus.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace sb {

using Elem = std::uint32_t;

inline constexpr std::size_t kMaxFieldOrder = 1u << 16;

class Field {
 public:
  /// GF(p^m) with the lexicographically least monic irreducible modulus of
  /// degree m. Throws PreconditionError for non-prime p, ResourceError when
  /// p^m exceeds kMaxFieldOrder.
  static Field make(unsigned p, unsigned m = 1);

  Field() : Field(make(2, 1)) {}

  unsigned characteristic() const { return t_->p; }
  unsigned degree() const { return t_->m; }
  std::size_t order() const { return t_->q; }
  /// Monic modulus, coefficients low to high, length degree()+1.
  const std::vector<Elem>& modulus() const { return t_->modulus; }
  bool is_prime_field() const { return t_->m == 1; }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  /// The class of x (a primitive root only by accident).
  Elem gen() const { return t_->m == 1 ? 0 : t_->p; }
  Elem primitive_element() const { return t_->primitive; }
  Elem from_int(long long v) const;

  Elem add(Elem a, Elem b) const {
    if (t_->m == 1) {
      Elem s = a + b;
      return s >= t_->p ? s - t_->p : s;
    }
    if (t_->p == 2) return a ^ b;
    return add_slow(a, b);
  }
  Elem neg(Elem a) const {
    if (t_->m == 1) return a == 0 ? 0 : t_->p - a;
    if (t_->p == 2) return a;
    return neg_slow(a);
  }
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  Elem mul(Elem a, Elem b) const {
    if (a == 0 || b == 0) return 0;
    if (t_->m == 1) return static_cast<Elem>((std::uint64_t{a} * b) % t_->p);
    std::uint32_t s = t_->log[a] + t_->log[b];
    if (s >= t_->q - 1) s -= static_cast<std::uint32_t>(t_->q - 1);
    return t_->exp[s];
  }
  /// Throws PreconditionError on zero.
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, std::uint64_t e) const;
  /// Absolute trace to GF(p), as an integer in [0, p).
  Elem trace_to_prime(Elem a) const;

  /// Coefficients of a over GF(p), low to high, length degree().
  std::vector<Elem> coords(Elem a) const;
  Elem from_coords(const std::vector<Elem>& c) const;

  std::string name() const;
  std::string format(Elem a) const;

  friend bool operator==(const Field& a, const Field& b) {
    return a.t_ == b.t_ || (a.t_->p == b.t_->p && a.t_->modulus == b.t_->modulus);
  }

 private:
  struct Tables {
    unsigned p = 2;
    unsigned m = 1;
    std::size_t q = 2;
    std::vector<Elem> modulus;
    std::vector<std::uint32_t> log;
    std::vector<Elem> exp;
    Elem primitive = 1;
  };
  explicit Field(std::shared_ptr<const Tables> t) : t_(std::move(t)) {}
  Elem add_slow(Elem a, Elem b) const;
  Elem neg_slow(Elem a) const;

  std::shared_ptr<const Tables> t_;
};

bool is_prime(unsigned n);

/// Image of the canonical embedding from -> to (from.degree() must divide
/// to.degree()). The generator of `from` maps to the least root of its modulus
/// in `to`; the choice is cached per field pair.
const std::vector<Elem>& field_embedding(const Field& from, const Field& to);

/// GF(q^d) for q = |f|, as a field with the same characteristic.
Field extension_field(const Field& f, unsigned d);

}  // namespace sb
