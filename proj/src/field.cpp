#include "scott_brauer/field.hpp"

#include <map>
#include <mutex>
#include <sstream>
#include <tuple>

#include "scott_brauer/error.hpp"

namespace sb {

bool is_prime(unsigned n) {
  if (n < 2) return false;
  for (unsigned d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

namespace {

// Dense polynomials over GF(p) with small p; coefficients low to high.
using PrimePoly = std::vector<unsigned>;

void trim(PrimePoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

unsigned inv_mod(unsigned a, unsigned p) {
  unsigned r = 1, b = a % p, e = p - 2;
  while (e) {
    if (e & 1u) r = r * b % p;
    b = b * b % p;
    e >>= 1u;
  }
  return r;
}

PrimePoly poly_mod(PrimePoly a, const PrimePoly& m, unsigned p) {
  trim(a);
  unsigned lead_inv = inv_mod(m.back(), p);
  while (a.size() >= m.size()) {
    unsigned c = a.back() * lead_inv % p;
    std::size_t shift = a.size() - m.size();
    for (std::size_t i = 0; i < m.size(); ++i) a[shift + i] = (a[shift + i] + p - c * m[i] % p) % p;
    trim(a);
  }
  return a;
}

PrimePoly decode(std::size_t code, unsigned p, std::size_t len) {
  PrimePoly out(len);
  for (std::size_t i = 0; i < len; ++i) {
    out[i] = static_cast<unsigned>(code % p);
    code /= p;
  }
  return out;
}

bool is_irreducible(const PrimePoly& f, unsigned p) {
  std::size_t m = f.size() - 1;
  for (std::size_t d = 1; 2 * d <= m; ++d) {
    std::size_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (std::size_t code = 0; code < count; ++code) {
      PrimePoly g = decode(code, p, d);
      g.push_back(1);
      if (poly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

// Multiplication of encoded elements by polynomial arithmetic; used to build
// the log tables.
Elem slow_mul(Elem a, Elem b, unsigned p, const PrimePoly& modulus) {
  std::size_t m = modulus.size() - 1;
  PrimePoly x = decode(a, p, m), y = decode(b, p, m);
  PrimePoly prod(2 * m, 0);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) prod[i + j] = (prod[i + j] + x[i] * y[j]) % p;
  prod = poly_mod(prod, modulus, p);
  Elem out = 0, scale = 1;
  for (unsigned c : prod) {
    out += c * scale;
    scale *= p;
  }
  return out;
}

std::mutex& cache_mutex() {
  static std::mutex mu;
  return mu;
}

}  // namespace

Field Field::make(unsigned p, unsigned m) {
  if (!is_prime(p)) throw PreconditionError("field characteristic " + std::to_string(p) + " is not prime");
  if (m == 0) throw PreconditionError("field extension degree must be positive");
  std::size_t q = 1;
  for (unsigned i = 0; i < m; ++i) {
    q *= p;
    if (q > kMaxFieldOrder)
      throw ResourceError("field GF(" + std::to_string(p) + "^" + std::to_string(m) + ") exceeds the table cap");
  }

  static std::map<std::pair<unsigned, unsigned>, std::shared_ptr<const Tables>> cache;
  {
    std::lock_guard lock(cache_mutex());
    auto it = cache.find({p, m});
    if (it != cache.end()) return Field(it->second);
  }

  auto t = std::make_shared<Tables>();
  t->p = p;
  t->m = m;
  t->q = q;
  if (m == 1) {
    t->modulus = {0, 1};
    for (Elem g = 1; g < p; ++g) {
      Elem x = g;
      unsigned ord = 1;
      while (x != 1) {
        x = static_cast<Elem>(std::uint64_t{x} * g % p);
        ++ord;
      }
      if (ord == p - 1) {
        t->primitive = g;
        break;
      }
    }
  } else {
    PrimePoly modulus;
    for (std::size_t code = 0; code < q; ++code) {
      PrimePoly f = decode(code, p, m);
      f.push_back(1);
      if (is_irreducible(f, p)) {
        modulus = f;
        break;
      }
    }
    detail::check(!modulus.empty(), "no irreducible polynomial found");
    t->modulus.assign(modulus.begin(), modulus.end());
    t->log.assign(q, 0);
    t->exp.assign(q - 1, 0);
    for (Elem g = 2; g < q; ++g) {
      Elem x = 1;
      std::size_t k = 0;
      bool ok = true;
      do {
        if (k >= q - 1) {
          ok = false;
          break;
        }
        t->exp[k] = x;
        t->log[x] = static_cast<std::uint32_t>(k);
        x = slow_mul(x, g, p, modulus);
        ++k;
      } while (x != 1);
      if (ok && k == q - 1) {
        t->primitive = g;
        break;
      }
    }
  }

  std::lock_guard lock(cache_mutex());
  auto [it, inserted] = cache.emplace(std::make_pair(p, m), std::move(t));
  return Field(it->second);
}

Elem Field::from_int(long long v) const {
  long long p = t_->p;
  long long r = v % p;
  if (r < 0) r += p;
  return static_cast<Elem>(r);
}

Elem Field::add_slow(Elem a, Elem b) const {
  Elem out = 0, scale = 1;
  const unsigned p = t_->p;
  for (unsigned i = 0; i < t_->m; ++i) {
    out += ((a % p + b % p) % p) * scale;
    a /= p;
    b /= p;
    scale *= p;
  }
  return out;
}

Elem Field::neg_slow(Elem a) const {
  Elem out = 0, scale = 1;
  const unsigned p = t_->p;
  for (unsigned i = 0; i < t_->m; ++i) {
    out += ((p - a % p) % p) * scale;
    a /= p;
    scale *= p;
  }
  return out;
}

Elem Field::inv(Elem a) const {
  if (a == 0) throw PreconditionError("inverse of zero");
  if (t_->m == 1) return pow(a, t_->p - 2);
  std::uint32_t l = t_->log[a];
  return t_->exp[l == 0 ? 0 : static_cast<std::uint32_t>(t_->q - 1) - l];
}

Elem Field::pow(Elem a, std::uint64_t e) const {
  Elem r = 1;
  while (e) {
    if (e & 1u) r = mul(r, a);
    a = mul(a, a);
    e >>= 1u;
  }
  return r;
}

Elem Field::trace_to_prime(Elem a) const {
  Elem s = 0, x = a;
  for (unsigned i = 0; i < t_->m; ++i) {
    s = add(s, x);
    x = pow(x, t_->p);
  }
  detail::check(s < t_->p, "absolute trace left the prime field");
  return s;
}

std::vector<Elem> Field::coords(Elem a) const {
  std::vector<Elem> c(t_->m);
  for (unsigned i = 0; i < t_->m; ++i) {
    c[i] = a % t_->p;
    a /= t_->p;
  }
  return c;
}

Elem Field::from_coords(const std::vector<Elem>& c) const {
  Elem out = 0, scale = 1;
  for (unsigned i = 0; i < t_->m; ++i) {
    out += (i < c.size() ? c[i] % t_->p : 0) * scale;
    scale *= t_->p;
  }
  return out;
}

std::string Field::name() const {
  std::ostringstream os;
  os << "GF(" << t_->p;
  if (t_->m > 1) os << "^" << t_->m;
  os << ")";
  return os.str();
}

std::string Field::format(Elem a) const {
  if (t_->m == 1) return std::to_string(a);
  if (a == 0) return "0";
  return "z^" + std::to_string(t_->log[a]);
}

const std::vector<Elem>& field_embedding(const Field& from, const Field& to) {
  detail::require(from.characteristic() == to.characteristic(), "field embedding across characteristics");
  detail::require(to.degree() % from.degree() == 0, "field embedding: " + from.name() + " is not a subfield of " + to.name());
  using Key = std::tuple<unsigned, std::vector<Elem>, std::vector<Elem>>;
  static std::map<Key, std::vector<Elem>> cache;
  Key key{from.characteristic(), from.modulus(), to.modulus()};
  {
    std::lock_guard lock(cache_mutex());
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }

  const unsigned p = from.characteristic();
  std::vector<Elem> image(from.order());
  if (from.is_prime_field()) {
    for (Elem a = 0; a < p; ++a) image[a] = a;
  } else {
    const auto& f = from.modulus();
    Elem root = 0;
    bool found = false;
    for (Elem r = 0; r < to.order() && !found; ++r) {
      Elem acc = 0;
      for (std::size_t i = f.size(); i-- > 0;) acc = to.add(to.mul(acc, r), f[i]);
      if (acc == 0) {
        root = r;
        found = true;
      }
    }
    detail::check(found, "modulus of subfield has no root in the extension");
    for (Elem a = 0; a < from.order(); ++a) {
      auto c = from.coords(a);
      Elem acc = 0;
      for (std::size_t i = c.size(); i-- > 0;) acc = to.add(to.mul(acc, root), c[i]);
      image[a] = acc;
    }
  }
  std::lock_guard lock(cache_mutex());
  auto [it, inserted] = cache.emplace(std::move(key), std::move(image));
  return it->second;
}

Field extension_field(const Field& f, unsigned d) { return Field::make(f.characteristic(), f.degree() * d); }

}  // namespace sb
