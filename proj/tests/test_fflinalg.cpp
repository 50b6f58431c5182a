#include <gtest/gtest.h>

#include <random>

#include "scott_brauer/error.hpp"
#include "scott_brauer/mat.hpp"
#include "scott_brauer/poly.hpp"

using namespace sb;

namespace {

Mat random_mat(std::mt19937& rng, const Field& f, std::size_t r, std::size_t c, int zero_bias = 0) {
  Mat a(f, r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j)
      a(i, j) = (zero_bias && rng() % zero_bias) ? 0 : static_cast<Elem>(rng() % f.order());
  return a;
}

std::vector<Field> fields() {
  return {Field::make(2), Field::make(3), Field::make(5), Field::make(2, 2), Field::make(3, 2), Field::make(2, 4)};
}

}  // namespace

TEST(Field, Axioms) {
  for (const auto& f : fields()) {
    for (Elem a = 0; a < f.order(); ++a) {
      EXPECT_EQ(f.add(a, f.neg(a)), 0u);
      if (a) EXPECT_EQ(f.mul(a, f.inv(a)), 1u);
      for (Elem b = 0; b < f.order(); ++b) {
        EXPECT_EQ(f.mul(a, b), f.mul(b, a));
        Elem c = (a * 7 + b * 3) % f.order();
        EXPECT_EQ(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
      }
      // Frobenius fixes exactly GF(p): a^q = a
      EXPECT_EQ(f.pow(a, f.order()), a);
    }
  }
}

TEST(Field, PrimitiveAndTrace) {
  for (const auto& f : fields()) {
    Elem g = f.primitive_element();
    std::size_t ord = 1;
    for (Elem x = g; x != 1; x = f.mul(x, g)) ++ord;
    EXPECT_EQ(ord, f.order() - 1);
    // the absolute trace is additive and onto GF(p)
    std::vector<int> hits(f.characteristic(), 0);
    for (Elem a = 0; a < f.order(); ++a) ++hits[f.trace_to_prime(a)];
    for (int h : hits) EXPECT_EQ(static_cast<std::size_t>(h), f.order() / f.characteristic());
  }
}

TEST(Field, Preconditions) {
  EXPECT_THROW(Field::make(4), PreconditionError);
  EXPECT_THROW(Field::make(2, 17), ResourceError);
  EXPECT_THROW(Field::make(3).inv(0), PreconditionError);
}

TEST(Field, EmbeddingIsRingHom) {
  Field f4 = Field::make(2, 2), f16 = Field::make(2, 4), f2 = Field::make(2);
  for (auto [from, to] : {std::pair{f2, f4}, std::pair{f4, f16}, std::pair{f2, f16}}) {
    const auto& e = field_embedding(from, to);
    for (Elem a = 0; a < from.order(); ++a)
      for (Elem b = 0; b < from.order(); ++b) {
        EXPECT_EQ(e[from.add(a, b)], to.add(e[a], e[b]));
        EXPECT_EQ(e[from.mul(a, b)], to.mul(e[a], e[b]));
      }
  }
}

TEST(Mat, RankNullity) {
  std::mt19937 rng(11);
  for (const auto& f : fields()) {
    for (int t = 0; t < 20; ++t) {
      std::size_t r = 1 + rng() % 7, c = 1 + rng() % 7;
      Mat a = random_mat(rng, f, r, c, t % 3 ? 2 : 0);
      Mat k = kernel_basis(a);
      EXPECT_EQ(rank(a) + k.rows(), c);
      if (k.rows()) EXPECT_TRUE((a * k.transpose()).is_zero());
      EXPECT_EQ(image_basis(a).rows(), rank(a));
    }
  }
}

TEST(Mat, InverseAndSolve) {
  std::mt19937 rng(12);
  for (const auto& f : fields()) {
    for (int t = 0; t < 20; ++t) {
      std::size_t n = 1 + rng() % 6;
      Mat a = random_mat(rng, f, n, n);
      auto inv = inverse(a);
      EXPECT_EQ(inv.has_value(), rank(a) == n);
      if (inv) EXPECT_TRUE((a * *inv).is_identity());
      Vec x(n);
      for (auto& v : x) v = static_cast<Elem>(rng() % f.order());
      Vec b = mat_vec(a, x);
      auto y = solve(a, b);
      ASSERT_TRUE(y.has_value());
      EXPECT_EQ(mat_vec(a, *y), b);
    }
  }
}

TEST(Mat, SubspaceOps) {
  std::mt19937 rng(13);
  Field f = Field::make(3);
  for (int t = 0; t < 30; ++t) {
    Mat a = row_space(random_mat(rng, f, 1 + rng() % 4, 6));
    Mat b = row_space(random_mat(rng, f, 1 + rng() % 4, 6));
    Mat s = subspace_sum(a, b), i = subspace_intersection(a, b);
    EXPECT_EQ(s.rows() + i.rows(), a.rows() + b.rows());
    for (std::size_t r = 0; r < i.rows(); ++r) {
      EXPECT_TRUE(subspace_contains(a, i.row(r)));
      EXPECT_TRUE(subspace_contains(b, i.row(r)));
    }
    QuotientSpace q(s, a);
    EXPECT_EQ(q.dim(), s.rows() - a.rows());
    for (std::size_t r = 0; r < q.dim(); ++r) {
      Vec c = q.coordinates(q.complement().row(r));
      for (std::size_t j = 0; j < c.size(); ++j) EXPECT_EQ(c[j], j == r ? 1u : 0u);
    }
    for (std::size_t r = 0; r < a.rows(); ++r) {
      Vec c = q.coordinates(a.row(r));
      for (Elem x : c) EXPECT_EQ(x, 0u);
    }
  }
}

TEST(Poly, CayleyHamiltonAndMinPoly) {
  std::mt19937 rng(14);
  for (const auto& f : fields()) {
    for (int t = 0; t < 15; ++t) {
      std::size_t n = 1 + rng() % 6;
      Mat a = random_mat(rng, f, n, n, t % 2 ? 2 : 0);
      Poly cp = char_poly(a), mp = min_poly(a);
      EXPECT_EQ(cp.degree(), static_cast<long>(n));
      EXPECT_TRUE(eval(cp, a).is_zero());
      EXPECT_TRUE(eval(mp, a).is_zero());
      EXPECT_TRUE(divmod(cp, mp).second.is_zero());
      // constant term of the char poly is (-1)^n det, zero iff singular
      EXPECT_EQ(cp.coeff(0) == 0, !is_invertible(a));
    }
  }
}

TEST(Poly, Gcd) {
  Field f = Field::make(5);
  Poly a = Poly::x_minus(f, 1) * Poly::x_minus(f, 2) * Poly::x_minus(f, 3);
  Poly b = Poly::x_minus(f, 2) * Poly::x_minus(f, 4);
  EXPECT_EQ(poly_gcd(a, b), Poly::x_minus(f, 2));
}
