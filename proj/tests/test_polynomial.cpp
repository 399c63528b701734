#include <doctest.h>

#include <random>

#include "weakdiv/acceptance.hpp"
#include "weakdiv/errors.hpp"
#include "weakdiv/polynomial.hpp"
#include "weakdiv/sylvester.hpp"

using namespace weakdiv;

namespace {

using QPoly = Polynomial<Rational>;

QPoly q(std::initializer_list<long> c) {
  std::vector<Rational> v;
  for (long x : c) v.emplace_back(x);
  return QPoly(v);
}

// Rank as the size of the largest nonzero minor, by cofactor expansion.
Rational det(const std::vector<std::vector<Rational>>& a) {
  const std::size_t n = a.size();
  if (n == 1) return a[0][0];
  Rational s = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (sgn(a[0][j]) == 0) continue;
    std::vector<std::vector<Rational>> sub;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<Rational> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(a[i][k]);
      sub.push_back(row);
    }
    s += (j % 2 ? -1 : 1) * a[0][j] * det(sub);
  }
  return s;
}

int minor_rank(const ExactMatrix<Rational>& m) {
  const int rows = static_cast<int>(m.rows()), cols = static_cast<int>(m.cols());
  for (int k = std::min(rows, cols); k > 0; --k) {
    // Enumerate k-subsets of rows and columns by bitmask.
    for (unsigned rs = 0; rs < (1u << rows); ++rs) {
      if (__builtin_popcount(rs) != k) continue;
      for (unsigned cs = 0; cs < (1u << cols); ++cs) {
        if (__builtin_popcount(cs) != k) continue;
        std::vector<std::vector<Rational>> a;
        for (int i = 0; i < rows; ++i) {
          if (!(rs >> i & 1)) continue;
          std::vector<Rational> row;
          for (int j = 0; j < cols; ++j)
            if (cs >> j & 1) row.push_back(m(i, j));
          a.push_back(row);
        }
        if (sgn(det(a)) != 0) return k;
      }
    }
  }
  return 0;
}

}  // namespace

TEST_CASE("zero polynomial is flagged") {
  CHECK(QPoly().is_zero());
  CHECK(QPoly().degree() == -1);
  CHECK(q({0, 0, 0}).is_zero());
  CHECK(q({1, 2, 0, 0}).degree() == 1);
}

TEST_CASE("division with remainder") {
  auto [q1, r1] = poly_divrem(q({-1, 0, 1}), q({-1, 1}));
  CHECK(q1 == q({1, 1}));
  CHECK(r1.is_zero());
  auto [q2, r2] = poly_divrem(q({-1, 1}), q({0, 0, 1}));
  CHECK(q2.is_zero());
  CHECK(r2 == q({-1, 1}));
  const QPoly f = q({-6, 11, -6, 1});
  CHECK(f(Rational(2)) == 0);  // hand evaluation: 8 - 24 + 22 - 6
  CHECK(poly_divrem(f, q({-2, 1})).second.is_zero());
  CHECK_THROWS_AS(poly_divrem(f, QPoly()), InputError);
}

TEST_CASE("gcd examples") {
  CHECK(poly_gcd(q({-1, 0, 1}), q({-1, 1})) == q({-1, 1}));
  CHECK(poly_gcd(q({6, -5, 1}), q({15, -8, 1})) == q({-3, 1}));
  const Poly t2p1({Cyclotomic(1), Cyclotomic(0), Cyclotomic(1)});
  CHECK(poly_gcd(t2p1, t2p1) == t2p1);
  const Cyclotomic i = Cyclotomic::zeta(4);
  CHECK(Poly::linear(i) * Poly::linear(-i) == t2p1);
  CHECK(poly_gcd(t2p1, Poly::linear(i)) == Poly::linear(i));
  CHECK_THROWS_AS(poly_gcd(QPoly(), QPoly()), InputError);
}

TEST_CASE("Sylvester rank examples") {
  const QPoly f = q({2, -3, 1}), g = q({6, -5, 1});
  CHECK(sylvester_rank(f, g) == 3);
  CHECK(minor_rank(sylvester_matrix(f, g)) == 3);
  CHECK(sylvester_rank(q({-1, 1}), q({-1, 1})) == 1);
  CHECK(minor_rank(sylvester_matrix(q({-1, 1}), q({-1, 1}))) == 1);
  CHECK(sylvester_rank(q({1, 0, 1}), q({1, 1})) == 3);
}

TEST_CASE("Sylvester rank agrees with the minor oracle") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> c(-3, 3);
  for (int t = 0; t < 40; ++t) {
    QPoly common = q({1});
    for (int k = 0; k < t % 3; ++k) common = common * q({c(rng), 1});
    QPoly f = common * q({c(rng), 1}), g = common;
    if (t % 2) g = g * q({c(rng), c(rng), 1});
    else g = g * q({c(rng), 1});
    CHECK(sylvester_rank(f, g) == minor_rank(sylvester_matrix(f, g)));
  }
}

TEST_CASE("rank identity reconstruction and divisibility") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 200; ++t) {
    const unsigned cond = t % 2 ? 4 : 1;
    const Poly h = random_monic(rng, t % 4, cond);
    const Poly f = h * random_monic(rng, 1 + t % 3, cond);
    const Poly g = h * random_monic(rng, t % 3, cond);
    const Poly d = poly_gcd(f, g);
    CHECK(d.is_monic());
    CHECK(sylvester_rank(f, g) == f.degree() + g.degree() - d.degree());
    auto [quo, rem] = poly_divrem(f, g);
    CHECK(quo * g + rem == f);
    CHECK(rem.degree() < g.degree());
    CHECK(divides(g, f) == rem.is_zero());
    CHECK(rem.is_zero() == (d.degree() == g.degree()));
  }
}
