#include <doctest.h>

#include <random>

#include "weakdiv/acceptance.hpp"
#include "weakdiv/charpoly.hpp"
#include "weakdiv/errors.hpp"

using namespace weakdiv;

namespace {

using QPoly = Polynomial<Rational>;

QPoly from_roots(std::vector<long> roots) {
  std::vector<Rational> r(roots.begin(), roots.end());
  return QPoly::from_roots(r);
}

}  // namespace

TEST_CASE("Newton power sums") {
  const auto p = newton_power_sums(from_roots({2, 3}), 2);
  REQUIRE(p.size() == 2);
  CHECK(p[0] == 5);
  CHECK(p[1] == 13);
  for (std::size_t n = 1; n <= 5; ++n) {
    const QPoly f = QPoly::monomial(Rational(1), n) - QPoly::constant(Rational(1));
    const auto s = newton_power_sums(f, 12);
    for (std::size_t k = 1; k <= 12; ++k) CHECK(s[k - 1] == (k % n == 0 ? Rational(n) : Rational(0)));
  }
}

TEST_CASE("exterior square against pairwise root products") {
  const QPoly f = from_roots({1, 2, 3});
  CHECK(exterior2(f) == from_roots({2, 3, 6}));
  std::vector<Rational> c = {-36, 36, -11, 1};
  CHECK(exterior2(f) == QPoly(c));
  std::mt19937_64 rng(2);
  std::uniform_int_distribution<long> d(-6, 6);
  for (int t = 0; t < 30; ++t) {
    std::vector<long> roots(2 + t % 4);
    for (auto& r : roots) r = d(rng);
    std::vector<long> pairs, squares;
    for (std::size_t i = 0; i < roots.size(); ++i)
      for (std::size_t j = i; j < roots.size(); ++j) (i == j ? squares : pairs).push_back(roots[i] * roots[j]);
    CHECK(exterior2(from_roots(roots)) == from_roots(pairs));
    auto all = pairs;
    all.insert(all.end(), squares.begin(), squares.end());
    CHECK(sym2(from_roots(roots)) == from_roots(all));
  }
}

TEST_CASE("tensor twist dsum and det") {
  CHECK(tensor(from_roots({2}), from_roots({3})) == from_roots({6}));
  CHECK(tensor(from_roots({1, 2}), from_roots({3, 5})) == from_roots({3, 5, 6, 10}));
  const Rational a(3), p(7), c(2, 5);
  const QPoly f({p, -a, Rational(1)});
  CHECK(twist(f, c) == QPoly({p * c * c, -a * c, Rational(1)}));
  CHECK(dsum(from_roots({1}), from_roots({4, 5})) == from_roots({1, 4, 5}));
  CHECK(det_charpoly(from_roots({2, 3, -1})) == from_roots({-6}));
  CHECK(det_charpoly(QPoly({Rational(5), Rational(-1), Rational(1)})) == from_roots({5}));
  CHECK_THROWS_AS(exterior2(QPoly({Rational(1), Rational(2)})), InputError);
}

TEST_CASE("plethysm identities on random polynomials") {
  std::mt19937_64 rng(9);
  for (int t = 0; t < 100; ++t) {
    const unsigned cond = t % 2 ? 4 : 1;
    const Poly f = random_monic(rng, 1 + t % 5, cond);
    CHECK(tensor(f, f) == sym2(f) * exterior2(f));
    CHECK(charpoly_from_power_sums(newton_power_sums(f, f.degree()), f.degree()) == f);
    const Poly g = random_monic(rng, 3, cond);
    CHECK(exterior2(g) == dual_twist_by_det(g));
  }
}

TEST_CASE("transform names") {
  CHECK(parse_transform("alt2") == Transform::exterior2);
  CHECK(parse_transform("dual_twist_by_det") == Transform::dual_twist_by_det);
  CHECK_THROWS_AS(parse_transform("cube"), InputError);
}
