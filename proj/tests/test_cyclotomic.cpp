#include <doctest.h>

#include <numeric>
#include <random>

#include "weakdiv/cyclotomic.hpp"
#include "weakdiv/errors.hpp"
#include "weakdiv/serialize.hpp"

using namespace weakdiv;

namespace {

int mobius(unsigned n) {
  int mu = 1;
  for (unsigned p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;
    mu = -mu;
  }
  return n > 1 ? -mu : mu;
}

Cyclotomic random_element(std::mt19937_64& rng, unsigned m) {
  std::uniform_int_distribution<long> num(-5, 5), den(1, 4);
  std::vector<Rational> c(euler_phi(m));
  for (auto& x : c) {
    x = Rational(num(rng), den(rng));
    x.canonicalize();
  }
  return Cyclotomic(m, c);
}

}  // namespace

TEST_CASE("cyclotomic polynomials of small order") {
  const auto phi6 = cyclotomic_polynomial(6);
  CHECK(phi6 == std::vector<long>{1, -1, 1});
  const auto phi12 = cyclotomic_polynomial(12);
  CHECK(phi12 == std::vector<long>{1, 0, -1, 0, 1});
  CHECK(cyclotomic_polynomial(15).size() == 9);
  for (unsigned m = 1; m <= 60; ++m) {
    unsigned count = 0;
    for (unsigned k = 1; k <= m; ++k) count += std::gcd(k, m) == 1;
    CHECK(euler_phi(m) == count);
  }
}

TEST_CASE("roots of unity") {
  CHECK(Cyclotomic::zeta(4).pow(2) == Cyclotomic(-1));
  for (unsigned m : {1u, 2u, 3u, 5u, 7u, 8u, 9u, 12u, 15u, 16u}) {
    CHECK(Cyclotomic::zeta(m).pow(static_cast<long>(m)).is_one());
    // Sum of primitive m-th roots is the Moebius function.
    Cyclotomic s;
    for (unsigned k = 1; k <= m; ++k)
      if (std::gcd(k, m) == 1) s = s + Cyclotomic::zeta(m, k);
    CHECK(s == Cyclotomic(mobius(m)));
  }
  CHECK(Cyclotomic::zeta(6, -1) == Cyclotomic::zeta(6).inverse());
}

TEST_CASE("cross-conductor arithmetic lifts to the lcm") {
  const Cyclotomic x = Cyclotomic::zeta(4) + Cyclotomic::zeta(3);
  CHECK(x.conductor() == 12);
  CHECK(Cyclotomic::zeta(4) * Cyclotomic::zeta(3) == Cyclotomic::zeta(12, 7));
  CHECK((Cyclotomic::zeta(6) - Cyclotomic::zeta(6)).is_zero());
  // Elements equal across conductors compare equal.
  CHECK(Cyclotomic::zeta(3).lifted(12) == Cyclotomic::zeta(3));
  CHECK(Cyclotomic::zeta(2) == Cyclotomic(-1));
}

TEST_CASE("field axioms on random elements") {
  std::mt19937_64 rng(7);
  for (unsigned m : {1u, 3u, 4u, 5u, 8u, 12u}) {
    for (int t = 0; t < 20; ++t) {
      const auto a = random_element(rng, m), b = random_element(rng, m), c = random_element(rng, 4);
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a * b == b * a);
      if (!a.is_zero()) CHECK((a * a.inverse()).is_one());
      if (!b.is_zero()) CHECK((a / b) * b == a);
    }
  }
  CHECK_THROWS_AS(Cyclotomic().inverse(), std::exception);
}

TEST_CASE("coefficient vectors are validated") {
  CHECK_THROWS_AS(Cyclotomic(5, {Rational(1)}), InputError);
  const Cyclotomic half(Rational(2, 4));
  CHECK(half.rational() == Rational(1, 2));
}

TEST_CASE("json round trip") {
  std::mt19937_64 rng(3);
  for (unsigned m : {1u, 4u, 7u}) {
    const auto a = random_element(rng, m);
    CHECK(cyclotomic_from_json(to_json(a)) == a);
  }
  CHECK(parse_rational("-6/4") == Rational(-3, 2));
  CHECK(rational_to_string(Rational(3)) == "3/1");
  CHECK_THROWS_AS(parse_rational("1/0"), InputError);
  CHECK_THROWS_AS(parse_rational("abc"), InputError);
}
