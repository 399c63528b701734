#include "weakdiv/errors.hpp"
#include "weakdiv/frobenius.hpp"

namespace weakdiv {

namespace {

void require_prime_modulus(unsigned q) {
  if (q < 2) throw InputError("Dirichlet modulus must be at least 2");
  if (!is_prime(q)) {
    throw UnsupportedError("Dirichlet characters are supported for prime modulus only, got " +
                           std::to_string(q));
  }
}

std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  b %= m;
  while (e) {
    if (e & 1) r = r * b % m;
    b = b * b % m;
    e >>= 1;
  }
  return r;
}

// log_table[a] = t with g^t = a (mod q), for a in [1, q).
std::vector<unsigned> discrete_logs(unsigned q) {
  const unsigned g = smallest_primitive_root(q);
  std::vector<unsigned> table(q, 0);
  std::uint64_t a = 1;
  for (unsigned t = 0; t + 1 < q; ++t) {
    table[a] = t;
    a = a * g % q;
  }
  return table;
}

}  // namespace

unsigned smallest_primitive_root(unsigned q) {
  require_prime_modulus(q);
  if (q == 2) return 1;
  std::vector<unsigned> factors;
  unsigned n = q - 1;
  for (unsigned d = 2; d * d <= n; ++d) {
    if (n % d) continue;
    factors.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) factors.push_back(n);
  for (unsigned g = 2; g < q; ++g) {
    bool primitive = true;
    for (unsigned r : factors)
      if (powmod(g, (q - 1) / r, q) == 1) primitive = false;
    if (primitive) return g;
  }
  throw InternalError("no primitive root modulo " + std::to_string(q));
}

Cyclotomic dirichlet_value(unsigned q, long k, Prime p) {
  require_prime_modulus(q);
  if (p % q == 0) throw InputError("character value at a prime dividing the modulus");
  const auto logs = discrete_logs(q);
  return Cyclotomic::zeta(q - 1, k * static_cast<long>(logs[p % q]));
}

FrobStream dirichlet_char_stream(unsigned q, long k, Prime pmax) {
  require_prime_modulus(q);
  if (pmax < 2) throw InputError("pmax must be at least 2");
  const auto logs = discrete_logs(q);
  const unsigned m = q - 1;
  // zeta^{k t} depends on t only mod m; precompute the m values.
  std::vector<Cyclotomic> values;
  values.reserve(m);
  for (unsigned t = 0; t < m; ++t) values.push_back(Cyclotomic::zeta(m, k * static_cast<long>(t)));
  FrobStream s(1, m, {q});
  for (Prime p : primes_up_to(pmax)) {
    if (p == q) continue;
    s.append(p, Poly::linear(values[logs[p % q]]));
  }
  return s;
}

}  // namespace weakdiv
