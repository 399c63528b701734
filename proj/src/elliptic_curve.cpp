#include <cmath>

#include "weakdiv/errors.hpp"
#include "weakdiv/frobenius.hpp"
#include "weakdiv/parallel.hpp"

namespace weakdiv {

std::vector<Prime> primes_up_to(Prime n) {
  std::vector<Prime> primes;
  if (n < 2) return primes;
  std::vector<bool> composite(n + 1, false);
  for (Prime i = 2; i <= n; ++i) {
    if (composite[i]) continue;
    primes.push_back(i);
    for (Prime j = i * i; j <= n; j += i) composite[j] = true;
  }
  return primes;
}

bool is_prime(Prime n) {
  if (n < 2) return false;
  for (Prime d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

namespace {

// Brent's variant of Pollard rho; n composite and odd.
Integer pollard_rho(const Integer& n) {
  for (unsigned long c = 1;; ++c) {
    Integer x = 2, y = 2, d = 1, q = 1, ys;
    const auto f = [&](const Integer& v) -> Integer { return Integer((v * v + c) % n); };
    unsigned long r = 1;
    do {
      x = y;
      for (unsigned long i = 0; i < r; ++i) y = f(y);
      unsigned long k = 0;
      do {
        ys = y;
        for (unsigned long i = 0; i < std::min<unsigned long>(128, r - k); ++i) {
          y = f(y);
          q = (q * abs(x - y)) % n;
        }
        d = gcd(q, n);
        k += 128;
      } while (k < r && d == 1);
      r *= 2;
    } while (d == 1);
    if (d == n) {
      do {
        ys = f(ys);
        d = gcd(Integer(abs(x - ys)), n);
      } while (d == 1);
    }
    if (d != n) return d;
  }
}

void collect_prime_factors(Integer n, std::set<Prime>& out) {
  n = abs(n);
  for (unsigned long p = 2; p < 1000 && n > 1; ++p) {
    if (n % p != 0) continue;
    out.insert(p);
    while (n % p == 0) n /= p;
  }
  if (n == 1) return;
  if (mpz_probab_prime_p(n.get_mpz_t(), 30) > 0) {
    if (!n.fits_ulong_p()) throw InputError("discriminant has a prime factor beyond 64 bits");
    out.insert(n.get_ui());
    return;
  }
  Integer d = pollard_rho(n);
  collect_prime_factors(d, out);
  collect_prime_factors(n / d, out);
}

long mod(long a, long p) {
  long r = a % p;
  return r < 0 ? r + p : r;
}

}  // namespace

CurveSpec make_curve(const std::array<long, 5>& a) {
  const Integer a1 = a[0], a2 = a[1], a3 = a[2], a4 = a[3], a6 = a[4];
  const Integer b2 = a1 * a1 + 4 * a2;
  const Integer b4 = 2 * a4 + a1 * a3;
  const Integer b6 = a3 * a3 + 4 * a6;
  const Integer b8 = a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4;
  CurveSpec c;
  c.a = a;
  c.discriminant = -b2 * b2 * b8 - 8 * b4 * b4 * b4 - 27 * b6 * b6 + 9 * b2 * b4 * b6;
  if (c.discriminant == 0) throw InputError("singular Weierstrass model (discriminant 0)");
  collect_prime_factors(c.discriminant, c.bad_primes);
  return c;
}

long ec_point_count(const CurveSpec& curve, Prime p, Prime bound) {
  if (!is_prime(p)) throw InputError(std::to_string(p) + " is not prime");
  if (p > bound) {
    throw InputError("prime " + std::to_string(p) + " exceeds the point-count bound " +
                     std::to_string(bound));
  }
  if (curve.bad_primes.count(p)) throw InputError("bad prime " + std::to_string(p));
  const long P = static_cast<long>(p);
  const long a1 = mod(curve.a[0], P), a2 = mod(curve.a[1], P), a3 = mod(curve.a[2], P),
             a4 = mod(curve.a[3], P), a6 = mod(curve.a[4], P);
  long affine = 0;
  if (p == 2) {
    for (long x = 0; x < 2; ++x)
      for (long y = 0; y < 2; ++y) {
        const long lhs = y * y + a1 * x * y + a3 * y;
        const long rhs = x * x * x + a2 * x * x + a4 * x + a6;
        if (mod(lhs - rhs, 2) == 0) ++affine;
      }
  } else {
    // y^2 + b y = r has 1 + (D/p) solutions with D = b^2 + 4r.
    std::vector<char> square(P, 0);
    for (long y = 1; y < P; ++y) square[y * y % P] = 1;
    for (long x = 0; x < P; ++x) {
      const long r = ((x * x % P + a2 * x) % P * x % P + a4 * x % P + a6) % P;
      const long b = (a1 * x + a3) % P;
      const long disc = (b * b + 4 * r) % P;
      affine += disc == 0 ? 1 : (square[disc] ? 2 : 0);
    }
  }
  const long ap = P - affine;
  if (static_cast<double>(ap) * ap > 4.0 * P) {
    throw InternalError("Hasse bound violated: a_" + std::to_string(p) + " = " + std::to_string(ap));
  }
  return ap;
}

FrobStream ec_frob_stream(const CurveSpec& curve, Prime pmax, unsigned threads, Prime bound) {
  if (pmax < 2) throw InputError("pmax must be at least 2");
  if (pmax > bound) {
    throw InputError("pmax " + std::to_string(pmax) + " exceeds the point-count bound " +
                     std::to_string(bound));
  }
  std::vector<Prime> good;
  for (Prime p : primes_up_to(pmax))
    if (!curve.bad_primes.count(p)) good.push_back(p);
  std::vector<long> ap(good.size());
  parallel_for(good.size(), threads, [&](std::size_t i) {
    ap[i] = ec_point_count(curve, good[i], bound);
  });
  FrobStream s(2, 1, curve.bad_primes);
  for (std::size_t i = 0; i < good.size(); ++i) {
    s.append(good[i], Poly({Cyclotomic(static_cast<long>(good[i])), Cyclotomic(-ap[i]), Cyclotomic(1)}));
  }
  return s;
}

}  // namespace weakdiv
