#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace weakdiv {

using Rational = mpq_class;
using Integer = mpz_class;

/// Integer coefficients of the m-th cyclotomic polynomial, lowest degree first.
const std::vector<long>& cyclotomic_polynomial(unsigned m);

/// Euler phi, i.e. the degree of the m-th cyclotomic polynomial.
unsigned euler_phi(unsigned m);

/// An element of Q(zeta_m), stored in the power basis 1, zeta, ..., zeta^{phi(m)-1}
/// modulo Phi_m. Conductor 1 is plain Q. Binary operations on different
/// conductors lift both operands to the lcm conductor first.
class Cyclotomic {
 public:
  Cyclotomic() : m_(1), c_(1) {}
  Cyclotomic(long n) : m_(1), c_{Rational(n)} {}  // NOLINT: implicit by design of a scalar
  Cyclotomic(const Rational& q) : m_(1), c_{q} { c_[0].canonicalize(); }  // NOLINT
  Cyclotomic(unsigned conductor, std::vector<Rational> coeffs);

  /// zeta_m^k for any integer k.
  static Cyclotomic zeta(unsigned m, long k = 1);

  unsigned conductor() const { return m_; }
  const std::vector<Rational>& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;
  /// Only valid when is_rational().
  const Rational& rational() const;

  /// Same element expressed over Q(zeta_M); requires conductor() | M.
  Cyclotomic lifted(unsigned M) const;
  Cyclotomic inverse() const;
  Cyclotomic pow(long k) const;

  Cyclotomic& operator+=(const Cyclotomic& o);
  Cyclotomic& operator-=(const Cyclotomic& o);
  Cyclotomic& operator*=(const Cyclotomic& o);
  Cyclotomic& operator/=(const Cyclotomic& o);

  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
  friend Cyclotomic operator/(Cyclotomic a, const Cyclotomic& b) { return a /= b; }
  Cyclotomic operator-() const;

  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);
  friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

  /// Human readable, e.g. "3/2 + 1/1*z4^1". Not a serialization format.
  std::string to_string() const;

 private:
  unsigned m_;
  std::vector<Rational> c_;
};

std::ostream& operator<<(std::ostream& os, const Cyclotomic& x);

inline bool is_zero(const Cyclotomic& x) { return x.is_zero(); }

}  // namespace weakdiv
