#include "weakdiv/cyclotomic.hpp"

#include <numeric>
#include <ostream>
#include <sstream>
#include <unordered_map>

#include "weakdiv/errors.hpp"

namespace weakdiv {

namespace {

std::vector<long> compute_cyclotomic(unsigned m) {
  // T^m - 1 divided by Phi_d for every proper divisor d of m.
  std::vector<long> num(m + 1, 0);
  num[0] = -1;
  num[m] = 1;
  for (unsigned d = 1; d < m; ++d) {
    if (m % d != 0) continue;
    const auto& div = cyclotomic_polynomial(d);
    const std::size_t dd = div.size() - 1;
    std::vector<long> quot(num.size() - dd, 0);
    for (std::size_t i = num.size(); i-- > dd;) {
      const long c = num[i];
      quot[i - dd] = c;
      if (c == 0) continue;
      for (std::size_t j = 0; j <= dd; ++j) num[i - dd + j] -= c * div[j];
    }
    num = std::move(quot);
  }
  return num;
}

// Reduce a polynomial in zeta modulo Phi_m in place; result has length phi(m).
void reduce_mod_phi(std::vector<Rational>& poly, unsigned m) {
  const auto& phi = cyclotomic_polynomial(m);
  const std::size_t d = phi.size() - 1;
  for (std::size_t i = poly.size(); i-- > d;) {
    if (sgn(poly[i]) == 0) continue;
    const Rational c = poly[i];
    for (std::size_t j = 0; j < d; ++j) {
      if (phi[j] != 0) poly[i - d + j] -= c * phi[j];
    }
    poly[i] = 0;
  }
  poly.resize(d, Rational(0));
}

unsigned lcm_u(unsigned a, unsigned b) { return std::lcm(a, b); }

}  // namespace

const std::vector<long>& cyclotomic_polynomial(unsigned m) {
  if (m == 0) throw InputError("cyclotomic conductor must be positive");
  thread_local std::unordered_map<unsigned, std::vector<long>> cache;
  auto it = cache.find(m);
  if (it != cache.end()) return it->second;
  auto poly = compute_cyclotomic(m);
  return cache.emplace(m, std::move(poly)).first->second;
}

unsigned euler_phi(unsigned m) {
  unsigned result = m;
  unsigned n = m;
  for (unsigned p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

Cyclotomic::Cyclotomic(unsigned conductor, std::vector<Rational> coeffs)
    : m_(conductor), c_(std::move(coeffs)) {
  if (m_ == 0) throw InputError("cyclotomic conductor must be positive");
  if (c_.size() != euler_phi(m_)) {
    throw InputError("cyclotomic element over conductor " + std::to_string(m_) + " needs " +
                     std::to_string(euler_phi(m_)) + " coefficients, got " +
                     std::to_string(c_.size()));
  }
  for (auto& q : c_) {
    if (sgn(q.get_den()) == 0) throw InputError("zero denominator in rational coefficient");
    q.canonicalize();
  }
}

Cyclotomic Cyclotomic::zeta(unsigned m, long k) {
  if (m == 0) throw InputError("cyclotomic conductor must be positive");
  long e = k % static_cast<long>(m);
  if (e < 0) e += m;
  std::vector<Rational> poly(std::max<std::size_t>(e + 1, euler_phi(m)), Rational(0));
  poly[e] = 1;
  reduce_mod_phi(poly, m);
  Cyclotomic z;
  z.m_ = m;
  z.c_ = std::move(poly);
  return z;
}

bool Cyclotomic::is_zero() const {
  for (const auto& q : c_)
    if (sgn(q) != 0) return false;
  return true;
}

bool Cyclotomic::is_rational() const {
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (sgn(c_[i]) != 0) return false;
  return true;
}

bool Cyclotomic::is_one() const { return is_rational() && c_[0] == 1; }

const Rational& Cyclotomic::rational() const {
  if (!is_rational()) throw InputError("cyclotomic element is not rational");
  return c_[0];
}

Cyclotomic Cyclotomic::lifted(unsigned M) const {
  if (M == m_) return *this;
  if (M == 0 || M % m_ != 0) {
    throw InputError("cannot lift conductor " + std::to_string(m_) + " to " + std::to_string(M));
  }
  const unsigned step = M / m_;
  std::vector<Rational> poly(std::max<std::size_t>((c_.size() - 1) * step + 1, euler_phi(M)),
                             Rational(0));
  for (std::size_t i = 0; i < c_.size(); ++i) poly[i * step] = c_[i];
  reduce_mod_phi(poly, M);
  Cyclotomic out;
  out.m_ = M;
  out.c_ = std::move(poly);
  return out;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
  if (o.m_ != m_) {
    const unsigned M = lcm_u(m_, o.m_);
    *this = lifted(M);
    return *this += o.lifted(M);
  }
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) {
  if (o.m_ != m_) {
    const unsigned M = lcm_u(m_, o.m_);
    *this = lifted(M);
    return *this -= o.lifted(M);
  }
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o) {
  if (o.m_ != m_) {
    const unsigned M = lcm_u(m_, o.m_);
    *this = lifted(M);
    return *this *= o.lifted(M);
  }
  if (m_ == 1) {
    c_[0] *= o.c_[0];
    return *this;
  }
  std::vector<Rational> prod(2 * c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (sgn(c_[i]) == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) {
      if (sgn(o.c_[j]) != 0) prod[i + j] += c_[i] * o.c_[j];
    }
  }
  reduce_mod_phi(prod, m_);
  c_ = std::move(prod);
  return *this;
}

Cyclotomic& Cyclotomic::operator/=(const Cyclotomic& o) { return *this *= o.inverse(); }

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic out = *this;
  for (auto& q : out.c_) q = -q;
  return out;
}

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) throw InputError("division by zero in cyclotomic field");
  if (m_ == 1) return Cyclotomic(Rational(1) / c_[0]);
  // Solve (x * this) = 1 for x: the columns of the multiplication matrix are this * zeta^j.
  const std::size_t d = c_.size();
  std::vector<std::vector<Rational>> a(d, std::vector<Rational>(d + 1, Rational(0)));
  for (std::size_t j = 0; j < d; ++j) {
    Cyclotomic col = *this * Cyclotomic::zeta(m_, static_cast<long>(j));
    for (std::size_t i = 0; i < d; ++i) a[i][j] = col.c_[i];
  }
  a[0][d] = 1;
  for (std::size_t col = 0; col < d; ++col) {
    std::size_t piv = col;
    while (piv < d && sgn(a[piv][col]) == 0) ++piv;
    if (piv == d) throw InternalError("singular multiplication matrix in cyclotomic inverse");
    std::swap(a[piv], a[col]);
    const Rational inv = Rational(1) / a[col][col];
    for (std::size_t k = col; k <= d; ++k) a[col][k] *= inv;
    for (std::size_t r = 0; r < d; ++r) {
      if (r == col || sgn(a[r][col]) == 0) continue;
      const Rational f = a[r][col];
      for (std::size_t k = col; k <= d; ++k) a[r][k] -= f * a[col][k];
    }
  }
  std::vector<Rational> x(d);
  for (std::size_t i = 0; i < d; ++i) x[i] = a[i][d];
  return Cyclotomic(m_, std::move(x));
}

Cyclotomic Cyclotomic::pow(long k) const {
  if (k < 0) return inverse().pow(-k);
  Cyclotomic result(Cyclotomic(1).lifted(m_));
  Cyclotomic base = *this;
  while (k > 0) {
    if (k & 1) result *= base;
    base *= base;
    k >>= 1;
  }
  return result;
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.m_ == b.m_) return a.c_ == b.c_;
  const unsigned M = std::lcm(a.m_, b.m_);
  return a.lifted(M).c_ == b.lifted(M).c_;
}

std::string Cyclotomic::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (sgn(c_[i]) == 0) continue;
    if (!first) os << " + ";
    first = false;
    os << c_[i].get_str();
    if (i > 0) os << "*z" << m_ << "^" << i;
  }
  if (first) os << "0";
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Cyclotomic& x) { return os << x.to_string(); }

}  // namespace weakdiv
