#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "weakdiv/polynomial.hpp"

namespace weakdiv {

/// Power sums p_1..p_kmax of the roots of a monic f, by Newton's identities.
template <class Scalar>
std::vector<Scalar> newton_power_sums(const Polynomial<Scalar>& f, std::size_t kmax) {
  if (!f.is_monic()) throw InputError("power sums need a monic polynomial");
  const std::size_t n = f.degree();
  // e_k = (-1)^k a_{n-k}
  std::vector<Scalar> e(n + 1, Scalar(0));
  for (std::size_t k = 0; k <= n; ++k) {
    e[k] = f.coeff(n - k);
    if (k % 2 == 1) e[k] = -e[k];
  }
  std::vector<Scalar> p(kmax + 1, Scalar(0));
  for (std::size_t k = 1; k <= kmax; ++k) {
    Scalar acc(0);
    for (std::size_t i = 1; i < k && i <= n; ++i) {
      Scalar term = e[i] * p[k - i];
      if (i % 2 == 1) acc += term; else acc -= term;
    }
    if (k <= n) {
      Scalar term = Scalar(static_cast<long>(k)) * e[k];
      if (k % 2 == 1) acc += term; else acc -= term;
    }
    p[k] = std::move(acc);
  }
  p.erase(p.begin());
  return p;
}

/// Monic degree-n polynomial whose roots have power sums p[0..n-1] = p_1..p_n.
template <class Scalar>
Polynomial<Scalar> charpoly_from_power_sums(const std::vector<Scalar>& p, std::size_t n) {
  if (p.size() < n) throw InputError("need at least n power sums to rebuild a degree-n polynomial");
  std::vector<Scalar> e(n + 1, Scalar(0));
  e[0] = Scalar(1);
  for (std::size_t k = 1; k <= n; ++k) {
    Scalar acc(0);
    for (std::size_t i = 1; i <= k; ++i) {
      Scalar term = e[k - i] * p[i - 1];
      if (i % 2 == 1) acc += term; else acc -= term;
    }
    e[k] = acc / Scalar(static_cast<long>(k));
  }
  std::vector<Scalar> coeffs(n + 1, Scalar(0));
  for (std::size_t k = 0; k <= n; ++k) coeffs[n - k] = (k % 2 == 1) ? -e[k] : e[k];
  return Polynomial<Scalar>(std::move(coeffs));
}

enum class Transform { exterior2, sym2, tensor, twist, dsum, dual_twist_by_det, det };

inline constexpr std::pair<Transform, std::string_view> kTransformNames[] = {
    {Transform::exterior2, "exterior2"}, {Transform::sym2, "sym2"},
    {Transform::tensor, "tensor"},       {Transform::twist, "twist"},
    {Transform::dsum, "dsum"},           {Transform::dual_twist_by_det, "dual_twist_by_det"},
    {Transform::det, "det"},
};

inline Transform parse_transform(std::string_view name) {
  if (name == "alt2") return Transform::exterior2;
  for (const auto& [t, n] : kTransformNames)
    if (n == name) return t;
  throw InputError("unknown transform '" + std::string(name) + "'");
}

inline std::string_view transform_name(Transform t) {
  for (const auto& [tt, n] : kTransformNames)
    if (tt == t) return n;
  return "?";
}

template <class Scalar>
void require_monic(const Polynomial<Scalar>& f, const char* what) {
  if (!f.is_monic()) throw InputError(std::string(what) + ": input polynomial is not monic");
}

/// Lambda^2: p_k = (p_k^2 - p_{2k}) / 2
template <class Scalar>
Polynomial<Scalar> exterior2(const Polynomial<Scalar>& f) {
  require_monic(f, "exterior2");
  const std::size_t n = f.degree();
  const std::size_t N = n == 0 ? 0 : n * (n - 1) / 2;
  const auto p = newton_power_sums(f, 2 * N);
  std::vector<Scalar> q(N, Scalar(0));
  for (std::size_t k = 1; k <= N; ++k) q[k - 1] = (p[k - 1] * p[k - 1] - p[2 * k - 1]) / Scalar(2);
  return charpoly_from_power_sums(q, N);
}

/// Sym^2: p_k = (p_k^2 + p_{2k}) / 2
template <class Scalar>
Polynomial<Scalar> sym2(const Polynomial<Scalar>& f) {
  require_monic(f, "sym2");
  const std::size_t n = f.degree();
  const std::size_t N = n * (n + 1) / 2;
  const auto p = newton_power_sums(f, 2 * N);
  std::vector<Scalar> q(N, Scalar(0));
  for (std::size_t k = 1; k <= N; ++k) q[k - 1] = (p[k - 1] * p[k - 1] + p[2 * k - 1]) / Scalar(2);
  return charpoly_from_power_sums(q, N);
}

/// f (x) g: p_k = p_k(f) p_k(g)
template <class Scalar>
Polynomial<Scalar> tensor(const Polynomial<Scalar>& f, const Polynomial<Scalar>& g) {
  require_monic(f, "tensor");
  require_monic(g, "tensor");
  const std::size_t N = static_cast<std::size_t>(f.degree()) * g.degree();
  const auto pf = newton_power_sums(f, N);
  const auto pg = newton_power_sums(g, N);
  std::vector<Scalar> q(N, Scalar(0));
  for (std::size_t k = 0; k < N; ++k) q[k] = pf[k] * pg[k];
  return charpoly_from_power_sums(q, N);
}

/// Roots scaled alpha -> c*alpha, i.e. p_k -> c^k p_k. Done on coefficients directly.
template <class Scalar>
Polynomial<Scalar> twist(const Polynomial<Scalar>& f, const Scalar& c) {
  require_monic(f, "twist");
  if (is_zero(c)) throw InputError("twist by zero");
  const std::size_t n = f.degree();
  std::vector<Scalar> coeffs(n + 1, Scalar(0));
  Scalar ck(1);
  for (std::size_t k = 0; k <= n; ++k) {
    coeffs[n - k] = f.coeff(n - k) * ck;
    ck *= c;
  }
  return Polynomial<Scalar>(std::move(coeffs));
}

template <class Scalar>
Polynomial<Scalar> dsum(const Polynomial<Scalar>& f, const Polynomial<Scalar>& g) {
  require_monic(f, "dsum");
  require_monic(g, "dsum");
  return f * g;
}

/// T^3 - c1 T^2 + c2 T - c3  ->  T^3 - c2 T^2 + c1 c3 T - c3^2, which is Lambda^2 in rank 3.
template <class Scalar>
Polynomial<Scalar> dual_twist_by_det(const Polynomial<Scalar>& f) {
  require_monic(f, "dual_twist_by_det");
  if (f.degree() != 3) throw InputError("dual_twist_by_det needs a degree-3 polynomial");
  const Scalar c1 = -f.coeff(2);
  const Scalar c2 = f.coeff(1);
  const Scalar c3 = -f.coeff(0);
  return Polynomial<Scalar>({-(c3 * c3), c1 * c3, -c2, Scalar(1)});
}

/// T - det, where det is the product of the roots.
template <class Scalar>
Polynomial<Scalar> det_charpoly(const Polynomial<Scalar>& f) {
  require_monic(f, "det");
  Scalar d = f.coeff(0);
  if (f.degree() % 2 == 1) d = -d;
  return Polynomial<Scalar>::linear(d);
}

}  // namespace weakdiv
