#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "weakdiv/cyclotomic.hpp"
#include "weakdiv/errors.hpp"

namespace weakdiv {

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

/// Dense univariate polynomial over an exact field, lowest degree first.
///
/// The zero polynomial is a distinct value: it holds a single zero
/// coefficient, reports is_zero() and degree() == -1. Every other value has
/// a nonzero leading coefficient.
template <class Scalar>
class Polynomial {
 public:
  Polynomial() : c_{Scalar(0)} {}
  explicit Polynomial(std::vector<Scalar> coeffs) : c_(std::move(coeffs)) {
    if (c_.empty()) c_.push_back(Scalar(0));
    trim();
  }
  Polynomial(std::initializer_list<Scalar> coeffs) : Polynomial(std::vector<Scalar>(coeffs)) {}

  static Polynomial zero() { return Polynomial(); }
  static Polynomial constant(const Scalar& c) { return Polynomial(std::vector<Scalar>{c}); }
  static Polynomial monomial(const Scalar& c, std::size_t k) {
    std::vector<Scalar> v(k + 1, Scalar(0));
    v[k] = c;
    return Polynomial(std::move(v));
  }
  /// T - root
  static Polynomial linear(const Scalar& root) { return Polynomial({-root, Scalar(1)}); }
  /// prod (T - r) over the given roots
  static Polynomial from_roots(std::span<const Scalar> roots) {
    Polynomial out = constant(Scalar(1));
    for (const auto& r : roots) out *= linear(r);
    return out;
  }

  bool is_zero() const { return c_.size() == 1 && weakdiv::is_zero(c_[0]); }
  int degree() const { return is_zero() ? -1 : static_cast<int>(c_.size()) - 1; }
  const std::vector<Scalar>& coeffs() const { return c_; }
  Scalar coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Scalar(0); }
  const Scalar& leading() const { return c_.back(); }
  bool is_monic() const { return !is_zero() && c_.back() == Scalar(1); }

  Scalar operator()(const Scalar& x) const {
    Scalar acc = c_.back();
    for (std::size_t i = c_.size() - 1; i-- > 0;) acc = acc * x + c_[i];
    return acc;
  }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Scalar(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Scalar(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  Polynomial& operator*=(const Polynomial& o) {
    if (is_zero() || o.is_zero()) return *this = zero();
    std::vector<Scalar> prod(c_.size() + o.c_.size() - 1, Scalar(0));
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (weakdiv::is_zero(c_[i])) continue;
      for (std::size_t j = 0; j < o.c_.size(); ++j) prod[i + j] += c_[i] * o.c_[j];
    }
    c_ = std::move(prod);
    trim();
    return *this;
  }
  Polynomial& operator*=(const Scalar& s) {
    for (auto& x : c_) x *= s;
    trim();
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
  friend Polynomial operator*(Polynomial a, const Scalar& s) { return a *= s; }
  friend Polynomial operator*(const Scalar& s, Polynomial a) { return a *= s; }
  Polynomial operator-() const {
    Polynomial out = *this;
    for (auto& x : out.c_) x = -x;
    return out;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    if (a.c_.size() != b.c_.size()) return false;
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      if (a.c_[i] != b.c_[i]) return false;
    return true;
  }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

 private:
  void trim() {
    while (c_.size() > 1 && weakdiv::is_zero(c_.back())) c_.pop_back();
  }

  std::vector<Scalar> c_;
};

using Poly = Polynomial<Cyclotomic>;

template <class Scalar>
Polynomial<Scalar> make_monic(const Polynomial<Scalar>& f) {
  if (f.is_zero()) throw InputError("cannot normalize the zero polynomial");
  return f * (Scalar(1) / f.leading());
}

/// f = q*g + r with deg r < deg g.
template <class Scalar>
std::pair<Polynomial<Scalar>, Polynomial<Scalar>> poly_divrem(const Polynomial<Scalar>& f,
                                                              const Polynomial<Scalar>& g) {
  if (g.is_zero()) throw InputError("polynomial division by zero");
  const int dg = g.degree();
  if (f.degree() < dg) return {Polynomial<Scalar>::zero(), f};
  std::vector<Scalar> rem = f.coeffs();
  std::vector<Scalar> quot(rem.size() - dg, Scalar(0));
  const bool monic = g.leading() == Scalar(1);
  const Scalar inv_lead = monic ? Scalar(1) : Scalar(1) / g.leading();
  const auto& gc = g.coeffs();
  for (std::size_t i = rem.size(); i-- > static_cast<std::size_t>(dg);) {
    if (is_zero(rem[i])) continue;
    const Scalar c = monic ? rem[i] : rem[i] * inv_lead;
    quot[i - dg] = c;
    for (int j = 0; j <= dg; ++j) rem[i - dg + j] -= c * gc[j];
  }
  rem.resize(dg > 0 ? dg : 1);
  return {Polynomial<Scalar>(std::move(quot)), Polynomial<Scalar>(std::move(rem))};
}

/// Monic gcd by the Euclidean algorithm over the coefficient field.
template <class Scalar>
Polynomial<Scalar> poly_gcd(Polynomial<Scalar> f, Polynomial<Scalar> g) {
  if (f.is_zero() && g.is_zero()) throw InputError("gcd of two zero polynomials");
  while (!g.is_zero()) {
    auto r = poly_divrem(f, g).second;
    f = std::move(g);
    g = r.is_zero() ? std::move(r) : make_monic(r);
  }
  return make_monic(f);
}

/// g | f
template <class Scalar>
bool divides(const Polynomial<Scalar>& g, const Polynomial<Scalar>& f) {
  return poly_divrem(f, g).second.is_zero();
}

}  // namespace weakdiv
