#pragma once

#include <Eigen/Core>

#include "weakdiv/polynomial.hpp"

namespace Eigen {

template <class T>
struct ExactNumTraits : GenericNumTraits<T> {
  using Real = T;
  using NonInteger = T;
  using Nested = T;
  using Literal = T;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 10,
    AddCost = 20,
    MulCost = 40
  };
};

template <>
struct NumTraits<weakdiv::Cyclotomic> : ExactNumTraits<weakdiv::Cyclotomic> {};
template <>
struct NumTraits<weakdiv::Rational> : ExactNumTraits<weakdiv::Rational> {};

}  // namespace Eigen

namespace weakdiv {

template <class Scalar>
using ExactMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

/// (n+m) x (n+m) Sylvester matrix of f (degree n) and g (degree m).
template <class Scalar>
ExactMatrix<Scalar> sylvester_matrix(const Polynomial<Scalar>& f, const Polynomial<Scalar>& g) {
  if (f.is_zero() || g.is_zero()) throw InputError("Sylvester matrix of a zero polynomial");
  const Eigen::Index n = f.degree();
  const Eigen::Index m = g.degree();
  ExactMatrix<Scalar> s(n + m, n + m);
  s.fill(Scalar(0));
  for (Eigen::Index row = 0; row < m; ++row)
    for (Eigen::Index k = 0; k <= n; ++k) s(row, row + k) = f.coeff(n - k);
  for (Eigen::Index row = 0; row < n; ++row)
    for (Eigen::Index k = 0; k <= m; ++k) s(m + row, row + k) = g.coeff(m - k);
  return s;
}

/// Rank by exact Gaussian elimination.
template <class Scalar>
Eigen::Index exact_rank(ExactMatrix<Scalar> a) {
  const Eigen::Index rows = a.rows();
  const Eigen::Index cols = a.cols();
  Eigen::Index rank = 0;
  for (Eigen::Index col = 0; col < cols && rank < rows; ++col) {
    Eigen::Index piv = rank;
    while (piv < rows && is_zero(a(piv, col))) ++piv;
    if (piv == rows) continue;
    if (piv != rank) a.row(piv).swap(a.row(rank));
    const Scalar inv = Scalar(1) / a(rank, col);
    for (Eigen::Index r = rank + 1; r < rows; ++r) {
      if (is_zero(a(r, col))) continue;
      const Scalar factor = a(r, col) * inv;
      for (Eigen::Index c = col; c < cols; ++c) a(r, c) -= factor * a(rank, c);
    }
    ++rank;
  }
  return rank;
}

template <class Scalar>
int sylvester_rank(const Polynomial<Scalar>& f, const Polynomial<Scalar>& g) {
  return static_cast<int>(exact_rank(sylvester_matrix(f, g)));
}

}  // namespace weakdiv
