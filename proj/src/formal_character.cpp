#include "weakdiv/formal_character.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

#include "weakdiv/cyclotomic.hpp"
#include "weakdiv/errors.hpp"

namespace weakdiv {

namespace {

using Column = std::vector<std::int64_t>;

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

Column column(const WeightMatrix& m, Eigen::Index j) {
  Column c(m.rows());
  for (Eigen::Index i = 0; i < m.rows(); ++i) c[i] = m(i, j);
  return c;
}

std::map<Column, int> column_counts(const WeightMatrix& m) {
  std::map<Column, int> counts;
  for (Eigen::Index j = 0; j < m.cols(); ++j) ++counts[column(m, j)];
  return counts;
}

// Greedy choice of linearly independent columns, exact over Q.
std::vector<Eigen::Index> independent_columns(const WeightMatrix& x) {
  const Eigen::Index r = x.rows();
  std::vector<std::vector<Rational>> basis;  // echelon rows, with pivot index
  std::vector<Eigen::Index> pivots;
  std::vector<Eigen::Index> chosen;
  for (Eigen::Index j = 0; j < x.cols() && static_cast<Eigen::Index>(chosen.size()) < r; ++j) {
    std::vector<Rational> v(r);
    for (Eigen::Index i = 0; i < r; ++i) v[i] = Rational(static_cast<long>(x(i, j)));
    for (std::size_t b = 0; b < basis.size(); ++b) {
      if (sgn(v[pivots[b]]) == 0) continue;
      const Rational f = v[pivots[b]] / basis[b][pivots[b]];
      for (Eigen::Index i = 0; i < r; ++i) v[i] -= f * basis[b][i];
    }
    auto it = std::find_if(v.begin(), v.end(), [](const Rational& q) { return sgn(q) != 0; });
    if (it == v.end()) continue;
    pivots.push_back(it - v.begin());
    basis.push_back(std::move(v));
    chosen.push_back(j);
  }
  return chosen;
}

// Solve A * lambda = b over Q for square invertible A.
std::vector<Rational> solve_rational(std::vector<std::vector<Rational>> a, std::vector<Rational> b) {
  const std::size_t n = b.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (sgn(a[piv][col]) == 0) ++piv;
    std::swap(a[piv], a[col]);
    std::swap(b[piv], b[col]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || sgn(a[r][col]) == 0) continue;
      const Rational f = a[r][col] / a[col][col];
      for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
      b[r] -= f * b[col];
    }
  }
  for (std::size_t i = 0; i < n; ++i) b[i] /= a[i][i];
  return b;
}

}  // namespace

FormalCharacter FormalCharacter::from_weights(const std::vector<std::vector<std::int64_t>>& weights,
                                              Eigen::Index torus_rank) {
  WeightMatrix w(torus_rank, static_cast<Eigen::Index>(weights.size()));
  for (std::size_t j = 0; j < weights.size(); ++j) {
    if (static_cast<Eigen::Index>(weights[j].size()) != torus_rank) {
      throw InputError("weight " + std::to_string(j) + " has length " +
                       std::to_string(weights[j].size()) + ", expected torus rank " +
                       std::to_string(torus_rank));
    }
    for (Eigen::Index i = 0; i < torus_rank; ++i) w(i, j) = weights[j][i];
  }
  return FormalCharacter(std::move(w));
}

std::vector<std::vector<std::int64_t>> FormalCharacter::weight_list() const {
  std::vector<std::vector<std::int64_t>> out;
  for (Eigen::Index j = 0; j < w_.cols(); ++j) out.push_back(column(w_, j));
  return out;
}

unsigned zero_weight_multiplicity(const FormalCharacter& fc) {
  const auto& w = fc.weights();
  unsigned count = 0;
  for (Eigen::Index j = 0; j < w.cols(); ++j)
    if (w.col(j).isZero()) ++count;
  return count;
}

WeightMatrix hermite_normal_form(WeightMatrix a) {
  const Eigen::Index rows = a.rows();
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < a.cols() && row < rows; ++col) {
    bool found = false;
    for (;;) {
      Eigen::Index best = -1;
      for (Eigen::Index r = row; r < rows; ++r) {
        if (a(r, col) != 0 && (best < 0 || std::abs(a(r, col)) < std::abs(a(best, col)))) best = r;
      }
      if (best < 0) break;
      found = true;
      if (best != row) a.row(best).swap(a.row(row));
      bool clean = true;
      for (Eigen::Index r = row + 1; r < rows; ++r) {
        if (a(r, col) == 0) continue;
        const std::int64_t q = a(r, col) / a(row, col);
        a.row(r) -= q * a.row(row);
        if (a(r, col) != 0) clean = false;
      }
      if (clean) break;
    }
    if (!found) continue;
    if (a(row, col) < 0) a.row(row) *= -1;
    for (Eigen::Index r = 0; r < row; ++r) {
      const std::int64_t q = floor_div(a(r, col), a(row, col));
      if (q != 0) a.row(r) -= q * a.row(row);
    }
    ++row;
  }
  return a;
}

WeightMatrix lattice_coordinates(const FormalCharacter& fc) {
  const WeightMatrix& w = fc.weights();
  const WeightMatrix h = hermite_normal_form(w.transpose());
  std::vector<Eigen::Index> basis_rows;
  std::vector<Eigen::Index> pivot_cols;
  for (Eigen::Index i = 0; i < h.rows(); ++i) {
    Eigen::Index p = 0;
    while (p < h.cols() && h(i, p) == 0) ++p;
    if (p == h.cols()) break;
    basis_rows.push_back(i);
    pivot_cols.push_back(p);
  }
  const auto r = static_cast<Eigen::Index>(basis_rows.size());
  WeightMatrix coords(r, w.cols());
  for (Eigen::Index j = 0; j < w.cols(); ++j) {
    for (Eigen::Index i = 0; i < r; ++i) {
      std::int64_t rest = w(pivot_cols[i], j);
      for (Eigen::Index k = 0; k < i; ++k) rest -= coords(k, j) * h(basis_rows[k], pivot_cols[i]);
      const std::int64_t piv = h(basis_rows[i], pivot_cols[i]);
      if (rest % piv != 0) throw InternalError("weight not in the lattice it generates");
      coords(i, j) = rest / piv;
    }
  }
  return coords;
}

bool same_formal_character(const FormalCharacter& a, const FormalCharacter& b) {
  if (a.ambient_dim() != b.ambient_dim()) {
    throw InputError("formal characters have different ambient dimensions (" +
                     std::to_string(a.ambient_dim()) + " vs " + std::to_string(b.ambient_dim()) +
                     ")");
  }
  if (zero_weight_multiplicity(a) != zero_weight_multiplicity(b)) return false;
  const WeightMatrix x = lattice_coordinates(a);
  const WeightMatrix y = lattice_coordinates(b);
  if (x.rows() != y.rows()) return false;
  const Eigen::Index r = x.rows();
  if (r == 0) return true;

  // Multiplicity patterns must agree.
  const auto ycounts = column_counts(y);
  {
    std::vector<int> px, py;
    for (const auto& [_, c] : column_counts(x)) px.push_back(c);
    for (const auto& [_, c] : ycounts) py.push_back(c);
    std::sort(px.begin(), px.end());
    std::sort(py.begin(), py.end());
    if (px != py) return false;
  }

  // U is fixed by the images of r independent columns S of x. Write every
  // column as D*x_j = X_S * mu_j with integer mu_j; then U x_j = Y_T mu_j / D.
  const auto s = independent_columns(x);
  std::vector<std::vector<Rational>> xs(r, std::vector<Rational>(r));
  for (Eigen::Index i = 0; i < r; ++i)
    for (Eigen::Index k = 0; k < r; ++k) xs[i][k] = Rational(static_cast<long>(x(i, s[k])));
  std::vector<std::vector<Rational>> lambda(x.cols());
  Integer denom = 1;
  for (Eigen::Index j = 0; j < x.cols(); ++j) {
    std::vector<Rational> rhs(r);
    for (Eigen::Index i = 0; i < r; ++i) rhs[i] = Rational(static_cast<long>(x(i, j)));
    lambda[j] = solve_rational(xs, rhs);
    for (const auto& q : lambda[j]) mpz_lcm(denom.get_mpz_t(), denom.get_mpz_t(), q.get_den().get_mpz_t());
  }
  if (!denom.fits_slong_p()) return false;
  const std::int64_t d = denom.get_si();
  std::vector<Column> mu(x.cols(), Column(r));
  std::vector<Eigen::Index> last_support(x.cols(), 0);  // column j is decided once T[0..k] is set
  for (Eigen::Index j = 0; j < x.cols(); ++j) {
    for (Eigen::Index k = 0; k < r; ++k) {
      Rational v = lambda[j][k] * Rational(denom);
      mu[j][k] = v.get_num().get_si();
      if (mu[j][k] != 0) last_support[j] = k;
    }
  }
  std::vector<std::vector<Eigen::Index>> decided_at(r);
  for (Eigen::Index j = 0; j < x.cols(); ++j) decided_at[last_support[j]].push_back(j);

  std::vector<Column> targets;
  for (const auto& [col, _] : ycounts) targets.push_back(col);
  std::vector<const Column*> t(r, nullptr);

  std::function<bool(Eigen::Index, std::map<Column, int>&)> search =
      [&](Eigen::Index k, std::map<Column, int>& remaining) -> bool {
    if (k == r) return true;
    for (const auto& cand : targets) {
      t[k] = &cand;
      std::map<Column, int> rem = remaining;
      bool ok = true;
      for (Eigen::Index j : decided_at[k]) {
        Column img(r, 0);
        for (Eigen::Index kk = 0; kk <= k && ok; ++kk) {
          if (mu[j][kk] == 0) continue;
          for (Eigen::Index i = 0; i < r; ++i) img[i] += (*t[kk])[i] * mu[j][kk];
        }
        for (auto& v : img) {
          if (v % d != 0) { ok = false; break; }
          v /= d;
        }
        if (!ok) break;
        auto it = rem.find(img);
        if (it == rem.end() || it->second == 0) { ok = false; break; }
        --it->second;
      }
      if (ok && search(k + 1, rem)) return true;
    }
    return false;
  };
  std::map<Column, int> remaining = ycounts;
  return search(0, remaining);
}

FormalCharacter direct_sum(const FormalCharacter& a, const FormalCharacter& b) {
  const WeightMatrix& wa = a.weights();
  const WeightMatrix& wb = b.weights();
  WeightMatrix w = WeightMatrix::Zero(wa.rows() + wb.rows(), wa.cols() + wb.cols());
  w.topLeftCorner(wa.rows(), wa.cols()) = wa;
  w.bottomRightCorner(wb.rows(), wb.cols()) = wb;
  return FormalCharacter(std::move(w));
}

}  // namespace weakdiv
