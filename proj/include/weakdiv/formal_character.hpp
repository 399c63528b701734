#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <vector>

namespace weakdiv {

/// Integer weight matrix, one weight per column (rows = torus coordinates).
using WeightMatrix = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;

/// Formal character of a torus acting on an n-dimensional space: the multiset
/// of its n weights, stored as the columns of a rank x n integer matrix.
class FormalCharacter {
 public:
  FormalCharacter() = default;
  explicit FormalCharacter(WeightMatrix weights) : w_(std::move(weights)) {}
  /// Each inner vector is one weight; all must have the same length.
  static FormalCharacter from_weights(const std::vector<std::vector<std::int64_t>>& weights,
                                      Eigen::Index torus_rank);

  Eigen::Index ambient_dim() const { return w_.cols(); }
  Eigen::Index torus_rank() const { return w_.rows(); }
  const WeightMatrix& weights() const { return w_; }
  std::vector<std::vector<std::int64_t>> weight_list() const;

 private:
  WeightMatrix w_;
};

unsigned zero_weight_multiplicity(const FormalCharacter& fc);

/// Row-style Hermite normal form: U*A for a unimodular U, echelon with
/// positive pivots and entries above each pivot reduced into [0, pivot).
WeightMatrix hermite_normal_form(WeightMatrix a);

/// Weights rewritten in the HNF basis of the lattice they generate; the
/// result has full row rank and its columns generate Z^rank.
WeightMatrix lattice_coordinates(const FormalCharacter& fc);

/// True iff some unimodular change of lattice basis maps one weight multiset
/// onto the other (the "same Z-form" relation). Throws InputError when the
/// ambient dimensions differ.
bool same_formal_character(const FormalCharacter& a, const FormalCharacter& b);

/// Formal character of a product group acting on the direct sum: the torus
/// coordinates are concatenated and each factor's weights are zero-padded.
FormalCharacter direct_sum(const FormalCharacter& a, const FormalCharacter& b);

}  // namespace weakdiv
