#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "weakdiv/serialize.hpp"

namespace weakdiv {

/// Compact groups we can sample from Haar measure. SO3 and SU2_sym2 are the
/// same image (rotation matrices) under two names; muN_ext multiplies an inner
/// sample by a uniform N-th root of unity.
enum class BaseGroup { SU2, SO3, SU3, SU2_sym2 };

struct HaarGroup {
  BaseGroup base = BaseGroup::SU2;
  unsigned scalar_order = 1;

  unsigned dim() const { return base == BaseGroup::SU2 ? 2 : 3; }
  std::string label() const;
  /// Label of the matching monodromy descriptor in the catalog.
  std::string catalog_label() const;
  /// Zero-weight multiplicity of the inner group.
  unsigned inner_n0() const;
};

/// Accepts SU2, SO3, SU3, SU2_sym2, muN_ext(N, inner) and the short CLI form
/// muN:N:inner (inner names case-insensitive, e.g. muN:3:su2sym2).
HaarGroup parse_haar_group(std::string_view text);

struct HaarSample {
  Eigen::MatrixXcd matrix;
  unsigned zeta_index = 0;  // the scalar factor is exp(2 pi i zeta_index / N)
};

/// Per-sample seed: SplitMix64 finalizer over (seed, index). Makes every
/// sample independent of how the index range is sharded.
std::uint64_t sample_seed(std::uint64_t seed, std::uint64_t index);

HaarSample haar_sample(const HaarGroup& g, std::uint64_t seed, std::uint64_t index = 0);

double unitarity_residual(const Eigen::MatrixXcd& m);

struct HaarEstimate {
  std::string group_label;
  std::size_t n_samples = 0;
  double tolerance = 0.0;
  std::size_t hits = 0;
  double rate = 0.0;
  std::optional<Rational> predicted;
  std::optional<double> z_score;  // empty when predicted is 0 or 1
  bool consistent = true;

  // Diagnostics.
  std::size_t structural_hits = 0;      // eigenvalue-one runs only
  std::size_t structural_agreement = 0; // samples where float and structural verdicts agree
  double max_unitarity_residual = 0.0;
  double max_abs_det_minus_identity = 0.0;
};

/// Degenerate predictions (0 or 1) are judged by an absolute count of contrary
/// samples, at most max(10, ceil(1e-4 n)).
std::size_t degenerate_count_threshold(std::size_t n);
void judge(HaarEstimate& est);

/// Fraction of samples with at least m eigenvalues within tol of 1.
HaarEstimate eigenvalue_one_rate(const HaarGroup& g, std::size_t n_samples, double tol,
                                 unsigned multiplicity, std::uint64_t seed, unsigned threads = 1);

/// Fraction of samples whose eigenvalues are pairwise at least gap_tol apart.
HaarEstimate regular_semisimple_rate(const HaarGroup& g, std::size_t n_samples, double gap_tol,
                                     std::uint64_t seed, unsigned threads = 1);

/// eigenvalue_one_rate on SU3 (n0 = 0) for each tolerance of a strictly
/// decreasing list.
std::vector<HaarEstimate> su3_eigenvalue_one_decay(std::size_t n_samples,
                                                   const std::vector<double>& tols,
                                                   std::uint64_t seed, unsigned threads = 1);

Json to_json(const HaarEstimate& e);

}  // namespace weakdiv
