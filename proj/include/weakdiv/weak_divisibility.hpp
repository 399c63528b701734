#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "weakdiv/frobenius.hpp"

namespace weakdiv {

/// det(T - psi(Frob_p)) | det(T - rho(Frob_p)). The remainder verdict is
/// cross-checked against deg gcd = deg psi; a disagreement is an InternalError.
bool divides_at_prime(const CharPolyRecord& psi, const CharPolyRecord& rho);

enum class Verdict { consistent, inconsistent, no_prediction };
std::string_view verdict_name(Verdict v);

/// Empirical density of S_{psi|rho} over a finite range of primes.
struct DensityReport {
  std::size_t total = 0;
  std::size_t hits = 0;
  Rational natural;       // hits / total
  Rational log_weighted;  // sum_{p in S} 1/p / sum_p 1/p
  std::optional<Rational> predicted;
  double tolerance = 0.0;  // only meaningful with a prediction
  Verdict verdict = Verdict::no_prediction;
  std::vector<Prime> hit_primes;
};

struct ScanOptions {
  std::optional<Prime> pmax;
  std::optional<Rational> predicted;
  /// Overrides the default max(0.02, 3 sigma).
  std::optional<double> tolerance;
  unsigned threads = 1;
};

/// max(0.02, 3 * sqrt(p (1 - p) / n))
double default_tolerance(const Rational& predicted, std::size_t n);

DensityReport weakdiv_scan(const FrobStream& psi, const FrobStream& rho, const ScanOptions& opts = {});

/// Proportion of group elements where the psi-charpoly divides the rho-charpoly.
Rational exact_finite_density(const FiniteRepTable& table);

/// {"schema","total","hits","natural","log_weighted","predicted","verdict"}
Json to_json(const DensityReport& r);

}  // namespace weakdiv
