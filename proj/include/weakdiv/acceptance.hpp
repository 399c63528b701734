#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "weakdiv/frobenius.hpp"
#include "weakdiv/wab.hpp"

namespace weakdiv {

/// Random monic polynomial of the given degree with small rational
/// coefficients over Q(zeta_conductor).
Poly random_monic(std::mt19937_64& rng, int degree, unsigned conductor);

/// Degree-1 stream T - 1 on the primes of `like`.
FrobStream trivial_stream_like(const FrobStream& like);

/// The 20 decomposition specs exercised by the solver criterion.
std::vector<DecompositionSpec> wab_fixture_suite();

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
  double limit_seconds = 0.0;
};

struct AcceptanceOptions {
  unsigned threads = 1;
  std::uint64_t seed = 42;
};

CriterionResult criterion_klein_four(const AcceptanceOptions& o);
CriterionResult criterion_sylvester(const AcceptanceOptions& o);
CriterionResult criterion_ec_sym2_scan(const AcceptanceOptions& o);
CriterionResult criterion_alt2_identity(const AcceptanceOptions& o);
CriterionResult criterion_haar_center(const AcceptanceOptions& o);
CriterionResult criterion_haar_so3(const AcceptanceOptions& o);
CriterionResult criterion_steinberg(const AcceptanceOptions& o);
CriterionResult criterion_wab_solver(const AcceptanceOptions& o);
CriterionResult criterion_exact_properties(const AcceptanceOptions& o);

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& o = {});

/// "[PASS] 1 name (0.01 s < 1 s): detail"
std::string format_result(const CriterionResult& r);

}  // namespace weakdiv
