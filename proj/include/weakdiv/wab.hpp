#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "weakdiv/serialize.hpp"

namespace weakdiv {

/// One absolutely irreducible summand rho_j. xi is the label of the
/// character nu_{G_j}; present exactly when n0 > 0.
struct Piece {
  std::string id;
  unsigned n0 = 0;
  std::optional<std::string> xi;
};

struct DecompositionSpec {
  std::vector<Piece> pieces;
  /// Asserts that distinct xi labels have infinite-order ratios.
  bool infinite_order_guarantee = false;
};

/// Weak abelian part: for each xi class, the capacity sum n_{j,0}.
struct WabResult {
  std::map<std::string, unsigned> classes;
  unsigned total_degree = 0;
};

/// One character psi_i of a candidate psi = sum psi_i^{+e_i}. An empty xi means
/// the character matches no xi label (OTHER).
struct CandidateCharacter {
  std::string name;
  std::optional<std::string> xi;
  unsigned multiplicity = 1;
};

struct CandidateVerdict {
  bool weakly_divides = false;
  char condition = 0;       // 'a' or 'b' when rejected
  std::size_t index = 0;    // offending candidate character
  std::string detail;
};

void validate(const DecompositionSpec& spec);

WabResult solve_wab(const DecompositionSpec& spec);

CandidateVerdict check_candidate(const DecompositionSpec& spec,
                                 std::span<const CandidateCharacter> psi);

/// The weak abelian part as a candidate (one character per class).
std::vector<CandidateCharacter> wab_candidate(const WabResult& wab);

/// Pieces may give "n0" directly or a catalog "label" from which n0 is read.
DecompositionSpec decomposition_from_json(const Json& j);
Json to_json(const DecompositionSpec& spec);
Json to_json(const WabResult& r);
std::vector<CandidateCharacter> candidate_from_json(const Json& j);
Json to_json(const CandidateVerdict& v);

}  // namespace weakdiv
