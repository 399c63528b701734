#include "weakdiv/wab.hpp"

#include <set>

#include "weakdiv/catalog.hpp"
#include "weakdiv/errors.hpp"

namespace weakdiv {

void validate(const DecompositionSpec& spec) {
  std::set<std::string> ids;
  for (const auto& p : spec.pieces) {
    if (!ids.insert(p.id).second) throw InputError("duplicate piece id '" + p.id + "'");
    if ((p.n0 > 0) != p.xi.has_value()) {
      throw InputError("piece '" + p.id + "': xi label must be present exactly when n0 > 0");
    }
  }
}

namespace {

void require_hypothesis(const DecompositionSpec& spec) {
  validate(spec);
  if (!spec.infinite_order_guarantee) {
    throw UnsupportedError(
        "the weak abelian part is only determined when distinct xi characters have "
        "infinite-order ratios; infinite_order_guarantee is false");
  }
}

}  // namespace

WabResult solve_wab(const DecompositionSpec& spec) {
  require_hypothesis(spec);
  WabResult r;
  for (const auto& p : spec.pieces) {
    if (p.n0 == 0) continue;
    r.classes[*p.xi] += p.n0;
    r.total_degree += p.n0;
  }
  return r;
}

CandidateVerdict check_candidate(const DecompositionSpec& spec,
                                 std::span<const CandidateCharacter> psi) {
  const WabResult wab = solve_wab(spec);
  std::set<std::string> seen;
  for (const auto& c : psi) {
    if (c.multiplicity == 0) throw InputError("candidate character '" + c.name + "' has multiplicity 0");
    if (c.xi && !seen.insert(*c.xi).second) {
      throw InputError("candidate characters must be pairwise distinct; two map to xi '" + *c.xi + "'");
    }
  }
  CandidateVerdict v;
  for (std::size_t i = 0; i < psi.size(); ++i) {
    const auto it = psi[i].xi ? wab.classes.find(*psi[i].xi) : wab.classes.end();
    if (it == wab.classes.end()) {
      v.condition = 'a';
      v.index = i;
      v.detail = "character '" + psi[i].name + "' equals no xi character of rho";
      return v;
    }
    if (psi[i].multiplicity > it->second) {
      v.condition = 'b';
      v.index = i;
      v.detail = "character '" + psi[i].name + "' has multiplicity " +
                 std::to_string(psi[i].multiplicity) + " > capacity " + std::to_string(it->second) +
                 " of class '" + it->first + "'";
      return v;
    }
  }
  v.weakly_divides = true;
  return v;
}

std::vector<CandidateCharacter> wab_candidate(const WabResult& wab) {
  std::vector<CandidateCharacter> out;
  for (const auto& [xi, cap] : wab.classes) out.push_back({xi, xi, cap});
  return out;
}

DecompositionSpec decomposition_from_json(const Json& j) {
  if (!j.contains("pieces") || !j["pieces"].is_array()) throw InputError("field \"pieces\" must be an array");
  DecompositionSpec spec;
  spec.infinite_order_guarantee = j.value("infinite_order_guarantee", false);
  for (const auto& pj : j["pieces"]) {
    Piece p;
    if (!pj.contains("id")) throw InputError("piece is missing field \"id\"");
    p.id = pj["id"].is_string() ? pj["id"].get<std::string>() : pj["id"].dump();
    if (pj.contains("n0")) {
      if (!pj["n0"].is_number_unsigned()) throw InputError("piece '" + p.id + "': field \"n0\" must be a natural number");
      p.n0 = pj["n0"].get<unsigned>();
    } else if (pj.contains("label")) {
      p.n0 = catalog_lookup(pj["label"].get<std::string>()).n0;
    } else {
      throw InputError("piece '" + p.id + "' needs field \"n0\" or \"label\"");
    }
    if (pj.contains("xi") && !pj["xi"].is_null()) p.xi = pj["xi"].get<std::string>();
    spec.pieces.push_back(std::move(p));
  }
  validate(spec);
  return spec;
}

Json to_json(const DecompositionSpec& spec) {
  Json pieces = Json::array();
  for (const auto& p : spec.pieces) {
    pieces.push_back(Json{{"id", p.id}, {"n0", p.n0}, {"xi", p.xi ? Json(*p.xi) : Json(nullptr)}});
  }
  return Json{{"pieces", std::move(pieces)}, {"infinite_order_guarantee", spec.infinite_order_guarantee}};
}

Json to_json(const WabResult& r) {
  Json classes = Json::object();
  Json wab = Json::array();
  for (const auto& [xi, cap] : r.classes) {
    classes[xi] = cap;
    wab.push_back(Json{{"xi", xi}, {"multiplicity", cap}});
  }
  return Json{{"schema", "1"}, {"classes", classes}, {"total_degree", r.total_degree}, {"wab", wab}};
}

std::vector<CandidateCharacter> candidate_from_json(const Json& j) {
  const Json& arr = j.is_object() && j.contains("characters") ? j["characters"] : j;
  if (!arr.is_array()) throw InputError("candidate must be an array of characters");
  std::vector<CandidateCharacter> out;
  for (const auto& cj : arr) {
    CandidateCharacter c;
    c.name = cj.value("name", "psi" + std::to_string(out.size()));
    if (!cj.contains("xi")) throw InputError("candidate character '" + c.name + "' is missing field \"xi\"");
    if (cj["xi"].is_string() && cj["xi"].get<std::string>() != "OTHER") c.xi = cj["xi"].get<std::string>();
    c.multiplicity = cj.value("e", 1u);
    out.push_back(std::move(c));
  }
  return out;
}

Json to_json(const CandidateVerdict& v) {
  Json j = {{"schema", "1"}, {"weakly_divides", v.weakly_divides}};
  if (!v.weakly_divides) {
    j["violated"] = std::string(1, v.condition);
    j["index"] = v.index;
    j["detail"] = v.detail;
  }
  return j;
}

}  // namespace weakdiv
