#include "weakdiv/errors.hpp"
#include "weakdiv/frobenius.hpp"

namespace weakdiv {

int klein_four_character(unsigned j, unsigned g) {
  if (j > 3 || g > 3) throw InputError("Klein-four indices run over 0..3");
  // j = (j1, j2), g = (g1, g2) in bits; chi_j(g) = (-1)^{j1 g1 + j2 g2}
  const unsigned pairing = (j & g & 1u) + ((j >> 1) & (g >> 1) & 1u);
  return pairing % 2 == 0 ? 1 : -1;
}

FiniteRepTable klein_four_table(unsigned i) {
  if (i > 3) throw InputError("Klein-four character index must be in 0..3");
  FiniteRepTable t;
  t.group_order = 4;
  static constexpr const char* kNames[] = {"e", "a", "b", "ab"};
  for (unsigned g = 0; g < 4; ++g) {
    Poly rho = Poly::constant(Cyclotomic(1));
    for (unsigned j = 0; j < 4; ++j)
      if (j != i) rho *= Poly::linear(Cyclotomic(klein_four_character(j, g)));
    t.rows.push_back({kNames[g], std::move(rho), Poly::linear(Cyclotomic(klein_four_character(i, g)))});
  }
  return t;
}

FiniteRepTable cyclic_table(unsigned order, std::span<const long> psi_chars,
                            std::span<const long> rho_chars) {
  if (order == 0) throw InputError("group order must be positive");
  if (psi_chars.empty() || rho_chars.empty()) throw InputError("psi and rho need at least one character");
  FiniteRepTable t;
  t.group_order = order;
  for (unsigned g = 0; g < order; ++g) {
    Poly psi = Poly::constant(Cyclotomic(1));
    Poly rho = Poly::constant(Cyclotomic(1));
    for (long k : psi_chars) psi *= Poly::linear(Cyclotomic::zeta(order, k * static_cast<long>(g)));
    for (long k : rho_chars) rho *= Poly::linear(Cyclotomic::zeta(order, k * static_cast<long>(g)));
    t.rows.push_back({"g^" + std::to_string(g), std::move(rho), std::move(psi)});
  }
  return t;
}

void validate(const FiniteRepTable& t) {
  if (t.rows.size() != t.group_order) {
    throw InputError("table has " + std::to_string(t.rows.size()) + " rows for group order " +
                     std::to_string(t.group_order));
  }
  for (const auto& r : t.rows) {
    if (!r.rho.is_monic() || !r.psi.is_monic()) {
      throw InputError("row " + r.element + ": charpolys must be monic");
    }
    if (r.rho.degree() != t.rows.front().rho.degree() || r.psi.degree() != t.rows.front().psi.degree()) {
      throw InputError("row " + r.element + ": charpoly degree differs from the first row");
    }
  }
}

Json to_json(const FiniteRepTable& t) {
  Json rows = Json::array();
  for (const auto& r : t.rows) {
    rows.push_back(Json{{"element", r.element}, {"rho", to_json(r.rho)}, {"psi", to_json(r.psi)}});
  }
  return Json{{"group_order", t.group_order}, {"rows", std::move(rows)}};
}

FiniteRepTable finite_table_from_json(const Json& j) {
  if (!j.contains("group_order") || !j["group_order"].is_number_unsigned()) {
    throw InputError("field \"group_order\" must be a positive integer");
  }
  if (!j.contains("rows") || !j["rows"].is_array()) throw InputError("field \"rows\" must be an array");
  FiniteRepTable t;
  t.group_order = j["group_order"].get<unsigned>();
  for (const auto& r : j["rows"]) {
    if (!r.contains("rho") || !r.contains("psi")) throw InputError("table row needs fields \"rho\" and \"psi\"");
    t.rows.push_back({r.value("element", std::to_string(t.rows.size())), poly_from_json(r["rho"]),
                      poly_from_json(r["psi"])});
  }
  validate(t);
  return t;
}

}  // namespace weakdiv
