#include <doctest.h>

#include <algorithm>

#include "weakdiv/catalog.hpp"
#include "weakdiv/errors.hpp"
#include "weakdiv/formal_character.hpp"

using namespace weakdiv;

namespace {

FormalCharacter fc(std::vector<std::vector<std::int64_t>> w) {
  return FormalCharacter::from_weights(w, static_cast<Eigen::Index>(w.front().size()));
}

const std::vector<std::string> kLabels = {
    "SL2_std",        "SL2_sym2",         "SU2_sym2",
    "SO3_std",        "SL3_std",          "GLn_std(2)",
    "GLn_std(4)",     "SO_n_std(5)",      "SO_n_std(7)",
    "muN_scalar_ext(3, SL2_sym2)",        "muN_scalar_ext(2, SL3_std)",
    "product(SL2_sym2, SL2_sym2)",        "product(SL2_std, SO_n_std(5))",
};

}  // namespace

TEST_CASE("zero weight multiplicity") {
  CHECK(zero_weight_multiplicity(fc({{2}, {0}, {-2}})) == 1);
  CHECK(zero_weight_multiplicity(fc({{1}, {-1}})) == 0);
  CHECK(zero_weight_multiplicity(fc({{1, 0}, {0, 1}, {-1, -1}})) == 0);
  CHECK(zero_weight_multiplicity(fc({{0, 0}, {1, 0}, {0, 0}})) == 2);
}

TEST_CASE("Hermite normal form") {
  WeightMatrix a(2, 3);
  a << 2, 4, 6, 1, 1, 1;
  const WeightMatrix h = hermite_normal_form(a);
  // Row space over Z of {(2,4,6),(1,1,1)} is generated by (1,1,1),(0,2,4).
  WeightMatrix expect(2, 3);
  expect << 1, 1, 1, 0, 2, 4;
  CHECK(h == expect);
}

TEST_CASE("same formal character") {
  const auto sym2 = fc({{2}, {0}, {-2}});
  const auto so3 = fc({{1}, {0}, {-1}});
  CHECK(same_formal_character(sym2, so3));
  CHECK(same_formal_character(sym2, sym2));
  CHECK_FALSE(same_formal_character(catalog_lookup("SL2_sym2").der_formal_character,
                                    catalog_lookup("SL3_std").der_formal_character));
  // Permuting torus coordinates and the multiset of weights.
  const auto sl3 = fc({{1, 0}, {0, 1}, {-1, -1}});
  CHECK(same_formal_character(sl3, fc({{-1, -1}, {1, 0}, {0, 1}})));
  CHECK(same_formal_character(sl3, fc({{0, 1}, {1, 0}, {-1, -1}})));
  // A unimodular change of torus basis.
  CHECK(same_formal_character(sl3, fc({{1, 1}, {0, 1}, {-1, -2}})));
  // Same multiplicities but different lattice geometry.
  CHECK_FALSE(same_formal_character(fc({{1, 0}, {0, 1}, {1, 1}}), fc({{1, 0}, {0, 1}, {-1, -1}})));
  CHECK_FALSE(same_formal_character(fc({{1}, {2}}), fc({{1}, {-1}})));
  CHECK_THROWS_AS(same_formal_character(sym2, fc({{1}, {-1}})), InputError);
}

TEST_CASE("same formal character is an equivalence on the catalog") {
  std::vector<FormalCharacter> all;
  for (const auto& l : kLabels) all.push_back(catalog_lookup(l).der_formal_character);
  const auto rel = [&](std::size_t i, std::size_t j) {
    if (all[i].ambient_dim() != all[j].ambient_dim()) return false;
    return same_formal_character(all[i], all[j]);
  };
  for (std::size_t i = 0; i < all.size(); ++i) {
    CHECK(rel(i, i));
    for (std::size_t j = 0; j < all.size(); ++j) {
      CHECK(rel(i, j) == rel(j, i));
      for (std::size_t k = 0; k < all.size(); ++k)
        if (rel(i, j) && rel(j, k)) CHECK(rel(i, k));
    }
  }
  CHECK(rel(1, 3));  // SL2_sym2 ~ SO3_std
}

TEST_CASE("catalog descriptors") {
  const auto sym2 = catalog_lookup("SL2_sym2");
  CHECK(sym2.n0 == 1);
  CHECK(sym2.center_order == 1u);
  CHECK(sym2.has_nu);
  CHECK(catalog_lookup("SL3_std").n0 == 0);
  CHECK(catalog_lookup("SL3_std").center_order == 3u);
  const auto ext = catalog_lookup("muN_scalar_ext(3, SL2_sym2)");
  CHECK(ext.center_order == 3u);
  CHECK(ext.n0 == 1);
  CHECK_FALSE(catalog_lookup("GLn_std(3)").center_order.has_value());
  CHECK(catalog_lookup("SO_n_std(5)").n0 == 1);
  CHECK_THROWS_AS(catalog_lookup("E8_adjoint"), InputError);
  CHECK_THROWS_AS(catalog_lookup("SO_n_std(4)"), std::exception);
  for (const auto& l : kLabels) {
    const auto d = catalog_lookup(l);
    CHECK(d.n0 == zero_weight_multiplicity(d.der_formal_character));
    CHECK(d.has_nu == (d.n0 > 0));
    CHECK(d.der_formal_character.ambient_dim() == d.ambient_dim);
    const auto back = descriptor_from_json(to_json(d));
    CHECK(back.n0 == d.n0);
    CHECK(back.center_order == d.center_order);
  }
}

TEST_CASE("product descriptors add n0") {
  for (const auto& a : kLabels) {
    for (const auto& b : {"SL2_sym2", "SL3_std", "SO_n_std(5)"}) {
      const auto p = catalog_lookup("product(" + a + ", " + b + ")");
      CHECK(p.n0 == catalog_lookup(a).n0 + catalog_lookup(b).n0);
      CHECK(p.ambient_dim == catalog_lookup(a).ambient_dim + catalog_lookup(b).ambient_dim);
    }
  }
}

TEST_CASE("predicted densities") {
  CHECK(predict_density(catalog_lookup("SL3_std"), CharCase::is_nu, 1) == 0);
  CHECK(predict_density(catalog_lookup("muN_scalar_ext(3, SL2_sym2)"), CharCase::finite_order_ratio, 1) ==
        Rational(1, 3));
  CHECK(predict_density(catalog_lookup("SL2_sym2"), CharCase::is_nu, 2) == 0);
  CHECK(predict_density(catalog_lookup("SL2_sym2"), CharCase::infinite_order_ratio, 1) == 0);
  CHECK_THROWS_AS(predict_density(catalog_lookup("SL2_sym2"), CharCase::is_nu, 0), InputError);
  CHECK(parse_char_case("finite_order_ratio") == CharCase::finite_order_ratio);
  for (const auto& l : kLabels) {
    const auto d = catalog_lookup(l);
    Rational prev = 1;
    for (unsigned e = 1; e <= d.n0 + 3; ++e) {
      const Rational r = predict_density(d, CharCase::is_nu, e);
      CHECK(r <= prev);
      CHECK(r == (e <= d.n0 ? 1 : 0));
      prev = r;
    }
  }
}
