#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "weakdiv/cyclotomic.hpp"
#include "weakdiv/formal_character.hpp"
#include "weakdiv/serialize.hpp"

namespace weakdiv {

/// A catalogued reductive monodromy type G in GL_n.
struct MonodromyDescriptor {
  std::string label;
  unsigned ambient_dim = 0;
  FormalCharacter der_formal_character;  // of G^der on F^n
  unsigned n0 = 0;                       // zero-weight multiplicity, always recomputed
  std::optional<unsigned> center_order;  // nullopt: infinite center
  bool connected_mod_center = true;
  bool has_nu = false;  // n0 > 0, so G = G^der x (G cap G_m)
};

/// Accepts SL2_std, SL2_sym2, SO3_std, SL3_std, GLn_std(n), SO_n_std(n),
/// muN_scalar_ext(N, inner) and product(a, b, ...). Throws InputError on
/// anything else.
MonodromyDescriptor catalog_lookup(std::string_view label);

/// Assembles a descriptor and derives n0 / has_nu from the formal character.
MonodromyDescriptor make_descriptor(std::string label, FormalCharacter der_fc,
                                    std::optional<unsigned> center_order, bool connected_mod_center);

enum class CharCase { is_nu, finite_order_ratio, infinite_order_ratio };

CharCase parse_char_case(std::string_view name);
std::string_view char_case_name(CharCase c);

/// Density of S_{chi^{+e} | rho} for rho with monodromy d:
///   n0 = 0 or infinite-order ratio       -> 0
///   is_nu                                 -> 1 if e <= n0, else 0
///   finite-order ratio                    -> 1/|Z| if e <= n0, else 0
/// Throws UnsupportedError when G/Z is not connected.
Rational predict_density(const MonodromyDescriptor& d, CharCase c, unsigned e);

Json to_json(const MonodromyDescriptor& d);
MonodromyDescriptor descriptor_from_json(const Json& j);

}  // namespace weakdiv
