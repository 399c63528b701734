#include "weakdiv/catalog.hpp"

#include <cctype>
#include <numeric>

#include "weakdiv/errors.hpp"

namespace weakdiv {

namespace {

struct LabelNode {
  std::string name;
  std::vector<LabelNode> args;
  std::optional<long> number;

  std::string canonical() const {
    if (number) return std::to_string(*number);
    if (args.empty()) return name;
    std::string s = name + "(";
    for (std::size_t i = 0; i < args.size(); ++i) {
      if (i) s += ", ";
      s += args[i].canonical();
    }
    return s + ")";
  }
};

class LabelParser {
 public:
  explicit LabelParser(std::string_view text) : s_(text) {}

  LabelNode parse() {
    LabelNode node = parse_node();
    skip_ws();
    if (pos_ != s_.size()) fail("trailing characters");
    return node;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw InputError("bad monodromy label '" + std::string(s_) + "': " + why);
  }
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  LabelNode parse_node() {
    skip_ws();
    LabelNode node;
    const std::size_t start = pos_;
    if (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '-')) {
      ++pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      try {
        node.number = std::stol(std::string(s_.substr(start, pos_ - start)));
      } catch (const std::exception&) {
        fail("bad integer");
      }
      return node;
    }
    while (pos_ < s_.size() &&
           (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
      ++pos_;
    if (pos_ == start) fail("expected a name at position " + std::to_string(start));
    node.name = std::string(s_.substr(start, pos_ - start));
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == '(') {
      ++pos_;
      for (;;) {
        node.args.push_back(parse_node());
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == ',') {
          ++pos_;
          continue;
        }
        if (pos_ < s_.size() && s_[pos_] == ')') {
          ++pos_;
          break;
        }
        fail("expected ',' or ')'");
      }
    }
    return node;
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

FormalCharacter sl_n_weights(unsigned n) {
  // e_1, ..., e_{n-1}, -(e_1 + ... + e_{n-1})
  WeightMatrix w = WeightMatrix::Zero(n - 1, n);
  for (unsigned i = 0; i + 1 < n; ++i) {
    w(i, i) = 1;
    w(i, n - 1) = -1;
  }
  return FormalCharacter(std::move(w));
}

FormalCharacter so_odd_weights(unsigned n) {
  const unsigned m = (n - 1) / 2;
  WeightMatrix w = WeightMatrix::Zero(m, n);
  for (unsigned i = 0; i < m; ++i) {
    w(i, 2 * i) = 1;
    w(i, 2 * i + 1) = -1;
  }
  return FormalCharacter(std::move(w));
}

unsigned positive_arg(const LabelNode& node, std::size_t i, const char* what) {
  if (node.args.size() <= i || !node.args[i].number || *node.args[i].number <= 0) {
    throw InputError("label " + node.name + " needs a positive integer " + what);
  }
  return static_cast<unsigned>(*node.args[i].number);
}

MonodromyDescriptor build(const LabelNode& node) {
  if (node.number) throw InputError("expected a group label, got the number " + node.canonical());
  const std::string label = node.canonical();
  const auto expect_args = [&](std::size_t count) {
    if (node.args.size() != count) {
      throw InputError("label " + node.name + " takes " + std::to_string(count) + " argument(s)");
    }
  };
  if (node.name == "SL2_std") {
    expect_args(0);
    return make_descriptor(label, sl_n_weights(2), 2, true);
  }
  if (node.name == "SL2_sym2" || node.name == "SU2_sym2") {
    expect_args(0);
    return make_descriptor(label, FormalCharacter::from_weights({{2}, {0}, {-2}}, 1), 1, true);
  }
  if (node.name == "SO3_std") {
    expect_args(0);
    return make_descriptor(label, so_odd_weights(3), 1, true);
  }
  if (node.name == "SL3_std") {
    expect_args(0);
    return make_descriptor(label, sl_n_weights(3), 3, true);
  }
  if (node.name == "GLn_std") {
    expect_args(1);
    const unsigned n = positive_arg(node, 0, "dimension");
    return make_descriptor(label, sl_n_weights(n), std::nullopt, true);
  }
  if (node.name == "SO_n_std") {
    expect_args(1);
    const unsigned n = positive_arg(node, 0, "dimension");
    if (n % 2 == 0) throw InputError("SO_n_std is catalogued for odd n only, got " + std::to_string(n));
    return make_descriptor(label, so_odd_weights(n), 1, true);
  }
  if (node.name == "muN_scalar_ext") {
    expect_args(2);
    const unsigned N = positive_arg(node, 0, "scalar order");
    const MonodromyDescriptor inner = build(node.args[1]);
    std::optional<unsigned> center;
    if (inner.center_order) center = std::lcm(N, *inner.center_order);
    return make_descriptor(label, inner.der_formal_character, center, inner.connected_mod_center);
  }
  if (node.name == "product") {
    if (node.args.empty()) throw InputError("product needs at least one factor");
    MonodromyDescriptor acc = build(node.args[0]);
    FormalCharacter fc = acc.der_formal_character;
    std::optional<unsigned> center = acc.center_order;
    bool connected = acc.connected_mod_center;
    for (std::size_t i = 1; i < node.args.size(); ++i) {
      const MonodromyDescriptor f = build(node.args[i]);
      fc = direct_sum(fc, f.der_formal_character);
      if (center && f.center_order) *center *= *f.center_order;
      else center.reset();
      connected = connected && f.connected_mod_center;
    }
    return make_descriptor(label, std::move(fc), center, connected);
  }
  throw InputError("unknown monodromy label '" + node.name + "'");
}

}  // namespace

MonodromyDescriptor make_descriptor(std::string label, FormalCharacter der_fc,
                                    std::optional<unsigned> center_order,
                                    bool connected_mod_center) {
  MonodromyDescriptor d;
  d.label = std::move(label);
  d.ambient_dim = static_cast<unsigned>(der_fc.ambient_dim());
  d.n0 = zero_weight_multiplicity(der_fc);
  d.der_formal_character = std::move(der_fc);
  if (center_order && *center_order == 0) throw InputError("center order must be positive");
  d.center_order = center_order;
  d.connected_mod_center = connected_mod_center;
  d.has_nu = d.n0 > 0;
  return d;
}

MonodromyDescriptor catalog_lookup(std::string_view label) {
  return build(LabelParser(label).parse());
}

CharCase parse_char_case(std::string_view name) {
  if (name == "is_nu") return CharCase::is_nu;
  if (name == "finite_order_ratio") return CharCase::finite_order_ratio;
  if (name == "infinite_order_ratio") return CharCase::infinite_order_ratio;
  throw InputError("unknown character case '" + std::string(name) + "'");
}

std::string_view char_case_name(CharCase c) {
  switch (c) {
    case CharCase::is_nu: return "is_nu";
    case CharCase::finite_order_ratio: return "finite_order_ratio";
    case CharCase::infinite_order_ratio: return "infinite_order_ratio";
  }
  return "?";
}

Rational predict_density(const MonodromyDescriptor& d, CharCase c, unsigned e) {
  if (!d.connected_mod_center) {
    throw UnsupportedError("density prediction needs G/Z connected; " + d.label + " is not");
  }
  if (e == 0) throw InputError("multiplicity e must be at least 1");
  if (d.n0 == 0 || c == CharCase::infinite_order_ratio || e > d.n0) return Rational(0);
  if (c == CharCase::is_nu) return Rational(1);
  if (!d.center_order) {
    throw UnsupportedError("finite-order ratio needs a finite center; " + d.label +
                           " has infinite center");
  }
  return Rational(1, *d.center_order);
}

Json to_json(const MonodromyDescriptor& d) {
  Json weights = Json::array();
  for (const auto& w : d.der_formal_character.weight_list()) weights.push_back(w);
  Json center = d.center_order ? Json(*d.center_order) : Json("inf");
  return Json{{"label", d.label},   {"n", d.ambient_dim},         {"weights", weights},
              {"n0", d.n0},         {"center_order", center},     {"connected", d.connected_mod_center}};
}

MonodromyDescriptor descriptor_from_json(const Json& j) {
  for (const char* field : {"label", "n", "weights", "center_order", "connected"}) {
    if (!j.contains(field)) throw InputError(std::string("descriptor is missing field \"") + field + "\"");
  }
  const auto weights = j["weights"].get<std::vector<std::vector<std::int64_t>>>();
  const unsigned n = j["n"].get<unsigned>();
  if (weights.size() != n) {
    throw InputError("field \"weights\" has " + std::to_string(weights.size()) +
                     " entries but \"n\" is " + std::to_string(n));
  }
  const Eigen::Index rank = weights.empty() ? 0 : static_cast<Eigen::Index>(weights[0].size());
  std::optional<unsigned> center;
  if (!(j["center_order"].is_string() && j["center_order"].get<std::string>() == "inf")) {
    if (!j["center_order"].is_number_unsigned()) {
      throw InputError("field \"center_order\" must be a positive integer or \"inf\"");
    }
    center = j["center_order"].get<unsigned>();
  }
  auto d = make_descriptor(j["label"].get<std::string>(), FormalCharacter::from_weights(weights, rank),
                           center, j["connected"].get<bool>());
  if (j.contains("n0") && j["n0"].get<unsigned>() != d.n0) {
    throw InputError("field \"n0\" disagrees with the zero-weight multiplicity of \"weights\"");
  }
  return d;
}

}  // namespace weakdiv
