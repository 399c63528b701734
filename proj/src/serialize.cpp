#include "weakdiv/serialize.hpp"

namespace weakdiv {

std::string rational_to_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw InputError("empty rational");
  Rational q;
  if (mpq_set_str(q.get_mpq_t(), s.c_str(), 10) != 0) {
    throw InputError("malformed rational '" + s + "'");
  }
  if (sgn(q.get_den()) == 0) throw InputError("zero denominator in '" + s + "'");
  q.canonicalize();
  return q;
}

Json to_json(const Cyclotomic& x) {
  Json c = Json::array();
  for (const auto& q : x.coeffs()) c.push_back(rational_to_string(q));
  return Json{{"m", x.conductor()}, {"c", std::move(c)}};
}

namespace {

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw InputError("expected a rational string or integer, got " + j.dump());
}

Cyclotomic scalar_from_any(const Json& j, unsigned conductor) {
  if (j.is_object()) return cyclotomic_from_json(j);
  if (j.is_array()) {
    std::vector<Rational> c;
    for (const auto& e : j) c.push_back(rational_from_json(e));
    return Cyclotomic(conductor, std::move(c));
  }
  return Cyclotomic(rational_from_json(j));
}

}  // namespace

Cyclotomic cyclotomic_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("m") || !j.contains("c")) {
    throw InputError("ExactScalar needs fields \"m\" and \"c\"");
  }
  if (!j["m"].is_number_unsigned() || j["m"].get<long>() <= 0) {
    throw InputError("field \"m\" must be a positive integer");
  }
  if (!j["c"].is_array()) throw InputError("field \"c\" must be an array");
  std::vector<Rational> c;
  for (const auto& e : j["c"]) c.push_back(rational_from_json(e));
  return Cyclotomic(j["m"].get<unsigned>(), std::move(c));
}

Json coeffs_to_json(const Poly& f) {
  Json arr = Json::array();
  for (const auto& c : f.coeffs()) arr.push_back(to_json(c));
  return arr;
}

Poly coeffs_from_json(const Json& arr, unsigned conductor) {
  if (!arr.is_array() || arr.empty()) throw InputError("field \"coeffs\" must be a non-empty array");
  std::vector<Cyclotomic> c;
  for (const auto& e : arr) c.push_back(scalar_from_any(e, conductor));
  return Poly(std::move(c));
}

Json to_json(const Poly& f) { return Json{{"coeffs", coeffs_to_json(f)}}; }

Poly poly_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("coeffs")) throw InputError("Polynomial needs field \"coeffs\"");
  return coeffs_from_json(j["coeffs"], 1);
}

}  // namespace weakdiv
