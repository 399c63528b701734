#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>

#include "weakdiv/errors.hpp"
#include "weakdiv/frobenius.hpp"
#include "weakdiv/parallel.hpp"

namespace weakdiv {

FrobStream::FrobStream(unsigned degree, unsigned conductor, std::set<Prime> bad)
    : degree_(degree), conductor_(conductor), bad_(std::move(bad)) {
  if (conductor_ == 0) throw InputError("stream conductor must be positive");
}

void FrobStream::append(Prime p, Poly poly) {
  if (!records_.empty() && p <= records_.back().p) {
    throw InputError("stream primes must be strictly increasing (" + std::to_string(p) +
                     " after " + std::to_string(records_.back().p) + ")");
  }
  if (bad_.count(p)) throw InputError("record at bad prime " + std::to_string(p));
  if (!poly.is_monic() || poly.degree() != static_cast<int>(degree_)) {
    throw InputError("record at p=" + std::to_string(p) + " is not monic of degree " +
                     std::to_string(degree_));
  }
  for (const auto& c : poly.coeffs()) {
    if (conductor_ % c.conductor() != 0) {
      throw InputError("record at p=" + std::to_string(p) + " has a coefficient over conductor " +
                       std::to_string(c.conductor()) + ", not dividing stream conductor " +
                       std::to_string(conductor_));
    }
  }
  records_.push_back({p, std::move(poly)});
}

const CharPolyRecord* FrobStream::find(Prime p) const {
  auto it = std::lower_bound(records_.begin(), records_.end(), p,
                             [](const CharPolyRecord& r, Prime q) { return r.p < q; });
  return (it != records_.end() && it->p == p) ? &*it : nullptr;
}

namespace {

unsigned output_degree(Transform op, std::span<const FrobStream> in) {
  const unsigned n = in[0].degree();
  switch (op) {
    case Transform::exterior2: return n == 0 ? 0 : n * (n - 1) / 2;
    case Transform::sym2: return n * (n + 1) / 2;
    case Transform::tensor: return n * in[1].degree();
    case Transform::dsum: return n + in[1].degree();
    case Transform::twist: return n;
    case Transform::det: return 1;
    case Transform::dual_twist_by_det:
      if (n != 3) throw InputError("dual_twist_by_det needs a degree-3 stream, got degree " + std::to_string(n));
      return 3;
  }
  return 0;
}

std::size_t arity(Transform op) {
  return (op == Transform::tensor || op == Transform::dsum) ? 2 : 1;
}

}  // namespace

FrobStream stream_construct(Transform op, std::span<const FrobStream> inputs,
                            const std::optional<Cyclotomic>& twist_scalar, unsigned threads) {
  if (inputs.size() != arity(op)) {
    throw InputError(std::string(transform_name(op)) + " takes " + std::to_string(arity(op)) +
                     " input stream(s), got " + std::to_string(inputs.size()));
  }
  if (twist_scalar && op != Transform::twist) {
    throw InputError("a twist scalar is only meaningful for the twist transform");
  }
  if (twist_scalar && twist_scalar->is_zero()) throw InputError("twist by zero");
  const unsigned degree = output_degree(op, inputs);
  unsigned conductor = 1;
  std::set<Prime> bad;
  for (const auto& s : inputs) {
    conductor = std::lcm(conductor, s.conductor());
    bad.insert(s.bad_primes().begin(), s.bad_primes().end());
  }
  if (twist_scalar) conductor = std::lcm(conductor, twist_scalar->conductor());

  std::vector<const CharPolyRecord*> first;
  std::vector<const CharPolyRecord*> second;
  for (const auto& r : inputs[0].records()) {
    if (bad.count(r.p)) continue;
    if (inputs.size() == 2) {
      const auto* other = inputs[1].find(r.p);
      if (!other) continue;
      second.push_back(other);
    }
    first.push_back(&r);
  }

  std::vector<Poly> out(first.size());
  parallel_for(first.size(), threads, [&](std::size_t i) {
    const Poly& f = first[i]->poly;
    switch (op) {
      case Transform::exterior2: out[i] = exterior2(f); break;
      case Transform::sym2: out[i] = sym2(f); break;
      case Transform::tensor: out[i] = tensor(f, second[i]->poly); break;
      case Transform::dsum: out[i] = dsum(f, second[i]->poly); break;
      case Transform::dual_twist_by_det: out[i] = dual_twist_by_det(f); break;
      case Transform::det: out[i] = det_charpoly(f); break;
      case Transform::twist:
        out[i] = twist(f, twist_scalar ? *twist_scalar
                                       : Cyclotomic(Rational(1, static_cast<unsigned long>(first[i]->p))));
        break;
    }
  });
  FrobStream result(degree, conductor, std::move(bad));
  for (std::size_t i = 0; i < first.size(); ++i) result.append(first[i]->p, std::move(out[i]));
  return result;
}

FrobStream stream_power(const FrobStream& s, unsigned e) {
  if (e == 0) throw InputError("direct-sum power must be at least 1");
  FrobStream out(s.degree() * e, s.conductor(), s.bad_primes());
  for (const auto& r : s.records()) {
    Poly f = r.poly;
    for (unsigned k = 1; k < e; ++k) f *= r.poly;
    out.append(r.p, std::move(f));
  }
  return out;
}

void write_stream(std::ostream& os, const FrobStream& s) {
  Json header = {{"schema", "1"},
                 {"degree", s.degree()},
                 {"conductor", s.conductor()},
                 {"bad", std::vector<Prime>(s.bad_primes().begin(), s.bad_primes().end())}};
  os << header.dump() << '\n';
  for (const auto& r : s.records()) {
    Json coeffs = Json::array();
    for (const auto& c : r.poly.coeffs()) coeffs.push_back(to_json(c.lifted(s.conductor())));
    os << Json{{"p", r.p}, {"coeffs", std::move(coeffs)}}.dump() << '\n';
  }
}

namespace {

unsigned positive_field(const Json& j, const char* field, const std::string& where) {
  if (!j.contains(field)) throw InputError(where + ": missing field \"" + field + "\"");
  if (!j[field].is_number_unsigned() || j[field].get<long>() <= 0) {
    throw InputError(where + ": field \"" + field + "\" must be a positive integer");
  }
  return j[field].get<unsigned>();
}

}  // namespace

FrobStream read_stream(std::istream& is) {
  std::string line;
  std::size_t lineno = 0;
  std::optional<FrobStream> stream;
  while (std::getline(is, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const std::string where = "line " + std::to_string(lineno);
    Json j;
    try {
      j = Json::parse(line);
    } catch (const Json::parse_error& e) {
      throw InputError(where + ": malformed JSON");
    }
    try {
      if (!stream) {
        const unsigned degree = positive_field(j, "degree", where);
        const unsigned conductor = positive_field(j, "conductor", where);
        std::set<Prime> bad;
        if (j.contains("bad")) {
          if (!j["bad"].is_array()) throw InputError(where + ": field \"bad\" must be an array");
          for (const auto& b : j["bad"]) {
            if (!b.is_number_unsigned()) throw InputError(where + ": field \"bad\" must hold primes");
            bad.insert(b.get<Prime>());
          }
        }
        stream.emplace(degree, conductor, std::move(bad));
        continue;
      }
      if (!j.contains("p") || !j["p"].is_number_unsigned()) {
        throw InputError(where + ": field \"p\" must be a positive integer");
      }
      if (!j.contains("coeffs")) throw InputError(where + ": missing field \"coeffs\"");
      stream->append(j["p"].get<Prime>(), coeffs_from_json(j["coeffs"], stream->conductor()));
    } catch (const InputError& e) {
      const std::string msg = e.what();
      if (msg.rfind("line ", 0) == 0) throw;
      throw InputError(where + ": " + msg);
    } catch (const Json::exception& e) {
      throw InputError(where + ": " + e.what());
    }
  }
  if (!stream) throw InputError("stream file has no header line");
  return std::move(*stream);
}

FrobStream read_ec_csv(std::istream& is) {
  FrobStream s(2, 1);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const auto comma = line.find(',');
    const std::string where = "line " + std::to_string(lineno);
    if (comma == std::string::npos) throw InputError(where + ": expected \"p,a_p\"");
    std::string ps = line.substr(0, comma);
    std::string as = line.substr(comma + 1);
    long p = 0, ap = 0;
    try {
      std::size_t used = 0;
      p = std::stol(ps, &used);
      ap = std::stol(as);
    } catch (const std::exception&) {
      if (lineno == 1 && s.size() == 0) continue;  // header row
      throw InputError(where + ": field \"p\" or \"a_p\" is not an integer");
    }
    if (p < 2 || !is_prime(static_cast<Prime>(p))) throw InputError(where + ": field \"p\" is not a prime");
    s.append(static_cast<Prime>(p), Poly({Cyclotomic(p), Cyclotomic(-ap), Cyclotomic(1)}));
  }
  return s;
}

FrobStream load_stream(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open stream file '" + path + "'");
  const bool csv = path.size() >= 4 && path.compare(path.size() - 4, 4, ".csv") == 0;
  try {
    return csv ? read_ec_csv(in) : read_stream(in);
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

}  // namespace weakdiv
