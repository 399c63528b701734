#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "weakdiv/charpoly.hpp"
#include "weakdiv/serialize.hpp"

namespace weakdiv {

using Prime = std::uint64_t;

std::vector<Prime> primes_up_to(Prime n);
bool is_prime(Prime n);

// ---------------------------------------------------------------- curves

/// Long Weierstrass model y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6.
struct CurveSpec {
  std::array<long, 5> a{};  // a1, a2, a3, a4, a6
  Integer discriminant;
  std::set<Prime> bad_primes;  // exactly the primes dividing the discriminant
};

/// Throws InputError for a singular model.
CurveSpec make_curve(const std::array<long, 5>& a);

inline constexpr Prime kDefaultPointCountBound = 100000;

/// a_p = p + 1 - #E(F_p) by enumeration over x with a table of squares.
/// Throws InputError for bad or out-of-range p, InternalError if the Hasse
/// bound fails.
long ec_point_count(const CurveSpec& curve, Prime p, Prime bound = kDefaultPointCountBound);

// --------------------------------------------------------------- streams

struct CharPolyRecord {
  Prime p = 0;
  Poly poly;

  friend bool operator==(const CharPolyRecord&, const CharPolyRecord&) = default;
};

/// Frobenius characteristic polynomials det(T - rho(Frob_p)) over Q(zeta_m),
/// one per good prime, kept sorted by p.
class FrobStream {
 public:
  FrobStream(unsigned degree, unsigned conductor, std::set<Prime> bad = {});

  unsigned degree() const { return degree_; }
  unsigned conductor() const { return conductor_; }
  const std::set<Prime>& bad_primes() const { return bad_; }
  std::span<const CharPolyRecord> records() const { return records_; }
  std::size_t size() const { return records_.size(); }

  /// Records must arrive with strictly increasing p.
  void append(Prime p, Poly poly);
  const CharPolyRecord* find(Prime p) const;

  friend bool operator==(const FrobStream&, const FrobStream&) = default;

 private:
  unsigned degree_;
  unsigned conductor_;
  std::set<Prime> bad_;
  std::vector<CharPolyRecord> records_;
};

/// Degree-2 stream T^2 - a_p T + p at every good p <= pmax.
FrobStream ec_frob_stream(const CurveSpec& curve, Prime pmax, unsigned threads = 1,
                          Prime bound = kDefaultPointCountBound);

/// chi(g) = zeta_{q-1}^k at the smallest primitive root g mod a prime q.
Cyclotomic dirichlet_value(unsigned q, long k, Prime p);
unsigned smallest_primitive_root(unsigned q);
/// Degree-1 stream T - chi(p) for p != q, p <= pmax, over Q(zeta_{q-1}).
FrobStream dirichlet_char_stream(unsigned q, long k, Prime pmax);

/// Record-wise transform on the primes common to all inputs. Unary ops:
/// exterior2, sym2, dual_twist_by_det, det, twist. Binary: tensor, dsum.
/// twist without a scalar is the cyclotomic twist (roots divided by p).
FrobStream stream_construct(Transform op, std::span<const FrobStream> inputs,
                            const std::optional<Cyclotomic>& twist_scalar = std::nullopt,
                            unsigned threads = 1);

/// psi^{+e}: e-fold direct sum.
FrobStream stream_power(const FrobStream& s, unsigned e);

/// JSON-lines: header {"schema":"1","degree":n,"conductor":m,"bad":[...]}, then
/// {"p":p,"coeffs":[ExactScalar,...]} per record.
void write_stream(std::ostream& os, const FrobStream& s);
FrobStream read_stream(std::istream& is);
/// "p,a_p" lines (optional header line) for degree-2 elliptic-curve data.
FrobStream read_ec_csv(std::istream& is);
/// Picks CSV or JSON-lines by extension.
FrobStream load_stream(const std::string& path);

// ---------------------------------------------------------- finite groups

struct FiniteRepRow {
  std::string element;
  Poly rho;
  Poly psi;
};

/// Charpolys of a finite-image pair (rho, psi) at every group element.
struct FiniteRepTable {
  unsigned group_order = 0;
  std::vector<FiniteRepRow> rows;
};

/// Values of the four characters of Z/2 x Z/2: kleinfour_character(j, g) in {+1,-1}.
int klein_four_character(unsigned j, unsigned g);

/// psi = chi_i, rho = sum of the other three characters.
FiniteRepTable klein_four_table(unsigned i);

/// Z/N with psi, rho sums of characters chi_k(g^t) = zeta_N^{kt}.
FiniteRepTable cyclic_table(unsigned order, std::span<const long> psi_chars,
                            std::span<const long> rho_chars);

void validate(const FiniteRepTable& t);
Json to_json(const FiniteRepTable& t);
FiniteRepTable finite_table_from_json(const Json& j);

}  // namespace weakdiv
