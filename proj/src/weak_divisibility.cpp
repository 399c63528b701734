#include "weakdiv/weak_divisibility.hpp"

#include <cmath>

#include "weakdiv/errors.hpp"
#include "weakdiv/parallel.hpp"

namespace weakdiv {

bool divides_at_prime(const CharPolyRecord& psi, const CharPolyRecord& rho) {
  if (psi.p != rho.p) {
    throw InputError("records are at different primes (" + std::to_string(psi.p) + " vs " +
                     std::to_string(rho.p) + ")");
  }
  const bool by_remainder = divides(psi.poly, rho.poly);
  const bool by_gcd = poly_gcd(psi.poly, rho.poly).degree() == psi.poly.degree();
  if (by_remainder != by_gcd) {
    throw InternalError("divisibility verdicts disagree at p=" + std::to_string(psi.p));
  }
  return by_remainder;
}

std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::consistent: return "CONSISTENT";
    case Verdict::inconsistent: return "INCONSISTENT";
    case Verdict::no_prediction: return "NO_PREDICTION";
  }
  return "?";
}

double default_tolerance(const Rational& predicted, std::size_t n) {
  const double p = predicted.get_d();
  const double sigma = n == 0 ? 0.0 : std::sqrt(p * (1.0 - p) / static_cast<double>(n));
  return std::max(0.02, 3.0 * sigma);
}

DensityReport weakdiv_scan(const FrobStream& psi, const FrobStream& rho, const ScanOptions& opts) {
  if (psi.degree() > rho.degree()) {
    throw InputError("psi has degree " + std::to_string(psi.degree()) + " > deg rho = " +
                     std::to_string(rho.degree()));
  }
  std::vector<std::pair<const CharPolyRecord*, const CharPolyRecord*>> pairs;
  for (const auto& r : psi.records()) {
    if (opts.pmax && r.p > *opts.pmax) break;
    if (rho.bad_primes().count(r.p)) continue;
    if (const auto* other = rho.find(r.p)) pairs.emplace_back(&r, other);
  }
  if (pairs.empty()) throw InputError("psi and rho share no good primes in range");

  std::vector<char> hit(pairs.size(), 0);
  parallel_for(pairs.size(), opts.threads,
               [&](std::size_t i) { hit[i] = divides_at_prime(*pairs[i].first, *pairs[i].second); });

  DensityReport rep;
  rep.total = pairs.size();
  Rational weight_all = 0;
  Rational weight_hit = 0;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const Prime p = pairs[i].first->p;
    const Rational w(1, static_cast<unsigned long>(p));
    weight_all += w;
    if (hit[i]) {
      ++rep.hits;
      weight_hit += w;
      rep.hit_primes.push_back(p);
    }
  }
  rep.natural = Rational(rep.hits, rep.total);
  rep.natural.canonicalize();
  rep.log_weighted = weight_hit / weight_all;
  rep.predicted = opts.predicted;
  if (rep.predicted) {
    if (*rep.predicted < 0 || *rep.predicted > 1) throw InputError("predicted density must lie in [0, 1]");
    rep.tolerance = opts.tolerance.value_or(default_tolerance(*rep.predicted, rep.total));
    const Rational gap = abs(rep.natural - *rep.predicted);
    rep.verdict = gap <= Rational(rep.tolerance) ? Verdict::consistent : Verdict::inconsistent;
  }
  return rep;
}

Rational exact_finite_density(const FiniteRepTable& table) {
  validate(table);
  std::size_t hits = 0;
  for (const auto& row : table.rows)
    if (divides(row.psi, row.rho)) ++hits;
  Rational d(hits, table.group_order);
  d.canonicalize();
  return d;
}

Json to_json(const DensityReport& r) {
  return Json{{"schema", "1"},
              {"total", r.total},
              {"hits", r.hits},
              {"natural", std::to_string(r.hits) + "/" + std::to_string(r.total)},
              {"log_weighted", rational_to_string(r.log_weighted)},
              {"predicted", r.predicted ? Json(rational_to_string(*r.predicted)) : Json(nullptr)},
              {"tolerance", r.predicted ? Json(r.tolerance) : Json(nullptr)},
              {"verdict", verdict_name(r.verdict)}};
}

}  // namespace weakdiv
