#include "weakdiv/acceptance.hpp"

#include <chrono>
#include <cmath>
#include <sstream>

#include "weakdiv/catalog.hpp"
#include "weakdiv/haar.hpp"
#include "weakdiv/sylvester.hpp"
#include "weakdiv/weak_divisibility.hpp"

namespace weakdiv {

Poly random_monic(std::mt19937_64& rng, int degree, unsigned conductor) {
  std::uniform_int_distribution<long> num(-4, 4);
  std::uniform_int_distribution<long> den(1, 3);
  const unsigned phi = euler_phi(conductor);
  std::vector<Cyclotomic> c;
  for (int i = 0; i < degree; ++i) {
    std::vector<Rational> q(phi);
    for (auto& x : q) {
      x = Rational(num(rng), den(rng));
      x.canonicalize();
    }
    c.emplace_back(conductor, std::move(q));
  }
  c.emplace_back(1);
  return Poly(std::move(c));
}

FrobStream trivial_stream_like(const FrobStream& like) {
  FrobStream s(1, 1, like.bad_primes());
  for (const auto& r : like.records()) s.append(r.p, Poly::linear(Cyclotomic(1)));
  return s;
}

std::vector<DecompositionSpec> wab_fixture_suite() {
  std::vector<DecompositionSpec> suite;
  // GO_3-type: an SO_3 piece carries the homothety character, an SL_3 piece nothing.
  suite.push_back({{{"so3", 1, "triv"}, {"sl3", 0, std::nullopt}}, true});
  // Two pieces in the same class pool their capacities.
  suite.push_back({{{"j1", 1, "a"}, {"j2", 2, "a"}}, true});
  // Nothing with a zero weight.
  suite.push_back({{{"sl2", 0, std::nullopt}, {"sl3", 0, std::nullopt}}, true});
  // Catalog-derived capacities.
  suite.push_back({{{"so5", catalog_lookup("SO_n_std(5)").n0, "cyc"},
                    {"prod", catalog_lookup("product(SL2_sym2, SL2_sym2)").n0, "cyc"},
                    {"gl4", catalog_lookup("GLn_std(4)").n0, std::nullopt}},
                   true});
  std::mt19937_64 rng(20240601);
  const char* labels[] = {"triv", "cyc", "cyc^-1", "eps_cyc"};
  while (suite.size() < 20) {
    DecompositionSpec spec;
    spec.infinite_order_guarantee = true;
    const int pieces = std::uniform_int_distribution<int>(1, 6)(rng);
    for (int j = 0; j < pieces; ++j) {
      const unsigned n0 = std::uniform_int_distribution<unsigned>(0, 3)(rng);
      std::optional<std::string> xi;
      if (n0 > 0) xi = labels[std::uniform_int_distribution<int>(0, 3)(rng)];
      spec.pieces.push_back({"r" + std::to_string(suite.size()) + "_" + std::to_string(j), n0, xi});
    }
    suite.push_back(std::move(spec));
  }
  return suite;
}

namespace {

using Clock = std::chrono::steady_clock;

template <class Body>
CriterionResult timed(int id, std::string name, double limit, Body&& body) {
  CriterionResult r;
  r.id = id;
  r.name = std::move(name);
  r.limit_seconds = limit;
  const auto start = Clock::now();
  std::ostringstream detail;
  bool ok = false;
  try {
    ok = body(detail);
  } catch (const std::exception& e) {
    detail << "exception: " << e.what();
    ok = false;
  }
  r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  r.passed = ok && r.seconds < limit;
  if (ok && !r.passed) detail << " [runtime limit exceeded]";
  r.detail = detail.str();
  return r;
}

const std::array<long, 5> kConductor11 = {0, -1, 1, -10, -20};

}  // namespace

CriterionResult criterion_klein_four(const AcceptanceOptions&) {
  return timed(1, "Klein-four exact oracle", 1.0, [](std::ostringstream& d) {
    bool ok = true;
    for (unsigned i = 0; i < 4; ++i) {
      const Rational density = exact_finite_density(klein_four_table(i));
      bool is_summand = false;
      for (unsigned j = 0; j < 4; ++j) {
        if (j == i) continue;
        bool same = true;
        for (unsigned g = 0; g < 4; ++g) same = same && klein_four_character(i, g) == klein_four_character(j, g);
        is_summand = is_summand || same;
      }
      d << "chi_" << i << ": density " << density.get_str() << (is_summand ? " (summand)" : " (not a summand)") << "; ";
      ok = ok && density == 1 && !is_summand;
    }
    return ok;
  });
}

CriterionResult criterion_sylvester(const AcceptanceOptions& o) {
  return timed(2, "Sylvester rank identity", 10.0, [&](std::ostringstream& d) {
    std::mt19937_64 rng(o.seed);
    int failures = 0;
    int over_cyclotomic = 0;
    for (int k = 0; k < 1000; ++k) {
      const int planted = k % 4;
      const unsigned conductor = k % 8 == 7 ? 4 : 1;
      over_cyclotomic += conductor == 4;
      const Poly h = random_monic(rng, planted, conductor);
      std::uniform_int_distribution<int> deg(planted == 0 ? 1 : 0, 6 - planted);
      const Poly f = h * random_monic(rng, deg(rng), conductor);
      const Poly g = h * random_monic(rng, deg(rng), conductor);
      const Poly gcd = poly_gcd(f, g);
      const int rank = sylvester_rank(f, g);
      const bool ok = rank == f.degree() + g.degree() - gcd.degree() && divides(h, gcd);
      failures += !ok;
    }
    d << "1000 pairs (" << over_cyclotomic << " over Q(zeta_4)), " << failures << " failures";
    return failures == 0;
  });
}

CriterionResult criterion_ec_sym2_scan(const AcceptanceOptions& o) {
  return timed(3, "Elliptic-curve Sym^2 scan", 60.0, [&](std::ostringstream& d) {
    const CurveSpec curve = make_curve(kConductor11);
    const FrobStream ec = ec_frob_stream(curve, 10000, o.threads);
    const FrobStream sym = stream_construct(Transform::sym2, std::span(&ec, 1), std::nullopt, o.threads);
    const FrobStream cyc = stream_construct(Transform::det, std::span(&ec, 1));
    ScanOptions scan;
    scan.threads = o.threads;
    scan.predicted = Rational(1);
    const auto cyc_report = weakdiv_scan(cyc, sym, scan);
    const FrobStream triv = trivial_stream_like(ec);
    scan.predicted.reset();
    const auto triv_report = weakdiv_scan(triv, ec, scan);
    std::size_t late_hits = 0;
    for (Prime p : triv_report.hit_primes) late_hits += p >= 7;
    d << "(T-p) | Sym^2 at " << cyc_report.hits << "/" << cyc_report.total << " primes; (T-1) | std at "
      << late_hits << " primes p >= 7";
    return ec.size() == 1228 && cyc_report.total == 1228 && cyc_report.hits == 1228 && late_hits == 0;
  });
}

CriterionResult criterion_alt2_identity(const AcceptanceOptions& o) {
  return timed(4, "Alt^2 identity", 30.0, [&](std::ostringstream& d) {
    const FrobStream sigma = ec_frob_stream(make_curve(kConductor11), 1000, o.threads);
    const FrobStream tau = dirichlet_char_stream(5, 1, 1000);
    const FrobStream pair[] = {sigma, tau};
    const FrobStream rho = stream_construct(Transform::dsum, pair, std::nullopt, o.threads);
    const FrobStream lhs = stream_construct(Transform::exterior2, std::span(&rho, 1), std::nullopt, o.threads);
    const FrobStream st = stream_construct(Transform::tensor, pair, std::nullopt, o.threads);
    const FrobStream det = stream_construct(Transform::det, std::span(&sigma, 1));
    const FrobStream rhs_in[] = {st, det};
    const FrobStream rhs = stream_construct(Transform::dsum, rhs_in, std::nullopt, o.threads);
    std::size_t mismatches = 0;
    for (const auto& r : lhs.records()) {
      const auto* other = rhs.find(r.p);
      if (!other || other->poly != r.poly) ++mismatches;
    }
    const bool same_primes = lhs.size() == rhs.size();
    d << lhs.size() << " shared primes <= 1000, " << mismatches << " mismatches";
    return same_primes && mismatches == 0 && lhs.size() == primes_up_to(1000).size() - 2;
  });
}

CriterionResult criterion_haar_center(const AcceptanceOptions& o) {
  return timed(5, "Haar 1/|Z| density for muN_ext(N, SU2_sym2)", 60.0, [&](std::ostringstream& d) {
    bool ok = true;
    for (unsigned N : {2u, 3u, 4u}) {
      const HaarGroup g{BaseGroup::SU2_sym2, N};
      const auto est = eigenvalue_one_rate(g, 100000, 1e-6, 1, 42, o.threads);
      const double p = 1.0 / N;
      const double sigma = std::sqrt(p * (1 - p) / est.n_samples);
      const bool within = std::abs(est.rate - p) <= 3 * sigma;
      const bool agree = est.structural_agreement >= 0.999 * est.n_samples;
      d << "N=" << N << ": rate " << est.rate << " vs " << p << " (|z|=" << std::abs(est.rate - p) / sigma
        << ", structural agreement " << est.structural_agreement << "); ";
      ok = ok && within && agree && est.predicted && *est.predicted == Rational(1, N);
    }
    return ok;
  });
}

CriterionResult criterion_haar_so3(const AcceptanceOptions& o) {
  return timed(6, "Haar SO3 eigenvalue-one multiplicities", 60.0, [&](std::ostringstream& d) {
    const HaarGroup so3{BaseGroup::SO3, 1};
    const auto m1 = eigenvalue_one_rate(so3, 100000, 1e-6, 1, o.seed, o.threads);
    const auto m2 = eigenvalue_one_rate(so3, 100000, 1e-6, 2, o.seed, o.threads);
    d << "m=1 rate " << m1.rate << " (max |det(M-I)| " << m1.max_abs_det_minus_identity << "); m=2 rate "
      << m2.rate;
    return m1.hits == m1.n_samples && m1.max_abs_det_minus_identity <= 1e-9 && m2.rate <= 1e-4;
  });
}

CriterionResult criterion_steinberg(const AcceptanceOptions& o) {
  return timed(7, "Regular semisimple density", 60.0, [&](std::ostringstream& d) {
    const auto su3 = regular_semisimple_rate({BaseGroup::SU3, 1}, 100000, 1e-4, o.seed, o.threads);
    const auto so3 = regular_semisimple_rate({BaseGroup::SO3, 1}, 100000, 1e-4, o.seed, o.threads);
    d << "SU3 " << su3.rate << ", SO3 " << so3.rate;
    return su3.rate >= 0.99 && so3.rate >= 0.99;
  });
}

CriterionResult criterion_wab_solver(const AcceptanceOptions&) {
  return timed(8, "Weak abelian part solver", 1.0, [](std::ostringstream& d) {
    const auto suite = wab_fixture_suite();
    std::size_t checks = 0;
    std::size_t failures = 0;
    for (const auto& spec : suite) {
      const WabResult wab = solve_wab(spec);
      unsigned sum = 0;
      for (const auto& p : spec.pieces) sum += p.n0;
      failures += wab.total_degree != sum;
      const auto cand = wab_candidate(wab);
      ++checks;
      failures += !check_candidate(spec, cand).weakly_divides;
      for (std::size_t i = 0; i < cand.size(); ++i) {
        auto bumped = cand;
        ++bumped[i].multiplicity;
        const auto v = check_candidate(spec, bumped);
        ++checks;
        failures += v.weakly_divides || v.condition != 'b' || v.index != i;
      }
      auto other = cand;
      other.push_back({"other", std::nullopt, 1});
      const auto v = check_candidate(spec, other);
      ++checks;
      failures += v.weakly_divides || v.condition != 'a' || v.index != cand.size();
    }
    d << suite.size() << " specs, " << checks << " candidate checks, " << failures << " failures";
    return suite.size() == 20 && failures == 0;
  });
}

CriterionResult criterion_exact_properties(const AcceptanceOptions& o) {
  return timed(9, "Exact plethysm and Newton round trip", 30.0, [&](std::ostringstream& d) {
    std::mt19937_64 rng(o.seed + 9);
    std::size_t failures = 0;
    for (int k = 0; k < 1000; ++k) {
      const unsigned conductor = k % 2 == 0 ? 1 : 4;
      const int degree = 1 + k % 4;
      const Poly f = random_monic(rng, degree, conductor);
      const bool plethysm = tensor(f, f) == sym2(f) * exterior2(f);
      const bool newton = charpoly_from_power_sums(newton_power_sums(f, degree), degree) == f;
      failures += !plethysm || !newton;
    }
    d << "1000 polynomials (500 over Q, 500 over Q(zeta_4)), " << failures << " failures";
    return failures == 0;
  });
}

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& o) {
  return {criterion_klein_four(o),   criterion_sylvester(o),   criterion_ec_sym2_scan(o),
          criterion_alt2_identity(o), criterion_haar_center(o), criterion_haar_so3(o),
          criterion_steinberg(o),    criterion_wab_solver(o),  criterion_exact_properties(o)};
}

std::string format_result(const CriterionResult& r) {
  std::ostringstream os;
  os.precision(3);
  os << (r.passed ? "[PASS] " : "[FAIL] ") << r.id << ". " << r.name << " (" << std::fixed << r.seconds
     << " s, limit " << r.limit_seconds << " s): " << r.detail;
  return os.str();
}

}  // namespace weakdiv
