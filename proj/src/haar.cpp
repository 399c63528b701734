#include "weakdiv/haar.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <complex>
#include <numbers>
#include <numeric>
#include <random>

#include "weakdiv/catalog.hpp"
#include "weakdiv/errors.hpp"
#include "weakdiv/parallel.hpp"

namespace weakdiv {

namespace {

using Complex = std::complex<double>;

std::string lower(std::string_view s) {
  std::string out;
  for (char c : s)
    if (c != '_' && !std::isspace(static_cast<unsigned char>(c)))
      out += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

BaseGroup parse_base(std::string_view s) {
  const std::string k = lower(s);
  if (k == "su2") return BaseGroup::SU2;
  if (k == "so3") return BaseGroup::SO3;
  if (k == "su3") return BaseGroup::SU3;
  if (k == "su2sym2") return BaseGroup::SU2_sym2;
  throw InputError("unknown Haar group '" + std::string(s) + "'");
}

unsigned parse_order(std::string_view s) {
  unsigned v = 0;
  try {
    std::size_t used = 0;
    const long n = std::stol(std::string(s), &used);
    if (used != s.size() || n <= 0) throw InputError("");
    v = static_cast<unsigned>(n);
  } catch (const std::exception&) {
    throw InputError("scalar order '" + std::string(s) + "' must be a positive integer");
  }
  return v;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

Eigen::MatrixXcd su2_from_quaternion(double a, double b, double c, double d) {
  Eigen::MatrixXcd u(2, 2);
  const Complex alpha(a, b), beta(c, d);
  u << alpha, -std::conj(beta), beta, std::conj(alpha);
  return u;
}

// Rotation by the unit quaternion (w, x, y, z): the image of SU2 in SO3.
Eigen::MatrixXcd rotation_from_quaternion(double w, double x, double y, double z) {
  Eigen::Matrix3d r;
  r << 1 - 2 * (y * y + z * z), 2 * (x * y - w * z), 2 * (x * z + w * y),
       2 * (x * y + w * z), 1 - 2 * (x * x + z * z), 2 * (y * z - w * x),
       2 * (x * z - w * y), 2 * (y * z + w * x), 1 - 2 * (x * x + y * y);
  return r.cast<Complex>();
}

Eigen::MatrixXcd sample_su3(std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, std::sqrt(0.5));
  Eigen::MatrixXcd z(3, 3);
  for (Eigen::Index i = 0; i < 3; ++i)
    for (Eigen::Index j = 0; j < 3; ++j) z(i, j) = Complex(normal(rng), normal(rng));
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(z);
  Eigen::MatrixXcd q = qr.householderQ();
  const Eigen::MatrixXcd& r = qr.matrixQR();
  for (Eigen::Index j = 0; j < 3; ++j) {
    const Complex d = r(j, j);
    q.col(j) *= d / std::abs(d);
  }
  // q is Haar on U(3); divide by a uniformly chosen cube root of det.
  std::uniform_int_distribution<int> branch(0, 2);
  const double phase = std::arg(q.determinant());
  const double root = (phase + 2.0 * std::numbers::pi * branch(rng)) / 3.0;
  q *= std::polar(1.0, -root);
  return q;
}

Eigen::MatrixXcd sample_base(BaseGroup b, std::mt19937_64& rng) {
  if (b == BaseGroup::SU3) return sample_su3(rng);
  std::normal_distribution<double> normal(0.0, 1.0);
  double v[4];
  double norm = 0.0;
  do {
    norm = 0.0;
    for (double& x : v) {
      x = normal(rng);
      norm += x * x;
    }
  } while (norm == 0.0);
  norm = std::sqrt(norm);
  for (double& x : v) x /= norm;
  if (b == BaseGroup::SU2) return su2_from_quaternion(v[0], v[1], v[2], v[3]);
  return rotation_from_quaternion(v[0], v[1], v[2], v[3]);
}

Eigen::VectorXcd eigenvalues(const Eigen::MatrixXcd& m) {
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(m, false);
  if (solver.info() != Eigen::Success) throw InternalError("eigenvalue iteration did not converge");
  return solver.eigenvalues();
}

CharCase prediction_case(const MonodromyDescriptor& d) {
  if (!d.center_order) return CharCase::infinite_order_ratio;
  return *d.center_order == 1 ? CharCase::is_nu : CharCase::finite_order_ratio;
}

}  // namespace

std::string HaarGroup::label() const {
  static constexpr const char* kNames[] = {"SU2", "SO3", "SU3", "SU2_sym2"};
  const std::string inner = kNames[static_cast<int>(base)];
  if (scalar_order == 1) return inner;
  return "muN_ext(" + std::to_string(scalar_order) + ", " + inner + ")";
}

std::string HaarGroup::catalog_label() const {
  static constexpr const char* kNames[] = {"SL2_std", "SO3_std", "SL3_std", "SL2_sym2"};
  const std::string inner = kNames[static_cast<int>(base)];
  if (scalar_order == 1) return inner;
  return "muN_scalar_ext(" + std::to_string(scalar_order) + ", " + inner + ")";
}

unsigned HaarGroup::inner_n0() const {
  return (base == BaseGroup::SO3 || base == BaseGroup::SU2_sym2) ? 1 : 0;
}

HaarGroup parse_haar_group(std::string_view text) {
  const std::string_view s = trim(text);
  if (s.rfind("muN:", 0) == 0) {
    const auto rest = s.substr(4);
    const auto colon = rest.find(':');
    if (colon == std::string_view::npos) throw InputError("expected muN:N:inner, got '" + std::string(s) + "'");
    HaarGroup inner = parse_haar_group(rest.substr(colon + 1));
    inner.scalar_order = std::lcm(inner.scalar_order, parse_order(rest.substr(0, colon)));
    return inner;
  }
  if (s.rfind("muN_ext(", 0) == 0 && s.back() == ')') {
    const auto body = s.substr(8, s.size() - 9);
    const auto comma = body.find(',');
    if (comma == std::string_view::npos) throw InputError("expected muN_ext(N, inner), got '" + std::string(s) + "'");
    HaarGroup inner = parse_haar_group(body.substr(comma + 1));
    inner.scalar_order = std::lcm(inner.scalar_order, parse_order(trim(body.substr(0, comma))));
    return inner;
  }
  return HaarGroup{parse_base(s), 1};
}

std::uint64_t sample_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

HaarSample haar_sample(const HaarGroup& g, std::uint64_t seed, std::uint64_t index) {
  std::mt19937_64 rng(sample_seed(seed, index));
  HaarSample s;
  s.matrix = sample_base(g.base, rng);
  if (g.scalar_order > 1) {
    std::uniform_int_distribution<unsigned> pick(0, g.scalar_order - 1);
    s.zeta_index = pick(rng);
    s.matrix *= std::polar(1.0, 2.0 * std::numbers::pi * s.zeta_index / g.scalar_order);
  }
  return s;
}

double unitarity_residual(const Eigen::MatrixXcd& m) {
  return (m.adjoint() * m - Eigen::MatrixXcd::Identity(m.rows(), m.cols())).norm();
}

std::size_t degenerate_count_threshold(std::size_t n) {
  return std::max<std::size_t>(10, static_cast<std::size_t>(std::ceil(1e-4 * static_cast<double>(n))));
}

void judge(HaarEstimate& est) {
  est.z_score.reset();
  if (!est.predicted) {
    est.consistent = true;
    return;
  }
  const double p = est.predicted->get_d();
  if (*est.predicted == 0) {
    est.consistent = est.hits <= degenerate_count_threshold(est.n_samples);
  } else if (*est.predicted == 1) {
    est.consistent = est.n_samples - est.hits <= degenerate_count_threshold(est.n_samples);
  } else {
    const double sigma = std::sqrt(p * (1.0 - p) / static_cast<double>(est.n_samples));
    est.z_score = (est.rate - p) / sigma;
    est.consistent = std::abs(*est.z_score) <= 3.0;
  }
}

HaarEstimate eigenvalue_one_rate(const HaarGroup& g, std::size_t n_samples, double tol,
                                 unsigned multiplicity, std::uint64_t seed, unsigned threads) {
  if (multiplicity == 0) throw InputError("eigenvalue multiplicity must be at least 1");
  if (!(tol > 0.0 && tol < 0.1)) throw InputError("tol must lie in (0, 0.1)");
  if (n_samples == 0) throw InputError("need at least one sample");
  std::vector<char> hit(n_samples), structural(n_samples);
  std::vector<double> residual(n_samples), det_gap(n_samples);
  const bool structural_possible = multiplicity <= g.inner_n0();
  parallel_for(n_samples, threads, [&](std::size_t i) {
    const HaarSample s = haar_sample(g, seed, i);
    const auto ev = eigenvalues(s.matrix);
    unsigned near_one = 0;
    for (Eigen::Index k = 0; k < ev.size(); ++k)
      if (std::abs(ev(k) - 1.0) <= tol) ++near_one;
    hit[i] = near_one >= multiplicity;
    structural[i] = structural_possible && s.zeta_index == 0;
    residual[i] = unitarity_residual(s.matrix);
    det_gap[i] = std::abs((s.matrix - Eigen::MatrixXcd::Identity(g.dim(), g.dim())).determinant());
  });
  HaarEstimate est;
  est.group_label = g.label();
  est.n_samples = n_samples;
  est.tolerance = tol;
  for (std::size_t i = 0; i < n_samples; ++i) {
    est.hits += hit[i];
    est.structural_hits += structural[i];
    est.structural_agreement += hit[i] == structural[i];
    est.max_unitarity_residual = std::max(est.max_unitarity_residual, residual[i]);
    if (structural[i]) est.max_abs_det_minus_identity = std::max(est.max_abs_det_minus_identity, det_gap[i]);
  }
  est.rate = static_cast<double>(est.hits) / static_cast<double>(n_samples);
  const auto d = catalog_lookup(g.catalog_label());
  est.predicted = predict_density(d, prediction_case(d), multiplicity);
  judge(est);
  return est;
}

HaarEstimate regular_semisimple_rate(const HaarGroup& g, std::size_t n_samples, double gap_tol,
                                     std::uint64_t seed, unsigned threads) {
  if (!(gap_tol > 0.0 && gap_tol < 0.1)) throw InputError("gap_tol must lie in (0, 0.1)");
  if (n_samples == 0) throw InputError("need at least one sample");
  std::vector<char> hit(n_samples);
  std::vector<double> residual(n_samples);
  parallel_for(n_samples, threads, [&](std::size_t i) {
    const HaarSample s = haar_sample(g, seed, i);
    const auto ev = eigenvalues(s.matrix);
    bool separated = true;
    for (Eigen::Index a = 0; a < ev.size() && separated; ++a)
      for (Eigen::Index b = a + 1; b < ev.size(); ++b)
        if (std::abs(ev(a) - ev(b)) < gap_tol) separated = false;
    hit[i] = separated;
    residual[i] = unitarity_residual(s.matrix);
  });
  HaarEstimate est;
  est.group_label = g.label();
  est.n_samples = n_samples;
  est.tolerance = gap_tol;
  for (std::size_t i = 0; i < n_samples; ++i) {
    est.hits += hit[i];
    est.max_unitarity_residual = std::max(est.max_unitarity_residual, residual[i]);
  }
  est.rate = static_cast<double>(est.hits) / static_cast<double>(n_samples);
  est.predicted = Rational(1);
  judge(est);
  return est;
}

std::vector<HaarEstimate> su3_eigenvalue_one_decay(std::size_t n_samples,
                                                   const std::vector<double>& tols,
                                                   std::uint64_t seed, unsigned threads) {
  if (tols.empty()) throw InputError("need at least one tolerance");
  for (std::size_t i = 1; i < tols.size(); ++i)
    if (!(tols[i] < tols[i - 1])) throw InputError("tolerance list must be strictly decreasing");
  const HaarGroup su3{BaseGroup::SU3, 1};
  std::vector<HaarEstimate> out;
  for (double tol : tols) out.push_back(eigenvalue_one_rate(su3, n_samples, tol, 1, seed, threads));
  return out;
}

Json to_json(const HaarEstimate& e) {
  return Json{{"schema", "1"},
              {"group", e.group_label},
              {"samples", e.n_samples},
              {"tol", e.tolerance},
              {"hits", e.hits},
              {"rate", e.rate},
              {"predicted", e.predicted ? Json(rational_to_string(*e.predicted)) : Json(nullptr)},
              {"z_score", e.z_score ? Json(*e.z_score) : Json(nullptr)},
              {"verdict", !e.predicted ? "NO_PREDICTION" : (e.consistent ? "CONSISTENT" : "INCONSISTENT")}};
}

}  // namespace weakdiv
