#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "weakdiv/errors.hpp"
#include "weakdiv/haar.hpp"

using namespace weakdiv;

TEST_CASE("group labels") {
  CHECK(parse_haar_group("SU2").base == BaseGroup::SU2);
  const auto g = parse_haar_group("muN_ext(3, SU2_sym2)");
  CHECK(g.scalar_order == 3);
  CHECK(g.base == BaseGroup::SU2_sym2);
  const auto h = parse_haar_group("muN:3:su2sym2");
  CHECK(h.scalar_order == 3);
  CHECK(h.base == BaseGroup::SU2_sym2);
  CHECK_THROWS_AS(parse_haar_group("Sp4"), InputError);
  CHECK_THROWS_AS(parse_haar_group("muN:0:SU2"), InputError);
}

TEST_CASE("samples lie in their groups") {
  for (const char* label : {"SU2", "SO3", "SU3", "SU2_sym2", "muN:3:su2sym2", "muN:4:SU3"}) {
    const auto g = parse_haar_group(label);
    for (std::uint64_t i = 0; i < 300; ++i) {
      const auto s = haar_sample(g, 99, i);
      CHECK(unitarity_residual(s.matrix) <= 1e-10);
      const std::complex<double> zeta = std::polar(1.0, 2 * std::numbers::pi * s.zeta_index / g.scalar_order);
      const Eigen::MatrixXcd inner = s.matrix / zeta;
      CHECK(std::abs(inner.determinant() - 1.0) <= 1e-10);
      if (g.base == BaseGroup::SO3 || g.base == BaseGroup::SU2_sym2) {
        CHECK(inner.imag().cwiseAbs().maxCoeff() <= 1e-10);
        const Eigen::MatrixXd r = inner.real();
        CHECK((r * r.transpose() - Eigen::MatrixXd::Identity(3, 3)).norm() <= 1e-10);
        CHECK(std::abs((r - Eigen::MatrixXd::Identity(3, 3)).determinant()) <= 1e-9);
      }
    }
  }
}

TEST_CASE("sampling is deterministic per index") {
  const auto g = parse_haar_group("SU3");
  CHECK(haar_sample(g, 5, 17).matrix == haar_sample(g, 5, 17).matrix);
  CHECK(haar_sample(g, 5, 17).matrix != haar_sample(g, 5, 18).matrix);
  CHECK(haar_sample(g, 5, 17).matrix != haar_sample(g, 6, 17).matrix);
}

TEST_CASE("SU2 trace has mean zero") {
  const auto g = parse_haar_group("SU2");
  const int n = 20000;
  double sum = 0, sq = 0;
  for (int i = 0; i < n; ++i) {
    const double t = haar_sample(g, 1, i).matrix.trace().real();
    sum += t;
    sq += t * t;
  }
  const double mean = sum / n;
  // The Haar second moment of the SU2 trace is 1.
  CHECK(std::abs(sq / n - 1.0) < 0.05);
  CHECK(std::abs(mean) <= 3.0 / std::sqrt(static_cast<double>(n)));
}

TEST_CASE("SU3 eigenvalue phases repel") {
  // Under Haar measure on SU3 the trace has E|tr|^2 = 1.
  const auto g = parse_haar_group("SU3");
  const int n = 20000;
  double sq = 0;
  for (int i = 0; i < n; ++i) sq += std::norm(haar_sample(g, 2, i).matrix.trace());
  CHECK(std::abs(sq / n - 1.0) < 0.05);
}

TEST_CASE("eigenvalue-one rates") {
  const auto so3 = eigenvalue_one_rate(parse_haar_group("SO3"), 20000, 1e-6, 1, 42);
  CHECK(so3.hits == so3.n_samples);
  CHECK(so3.consistent);
  const auto so3m2 = eigenvalue_one_rate(parse_haar_group("SO3"), 20000, 1e-6, 2, 42);
  CHECK(so3m2.hits <= 2);
  CHECK(so3m2.consistent);
  const auto ext = eigenvalue_one_rate(parse_haar_group("muN:3:su2sym2"), 20000, 1e-6, 1, 42);
  CHECK(ext.predicted == Rational(1, 3));
  CHECK(ext.consistent);
  CHECK(ext.structural_agreement >= 19980);
  const auto su3 = eigenvalue_one_rate(parse_haar_group("SU3"), 20000, 1e-6, 1, 42);
  CHECK(su3.predicted == Rational(0));
  CHECK(su3.hits <= 10);
  CHECK_THROWS_AS(eigenvalue_one_rate(parse_haar_group("SO3"), 10, 0.5, 1, 42), InputError);
  CHECK_THROWS_AS(eigenvalue_one_rate(parse_haar_group("SO3"), 10, 1e-6, 0, 42), InputError);
}

TEST_CASE("results do not depend on the thread count") {
  const auto g = parse_haar_group("muN:4:su2sym2");
  const auto a = eigenvalue_one_rate(g, 5000, 1e-6, 1, 7, 1);
  const auto b = eigenvalue_one_rate(g, 5000, 1e-6, 1, 7, 3);
  CHECK(a.hits == b.hits);
  CHECK(a.structural_hits == b.structural_hits);
  const auto c = regular_semisimple_rate(parse_haar_group("SU3"), 5000, 0.05, 7, 1);
  const auto d = regular_semisimple_rate(parse_haar_group("SU3"), 5000, 0.05, 7, 4);
  CHECK(c.hits == d.hits);
}

TEST_CASE("regular semisimple rate shrinks with the gap") {
  const auto g = parse_haar_group("SU3");
  std::size_t prev = 20001;
  for (double gap : {1e-4, 1e-3, 1e-2, 5e-2}) {
    const auto e = regular_semisimple_rate(g, 20000, gap, 3);
    CHECK(e.hits <= prev);
    prev = e.hits;
  }
  CHECK(regular_semisimple_rate(g, 20000, 1e-4, 3).rate >= 0.99);
}

TEST_CASE("SU3 eigenvalue-one decay") {
  const auto ests = su3_eigenvalue_one_decay(100000, {1e-1 / 2, 1e-2, 1e-3, 1e-4}, 42);
  REQUIRE(ests.size() == 4);
  CHECK(ests[1].rate < 0.05);
  CHECK(ests[3].rate < 0.001);
  // A 10x tolerance ratio gives roughly a 10x rate ratio.
  const double ratio = ests[1].rate / ests[2].rate;
  CHECK(ratio >= 2.0);
  CHECK(ratio <= 50.0);
  for (std::size_t i = 1; i < ests.size(); ++i) CHECK(ests[i].hits <= ests[i - 1].hits);
  CHECK_THROWS_AS(su3_eigenvalue_one_decay(10, {1e-3, 1e-2}, 1), InputError);
}

TEST_CASE("degenerate thresholds") {
  CHECK(degenerate_count_threshold(100000) == 10);
  CHECK(degenerate_count_threshold(1000000) == 100);
}
