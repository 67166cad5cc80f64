#include <doctest.h>

#include <random>
#include <vector>

#include "mpa/error.hpp"
#include "mpa/powerlaw.hpp"
#include "support/oracles.hpp"

using namespace mpa;

namespace {

std::vector<std::uint64_t> draw(double gamma, std::uint64_t k_min, std::size_t n,
                                std::uint64_t seed) {
  oracle::DiscretePowerLaw law(gamma, k_min);
  std::mt19937_64 rng(seed);
  std::vector<std::uint64_t> out(n);
  for (auto& x : out) x = law(rng);
  return out;
}

}  // namespace

TEST_CASE("oracle sampler reproduces its own probabilities") {
  oracle::DiscretePowerLaw law(2.5, 5);
  std::mt19937_64 rng(1);
  const int n = 200000;
  int at_min = 0;
  for (int i = 0; i < n; ++i) at_min += law(rng) == 5 ? 1 : 0;
  double z = 0.0;
  for (int k = 5; k < 2000000; ++k) z += std::pow(k, -2.5);
  const double p = std::pow(5.0, -2.5) / z;
  CHECK(std::abs(at_min / static_cast<double>(n) - p) < 4 * std::sqrt(p * (1 - p) / n));
}

TEST_CASE("discrete MLE recovers known exponents") {
  for (double gamma : {2.5, 3.0}) {
    const auto xs = draw(gamma, 5, 100000, 17);
    FitOptions known;
    known.k_min = 5;
    const auto fit = fit_power_law(xs, known);
    CHECK(fit.k_min == 5);
    CHECK(fit.n_tail == xs.size());
    CHECK(fit.gamma_hat == doctest::Approx(gamma).epsilon(0.02));

    const auto scanned = fit_power_law(xs);
    CHECK(scanned.gamma_hat == doctest::Approx(gamma).epsilon(0.04));
    CHECK(scanned.gamma_hat > 1.0);
    CHECK(scanned.n_tail >= 10);
  }
}

TEST_CASE("MLE and CCDF regression agree on clean power laws") {
  for (double gamma : {2.1, 2.5, 3.0}) {
    const auto xs = draw(gamma, 5, 100000, 23);
    FitOptions mle, reg;
    mle.k_min = reg.k_min = 5;
    reg.method = FitMethod::CcdfRegression;
    const double a = fit_power_law(xs, mle).gamma_hat;
    const double b = fit_power_law(xs, reg).gamma_hat;
    CHECK(std::abs(a - b) < 0.2);
  }
}

TEST_CASE("degenerate samples have no tail to fit") {
  const std::vector<std::uint64_t> same(500, 7);
  CHECK_THROWS_AS(fit_power_law(same), Error);
  const std::vector<std::uint64_t> few{5, 6, 7, 8, 9};
  CHECK_THROWS_AS(fit_power_law(few), Error);
  const std::vector<std::uint64_t> zeros(100, 0);
  try {
    fit_power_law(zeros);
    FAIL("expected InsufficientTail");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InsufficientTail);
  }
  FitOptions high;
  high.k_min = 1000;
  CHECK_THROWS_AS(fit_power_law(draw(2.5, 5, 1000, 1), high), Error);
}

TEST_CASE("fits ignore zeros and accept degree vectors") {
  auto xs = draw(2.5, 1, 20000, 5);
  std::vector<std::uint32_t> narrow(xs.begin(), xs.end());
  std::vector<std::uint32_t> padded = narrow;
  padded.insert(padded.end(), 5000, 0);
  FitOptions o;
  o.k_min = 2;
  CHECK(fit_power_law(narrow, o).gamma_hat == fit_power_law(padded, o).gamma_hat);
  CHECK(fit_power_law(narrow, o).gamma_hat == fit_power_law(xs, o).gamma_hat);
}
