#include <cmath>

#include "doctest.h"
#include "spectral/error.hpp"
#include "spectral/fd_oracle.hpp"

using namespace spectral;

namespace {

double norm2(std::span<const double> x) {
  double ssq = 0.0;
  for (double v : x) ssq += v * v;
  return std::sqrt(ssq);
}

}  // namespace

TEST_CASE("norm at the origin has unit one-sided slope in every direction") {
  const std::vector<double> origin = {0.0, 0.0};
  for (const std::vector<double>& d : {std::vector<double>{1.0, 0.0},
                                       std::vector<double>{0.6, 0.8},
                                       std::vector<double>{-0.28, 0.96}}) {
    const FDEstimate up = fd_directional(norm2, origin, d, 1e-3);
    CHECK(std::abs(up.extrapolated - 1.0) <= 1e-8);
    CHECK(up.trusted());
    const FDEstimate down = fd_directional([](auto x) { return -norm2(x); }, origin, d, 1e-3);
    CHECK(std::abs(down.extrapolated + 1.0) <= 1e-8);
  }
}

TEST_CASE("linear function gives a constant quotient") {
  const std::vector<double> x0 = {0.3, -1.0};
  const std::vector<double> d = {1.0, 0.0};
  const FDEstimate est =
      fd_directional([](auto x) { return 2.0 * x[0] + x[1]; }, x0, d, 1e-3);
  for (const auto& [h, q] : est.step_sequence) CHECK(q == doctest::Approx(2.0).epsilon(1e-12));
  // Richardson weights amplify the ~1e-13 quotient roundoff.
  CHECK(std::abs(est.extrapolated - 2.0) <= 1e-10);
  CHECK(est.step_sequence.size() == 6);
  for (std::size_t k = 1; k < est.step_sequence.size(); ++k)
    CHECK(est.step_sequence[k].first < est.step_sequence[k - 1].first);
}

TEST_CASE("Richardson removes the leading one-sided error terms") {
  // exp along x: quotients carry every power of h.
  const std::vector<double> x0 = {0.5};
  const std::vector<double> d = {1.0};
  const FDEstimate est = fd_directional([](auto x) { return std::exp(x[0]); }, x0, d, 1e-2);
  CHECK(std::abs(est.value - std::exp(0.5)) > 1e-5);
  CHECK(std::abs(est.extrapolated - std::exp(0.5)) <= 1e-10);
}

TEST_CASE("gradient of polynomials") {
  const std::vector<double> x0 = {3.0};
  const auto g = fd_gradient([](auto x) { return x[0] * x[0]; }, x0, 1e-3);
  CHECK(std::abs(g[0] - 6.0) <= 1e-9);

  const std::vector<double> y0 = {0.5, -2.0, 1.0};
  const auto h = fd_gradient(
      [](auto x) { return 3 * x[0] * x[0] - x[0] * x[1] + 0.5 * x[2] * x[2] + 7 * x[1]; }, y0,
      1e-3);
  CHECK(std::abs(h[0] - (6 * 0.5 + 2.0)) <= 1e-10);
  CHECK(std::abs(h[1] - (-0.5 + 7.0)) <= 1e-10);
  CHECK(std::abs(h[2] - 1.0) <= 1e-10);
}

TEST_CASE("differentiability probe: forward and reflected slopes") {
  const std::vector<double> x0 = {0.2, 0.1};
  const std::vector<double> d = {0.6, 0.8};
  const std::vector<double> minus = {-0.6, -0.8};
  auto smooth = [](auto x) { return std::sin(x[0]) * x[1] + x[0] * x[0]; };
  const double fwd = fd_directional(smooth, x0, d, 1e-3).extrapolated;
  const double bwd = fd_directional(smooth, x0, minus, 1e-3).extrapolated;
  CHECK(std::abs(fwd + bwd) <= 1e-6);

  const std::vector<double> origin = {0.0, 0.0};
  const double kink_fwd = fd_directional(norm2, origin, d, 1e-3).extrapolated;
  const double kink_bwd = fd_directional(norm2, origin, minus, 1e-3).extrapolated;
  CHECK(std::abs(kink_fwd + kink_bwd) > 1.0);
}

TEST_CASE("errors") {
  const std::vector<double> x0 = {0.0};
  const std::vector<double> d = {1.0};
  auto f = [](auto x) { return x[0]; };
  CHECK_THROWS_AS(fd_directional(f, x0, d, 0.0), Error);
  CHECK_THROWS_AS(fd_directional(f, x0, d, 1e-3, 2), Error);
  CHECK_THROWS_AS(fd_directional([](auto) { return NAN; }, x0, d, 1e-3), Error);
  CHECK_THROWS_AS(fd_gradient([](auto x) { return std::log(x[0]); }, x0, 1e-3), Error);
}

TEST_CASE("default step") {
  const std::vector<double> small = {0.1, 0.1};
  const std::vector<double> large = {30.0, 40.0};
  CHECK(default_fd_step(small) == 1e-3);
  CHECK(default_fd_step(large) == doctest::Approx(5e-2));
}
