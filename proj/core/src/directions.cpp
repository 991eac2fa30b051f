#include "spectral/directions.hpp"

#include <cmath>
#include <random>

#include "spectral/error.hpp"

namespace spectral {

namespace {

constexpr unsigned kPrimes[] = {2,  3,  5,  7,  11, 13, 17, 19, 23, 29, 31, 37, 41,
                                43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97};

double radical_inverse(std::uint64_t index, unsigned base) {
  double result = 0.0;
  double f = 1.0 / base;
  while (index > 0) {
    result += f * static_cast<double>(index % base);
    index /= base;
    f /= base;
  }
  return result;
}

// Top 53 bits of the engine output; std distributions are not portable.
double unit_uniform(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

std::vector<std::vector<double>> sphere_directions(std::size_t dim, std::size_t count,
                                                   std::uint64_t seed) {
  if (dim == 0) throw Error(ErrorCode::dimension, "sphere_directions: dimension must be positive");
  if (dim > std::size(kPrimes)) {
    throw Error(ErrorCode::dimension, "sphere_directions: dimension above " +
                                          std::to_string(std::size(kPrimes)));
  }
  std::mt19937_64 rng(seed);
  std::vector<double> shift(dim);
  for (double& s : shift) s = unit_uniform(rng);

  std::vector<std::vector<double>> out;
  out.reserve(count);
  std::vector<double> point(dim);
  for (std::uint64_t index = 1; out.size() < count; ++index) {
    double ssq = 0.0;
    for (std::size_t i = 0; i < dim; ++i) {
      double u = radical_inverse(index, kPrimes[i]) + shift[i];
      u -= std::floor(u);
      point[i] = 2.0 * u - 1.0;
      ssq += point[i] * point[i];
    }
    const double norm = std::sqrt(ssq);
    if (norm < 0.1 || norm > 1.0) continue;
    std::vector<double> d(point);
    for (double& v : d) v /= norm;
    out.push_back(std::move(d));
  }
  return out;
}

std::vector<std::vector<double>> axis_directions(std::size_t dim) {
  std::vector<std::vector<double>> out(dim, std::vector<double>(dim, 0.0));
  for (std::size_t i = 0; i < dim; ++i) out[i][i] = 1.0;
  return out;
}

}  // namespace spectral
