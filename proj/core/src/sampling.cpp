#include "tubegeo/sampling.hpp"

#include <cmath>

namespace tubegeo {

namespace {
constexpr std::uint32_t kBases[] = {2, 3, 5, 7, 11, 13, 17, 19};
constexpr double kPi = 3.14159265358979323846;
}  // namespace

double radical_inverse(std::uint64_t i, std::uint32_t base) {
  double inv = 1.0 / static_cast<double>(base);
  double f = inv, r = 0.0;
  while (i > 0) {
    r += f * static_cast<double>(i % base);
    i /= base;
    f *= inv;
  }
  return r;
}

Eigen::VectorXd halton_point(std::uint64_t i, int d, std::uint64_t seed) {
  Eigen::VectorXd p(d);
  const std::uint64_t off = 1 + (seed % 65537);
  for (int k = 0; k < d; ++k) p[k] = radical_inverse(i + off, kBases[k % 8]);
  return p;
}

std::vector<Eigen::VectorXd> unit_sphere_points(int d, int count, std::uint64_t seed) {
  std::vector<Eigen::VectorXd> pts;
  pts.reserve(static_cast<std::size_t>(count));
  if (d == 1) {
    for (int i = 0; i < count; ++i) {
      Eigen::VectorXd v(1);
      v[0] = (i % 2 == 0) ? 1.0 : -1.0;
      pts.push_back(v);
    }
    return pts;
  }
  if (d == 2) {
    const double phase = 2.0 * kPi * radical_inverse(1 + (seed % 8191), 2);
    for (int i = 0; i < count; ++i) {
      const double th = phase + 2.0 * kPi * (i + 0.5) / count;
      Eigen::VectorXd v(2);
      v << std::cos(th), std::sin(th);
      pts.push_back(v);
    }
    return pts;
  }
  for (int i = 0; i < count; ++i) {
    Eigen::VectorXd h = halton_point(static_cast<std::uint64_t>(i), 2 * ((d + 1) / 2), seed);
    Eigen::VectorXd v(d);
    for (int k = 0; k < d; k += 2) {
      const double u1 = std::max(h[k], 1e-12), u2 = h[k + 1];
      const double r = std::sqrt(-2.0 * std::log(u1));
      v[k] = r * std::cos(2.0 * kPi * u2);
      if (k + 1 < d) v[k + 1] = r * std::sin(2.0 * kPi * u2);
    }
    pts.push_back(v.normalized());
  }
  return pts;
}

Rng::Rng(std::uint64_t seed) : s_(seed * 2685821657736338717ULL + 1442695040888963407ULL) {
  next_bits();
}

std::uint64_t Rng::next_bits() {
  // xorshift64*
  s_ ^= s_ >> 12;
  s_ ^= s_ << 25;
  s_ ^= s_ >> 27;
  return s_ * 2685821657736338717ULL;
}

double Rng::uniform() {
  return static_cast<double>(next_bits() >> 11) * (1.0 / 9007199254740992.0);
}

double Rng::uniform(double a, double b) { return a + (b - a) * uniform(); }

double Rng::gaussian() {
  if (have_spare_) {
    have_spare_ = false;
    return spare_;
  }
  const double u1 = std::max(uniform(), 1e-300), u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  spare_ = r * std::sin(2.0 * kPi * u2);
  have_spare_ = true;
  return r * std::cos(2.0 * kPi * u2);
}

Eigen::VectorXd Rng::gaussian_vector(int d) {
  Eigen::VectorXd v(d);
  for (int i = 0; i < d; ++i) v[i] = gaussian();
  return v;
}

Eigen::VectorXd Rng::unit_vector(int d) {
  Eigen::VectorXd v = gaussian_vector(d);
  while (v.norm() < 1e-8) v = gaussian_vector(d);
  return v.normalized();
}

}  // namespace tubegeo
