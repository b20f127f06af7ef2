#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

namespace tubegeo {

// Deterministic sampling helpers. Every report embeds the seed; given it,
// sequences below are reproducible bit-for-bit on any platform (no
// implementation-defined std:: distributions are used).

// Radical-inverse (van der Corput) value of index i in the given base.
double radical_inverse(std::uint64_t i, std::uint32_t base);

// Halton point #i in [0,1)^d (bases 2,3,5,...), offset by the seed.
Eigen::VectorXd halton_point(std::uint64_t i, int d, std::uint64_t seed);

// Low-discrepancy points on the unit sphere S^{d-1}. d==1 alternates {+1,-1};
// d==2 uses equally spaced angles; higher d maps Halton pairs through
// Box-Muller and normalizes.
std::vector<Eigen::VectorXd> unit_sphere_points(int d, int count, std::uint64_t seed);

// Minimal xorshift-based uniform/gaussian generator (pinned algorithm).
class Rng {
 public:
  explicit Rng(std::uint64_t seed);
  double uniform();                  // [0,1)
  double uniform(double a, double b);
  double gaussian();                 // Box-Muller
  Eigen::VectorXd gaussian_vector(int d);
  Eigen::VectorXd unit_vector(int d);

 private:
  std::uint64_t next_bits();
  std::uint64_t s_;
  bool have_spare_ = false;
  double spare_ = 0;
};

}  // namespace tubegeo
