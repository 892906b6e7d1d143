#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "adelic/derham.hpp"

namespace adelic {

/// Seeded instance generator. Rational functions have numerators of degree
/// at most 4 and denominators drawn from a fixed factored pool per scheme,
/// so pole supports stay small.
class InstanceGenerator {
 public:
  InstanceGenerator(const Scheme& X, std::uint64_t seed);

  const Scheme& scheme() const noexcept { return X_; }
  std::mt19937_64& engine() noexcept { return rng_; }
  int uniform(int lo, int hi);
  bool coin() { return uniform(0, 1) == 1; }

  /// Denominator pool (patch-0 irreducible polynomials) and the points of the
  /// scheme they and their intersections define.
  const std::vector<Poly>& pool() const noexcept { return pool_; }
  const std::vector<Point>& points() const noexcept { return points_; }
  /// Saturated chains of the given length through pool points.
  std::vector<Chain> chains(int length) const;

  Scalar scalar(int range = 6);
  Scalar nonzero_scalar(int range = 6);
  Poly polynomial(int max_degree);
  /// Random function regular at every point of `regular` (patch 0).
  RatFunc function(int max_factors = 3, const std::vector<Point>& regular = {});
  /// Function with a pole of order at most 2 along at most `max_lines` pool
  /// factors and numerator of degree at most 4.
  Form top_form(int max_lines = 3);
  /// Polynomial p-form in patch 0.
  Form polynomial_form(int p, int max_degree = 2);

  /// A random element of the residue complex of degree q.
  ResidueComplexElement residue_element(int q);
  /// A random adele of degree q mixing explicit tables and symbolic cofaces.
  Adele adele(int q, bool symbolic = true);
  /// Explicit adele whose chains avoid the points in `avoid`.
  Adele explicit_adele(int q, const std::vector<Point>& avoid = {});
  /// A random dual form of bidegree (p, q).
  DualForm dual_form(int p, int q);
  /// A random adele form of bidegree (p, q), valid on every chain.
  AdeleForm adele_form(int p, int q);

 private:
  Scheme X_;
  std::mt19937_64 rng_;
  std::vector<Poly> pool_;
  std::vector<Point> points_;
};

/// 64-bit mix of a seed with a name and an index, stable across platforms.
std::uint64_t derive_seed(std::uint64_t seed, const std::string& name, std::uint64_t index);

}  // namespace adelic
