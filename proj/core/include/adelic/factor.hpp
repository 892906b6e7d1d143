#pragma once

#include <utility>
#include <vector>

#include "adelic/upoly.hpp"

namespace adelic {

struct Factor {
  ScalarPoly poly;  ///< monic irreducible
  int multiplicity;
};

struct Factorization {
  Scalar unit;                  ///< leading coefficient of the input
  std::vector<Factor> factors;  ///< sorted by (degree, coefficients)

  ScalarPoly expand() const;
};

/// Over F_p: complete factorization (square-free split, distinct-degree,
/// Cantor-Zassenhaus equal-degree). Over Q: rational roots are split off and a
/// root-free cofactor of degree <= 3 is irreducible; any other cofactor raises
/// ErrorCode::UnsupportedFactorization.
Factorization factor_univariate(const ScalarPoly& a);

bool is_irreducible(const ScalarPoly& a);

/// Roots in k (with no multiplicity information), ascending.
std::vector<Scalar> roots_in_base(const ScalarPoly& a);

/// Square-free decomposition: a = unit * prod f_i^i.
std::vector<Factor> squarefree_decomposition(const ScalarPoly& a);

}  // namespace adelic
