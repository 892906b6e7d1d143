#pragma once

#include <vector>

#include "adelic/act.hpp"
#include "adelic/completion.hpp"

namespace adelic {

using Matrix = std::vector<std::vector<Scalar>>;

int matrix_rank(Matrix m);

struct CohomologyDims {
  int h0 = 0;
  int h1 = 0;
};

/// h^0 and h^1 of O(n) = O(n * infinity) on the projective line from the
/// adele complex K + prod O_x(n) -> prod' K_x, truncated to the points
/// {0, 1, infinity} with pole orders bounded by `window` (0 picks |n| + 2).
CohomologyDims line_bundle_cohomology(const Scheme& X, int n, int window = 0);

/// Degree-1 adeles t^{-j} at (eta, 0), j = 1..n-1, representing H^1(O(-n)).
std::vector<Adele> h1_representatives(const Scheme& X, int n);
/// The forms t^i dt, i = 0..n-2, spanning H^0(Omega^1 (n)).
std::vector<RatFunc> h0_omega_basis(const Scheme& X, int n);
/// Residue pairing of the two bases above.
Matrix serre_pairing_matrix(const Scheme& X, int n);

/// The classical local component in K_x of a degree-1 adele on a line:
/// the expansion of its value at (eta, x).
Series classical_component(const Adele& a, const Point& x, int order);

}  // namespace adelic
