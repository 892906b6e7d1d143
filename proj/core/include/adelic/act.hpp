#pragma once

#include <vector>

#include "adelic/adele.hpp"
#include "adelic/residue.hpp"

namespace adelic {

/// Points through which a nonzero contribution phi_x . a_xi can pass: the
/// components of phi, explicit chain points of a, pole divisors of all forms
/// and values involved and, on planes, the special points of those curves.
std::vector<Point> action_candidates(const ResidueComplexElement& phi, const Adele& a);

/// phi . a = sum over x and saturated chains xi from x of
/// delta_xi(a_xi phi_x); non-saturated chains contribute nothing.
ResidueComplexElement act(const ResidueComplexElement& phi, const Adele& a, int cap = kDefaultOrderCap);
/// Same, with an explicit candidate set (a superset of the default gives the
/// same answer).
ResidueComplexElement act(const ResidueComplexElement& phi, const Adele& a, const std::vector<Point>& candidates,
                          int cap = kDefaultOrderCap);

/// Sum of residues of phi . a (degree 0 part).
Scalar residue_pairing(const ResidueComplexElement& phi, const Adele& a, int cap = kDefaultOrderCap);

/// alpha . a for a top form alpha (patch 0) viewed in K^{-n}.
ResidueComplexElement regular_forms_map(const Form& alpha, const Adele& a, int cap = kDefaultOrderCap);

}  // namespace adelic
