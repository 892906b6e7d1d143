#pragma once

#include "adelic/p1map.hpp"
#include "adelic/residue.hpp"

namespace adelic {

/// Tr_{K/L} for the function-field extension k(t) / k(phi(t)); the result is
/// written in the downstairs coordinate (also named t).
RatFunc trace_function(const P1Map& f, const RatFunc& h);
/// Tr(g dt) = trace_form(f, g) dt downstairs.
RatFunc trace_form(const P1Map& f, const RatFunc& g);

/// Tr_f on one component: forms at the generic point; functionals at closed
/// points are precomposed with f^*.
ResidueElement trace_component(const P1Map& f, const ResidueElement& phi);
ResidueComplexElement trace_pushforward(const P1Map& f, const ResidueComplexElement& phi);

}  // namespace adelic
