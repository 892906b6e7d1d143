#pragma once

#include <string>

#include "adelic/form.hpp"

namespace adelic {

/// Expression parser for polynomials, rational functions and forms.
///
/// Grammar: + - * / ^ with parentheses, integer literals, the variables in
/// `vars` (any of t, x, y, u, v, s1, s2) and their differentials (dt, dx, ...).
/// A ^ between differentials is the wedge product, and a differential may
/// follow a coefficient without an explicit * ("x dy", "1/(s1*s2) ds1^ds2").
/// Denominators must be products of powers of atoms; each parenthesized atom
/// is one denominator factor (univariate atoms are factored further).
Form parse_form(const std::string& text, const Vars& vars, const BaseField& k);
RatFunc parse_ratfunc(const std::string& text, const Vars& vars, const BaseField& k);
Poly parse_poly(const std::string& text, const Vars& vars, const BaseField& k);

}  // namespace adelic
