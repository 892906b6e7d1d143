#include "adelic/act.hpp"

#include <algorithm>

namespace adelic {

namespace {

void sort_unique(std::vector<Point>& pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
}

}  // namespace

std::vector<Point> action_candidates(const ResidueComplexElement& phi, const Adele& a) {
  const Scheme& X = a.scheme();
  std::vector<RatFunc> functions;
  std::vector<Point> pts;
  a.collect_support(functions, pts);
  std::vector<Form> forms;
  for (const auto& f : functions) forms.push_back(Form::function(f));
  for (const auto& [p, e] : phi.terms()) {
    pts.push_back(p);
    if (p.is_generic()) forms.push_back(e.form());
    else if (p.is_curve()) forms.push_back(X.form_to_patch(Form::top(e.form_coeff()), p.patch(), 0));
  }
  for (const auto& w : forms) {
    auto d = pole_divisors(X, w);
    pts.insert(pts.end(), d.begin(), d.end());
  }
  pts.push_back(Point::generic(X));
  sort_unique(pts);
  if (X.dim() == 2) {
    std::vector<Point> curves;
    for (const auto& p : pts)
      if (p.is_curve()) curves.push_back(p);
    for (const auto& c : curves) {
      auto sp = special_points(c, curves);
      pts.insert(pts.end(), sp.begin(), sp.end());
    }
    sort_unique(pts);
  }
  return pts;
}

ResidueComplexElement act(const ResidueComplexElement& phi, const Adele& a, const std::vector<Point>& candidates, int cap) {
  ResidueComplexElement out;
  const int q = a.degree();
  for (const auto& [x, e] : phi.terms()) {
    if (x.dim() < q) continue;
    for (const auto& xi : saturated_chains_from(x, q, candidates)) {
      RatFunc r = a.evaluate(xi);
      if (r.is_zero()) continue;
      ResidueElement c = times_function(e, r);
      out.add(q == 0 ? c : delta_chain(c, xi, cap));
    }
  }
  return out;
}

ResidueComplexElement act(const ResidueComplexElement& phi, const Adele& a, int cap) {
  return act(phi, a, action_candidates(phi, a), cap);
}

Scalar residue_pairing(const ResidueComplexElement& phi, const Adele& a, int cap) {
  ResidueComplexElement r = act(phi, a, cap);
  Scalar s = residue_sum(r);
  return r.is_zero() ? Scalar::zero(a.scheme().base()) : s;
}

ResidueComplexElement regular_forms_map(const Form& alpha, const Adele& a, int cap) {
  return act(ResidueComplexElement(ResidueElement::generic(a.scheme(), alpha)), a, cap);
}

}  // namespace adelic
