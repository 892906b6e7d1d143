#include "adelic/upoly.hpp"

namespace adelic {

ScalarPoly scalar_poly(const std::vector<long>& coeffs, const BaseField& k) {
  std::vector<Scalar> c;
  c.reserve(coeffs.size());
  for (long v : coeffs) c.emplace_back(v, k);
  return ScalarPoly(std::move(c), Scalar::zero(k));
}

}  // namespace adelic
