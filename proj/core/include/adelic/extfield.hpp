#pragma once

#include <memory>
#include <string>
#include <vector>

#include "adelic/scalar.hpp"
#include "adelic/upoly.hpp"

namespace adelic {

/// Simple extension k[a]/(m(a)) of the base field, degree at most 4.
/// Degree-1 instances stand for k itself so rational and non-rational residue
/// fields share one element type.
class ExtField {
 public:
  static constexpr int kMaxDegree = 4;

  /// Irreducibility is verified over F_p; over Q degree <= 3 is verified by a
  /// rational root search and degree 4 is trusted after the same search.
  static std::shared_ptr<const ExtField> make(const ScalarPoly& minpoly);
  static std::shared_ptr<const ExtField> trivial(const BaseField& k);

  const BaseField& base() const noexcept { return base_; }
  const ScalarPoly& minpoly() const noexcept { return minpoly_; }
  int degree() const noexcept { return minpoly_.degree(); }
  bool is_trivial() const noexcept { return degree() == 1; }
  std::string name() const;

  bool same_as(const ExtField& o) const { return base_ == o.base_ && minpoly_ == o.minpoly_; }

 private:
  ExtField(BaseField base, ScalarPoly minpoly) : base_(base), minpoly_(std::move(minpoly)) {}
  BaseField base_;
  ScalarPoly minpoly_;
};

using ExtFieldPtr = std::shared_ptr<const ExtField>;

class FieldElem {
 public:
  FieldElem() = default;
  FieldElem(ExtFieldPtr F, const Scalar& s);
  FieldElem(ExtFieldPtr F, const ScalarPoly& rep);

  static FieldElem generator(const ExtFieldPtr& F);

  const ExtFieldPtr& field() const noexcept { return F_; }
  const std::vector<Scalar>& coords() const noexcept { return c_; }
  /// Representative polynomial in the generator, degree < [F:k].
  ScalarPoly rep() const;

  bool is_zero() const;
  bool is_one() const;
  bool is_base() const;        ///< lies in k
  Scalar base_value() const;   ///< requires is_base()

  FieldElem zero_like() const { return FieldElem(F_, Scalar::zero(F_->base())); }
  FieldElem one_like() const { return FieldElem(F_, Scalar::one(F_->base())); }

  FieldElem operator-() const;
  FieldElem inverse() const;
  friend FieldElem operator+(const FieldElem& a, const FieldElem& b);
  friend FieldElem operator-(const FieldElem& a, const FieldElem& b);
  friend FieldElem operator*(const FieldElem& a, const FieldElem& b);
  friend FieldElem operator*(const Scalar& a, const FieldElem& b);
  FieldElem& operator+=(const FieldElem& b) { return *this = *this + b; }
  FieldElem& operator*=(const FieldElem& b) { return *this = *this * b; }
  FieldElem pow(long e) const;

  friend bool operator==(const FieldElem& a, const FieldElem& b);
  friend bool operator!=(const FieldElem& a, const FieldElem& b) { return !(a == b); }

  /// Tr_{F/k}.
  Scalar trace() const;
  /// Minimal polynomial over k (monic).
  ScalarPoly minimal_polynomial() const;

  std::string str() const;

 private:
  ExtFieldPtr F_;
  std::vector<Scalar> c_;
};

/// Image of `e` under the k-embedding F -> G determined by generator -> image.
FieldElem embed(const FieldElem& e, const FieldElem& image_of_generator);

}  // namespace adelic
