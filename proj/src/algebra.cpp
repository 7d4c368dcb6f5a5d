#include "ealax/algebra.hpp"

namespace ealax {

Scalar Algebra::form_keys(const Key&, const Key&) const {
  throw Error(name() + ": no bilinear form declared");
}

SparseVec Algebra::bracket(const SparseVec& x, const SparseVec& y) const {
  SparseVec out;
  for (const auto& tx : x.terms())
    for (const auto& ty : y.terms()) {
      SparseVec part = bracket_keys(tx.first, ty.first);
      part.scale(tx.second * ty.second);
      out += part;
    }
  return out;
}

Scalar Algebra::form(const SparseVec& x, const SparseVec& y) const {
  Scalar out = zero_scalar();
  for (const auto& tx : x.terms())
    for (const auto& ty : y.terms()) out += tx.second * ty.second * form_keys(tx.first, ty.first);
  return out;
}

}  // namespace ealax
