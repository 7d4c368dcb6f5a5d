#ifndef EALAX_ALGEBRA_HPP
#define EALAX_ALGEBRA_HPP

#include <string>
#include <vector>

#include "ealax/sparse.hpp"

namespace ealax {

/// A constructed algebra: key grammar, bracket rule, optional bilinear form.
/// Elements are SparseVecs over the grammar; every operation returns
/// canonical reduced form.
class Algebra {
 public:
  virtual ~Algebra() = default;

  virtual std::string name() const = 0;
  virtual int scalar_order() const = 0;
  virtual SparseVec bracket_keys(const Key& x, const Key& y) const = 0;
  virtual Scalar form_keys(const Key& x, const Key& y) const;
  virtual bool has_form() const { return false; }

  /// spanning symbols with all window-bounded indices in [-w, w]
  virtual std::vector<Key> spanning_keys(long window) const = 0;

  /// zero test in the algebra; quotient algebras refine this
  virtual bool is_zero_element(const SparseVec& v) const { return v.is_zero(); }

  SparseVec bracket(const SparseVec& x, const SparseVec& y) const;
  Scalar form(const SparseVec& x, const SparseVec& y) const;

  Scalar zero_scalar() const { return Scalar(scalar_order()); }
  Scalar one_scalar() const { return Scalar(scalar_order(), Rat(1)); }
  Scalar rat_scalar(const Rat& r) const { return Scalar(scalar_order(), r); }
  Scalar int_scalar(const Int& n) const { return Scalar(scalar_order(), Rat(n)); }
};

}  // namespace ealax

#endif
