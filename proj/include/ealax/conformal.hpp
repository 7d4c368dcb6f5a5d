#ifndef EALAX_CONFORMAL_HPP
#define EALAX_CONFORMAL_HPP

#include "ealax/toroidal.hpp"

namespace ealax {

/// Conformal-algebra element keys for the algebra attached to an affine Lie
/// algebra: d^j (x) gen with gen one of
///   GLoop  t1^e0 (x) v_b      (v_b a basis symbol of the finite algebra)
///   GK1    the affine central generator
///   GD1    the affine degree generator
///   GKn    K_{e0}, e0 != 0
///   GDn    D_{e0}, e0 != 0
/// plus the central symbol k0.  The i-products are nonzero only for
/// i in {0,1} on generators; d-shifted products are derived on demand.
class ConformalCg {
 public:
  ConformalCg(std::shared_ptr<const FiniteLie> g, int scalar_order = 1, bool mutate_sign = false);

  const FiniteLie& g() const { return *g_; }
  std::shared_ptr<const FiniteLie> g_ptr() const { return g_; }
  int scalar_order() const { return order_; }
  bool mutated() const { return mutate_; }

  Key gen_key(CGen tag, int sym, const Int& param, const Int& dpow = 0) const;
  static Key key_cg_k0() { return Key::simple(Kind::CgK0); }

  /// all generators with window-bounded internal indices
  std::vector<Key> generators(long window) const;

  /// i-th product of two elements written over CgGen / CgK0 keys
  SparseVec iproduct(const SparseVec& x, long i, const SparseVec& y) const;

  /// d-derivative of an element
  SparseVec del(const SparseVec& x) const;

  /// upper bound for nonvanishing i-products of two elements
  long product_bound(const SparseVec& x, const SparseVec& y) const;

  /// i-th product of two bare generators (the stored table)
  SparseVec gen_product(const Key& x, long i, const Key& y) const;

 private:
  std::shared_ptr<const FiniteLie> g_;
  int order_;
  bool mutate_;
};

/// The Lie algebra on gen(m) keys with
/// [x(m), y(n)] = sum_i binom(m,i) (x_i y)(m+n-i).
class HatCAlgebra : public Algebra {
 public:
  explicit HatCAlgebra(std::shared_ptr<const ConformalCg> cg) : cg_(std::move(cg)) {}
  const ConformalCg& cg() const { return *cg_; }

  std::string name() const override;
  int scalar_order() const override { return cg_->scalar_order(); }
  SparseVec bracket_keys(const Key& x, const Key& y) const override;
  std::vector<Key> spanning_keys(long window) const override;

  /// gen(m) key; k0(m) collapses to the single surviving component
  SparseVec element(const Key& cg_elem_key, const Int& m) const;

 private:
  std::shared_ptr<const ConformalCg> cg_;
};

/// The Lie algebra on gen[m] keys and the degree derivation, with
/// [x[m], y[n]] = sum_i m^i/i! (x_i y)[m+n] and [d, x[m]] = -m x[m].
class TildeCAlgebra : public Algebra {
 public:
  explicit TildeCAlgebra(std::shared_ptr<const ConformalCg> cg) : cg_(std::move(cg)) {}
  const ConformalCg& cg() const { return *cg_; }

  std::string name() const override;
  int scalar_order() const override { return cg_->scalar_order(); }
  SparseVec bracket_keys(const Key& x, const Key& y) const override;
  std::vector<Key> spanning_keys(long window) const override;

  SparseVec element(const Key& cg_elem_key, const Int& m) const;
  static Key key_d() { return Key::simple(Kind::CTildeD); }

 private:
  std::shared_ptr<const ConformalCg> cg_;
};

/// A conformal-algebra map that commutes with d, lifted to the associated
/// Lie algebras by acting on the generator inside each key.
class ConformalAut {
 public:
  /// the concrete twist R induced by a diagram automorphism of the affine
  /// algebra underneath
  ConformalAut(std::shared_ptr<const ConformalCg> cg, DiagramAut mu);

  const DiagramAut& mu() const { return mu_; }
  int order() const { return mu_.order(); }

  /// action on conformal-algebra elements (CgGen / CgK0 keys)
  SparseVec apply_cg(const SparseVec& x) const;
  /// lift to gen(m) keys
  SparseVec apply_hat(const SparseVec& x) const;
  /// twisted lift to gen[m] keys: gen[m] -> w^{-m} (R gen)[m], d fixed
  SparseVec apply_tilde_bar(const SparseVec& x) const;

 private:
  std::shared_ptr<const ConformalCg> cg_;
  DiagramAut mu_;
};

/// Covariant algebra of the conformal algebra under the cyclic twist group:
/// classes are represented by arbitrary gen[m] sums; zero test averages over
/// the group.
class CovariantCgAlgebra : public Algebra {
 public:
  CovariantCgAlgebra(std::shared_ptr<const TildeCAlgebra> tc, ConformalAut r);

  const TildeCAlgebra& tilde() const { return *tc_; }
  const ConformalAut& twist() const { return r_; }

  std::string name() const override;
  int scalar_order() const override { return tc_->scalar_order(); }
  SparseVec bracket_keys(const Key& x, const Key& y) const override;
  std::vector<Key> spanning_keys(long window) const override;
  bool is_zero_element(const SparseVec& v) const override;

  /// the group average (T times the class projection)
  SparseVec average(const SparseVec& x) const;

 private:
  std::shared_ptr<const TildeCAlgebra> tc_;
  ConformalAut r_;
};

/// maps for the two structural isomorphism checks
SparseVec hatc_to_ghat(const ConformalCg& cg, const SparseVec& x, const ToroidalAlgebra& ghat);
SparseVec tildec_to_gtilde(const ConformalCg& cg, const SparseVec& x, const ToroidalAut& aut);

}  // namespace ealax

#endif
