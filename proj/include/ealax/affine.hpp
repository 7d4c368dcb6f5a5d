#ifndef EALAX_AFFINE_HPP
#define EALAX_AFFINE_HPP

#include <memory>

#include "ealax/algebra.hpp"
#include "ealax/rootsystem.hpp"

namespace ealax {

/// Basis symbol of the underlying finite simple Lie algebra: a root vector
/// (by root id) or a simple coroot (by index).
struct GSym {
  bool root;
  int idx;
};

inline Key loop_root(Int m0, Int m1, int rid) {
  return Key(Kind::LoopRoot, rid, 0, std::move(m0), std::move(m1), 0);
}
inline Key loop_coroot(Int m0, Int m1, int i) {
  return Key(Kind::LoopCoroot, i, 0, std::move(m0), std::move(m1), 0);
}
inline Key key_k1() { return Key(Kind::KLine, 0, 0, 0, 0, 0); }
inline Key key_d1() { return Key(Kind::DLine, 0, 0, 0, 0, 0); }

/// Finite simple Lie algebra in a Chevalley basis, with the normalized
/// invariant form.  Shared by every loop construction downstream.
class FiniteLie {
 public:
  FiniteLie(LieType type, int rank) : rs_(type, rank), ch_(rs_) {}

  const RootSystem& rs() const { return rs_; }
  const Chevalley& ch() const { return ch_; }
  int rank() const { return rs_.rank(); }
  int dim() const { return rs_.nroots() + rs_.rank(); }

  GSym sym_of_key(const Key& k) const;
  Key key_of_sym(const GSym& s, const Int& m0, const Int& m1) const;
  std::vector<GSym> basis() const;

  /// flat numbering of the basis: roots first, then simple coroots
  int sym_id(const GSym& s) const { return s.root ? s.idx : rs_.nroots() + s.idx; }
  GSym sym_from_id(int id) const {
    return id < rs_.nroots() ? GSym{true, id} : GSym{false, id - rs_.nroots()};
  }

  /// [a, b] as a list of (symbol, coefficient); for opposite root vectors the
  /// result is the coroot expanded over simple coroots.
  std::vector<std::pair<GSym, Rat>> bracket_sym(const GSym& a, const GSym& b) const;

  Rat form_sym(const GSym& a, const GSym& b) const;

  /// epsilon = 2/(alpha,alpha) for a root
  Rat epsilon(int rid) const { return 2 / rs_.len2(rid); }

 private:
  RootSystem rs_;
  Chevalley ch_;
};

/// Untwisted affine Lie algebra over a finite simple algebra: loop keys
/// t1^n (x) v at t0-degree 0, plus k1 and d1.
class AffineAlgebra : public Algebra {
 public:
  AffineAlgebra(std::shared_ptr<const FiniteLie> g, int scalar_order = 1)
      : g_(std::move(g)), order_(scalar_order) {}

  const FiniteLie& g() const { return *g_; }
  std::shared_ptr<const FiniteLie> g_ptr() const { return g_; }

  std::string name() const override;
  int scalar_order() const override { return order_; }
  SparseVec bracket_keys(const Key& x, const Key& y) const override;
  Scalar form_keys(const Key& x, const Key& y) const override;
  bool has_form() const override { return true; }
  std::vector<Key> spanning_keys(long window) const override;

  /// affine Cartan matrix, indices 0..l
  std::vector<std::vector<long>> affine_cartan() const;

  /// simple root vectors x_{+-alpha_i}, i in 0..l
  SparseVec simple_vector(int i, bool positive) const;

  /// (alpha_i, alpha_i) for affine node i
  Rat node_len2(int i) const;

 private:
  std::shared_ptr<const FiniteLie> g_;
  int order_;
};

/// Diagram automorphism of the untwisted affine algebra, given by a
/// Cartan-preserving permutation of the affine nodes 0..l.  Carries the
/// induced finite-part automorphism (with resolved root-vector signs), the
/// degree shift rho, and the correction vector h appearing in the image of
/// d1.
class DiagramAut {
 public:
  DiagramAut(std::shared_ptr<const AffineAlgebra> aff, std::vector<int> perm);

  /// finite diagram automorphism of the underlying simple algebra, extended
  /// by fixing node 0
  static DiagramAut finite(std::shared_ptr<const AffineAlgebra> aff, std::vector<int> dot_perm);

  const AffineAlgebra& affine() const { return *aff_; }
  int order() const { return T_; }
  const std::vector<int>& perm() const { return perm_; }
  bool transitive() const;
  bool is_identity() const;

  int image_root(int rid) const { return mu_root_[rid]; }
  int sign(int rid) const { return sign_[rid]; }
  Int rho_root(int rid) const;
  Rat rho_coroot(int i) const { return rho_coroot_[i]; }
  Rat rho_h(const std::vector<Rat>& coroot_coords) const;
  std::vector<Rat> mu_dot_h(const std::vector<Rat>& coroot_coords) const;
  const std::vector<Rat>& hvec() const { return hvec_; }
  const Rat& hh() const { return hh_; }

  /// both displayed identities for the finite part of the automorphism:
  /// sum_p mu^p(h) = 0 and sum_{p>=1} (T-p)<mu^p h, h> + T<h,h>/2 = 0
  bool lemma_identities_hold() const;

  /// full action on the affine algebra
  SparseVec apply_affine(const SparseVec& x) const;
  /// finite part only (elements of the underlying simple algebra)
  SparseVec apply_g(const SparseVec& x) const;

 private:
  void build();
  std::shared_ptr<const AffineAlgebra> aff_;
  std::vector<int> perm_;
  int T_ = 1;
  std::vector<std::vector<int>> mu_lat_;  // image of simple root i, root coords
  std::vector<Int> rho_simple_;
  std::vector<int> mu_root_;
  std::vector<int> sign_;
  std::vector<std::vector<Rat>> mu_h_;  // columns: image of coroot i
  std::vector<Rat> rho_coroot_;
  std::vector<Rat> hvec_;
  Rat hh_;
};

/// a_(m) = sum_p w^{-mp} nu^p(a), the eigenspace component; `affine` selects
/// the action on affine keys versus the finite part
SparseVec eigenspace_component(const DiagramAut& nu, const SparseVec& a, const Int& m,
                               bool affine_action);

/// exponents for the integrability ideal generators: (node i, eps_i*l + 1)
std::vector<std::pair<int, Int>> ideal_generator_exponents(const AffineAlgebra& aff,
                                                           const Int& level);

/// Covariant algebra of the loop extension of the finite algebra by a finite
/// diagram automorphism: classes of t^m (x) v under the twisted
/// identifications, with the standard class bracket.
class CovariantLoopAlgebra : public Algebra {
 public:
  CovariantLoopAlgebra(std::shared_ptr<const AffineAlgebra> aff, DiagramAut nu);

  std::string name() const override;
  int scalar_order() const override { return aff_->scalar_order(); }
  SparseVec bracket_keys(const Key& x, const Key& y) const override;
  std::vector<Key> spanning_keys(long window) const override;

  /// class of t^m (x) basis-symbol, canonicalized
  SparseVec class_of(const Int& m, const GSym& s) const;
  static Key key_kbar() { return Key::simple(Kind::CovAffK); }

  /// image in the twisted affine subalgebra: class(t^m (x) a) -> t^m (x) a_(m),
  /// kbar -> N k1
  SparseVec to_twisted(const SparseVec& x, const AffineAlgebra& target) const;

  const DiagramAut& nu() const { return nu_; }

 private:
  int nsyms() const;
  GSym sym_of_id(int id) const;
  int id_of_sym(const GSym& s) const;
  void advance(GSym& s, Rat& coef) const;  // one application of nu with sign
  std::shared_ptr<const AffineAlgebra> aff_;
  DiagramAut nu_;
  int N_;
};

}  // namespace ealax

#endif
