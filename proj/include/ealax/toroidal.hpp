#ifndef EALAX_TOROIDAL_HPP
#define EALAX_TOROIDAL_HPP

#include <optional>

#include "ealax/affine.hpp"

namespace ealax {

/// Which double-loop algebra is being built:
///   T         central extension of the double-loop algebra (no derivations)
///   GTilde    T extended by the divergence-zero derivations
///   GHat      the t0-graded variant with the shifted skew derivations
///   GTildeTau GTilde with the cubic central cocycle on derivation pairs
enum class ToroidalFlavor { T, GTilde, GHat, GTildeTau };

inline Key key_k0() { return Key::simple(Kind::K0); }
inline Key key_d0() { return Key::simple(Kind::D0); }
inline Key key_kline(Int m0) { return Key(Kind::KLine, 0, 0, std::move(m0), 0, 0); }
inline Key key_kpair(Int m0, Int m1) {
  return Key(Kind::KPair, 0, 0, std::move(m0), std::move(m1), 0);
}
inline Key key_dline(Int m0) { return Key(Kind::DLine, 0, 0, std::move(m0), 0, 0); }
inline Key key_dtilde(Int m0, Int m1) {
  return Key(Kind::DTilde, 0, 0, std::move(m0), std::move(m1), 0);
}
inline Key key_dhat_t0() { return Key::simple(Kind::DHatT0); }
inline Key key_dhat(Int n, Int m) { return Key(Kind::DHat, 0, 0, std::move(n), std::move(m), 0); }

/// t0^m0 t1^m1 k_i expanded in the canonical central basis; encodes both the
/// exact-form relation m0 t^m k0 + m1 t^m k1 = 0 and the basis split.
SparseVec reduce_k(int order, const Int& m0, const Int& m1, int i);

/// the element k_{m0,m1} itself (zero when m0 = m1 = 0)
SparseVec kpair_elem(int order, const Int& m0, const Int& m1);

class ToroidalAlgebra : public Algebra {
 public:
  ToroidalAlgebra(std::shared_ptr<const FiniteLie> g, ToroidalFlavor flavor, int scalar_order = 1,
                  std::optional<Scalar> tau = std::nullopt);

  ToroidalFlavor flavor() const { return flavor_; }
  const FiniteLie& g() const { return *g_; }
  std::shared_ptr<const FiniteLie> g_ptr() const { return g_; }
  const Scalar& tau_param() const { return tau_; }

  std::string name() const override;
  int scalar_order() const override { return order_; }
  SparseVec bracket_keys(const Key& x, const Key& y) const override;
  Scalar form_keys(const Key& x, const Key& y) const override;
  bool has_form() const override { return flavor_ == ToroidalFlavor::GTilde || flavor_ == ToroidalFlavor::GTildeTau; }
  std::vector<Key> spanning_keys(long window) const override;

  /// t0-degree of a canonical key (the -ad d0 grading)
  static Int t0_degree(const Key& k);

  /// rewrite raw torus monomial terms into the flavor's canonical basis;
  /// throws when the element leaves the declared span
  SparseVec canonicalize(const SparseVec& raw) const;

  /// expansion of a canonical key into raw monomial terms
  SparseVec expand(const Key& k) const;

  void check_key(const Key& k) const;

 private:
  SparseVec bracket_raw(const Key& x, const Key& y) const;
  void tau_term(const Key& x, const Key& y, SparseVec& out) const;
  std::shared_ptr<const FiniteLie> g_;
  ToroidalFlavor flavor_;
  int order_;
  Scalar tau_;
};

/// The lifted automorphisms of the double-loop algebras induced by a diagram
/// automorphism of the affine subalgebra, and the averaging projection onto
/// the fixed subalgebra.
class ToroidalAut {
 public:
  ToroidalAut(std::shared_ptr<const ToroidalAlgebra> alg, DiagramAut mu);

  const ToroidalAlgebra& algebra() const { return *alg_; }
  const DiagramAut& mu() const { return mu_; }
  int order() const { return mu_.order(); }

  SparseVec mu_hat(const SparseVec& x) const;
  SparseVec mu_tilde(const SparseVec& x) const;
  /// eta(x) = sum_p mu_tilde^p(x), a projection onto the fixed subalgebra
  SparseVec eta(const SparseVec& x) const;

 private:
  SparseVec mu_hat_raw(const SparseVec& raw) const;
  std::shared_ptr<const ToroidalAlgebra> alg_;
  DiagramAut mu_;
};

/// Folded data of a nontransitive diagram automorphism: orbit representatives,
/// the orders T_i, the two-case flags s_i, the annihilator polynomials
/// p_i(z) = (1 - z^{s_i T_i})/(1 - z^{T_i}), and the folded Cartan matrix.
struct FoldedData {
  std::vector<int> reps;
  std::vector<int> orbit_size;   // per rep
  std::vector<int> Ti;           // per rep
  std::vector<int> si;           // per rep
  std::vector<std::vector<long>> cartan;  // folded matrix over reps
  std::vector<int> node_Ti, node_si;      // per affine node
  std::vector<int> node_rep;              // per affine node, index into reps
  /// ascending coefficients of p_i(z) for an affine node
  std::vector<Rat> p_poly(int node) const;
};

FoldedData folded_datum(const DiagramAut& mu);

/// affine generalized Cartan matrix test: integral, diagonal 2, nonpositive
/// off-diagonal with symmetric zeros, singular, and all proper principal
/// minors positive
bool is_affine_gcm(const std::vector<std::vector<long>>& a);

/// A root of the fixed subalgebra: rational coordinates over the affine root
/// lattice (finite part + delta_1 coefficient) plus the delta_0 coefficient.
struct TwistedRoot {
  std::vector<Rat> finite;  // over the simple roots of the finite algebra
  Rat d1;                   // delta_1 coefficient
  Rat d0;                   // delta_0 coefficient
  bool operator<(const TwistedRoot& o) const;
  bool operator==(const TwistedRoot& o) const;
};

/// the nonisotropic roots predicted for the fixed subalgebra, enumerated over
/// Weyl words of bounded length and |m| <= m_bound
std::vector<TwistedRoot> twisted_roots(const DiagramAut& mu, const FoldedData& fd, int weyl_len,
                                       long m_bound);

}  // namespace ealax

#endif
