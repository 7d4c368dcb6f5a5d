#ifndef EALAX_QTORUS_HPP
#define EALAX_QTORUS_HPP

#include <map>

#include "ealax/algebra.hpp"

namespace ealax {

/// t0^m0 t1^m1 in normal order; products commute past each other at the cost
/// of a q power: (t0^a t1^b)(t0^c t1^d) = q^{bc} t0^{a+c} t1^{b+d}.
struct QtMonomial {
  Int m0, m1;
};

/// (q-power exponent, normal-ordered product)
std::pair<Int, QtMonomial> qt_mul(const QtMonomial& x, const QtMonomial& y);

inline Key key_qt_e(int i, int j, Int m0, Int m1) {
  return Key(Kind::QtE, i, j, std::move(m0), std::move(m1), 0);
}
inline Key key_qt_h(int i) { return Key(Kind::QtH, i, 0, 0, 0, 0); }

/// The matrix extended affine algebra over the quantum torus: trace-zero
/// N x N matrices with quantum-torus entries, two central elements and the
/// two degree derivations.  The canonical basis keeps E_{i,j} t^m with i != j
/// or m != 0 and the constant-part combinations H_i = E_{i,i} - E_{i+1,i+1}.
class QtAlgebra : public Algebra {
 public:
  QtAlgebra(int n, int scalar_order = 1) : n_(n), order_(scalar_order) {
    if (n < 2) throw Error("matrix size must be at least 2");
  }

  int n() const { return n_; }

  std::string name() const override;
  int scalar_order() const override { return order_; }
  SparseVec bracket_keys(const Key& x, const Key& y) const override;
  Scalar form_keys(const Key& x, const Key& y) const override;
  bool has_form() const override { return true; }
  std::vector<Key> spanning_keys(long window) const override;

  void check_key(const Key& k) const;

  /// rewrite raw matrix-unit terms into the canonical trace-zero basis
  SparseVec canonicalize(const SparseVec& raw) const;

 private:
  int n_;
  int order_;
};

inline Key key_inf_e(Int r, Int s) { return Key(Kind::InfE, 0, 0, std::move(r), std::move(s), 0); }
inline Key key_inf_h(Int r) { return Key(Kind::InfH, 0, 0, std::move(r), 0, 0); }
inline Key key_tinf_e(Int a, Int r, Int s) {
  return Key(Kind::TInfE, 0, 0, std::move(a), std::move(r), std::move(s));
}
inline Key key_tinf_h(Int a, Int r) {
  return Key(Kind::TInfH, 0, 0, std::move(a), std::move(r), 0);
}

/// Doubly infinite trace-zero matrices: elements over E_{r,s} (r != s) and
/// H_r = E_{r,r} - E_{r+1,r+1}, with the entry-pairing form.  Operations are
/// exposed over an explicit gl-unit expansion.
namespace slinf {

using GlElem = std::map<std::pair<Int, Int>, Scalar>;  // (row, col) -> coeff

GlElem expand(const SparseVec& x, int order);
SparseVec collect(const GlElem& g, int order);  // diagonal parts telescope to H
GlElem gl_bracket(const GlElem& x, const GlElem& y, int order);
Scalar gl_form(const GlElem& x, const GlElem& y, int order);
GlElem shift(const GlElem& x, long nN);  // sigma_N^n with nN = n*N

/// block decomposition r = mN + i with 1 <= i <= N
std::pair<Int, long> block_of(const Int& r, int N);
/// deg E_{mN+i, nN+j} = n - m; H-keys have degree zero
Int grading_deg(const Key& k, int N);

}  // namespace slinf

/// sigma_N^n on an element of the trace-zero matrix algebra
SparseVec sigma_apply(int N, long n, const SparseVec& x, int order = 1);

/// the degree derivation lifted to the loop extension: scales every key by
/// its block degree and kills the central element
SparseVec p_derivation(int N, const SparseVec& x, int order = 1);

/// The loop extension of the infinite matrix algebra by the shift group:
/// classes of t^a (x) x with the twisted identification
/// (t^a (x) sigma^n x)~ = q^{-an} (t^a (x) x)~.  Canonical keys put the
/// column of E_{r,s} (resp. the row of H_r) into 1..N.
class CovSlInfAlgebra : public Algebra {
 public:
  CovSlInfAlgebra(int n, int scalar_order = 1) : n_(n), order_(scalar_order) {
    if (n < 2) throw Error("block size must be at least 2");
  }

  int n() const { return n_; }

  std::string name() const override;
  int scalar_order() const override { return order_; }
  SparseVec bracket_keys(const Key& x, const Key& y) const override;
  std::vector<Key> spanning_keys(long window) const override;

  static Key key_kbar() { return Key::simple(Kind::CovK); }

  /// canonical class of t^a (x) (basis symbol), with its q-power prefactor
  SparseVec normalize(const Int& a, const Key& inf_key) const;

 private:
  int n_;
  int order_;
};

/// the bracket-level correspondence: canonical covariant classes to elements
/// of the quantum-torus algebra
SparseVec correspondence_map(const CovSlInfAlgebra& cov, const SparseVec& x,
                             const QtAlgebra& target);

}  // namespace ealax

#endif
