#ifndef EALAX_VERIFY_HPP
#define EALAX_VERIFY_HPP

#include <functional>

#include "ealax/conformal.hpp"
#include "ealax/qtorus.hpp"
#include "ealax/toroidal.hpp"

namespace ealax {

/// Machine-readable pass/fail record with counterexample payloads.
struct VerificationReport {
  std::string suite;
  long checks = 0;
  long failure_count = 0;
  struct Failure {
    std::string inputs;
    std::string expected;
    std::string got;
  };
  std::vector<Failure> failures;  // first few counterexamples
  double wall_ms = 0;
  std::vector<std::pair<std::string, std::string>> notes;  // extra data, stable order

  bool ok() const { return failure_count == 0; }
  void fail(std::string inputs, std::string expected, std::string got);
  std::string summary() const;
};

/// antisymmetry + Jacobi, exhaustive over unordered spanning triples
VerificationReport verify_jacobi(const Algebra& alg, long window, int threads = 0);

/// mu^T = id on the affine algebra, mu-hat^T = mu-tilde^T = id on the
/// double-loop algebra, bracket/form preservation on seeded pairs, and the
/// two closure identities of the finite part
VerificationReport verify_automorphism(const ToroidalAlgebra& gt, const DiagramAut& mu,
                                       long window, long pairs, unsigned long seed);

/// <mu-tilde x, mu-tilde y> = <x,y> on all bounded spanning pairs, plus
/// invariance of the form on seeded triples
VerificationReport verify_form(const ToroidalAlgebra& gt, const DiagramAut& mu, long window,
                               long triples, unsigned long seed);
VerificationReport verify_form_qt(const QtAlgebra& qt, long window, long triples,
                                  unsigned long seed);

/// the t-graded conformal Lie algebra maps onto the shifted-derivation
/// double-loop algebra
VerificationReport verify_iso_hat(std::shared_ptr<const FiniteLie> g, long window);

/// the covariant conformal algebra maps onto the fixed subalgebra
VerificationReport verify_iso_cov(std::shared_ptr<const FiniteLie> g,
                                  const std::vector<int>& perm, long window);

/// covariant loop classes map onto the twisted affine subalgebra
VerificationReport verify_twisted_affine_iso(std::shared_ptr<const FiniteLie> g,
                                             const std::vector<int>& dot_perm, long window);

/// folded data of a diagram automorphism; the report notes carry the matrix
VerificationReport verify_folded(const DiagramAut& mu);

/// root-space sweep of the fixed subalgebra against the predicted root list
VerificationReport verify_roots(std::shared_ptr<const FiniteLie> g, const std::vector<int>& perm,
                                long window, int weyl_len);

/// sum_k c_k [x_{a+k}, x_{b-k}] = 0 over the window, c = coefficients of p
VerificationReport verify_annihilation(const Algebra& alg,
                                       const std::function<SparseVec(long)>& component,
                                       const std::vector<Rat>& p, long window,
                                       const std::string& label);

/// affine eigenspace-family annihilation for a finite-part automorphism
VerificationReport verify_annihilation_affine(std::shared_ptr<const FiniteLie> g,
                                              const std::vector<int>& dot_perm, int root_id,
                                              long window);

/// fixed-subalgebra annihilation for node i of the affine diagram
VerificationReport verify_annihilation_fixed(std::shared_ptr<const FiniteLie> g,
                                             const std::vector<int>& perm, int node, long window,
                                             bool positive = true);

/// two-sided check of the covariant/quantum-torus correspondence
VerificationReport verify_correspondence(int N, long window);

/// [coefficients of (E_{ij}t1^m)[z1], coefficients of (E_{ij}t1^m)[z2]] = 0
VerificationReport verify_offdiag(int N, int i, int j, long m, long window);

/// antisymmetry + Jacobi for the t-graded conformal algebra, with an optional
/// deliberately corrupted product table
VerificationReport verify_conformal_axioms(std::shared_ptr<const FiniteLie> g, long window,
                                           bool mutate = false);

}  // namespace ealax

#endif
