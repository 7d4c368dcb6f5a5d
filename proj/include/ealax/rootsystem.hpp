#ifndef EALAX_ROOTSYSTEM_HPP
#define EALAX_ROOTSYSTEM_HPP

#include <map>
#include <string>
#include <vector>

#include "ealax/numbers.hpp"

namespace ealax {

enum class LieType : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

LieType lie_type_from_char(char c);

/// Finite root system with the bilinear form normalized so long roots have
/// square length 2.  Roots are integer coordinate vectors over the simple
/// basis; ids list the positive roots first (by height, then lexicographic),
/// followed by their negatives in the same order.
class RootSystem {
 public:
  RootSystem(LieType type, int rank);

  LieType type() const { return type_; }
  int rank() const { return rank_; }
  const std::vector<std::vector<int>>& cartan() const { return cartan_; }
  int npos() const { return npos_; }
  int nroots() const { return (int)roots_.size(); }

  const std::vector<int>& root(int id) const { return roots_[id]; }
  int root_id(const std::vector<int>& coords) const;  // -1 if not a root
  bool is_root(const std::vector<int>& coords) const { return root_id(coords) >= 0; }
  int negative(int id) const { return id < npos_ ? id + npos_ : id - npos_; }
  bool is_positive(int id) const { return id < npos_; }
  int height(int id) const;

  /// highest root
  int theta_id() const { return npos_ - 1; }

  const Rat& simple_len2(int i) const { return diag_[i]; }
  Rat form_simple(int i, int j) const;                 // (alpha_i, alpha_j)
  Rat form_coords(const std::vector<int>& u, const std::vector<int>& v) const;
  Rat form_coords_rat(const std::vector<Rat>& u, const std::vector<Rat>& v) const;
  Rat len2(int id) const { return form_coords(roots_[id], roots_[id]); }

  /// value beta(alpha_i^vee) = 2(beta,alpha_i)/(alpha_i,alpha_i)
  long eval_coroot(int i, const std::vector<int>& beta) const;

  /// coroot of root id, coordinates over the simple coroot basis
  std::vector<Rat> coroot_coords(int id) const;

  /// Gram matrix of the simple coroots
  Rat coroot_form(int i, int j) const;

  std::string name() const;

 private:
  LieType type_;
  int rank_;
  std::vector<std::vector<int>> cartan_;
  std::vector<Rat> diag_;  // (alpha_i, alpha_i)
  std::vector<std::vector<int>> roots_;
  std::map<std::vector<int>, int> index_;
  int npos_ = 0;
};

/// Chevalley structure constants resolved by the extraspecial-pair method.
/// [x_a, x_b] = N(a,b) x_{a+b} when a+b is a root, [x_a, x_{-a}] = a^vee,
/// and N(-a,-b) = -N(a,b).
class Chevalley {
 public:
  explicit Chevalley(const RootSystem& rs);

  const RootSystem& root_system() const { return *rs_; }

  /// N(a,b); 0 when a+b is neither a root nor zero
  long constant(int a, int b) const { return nmat_[a][b]; }

  /// id of a+b, or -1
  int sum_id(int a, int b) const { return sum_[a][b]; }

 private:
  long p_string(int a, int b) const;  // max k with b - k*a a root
  const RootSystem* rs_;
  std::vector<std::vector<long>> nmat_;
  std::vector<std::vector<int>> sum_;
};

}  // namespace ealax

#endif
