#ifndef EALAX_SPARSE_HPP
#define EALAX_SPARSE_HPP

#include <utility>
#include <vector>

#include "ealax/key.hpp"
#include "ealax/numbers.hpp"

namespace ealax {

/// Finite sparse Scalar-linear combination of Keys, kept sorted by key with
/// no zero entries.  This is the canonical form every operation returns.
class SparseVec {
 public:
  using Term = std::pair<Key, Scalar>;

  SparseVec() = default;
  static SparseVec unit(Key k, Scalar c);

  bool is_zero() const { return t_.empty(); }
  std::size_t size() const { return t_.size(); }
  const std::vector<Term>& terms() const { return t_; }
  std::vector<Term>& terms_mut() { return t_; }

  void add(const Key& k, const Scalar& c);
  void add(const Key& k, Scalar&& c);
  SparseVec& operator+=(const SparseVec& o);
  SparseVec& operator-=(const SparseVec& o);
  SparseVec operator+(const SparseVec& o) const;
  SparseVec operator-(const SparseVec& o) const;
  SparseVec operator-() const;

  void scale(const Scalar& c);
  void scale_rat(const Rat& r);

  /// this + c*w, the canonical combination primitive
  void add_scaled(const SparseVec& w, const Scalar& c);

  const Scalar* find(const Key& k) const;

  bool operator==(const SparseVec& o) const { return t_ == o.t_; }
  bool operator!=(const SparseVec& o) const { return !(*this == o); }

 private:
  std::vector<Term> t_;
};

inline SparseVec vec_combine(const SparseVec& v, const SparseVec& w, const Scalar& c) {
  SparseVec out = v;
  out.add_scaled(w, c);
  return out;
}

/// Rank of the span over the fraction field of the scalar ring, by
/// fraction-free (Bareiss) elimination.
int exact_rank(const std::vector<SparseVec>& vs);

}  // namespace ealax

#endif
