#include "ealax/sparse.hpp"

#include <algorithm>
#include <map>

namespace ealax {

SparseVec SparseVec::unit(Key k, Scalar c) {
  SparseVec v;
  if (!c.is_zero()) v.t_.emplace_back(std::move(k), std::move(c));
  return v;
}

void SparseVec::add(const Key& k, const Scalar& c) {
  if (c.is_zero()) return;
  auto it = std::lower_bound(t_.begin(), t_.end(), k,
                             [](const Term& t, const Key& kk) { return t.first < kk; });
  if (it != t_.end() && it->first == k) {
    it->second += c;
    if (it->second.is_zero()) t_.erase(it);
  } else {
    t_.emplace(it, k, c);
  }
}

void SparseVec::add(const Key& k, Scalar&& c) {
  if (c.is_zero()) return;
  auto it = std::lower_bound(t_.begin(), t_.end(), k,
                             [](const Term& t, const Key& kk) { return t.first < kk; });
  if (it != t_.end() && it->first == k) {
    it->second += c;
    if (it->second.is_zero()) t_.erase(it);
  } else {
    t_.emplace(it, k, std::move(c));
  }
}

SparseVec& SparseVec::operator+=(const SparseVec& o) {
  for (const Term& t : o.t_) add(t.first, t.second);
  return *this;
}

SparseVec& SparseVec::operator-=(const SparseVec& o) {
  for (const Term& t : o.t_) add(t.first, -t.second);
  return *this;
}

SparseVec SparseVec::operator+(const SparseVec& o) const {
  SparseVec out = *this;
  out += o;
  return out;
}

SparseVec SparseVec::operator-(const SparseVec& o) const {
  SparseVec out = *this;
  out -= o;
  return out;
}

SparseVec SparseVec::operator-() const {
  SparseVec out = *this;
  for (Term& t : out.t_) t.second.negate();
  return out;
}

void SparseVec::scale(const Scalar& c) {
  if (c.is_zero()) {
    t_.clear();
    return;
  }
  std::vector<Term> out;
  out.reserve(t_.size());
  for (Term& t : t_) {
    Scalar s = t.second * c;
    if (!s.is_zero()) out.emplace_back(std::move(t.first), std::move(s));
  }
  t_ = std::move(out);
}

void SparseVec::scale_rat(const Rat& r) {
  if (r == 0) {
    t_.clear();
    return;
  }
  for (Term& t : t_) t.second.mul_rat(r);
}

void SparseVec::add_scaled(const SparseVec& w, const Scalar& c) {
  if (c.is_zero()) return;
  for (const Term& t : w.t_) add(t.first, t.second * c);
}

const Scalar* SparseVec::find(const Key& k) const {
  auto it = std::lower_bound(t_.begin(), t_.end(), k,
                             [](const Term& t, const Key& kk) { return t.first < kk; });
  if (it != t_.end() && it->first == k) return &it->second;
  return nullptr;
}

int exact_rank(const std::vector<SparseVec>& vs) {
  if (vs.empty()) return 0;
  // collect the key support
  std::map<Key, int> cols;
  int order = 1;
  for (const SparseVec& v : vs)
    for (const auto& t : v.terms()) {
      cols.emplace(t.first, 0);
      order = t.second.order();
    }
  int ncol = 0;
  for (auto& kv : cols) kv.second = ncol++;
  if (ncol == 0) return 0;

  std::vector<std::vector<Scalar>> m(vs.size(), std::vector<Scalar>(ncol, Scalar(order)));
  for (size_t i = 0; i < vs.size(); ++i)
    for (const auto& t : vs[i].terms()) m[i][cols[t.first]] = t.second;

  // Bareiss: fraction-free elimination; every division is exact in the ring.
  int rank = 0;
  Scalar prev(order, Rat(1));
  size_t nrow = m.size();
  for (int col = 0; col < ncol && rank < (int)nrow; ++col) {
    int piv = -1;
    for (size_t r = rank; r < nrow; ++r)
      if (!m[r][col].is_zero()) {
        piv = (int)r;
        break;
      }
    if (piv < 0) continue;
    std::swap(m[rank], m[piv]);
    for (size_t r = rank + 1; r < nrow; ++r) {
      for (int c2 = col + 1; c2 < ncol; ++c2)
        m[r][c2] = (m[rank][col] * m[r][c2] - m[r][col] * m[rank][c2]).divexact(prev);
      m[r][col] = Scalar(order);
    }
    prev = m[rank][col];
    ++rank;
  }
  return rank;
}

}  // namespace ealax
