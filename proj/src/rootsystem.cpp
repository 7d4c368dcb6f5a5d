#include "ealax/rootsystem.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

namespace ealax {

LieType lie_type_from_char(char c) {
  switch (c) {
    case 'A': return LieType::A;
    case 'B': return LieType::B;
    case 'C': return LieType::C;
    case 'D': return LieType::D;
    case 'E': return LieType::E;
    case 'F': return LieType::F;
    case 'G': return LieType::G;
    default: throw Error(std::string("unknown Lie type '") + c + "'");
  }
}

namespace {

void check_rank(LieType t, int l) {
  bool ok = false;
  switch (t) {
    case LieType::A: ok = l >= 1; break;
    case LieType::B: ok = l >= 2; break;
    case LieType::C: ok = l >= 2; break;
    case LieType::D: ok = l >= 4; break;
    case LieType::E: ok = l >= 6 && l <= 8; break;
    case LieType::F: ok = l == 4; break;
    case LieType::G: ok = l == 2; break;
  }
  if (!ok || l > 8) throw Error("unsupported type/rank");
}

size_t expected_count(LieType t, int l) {
  switch (t) {
    case LieType::A: return (size_t)l * (l + 1);
    case LieType::B:
    case LieType::C: return (size_t)2 * l * l;
    case LieType::D: return (size_t)2 * l * (l - 1);
    case LieType::E: return l == 6 ? 72 : (l == 7 ? 126 : 240);
    case LieType::F: return 48;
    case LieType::G: return 12;
  }
  return 0;
}

}  // namespace

RootSystem::RootSystem(LieType type, int rank) : type_(type), rank_(rank) {
  check_rank(type, rank);
  int l = rank;
  cartan_.assign(l, std::vector<int>(l, 0));
  for (int i = 0; i < l; ++i) cartan_[i][i] = 2;
  diag_.assign(l, Rat(2));
  auto chain = [&](int i, int j) { cartan_[i][j] = cartan_[j][i] = -1; };
  switch (type) {
    case LieType::A:
      for (int i = 0; i + 1 < l; ++i) chain(i, i + 1);
      break;
    case LieType::B:
      for (int i = 0; i + 2 < l; ++i) chain(i, i + 1);
      cartan_[l - 2][l - 1] = -1;
      cartan_[l - 1][l - 2] = -2;
      diag_[l - 1] = 1;
      break;
    case LieType::C:
      for (int i = 0; i + 2 < l; ++i) chain(i, i + 1);
      cartan_[l - 2][l - 1] = -2;
      cartan_[l - 1][l - 2] = -1;
      for (int i = 0; i + 1 < l; ++i) diag_[i] = 1;
      break;
    case LieType::D:
      for (int i = 0; i + 3 < l; ++i) chain(i, i + 1);
      chain(l - 3, l - 2);
      chain(l - 3, l - 1);
      break;
    case LieType::E:
      // Bourbaki: chain 1-3-4-5-...-l, node 2 attached to node 4
      chain(0, 2);
      for (int i = 2; i + 1 < l; ++i) chain(i, i + 1);
      chain(1, 3);
      break;
    case LieType::F:
      chain(0, 1);
      cartan_[1][2] = -1;
      cartan_[2][1] = -2;
      chain(2, 3);
      diag_[2] = diag_[3] = 1;
      break;
    case LieType::G:
      cartan_[0][1] = -1;
      cartan_[1][0] = -3;
      diag_[1] = Rat(2, 3);
      break;
  }
  // symmetry of the induced form
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j)
      if (diag_[i] * cartan_[i][j] != diag_[j] * cartan_[j][i])
        throw Error("cartan symmetrization failed");

  // close the simple roots under simple reflections
  std::set<std::vector<int>> seen;
  std::vector<std::vector<int>> queue;
  for (int i = 0; i < l; ++i) {
    std::vector<int> e(l, 0);
    e[i] = 1;
    seen.insert(e);
    queue.push_back(e);
  }
  while (!queue.empty()) {
    std::vector<int> beta = queue.back();
    queue.pop_back();
    for (int j = 0; j < l; ++j) {
      long val = 0;
      for (int k = 0; k < l; ++k) val += (long)beta[k] * cartan_[j][k];
      std::vector<int> img = beta;
      img[j] -= (int)val;
      if (seen.insert(img).second) queue.push_back(img);
    }
  }
  std::vector<std::vector<int>> pos;
  for (const auto& r : seen) {
    bool nonneg = std::all_of(r.begin(), r.end(), [](int c) { return c >= 0; });
    if (nonneg) pos.push_back(r);
  }
  std::sort(pos.begin(), pos.end(), [](const auto& x, const auto& y) {
    int hx = std::accumulate(x.begin(), x.end(), 0);
    int hy = std::accumulate(y.begin(), y.end(), 0);
    if (hx != hy) return hx < hy;
    return x < y;
  });
  npos_ = (int)pos.size();
  roots_ = pos;
  for (const auto& r : pos) {
    std::vector<int> neg(r.size());
    for (size_t i = 0; i < r.size(); ++i) neg[i] = -r[i];
    roots_.push_back(neg);
  }
  if (roots_.size() != expected_count(type, rank)) throw Error("root count mismatch");
  for (int i = 0; i < (int)roots_.size(); ++i) index_[roots_[i]] = i;
}

int RootSystem::root_id(const std::vector<int>& coords) const {
  auto it = index_.find(coords);
  return it == index_.end() ? -1 : it->second;
}

int RootSystem::height(int id) const {
  return std::accumulate(roots_[id].begin(), roots_[id].end(), 0);
}

Rat RootSystem::form_simple(int i, int j) const { return diag_[i] * cartan_[i][j] / 2; }

Rat RootSystem::form_coords(const std::vector<int>& u, const std::vector<int>& v) const {
  Rat out(0);
  for (int i = 0; i < rank_; ++i) {
    if (u[i] == 0) continue;
    for (int j = 0; j < rank_; ++j) {
      if (v[j] == 0) continue;
      out += Rat(u[i]) * Rat(v[j]) * form_simple(i, j);
    }
  }
  return out;
}

Rat RootSystem::form_coords_rat(const std::vector<Rat>& u, const std::vector<Rat>& v) const {
  Rat out(0);
  for (int i = 0; i < rank_; ++i) {
    if (u[i] == 0) continue;
    for (int j = 0; j < rank_; ++j) {
      if (v[j] == 0) continue;
      out += u[i] * v[j] * form_simple(i, j);
    }
  }
  return out;
}

long RootSystem::eval_coroot(int i, const std::vector<int>& beta) const {
  long out = 0;
  for (int k = 0; k < rank_; ++k) out += (long)beta[k] * cartan_[i][k];
  return out;
}

std::vector<Rat> RootSystem::coroot_coords(int id) const {
  Rat l2 = len2(id);
  std::vector<Rat> out(rank_);
  for (int j = 0; j < rank_; ++j) out[j] = Rat(roots_[id][j]) * diag_[j] / l2;
  return out;
}

Rat RootSystem::coroot_form(int i, int j) const {
  return 4 * form_simple(i, j) / (diag_[i] * diag_[j]);
}

std::string RootSystem::name() const {
  return std::string(1, (char)type_) + std::to_string(rank_);
}

long Chevalley::p_string(int a, int b) const {
  long p = 0;
  std::vector<int> cur = rs_->root(b);
  const std::vector<int>& step = rs_->root(a);
  while (true) {
    for (size_t i = 0; i < cur.size(); ++i) cur[i] -= step[i];
    if (!rs_->is_root(cur)) break;
    ++p;
  }
  return p;
}

Chevalley::Chevalley(const RootSystem& rs) : rs_(&rs) {
  int n = rs.nroots();
  int P = rs.npos();
  sum_.assign(n, std::vector<int>(n, -1));
  nmat_.assign(n, std::vector<long>(n, 0));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      std::vector<int> s = rs.root(a);
      for (int i = 0; i < rs.rank(); ++i) s[i] += rs.root(b)[i];
      sum_[a][b] = rs.root_id(s);
    }

  std::vector<std::vector<bool>> done(n, std::vector<bool>(n, false));
  auto set_pp = [&](int a, int b, long v) {
    nmat_[a][b] = v;
    nmat_[b][a] = -v;
    done[a][b] = done[b][a] = true;
  };

  // Resolver for any pair from the positive-positive table filled so far.
  // Mixed and negative pairs reduce in one step through the cyclic identity
  // for triples summing to zero and the sign rule N(-a,-b) = -N(a,b).
  std::function<Rat(int, int)> val = [&](int a, int b) -> Rat {
    if (sum_[a][b] < 0) return Rat(0);
    bool pa = rs.is_positive(a), pb = rs.is_positive(b);
    if (pa && pb) {
      if (!done[a][b]) throw Error("chevalley: table order violated");
      return Rat(nmat_[a][b]);
    }
    if (!pa && !pb) return -val(rs.negative(a), rs.negative(b));
    if (!pa) return -val(b, a);
    // a positive, b negative
    int s = sum_[a][b];
    if (rs.is_positive(s)) {
      // N(a,b) = -(s,s)/(a,a) * N(-b, s)
      return -rs.len2(s) / rs.len2(a) * val(rs.negative(b), s);
    }
    // N(a,b) = (s,s)/(b,b) * N(-s, a)
    return rs.len2(s) / rs.len2(b) * val(rs.negative(s), a);
  };

  // fill the positive-positive table in increasing height of the sum
  for (int g = 0; g < P; ++g) {
    if (rs.height(g) < 2) continue;
    // special pairs (a,b), a < b, a+b = g
    std::vector<std::pair<int, int>> pairs;
    for (int a = 0; a < P; ++a) {
      std::vector<int> bc = rs.root(g);
      for (int i = 0; i < rs.rank(); ++i) bc[i] -= rs.root(a)[i];
      int b = rs.root_id(bc);
      if (b >= 0 && b < P && a < b) pairs.emplace_back(a, b);
    }
    if (pairs.empty()) throw Error("chevalley: no special pair");
    std::sort(pairs.begin(), pairs.end());
    int eps = pairs[0].first, eta = pairs[0].second;
    set_pp(eps, eta, p_string(eps, eta) + 1);
    for (size_t k = 1; k < pairs.size(); ++k) {
      int a = pairs[k].first, b = pairs[k].second;
      Rat acc(0);
      std::vector<int> d1 = rs.root(eta);
      for (int i = 0; i < rs.rank(); ++i) d1[i] -= rs.root(a)[i];
      if (rs.is_root(d1)) {
        int em = rs.root_id(d1);
        acc += val(eta, rs.negative(a)) * val(em, eps);
      }
      std::vector<int> d2 = rs.root(eps);
      for (int i = 0; i < rs.rank(); ++i) d2[i] -= rs.root(a)[i];
      if (rs.is_root(d2)) {
        int em = rs.root_id(d2);
        acc += val(rs.negative(a), eps) * val(em, eta);
      }
      Rat v = acc * rs.len2(g) / (rs.len2(b) * Rat(nmat_[eps][eta]));
      if (v.get_den() != 1) throw Error("chevalley: nonintegral constant");
      long vi = (long)v.get_num().get_si();
      if (std::labs(vi) != p_string(a, b) + 1) throw Error("chevalley: |N| != p+1");
      set_pp(a, b, vi);
    }
  }

  // complete the table: negative-negative and mixed entries
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (sum_[a][b] < 0 || (rs.is_positive(a) && rs.is_positive(b))) continue;
      Rat v = val(a, b);
      if (v.get_den() != 1) throw Error("chevalley: nonintegral constant");
      nmat_[a][b] = (long)v.get_num().get_si();
    }
}

}  // namespace ealax
