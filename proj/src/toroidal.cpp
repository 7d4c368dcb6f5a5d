#include "ealax/toroidal.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace ealax {

namespace {

Rat rat_of(const Int& num, const Int& den) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

Key raw_k(int i, Int m0, Int m1) { return Key(Kind::RawK, i, 0, std::move(m0), std::move(m1), 0); }
Key raw_d(int i, Int m0, Int m1) { return Key(Kind::RawD, i, 0, std::move(m0), std::move(m1), 0); }

bool is_loop(const Key& k) { return k.kind == Kind::LoopRoot || k.kind == Kind::LoopCoroot; }

}  // namespace

SparseVec reduce_k(int order, const Int& m0, const Int& m1, int i) {
  SparseVec out;
  Scalar one(order, Rat(1));
  if (i == 0) {
    if (m1 != 0) {
      out.add(key_kpair(m0, m1), Scalar(order, Rat(m1)));
    } else if (m0 == 0) {
      out.add(key_k0(), one);
    }
    // t0^m0 k0 with m0 != 0 is an exact form, hence zero
  } else {
    if (m1 == 0) {
      out.add(key_kline(m0), one);
    } else {
      // the exact-form relation m0 t^m k0 + m1 t^m k1 = 0
      out.add(key_kpair(m0, m1), Scalar(order, Rat(-m0)));
    }
  }
  return out;
}

SparseVec kpair_elem(int order, const Int& m0, const Int& m1) {
  SparseVec out;
  if (m1 != 0) {
    out.add(key_kpair(m0, m1), Scalar(order, Rat(1)));
  } else if (m0 != 0) {
    out.add(key_kline(m0), Scalar(order, rat_of(-1, m0)));
  }
  return out;
}

ToroidalAlgebra::ToroidalAlgebra(std::shared_ptr<const FiniteLie> g, ToroidalFlavor flavor,
                                 int scalar_order, std::optional<Scalar> tau)
    : g_(std::move(g)), flavor_(flavor), order_(scalar_order), tau_(Scalar(scalar_order)) {
  if (flavor_ == ToroidalFlavor::GTildeTau) {
    if (!tau) throw Error("cocycle flavor needs a parameter");
    if (tau->order() != order_) throw Error("cocycle parameter order mismatch");
    tau_ = *tau;
  } else if (tau) {
    throw Error("cocycle parameter only valid for the cocycle flavor");
  }
}

std::string ToroidalAlgebra::name() const {
  switch (flavor_) {
    case ToroidalFlavor::T: return "t(" + g_->rs().name() + ")";
    case ToroidalFlavor::GTilde: return "gtilde(" + g_->rs().name() + ")";
    case ToroidalFlavor::GHat: return "ghat(" + g_->rs().name() + ")";
    case ToroidalFlavor::GTildeTau: return "gtilde-tau(" + g_->rs().name() + ")";
  }
  return "toroidal";
}

void ToroidalAlgebra::check_key(const Key& k) const {
  switch (k.kind) {
    case Kind::LoopRoot:
    case Kind::LoopCoroot:
    case Kind::K0:
    case Kind::KLine:
      return;
    case Kind::KPair:
      if (k.e1 == 0) throw Error("k-pair key needs nonzero t1 exponent");
      return;
    case Kind::D0:
      if (flavor_ == ToroidalFlavor::T || flavor_ == ToroidalFlavor::GHat)
        throw Error(name() + ": derivation key outside grammar");
      return;
    case Kind::DTilde:
      if (k.e1 == 0) throw Error("skew-derivation key needs nonzero t1 exponent");
      if (flavor_ != ToroidalFlavor::GTilde && flavor_ != ToroidalFlavor::GTildeTau)
        throw Error(name() + ": derivation key outside grammar");
      return;
    case Kind::DLine:
      if (flavor_ == ToroidalFlavor::T) throw Error(name() + ": derivation key outside grammar");
      return;
    case Kind::DHatT0:
    case Kind::DHat:
      if (flavor_ != ToroidalFlavor::GHat) throw Error(name() + ": key outside grammar");
      if (k.kind == Kind::DHat && k.e1 == 0)
        throw Error("shifted derivation needs nonzero t1 exponent");
      return;
    default: throw Error(name() + ": key outside grammar");
  }
}

SparseVec ToroidalAlgebra::expand(const Key& k) const {
  SparseVec out;
  Scalar one = one_scalar();
  switch (k.kind) {
    case Kind::LoopRoot:
    case Kind::LoopCoroot:
    case Kind::RawK:
    case Kind::RawD:
      out.add(k, one);
      break;
    case Kind::K0:
      out.add(raw_k(0, 0, 0), one);
      break;
    case Kind::KLine:
      out.add(raw_k(1, k.e0, 0), one);
      break;
    case Kind::KPair:
      out.add(raw_k(0, k.e0, k.e1), Scalar(order_, rat_of(1, k.e1)));
      break;
    case Kind::D0:
      out.add(raw_d(0, 0, 0), one);
      break;
    case Kind::DLine:
      out.add(raw_d(1, k.e0, 0), one);
      break;
    case Kind::DTilde:
      out.add(raw_d(1, k.e0, k.e1), int_scalar(k.e0));
      out.add(raw_d(0, k.e0, k.e1), int_scalar(-k.e1));
      break;
    case Kind::DHatT0:
      out.add(raw_d(0, -1, 0), one);
      break;
    case Kind::DHat:
      out.add(raw_d(1, k.e0, k.e1), int_scalar(k.e0 + 1));
      out.add(raw_d(0, k.e0, k.e1), int_scalar(-k.e1));
      break;
    default: throw Error(name() + ": key outside grammar");
  }
  return out;
}

SparseVec ToroidalAlgebra::canonicalize(const SparseVec& raw) const {
  SparseVec out;
  std::map<std::pair<Int, Int>, std::pair<Scalar, Scalar>> dterms;
  for (const auto& t : raw.terms()) {
    const Key& k = t.first;
    if (is_loop(k)) {
      out.add(k, t.second);
    } else if (k.kind == Kind::RawK) {
      SparseVec red = reduce_k(order_, k.e0, k.e1, k.a);
      red.scale(t.second);
      out += red;
    } else if (k.kind == Kind::RawD) {
      auto& slot =
          dterms.try_emplace({k.e0, k.e1}, std::make_pair(zero_scalar(), zero_scalar()))
              .first->second;
      if (k.a == 0)
        slot.first += t.second;
      else
        slot.second += t.second;
    } else {
      check_key(k);
      out.add(k, t.second);
    }
  }
  for (auto& [mm, ab] : dterms) {
    const Int& m0 = mm.first;
    const Int& m1 = mm.second;
    Scalar& A = ab.first;  // d0 part
    Scalar& B = ab.second; // d1 part
    if (A.is_zero() && B.is_zero()) continue;
    if (flavor_ == ToroidalFlavor::T)
      throw Error("derivation term outside the centrally extended double loop algebra");
    if (flavor_ == ToroidalFlavor::GHat) {
      if (m1 == 0) {
        if (m0 == -1) {
          out.add(key_dhat_t0(), A);
          out.add(key_dline(-1), B);
        } else {
          if (!A.is_zero()) throw Error("element leaves the t0-graded derivation span");
          out.add(key_dline(m0), B);
        }
      } else {
        Scalar check = A;
        check.mul_rat(Rat(m0 + 1));
        Scalar c2 = B;
        c2.mul_rat(Rat(m1));
        check += c2;
        if (!check.is_zero()) throw Error("element leaves the t0-graded derivation span");
        A.mul_rat(rat_of(-1, m1));
        out.add(key_dhat(m0, m1), std::move(A));
      }
      continue;
    }
    if (m1 == 0 && m0 == 0) {
      out.add(key_d0(), A);
      out.add(key_dline(0), B);
    } else if (m1 == 0) {
      if (!A.is_zero()) throw Error("element leaves the divergence-zero span");
      out.add(key_dline(m0), B);
    } else {
      Scalar check = A;
      check.mul_rat(Rat(m0));
      Scalar c2 = B;
      c2.mul_rat(Rat(m1));
      check += c2;
      if (!check.is_zero()) throw Error("element leaves the divergence-zero span");
      A.mul_rat(rat_of(-1, m1));
      out.add(key_dtilde(m0, m1), std::move(A));
    }
  }
  return out;
}

SparseVec ToroidalAlgebra::bracket_raw(const Key& x, const Key& y) const {
  SparseVec out;
  bool xl = is_loop(x), yl = is_loop(y);
  if (xl && yl) {
    GSym a = g_->sym_of_key(x), b = g_->sym_of_key(y);
    Int M0 = x.e0 + y.e0, M1 = x.e1 + y.e1;
    for (const auto& t : g_->bracket_sym(a, b))
      out.add(g_->key_of_sym(t.first, M0, M1), rat_scalar(t.second));
    Rat f = g_->form_sym(a, b);
    if (f != 0) {
      if (x.e0 != 0) out.add(raw_k(0, M0, M1), rat_scalar(f * Rat(x.e0)));
      if (x.e1 != 0) out.add(raw_k(1, M0, M1), rat_scalar(f * Rat(x.e1)));
    }
    return out;
  }
  if (x.kind == Kind::RawK || y.kind == Kind::RawK) {
    const Key& kk = x.kind == Kind::RawK ? x : y;
    const Key& other = x.kind == Kind::RawK ? y : x;
    if (other.kind != Kind::RawD) return out;  // central against loops and k's
    const Key& d = other;
    Int M0 = d.e0 + kk.e0, M1 = d.e1 + kk.e1;
    Int ni = d.a == 0 ? kk.e0 : kk.e1;
    if (ni != 0) out.add(raw_k(kk.a, M0, M1), int_scalar(ni));
    if (d.a == kk.a) {
      if (d.e0 != 0) out.add(raw_k(0, M0, M1), int_scalar(d.e0));
      if (d.e1 != 0) out.add(raw_k(1, M0, M1), int_scalar(d.e1));
    }
    if (x.kind == Kind::RawK) out = -out;
    return out;
  }
  if (x.kind == Kind::RawD && yl) {
    Int ni = x.a == 0 ? y.e0 : y.e1;
    if (ni != 0) {
      Key img = y;
      img.e0 += x.e0;
      img.e1 += x.e1;
      out.add(img, int_scalar(ni));
    }
    return out;
  }
  if (xl && y.kind == Kind::RawD) return -bracket_raw(y, x);
  if (x.kind == Kind::RawD && y.kind == Kind::RawD) {
    Int M0 = x.e0 + y.e0, M1 = x.e1 + y.e1;
    Int ni = x.a == 0 ? y.e0 : y.e1;
    Int mj = y.a == 0 ? x.e0 : x.e1;
    if (ni != 0) out.add(raw_d(y.a, M0, M1), int_scalar(ni));
    if (mj != 0) out.add(raw_d(x.a, M0, M1), int_scalar(-mj));
    return out;
  }
  throw Error("bracket_raw: unsupported key pair");
}

void ToroidalAlgebra::tau_term(const Key& x, const Key& y, SparseVec& out) const {
  auto dt_part = [](const Key& k) -> std::optional<std::pair<Rat, std::pair<Int, Int>>> {
    if (k.kind == Kind::DTilde) return std::make_pair(Rat(1), std::make_pair(k.e0, k.e1));
    if (k.kind == Kind::DLine && k.e0 != 0)
      return std::make_pair(rat_of(1, k.e0), std::make_pair(k.e0, Int(0)));
    return std::nullopt;
  };
  auto px = dt_part(x), py = dt_part(y);
  if (!px || !py) return;
  const Int& p0 = px->second.first;
  const Int& p1 = px->second.second;
  const Int& q0 = py->second.first;
  const Int& q1 = py->second.second;
  Int cross = p0 * q1 - q0 * p1;
  if (cross == 0) return;
  SparseVec kp = kpair_elem(order_, p0 + q0, p1 + q1);
  Scalar coef = tau_;
  coef.mul_rat(px->first * py->first * Rat(cross * cross * cross));
  kp.scale(coef);
  out += kp;
}

SparseVec ToroidalAlgebra::bracket_keys(const Key& x, const Key& y) const {
  check_key(x);
  check_key(y);
  SparseVec rx = expand(x), ry = expand(y);
  SparseVec raw;
  for (const auto& tx : rx.terms())
    for (const auto& ty : ry.terms()) {
      SparseVec part = bracket_raw(tx.first, ty.first);
      part.scale(tx.second * ty.second);
      raw += part;
    }
  SparseVec out = canonicalize(raw);
  if (flavor_ == ToroidalFlavor::GTildeTau) tau_term(x, y, out);
  return out;
}

Scalar ToroidalAlgebra::form_keys(const Key& x, const Key& y) const {
  if (!has_form()) throw Error(name() + ": no bilinear form declared");
  if (is_loop(x) && is_loop(y)) {
    if (x.e0 + y.e0 != 0 || x.e1 + y.e1 != 0) return zero_scalar();
    return rat_scalar(g_->form_sym(g_->sym_of_key(x), g_->sym_of_key(y)));
  }
  auto pair_is = [&](Kind a, Kind b) {
    return (x.kind == a && y.kind == b) || (x.kind == b && y.kind == a);
  };
  if (pair_is(Kind::K0, Kind::D0)) return one_scalar();
  if (pair_is(Kind::KLine, Kind::DLine)) return x.e0 + y.e0 == 0 ? one_scalar() : zero_scalar();
  if (pair_is(Kind::KPair, Kind::DTilde))
    return (x.e0 + y.e0 == 0 && x.e1 + y.e1 == 0) ? one_scalar() : zero_scalar();
  return zero_scalar();
}

std::vector<Key> ToroidalAlgebra::spanning_keys(long window) const {
  std::vector<Key> out;
  long w = window;
  for (long m0 = -w; m0 <= w; ++m0)
    for (long m1 = -w; m1 <= w; ++m1)
      for (const GSym& s : g_->basis()) out.push_back(g_->key_of_sym(s, m0, m1));
  out.push_back(key_k0());
  for (long m0 = -w; m0 <= w; ++m0) out.push_back(key_kline(m0));
  for (long m0 = -w; m0 <= w; ++m0)
    for (long m1 = -w; m1 <= w; ++m1)
      if (m1 != 0) out.push_back(key_kpair(m0, m1));
  if (flavor_ == ToroidalFlavor::GTilde || flavor_ == ToroidalFlavor::GTildeTau) {
    out.push_back(key_d0());
    for (long m0 = -w; m0 <= w; ++m0) out.push_back(key_dline(m0));
    for (long m0 = -w; m0 <= w; ++m0)
      for (long m1 = -w; m1 <= w; ++m1)
        if (m1 != 0) out.push_back(key_dtilde(m0, m1));
  } else if (flavor_ == ToroidalFlavor::GHat) {
    out.push_back(key_dhat_t0());
    for (long n = -w; n <= w; ++n) out.push_back(key_dline(n));
    for (long n = -w; n <= w; ++n)
      for (long m = -w; m <= w; ++m)
        if (m != 0) out.push_back(key_dhat(n, m));
  }
  return out;
}

Int ToroidalAlgebra::t0_degree(const Key& k) {
  switch (k.kind) {
    case Kind::K0:
    case Kind::D0: return 0;
    case Kind::DHatT0: return -1;
    default: return k.e0;
  }
}

ToroidalAut::ToroidalAut(std::shared_ptr<const ToroidalAlgebra> alg, DiagramAut mu)
    : alg_(std::move(alg)), mu_(std::move(mu)) {
  if (alg_->scalar_order() % mu_.order() != 0)
    throw Error("scalar order must contain the automorphism order");
}

SparseVec ToroidalAut::mu_hat_raw(const SparseVec& raw) const {
  const FiniteLie& g = alg_->g();
  int l = g.rank();
  int order = alg_->scalar_order();
  SparseVec out;
  for (const auto& t : raw.terms()) {
    const Key& k = t.first;
    switch (k.kind) {
      case Kind::LoopRoot: {
        Scalar c = t.second;
        c.mul_rat(Rat(mu_.sign(k.a)));
        out.add(loop_root(k.e0, k.e1 + mu_.rho_root(k.a), mu_.image_root(k.a)), std::move(c));
        break;
      }
      case Kind::LoopCoroot: {
        std::vector<Rat> e(l, Rat(0));
        e[k.a] = 1;
        std::vector<Rat> img = mu_.mu_dot_h(e);
        for (int j = 0; j < l; ++j)
          if (img[j] != 0) out.add(loop_coroot(k.e0, k.e1, j), t.second * Scalar(order, img[j]));
        Rat rho = mu_.rho_coroot(k.a);
        if (rho != 0) out.add(raw_k(1, k.e0, k.e1), t.second * Scalar(order, rho));
        break;
      }
      case Kind::RawK:
        out.add(k, t.second);
        break;
      case Kind::RawD: {
        out.add(k, t.second);
        if (k.a == 1) {
          const std::vector<Rat>& h = mu_.hvec();
          for (int j = 0; j < l; ++j)
            if (h[j] != 0) out.add(loop_coroot(k.e0, k.e1, j), t.second * Scalar(order, h[j]));
          if (mu_.hh() != 0)
            out.add(raw_k(1, k.e0, k.e1), t.second * Scalar(order, -mu_.hh() / 2));
        }
        break;
      }
      default: throw Error("mu-hat: key outside the raw toroidal grammar");
    }
  }
  return out;
}

SparseVec ToroidalAut::mu_hat(const SparseVec& x) const {
  SparseVec raw;
  for (const auto& t : x.terms()) {
    SparseVec e = alg_->expand(t.first);
    e.scale(t.second);
    raw += e;
  }
  return alg_->canonicalize(mu_hat_raw(raw));
}

SparseVec ToroidalAut::mu_tilde(const SparseVec& x) const {
  SparseVec img = mu_hat(x);
  int order = alg_->scalar_order();
  long step = order / mu_.order();
  SparseVec out;
  for (const auto& t : img.terms()) {
    Cyclotomic w = Cyclotomic::root_power(order, -ToroidalAlgebra::t0_degree(t.first) * step);
    out.add(t.first, t.second * Scalar::from_cyclotomic(w));
  }
  return out;
}

SparseVec ToroidalAut::eta(const SparseVec& x) const {
  SparseVec acc, cur = x;
  for (int p = 0; p < mu_.order(); ++p) {
    acc += cur;
    if (p + 1 < mu_.order()) cur = mu_tilde(cur);
  }
  return acc;
}

std::vector<Rat> FoldedData::p_poly(int node) const {
  std::vector<Rat> out;
  if (node_si[node] == 1) {
    out.assign(1, Rat(1));
  } else {
    out.assign(node_Ti[node] + 1, Rat(0));
    out.front() = 1;
    out.back() = 1;
  }
  return out;
}

FoldedData folded_datum(const DiagramAut& mu) {
  if (mu.transitive())
    throw Error("transitive automorphism: the fixed subalgebra has no nonisotropic roots");
  const AffineAlgebra& aff = mu.affine();
  const RootSystem& rs = aff.g().rs();
  int l = rs.rank();
  int T = mu.order();
  const std::vector<int>& perm = mu.perm();
  auto ac = aff.affine_cartan();

  FoldedData fd;
  fd.node_Ti.assign(l + 1, 0);
  fd.node_si.assign(l + 1, 0);
  fd.node_rep.assign(l + 1, -1);
  std::vector<bool> seen(l + 1, false);
  std::vector<std::vector<int>> orbits;
  for (int i = 0; i <= l; ++i) {
    if (seen[i]) continue;
    std::vector<int> orbit{i};
    seen[i] = true;
    for (int j = perm[i]; j != i; j = perm[j]) {
      orbit.push_back(j);
      seen[j] = true;
    }
    orbits.push_back(orbit);
  }
  // one orbit per representative, ordered by smallest node
  std::sort(orbits.begin(), orbits.end(), [](const auto& a, const auto& b) {
    return *std::min_element(a.begin(), a.end()) < *std::min_element(b.begin(), b.end());
  });
  for (const auto& orbit : orbits) {
    int sz = (int)orbit.size();
    int s;
    if (sz == 2 && ac[orbit[0]][orbit[1]] == -1 && ac[orbit[1]][orbit[0]] == -1) {
      s = 2;
    } else {
      for (size_t p = 0; p < orbit.size(); ++p)
        for (size_t q = p + 1; q < orbit.size(); ++q)
          if (ac[orbit[p]][orbit[q]] != 0)
            throw Error("orbit is neither orthogonal nor a linked pair");
      s = 1;
    }
    int rep = (int)fd.reps.size();
    fd.reps.push_back(*std::min_element(orbit.begin(), orbit.end()));
    fd.orbit_size.push_back(sz);
    fd.Ti.push_back(T / sz);
    fd.si.push_back(s);
    for (int node : orbit) {
      fd.node_Ti[node] = T / sz;
      fd.node_si[node] = s;
      fd.node_rep[node] = rep;
    }
  }

  // folded Cartan matrix from the orbit-averaged simple roots
  int nrep = (int)fd.reps.size();
  auto aroot = [&](int i) {
    std::vector<Rat> f(l, Rat(0));
    if (i == 0) {
      const std::vector<int>& th = rs.root(rs.theta_id());
      for (int j = 0; j < l; ++j) f[j] = -th[j];
    } else {
      f[i - 1] = 1;
    }
    return f;
  };
  std::vector<std::vector<Rat>> avg(nrep, std::vector<Rat>(l, Rat(0)));
  for (int r = 0; r < nrep; ++r) {
    int i = fd.reps[r], j = i;
    do {
      std::vector<Rat> f = aroot(j);
      for (int c = 0; c < l; ++c) avg[r][c] += f[c];
      j = perm[j];
    } while (j != i);
    for (int c = 0; c < l; ++c) avg[r][c] *= rat_of(fd.Ti[r], T);
  }
  fd.cartan.assign(nrep, std::vector<long>(nrep, 0));
  for (int r = 0; r < nrep; ++r) {
    Rat rr = rs.form_coords_rat(avg[r], avg[r]);
    if (rr == 0) throw Error("isotropic averaged simple root");
    for (int s = 0; s < nrep; ++s) {
      Rat v = 2 * rs.form_coords_rat(avg[r], avg[s]) / rr;
      if (v.get_den() != 1) throw Error("folded Cartan matrix not integral");
      fd.cartan[r][s] = (long)v.get_num().get_si();
    }
  }
  if (!is_affine_gcm(fd.cartan)) throw Error("folded matrix is not an affine GCM");
  return fd;
}

namespace {

Rat rat_det(const std::vector<std::vector<Rat>>& m) {
  int n = (int)m.size();
  std::vector<std::vector<Rat>> a = m;
  Rat det(1);
  for (int c = 0; c < n; ++c) {
    int piv = -1;
    for (int r = c; r < n; ++r)
      if (a[r][c] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) return Rat(0);
    if (piv != c) {
      std::swap(a[piv], a[c]);
      det = -det;
    }
    for (int r = c + 1; r < n; ++r) {
      if (a[r][c] == 0) continue;
      Rat f = a[r][c] / a[c][c];
      for (int k = c; k < n; ++k) a[r][k] -= f * a[c][k];
    }
    det *= a[c][c];
  }
  return det;
}

}  // namespace

bool is_affine_gcm(const std::vector<std::vector<long>>& a) {
  int n = (int)a.size();
  if (n < 1) return false;
  for (int i = 0; i < n; ++i) {
    if ((int)a[i].size() != n) return false;
    if (a[i][i] != 2) return false;
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      if (a[i][j] > 0) return false;
      if ((a[i][j] == 0) != (a[j][i] == 0)) return false;
    }
  }
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    std::vector<int> idx;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) idx.push_back(i);
    std::vector<std::vector<Rat>> sub(idx.size(), std::vector<Rat>(idx.size()));
    for (size_t r = 0; r < idx.size(); ++r)
      for (size_t c = 0; c < idx.size(); ++c) sub[r][c] = a[idx[r]][idx[c]];
    Rat d = rat_det(sub);
    if ((int)idx.size() == n) {
      if (d != 0) return false;
    } else if (d <= 0) {
      return false;
    }
  }
  return true;
}

bool TwistedRoot::operator<(const TwistedRoot& o) const {
  for (size_t i = 0; i < finite.size(); ++i) {
    int c = cmp(finite[i], o.finite[i]);
    if (c != 0) return c < 0;
  }
  int c = cmp(d1, o.d1);
  if (c != 0) return c < 0;
  return cmp(d0, o.d0) < 0;
}

bool TwistedRoot::operator==(const TwistedRoot& o) const {
  return finite == o.finite && d1 == o.d1 && d0 == o.d0;
}

std::vector<TwistedRoot> twisted_roots(const DiagramAut& mu, const FoldedData& fd, int weyl_len,
                                       long m_bound) {
  const RootSystem& rs = mu.affine().g().rs();
  int l = rs.rank();
  int T = mu.order();
  int nrep = (int)fd.reps.size();
  const std::vector<int>& perm = mu.perm();

  // averaged simple roots as lattice data: finite coords and the delta_1 part
  std::vector<std::vector<Rat>> avf(nrep, std::vector<Rat>(l, Rat(0)));
  std::vector<Rat> avd1(nrep, Rat(0));
  for (int r = 0; r < nrep; ++r) {
    int i = fd.reps[r], j = i;
    do {
      if (j == 0) {
        const std::vector<int>& th = rs.root(rs.theta_id());
        for (int c = 0; c < l; ++c) avf[r][c] -= th[c];
        avd1[r] += 1;
      } else {
        avf[r][j - 1] += 1;
      }
      j = perm[j];
    } while (j != i);
    Rat scale = rat_of(fd.Ti[r], T);
    for (int c = 0; c < l; ++c) avf[r][c] *= scale;
    avd1[r] *= scale;
  }

  // Weyl orbit of each folded simple root, by breadth-first closure over the
  // simple reflections of the folded matrix
  std::vector<std::set<std::vector<long>>> orbit(nrep);
  for (int r = 0; r < nrep; ++r) {
    // seed with both alpha-check and its negative (a length-one reflection)
    // so every truncation stays closed under negation
    std::vector<long> e(nrep, 0);
    e[r] = 1;
    std::vector<long> en(nrep, 0);
    en[r] = -1;
    std::set<std::vector<long>> cur{e, en};
    orbit[r].insert(e);
    orbit[r].insert(en);
    for (int len = 0; len < weyl_len && !cur.empty(); ++len) {
      std::set<std::vector<long>> next;
      for (const auto& v : cur)
        for (int s = 0; s < nrep; ++s) {
          long pair = 0;
          for (int c = 0; c < nrep; ++c) pair += fd.cartan[s][c] * v[c];
          std::vector<long> img = v;
          img[s] -= pair;
          if (orbit[r].insert(img).second) next.insert(img);
        }
      cur = std::move(next);
    }
  }

  std::set<TwistedRoot> out;
  for (int r = 0; r < nrep; ++r) {
    for (const auto& v : orbit[r]) {
      std::vector<Rat> fin(l, Rat(0));
      Rat d1(0);
      for (int c = 0; c < nrep; ++c) {
        if (v[c] == 0) continue;
        for (int k = 0; k < l; ++k) fin[k] += Rat(v[c]) * avf[c][k];
        d1 += Rat(v[c]) * avd1[c];
      }
      for (long m = -m_bound; m <= m_bound; ++m)
        out.insert(TwistedRoot{fin, d1, Rat(fd.Ti[r]) * m});
      if (fd.si[r] == 2) {
        std::vector<Rat> fin2 = fin;
        for (Rat& x : fin2) x *= 2;
        // m runs one step further down so the delta_0 values come in +- pairs
        for (long m = -m_bound - 1; m <= m_bound; ++m)
          out.insert(TwistedRoot{fin2, d1 * 2, rat_of(T, 2) + Rat(m) * T});
      }
    }
  }
  return std::vector<TwistedRoot>(out.begin(), out.end());
}

}  // namespace ealax
