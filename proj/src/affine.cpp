#include "ealax/affine.hpp"

#include <algorithm>
#include <numeric>

namespace ealax {

GSym FiniteLie::sym_of_key(const Key& k) const {
  if (k.kind == Kind::LoopRoot) return GSym{true, k.a};
  if (k.kind == Kind::LoopCoroot) return GSym{false, k.a};
  throw Error("not a loop key");
}

Key FiniteLie::key_of_sym(const GSym& s, const Int& m0, const Int& m1) const {
  return s.root ? loop_root(m0, m1, s.idx) : loop_coroot(m0, m1, s.idx);
}

std::vector<GSym> FiniteLie::basis() const {
  std::vector<GSym> out;
  for (int r = 0; r < rs_.nroots(); ++r) out.push_back(GSym{true, r});
  for (int i = 0; i < rs_.rank(); ++i) out.push_back(GSym{false, i});
  return out;
}

std::vector<std::pair<GSym, Rat>> FiniteLie::bracket_sym(const GSym& a, const GSym& b) const {
  std::vector<std::pair<GSym, Rat>> out;
  if (a.root && b.root) {
    if (b.idx == rs_.negative(a.idx)) {
      std::vector<Rat> cc = rs_.coroot_coords(a.idx);
      for (int j = 0; j < rs_.rank(); ++j)
        if (cc[j] != 0) out.emplace_back(GSym{false, j}, cc[j]);
      return out;
    }
    int s = ch_.sum_id(a.idx, b.idx);
    if (s >= 0) out.emplace_back(GSym{true, s}, Rat(ch_.constant(a.idx, b.idx)));
    return out;
  }
  if (!a.root && !b.root) return out;
  if (!a.root && b.root) {
    long v = rs_.eval_coroot(a.idx, rs_.root(b.idx));
    if (v != 0) out.emplace_back(b, Rat(v));
    return out;
  }
  // a root, b coroot
  long v = rs_.eval_coroot(b.idx, rs_.root(a.idx));
  if (v != 0) out.emplace_back(a, Rat(-v));
  return out;
}

Rat FiniteLie::form_sym(const GSym& a, const GSym& b) const {
  if (a.root && b.root) {
    if (b.idx == rs_.negative(a.idx)) return 2 / rs_.len2(a.idx);
    return Rat(0);
  }
  if (!a.root && !b.root) return rs_.coroot_form(a.idx, b.idx);
  return Rat(0);
}

std::string AffineAlgebra::name() const { return "affine(" + g_->rs().name() + ")"; }

SparseVec AffineAlgebra::bracket_keys(const Key& x, const Key& y) const {
  bool xl = x.kind == Kind::LoopRoot || x.kind == Kind::LoopCoroot;
  bool yl = y.kind == Kind::LoopRoot || y.kind == Kind::LoopCoroot;
  SparseVec out;
  if (x.kind == Kind::KLine || y.kind == Kind::KLine) return out;
  if (x.kind == Kind::DLine && y.kind == Kind::DLine) return out;
  if (x.kind == Kind::DLine && yl) {
    out.add(y, int_scalar(y.e1));
    return out;
  }
  if (xl && y.kind == Kind::DLine) {
    out.add(x, int_scalar(-x.e1));
    return out;
  }
  if (!(xl && yl)) throw Error("affine: key outside grammar");
  GSym a = g_->sym_of_key(x), b = g_->sym_of_key(y);
  Int deg = x.e1 + y.e1;
  for (const auto& t : g_->bracket_sym(a, b))
    out.add(g_->key_of_sym(t.first, 0, deg), rat_scalar(t.second));
  if (deg == 0) {
    Rat f = g_->form_sym(a, b);
    if (f != 0) out.add(key_k1(), rat_scalar(f * Rat(x.e1)));
  }
  return out;
}

Scalar AffineAlgebra::form_keys(const Key& x, const Key& y) const {
  bool xl = x.kind == Kind::LoopRoot || x.kind == Kind::LoopCoroot;
  bool yl = y.kind == Kind::LoopRoot || y.kind == Kind::LoopCoroot;
  if (xl && yl) {
    if (x.e1 + y.e1 != 0) return zero_scalar();
    return rat_scalar(g_->form_sym(g_->sym_of_key(x), g_->sym_of_key(y)));
  }
  if ((x.kind == Kind::KLine && y.kind == Kind::DLine) ||
      (x.kind == Kind::DLine && y.kind == Kind::KLine))
    return one_scalar();
  return zero_scalar();
}

std::vector<Key> AffineAlgebra::spanning_keys(long window) const {
  std::vector<Key> out;
  for (long n = -window; n <= window; ++n)
    for (const GSym& s : g_->basis()) out.push_back(g_->key_of_sym(s, 0, n));
  out.push_back(key_k1());
  out.push_back(key_d1());
  return out;
}

std::vector<std::vector<long>> AffineAlgebra::affine_cartan() const {
  const RootSystem& rs = g_->rs();
  int l = rs.rank();
  std::vector<std::vector<int>> simple(l + 1);
  simple[0] = rs.root(rs.negative(rs.theta_id()));
  for (int i = 1; i <= l; ++i) {
    std::vector<int> e(l, 0);
    e[i - 1] = 1;
    simple[i] = e;
  }
  std::vector<std::vector<long>> a(l + 1, std::vector<long>(l + 1));
  for (int i = 0; i <= l; ++i)
    for (int j = 0; j <= l; ++j) {
      Rat v = 2 * rs.form_coords(simple[i], simple[j]) / rs.form_coords(simple[i], simple[i]);
      if (v.get_den() != 1) throw Error("affine cartan not integral");
      a[i][j] = (long)v.get_num().get_si();
    }
  return a;
}

SparseVec AffineAlgebra::simple_vector(int i, bool positive) const {
  const RootSystem& rs = g_->rs();
  if (i == 0) {
    int theta = rs.theta_id();
    return positive ? SparseVec::unit(loop_root(0, 1, rs.negative(theta)), one_scalar())
                    : SparseVec::unit(loop_root(0, -1, theta), one_scalar());
  }
  std::vector<int> e(rs.rank(), 0);
  e[i - 1] = 1;
  int rid = rs.root_id(e);
  return SparseVec::unit(loop_root(0, 0, positive ? rid : rs.negative(rid)), one_scalar());
}

Rat AffineAlgebra::node_len2(int i) const {
  if (i == 0) return g_->rs().len2(g_->rs().theta_id());
  return g_->rs().simple_len2(i - 1);
}

namespace {

// exact dense solve M x = r over Q; M square nonsingular
std::vector<Rat> solve_linear(std::vector<std::vector<Rat>> m, std::vector<Rat> r) {
  int n = (int)m.size();
  for (int c = 0; c < n; ++c) {
    int piv = -1;
    for (int i = c; i < n; ++i)
      if (m[i][c] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) throw Error("singular linear system");
    std::swap(m[c], m[piv]);
    std::swap(r[c], r[piv]);
    for (int i = 0; i < n; ++i) {
      if (i == c || m[i][c] == 0) continue;
      Rat f = m[i][c] / m[c][c];
      for (int j = c; j < n; ++j) m[i][j] -= f * m[c][j];
      r[i] -= f * r[c];
    }
  }
  std::vector<Rat> x(n);
  for (int i = 0; i < n; ++i) x[i] = r[i] / m[i][i];
  return x;
}

int perm_order(const std::vector<int>& perm) {
  int n = (int)perm.size();
  int ord = 1;
  for (int i = 0; i < n; ++i) {
    int len = 1, j = perm[i];
    while (j != i) {
      j = perm[j];
      ++len;
    }
    ord = (int)std::lcm((long)ord, (long)len);
  }
  return ord;
}

}  // namespace

DiagramAut::DiagramAut(std::shared_ptr<const AffineAlgebra> aff, std::vector<int> perm)
    : aff_(std::move(aff)), perm_(std::move(perm)) {
  build();
}

DiagramAut DiagramAut::finite(std::shared_ptr<const AffineAlgebra> aff,
                              std::vector<int> dot_perm) {
  std::vector<int> p(dot_perm.size() + 1);
  p[0] = 0;
  for (size_t i = 0; i < dot_perm.size(); ++i) p[i + 1] = dot_perm[i];
  return DiagramAut(std::move(aff), std::move(p));
}

bool DiagramAut::transitive() const {
  // a single orbit through node 0 covering every node
  int l = (int)perm_.size() - 1;
  int count = 1, j = perm_[0];
  while (j != 0) {
    j = perm_[j];
    ++count;
  }
  return count == l + 1;
}

bool DiagramAut::is_identity() const {
  for (size_t i = 0; i < perm_.size(); ++i)
    if (perm_[i] != (int)i) return false;
  return true;
}

void DiagramAut::build() {
  const FiniteLie& g = aff_->g();
  const RootSystem& rs = g.rs();
  int l = rs.rank();
  if ((int)perm_.size() != l + 1) throw Error("permutation size must be rank+1");
  std::vector<bool> hit(l + 1, false);
  for (int v : perm_) {
    if (v < 0 || v > l || hit[v]) throw Error("not a permutation");
    hit[v] = true;
  }
  auto ac = aff_->affine_cartan();
  for (int i = 0; i <= l; ++i)
    for (int j = 0; j <= l; ++j)
      if (ac[i][j] != ac[perm_[i]][perm_[j]])
        throw Error("permutation does not preserve the affine Cartan matrix");
  T_ = perm_order(perm_);

  int theta = rs.theta_id();
  mu_lat_.assign(l, {});
  rho_simple_.assign(l, Int(0));
  for (int i = 1; i <= l; ++i) {
    if (perm_[i] == 0) {
      mu_lat_[i - 1] = rs.root(rs.negative(theta));
      rho_simple_[i - 1] = 1;
    } else {
      std::vector<int> e(l, 0);
      e[perm_[i] - 1] = 1;
      mu_lat_[i - 1] = e;
    }
  }

  auto apply_lat = [&](const std::vector<int>& coords) {
    std::vector<int> out(l, 0);
    for (int i = 0; i < l; ++i)
      if (coords[i] != 0)
        for (int j = 0; j < l; ++j) out[j] += coords[i] * mu_lat_[i][j];
    return out;
  };

  int n = rs.nroots();
  mu_root_.assign(n, -1);
  sign_.assign(n, 0);
  const Chevalley& ch = g.ch();
  for (int rid = 0; rid < rs.npos(); ++rid) {
    int img = rs.root_id(apply_lat(rs.root(rid)));
    if (img < 0) throw Error("finite part does not permute the roots");
    mu_root_[rid] = img;
    mu_root_[rs.negative(rid)] = rs.negative(img);
    if (rs.height(rid) == 1) {
      sign_[rid] = sign_[rs.negative(rid)] = 1;
      continue;
    }
    // decompose rid = alpha_j + gamma' and transport the structure constant
    int done = 0;
    for (int j = 0; j < l && !done; ++j) {
      std::vector<int> e(l, 0);
      e[j] = 1;
      int sj = rs.root_id(e);
      std::vector<int> rest = rs.root(rid);
      rest[j] -= 1;
      int gp = rs.root_id(rest);
      if (gp < 0 || gp >= rs.npos()) continue;
      long n0 = ch.constant(sj, gp);
      long n1 = ch.constant(mu_root_[sj], mu_root_[gp]);
      if (n0 == 0 || std::labs(n0) != std::labs(n1))
        throw Error("sign transport: string length mismatch");
      int c = sign_[sj] * sign_[gp] * (int)((n1 / n0 > 0) ? 1 : -1);
      sign_[rid] = sign_[rs.negative(rid)] = c;
      done = 1;
    }
    if (!done) throw Error("no simple decomposition for positive root");
  }

  mu_h_.assign(l, std::vector<Rat>(l));
  rho_coroot_.assign(l, Rat(0));
  for (int i = 0; i < l; ++i) {
    int img = rs.root_id(mu_lat_[i]);
    std::vector<Rat> cc = rs.coroot_coords(img);
    for (int j = 0; j < l; ++j) mu_h_[i][j] = cc[j];
    rho_coroot_[i] = 2 * Rat(rho_simple_[i]) / rs.simple_len2(i);
  }

  // h is determined by (mu(alpha_i))(h) = -rho(alpha_i) on the simple roots
  std::vector<std::vector<Rat>> m(l, std::vector<Rat>(l));
  std::vector<Rat> rhs(l);
  for (int i = 0; i < l; ++i) {
    for (int j = 0; j < l; ++j) m[i][j] = Rat(rs.eval_coroot(j, mu_lat_[i]));
    rhs[i] = -Rat(rho_simple_[i]);
  }
  hvec_ = solve_linear(std::move(m), std::move(rhs));
  hh_ = 0;
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j)
      if (hvec_[i] != 0 && hvec_[j] != 0) hh_ += hvec_[i] * hvec_[j] * rs.coroot_form(i, j);
}

Int DiagramAut::rho_root(int rid) const {
  const RootSystem& rs = aff_->g().rs();
  Int out(0);
  for (int i = 0; i < rs.rank(); ++i) out += Int(rs.root(rid)[i]) * rho_simple_[i];
  return out;
}

Rat DiagramAut::rho_h(const std::vector<Rat>& cc) const {
  Rat out(0);
  for (size_t i = 0; i < cc.size(); ++i) out += cc[i] * rho_coroot_[i];
  return out;
}

std::vector<Rat> DiagramAut::mu_dot_h(const std::vector<Rat>& cc) const {
  int l = (int)cc.size();
  std::vector<Rat> out(l, Rat(0));
  for (int i = 0; i < l; ++i)
    if (cc[i] != 0)
      for (int j = 0; j < l; ++j) out[j] += cc[i] * mu_h_[i][j];
  return out;
}

bool DiagramAut::lemma_identities_hold() const {
  const RootSystem& rs = aff_->g().rs();
  int l = rs.rank();
  std::vector<Rat> acc(l, Rat(0)), cur = hvec_;
  Rat s2(0);
  for (int p = 0; p < T_; ++p) {
    for (int j = 0; j < l; ++j) acc[j] += cur[j];
    if (p >= 1) {
      Rat ip(0);
      for (int i = 0; i < l; ++i)
        for (int j = 0; j < l; ++j)
          if (cur[i] != 0 && hvec_[j] != 0) ip += cur[i] * hvec_[j] * rs.coroot_form(i, j);
      s2 += Rat(T_ - p) * ip;
    }
    cur = mu_dot_h(cur);
  }
  for (int j = 0; j < l; ++j)
    if (acc[j] != 0) return false;
  return s2 + Rat(T_) * hh_ / 2 == 0;
}

SparseVec DiagramAut::apply_affine(const SparseVec& x) const {
  const FiniteLie& g = aff_->g();
  int l = g.rank();
  int order = aff_->scalar_order();
  SparseVec out;
  for (const auto& t : x.terms()) {
    const Key& k = t.first;
    switch (k.kind) {
      case Kind::LoopRoot: {
        Scalar c = t.second;
        c.mul_rat(Rat(sign_[k.a]));
        out.add(loop_root(k.e0, k.e1 + rho_root(k.a), mu_root_[k.a]), std::move(c));
        break;
      }
      case Kind::LoopCoroot: {
        for (int j = 0; j < l; ++j)
          if (mu_h_[k.a][j] != 0)
            out.add(loop_coroot(k.e0, k.e1, j), t.second * Scalar(order, mu_h_[k.a][j]));
        if (k.e1 == 0 && rho_coroot_[k.a] != 0)
          out.add(key_k1(), t.second * Scalar(order, rho_coroot_[k.a]));
        break;
      }
      case Kind::KLine:
        out.add(k, t.second);
        break;
      case Kind::DLine: {
        out.add(k, t.second);
        for (int j = 0; j < l; ++j)
          if (hvec_[j] != 0) out.add(loop_coroot(0, 0, j), t.second * Scalar(order, hvec_[j]));
        if (hh_ != 0) out.add(key_k1(), t.second * Scalar(order, -hh_ / 2));
        break;
      }
      default: throw Error("diagram automorphism: key outside the affine grammar");
    }
  }
  return out;
}

SparseVec DiagramAut::apply_g(const SparseVec& x) const {
  int l = aff_->g().rank();
  int order = aff_->scalar_order();
  SparseVec out;
  for (const auto& t : x.terms()) {
    const Key& k = t.first;
    if (k.kind == Kind::LoopRoot) {
      Scalar c = t.second;
      c.mul_rat(Rat(sign_[k.a]));
      out.add(loop_root(k.e0, k.e1, mu_root_[k.a]), std::move(c));
    } else if (k.kind == Kind::LoopCoroot) {
      for (int j = 0; j < l; ++j)
        if (mu_h_[k.a][j] != 0)
          out.add(loop_coroot(k.e0, k.e1, j), t.second * Scalar(order, mu_h_[k.a][j]));
    } else {
      throw Error("finite action: key outside the loop grammar");
    }
  }
  return out;
}

SparseVec eigenspace_component(const DiagramAut& nu, const SparseVec& a, const Int& m,
                               bool affine_action) {
  int order = nu.affine().scalar_order();
  int T = nu.order();
  if (order % T != 0) throw Error("scalar order must be a multiple of the automorphism order");
  long step = order / T;
  SparseVec acc, cur = a;
  for (int p = 0; p < T; ++p) {
    Cyclotomic w = Cyclotomic::root_power(order, -m * p * step);
    SparseVec scaled = cur;
    scaled.scale(Scalar::from_cyclotomic(w));
    acc += scaled;
    cur = affine_action ? nu.apply_affine(cur) : nu.apply_g(cur);
  }
  return acc;
}

std::vector<std::pair<int, Int>> ideal_generator_exponents(const AffineAlgebra& aff,
                                                           const Int& level) {
  if (level < 0) throw Error("level must be nonnegative");
  std::vector<std::pair<int, Int>> out;
  for (int i = 0; i <= aff.g().rank(); ++i) {
    Rat eps = 2 / aff.node_len2(i);
    if (eps.get_den() != 1) throw Error("nonintegral epsilon");
    out.emplace_back(i, Int(eps.get_num()) * level + 1);
  }
  return out;
}

CovariantLoopAlgebra::CovariantLoopAlgebra(std::shared_ptr<const AffineAlgebra> aff,
                                           DiagramAut nu)
    : aff_(std::move(aff)), nu_(std::move(nu)), N_(nu_.order()) {
  if (aff_->scalar_order() % N_ != 0)
    throw Error("scalar order must contain the automorphism order");
  // the action must restrict to a signed permutation of the chosen basis;
  // advance() throws otherwise
  for (int id = 0; id < nsyms(); ++id) {
    GSym s = sym_of_id(id);
    Rat c(1);
    advance(s, c);
  }
}

int CovariantLoopAlgebra::nsyms() const {
  return aff_->g().rs().nroots() + aff_->g().rank();
}

GSym CovariantLoopAlgebra::sym_of_id(int id) const {
  int nr = aff_->g().rs().nroots();
  return id < nr ? GSym{true, id} : GSym{false, id - nr};
}

int CovariantLoopAlgebra::id_of_sym(const GSym& s) const {
  return s.root ? s.idx : aff_->g().rs().nroots() + s.idx;
}

void CovariantLoopAlgebra::advance(GSym& s, Rat& coef) const {
  if (s.root) {
    coef *= nu_.sign(s.idx);
    s = GSym{true, nu_.image_root(s.idx)};
    return;
  }
  int l = aff_->g().rank();
  std::vector<Rat> e(l, Rat(0));
  e[s.idx] = 1;
  std::vector<Rat> img = nu_.mu_dot_h(e);
  int nz = -1;
  for (int j = 0; j < l; ++j)
    if (img[j] != 0) {
      if (nz >= 0 || (img[j] != 1 && img[j] != -1))
        throw Error("covariant loop classes need a signed-permutation action");
      nz = j;
    }
  coef *= img[nz];
  s = GSym{false, nz};
}

std::string CovariantLoopAlgebra::name() const {
  return "covariant-loop(" + aff_->g().rs().name() + ")";
}

SparseVec CovariantLoopAlgebra::class_of(const Int& m, const GSym& s) const {
  int order = aff_->scalar_order();
  long step = order / N_;
  int id = id_of_sym(s);
  std::vector<std::pair<int, Rat>> orbit;  // (symbol id, accumulated sign)
  GSym cur = s;
  Rat coef(1);
  long period = N_;
  for (int p = 0; p < N_; ++p) {
    orbit.emplace_back(id_of_sym(cur), coef);
    advance(cur, coef);
    if (id_of_sym(cur) == id) {
      period = p + 1;
      break;
    }
  }
  // closure: nu^period(a) = coef * a and the class identification forces
  // class = 0 unless coef = w^{period*m}
  Cyclotomic w = Cyclotomic::root_power(order, Int(period) * m * step);
  if (w.cmp(Cyclotomic(order, coef)) != 0) return SparseVec();
  size_t best = 0;
  for (size_t p = 1; p < orbit.size(); ++p)
    if (orbit[p].first < orbit[best].first) best = p;
  Cyclotomic c = Cyclotomic::root_power(order, -Int((long)best) * m * step);
  c.mul_rat(orbit[best].second);
  Key key(Kind::CovAff, orbit[best].first, 0, m, 0, 0);
  return SparseVec::unit(key, Scalar::from_cyclotomic(c));
}

SparseVec CovariantLoopAlgebra::bracket_keys(const Key& x, const Key& y) const {
  if (x.kind == Kind::CovAffK || y.kind == Kind::CovAffK) return SparseVec();
  if (x.kind != Kind::CovAff || y.kind != Kind::CovAff)
    throw Error("covariant loop: key outside grammar");
  const FiniteLie& g = aff_->g();
  int order = aff_->scalar_order();
  long step = order / N_;
  const Int& m = x.e0;
  const Int& n = y.e0;
  GSym b = sym_of_id(y.a);
  GSym ga = sym_of_id(x.a);
  Rat asign(1);
  SparseVec out;
  for (int p = 0; p < N_; ++p) {
    Scalar chi = Scalar::from_cyclotomic(Cyclotomic::root_power(order, -Int(p) * m * step));
    for (const auto& t : g.bracket_sym(ga, b)) {
      SparseVec cls = class_of(m + n, t.first);
      cls.scale(chi * Scalar(order, t.second * asign));
      out += cls;
    }
    if (m + n == 0) {
      Rat f = g.form_sym(ga, b) * asign;
      if (f != 0) out.add(key_kbar(), chi * Scalar(order, f * Rat(m)));
    }
    advance(ga, asign);
  }
  return out;
}

std::vector<Key> CovariantLoopAlgebra::spanning_keys(long window) const {
  std::vector<Key> out;
  for (long m = -window; m <= window; ++m)
    for (int id = 0; id < nsyms(); ++id) {
      SparseVec cls = class_of(Int(m), sym_of_id(id));
      if (cls.is_zero()) continue;
      const Key& k = cls.terms()[0].first;
      if (k.a == id && cls.terms()[0].second.is_one()) out.push_back(k);
    }
  out.push_back(key_kbar());
  return out;
}

SparseVec CovariantLoopAlgebra::to_twisted(const SparseVec& x, const AffineAlgebra& target) const {
  int order = target.scalar_order();
  long step = order / N_;
  SparseVec out;
  for (const auto& t : x.terms()) {
    if (t.first.kind == Kind::CovAffK) {
      out.add(key_k1(), t.second * Scalar(order, Rat(N_)));
      continue;
    }
    const Int& m = t.first.e0;
    GSym ga = sym_of_id(t.first.a);
    Rat asign(1);
    for (int p = 0; p < N_; ++p) {
      Cyclotomic w = Cyclotomic::root_power(order, -m * p * step);
      w.mul_rat(asign);
      out.add(target.g().key_of_sym(ga, 0, m), t.second * Scalar::from_cyclotomic(w));
      advance(ga, asign);
    }
  }
  return out;
}

}  // namespace ealax
