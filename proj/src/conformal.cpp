#include "ealax/conformal.hpp"

#include <functional>

namespace ealax {

namespace {

Key mk_gen(CGen tag, int sym, Int param, Int dpow) {
  return Key(Kind::CgGen, (int)tag, sym, std::move(param), std::move(dpow), 0);
}

// (d^j gen)(m) in the t-graded Lie algebra: falling-factorial coefficient
// with alternating sign on gen(m-j); k0(m) survives only at m = -1
SparseVec hat_element(int order, const Key& k, const Int& m) {
  SparseVec out;
  if (k.kind == Kind::CgK0) {
    if (m == -1) out.add(Key::simple(Kind::CHatK0), Scalar(order, Rat(1)));
    return out;
  }
  if (k.kind != Kind::CgGen) throw Error("hat element: not a conformal-algebra key");
  long j = to_long(k.e1);
  Rat coef(1);
  Int p = m;
  for (long t = 0; t < j; ++t) {
    coef *= Rat(-p);
    p -= 1;
  }
  if (coef == 0) return out;
  out.add(Key(Kind::CHatGen, k.a, k.b, k.e0, m - j, 0), Scalar(order, coef));
  return out;
}

// (d^j gen)[m] = (-m)^j gen[m]; k0[m] survives only at m = 0
SparseVec tilde_element(int order, const Key& k, const Int& m) {
  SparseVec out;
  if (k.kind == Kind::CgK0) {
    if (m == 0) out.add(Key::simple(Kind::CTildeK0), Scalar(order, Rat(1)));
    return out;
  }
  if (k.kind != Kind::CgGen) throw Error("tilde element: not a conformal-algebra key");
  long j = to_long(k.e1);
  Rat coef(1);
  for (long t = 0; t < j; ++t) coef *= Rat(-m);
  if (coef == 0) return out;
  out.add(Key(Kind::CTildeGen, k.a, k.b, k.e0, m, 0), Scalar(order, coef));
  return out;
}

}  // namespace

ConformalCg::ConformalCg(std::shared_ptr<const FiniteLie> g, int scalar_order, bool mutate_sign)
    : g_(std::move(g)), order_(scalar_order), mutate_(mutate_sign) {}

Key ConformalCg::gen_key(CGen tag, int sym, const Int& param, const Int& dpow) const {
  if ((tag == CGen::GKn || tag == CGen::GDn) && param == 0)
    throw Error("K_0 and D_0 are zero by convention");
  return mk_gen(tag, sym, param, dpow);
}

std::vector<Key> ConformalCg::generators(long window) const {
  std::vector<Key> out;
  for (long n = -window; n <= window; ++n)
    for (const GSym& s : g_->basis()) out.push_back(mk_gen(CGen::GLoop, g_->sym_id(s), n, 0));
  out.push_back(mk_gen(CGen::GK1, 0, 0, 0));
  out.push_back(mk_gen(CGen::GD1, 0, 0, 0));
  for (long r = -window; r <= window; ++r) {
    if (r == 0) continue;
    out.push_back(mk_gen(CGen::GKn, 0, r, 0));
    out.push_back(mk_gen(CGen::GDn, 0, r, 0));
  }
  return out;
}

SparseVec ConformalCg::gen_product(const Key& x, long i, const Key& y) const {
  SparseVec out;
  if (i < 0 || i > 2) return out;
  CGen tx = (CGen)x.a, ty = (CGen)y.a;
  Scalar one(order_, Rat(1));
  auto add = [&](CGen tag, int sym, Int param, Int dpow, const Rat& c) {
    if ((tag == CGen::GKn || tag == CGen::GDn) && param == 0) return;  // K_0 = D_0 = 0
    if (c != 0) out.add(mk_gen(tag, sym, std::move(param), std::move(dpow)), Scalar(order_, c));
  };

  // the one generator pair with nonzero second products
  if (tx == CGen::GDn && ty == CGen::GK1) {
    const Int& r = x.e0;
    if (i == 0) add(CGen::GKn, 0, r, 2, Rat(r));
    if (i == 1) add(CGen::GKn, 0, r, 1, Rat(2) * Rat(r));
    if (i == 2) add(CGen::GKn, 0, r, 0, Rat(2) * Rat(r));
    return out;
  }
  if (tx == CGen::GK1 && ty == CGen::GDn) {
    if (i == 2) add(CGen::GKn, 0, y.e0, 0, Rat(-2) * Rat(y.e0));
    return out;
  }
  if (i > 1) return out;

  if (tx == CGen::GLoop && ty == CGen::GLoop) {
    GSym u = g_->sym_from_id(x.b), v = g_->sym_from_id(y.b);
    const Int& m = x.e0;
    const Int& n = y.e0;
    Rat f = g_->form_sym(u, v);
    if (i == 0) {
      for (const auto& t : g_->bracket_sym(u, v))
        add(CGen::GLoop, g_->sym_id(t.first), m + n, 0, t.second);
      if (f != 0) {
        add(CGen::GKn, 0, m + n, 1, f * Rat(m));
        if (m + n == 0) add(CGen::GK1, 0, 0, 0, f * Rat(m));
      }
    } else {
      Rat lead = Rat(m + n) * f;
      if (mutate_) lead = -lead;  // deliberate table corruption for testing
      add(CGen::GKn, 0, m + n, 0, lead);
      if (m + n == 0 && f != 0) out.add(key_cg_k0(), Scalar(order_, f));
    }
    return out;
  }
  // In the zeroth product a D-generator always contributes its own index:
  // (D_r)_0 X_s = r d(...) throughout the table.  The same convention applies
  // against loop generators; only that choice makes the associated brackets
  // close with the t0-graded algebra.
  if (tx == CGen::GDn && ty == CGen::GLoop) {
    const Int& r = x.e0;
    const Int& m = y.e0;
    if (i == 0)
      add(CGen::GLoop, y.b, r + m, 1, Rat(r));
    else
      add(CGen::GLoop, y.b, r + m, 0, Rat(r + m));
    return out;
  }
  if (tx == CGen::GLoop && ty == CGen::GDn) {
    const Int& m = x.e0;
    const Int& r = y.e0;
    if (i == 0)
      add(CGen::GLoop, x.b, r + m, 1, Rat(m));
    else
      add(CGen::GLoop, x.b, r + m, 0, Rat(r + m));
    return out;
  }
  if (tx == CGen::GDn && ty == CGen::GKn) {
    const Int& r = x.e0;
    const Int& s = y.e0;
    if (i == 0) {
      add(CGen::GKn, 0, r + s, 1, Rat(r));
      if (r + s == 0) add(CGen::GK1, 0, 0, 0, Rat(r));
    } else {
      add(CGen::GKn, 0, r + s, 0, Rat(r + s));
      if (r + s == 0) out.add(key_cg_k0(), one);
    }
    return out;
  }
  if (tx == CGen::GKn && ty == CGen::GDn) {
    const Int& s = x.e0;
    const Int& r = y.e0;
    if (i == 0) {
      add(CGen::GKn, 0, r + s, 1, Rat(s));
      if (r + s == 0) add(CGen::GK1, 0, 0, 0, Rat(-r));
    } else {
      add(CGen::GKn, 0, r + s, 0, Rat(r + s));
      if (r + s == 0) out.add(key_cg_k0(), one);
    }
    return out;
  }
  if (tx == CGen::GD1 && ty == CGen::GLoop) {
    if (i == 0) add(CGen::GLoop, y.b, y.e0, 0, Rat(y.e0));
    return out;
  }
  if (tx == CGen::GLoop && ty == CGen::GD1) {
    if (i == 0) add(CGen::GLoop, x.b, x.e0, 0, Rat(-x.e0));
    return out;
  }
  if ((tx == CGen::GD1 && ty == CGen::GK1) || (tx == CGen::GK1 && ty == CGen::GD1)) {
    if (i == 1) out.add(key_cg_k0(), one);
    return out;
  }
  if (tx == CGen::GD1 && ty == CGen::GKn) {
    if (i == 0) add(CGen::GKn, 0, y.e0, 0, Rat(y.e0));
    return out;
  }
  if (tx == CGen::GKn && ty == CGen::GD1) {
    if (i == 0) add(CGen::GKn, 0, x.e0, 0, Rat(-x.e0));
    return out;
  }
  if (tx == CGen::GD1 && ty == CGen::GDn) {
    if (i == 0) add(CGen::GDn, 0, y.e0, 0, Rat(y.e0));
    return out;
  }
  if (tx == CGen::GDn && ty == CGen::GD1) {
    if (i == 0) add(CGen::GDn, 0, x.e0, 0, Rat(-x.e0));
    return out;
  }
  if (tx == CGen::GDn && ty == CGen::GDn) {
    const Int& r = x.e0;
    const Int& s = y.e0;
    if (i == 0) {
      add(CGen::GDn, 0, r + s, 1, Rat(r));
      if (r + s == 0) add(CGen::GD1, 0, 0, 2, Rat(-r));
    } else {
      add(CGen::GDn, 0, r + s, 0, Rat(r + s));
    }
    return out;
  }
  return out;  // every other generator pair multiplies to zero
}

SparseVec ConformalCg::iproduct(const SparseVec& x, long i, const SparseVec& y) const {
  SparseVec out;
  // a_{ii}(d^{jy} b), unfolded by the second forced shift rule
  std::function<SparseVec(const Key&, long, const Key&, long)> right =
      [&](const Key& a, long ii, const Key& b, long jy) -> SparseVec {
    if (ii < 0) return SparseVec();
    if (jy == 0) return gen_product(a, ii, b);
    SparseVec inner = right(a, ii, b, jy - 1);
    SparseVec res = del(inner);
    if (ii > 0) {
      SparseVec lower = right(a, ii - 1, b, jy - 1);
      lower.scale_rat(Rat(ii));
      res += lower;
    }
    return res;
  };
  for (const auto& txm : x.terms()) {
    for (const auto& tym : y.terms()) {
      const Key& kx = txm.first;
      const Key& ky = tym.first;
      if (kx.kind == Kind::CgK0 || ky.kind == Kind::CgK0) continue;  // central
      long jx = to_long(kx.e1);
      // (d^{jx} a)_i = (-1)^{jx} i(i-1)...(i-jx+1) a_{i-jx}
      Rat coef(1);
      bool dead = false;
      for (long t = 0; t < jx; ++t) {
        if (i - t <= 0) {
          dead = true;
          break;
        }
        coef *= Rat(-(i - t));
      }
      if (dead) continue;
      Key bare_x(Kind::CgGen, kx.a, kx.b, kx.e0, 0, 0);
      Key bare_y(Kind::CgGen, ky.a, ky.b, ky.e0, 0, 0);
      SparseVec part = right(bare_x, i - jx, bare_y, to_long(ky.e1));
      part.scale(txm.second * tym.second);
      part.scale_rat(coef);
      out += part;
    }
  }
  return out;
}

SparseVec ConformalCg::del(const SparseVec& x) const {
  SparseVec out;
  for (const auto& t : x.terms()) {
    if (t.first.kind == Kind::CgK0) continue;  // the central symbol is d-flat
    Key k = t.first;
    k.e1 += 1;
    out.add(k, t.second);
  }
  return out;
}

long ConformalCg::product_bound(const SparseVec& x, const SparseVec& y) const {
  long jx = 0, jy = 0;
  for (const auto& t : x.terms())
    if (t.first.kind == Kind::CgGen) jx = std::max(jx, to_long(t.first.e1));
  for (const auto& t : y.terms())
    if (t.first.kind == Kind::CgGen) jy = std::max(jy, to_long(t.first.e1));
  return jx + jy + 2;
}

std::string HatCAlgebra::name() const { return "hatC(" + cg_->g().rs().name() + ")"; }

SparseVec HatCAlgebra::element(const Key& k, const Int& m) const {
  return hat_element(scalar_order(), k, m);
}

SparseVec HatCAlgebra::bracket_keys(const Key& x, const Key& y) const {
  SparseVec out;
  if (x.kind == Kind::CHatK0 || y.kind == Kind::CHatK0) return out;
  if (x.kind != Kind::CHatGen || y.kind != Kind::CHatGen)
    throw Error("hatC: key outside grammar");
  Key gx(Kind::CgGen, x.a, x.b, x.e0, 0, 0);
  Key gy(Kind::CgGen, y.a, y.b, y.e0, 0, 0);
  const Int& m = x.e1;
  const Int& n = y.e1;
  Rat binom(1);
  for (long i = 0; i <= 2; ++i) {
    if (i > 0) binom *= Rat(m - (i - 1)) / i;
    if (binom == 0) break;
    SparseVec p = cg_->gen_product(gx, i, gy);
    for (const auto& t : p.terms()) {
      SparseVec e = element(t.first, m + n - i);
      e.scale(t.second * rat_scalar(binom));
      out += e;
    }
  }
  return out;
}

std::vector<Key> HatCAlgebra::spanning_keys(long window) const {
  std::vector<Key> out;
  for (const Key& g : cg_->generators(window))
    for (long m = -window; m <= window; ++m)
      out.push_back(Key(Kind::CHatGen, g.a, g.b, g.e0, m, 0));
  out.push_back(Key::simple(Kind::CHatK0));
  return out;
}

std::string TildeCAlgebra::name() const { return "tildeC(" + cg_->g().rs().name() + ")"; }

SparseVec TildeCAlgebra::element(const Key& k, const Int& m) const {
  return tilde_element(scalar_order(), k, m);
}

SparseVec TildeCAlgebra::bracket_keys(const Key& x, const Key& y) const {
  SparseVec out;
  if (x.kind == Kind::CTildeK0 || y.kind == Kind::CTildeK0) return out;
  if (x.kind == Kind::CTildeD && y.kind == Kind::CTildeD) return out;
  if (x.kind == Kind::CTildeD) {
    out.add(y, int_scalar(-y.e1));
    return out;
  }
  if (y.kind == Kind::CTildeD) {
    out.add(x, int_scalar(x.e1));
    return out;
  }
  if (x.kind != Kind::CTildeGen || y.kind != Kind::CTildeGen)
    throw Error("tildeC: key outside grammar");
  Key gx(Kind::CgGen, x.a, x.b, x.e0, 0, 0);
  Key gy(Kind::CgGen, y.a, y.b, y.e0, 0, 0);
  const Int& m = x.e1;
  const Int& n = y.e1;
  Rat pow(1);
  for (long i = 0; i <= 2; ++i) {
    if (i > 0) pow *= Rat(m) / i;  // m^i / i!
    if (pow == 0) break;
    SparseVec p = cg_->gen_product(gx, i, gy);
    for (const auto& t : p.terms()) {
      SparseVec e = element(t.first, m + n);
      e.scale(t.second * rat_scalar(pow));
      out += e;
    }
  }
  return out;
}

std::vector<Key> TildeCAlgebra::spanning_keys(long window) const {
  std::vector<Key> out;
  for (const Key& g : cg_->generators(window))
    for (long m = -window; m <= window; ++m)
      out.push_back(Key(Kind::CTildeGen, g.a, g.b, g.e0, m, 0));
  out.push_back(Key::simple(Kind::CTildeK0));
  out.push_back(key_d());
  return out;
}

ConformalAut::ConformalAut(std::shared_ptr<const ConformalCg> cg, DiagramAut mu)
    : cg_(std::move(cg)), mu_(std::move(mu)) {
  if (cg_->scalar_order() % mu_.order() != 0)
    throw Error("scalar order must contain the automorphism order");
}

SparseVec ConformalAut::apply_cg(const SparseVec& x) const {
  const FiniteLie& g = cg_->g();
  int l = g.rank();
  int order = cg_->scalar_order();
  SparseVec out;
  for (const auto& t : x.terms()) {
    const Key& k = t.first;
    if (k.kind == Kind::CgK0) {
      out.add(k, t.second);
      continue;
    }
    CGen tag = (CGen)k.a;
    const Int& j = k.e1;
    switch (tag) {
      case CGen::GK1:
      case CGen::GKn:
        out.add(k, t.second);
        break;
      case CGen::GD1: {
        out.add(k, t.second);
        for (int c = 0; c < l; ++c)
          if (mu_.hvec()[c] != 0)
            out.add(mk_gen(CGen::GLoop, g.sym_id(GSym{false, c}), 0, j),
                    t.second * Scalar(order, mu_.hvec()[c]));
        if (mu_.hh() != 0)
          out.add(mk_gen(CGen::GK1, 0, 0, j), t.second * Scalar(order, -mu_.hh() / 2));
        break;
      }
      case CGen::GDn: {
        out.add(k, t.second);
        const Int& r = k.e0;
        for (int c = 0; c < l; ++c)
          if (mu_.hvec()[c] != 0)
            out.add(mk_gen(CGen::GLoop, g.sym_id(GSym{false, c}), r, j + 1),
                    t.second * Scalar(order, -mu_.hvec()[c]));
        if (mu_.hh() != 0)
          out.add(mk_gen(CGen::GKn, 0, r, j + 2), t.second * Scalar(order, mu_.hh() / 2));
        break;
      }
      case CGen::GLoop: {
        GSym s = g.sym_from_id(k.b);
        if (s.root) {
          Scalar c = t.second;
          c.mul_rat(Rat(mu_.sign(s.idx)));
          out.add(mk_gen(CGen::GLoop, g.sym_id(GSym{true, mu_.image_root(s.idx)}),
                         k.e0 + mu_.rho_root(s.idx), j),
                  std::move(c));
        } else {
          std::vector<Rat> e(l, Rat(0));
          e[s.idx] = 1;
          std::vector<Rat> img = mu_.mu_dot_h(e);
          for (int c = 0; c < l; ++c)
            if (img[c] != 0)
              out.add(mk_gen(CGen::GLoop, g.sym_id(GSym{false, c}), k.e0, j),
                      t.second * Scalar(order, img[c]));
          Rat rho = mu_.rho_coroot(s.idx);
          if (rho != 0) {
            if (k.e0 == 0)
              out.add(mk_gen(CGen::GK1, 0, 0, j), t.second * Scalar(order, rho));
            else
              out.add(mk_gen(CGen::GKn, 0, k.e0, j + 1), t.second * Scalar(order, rho));
          }
        }
        break;
      }
    }
  }
  return out;
}

SparseVec ConformalAut::apply_hat(const SparseVec& x) const {
  int order = cg_->scalar_order();
  SparseVec out;
  for (const auto& t : x.terms()) {
    const Key& k = t.first;
    if (k.kind == Kind::CHatK0) {
      out.add(k, t.second);
      continue;
    }
    if (k.kind != Kind::CHatGen) throw Error("conformal lift: key outside grammar");
    SparseVec img = apply_cg(
        SparseVec::unit(Key(Kind::CgGen, k.a, k.b, k.e0, 0, 0), Scalar(order, Rat(1))));
    for (const auto& u : img.terms()) {
      SparseVec e = hat_element(order, u.first, k.e1);
      e.scale(u.second * t.second);
      out += e;
    }
  }
  return out;
}

SparseVec ConformalAut::apply_tilde_bar(const SparseVec& x) const {
  int order = cg_->scalar_order();
  long step = order / mu_.order();
  SparseVec out;
  for (const auto& t : x.terms()) {
    const Key& k = t.first;
    if (k.kind == Kind::CTildeK0 || k.kind == Kind::CTildeD) {
      out.add(k, t.second);
      continue;
    }
    if (k.kind != Kind::CTildeGen) throw Error("conformal twist: key outside grammar");
    Scalar w = Scalar::from_cyclotomic(Cyclotomic::root_power(order, -k.e1 * step)) * t.second;
    SparseVec img = apply_cg(
        SparseVec::unit(Key(Kind::CgGen, k.a, k.b, k.e0, 0, 0), Scalar(order, Rat(1))));
    for (const auto& u : img.terms()) {
      SparseVec e = tilde_element(order, u.first, k.e1);
      e.scale(u.second * w);
      out += e;
    }
  }
  return out;
}

CovariantCgAlgebra::CovariantCgAlgebra(std::shared_ptr<const TildeCAlgebra> tc, ConformalAut r)
    : tc_(std::move(tc)), r_(std::move(r)) {}

std::string CovariantCgAlgebra::name() const {
  return "covariant-" + tc_->name() + "[T=" + std::to_string(r_.order()) + "]";
}

SparseVec CovariantCgAlgebra::average(const SparseVec& x) const {
  SparseVec acc, cur = x;
  for (int p = 0; p < r_.order(); ++p) {
    acc += cur;
    if (p + 1 < r_.order()) cur = r_.apply_tilde_bar(cur);
  }
  return acc;
}

bool CovariantCgAlgebra::is_zero_element(const SparseVec& v) const {
  if (v.is_zero()) return true;
  return average(v).is_zero();
}

SparseVec CovariantCgAlgebra::bracket_keys(const Key& x, const Key& y) const {
  if (x.kind == Kind::CTildeD || y.kind == Kind::CTildeD) return tc_->bracket_keys(x, y);
  SparseVec out;
  SparseVec cur = SparseVec::unit(x, one_scalar());
  SparseVec yv = SparseVec::unit(y, one_scalar());
  for (int p = 0; p < r_.order(); ++p) {
    out += tc_->bracket(cur, yv);
    if (p + 1 < r_.order()) cur = r_.apply_tilde_bar(cur);
  }
  return out;
}

std::vector<Key> CovariantCgAlgebra::spanning_keys(long window) const {
  return tc_->spanning_keys(window);
}

SparseVec hatc_to_ghat(const ConformalCg& cg, const SparseVec& x, const ToroidalAlgebra& ghat) {
  if (ghat.flavor() != ToroidalFlavor::GHat) throw Error("target must be the t0-graded algebra");
  const FiniteLie& g = cg.g();
  SparseVec out;
  for (const auto& t : x.terms()) {
    const Key& k = t.first;
    if (k.kind == Kind::CHatK0) {
      out.add(key_k0(), t.second);
      continue;
    }
    if (k.kind != Kind::CHatGen) throw Error("not an element of the t-graded algebra");
    const Int& m = k.e1;
    switch ((CGen)k.a) {
      case CGen::GLoop: out.add(g.key_of_sym(g.sym_from_id(k.b), m, k.e0), t.second); break;
      case CGen::GK1: out.add(key_kline(m), t.second); break;
      case CGen::GD1: out.add(key_dline(m), t.second); break;
      case CGen::GKn: out.add(key_kpair(m + 1, k.e0), t.second); break;
      case CGen::GDn: out.add(key_dhat(m - 1, k.e0), t.second); break;
    }
  }
  return out;
}

SparseVec tildec_to_gtilde(const ConformalCg& cg, const SparseVec& x, const ToroidalAut& aut) {
  const FiniteLie& g = cg.g();
  int T = aut.order();
  SparseVec out;
  for (const auto& t : x.terms()) {
    const Key& k = t.first;
    if (k.kind == Kind::CTildeK0) {
      out.add(key_k0(), t.second * Scalar(aut.algebra().scalar_order(), Rat(T)));
      continue;
    }
    if (k.kind == Kind::CTildeD) {
      out.add(key_d0(), -t.second);
      continue;
    }
    if (k.kind != Kind::CTildeGen) throw Error("not an element of the loop-graded algebra");
    const Int& m = k.e1;
    Key base;
    switch ((CGen)k.a) {
      case CGen::GLoop: base = g.key_of_sym(g.sym_from_id(k.b), m, k.e0); break;
      case CGen::GK1: base = key_kline(m); break;
      case CGen::GD1: base = key_dline(m); break;
      case CGen::GKn: base = key_kpair(m, k.e0); break;
      case CGen::GDn: base = key_dtilde(m, k.e0); break;
    }
    SparseVec e = aut.eta(SparseVec::unit(base, aut.algebra().one_scalar()));
    e.scale(t.second);
    out += e;
  }
  return out;
}

}  // namespace ealax
