#include <doctest.h>

#include <memory>
#include <random>

#include "ealax/toroidal.hpp"

using namespace ealax;

namespace {

std::shared_ptr<ToroidalAlgebra> make_alg(LieType t, int r, ToroidalFlavor f, int order = 1) {
  return std::make_shared<ToroidalAlgebra>(std::make_shared<FiniteLie>(t, r), f, order);
}

SparseVec unit(const Algebra& a, const Key& k) { return SparseVec::unit(k, a.one_scalar()); }

void check_lie_axioms(const Algebra& alg, long window) {
  auto keys = alg.spanning_keys(window);
  size_t n = keys.size();
  std::vector<SparseVec> units;
  units.reserve(n);
  for (const Key& k : keys) units.push_back(unit(alg, k));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i; j < n; ++j) {
      REQUIRE(alg.is_zero_element(alg.bracket(units[i], units[j]) + alg.bracket(units[j], units[i])));
      for (size_t k = j; k < n; ++k) {
        SparseVec s = alg.bracket(alg.bracket(units[i], units[j]), units[k]);
        s += alg.bracket(alg.bracket(units[j], units[k]), units[i]);
        s += alg.bracket(alg.bracket(units[k], units[i]), units[j]);
        REQUIRE(alg.is_zero_element(s));
      }
    }
}

}  // namespace

TEST_CASE("reduce_k basis expansion") {
  // t1 k0 -> k_{0,1}
  SparseVec r = reduce_k(1, 0, 1, 0);
  REQUIRE(r.size() == 1);
  CHECK(r.terms()[0].first == key_kpair(0, 1));
  CHECK(r.terms()[0].second == Scalar(1, Rat(1)));
  // t0^2 k0 -> 0
  CHECK(reduce_k(1, 2, 0, 0).is_zero());
  // t0^2 k1 = -2 k_{2,0} = t0^2 k1 (a basis line)
  SparseVec r2 = reduce_k(1, 2, 0, 1);
  REQUIRE(r2.size() == 1);
  CHECK(r2.terms()[0].first == key_kline(2));
  // and the k_{2,0} element itself normalizes to -(1/2) t0^2 k1
  SparseVec kp = kpair_elem(1, 2, 0);
  REQUIRE(kp.size() == 1);
  CHECK(kp.terms()[0].first == key_kline(2));
  CHECK(kp.terms()[0].second == Scalar(1, Rat(-1, 2)));
  // k0 stays k0
  SparseVec r3 = reduce_k(1, 0, 0, 0);
  REQUIRE(r3.size() == 1);
  CHECK(r3.terms()[0].first == key_k0());
  // defining relation: m0 * red(m0,m1,0) + m1 * red(m0,m1,1) = 0
  for (long m0 = -5; m0 <= 5; ++m0)
    for (long m1 = -5; m1 <= 5; ++m1) {
      SparseVec s = reduce_k(1, m0, m1, 0);
      s.scale_rat(Rat(m0));
      SparseVec s2 = reduce_k(1, m0, m1, 1);
      s2.scale_rat(Rat(m1));
      s += s2;
      CHECK(s.is_zero());
    }
}

TEST_CASE("double-loop bracket examples") {
  auto t = make_alg(LieType::A, 1, ToroidalFlavor::T);
  // [t0 x e, t0^-1 x f] = h + k0
  SparseVec lhs = t->bracket(unit(*t, loop_root(1, 0, 0)), unit(*t, loop_root(-1, 0, 1)));
  SparseVec expect = unit(*t, loop_coroot(0, 0, 0));
  expect.add(key_k0(), t->one_scalar());
  CHECK(lhs == expect);

  auto gt = make_alg(LieType::A, 1, ToroidalFlavor::GTilde);
  // [d~_{1,0}, d~_{0,1}] = d~_{1,1}; note d~_{1,0} = t0 d1
  SparseVec a = unit(*gt, key_dline(1));  // = (1/1) d~_{1,0}
  SparseVec b = unit(*gt, key_dtilde(0, 1));
  CHECK(gt->bracket(a, b) == unit(*gt, key_dtilde(1, 1)));
  // [d~_{1,2}, t0^3 t1^4 x] = -2 t0^4 t1^6 x
  SparseVec c = gt->bracket(unit(*gt, key_dtilde(1, 2)), unit(*gt, loop_root(3, 4, 0)));
  SparseVec expc = unit(*gt, loop_root(4, 6, 0));
  expc.scale_rat(Rat(-2));
  CHECK(c == expc);

  auto gh = make_alg(LieType::A, 1, ToroidalFlavor::GHat);
  // [t0^-1 d0, d^_{n,m}] = (n+1) d^_{n-1,m}
  for (long n : {-2L, 0L, 3L})
    for (long m : {1L, -2L}) {
      SparseVec got = gh->bracket(unit(*gh, key_dhat_t0()), unit(*gh, key_dhat(n, m)));
      SparseVec exp2 = unit(*gh, key_dhat(n - 1, m));
      exp2.scale_rat(Rat(n + 1));
      CHECK(got == exp2);
    }
  // [d^_{0,1}, d^_{0,-1}] = -2 t0^0 d1
  SparseVec dd = gh->bracket(unit(*gh, key_dhat(0, 1)), unit(*gh, key_dhat(0, -1)));
  SparseVec expd = unit(*gh, key_dline(0));
  expd.scale_rat(Rat(-2));
  CHECK(dd == expd);
  // key outside grammar rejected
  CHECK_THROWS_AS(t->bracket_keys(key_d0(), key_k0()), Error);
  CHECK_THROWS_AS(gt->bracket_keys(key_dhat(0, 1), key_k0()), Error);
}

TEST_CASE("cocycle bracket") {
  auto g = std::make_shared<FiniteLie>(LieType::A, 1);
  // symbolic parameter: the formal unit q, unused elsewhere in this algebra
  Scalar a = Scalar::q_power(1, 1);
  auto gta = std::make_shared<ToroidalAlgebra>(g, ToroidalFlavor::GTildeTau, 1, a);
  auto gt = std::make_shared<ToroidalAlgebra>(g, ToroidalFlavor::GTilde, 1);

  // a = 0 -> same as the plain bracket, on every spanning pair
  auto zero_cocycle = std::make_shared<ToroidalAlgebra>(g, ToroidalFlavor::GTildeTau, 1, Scalar(1));
  auto keys = gt->spanning_keys(2);
  std::mt19937_64 rng(3);
  for (int it = 0; it < 300; ++it) {
    const Key& x = keys[rng() % keys.size()];
    const Key& y = keys[rng() % keys.size()];
    CHECK(zero_cocycle->bracket_keys(x, y) == gt->bracket_keys(x, y));
  }

  // [d~_{1,0}, d~_{0,1}]_tau = d~_{1,1} + a k_{1,1}; d~_{1,0} = t0 d1
  SparseVec got = gta->bracket(unit(*gta, key_dline(1)), unit(*gta, key_dtilde(0, 1)));
  SparseVec expect = unit(*gta, key_dtilde(1, 1));
  expect.add(key_kpair(1, 1), a);
  CHECK(got == expect);

  // <tau(s1,s2), s3> = <s1, tau(s2,s3)> where tau = [.,.]_tau - [.,.]
  std::vector<Key> skeys;
  for (const Key& k : keys)
    if (k.kind == Kind::D0 || k.kind == Kind::DLine || k.kind == Kind::DTilde) skeys.push_back(k);
  for (int it = 0; it < 200; ++it) {
    const Key& s1 = skeys[rng() % skeys.size()];
    const Key& s2 = skeys[rng() % skeys.size()];
    const Key& s3 = skeys[rng() % skeys.size()];
    SparseVec t12 = gta->bracket_keys(s1, s2) - gt->bracket_keys(s1, s2);
    SparseVec t23 = gta->bracket_keys(s2, s3) - gt->bracket_keys(s2, s3);
    CHECK(gta->form(t12, unit(*gta, s3)) == gta->form(unit(*gta, s1), t23));
  }
}

TEST_CASE("invariant form on the derivation extension") {
  auto gt = make_alg(LieType::A, 1, ToroidalFlavor::GTilde);
  CHECK(gt->form_keys(key_k0(), key_d0()) == gt->one_scalar());
  CHECK(gt->form_keys(key_dtilde(1, 2), key_kpair(-1, -2)) == gt->one_scalar());
  CHECK(gt->form_keys(key_kpair(-1, -2), key_dtilde(1, 2)) == gt->one_scalar());
  CHECK(gt->form_keys(key_k0(), key_k0()) == gt->zero_scalar());
  // invariance on sampled triples
  auto keys = gt->spanning_keys(2);
  std::mt19937_64 rng(8);
  for (int it = 0; it < 500; ++it) {
    SparseVec x = unit(*gt, keys[rng() % keys.size()]);
    SparseVec y = unit(*gt, keys[rng() % keys.size()]);
    SparseVec z = unit(*gt, keys[rng() % keys.size()]);
    CHECK(gt->form(gt->bracket(x, y), z) == gt->form(x, gt->bracket(y, z)));
  }
}

TEST_CASE("Lie axioms on small windows") {
  check_lie_axioms(*make_alg(LieType::A, 1, ToroidalFlavor::T), 1);
  check_lie_axioms(*make_alg(LieType::A, 1, ToroidalFlavor::GTilde), 1);
  check_lie_axioms(*make_alg(LieType::A, 1, ToroidalFlavor::GHat), 1);
}

TEST_CASE("lifted automorphisms of the double-loop algebra") {
  auto g = std::make_shared<FiniteLie>(LieType::A, 2);
  auto gt = std::make_shared<ToroidalAlgebra>(g, ToroidalFlavor::GTilde, 2);
  auto aff = std::make_shared<AffineAlgebra>(g, 2);
  DiagramAut mu(aff, {0, 2, 1});
  ToroidalAut aut(gt, mu);

  SUBCASE("mu-hat fixes the central space and shifts the d1 line") {
    SparseVec k = unit(*gt, key_kpair(3, -2));
    CHECK(aut.mu_hat(k) == k);
    // mu-hat(t0^m t1^n d1) on the raw monomial, via d~ expansion with h = 0
    CHECK(mu.hvec() == std::vector<Rat>(2, Rat(0)));
    SparseVec d = unit(*gt, key_dtilde(1, 1));
    CHECK(aut.mu_hat(d) == d);
  }

  SUBCASE("mu-tilde scales by the root of unity along the t0 grading") {
    SparseVec k0v = unit(*gt, key_k0());
    CHECK(aut.mu_tilde(k0v) == k0v);
    SparseVec d0v = unit(*gt, key_d0());
    CHECK(aut.mu_tilde(d0v) == d0v);
    SparseVec kp = unit(*gt, key_kpair(1, 2));
    SparseVec expect = kp;
    expect.scale(Scalar::from_cyclotomic(Cyclotomic::root_power(2, -1)));
    CHECK(aut.mu_tilde(kp) == expect);
  }

  SUBCASE("mu-tilde has order T on spanning keys") {
    for (const Key& k : gt->spanning_keys(2)) {
      SparseVec v = unit(*gt, k);
      SparseVec w = v;
      for (int p = 0; p < mu.order(); ++p) w = aut.mu_tilde(w);
      REQUIRE(w == v);
    }
  }

  SUBCASE("mu-hat and mu-tilde are bracket homomorphisms") {
    auto keys = gt->spanning_keys(2);
    std::mt19937_64 rng(21);
    for (int it = 0; it < 250; ++it) {
      SparseVec x = unit(*gt, keys[rng() % keys.size()]);
      SparseVec y = unit(*gt, keys[rng() % keys.size()]);
      REQUIRE(aut.mu_hat(gt->bracket(x, y)) == gt->bracket(aut.mu_hat(x), aut.mu_hat(y)));
      REQUIRE(aut.mu_tilde(gt->bracket(x, y)) == gt->bracket(aut.mu_tilde(x), aut.mu_tilde(y)));
      REQUIRE(gt->form(aut.mu_tilde(x), aut.mu_tilde(y)) == gt->form(x, y));
    }
  }

  SUBCASE("eta lands in the fixed subalgebra") {
    auto keys = gt->spanning_keys(2);
    std::mt19937_64 rng(22);
    SparseVec k0v = unit(*gt, key_k0());
    SparseVec ek0 = aut.eta(k0v);
    SparseVec two_k0 = k0v;
    two_k0.scale_rat(Rat(2));
    CHECK(ek0 == two_k0);
    for (int it = 0; it < 200; ++it) {
      SparseVec x = unit(*gt, keys[rng() % keys.size()]);
      SparseVec e = aut.eta(x);
      REQUIRE(aut.mu_tilde(e) == e);
    }
    // odd t0-degree root vectors average to t0^m (x_a1 - x_a2)
    const RootSystem& rs = g->rs();
    std::vector<int> e1{1, 0}, e2{0, 1};
    SparseVec x = unit(*gt, loop_root(1, 0, rs.root_id(e1)));
    SparseVec expect = x;
    expect.add(loop_root(1, 0, rs.root_id(e2)), gt->rat_scalar(Rat(-1)));
    CHECK(aut.eta(x) == expect);
  }
}

TEST_CASE("mu-tilde on coroot loops matches the displayed action") {
  // rotation of the affine A2 diagram: rho is nonzero, h is nonzero
  auto g = std::make_shared<FiniteLie>(LieType::A, 2);
  auto gt = std::make_shared<ToroidalAlgebra>(g, ToroidalFlavor::GTilde, 3);
  auto aff = std::make_shared<AffineAlgebra>(g, 3);
  DiagramAut mu(aff, {1, 2, 0});
  ToroidalAut aut(gt, mu);

  // mu-tilde(t0^m t1^n (x) h) = w^-m (t0^m t1^n (x) mu(h) - rho(h) m k_{m,n})
  for (long m : {1L, -2L})
    for (long n : {1L, 2L}) {
      for (int i = 0; i < 2; ++i) {
        SparseVec x = unit(*gt, loop_coroot(m, n, i));
        SparseVec expect;
        std::vector<Rat> e(2, Rat(0));
        e[i] = 1;
        std::vector<Rat> img = mu.mu_dot_h(e);
        for (int j = 0; j < 2; ++j)
          if (img[j] != 0) expect.add(loop_coroot(m, n, j), gt->rat_scalar(img[j]));
        Rat rho = mu.rho_coroot(i);
        if (rho != 0) {
          SparseVec kp = kpair_elem(3, m, n);
          kp.scale_rat(-rho * Rat(m));
          expect += kp;
        }
        expect.scale(Scalar::from_cyclotomic(Cyclotomic::root_power(3, -m)));
        REQUIRE(aut.mu_tilde(x) == expect);
      }
      // mu-tilde(d~_{m,n}) = w^-m (d~ + m t^m t^n h + <h,h>/2 m^2 k_{m,n})
      SparseVec d = unit(*gt, key_dtilde(m, n));
      SparseVec expect = d;
      for (int j = 0; j < 2; ++j)
        if (mu.hvec()[j] != 0)
          expect.add(loop_coroot(m, n, j), gt->rat_scalar(Rat(m) * mu.hvec()[j]));
      SparseVec kp = kpair_elem(3, m, n);
      kp.scale_rat(mu.hh() / 2 * Rat(m) * Rat(m));
      expect += kp;
      expect.scale(Scalar::from_cyclotomic(Cyclotomic::root_power(3, -m)));
      REQUIRE(aut.mu_tilde(d) == expect);
    }
}

TEST_CASE("folded data") {
  auto g2 = std::make_shared<FiniteLie>(LieType::A, 2);
  auto aff2 = std::make_shared<AffineAlgebra>(g2, 2);

  SUBCASE("identity: folded matrix is the affine Cartan matrix") {
    auto g1 = std::make_shared<FiniteLie>(LieType::A, 1);
    auto aff1 = std::make_shared<AffineAlgebra>(g1, 1);
    DiagramAut id(aff1, {0, 1});
    FoldedData fd = folded_datum(id);
    CHECK(fd.reps == std::vector<int>{0, 1});
    CHECK(fd.Ti == std::vector<int>{1, 1});
    CHECK(fd.si == std::vector<int>{1, 1});
    CHECK(fd.cartan == aff1->affine_cartan());
    CHECK(fd.p_poly(0) == std::vector<Rat>{Rat(1)});
  }

  SUBCASE("swap on affine A2") {
    DiagramAut mu(aff2, {0, 2, 1});
    FoldedData fd = folded_datum(mu);
    CHECK(fd.reps == std::vector<int>{0, 1});
    CHECK(fd.Ti == std::vector<int>{2, 1});
    CHECK(fd.si == std::vector<int>{1, 2});
    CHECK(fd.p_poly(1) == std::vector<Rat>{Rat(1), Rat(1)});  // 1 + z
    CHECK(fd.cartan == std::vector<std::vector<long>>{{2, -1}, {-4, 2}});
    CHECK(is_affine_gcm(fd.cartan));
  }

  SUBCASE("swap13 on affine A3") {
    auto g3 = std::make_shared<FiniteLie>(LieType::A, 3);
    auto aff3 = std::make_shared<AffineAlgebra>(g3, 2);
    DiagramAut mu(aff3, {0, 3, 2, 1});
    FoldedData fd = folded_datum(mu);
    CHECK(fd.reps == std::vector<int>{0, 1, 2});
    CHECK(fd.si == std::vector<int>{1, 1, 1});
    CHECK(fd.Ti == std::vector<int>{2, 1, 2});
    CHECK(is_affine_gcm(fd.cartan));
  }

  SUBCASE("transitive rejected") {
    auto aff = std::make_shared<AffineAlgebra>(g2, 3);
    DiagramAut rot(aff, {1, 2, 0});
    CHECK_THROWS_AS(folded_datum(rot), Error);
  }
}

TEST_CASE("affine GCM predicate") {
  CHECK(is_affine_gcm({{2, -1}, {-4, 2}}));
  CHECK(is_affine_gcm({{2, -2}, {-2, 2}}));
  CHECK_FALSE(is_affine_gcm({{2, -1}, {-1, 2}}));   // finite type
  CHECK_FALSE(is_affine_gcm({{2, -1}, {-5, 2}}));   // indefinite
  CHECK_FALSE(is_affine_gcm({{2, 1}, {-1, 2}}));    // positive off-diagonal
}

TEST_CASE("twisted root enumeration") {
  auto g = std::make_shared<FiniteLie>(LieType::A, 2);
  auto aff = std::make_shared<AffineAlgebra>(g, 2);
  DiagramAut mu(aff, {0, 2, 1});
  FoldedData fd = folded_datum(mu);
  auto roots = twisted_roots(mu, fd, 6, 3);
  CHECK(roots.size() > 10);

  // contains 2*alpha-check_1 + delta_0 (the s = 2 family with m = 0)
  // alpha-check_1 = (alpha_1 + alpha_2)/2
  TwistedRoot want{{Rat(1), Rat(1)}, Rat(0), Rat(1)};
  bool found = false;
  for (const auto& r : roots) found = found || (r == want);
  CHECK(found);

  // negation-closed within the window
  for (const auto& r : roots) {
    TwistedRoot neg = r;
    for (Rat& c : neg.finite) c = -c;
    neg.d1 = -neg.d1;
    neg.d0 = -neg.d0;
    bool has = false;
    for (const auto& s : roots) has = has || (s == neg);
    CHECK(has);
  }
}
