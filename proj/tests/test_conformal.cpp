#include <doctest.h>

#include <memory>
#include <random>

#include "ealax/conformal.hpp"

using namespace ealax;

namespace {

std::shared_ptr<ConformalCg> make_cg(LieType t, int r, int order = 1, bool mutate = false) {
  return std::make_shared<ConformalCg>(std::make_shared<FiniteLie>(t, r), order, mutate);
}

SparseVec unit(const Algebra& a, const Key& k) { return SparseVec::unit(k, a.one_scalar()); }

SparseVec unit(const ConformalCg& cg, const Key& k) {
  return SparseVec::unit(k, Scalar(cg.scalar_order(), Rat(1)));
}

// antisymmetry + Jacobi over the full spanning window; returns failure count
long lie_axiom_failures(const Algebra& alg, long window) {
  auto keys = alg.spanning_keys(window);
  std::vector<SparseVec> u;
  for (const Key& k : keys) u.push_back(unit(alg, k));
  long failures = 0;
  size_t n = keys.size();
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i; j < n; ++j) {
      if (!alg.is_zero_element(alg.bracket(u[i], u[j]) + alg.bracket(u[j], u[i]))) ++failures;
      for (size_t k = j; k < n; ++k) {
        SparseVec s = alg.bracket(alg.bracket(u[i], u[j]), u[k]);
        s += alg.bracket(alg.bracket(u[j], u[k]), u[i]);
        s += alg.bracket(alg.bracket(u[k], u[i]), u[j]);
        if (!alg.is_zero_element(s)) ++failures;
      }
    }
  return failures;
}

}  // namespace

TEST_CASE("i-product table examples") {
  auto cg = make_cg(LieType::A, 1);
  const FiniteLie& g = cg->g();
  int e = g.sym_id(GSym{true, 0});
  int f = g.sym_id(GSym{true, 1});

  // (t^m u)_1 (t^n v) = (m+n)<u,v> K_{m+n} + delta <u,v> k0, with <e,f> = 1
  SparseVec lhs = cg->iproduct(unit(*cg, cg->gen_key(CGen::GLoop, e, 2)), 1,
                               unit(*cg, cg->gen_key(CGen::GLoop, f, 1)));
  SparseVec expect = unit(*cg, cg->gen_key(CGen::GKn, 0, 3));
  expect.scale_rat(Rat(3));
  CHECK(lhs == expect);

  // (D_r)_0 (D_s) = r d (x) D_{r+s} + delta(-r d^2 (x) d1)
  SparseVec dd = cg->iproduct(unit(*cg, cg->gen_key(CGen::GDn, 0, 2)), 0,
                              unit(*cg, cg->gen_key(CGen::GDn, 0, -2)));
  SparseVec expect2 = unit(*cg, cg->gen_key(CGen::GD1, 0, 0, 2));
  expect2.scale_rat(Rat(-2));
  CHECK(dd == expect2);

  // (d1)_0 (K_r) = r K_r; products vanish for i >= 2 on all generator pairs
  SparseVec dk = cg->iproduct(unit(*cg, cg->gen_key(CGen::GD1, 0, 0)), 0,
                              unit(*cg, cg->gen_key(CGen::GKn, 0, 5)));
  SparseVec expect3 = unit(*cg, cg->gen_key(CGen::GKn, 0, 5));
  expect3.scale_rat(Rat(5));
  CHECK(dk == expect3);
  // second products survive only on the central-line/derivation pairs
  for (const Key& a : cg->generators(2))
    for (const Key& b : cg->generators(2)) {
      bool kd_pair = ((CGen)a.a == CGen::GK1 && (CGen)b.a == CGen::GDn) ||
                     ((CGen)a.a == CGen::GDn && (CGen)b.a == CGen::GK1);
      if (!kd_pair) CHECK(cg->iproduct(unit(*cg, a), 2, unit(*cg, b)).is_zero());
      CHECK(cg->iproduct(unit(*cg, a), 3, unit(*cg, b)).is_zero());
    }
  SparseVec kd = cg->iproduct(unit(*cg, cg->gen_key(CGen::GDn, 0, 4)), 2,
                              unit(*cg, cg->gen_key(CGen::GK1, 0, 0)));
  SparseVec expect4 = unit(*cg, cg->gen_key(CGen::GKn, 0, 4));
  expect4.scale_rat(Rat(8));
  CHECK(kd == expect4);
}

TEST_CASE("derived products on shifted arguments") {
  auto cg = make_cg(LieType::A, 1);
  std::mt19937_64 rng(31);
  auto gens = cg->generators(2);
  // (d a)_i b = -i a_{i-1} b  and  a_i (d b) = d(a_i b) + i a_{i-1} b
  for (int it = 0; it < 200; ++it) {
    SparseVec a = unit(*cg, gens[rng() % gens.size()]);
    SparseVec b = unit(*cg, gens[rng() % gens.size()]);
    for (long i = 0; i <= 3; ++i) {
      SparseVec left = cg->iproduct(cg->del(a), i, b);
      SparseVec expect = i == 0 ? SparseVec() : cg->iproduct(a, i - 1, b);
      expect.scale_rat(Rat(-i));
      CHECK(left == expect);
      SparseVec right = cg->iproduct(a, i, cg->del(b));
      SparseVec expect2 = cg->del(cg->iproduct(a, i, b));
      if (i > 0) {
        SparseVec lower = cg->iproduct(a, i - 1, b);
        lower.scale_rat(Rat(i));
        expect2 += lower;
      }
      CHECK(right == expect2);
    }
  }
}

TEST_CASE("table-level skew symmetry") {
  // u_i v = -(-1)^i sum_j (-1)^j d^j/j! (v_{i+j} u), finitely truncated
  for (auto spec : std::vector<std::pair<LieType, int>>{{LieType::A, 1}, {LieType::A, 2}}) {
    auto cg = make_cg(spec.first, spec.second);
    auto gens = cg->generators(2);
    for (const Key& a : gens)
      for (const Key& b : gens)
        for (long i = 0; i <= 2; ++i) {
          SparseVec lhs = cg->iproduct(unit(*cg, a), i, unit(*cg, b));
          SparseVec rhs;
          Rat fact(1);
          for (long j = 0; j <= 3; ++j) {
            if (j > 0) fact *= Rat(-1) / j;  // (-1)^j / j!
            SparseVec term = cg->iproduct(unit(*cg, b), i + j, unit(*cg, a));
            for (long t = 0; t < j; ++t) term = cg->del(term);
            term.scale_rat(fact);
            rhs += term;
          }
          if (i % 2 == 0) rhs = -rhs;
          REQUIRE(lhs == rhs);
        }
  }
}

TEST_CASE("t-graded Lie algebra of the conformal algebra") {
  auto cg = make_cg(LieType::A, 1);
  HatCAlgebra hc(cg);
  const FiniteLie& g = cg->g();
  int e = g.sym_id(GSym{true, 0});
  int f = g.sym_id(GSym{true, 1});
  int h = g.sym_id(GSym{false, 0});

  // [u(1), v(-1)] = h(0) + k0(-1) for <u,v> = 1, [u,v] = h at loop degree 0
  SparseVec lhs = hc.bracket(unit(hc, Key(Kind::CHatGen, (int)CGen::GLoop, e, 0, 1, 0)),
                             unit(hc, Key(Kind::CHatGen, (int)CGen::GLoop, f, 0, -1, 0)));
  SparseVec expect = unit(hc, Key(Kind::CHatGen, (int)CGen::GLoop, h, 0, 0, 0));
  expect.add(Key::simple(Kind::CHatK0), hc.one_scalar());
  CHECK(lhs == expect);

  // d-compatibility: [(da)(m), b(n)] = -m [a(m-1), b(n)]
  std::mt19937_64 rng(5);
  auto gens = cg->generators(2);
  for (int it = 0; it < 150; ++it) {
    const Key& a = gens[rng() % gens.size()];
    const Key& b = gens[rng() % gens.size()];
    long m = (long)(rng() % 7) - 3, n = (long)(rng() % 7) - 3;
    SparseVec da_m;  // (da)(m) expanded
    {
      Key shifted(Kind::CgGen, a.a, a.b, a.e0, 1, 0);
      da_m = hc.element(shifted, m);
    }
    SparseVec bn = unit(hc, Key(Kind::CHatGen, b.a, b.b, b.e0, n, 0));
    SparseVec left = hc.bracket(da_m, bn);
    SparseVec right = hc.bracket(unit(hc, Key(Kind::CHatGen, a.a, a.b, a.e0, m - 1, 0)), bn);
    right.scale_rat(Rat(-m));
    REQUIRE(left == right);
  }
}

TEST_CASE("conformal axioms via the associated Lie algebra") {
  CHECK(lie_axiom_failures(HatCAlgebra(make_cg(LieType::A, 1)), 2) == 0);
  // a corrupted table must be detected
  CHECK(lie_axiom_failures(HatCAlgebra(make_cg(LieType::A, 1, 1, true)), 2) > 0);
}

TEST_CASE("loop-graded Lie algebra relations") {
  auto cg = make_cg(LieType::A, 1);
  TildeCAlgebra tc(cg);
  auto gens = cg->generators(2);
  std::mt19937_64 rng(9);
  // [u[0], v[n]] = (u0 v)[n]
  for (int it = 0; it < 100; ++it) {
    const Key& a = gens[rng() % gens.size()];
    const Key& b = gens[rng() % gens.size()];
    long n = (long)(rng() % 7) - 3;
    SparseVec left = tc.bracket(unit(tc, Key(Kind::CTildeGen, a.a, a.b, a.e0, 0, 0)),
                                unit(tc, Key(Kind::CTildeGen, b.a, b.b, b.e0, n, 0)));
    SparseVec prod = cg->gen_product(Key(Kind::CgGen, a.a, a.b, a.e0, 0, 0), 0,
                                     Key(Kind::CgGen, b.a, b.b, b.e0, 0, 0));
    SparseVec right;
    for (const auto& t : prod.terms()) {
      SparseVec e = tc.element(t.first, n);
      e.scale(t.second);
      right += e;
    }
    REQUIRE(left == right);
  }
  // [d, u[m]] = -m u[m]
  for (const Key& a : gens) {
    Key am(Kind::CTildeGen, a.a, a.b, a.e0, 2, 0);
    SparseVec got = tc.bracket(unit(tc, TildeCAlgebra::key_d()), unit(tc, am));
    SparseVec expect = unit(tc, am);
    expect.scale_rat(Rat(-2));
    CHECK(got == expect);
  }
  CHECK(lie_axiom_failures(tc, 1) == 0);
}

TEST_CASE("twist of the conformal algebra by a diagram automorphism") {
  auto g = std::make_shared<FiniteLie>(LieType::A, 2);
  auto cg = std::make_shared<ConformalCg>(g, 2);
  auto aff = std::make_shared<AffineAlgebra>(g, 2);
  DiagramAut mu(aff, {0, 2, 1});
  ConformalAut R(cg, mu);

  // R fixes k0 and the K line
  SparseVec k0 = SparseVec::unit(ConformalCg::key_cg_k0(), Scalar(2, Rat(1)));
  CHECK(R.apply_cg(k0) == k0);
  SparseVec kn = SparseVec::unit(cg->gen_key(CGen::GKn, 0, 3, 2), Scalar(2, Rat(1)));
  CHECK(R.apply_cg(kn) == kn);

  // R^T = id on generators
  for (const Key& a : cg->generators(2)) {
    SparseVec v = SparseVec::unit(a, Scalar(2, Rat(1)));
    SparseVec w = v;
    for (int p = 0; p < mu.order(); ++p) w = R.apply_cg(w);
    REQUIRE(w == v);
  }

  // R commutes with d, and the lift is a bracket homomorphism
  HatCAlgebra hc(cg);
  auto keys = hc.spanning_keys(2);
  std::mt19937_64 rng(13);
  for (int it = 0; it < 250; ++it) {
    const Key& a = keys[rng() % keys.size()];
    const Key& b = keys[rng() % keys.size()];
    SparseVec va = unit(hc, a), vb = unit(hc, b);
    REQUIRE(R.apply_hat(hc.bracket(va, vb)) == hc.bracket(R.apply_hat(va), R.apply_hat(vb)));
  }
  for (const Key& a : cg->generators(2)) {
    SparseVec v = SparseVec::unit(a, Scalar(2, Rat(1)));
    REQUIRE(R.apply_cg(cg->del(v)) == cg->del(R.apply_cg(v)));
  }
}

TEST_CASE("covariant conformal algebra is a Lie algebra on classes") {
  auto g = std::make_shared<FiniteLie>(LieType::A, 2);
  auto cg = std::make_shared<ConformalCg>(g, 2);
  auto aff = std::make_shared<AffineAlgebra>(g, 2);
  DiagramAut mu(aff, {0, 2, 1});
  auto tc = std::make_shared<TildeCAlgebra>(cg);
  CovariantCgAlgebra cov(tc, ConformalAut(cg, mu));
  CHECK(lie_axiom_failures(cov, 1) == 0);
  // central class: bracket with k0[0] vanishes
  auto keys = cov.spanning_keys(2);
  for (const Key& k : keys)
    CHECK(cov.is_zero_element(cov.bracket_keys(Key::simple(Kind::CTildeK0), k)));
}

TEST_CASE("structural maps intertwine the brackets") {
  auto g = std::make_shared<FiniteLie>(LieType::A, 1);
  auto cg = std::make_shared<ConformalCg>(g, 1);

  SUBCASE("t-graded onto the shifted-derivation algebra") {
    HatCAlgebra hc(cg);
    auto ghat = std::make_shared<ToroidalAlgebra>(g, ToroidalFlavor::GHat, 1);
    auto keys = hc.spanning_keys(2);
    for (const Key& a : keys)
      for (const Key& b : keys) {
        SparseVec va = unit(hc, a), vb = unit(hc, b);
        SparseVec lhs = hatc_to_ghat(*cg, hc.bracket(va, vb), *ghat);
        SparseVec rhs = ghat->bracket(hatc_to_ghat(*cg, va, *ghat), hatc_to_ghat(*cg, vb, *ghat));
        REQUIRE(lhs == rhs);
      }
  }

  SUBCASE("covariant onto the fixed subalgebra, identity twist") {
    auto cg1 = std::make_shared<ConformalCg>(g, 1);
    auto aff = std::make_shared<AffineAlgebra>(g, 1);
    DiagramAut id(aff, {0, 1});
    auto tc = std::make_shared<TildeCAlgebra>(cg1);
    CovariantCgAlgebra cov(tc, ConformalAut(cg1, id));
    auto gt = std::make_shared<ToroidalAlgebra>(g, ToroidalFlavor::GTilde, 1);
    ToroidalAut aut(gt, id);
    auto keys = cov.spanning_keys(2);
    for (const Key& a : keys)
      for (const Key& b : keys) {
        SparseVec va = unit(cov, a), vb = unit(cov, b);
        SparseVec lhs = tildec_to_gtilde(*cg1, cov.bracket(va, vb), aut);
        SparseVec rhs = gt->bracket(tildec_to_gtilde(*cg1, va, aut), tildec_to_gtilde(*cg1, vb, aut));
        REQUIRE(lhs == rhs);
      }
  }

  SUBCASE("covariant onto the fixed subalgebra, order-two twist") {
    auto g2 = std::make_shared<FiniteLie>(LieType::A, 2);
    auto cg2 = std::make_shared<ConformalCg>(g2, 2);
    auto aff = std::make_shared<AffineAlgebra>(g2, 2);
    DiagramAut mu(aff, {0, 2, 1});
    auto tc = std::make_shared<TildeCAlgebra>(cg2);
    CovariantCgAlgebra cov(tc, ConformalAut(cg2, mu));
    auto gt = std::make_shared<ToroidalAlgebra>(g2, ToroidalFlavor::GTilde, 2);
    ToroidalAut aut(gt, mu);
    auto keys = cov.spanning_keys(1);
    for (const Key& a : keys)
      for (const Key& b : keys) {
        SparseVec va = unit(cov, a), vb = unit(cov, b);
        SparseVec lhs = tildec_to_gtilde(*cg2, cov.bracket(va, vb), aut);
        SparseVec rhs = gt->bracket(tildec_to_gtilde(*cg2, va, aut), tildec_to_gtilde(*cg2, vb, aut));
        REQUIRE(lhs == rhs);
      }
  }
}
