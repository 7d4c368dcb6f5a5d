#include <doctest.h>

#include <random>

#include "ealax/sparse.hpp"

using namespace ealax;

TEST_CASE("cyclotomic arithmetic at small orders") {
  // zeta_2 = -1
  Cyclotomic z2 = Cyclotomic::root_power(2, 1);
  CHECK((z2 * z2) == Cyclotomic(2, Rat(1)));
  CHECK(z2 == Cyclotomic(2, Rat(-1)));
  // zeta_3^3 = 1
  Cyclotomic z3 = Cyclotomic::root_power(3, 1);
  CHECK((z3 * z3 * z3) == Cyclotomic(3, Rat(1)));
  // zeta_4^2 = -1
  Cyclotomic z4 = Cyclotomic::root_power(4, 1);
  CHECK((z4 * z4) == Cyclotomic(4, Rat(-1)));
}

TEST_CASE("cyclotomic order mismatch rejected") {
  Cyclotomic a(2, Rat(1)), b(3, Rat(1));
  CHECK_THROWS_AS(a + b, Error);
  CHECK_THROWS_AS(a * b, Error);
}

TEST_CASE("cyclotomic field inverse") {
  for (int T : {1, 2, 3, 4, 5, 6, 8, 12}) {
    std::mt19937_64 rng(7 + T);
    for (int iter = 0; iter < 20; ++iter) {
      Cyclotomic x(T);
      Cyclotomic acc(T, Rat((long)(rng() % 7) - 3));
      x = acc;
      for (int j = 1; j < Cyclotomic::degree(T); ++j) {
        Cyclotomic t = Cyclotomic::root_power(T, j);
        t.mul_rat(Rat((long)(rng() % 7) - 3));
        x += t;
      }
      if (x.is_zero()) continue;
      CHECK((x * x.inverse()) == Cyclotomic(T, Rat(1)));
    }
  }
}

TEST_CASE("root_of_unity_sum equals T on multiples, else 0") {
  for (int T = 1; T <= 12; ++T)
    for (long m = -24; m <= 24; ++m) {
      Cyclotomic s = root_of_unity_sum(T, Int(m));
      if (m % T == 0)
        CHECK(s == Cyclotomic(T, Rat(T)));
      else
        CHECK(s.is_zero());
    }
}

namespace {

Scalar random_scalar(std::mt19937_64& rng, int order) {
  Scalar s(order);
  int nterms = 1 + (int)(rng() % 3);
  for (int i = 0; i < nterms; ++i) {
    Cyclotomic c(order);
    Cyclotomic t = Cyclotomic::root_power(order, Int((long)(rng() % order)));
    Rat r((long)(rng() % 9) - 4, 1 + (long)(rng() % 3));
    r.canonicalize();
    t.mul_rat(r);
    c += t;
    s.add_term(Int((long)(rng() % 7) - 3), c);
  }
  return s;
}

}  // namespace

TEST_CASE("scalar ring is a commutative domain (sampled laws)") {
  std::mt19937_64 rng(20240801);
  int order = 3;
  for (int iter = 0; iter < 1000; ++iter) {
    Scalar a = random_scalar(rng, order);
    Scalar b = random_scalar(rng, order);
    Scalar c = random_scalar(rng, order);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    if (!a.is_zero() && !b.is_zero()) CHECK_FALSE((a * b).is_zero());
  }
}

TEST_CASE("scalar exact division") {
  std::mt19937_64 rng(99);
  for (int iter = 0; iter < 200; ++iter) {
    Scalar a = random_scalar(rng, 4);
    Scalar b = random_scalar(rng, 4);
    if (b.is_zero()) continue;
    Scalar p = a * b;
    CHECK(p.divexact(b) == a);
  }
}

TEST_CASE("scalar text round-trip") {
  std::mt19937_64 rng(5);
  for (int order : {1, 2, 3, 4, 6}) {
    for (int iter = 0; iter < 100; ++iter) {
      Scalar s = random_scalar(rng, order);
      CHECK(Scalar::parse(order, s.str()) == s);
    }
  }
  Scalar ex = Scalar::parse(4, "(1/2)*z^1*q^-3 + 1");
  Cyclotomic half_i(4);
  half_i += Cyclotomic::root_power(4, 1);
  half_i.mul_rat(Rat(1, 2));
  Scalar expect(4, Rat(1));
  expect.add_term(Int(-3), half_i);
  CHECK(ex == expect);
}

TEST_CASE("vec_combine canonical behavior") {
  Key k0 = Key::simple(Kind::K0);
  Key d0 = Key::simple(Kind::D0);
  Scalar one(1, Rat(1));
  SparseVec v = SparseVec::unit(k0, one);
  v.add(d0, Scalar(1, Rat(3)));
  SparseVec w = SparseVec::unit(k0, one);

  CHECK(vec_combine(v, w, Scalar(1)) == v);                    // v + 0*w = v
  CHECK(vec_combine(v, v, Scalar(1, Rat(-1))).is_zero());      // v - v = 0
  // {k0:1} + q*{k0:1} = {k0: 1+q}
  Scalar q = Scalar::q_power(1, 1);
  SparseVec u = vec_combine(w, w, q);
  REQUIRE(u.size() == 1);
  Scalar expect = one + q;
  CHECK(*u.find(k0) == expect);
}

TEST_CASE("exact_rank") {
  CHECK(exact_rank({}) == 0);
  Key a = Key(Kind::K0, 0, 0, 0, 0, 0);
  Key b = Key(Kind::KLine, 0, 0, 1, 0, 0);
  Key c = Key(Kind::KLine, 0, 0, 2, 0, 0);
  Scalar one(1, Rat(1));
  SparseVec v = SparseVec::unit(a, one);
  v.add(b, Scalar(1, Rat(2)));
  SparseVec v2 = v;
  v2.scale_rat(Rat(2));
  CHECK(exact_rank({v, v2}) == 1);
  SparseVec e1 = SparseVec::unit(a, one);
  SparseVec e2 = SparseVec::unit(b, one);
  SparseVec e3 = SparseVec::unit(c, one);
  CHECK(exact_rank({e1, e2, e3}) == 3);
  // rank over the fraction field: q-dependent combination
  SparseVec w1 = SparseVec::unit(a, Scalar::q_power(1, 1));
  w1.add(b, one);
  SparseVec w2 = SparseVec::unit(a, one);
  w2.add(b, Scalar::q_power(1, -1));
  CHECK(exact_rank({w1, w2}) == 1);  // w1 = q * w2
  SparseVec w3 = SparseVec::unit(a, one);
  w3.add(b, one);
  CHECK(exact_rank({w1, w3}) == 2);
}
