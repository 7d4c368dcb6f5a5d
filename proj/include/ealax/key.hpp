#ifndef EALAX_KEY_HPP
#define EALAX_KEY_HPP

#include <cstdint>
#include <functional>
#include <string>

#include "ealax/numbers.hpp"

namespace ealax {

/// Tag for every spanning-symbol grammar used by the constructed algebras.
enum class Kind : std::uint8_t {
  // loop keys t0^e0 t1^e1 (x): a = root index (>=0) or -(coroot index)
  LoopRoot,
  LoopCoroot,
  // central space of the double-loop algebra
  K0,     // k0
  KLine,  // t0^e0 k1
  KPair,  // k_{e0,e1}, e1 != 0
  // skew derivations (divergence zero for the torus grading)
  D0,      // d0
  DLine,   // t0^e0 d1
  DTilde,  // d~_{e0,e1}, e1 != 0
  // skew-derivation variant used by the t0-graded algebra
  DHatT0,  // t0^-1 d0
  DHat,    // d^_{e0,e1}, e1 != 0
  // raw torus monomials (internal to the bracket engine and automorphisms)
  RawK,  // t0^e0 t1^e1 k_a, a in {0,1}
  RawD,  // t0^e0 t1^e1 d_a, a in {0,1}
  // matrix units over the quantum torus; a=i, b=j, monomial t0^e0 t1^e1
  QtE,
  QtH,  // E_{a,a} - E_{a+1,a+1} at the trivial monomial
  QtK0,
  QtK1,
  QtD0,
  QtD1,
  // doubly infinite matrices; indices are arbitrary integers
  InfE,  // E_{e0,e1}, e0 != e1
  InfH,  // E_{e0,e0} - E_{e0+1,e0+1}
  InfK,
  TInfE,  // t^e0 (x) E_{e1,e2}
  TInfH,  // t^e0 (x) H_{e1}
  CovE,   // class of t^e0 (x) E_{e1,e2}, column e2 in 1..N
  CovH,   // class of t^e0 (x) H_{e1}, e1 in 1..N
  CovK,
  // covariant classes of a loop algebra over a finite-order automorphism:
  // class of t^e0 (x) v_a with v_a a canonical basis element
  CovAff,
  CovAffK,
  // conformal-algebra element keys: d^b (x) gen, gen encoded by (a, e0)
  CgGen,
  CgK0,
  // associated Lie algebras: gen(e1) resp. gen[e1]
  CHatGen,
  CHatK0,  // k0(-1)
  CTildeGen,
  CTildeK0,  // k0[0]
  CTildeD,   // the degree derivation d
};

/// Conformal generator tags packed into Key::a (field `b` holds the basis
/// index for GLoop).
enum class CGen : std::int32_t { GLoop = 0, GK1 = 1, GD1 = 2, GKn = 3, GDn = 4 };

/// One spanning symbol of a constructed algebra.  Small indices (matrix rows,
/// root numbers, generator tags) live in `a`/`b`; torus exponents and other
/// unbounded integers live in e0..e2.
struct Key {
  Kind kind{Kind::K0};
  std::int32_t a{0};
  std::int32_t b{0};
  Int e0{0}, e1{0}, e2{0};

  Key() = default;
  Key(Kind k, std::int32_t a_, std::int32_t b_, Int x, Int y, Int z)
      : kind(k), a(a_), b(b_), e0(std::move(x)), e1(std::move(y)), e2(std::move(z)) {}

  static Key simple(Kind k) { return Key(k, 0, 0, 0, 0, 0); }

  bool operator==(const Key& o) const {
    return kind == o.kind && a == o.a && b == o.b && e0 == o.e0 && e1 == o.e1 && e2 == o.e2;
  }
  bool operator!=(const Key& o) const { return !(*this == o); }
  bool operator<(const Key& o) const { return cmp(o) < 0; }

  int cmp(const Key& o) const {
    if (kind != o.kind) return kind < o.kind ? -1 : 1;
    if (a != o.a) return a < o.a ? -1 : 1;
    if (b != o.b) return b < o.b ? -1 : 1;
    int c = ::cmp(e0, o.e0);
    if (c != 0) return c;
    c = ::cmp(e1, o.e1);
    if (c != 0) return c;
    return ::cmp(e2, o.e2);
  }

  std::size_t hash() const {
    std::size_t h = std::hash<int>()((int)kind);
    auto mix = [&h](std::size_t v) { h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2); };
    mix(std::hash<std::int32_t>()(a));
    mix(std::hash<std::int32_t>()(b));
    auto hz = [](const Int& z) {
      return std::hash<unsigned long>()(mpz_fdiv_ui(z.get_mpz_t(), 0x7fffffffUL)) ^
             (std::size_t)mpz_sgn(z.get_mpz_t());
    };
    mix(hz(e0));
    mix(hz(e1));
    mix(hz(e2));
    return h;
  }
};

}  // namespace ealax

template <>
struct std::hash<ealax::Key> {
  std::size_t operator()(const ealax::Key& k) const { return k.hash(); }
};

#endif
