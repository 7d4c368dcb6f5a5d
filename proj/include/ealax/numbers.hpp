#ifndef EALAX_NUMBERS_HPP
#define EALAX_NUMBERS_HPP

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ealax {

using Int = mpz_class;
using Rat = mpq_class;

struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

long to_long(const Int& n);

/// Element of Q[z]/(Phi_T(z)), z a primitive T-th root of unity.
/// Coefficient vector has length phi(T) and is always fully reduced.
class Cyclotomic {
 public:
  Cyclotomic() : order_(1), c_(1) {}
  explicit Cyclotomic(int order) : order_(order), c_(degree(order)) {}
  Cyclotomic(int order, const Rat& r) : order_(order), c_(degree(order)) { c_[0] = r; }

  static int degree(int order);                    // Euler phi
  static const std::vector<Rat>& min_poly(int order);  // monic Phi_T, length phi(T)+1
  static Cyclotomic root_power(int order, const Int& k);  // z^k reduced

  int order() const { return order_; }
  const std::vector<Rat>& coeffs() const { return c_; }
  bool is_zero() const;
  bool is_rational() const;
  const Rat& rational_part() const { return c_[0]; }

  Cyclotomic& operator+=(const Cyclotomic& o);
  Cyclotomic& operator-=(const Cyclotomic& o);
  Cyclotomic operator+(const Cyclotomic& o) const;
  Cyclotomic operator-(const Cyclotomic& o) const;
  Cyclotomic operator*(const Cyclotomic& o) const;
  Cyclotomic operator-() const;
  Cyclotomic inverse() const;  // field inverse, throws on zero
  Cyclotomic operator/(const Cyclotomic& o) const { return *this * o.inverse(); }

  void mul_rat(const Rat& r);

  bool operator==(const Cyclotomic& o) const { return order_ == o.order_ && c_ == o.c_; }
  bool operator!=(const Cyclotomic& o) const { return !(*this == o); }
  int cmp(const Cyclotomic& o) const;

  std::string str() const;  // e.g. "1/2*z^1 + 1", "-3"

 private:
  void check_order(const Cyclotomic& o) const {
    if (order_ != o.order_) throw Error("cyclotomic order mismatch");
  }
  int order_;
  std::vector<Rat> c_;
};

/// Sum_{p=0}^{T-1} z^{m p}; equals T when T | m and 0 otherwise.
Cyclotomic root_of_unity_sum(int order, const Int& m);

/// Exact element of Q(z_T)[q,q^-1]: sparse Laurent polynomial in the formal
/// unit q with cyclotomic coefficients.  q is never evaluated.
class Scalar {
 public:
  Scalar() : order_(1) {}
  explicit Scalar(int order) : order_(order) {}
  Scalar(int order, const Rat& r);
  static Scalar from_cyclotomic(Cyclotomic c);
  static Scalar q_power(int order, const Int& e);  // q^e
  static Scalar term(const Int& qexp, Cyclotomic c);

  int order() const { return order_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  const std::vector<std::pair<Int, Cyclotomic>>& terms() const { return terms_; }

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator-() const;
  Scalar& negate();

  void mul_rat(const Rat& r);
  void mul_cyclotomic(const Cyclotomic& c);
  void shift_q(const Int& e);  // multiply by q^e

  /// Exact polynomial division; throws if the division leaves a remainder.
  Scalar divexact(const Scalar& d) const;

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }
  int cmp(const Scalar& o) const;

  std::string str() const;
  static Scalar parse(int order, const std::string& text);

  /// add c * q^e in place
  void add_term(const Int& qexp, const Cyclotomic& c);

 private:
  void check_order(const Scalar& o) const {
    if (order_ != o.order_) throw Error("scalar order mismatch");
  }
  int order_;
  std::vector<std::pair<Int, Cyclotomic>> terms_;  // sorted by exponent, no zeros
};

inline Scalar operator*(const Rat& r, Scalar s) {
  s.mul_rat(r);
  return s;
}

}  // namespace ealax

#endif
