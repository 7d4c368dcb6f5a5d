#include "ealax/numbers.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

namespace ealax {

long to_long(const Int& n) {
  if (!n.fits_slong_p()) throw Error("index too large for windowed enumeration");
  return n.get_si();
}

namespace {

// Phi_T by the standard recursion Phi_T(x) = (x^T - 1) / prod_{d|T, d<T} Phi_d(x).
// Division is exact over Q.  Cached; orders up to 64 are plenty for diagram
// automorphisms of affine diagrams.
std::vector<Rat> poly_divexact(const std::vector<Rat>& num, const std::vector<Rat>& den) {
  std::vector<Rat> rem = num;
  std::vector<Rat> quot(num.size() - den.size() + 1);
  for (long i = (long)quot.size() - 1; i >= 0; --i) {
    Rat c = rem[i + den.size() - 1] / den.back();
    quot[i] = c;
    if (c != 0)
      for (size_t j = 0; j < den.size(); ++j) rem[i + j] -= c * den[j];
  }
  for (const Rat& r : rem)
    if (r != 0) throw Error("inexact polynomial division");
  return quot;
}

const std::vector<Rat>& cyclotomic_poly_locked(int order, std::map<int, std::vector<Rat>>& cache) {
  auto it = cache.find(order);
  if (it != cache.end()) return it->second;
  if (order < 1 || order > 64) throw Error("unsupported cyclotomic order");
  std::vector<Rat> num(order + 1);
  num[0] = -1;
  num[order] = 1;  // x^T - 1
  for (int d = 1; d < order; ++d)
    if (order % d == 0) num = poly_divexact(num, cyclotomic_poly_locked(d, cache));
  return cache.emplace(order, std::move(num)).first->second;
}

const std::vector<Rat>& cyclotomic_poly(int order) {
  static std::map<int, std::vector<Rat>> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  return cyclotomic_poly_locked(order, cache);
}

}  // namespace

int Cyclotomic::degree(int order) { return (int)cyclotomic_poly(order).size() - 1; }

const std::vector<Rat>& Cyclotomic::min_poly(int order) { return cyclotomic_poly(order); }

Cyclotomic Cyclotomic::root_power(int order, const Int& k) {
  int phi = degree(order);
  long e = (long)mpz_fdiv_ui(k.get_mpz_t(), (unsigned long)order);
  Cyclotomic out(order);
  if (e < phi) {
    out.c_[e] = 1;
    return out;
  }
  out.c_[phi - 1] = 1;
  long cur = phi - 1;
  const std::vector<Rat>& mp = min_poly(order);
  while (cur < e) {
    // multiply by z: shift up one degree, reduce the overflow against Phi
    Rat lead = out.c_[phi - 1];
    for (int i = phi - 1; i > 0; --i) out.c_[i] = out.c_[i - 1];
    out.c_[0] = 0;
    if (lead != 0)
      for (int i = 0; i < phi; ++i) out.c_[i] -= lead * mp[i];
    ++cur;
  }
  return out;
}

bool Cyclotomic::is_zero() const {
  for (const Rat& r : c_)
    if (r != 0) return false;
  return true;
}

bool Cyclotomic::is_rational() const {
  for (size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
  check_order(o);
  for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) {
  check_order(o);
  for (size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

Cyclotomic Cyclotomic::operator+(const Cyclotomic& o) const {
  Cyclotomic out = *this;
  out += o;
  return out;
}

Cyclotomic Cyclotomic::operator-(const Cyclotomic& o) const {
  Cyclotomic out = *this;
  out -= o;
  return out;
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic out = *this;
  for (Rat& r : out.c_) r = -r;
  return out;
}

Cyclotomic Cyclotomic::operator*(const Cyclotomic& o) const {
  check_order(o);
  int phi = (int)c_.size();
  if (phi == 1) {
    Cyclotomic out(order_);
    out.c_[0] = c_[0] * o.c_[0];
    return out;
  }
  std::vector<Rat> prod(2 * phi - 1);
  for (int i = 0; i < phi; ++i) {
    if (c_[i] == 0) continue;
    for (int j = 0; j < phi; ++j) {
      if (o.c_[j] == 0) continue;
      prod[i + j] += c_[i] * o.c_[j];
    }
  }
  const std::vector<Rat>& mp = min_poly(order_);
  for (int d = 2 * phi - 2; d >= phi; --d) {
    if (prod[d] == 0) continue;
    Rat lead = prod[d];
    prod[d] = 0;
    for (int i = 0; i < phi; ++i) prod[d - phi + i] -= lead * mp[i];
  }
  Cyclotomic out(order_);
  for (int i = 0; i < phi; ++i) out.c_[i] = prod[i];
  return out;
}

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) throw Error("division by zero cyclotomic");
  int phi = (int)c_.size();
  if (phi == 1) {
    Cyclotomic out(order_);
    out.c_[0] = 1 / c_[0];
    return out;
  }
  // extended Euclid of (this, Phi_T) over Q[x]; Phi_T irreducible so the gcd
  // is a nonzero constant.
  std::vector<Rat> r0 = min_poly(order_), r1(c_.begin(), c_.end());
  while (!r1.empty() && r1.back() == 0) r1.pop_back();
  std::vector<Rat> s0{Rat(0)}, s1{Rat(1)};  // coefficients of *this
  auto deg = [](const std::vector<Rat>& p) { return (long)p.size() - 1; };
  while (deg(r1) > 0) {
    // divide r0 by r1
    std::vector<Rat> q(deg(r0) - deg(r1) + 1);
    std::vector<Rat> rem = r0;
    for (long i = (long)q.size() - 1; i >= 0; --i) {
      Rat c = rem[i + r1.size() - 1] / r1.back();
      q[i] = c;
      if (c != 0)
        for (size_t j = 0; j < r1.size(); ++j) rem[i + j] -= c * r1[j];
    }
    while (!rem.empty() && rem.back() == 0) rem.pop_back();
    // s_new = s0 - q * s1
    std::vector<Rat> snew(std::max(s0.size(), q.size() + s1.size() - 1));
    for (size_t i = 0; i < s0.size(); ++i) snew[i] = s0[i];
    for (size_t i = 0; i < q.size(); ++i)
      if (q[i] != 0)
        for (size_t j = 0; j < s1.size(); ++j) snew[i + j] -= q[i] * s1[j];
    while (!snew.empty() && snew.back() == 0) snew.pop_back();
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(snew);
    if (r1.empty()) throw Error("cyclotomic inverse: unexpected zero remainder");
  }
  Rat unit = r1[0];
  Cyclotomic out(order_);
  for (size_t i = 0; i < s1.size() && i < out.c_.size(); ++i) out.c_[i] = s1[i] / unit;
  if (s1.size() > out.c_.size()) throw Error("cyclotomic inverse overflow");
  return out;
}

void Cyclotomic::mul_rat(const Rat& r) {
  for (Rat& x : c_) x *= r;
}

int Cyclotomic::cmp(const Cyclotomic& o) const {
  if (order_ != o.order_) return order_ < o.order_ ? -1 : 1;
  for (size_t i = 0; i < c_.size(); ++i) {
    int c = ::cmp(c_[i], o.c_[i]);
    if (c != 0) return c;
  }
  return 0;
}

std::string Cyclotomic::str() const {
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    if (!first) os << " + ";
    first = false;
    bool frac = c_[i].get_den() != 1;
    bool unit_coef = (c_[i] == 1) && i > 0;
    if (!unit_coef) {
      if (frac || c_[i] < 0)
        os << "(" << c_[i].get_str() << ")";
      else
        os << c_[i].get_str();
      if (i > 0) os << "*";
    }
    if (i > 0) os << "z^" << i;
  }
  if (first) os << "0";
  return os.str();
}

Cyclotomic root_of_unity_sum(int order, const Int& m) {
  if (order < 1) throw Error("root_of_unity_sum: order must be positive");
  Cyclotomic acc(order);
  for (int p = 0; p < order; ++p) acc += Cyclotomic::root_power(order, m * p);
  return acc;
}

Scalar::Scalar(int order, const Rat& r) : order_(order) {
  if (r != 0) terms_.emplace_back(Int(0), Cyclotomic(order, r));
}

Scalar Scalar::from_cyclotomic(Cyclotomic c) {
  Scalar out(c.order());
  if (!c.is_zero()) out.terms_.emplace_back(Int(0), std::move(c));
  return out;
}

Scalar Scalar::q_power(int order, const Int& e) {
  Scalar out(order);
  out.terms_.emplace_back(e, Cyclotomic(order, Rat(1)));
  return out;
}

Scalar Scalar::term(const Int& qexp, Cyclotomic c) {
  Scalar out(c.order());
  if (!c.is_zero()) out.terms_.emplace_back(qexp, std::move(c));
  return out;
}

bool Scalar::is_one() const {
  return terms_.size() == 1 && terms_[0].first == 0 && terms_[0].second.is_rational() &&
         terms_[0].second.rational_part() == 1;
}

void Scalar::add_term(const Int& qexp, const Cyclotomic& c) {
  if (c.is_zero()) return;
  auto it = std::lower_bound(terms_.begin(), terms_.end(), qexp,
                             [](const auto& t, const Int& e) { return t.first < e; });
  if (it != terms_.end() && it->first == qexp) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  } else {
    terms_.emplace(it, qexp, c);
  }
}

Scalar& Scalar::operator+=(const Scalar& o) {
  check_order(o);
  for (const auto& t : o.terms_) add_term(t.first, t.second);
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  check_order(o);
  for (const auto& t : o.terms_) add_term(t.first, -t.second);
  return *this;
}

Scalar Scalar::operator+(const Scalar& o) const {
  Scalar out = *this;
  out += o;
  return out;
}

Scalar Scalar::operator-(const Scalar& o) const {
  Scalar out = *this;
  out -= o;
  return out;
}

Scalar Scalar::operator*(const Scalar& o) const {
  check_order(o);
  Scalar out(order_);
  for (const auto& a : terms_)
    for (const auto& b : o.terms_) out.add_term(a.first + b.first, a.second * b.second);
  return out;
}

Scalar Scalar::operator-() const {
  Scalar out = *this;
  out.negate();
  return out;
}

Scalar& Scalar::negate() {
  for (auto& t : terms_) t.second = -t.second;
  return *this;
}

void Scalar::mul_rat(const Rat& r) {
  if (r == 0) {
    terms_.clear();
    return;
  }
  for (auto& t : terms_) t.second.mul_rat(r);
}

void Scalar::mul_cyclotomic(const Cyclotomic& c) {
  if (c.is_zero()) {
    terms_.clear();
    return;
  }
  for (auto& t : terms_) t.second = t.second * c;
}

void Scalar::shift_q(const Int& e) {
  for (auto& t : terms_) t.first += e;
}

Scalar Scalar::divexact(const Scalar& d) const {
  check_order(d);
  if (d.is_zero()) throw Error("scalar division by zero");
  Scalar rem = *this;
  Scalar quot(order_);
  const auto& dl = d.terms_.back();  // leading term (highest q power)
  Cyclotomic dlead_inv = dl.second.inverse();
  while (!rem.is_zero()) {
    Int rlead_exp = rem.terms_.back().first;
    Cyclotomic qc = rem.terms_.back().second * dlead_inv;
    Int qe = rlead_exp - dl.first;
    quot.add_term(qe, qc);
    Scalar sub = d;
    sub.mul_cyclotomic(qc);
    sub.shift_q(qe);
    rem -= sub;
    if (!rem.is_zero() && rem.terms_.back().first >= rlead_exp)
      throw Error("scalar divexact: no progress");
  }
  return quot;
}

bool Scalar::operator==(const Scalar& o) const {
  return order_ == o.order_ && terms_ == o.terms_;
}

int Scalar::cmp(const Scalar& o) const {
  if (order_ != o.order_) return order_ < o.order_ ? -1 : 1;
  size_t n = std::min(terms_.size(), o.terms_.size());
  for (size_t i = 0; i < n; ++i) {
    int c = ::cmp(terms_[i].first, o.terms_[i].first);
    if (c != 0) return c;
    c = terms_[i].second.cmp(o.terms_[i].second);
    if (c != 0) return c;
  }
  if (terms_.size() != o.terms_.size()) return terms_.size() < o.terms_.size() ? -1 : 1;
  return 0;
}

std::string Scalar::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    const Cyclotomic& cy = t.second;
    for (size_t i = 0; i < cy.coeffs().size(); ++i) {
      const Rat& r = cy.coeffs()[i];
      if (r == 0) continue;
      if (!first) os << " + ";
      first = false;
      bool has_sym = (i > 0) || (t.first != 0);
      if (r == 1 && has_sym) {
        // coefficient 1 omitted
      } else if (r.get_den() != 1 || r < 0) {
        os << "(" << r.get_str() << ")";
        if (has_sym) os << "*";
      } else {
        os << r.get_str();
        if (has_sym) os << "*";
      }
      bool need_star = false;
      if (i > 0) {
        os << "z^" << i;
        need_star = true;
      }
      if (t.first != 0) {
        if (need_star) os << "*";
        os << "q^" << t.first.get_str();
      }
    }
  }
  if (first) os << "0";
  return os.str();
}

namespace {

// parse one factor of a term: rational, z^j, or q^e
struct TermAcc {
  Rat coef{1};
  long zpow = 0;
  Int qexp{0};
};

void parse_factor(const std::string& f, TermAcc& acc) {
  if (f.empty()) throw Error("scalar parse: empty factor");
  if (f[0] == 'z' || f[0] == 'q') {
    Int e(1);
    if (f.size() > 1) {
      if (f[1] != '^') throw Error("scalar parse: bad factor '" + f + "'");
      e = Int(f.substr(2));
    }
    if (f[0] == 'z')
      acc.zpow += to_long(e);
    else
      acc.qexp += e;
  } else {
    std::string body = f;
    if (body.front() == '(' && body.back() == ')') body = body.substr(1, body.size() - 2);
    acc.coef *= Rat(body);
    acc.coef.canonicalize();
  }
}

}  // namespace

Scalar Scalar::parse(int order, const std::string& text) {
  Scalar out(order);
  std::string s;
  for (char ch : text)
    if (!isspace((unsigned char)ch)) s += ch;
  if (s.empty()) throw Error("scalar parse: empty input");
  size_t i = 0;
  while (i < s.size()) {
    int sign = 1;
    while (i < s.size() && (s[i] == '+' || s[i] == '-')) {
      if (s[i] == '-') sign = -sign;
      ++i;
    }
    size_t start = i;
    int depth = 0;
    while (i < s.size()) {
      if (s[i] == '(') ++depth;
      if (s[i] == ')') --depth;
      if (depth == 0 && (s[i] == '+' || s[i] == '-') && i > start && s[i - 1] != '^') break;
      ++i;
    }
    std::string term = s.substr(start, i - start);
    if (term.empty()) throw Error("scalar parse: empty term");
    TermAcc acc;
    size_t j = 0, fstart = 0;
    int d2 = 0;
    for (; j <= term.size(); ++j) {
      if (j == term.size() || (term[j] == '*' && d2 == 0)) {
        parse_factor(term.substr(fstart, j - fstart), acc);
        fstart = j + 1;
      } else if (term[j] == '(')
        ++d2;
      else if (term[j] == ')')
        --d2;
    }
    if (sign < 0) acc.coef = -acc.coef;
    Cyclotomic c = Cyclotomic::root_power(order, Int(acc.zpow));
    c.mul_rat(acc.coef);
    out.add_term(acc.qexp, c);
  }
  return out;
}

}  // namespace ealax
