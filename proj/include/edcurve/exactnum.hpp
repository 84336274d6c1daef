// Exact rational scalars and polynomial algebra.
//
// UniPoly is a dense univariate polynomial over Q (index k = coefficient of
// t^k). HomPoly2 is a binary form of fixed formal degree e (index k =
// coefficient of s^(e-k) t^k), so that dehomogenizing at s = 1 keeps the
// coefficient vector as is.
//
// GCDs and resultants run on primitive integer polynomials: contents are
// split off, a primitive PRS (gcd) or the subresultant PRS (resultant) is run
// over Z, and the rational contents are put back at the end.

#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace edcurve {

using Int = mpz_class;
using Rat = mpq_class;

// ---------------------------------------------------------------------------
// Rational literals

/// Parses "a/b" or "a" with an optional leading sign and decimal digits.
inline Rat parse_rat(std::string_view text) {
  auto digits = [](std::string_view s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
  };
  std::string_view body = text;
  if (!body.empty() && (body.front() == '+' || body.front() == '-')) body.remove_prefix(1);
  const auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{} : body.substr(slash + 1);
  if (!digits(num) || (slash != std::string_view::npos && !digits(den))) {
    throw std::invalid_argument("malformed rational literal '" + std::string(text) + "'");
  }
  Int n(std::string(num), 10);
  Int d(1);
  if (slash != std::string_view::npos) d = Int(std::string(den), 10);
  if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  if (!text.empty() && text.front() == '-') n = -n;
  Rat r(n, d);
  r.canonicalize();
  return r;
}

/// Canonical rendering: "a/b" in lowest terms, "a" when the denominator is 1.
inline std::string to_string(const Rat& r) { return r.get_str(); }

// ---------------------------------------------------------------------------
// UniPoly

class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }
  UniPoly(std::initializer_list<Rat> coeffs) : c_(coeffs) { trim(); }

  static UniPoly constant(const Rat& a) { return UniPoly(std::vector<Rat>{a}); }
  static UniPoly monomial(const Rat& a, int k) {
    std::vector<Rat> c(static_cast<std::size_t>(k) + 1);
    c.back() = a;
    return UniPoly(std::move(c));
  }
  /// t - a
  static UniPoly linear_root(const Rat& a) { return UniPoly({-a, Rat(1)}); }

  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }

  /// Degree of a nonzero polynomial. The zero polynomial has no degree.
  int degree() const {
    if (c_.empty()) throw std::domain_error("degree of the zero polynomial");
    return static_cast<int>(c_.size()) - 1;
  }
  std::optional<int> degree_if_nonzero() const {
    if (c_.empty()) return std::nullopt;
    return static_cast<int>(c_.size()) - 1;
  }

  const std::vector<Rat>& coeffs() const { return c_; }
  Rat coeff(int k) const {
    if (k < 0 || static_cast<std::size_t>(k) >= c_.size()) return Rat(0);
    return c_[static_cast<std::size_t>(k)];
  }
  const Rat& leading() const {
    if (c_.empty()) throw std::domain_error("leading coefficient of the zero polynomial");
    return c_.back();
  }

  Rat operator()(const Rat& t) const {
    Rat acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
    return acc;
  }

  UniPoly derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<Rat> d(c_.size() - 1);
    for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * static_cast<long>(k);
    return UniPoly(std::move(d));
  }

  UniPoly monic() const {
    if (c_.empty()) return {};
    UniPoly r = *this;
    const Rat lc = c_.back();
    for (auto& x : r.c_) x /= lc;
    return r;
  }

  UniPoly& operator+=(const UniPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
    trim();
    return *this;
  }
  UniPoly& operator-=(const UniPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
    trim();
    return *this;
  }
  UniPoly& operator*=(const Rat& a) {
    if (a == 0) {
      c_.clear();
      return *this;
    }
    for (auto& x : c_) x *= a;
    return *this;
  }

  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator-(UniPoly a) {
    for (auto& x : a.c_) x = -x;
    return a;
  }
  friend UniPoly operator*(UniPoly a, const Rat& s) { return a *= s; }
  friend UniPoly operator*(const Rat& s, UniPoly a) { return a *= s; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rat> r(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return UniPoly(std::move(r));
  }
  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }

  UniPoly pow(unsigned k) const {
    UniPoly r = constant(1), base = *this;
    while (k) {
      if (k & 1U) r = r * base;
      k >>= 1U;
      if (k) base = base * base;
    }
    return r;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<Rat> c_;
};

/// Quotient and remainder over Q.
inline std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) throw std::domain_error("division by the zero polynomial");
  if (a.is_zero() || a.degree() < b.degree()) return {UniPoly{}, a};
  std::vector<Rat> rem = a.coeffs();
  const int db = b.degree();
  std::vector<Rat> quo(static_cast<std::size_t>(a.degree() - db) + 1);
  const Rat& lb = b.leading();
  for (int k = a.degree(); k >= db; --k) {
    Rat q = rem[static_cast<std::size_t>(k)] / lb;
    if (q == 0) continue;
    quo[static_cast<std::size_t>(k - db)] = q;
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(k - db + j)] -= q * b.coeffs()[static_cast<std::size_t>(j)];
  }
  rem.resize(static_cast<std::size_t>(db));
  return {UniPoly(std::move(quo)), UniPoly(std::move(rem))};
}

/// a / b, requiring a zero remainder.
inline UniPoly exact_div(const UniPoly& a, const UniPoly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw std::domain_error("inexact polynomial division");
  return q;
}

// ---------------------------------------------------------------------------
// Integer polynomial kernel

namespace detail {

/// Dense integer polynomial, low degree first, no trailing zeros.
using ZPoly = std::vector<Int>;

inline void trim(ZPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}
inline int zdeg(const ZPoly& p) { return static_cast<int>(p.size()) - 1; }

inline Int content(const ZPoly& p) {
  Int g(0);
  for (const auto& c : p) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

inline ZPoly primitive_part(ZPoly p) {
  trim(p);
  if (p.empty()) return p;
  const Int g = content(p);
  if (g != 1) {
    for (auto& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  }
  return p;
}

/// Splits a nonzero rational polynomial as content * P with P primitive over Z
/// and content > 0.
inline std::pair<Rat, ZPoly> to_primitive(const UniPoly& p) {
  Int den(1);
  for (const auto& c : p.coeffs()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  ZPoly z(p.coeffs().size());
  for (std::size_t k = 0; k < z.size(); ++k) {
    const Rat& c = p.coeffs()[k];
    z[k] = c.get_num() * (den / c.get_den());
  }
  const Int g = content(z);
  if (g != 1) {
    for (auto& c : z) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  }
  Rat cont(g, den);
  cont.canonicalize();
  return {cont, std::move(z)};
}

inline UniPoly to_rational(const ZPoly& p) {
  std::vector<Rat> c(p.size());
  for (std::size_t k = 0; k < p.size(); ++k) c[k] = Rat(p[k]);
  return UniPoly(std::move(c));
}

inline ZPoly derivative(const ZPoly& p) {
  ZPoly d;
  if (p.size() <= 1) return d;
  d.resize(p.size() - 1);
  for (std::size_t k = 1; k < p.size(); ++k) d[k - 1] = p[k] * static_cast<unsigned long>(k);
  trim(d);
  return d;
}

/// lc(b)^(deg a - deg b + 1) * a mod b, computed over Z.
inline ZPoly prem(ZPoly a, const ZPoly& b) {
  const int db = zdeg(b);
  if (zdeg(a) < db) return a;
  const Int& lb = b.back();
  int delta = zdeg(a) - db + 1;
  while (!a.empty() && zdeg(a) >= db) {
    const Int la = a.back();
    const int shift = zdeg(a) - db;
    for (auto& c : a) c *= lb;
    for (int j = 0; j <= db; ++j) a[static_cast<std::size_t>(shift + j)] -= la * b[static_cast<std::size_t>(j)];
    trim(a);
    --delta;
  }
  if (delta > 0) {
    Int f;
    mpz_pow_ui(f.get_mpz_t(), lb.get_mpz_t(), static_cast<unsigned long>(delta));
    for (auto& c : a) c *= f;
  }
  return a;
}

/// Primitive PRS. Inputs nonzero; result primitive with positive leading
/// coefficient.
inline ZPoly zgcd(ZPoly a, ZPoly b) {
  a = primitive_part(std::move(a));
  b = primitive_part(std::move(b));
  if (zdeg(a) < zdeg(b)) std::swap(a, b);
  while (!b.empty()) {
    if (zdeg(b) == 0) return ZPoly{Int(1)};
    ZPoly r = primitive_part(prem(a, b));
    a = std::move(b);
    b = std::move(r);
  }
  if (a.back() < 0) {
    for (auto& c : a) c = -c;
  }
  return a;
}

inline Int ipow(const Int& base, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

/// Resultant of nonzero primitive integer polynomials via the subresultant PRS
/// (Collins; Cohen, Algorithm 3.3.7 without the content step).
inline Int zresultant(ZPoly a, ZPoly b) {
  int sign = 1;
  if (zdeg(a) < zdeg(b)) {
    std::swap(a, b);
    if ((zdeg(a) & 1) && (zdeg(b) & 1)) sign = -sign;
  }
  if (zdeg(b) == 0) return sign * ipow(b[0], static_cast<unsigned long>(zdeg(a)));
  Int g(1), h(1);
  while (true) {
    const int da = zdeg(a), db = zdeg(b);
    const int delta = da - db;
    if ((da & 1) && (db & 1)) sign = -sign;
    ZPoly r = prem(a, b);
    if (r.empty()) return Int(0);
    a = std::move(b);
    const Int divisor = g * ipow(h, static_cast<unsigned long>(delta));
    for (auto& c : r) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), divisor.get_mpz_t());
    b = std::move(r);
    g = a.back();
    // h <- g^delta / h^(delta - 1)
    if (delta == 0) {
      // h^(1) * g^0
    } else {
      Int num = ipow(g, static_cast<unsigned long>(delta));
      Int den = ipow(h, static_cast<unsigned long>(delta - 1));
      mpz_divexact(h.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    }
    if (zdeg(b) == 0) {
      const int d = zdeg(a);
      // h^(1 - d) * lc(b)^d
      Int num = ipow(b[0], static_cast<unsigned long>(d));
      Int den = ipow(h, static_cast<unsigned long>(d - 1));
      Int out;
      mpz_divexact(out.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
      return sign * out;
    }
  }
}

inline int sign_at(const ZPoly& p, const Rat& x) {
  // sign of den^d * p(num/den), den > 0
  const Int& num = x.get_num();
  const Int& den = x.get_den();
  Int acc(0), dpow(1);
  for (auto it = p.rbegin(); it != p.rend(); ++it) {
    acc = acc * num + *it * dpow;
    dpow *= den;
  }
  return sgn(acc);
}

}  // namespace detail

// ---------------------------------------------------------------------------
// GCD, squarefree part, resultants

/// Monic greatest common divisor.
inline UniPoly poly_gcd(const UniPoly& p, const UniPoly& q) {
  if (p.is_zero() && q.is_zero()) throw std::invalid_argument("gcd of two zero polynomials");
  if (p.is_zero()) return q.monic();
  if (q.is_zero()) return p.monic();
  auto [cp, zp] = detail::to_primitive(p);
  auto [cq, zq] = detail::to_primitive(q);
  return detail::to_rational(detail::zgcd(std::move(zp), std::move(zq))).monic();
}

/// p / gcd(p, p'), monic: same roots as p, each simple.
inline UniPoly squarefree_part(const UniPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("squarefree part of the zero polynomial");
  if (p.is_constant()) return UniPoly::constant(1);
  return exact_div(p, poly_gcd(p, p.derivative())).monic();
}

/// Number of distinct complex roots.
inline int distinct_root_count(const UniPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("root count of the zero polynomial");
  return squarefree_part(p).degree();
}

/// Sylvester resultant of p and q with respect to their actual degrees.
inline Rat resultant(const UniPoly& p, const UniPoly& q) {
  if (p.is_zero() || q.is_zero()) throw std::invalid_argument("resultant with a zero polynomial");
  auto [cp, zp] = detail::to_primitive(p);
  auto [cq, zq] = detail::to_primitive(q);
  Rat scale(1);
  Rat tmp;
  mpz_pow_ui(tmp.get_num_mpz_t(), cp.get_num_mpz_t(), static_cast<unsigned long>(q.degree()));
  mpz_pow_ui(tmp.get_den_mpz_t(), cp.get_den_mpz_t(), static_cast<unsigned long>(q.degree()));
  scale *= tmp;
  mpz_pow_ui(tmp.get_num_mpz_t(), cq.get_num_mpz_t(), static_cast<unsigned long>(p.degree()));
  mpz_pow_ui(tmp.get_den_mpz_t(), cq.get_den_mpz_t(), static_cast<unsigned long>(p.degree()));
  scale *= tmp;
  Rat r(detail::zresultant(std::move(zp), std::move(zq)));
  r *= scale;
  r.canonicalize();
  return r;
}

/// (-1)^(d(d-1)/2) res(p, p') / lc(p).
inline Rat discriminant(const UniPoly& p) {
  if (p.is_zero() || p.degree() < 1) throw std::invalid_argument("discriminant of a constant polynomial");
  const int d = p.degree();
  Rat r = resultant(p, p.derivative()) / p.leading();
  if ((d * (d - 1) / 2) % 2 != 0) r = -r;
  return r;
}

// ---------------------------------------------------------------------------
// HomPoly2

class HomPoly2 {
 public:
  HomPoly2() : c_(1) {}
  explicit HomPoly2(int degree) : c_(static_cast<std::size_t>(check_degree(degree)) + 1) {}
  /// coeffs[k] multiplies s^(e-k) t^k, with e = coeffs.size() - 1.
  explicit HomPoly2(std::vector<Rat> coeffs) : c_(std::move(coeffs)) {
    if (c_.empty()) throw std::invalid_argument("binary form needs at least one coefficient");
  }

  /// Homogenizes p to formal degree e >= deg p.
  static HomPoly2 homogenize(const UniPoly& p, int e) {
    if (!p.is_zero() && p.degree() > e) throw std::invalid_argument("homogenization degree below polynomial degree");
    HomPoly2 h(e);
    for (std::size_t k = 0; k < p.coeffs().size(); ++k) h.c_[k] = p.coeffs()[k];
    return h;
  }
  /// s^a t^b with coefficient c.
  static HomPoly2 monomial(const Rat& c, int s_exp, int t_exp) {
    HomPoly2 h(s_exp + t_exp);
    h.c_[static_cast<std::size_t>(t_exp)] = c;
    return h;
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<Rat>& coeffs() const { return c_; }
  const Rat& coeff(int k) const { return c_.at(static_cast<std::size_t>(k)); }
  bool is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const Rat& x) { return x == 0; });
  }
  /// s | H, i.e. [0:1] is a root.
  bool divisible_by_s() const { return c_.back() == 0; }
  /// Multiplicity of the root [0:1] (the s-adic order). Zero form: throws.
  int s_order() const {
    for (int k = degree(); k >= 0; --k) {
      if (c_[static_cast<std::size_t>(k)] != 0) return degree() - k;
    }
    throw std::domain_error("s-order of the zero form");
  }

  Rat operator()(const Rat& s, const Rat& t) const {
    Rat acc(0), tp(1);
    std::vector<Rat> spow(c_.size());
    spow[0] = 1;
    for (std::size_t k = 1; k < c_.size(); ++k) spow[k] = spow[k - 1] * s;
    for (std::size_t k = 0; k < c_.size(); ++k) {
      acc += c_[k] * spow[c_.size() - 1 - k] * tp;
      tp *= t;
    }
    return acc;
  }

  UniPoly dehomogenize() const { return UniPoly(c_); }

  HomPoly2 d_ds() const {
    if (degree() == 0) return HomPoly2(0);
    HomPoly2 r(degree() - 1);
    for (int k = 0; k < degree(); ++k) r.c_[static_cast<std::size_t>(k)] = c_[static_cast<std::size_t>(k)] * (degree() - k);
    return r;
  }
  HomPoly2 d_dt() const {
    if (degree() == 0) return HomPoly2(0);
    HomPoly2 r(degree() - 1);
    for (int k = 1; k <= degree(); ++k) r.c_[static_cast<std::size_t>(k - 1)] = c_[static_cast<std::size_t>(k)] * k;
    return r;
  }

  HomPoly2& operator+=(const HomPoly2& o) {
    require_same_degree(o);
    for (std::size_t k = 0; k < c_.size(); ++k) c_[k] += o.c_[k];
    return *this;
  }
  HomPoly2& operator-=(const HomPoly2& o) {
    require_same_degree(o);
    for (std::size_t k = 0; k < c_.size(); ++k) c_[k] -= o.c_[k];
    return *this;
  }
  HomPoly2& operator*=(const Rat& a) {
    for (auto& x : c_) x *= a;
    return *this;
  }
  friend HomPoly2 operator+(HomPoly2 a, const HomPoly2& b) { return a += b; }
  friend HomPoly2 operator-(HomPoly2 a, const HomPoly2& b) { return a -= b; }
  friend HomPoly2 operator*(HomPoly2 a, const Rat& s) { return a *= s; }
  friend HomPoly2 operator*(const Rat& s, HomPoly2 a) { return a *= s; }
  friend HomPoly2 operator*(const HomPoly2& a, const HomPoly2& b) {
    HomPoly2 r(a.degree() + b.degree());
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
    }
    return r;
  }
  friend bool operator==(const HomPoly2& a, const HomPoly2& b) { return a.c_ == b.c_; }

 private:
  static int check_degree(int d) {
    if (d < 0) throw std::invalid_argument("negative form degree");
    return d;
  }
  void require_same_degree(const HomPoly2& o) const {
    if (o.degree() != degree()) throw std::invalid_argument("adding binary forms of different degree");
  }
  std::vector<Rat> c_;
};

/// Distinct roots of H on P^1: affine roots at s = 1 plus [0:1] when s | H.
inline int hom_distinct_root_count(const HomPoly2& h) {
  if (h.is_zero()) throw std::invalid_argument("root count of the zero form");
  return distinct_root_count(h.dehomogenize()) + (h.divisible_by_s() ? 1 : 0);
}

/// Greatest common divisor of nonzero binary forms (monic in the affine part).
/// Zero forms in the list are ignored; throws if all are zero.
inline HomPoly2 hom_gcd(std::span<const HomPoly2> forms) {
  std::optional<UniPoly> g;
  int s_ord = -1;
  for (const auto& f : forms) {
    if (f.is_zero()) continue;
    const int o = f.s_order();
    s_ord = s_ord < 0 ? o : std::min(s_ord, o);
    g = g ? poly_gcd(*g, f.dehomogenize()) : f.dehomogenize().monic();
  }
  if (!g) throw std::invalid_argument("gcd of zero forms");
  return HomPoly2::homogenize(*g, g->degree()) * HomPoly2::monomial(1, s_ord, 0);
}

/// True iff the two nonzero forms vanish at a common point of P^1.
inline bool hom_share_root(const HomPoly2& a, const HomPoly2& b) {
  const HomPoly2 pair[] = {a, b};
  return hom_gcd(pair).degree() > 0;
}

/// F(s + a t, t). Unimodular, so discriminants and resultants are unchanged.
inline HomPoly2 shear(const HomPoly2& f, const Rat& a) {
  const int e = f.degree();
  HomPoly2 out(e);
  const HomPoly2 lin(std::vector<Rat>{Rat(1), a});
  HomPoly2 lin_pow = HomPoly2::monomial(1, 0, 0);
  std::vector<HomPoly2> powers{lin_pow};
  for (int m = 1; m <= e; ++m) powers.push_back(powers.back() * lin);
  for (int k = 0; k <= e; ++k) {
    if (f.coeff(k) == 0) continue;
    out += f.coeff(k) * (powers[static_cast<std::size_t>(e - k)] * HomPoly2::monomial(1, 0, k));
  }
  return out;
}

namespace detail {

/// Smallest |a| (0, 1, -1, 2, ...) with every form nonzero at [a:1].
inline Rat shear_avoiding_infinity(std::span<const HomPoly2> forms) {
  for (long m = 0;; ++m) {
    for (long a : {m, -m}) {
      if (std::all_of(forms.begin(), forms.end(), [&](const HomPoly2& f) { return f(Rat(a), Rat(1)) != 0; })) {
        return Rat(a);
      }
      if (m == 0) break;
    }
  }
}

}  // namespace detail

/// Discriminant of a binary form of degree e >= 1 (zero iff it has a repeated
/// root on P^1).
inline Rat hom_discriminant(const HomPoly2& f) {
  if (f.is_zero() || f.degree() < 1) throw std::invalid_argument("discriminant needs a nonzero form of degree >= 1");
  const HomPoly2 one[] = {f};
  const HomPoly2 g = shear(f, detail::shear_avoiding_infinity(one));
  return discriminant(g.dehomogenize());
}

/// Resultant of two nonzero binary forms (zero iff they share a root on P^1).
inline Rat hom_resultant(const HomPoly2& f, const HomPoly2& g) {
  if (f.is_zero() || g.is_zero()) throw std::invalid_argument("resultant with a zero form");
  const HomPoly2 both[] = {f, g};
  const Rat a = detail::shear_avoiding_infinity(both);
  return resultant(shear(f, a).dehomogenize(), shear(g, a).dehomogenize());
}

// ---------------------------------------------------------------------------
// Real root isolation

struct IsolatingInterval {
  Rat lo;
  Rat hi;
  int refinements = 0;
};

namespace detail {

inline std::vector<ZPoly> sturm_chain(const UniPoly& p) {
  std::vector<ZPoly> chain;
  // positive contents only, so every member keeps its sign
  chain.push_back(to_primitive(p).second);
  chain.push_back(primitive_part(derivative(chain[0])));
  while (zdeg(chain.back()) > 0) {
    const ZPoly& a = chain[chain.size() - 2];
    const ZPoly& b = chain.back();
    ZPoly r = prem(a, b);
    // prem multiplies by lc(b)^(da-db+1); undo its sign, then negate
    const bool flip = b.back() < 0 && ((zdeg(a) - zdeg(b) + 1) % 2 != 0);
    trim(r);
    if (r.empty()) break;
    r = primitive_part(std::move(r));
    if (!flip) {
      for (auto& c : r) c = -c;
    }
    chain.push_back(std::move(r));
  }
  return chain;
}

inline int variations(const std::vector<ZPoly>& chain, const Rat& x) {
  int v = 0, last = 0;
  for (const auto& q : chain) {
    const int s = sign_at(q, x);
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

inline int variations_at_infinity(const std::vector<ZPoly>& chain, bool positive) {
  int v = 0, last = 0;
  for (const auto& q : chain) {
    int s = sgn(q.back());
    if (!positive && (zdeg(q) % 2 != 0)) s = -s;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

/// A point of (lo, hi) that is not a root of p, near the midpoint.
inline Rat split_point(const ZPoly& p, const Rat& lo, const Rat& hi) {
  for (long den = 2;; ++den) {
    for (long num = den / 2; num >= 1; --num) {
      for (long n : {num, den - num}) {
        Rat m = lo + (hi - lo) * Rat(n, den);
        m.canonicalize();
        if (sign_at(p, m) != 0) return m;
      }
    }
  }
}

}  // namespace detail

/// One interval per real root of the squarefree polynomial p, ascending.
inline std::vector<IsolatingInterval> sturm_isolate(const UniPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("root isolation of the zero polynomial");
  if (p.is_constant()) return {};
  if (poly_gcd(p, p.derivative()).degree() > 0) throw std::invalid_argument("apply squarefree_part first");
  const auto chain = detail::sturm_chain(p);
  const auto& zp = chain[0];

  // Cauchy bound 1 + max|c_k / c_d|, rounded up to a power of two.
  Rat ratio(0);
  for (std::size_t k = 0; k + 1 < zp.size(); ++k) {
    Rat r(abs(zp[k]), abs(zp.back()));
    r.canonicalize();
    if (r > ratio) ratio = r;
  }
  Rat bound(1);
  while (bound <= ratio + 1) bound *= 2;

  std::vector<IsolatingInterval> out;
  struct Pending {
    Rat lo, hi;
    int vlo, vhi;
  };
  std::vector<Pending> stack{{-bound, bound, detail::variations(chain, -bound), detail::variations(chain, bound)}};
  while (!stack.empty()) {
    Pending cur = stack.back();
    stack.pop_back();
    const int count = cur.vlo - cur.vhi;
    if (count == 0) continue;
    if (count == 1) {
      out.push_back({cur.lo, cur.hi, 0});
      continue;
    }
    Rat mid = detail::split_point(zp, cur.lo, cur.hi);
    const int vmid = detail::variations(chain, mid);
    stack.push_back({mid, cur.hi, vmid, cur.vhi});
    stack.push_back({cur.lo, mid, cur.vlo, vmid});
  }
  return out;
}

/// Number of real roots of a squarefree p (Sturm's theorem over the whole line).
inline int sturm_real_root_count(const UniPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("root count of the zero polynomial");
  if (p.is_constant()) return 0;
  const auto chain = detail::sturm_chain(p);
  return detail::variations_at_infinity(chain, false) - detail::variations_at_infinity(chain, true);
}

/// Bisects iv until hi - lo <= width_bound. iv must bracket a sign change.
inline IsolatingInterval refine_root(const UniPoly& p, IsolatingInterval iv, const Rat& width_bound) {
  if (width_bound <= 0) throw std::invalid_argument("width bound must be positive");
  if (p.is_zero()) throw std::invalid_argument("refining a root of the zero polynomial");
  const auto zp = detail::to_primitive(p).second;
  const int slo = detail::sign_at(zp, iv.lo);
  const int shi = detail::sign_at(zp, iv.hi);
  if (!(iv.lo < iv.hi) || slo == 0 || shi == 0 || slo == shi) {
    throw std::invalid_argument("interval does not isolate a sign change of the polynomial");
  }
  while (iv.hi - iv.lo > width_bound) {
    Rat mid = (iv.lo + iv.hi) / 2;
    const int sm = detail::sign_at(zp, mid);
    ++iv.refinements;
    if (sm == 0) {
      Rat delta = std::min(Rat(width_bound), Rat(iv.hi - iv.lo)) / 4;
      iv.lo = mid - delta;
      iv.hi = mid + delta;
      break;
    }
    if (sm == slo) {
      iv.lo = mid;
    } else {
      iv.hi = mid;
    }
  }
  return iv;
}

}  // namespace edcurve
