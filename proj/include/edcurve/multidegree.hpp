// Truncated multigraded ring Z[T1..Tn] / (T1^(h+1), ..., Tn^(h+1)).
//
// Classes of subvarieties of (P^h)^n live here. A codimension-c class is a
// sum of monomials of total degree c; the exponent on T_i counts the
// hyperplane sections pulled back from the i-th factor.

#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace edcurve {

class MultiDeg {
 public:
  using Exponents = std::vector<int>;

  MultiDeg(int n, int h) : n_(n), h_(h) {
    if (n < 1 || h < 0) throw std::invalid_argument("multidegree ring needs n >= 1 and h >= 0");
  }

  static MultiDeg constant(int n, int h, std::int64_t c) {
    MultiDeg m(n, h);
    m.add_term(Exponents(static_cast<std::size_t>(n), 0), c);
    return m;
  }
  /// T_i, with i 1-based.
  static MultiDeg variable(int n, int h, int i) {
    MultiDeg m(n, h);
    Exponents e(static_cast<std::size_t>(n), 0);
    if (i < 1 || i > n) throw std::out_of_range("variable index out of range");
    e[static_cast<std::size_t>(i - 1)] = 1;
    m.add_term(e, 1);
    return m;
  }

  int n() const { return n_; }
  int h() const { return h_; }
  const std::map<Exponents, std::int64_t>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  std::int64_t coefficient(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? 0 : it->second;
  }

  /// Adds c * T^e; exponents above h are truncated away.
  void add_term(const Exponents& e, std::int64_t c) {
    if (e.size() != static_cast<std::size_t>(n_)) throw std::invalid_argument("exponent tuple has the wrong length");
    for (int a : e) {
      if (a < 0) throw std::invalid_argument("negative exponent");
      if (a > h_) return;
    }
    if (c == 0) return;
    auto& slot = terms_[e];
    slot += c;
    if (slot == 0) terms_.erase(e);
  }

  MultiDeg& operator+=(const MultiDeg& o) {
    require_same_ring(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  friend MultiDeg operator+(MultiDeg a, const MultiDeg& b) { return a += b; }
  friend MultiDeg operator*(const MultiDeg& a, const MultiDeg& b) {
    a.require_same_ring(b);
    MultiDeg r(a.n_, a.h_);
    Exponents e(static_cast<std::size_t>(a.n_));
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
        r.add_term(e, ca * cb);
      }
    }
    return r;
  }
  friend MultiDeg operator*(std::int64_t s, MultiDeg a) {
    MultiDeg r(a.n_, a.h_);
    for (const auto& [e, c] : a.terms_) r.add_term(e, s * c);
    return r;
  }
  friend bool operator==(const MultiDeg& a, const MultiDeg& b) {
    return a.n_ == b.n_ && a.h_ == b.h_ && a.terms_ == b.terms_;
  }

 private:
  void require_same_ring(const MultiDeg& o) const {
    if (o.n_ != n_ || o.h_ != h_) throw std::invalid_argument("multidegrees live in different rings");
  }

  int n_;
  int h_;
  std::map<Exponents, std::int64_t> terms_;
};

inline MultiDeg md_mul(const MultiDeg& a, const MultiDeg& b) { return a * b; }

/// Coefficient of T1^h ... Tn^h.
inline std::int64_t md_top_coefficient(const MultiDeg& a) {
  return a.coefficient(MultiDeg::Exponents(static_cast<std::size_t>(a.n()), a.h()));
}

/// Class of a degree-e curve in (P^h)^n meeting each factor's hyperplane
/// transversally in e points: sum_i e * T1^h ... Tn^h / T_i.
inline MultiDeg curve_multidegree(int e, int n, int h) {
  if (e < 1 || n < 1 || h < 1) throw std::invalid_argument("curve multidegree needs e, n, h >= 1");
  MultiDeg m(n, h);
  for (int i = 0; i < n; ++i) {
    MultiDeg::Exponents ex(static_cast<std::size_t>(n), h);
    ex[static_cast<std::size_t>(i)] = h - 1;
    m.add_term(ex, e);
  }
  return m;
}

/// Class of the homogenized isotropic hypersurface V(q_beta), of degree 2 in
/// every factor: sum_i 2 T_i.
inline MultiDeg isotropic_hypersurface_multidegree(int n, int h) {
  if (n < 1 || h < 1) throw std::invalid_argument("isotropic hypersurface class needs n, h >= 1");
  MultiDeg m(n, h);
  for (int i = 1; i <= n; ++i) m += 2 * MultiDeg::variable(n, h, i);
  return m;
}

/// Class of the n-view variety of P^3 in (P^2)^n: sum over alpha with every
/// alpha_i <= 2 and |alpha| = 3 of T^(2 - alpha). Each coefficient is 1
/// because alpha_i generic linear conditions per view cut out one point of P^3.
inline MultiDeg point_multiview_multidegree(int n) {
  if (n < 2) throw std::invalid_argument("point multiview multidegree needs n >= 2");
  MultiDeg m(n, 2);
  MultiDeg::Exponents alpha(static_cast<std::size_t>(n), 0);
  // odometer over {0,1,2}^n
  while (true) {
    int sum = 0;
    for (int a : alpha) sum += a;
    if (sum == 3) {
      MultiDeg::Exponents ex(alpha.size());
      for (std::size_t i = 0; i < alpha.size(); ++i) ex[i] = 2 - alpha[i];
      m.add_term(ex, 1);
    }
    std::size_t i = 0;
    while (i < alpha.size() && alpha[i] == 2) alpha[i++] = 0;
    if (i == alpha.size()) break;
    ++alpha[i];
  }
  return m;
}

namespace detail {

inline std::string render_monomial(std::int64_t c, const MultiDeg::Exponents& e, bool first) {
  std::ostringstream os;
  std::int64_t mag = c < 0 ? -c : c;
  if (first) {
    if (c < 0) os << "-";
  } else {
    os << (c < 0 ? " - " : " + ");
  }
  bool any_var = false;
  std::ostringstream vars;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (any_var) vars << "*";
    vars << "T" << (i + 1);
    if (e[i] > 1) vars << "^" << e[i];
    any_var = true;
  }
  if (!any_var) {
    os << mag;
  } else {
    if (mag != 1) os << mag << "*";
    os << vars.str();
  }
  return os.str();
}

inline std::string render_terms(const std::map<MultiDeg::Exponents, std::int64_t>& terms) {
  if (terms.empty()) return "0";
  std::string out;
  bool first = true;
  // descending lex: larger exponent on T1 first
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    out += render_monomial(it->second, it->first, first);
    first = false;
  }
  return out;
}

}  // namespace detail

/// e.g. "T1^3 + 6*T1^2*T2 + 11*T1*T2^2 + 6*T2^3"
inline std::string to_string(const MultiDeg& m) { return detail::render_terms(m.terms()); }

/// Complementary-exponent rendering, T^(h,...,h) - alpha per term. A curve
/// class renders as "2*T1 + 2*T2".
inline std::string to_dual_string(const MultiDeg& m) {
  std::map<MultiDeg::Exponents, std::int64_t> dual;
  for (const auto& [e, c] : m.terms()) {
    MultiDeg::Exponents d(e.size());
    for (std::size_t i = 0; i < e.size(); ++i) d[i] = m.h() - e[i];
    dual[d] = c;
  }
  return detail::render_terms(dual);
}

/// Parses a sum of terms like "3*T1^2*T2 - T3 + 4" into the ring (n, h).
inline MultiDeg parse_multideg(std::string_view text, int n, int h) {
  MultiDeg m(n, h);
  std::string s;
  for (char c : text) {
    if (c != ' ' && c != '\t') s += c;
  }
  if (s.empty()) throw std::invalid_argument("empty multidegree expression");
  std::size_t pos = 0;
  auto fail = [&](const std::string& why) {
    throw std::invalid_argument("cannot parse multidegree '" + std::string(text) + "': " + why);
  };
  auto read_int = [&]() {
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (start == pos) fail("expected digits");
    return std::stoll(s.substr(start, pos - start));
  };
  while (pos < s.size()) {
    std::int64_t sign = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      sign = s[pos] == '-' ? -1 : 1;
      ++pos;
    } else if (pos != 0) {
      fail("expected '+' or '-'");
    }
    std::int64_t coeff = 1;
    MultiDeg::Exponents e(static_cast<std::size_t>(n), 0);
    bool saw_factor = false;
    while (pos < s.size() && s[pos] != '+' && s[pos] != '-') {
      if (saw_factor && s[pos] == '*') ++pos;
      if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
        coeff *= read_int();
      } else if (pos < s.size() && (s[pos] == 'T' || s[pos] == 't')) {
        ++pos;
        if (pos < s.size() && s[pos] == '_') ++pos;
        const auto idx = read_int();
        if (idx < 1 || idx > n) fail("variable index out of range");
        int power = 1;
        if (pos < s.size() && s[pos] == '^') {
          ++pos;
          power = static_cast<int>(read_int());
        }
        e[static_cast<std::size_t>(idx - 1)] += power;
      } else {
        fail("unexpected character");
      }
      saw_factor = true;
    }
    if (!saw_factor) fail("empty term");
    m.add_term(e, sign * coeff);
  }
  return m;
}

}  // namespace edcurve
