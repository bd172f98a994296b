#ifndef GERMLAB_UNIVARIATE_HPP
#define GERMLAB_UNIVARIATE_HPP

// Dense univariate polynomials over Q with Sturm-sequence root isolation.

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "germlab/error.hpp"
#include "germlab/poly.hpp"
#include "germlab/rational.hpp"

namespace germlab {

class UPoly {
 public:
  UPoly() = default;
  /// Coefficients from the constant term upward.
  explicit UPoly(std::vector<Rat> c) : c_(std::move(c)) { trim(); }
  UPoly(std::initializer_list<Rat> c) : c_(c) { trim(); }

  static UPoly constant(const Rat& a) { return UPoly(std::vector<Rat>{a}); }
  static UPoly x() { return UPoly(std::vector<Rat>{0, 1}); }

  /// From a multivariate polynomial that only involves variable `var`.
  static UPoly from_poly(const Poly& p, int var) {
    std::vector<Rat> c;
    for (const auto& t : p.terms()) {
      auto e = p.exponents(t);
      for (int i = 0; i < p.nvars(); ++i)
        if (i != var && e[static_cast<std::size_t>(i)] != 0)
          fail(ErrorKind::precondition, "polynomial is not univariate in the requested variable");
      auto d = static_cast<std::size_t>(e[static_cast<std::size_t>(var)]);
      if (c.size() <= d) c.resize(d + 1);
      c[d] += t.coef;
    }
    return UPoly(std::move(c));
  }

  Poly to_poly(int nvars, int var) const {
    Poly r(nvars);
    for (std::size_t i = 0; i < c_.size(); ++i)
      if (sgn(c_[i]) != 0) {
        std::vector<int> e(static_cast<std::size_t>(nvars), 0);
        e[static_cast<std::size_t>(var)] = static_cast<int>(i);
        r += Poly::monomial(nvars, e, c_[i]);
      }
    return r;
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return c_.empty(); }
  const std::vector<Rat>& coeffs() const { return c_; }
  Rat coeff(int i) const { return i >= 0 && i < static_cast<int>(c_.size()) ? c_[static_cast<std::size_t>(i)] : Rat(0); }
  Rat lead() const { return c_.empty() ? Rat(0) : c_.back(); }

  Rat eval(const Rat& x) const {
    Rat r = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
    return r;
  }
  int sign_at(const Rat& x) const { return sgn(eval(x)); }

  UPoly derivative() const {
    std::vector<Rat> d;
    for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * Rat(static_cast<long>(i)));
    return UPoly(std::move(d));
  }

  UPoly operator-() const {
    UPoly r = *this;
    for (auto& a : r.c_) a = -a;
    return r;
  }
  friend UPoly operator+(const UPoly& a, const UPoly& b) {
    std::vector<Rat> c(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
    return UPoly(std::move(c));
  }
  friend UPoly operator-(const UPoly& a, const UPoly& b) { return a + (-b); }
  friend UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rat> c(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return UPoly(std::move(c));
  }
  friend UPoly operator*(const UPoly& a, const Rat& s) {
    UPoly r = a;
    for (auto& x : r.c_) x *= s;
    r.trim();
    return r;
  }
  friend bool operator==(const UPoly& a, const UPoly& b) = default;

  /// Quotient and remainder; b must be nonzero.
  friend std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
    if (b.is_zero()) fail(ErrorKind::precondition, "division by zero polynomial");
    std::vector<Rat> r = a.c_;
    std::vector<Rat> q(a.c_.size() >= b.c_.size() ? a.c_.size() - b.c_.size() + 1 : 0);
    const Rat& lb = b.c_.back();
    for (std::size_t i = r.size(); i >= b.c_.size(); --i) {
      Rat f = r[i - 1] / lb;
      std::size_t shift = i - b.c_.size();
      q[shift] = f;
      if (sgn(f) != 0)
        for (std::size_t j = 0; j < b.c_.size(); ++j) r[shift + j] -= f * b.c_[j];
      if (i == b.c_.size()) break;
    }
    r.resize(std::min(r.size(), b.c_.size() - 1));
    return {UPoly(std::move(q)), UPoly(std::move(r))};
  }
  friend UPoly operator%(const UPoly& a, const UPoly& b) { return divmod(a, b).second; }
  friend UPoly operator/(const UPoly& a, const UPoly& b) { return divmod(a, b).first; }

  UPoly monic() const { return is_zero() ? *this : *this * (1 / lead()); }

  std::string to_string(const std::string& var = "t") const {
    if (is_zero()) return "0";
    Poly p = to_poly(1, 0);
    return p.to_string({var});
  }

 private:
  void trim() {
    while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
  }
  std::vector<Rat> c_;
};

inline UPoly gcd(UPoly a, UPoly b) {
  while (!b.is_zero()) {
    UPoly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

inline UPoly squarefree_part(const UPoly& p) {
  if (p.degree() <= 0) return p.monic();
  return (p / gcd(p, p.derivative())).monic();
}

/// Strict bound: every real root r satisfies |r| < bound.
inline Rat root_bound(const UPoly& p) {
  Rat m = 0;
  for (int i = 0; i < p.degree(); ++i) m = std::max(m, Rat(abs(p.coeff(i) / p.lead())));
  return m + 1;
}

class SturmSequence {
 public:
  explicit SturmSequence(const UPoly& p) {
    if (p.is_zero()) fail(ErrorKind::precondition, "Sturm sequence of zero polynomial");
    seq_.push_back(p);
    seq_.push_back(p.derivative());
    while (!seq_.back().is_zero()) {
      UPoly r = -(seq_[seq_.size() - 2] % seq_.back());
      if (r.is_zero()) break;
      seq_.push_back(std::move(r));
    }
    if (seq_.back().is_zero()) seq_.pop_back();
  }

  int variations(const Rat& x) const {
    int v = 0, last = 0;
    for (const auto& q : seq_) {
      int s = q.sign_at(x);
      if (s == 0) continue;
      if (last != 0 && s != last) ++v;
      last = s;
    }
    return v;
  }

  /// Number of distinct real roots in (a, b].
  int count(const Rat& a, const Rat& b) const { return variations(a) - variations(b); }

 private:
  std::vector<UPoly> seq_;
};

/// A real root of a squarefree polynomial, isolated in (lo, hi]; when
/// `exact` is set lo = hi = the root.
struct RootInterval {
  Rat lo, hi;
  bool exact = false;
  Rat width() const { return hi - lo; }
};

/// Simplest rational (smallest denominator) in the closed interval [a, b].
inline Rat simplest_rational(Rat a, Rat b) {
  if (a > b) std::swap(a, b);
  if (sgn(a) <= 0 && sgn(b) >= 0) return 0;
  if (sgn(b) < 0) return -simplest_rational(-b, -a);
  // continued-fraction descent for 0 < a <= b
  Int fa = a.get_num() / a.get_den();  // floor for positive
  if (Rat(fa) == a) return a;
  if (Rat(fa + 1) <= b) return Rat(fa + 1);
  Rat fr_a = a - Rat(fa), fr_b = b - Rat(fa);
  // a, b share the integer part; recurse on reciprocals of fractional parts
  Rat inner = simplest_rational(1 / fr_b, 1 / fr_a);
  return Rat(fa) + 1 / inner;
}

/// Isolates all real roots of p (any multiplicity; roots are reported once).
/// Rational roots met during bisection are returned exact.
inline std::vector<RootInterval> isolate_roots(const UPoly& p) {
  std::vector<RootInterval> out;
  if (p.degree() <= 0) return out;
  UPoly s = squarefree_part(p);
  SturmSequence st(s);
  Rat b = root_bound(s);
  struct Job {
    Rat lo, hi;
    int count;
  };
  std::vector<Job> stack{{-b, b, st.count(-b, b)}};
  while (!stack.empty()) {
    Job j = stack.back();
    stack.pop_back();
    if (j.count == 0) continue;
    if (j.count == 1) {
      if (s.sign_at(j.hi) == 0) out.push_back({j.hi, j.hi, true});
      else out.push_back({j.lo, j.hi, false});
      continue;
    }
    Rat m = (j.lo + j.hi) / 2;
    stack.push_back({m, j.hi, st.count(m, j.hi)});
    stack.push_back({j.lo, m, st.count(j.lo, m)});
  }
  std::sort(out.begin(), out.end(), [](const RootInterval& a, const RootInterval& b) { return a.hi < b.hi; });
  return out;
}

/// Refines a non-exact root of squarefree `s` until hi - lo <= 2^-bits.
/// Lands on exact rational roots when bisection hits them, and also tests
/// the simplest rational in the final interval.
inline RootInterval refine_root(const UPoly& s, const SturmSequence& st, RootInterval r, int bits) {
  if (r.exact) return r;
  Rat eps = Rat(1) / Rat(Int(1) << static_cast<unsigned>(bits));
  while (r.width() > eps) {
    Rat m = (r.lo + r.hi) / 2;
    if (s.sign_at(m) == 0) return {m, m, true};
    if (st.count(r.lo, m) == 1) r.hi = m;
    else r.lo = m;
  }
  Rat q = simplest_rational(r.lo, r.hi);
  if (q > r.lo && s.sign_at(q) == 0) return {q, q, true};
  return r;
}

/// All real roots refined to width 2^-bits, in increasing order.
inline std::vector<RootInterval> real_roots(const UPoly& p, int bits) {
  std::vector<RootInterval> out;
  if (p.degree() <= 0) return out;
  UPoly s = squarefree_part(p);
  SturmSequence st(s);
  for (auto r : isolate_roots(p)) out.push_back(refine_root(s, st, r, bits));
  return out;
}

/// True if p has a repeated (complex) root.
inline bool has_repeated_root(const UPoly& p) { return gcd(p, p.derivative()).degree() > 0; }

}  // namespace germlab

#endif  // GERMLAB_UNIVARIATE_HPP
