#ifndef GERMLAB_POLY_HPP
#define GERMLAB_POLY_HPP

// Sparse multivariate polynomials over Q.
//
// A monomial is packed into one 64-bit word, one byte per variable with
// variable 0 in the most significant byte, so integer order on keys is lex
// order with x1 > x2 > ... and monomial product is key addition. This caps
// germs at eight variables and total degree 255, far above what the
// classifiers ever need (degrees stay below ten).

#include <algorithm>
#include <cstdint>
#include <span>
#include <string>
#include <tuple>
#include <utility>
#include <unordered_map>
#include <vector>

#include "germlab/error.hpp"
#include "germlab/linalg.hpp"
#include "germlab/rational.hpp"

namespace germlab {

inline constexpr int max_vars = 8;
inline constexpr int max_degree = 255;

namespace mono {

inline constexpr int shift(int var) { return (7 - var) * 8; }

inline int degree(std::uint64_t m) {
  return static_cast<int>((m * 0x0101010101010101ULL) >> 56);
}

inline int exponent(std::uint64_t m, int var) {
  return static_cast<int>((m >> shift(var)) & 0xFF);
}

inline std::uint64_t unit(int var) { return std::uint64_t{1} << shift(var); }

inline std::uint64_t pack(std::span<const int> exps) {
  std::uint64_t m = 0;
  int total = 0;
  for (std::size_t i = 0; i < exps.size(); ++i) {
    if (exps[i] < 0) fail(ErrorKind::dimension, "negative exponent");
    total += exps[i];
    m |= static_cast<std::uint64_t>(exps[i]) << shift(static_cast<int>(i));
  }
  if (total > max_degree) fail(ErrorKind::dimension, "total degree exceeds 255");
  return m;
}

}  // namespace mono

class Poly {
 public:
  struct Term {
    std::uint64_t mono;
    Rat coef;
    friend bool operator==(const Term& a, const Term& b) {
      return a.mono == b.mono && a.coef == b.coef;
    }
  };

  Poly() = default;
  explicit Poly(int nvars) : nvars_(nvars) { check_nvars(nvars); }

  static Poly constant(int nvars, const Rat& c) {
    Poly p(nvars);
    if (sgn(c) != 0) p.terms_.push_back({0, c});
    return p;
  }

  /// The coordinate function x_{var+1}; `var` is 0-based.
  static Poly variable(int nvars, int var, const Rat& c = 1) {
    Poly p(nvars);
    p.check_var(var);
    if (sgn(c) != 0) p.terms_.push_back({mono::unit(var), c});
    return p;
  }

  static Poly monomial(int nvars, std::span<const int> exps, const Rat& c = 1) {
    Poly p(nvars);
    if (static_cast<int>(exps.size()) != nvars)
      fail(ErrorKind::dimension, "exponent vector length differs from nvars");
    if (sgn(c) != 0) p.terms_.push_back({mono::pack(exps), c});
    return p;
  }

  static Poly monomial(int nvars, std::initializer_list<int> exps, const Rat& c = 1) {
    std::vector<int> e(exps);
    return monomial(nvars, std::span<const int>(e), c);
  }

  int nvars() const { return nvars_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  int degree() const {
    int d = -1;
    for (const auto& t : terms_) d = std::max(d, mono::degree(t.mono));
    return d;
  }

  /// Lowest total degree among nonzero terms (order of vanishing at 0).
  int order() const {
    int d = max_degree + 1;
    for (const auto& t : terms_) d = std::min(d, mono::degree(t.mono));
    return terms_.empty() ? -1 : d;
  }

  Rat constant_term() const {
    if (!terms_.empty() && terms_.front().mono == 0) return terms_.front().coef;
    return 0;
  }

  Rat coeff(std::span<const int> exps) const {
    auto key = mono::pack(exps);
    auto it = std::lower_bound(terms_.begin(), terms_.end(), key,
                               [](const Term& t, std::uint64_t k) { return t.mono < k; });
    return (it != terms_.end() && it->mono == key) ? it->coef : Rat(0);
  }

  Rat coeff(std::initializer_list<int> exps) const {
    std::vector<int> e(exps);
    return coeff(std::span<const int>(e));
  }

  std::vector<int> exponents(const Term& t) const {
    std::vector<int> e(static_cast<std::size_t>(nvars_));
    for (int i = 0; i < nvars_; ++i) e[static_cast<std::size_t>(i)] = mono::exponent(t.mono, i);
    return e;
  }

  friend bool operator==(const Poly& a, const Poly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

  Poly operator-() const {
    Poly r = *this;
    for (auto& t : r.terms_) t.coef = -t.coef;
    return r;
  }

  friend Poly operator+(const Poly& a, const Poly& b) { return merge(a, b, false); }
  friend Poly operator-(const Poly& a, const Poly& b) { return merge(a, b, true); }

  Poly& operator+=(const Poly& b) { return *this = *this + b; }
  Poly& operator-=(const Poly& b) { return *this = *this - b; }

  friend Poly operator*(const Poly& a, const Poly& b) { return mul_truncated(a, b, max_degree); }
  Poly& operator*=(const Poly& b) { return *this = *this * b; }

  friend Poly operator*(const Poly& a, const Rat& c) {
    if (sgn(c) == 0) return Poly(a.nvars_);
    Poly r = a;
    for (auto& t : r.terms_) t.coef *= c;
    return r;
  }
  friend Poly operator*(const Rat& c, const Poly& a) { return a * c; }

  /// Product with all terms of total degree > maxdeg discarded.
  friend Poly mul_truncated(const Poly& a, const Poly& b, int maxdeg) {
    check_same(a, b);
    return sum_of_products({{false, &a, &b}}, maxdeg, a.nvars_);
  }

  /// Coefficients over a common denominator, with term degrees.
  struct Scaled {
    Int den = 1;
    std::vector<Int> num;
    std::vector<int> deg;
  };
  static Scaled scaled(const Poly& p) {
    Scaled s;
    for (const auto& t : p.terms_) mpz_lcm(s.den.get_mpz_t(), s.den.get_mpz_t(), t.coef.get_den_mpz_t());
    s.num.reserve(p.terms_.size());
    s.deg.reserve(p.terms_.size());
    for (const auto& t : p.terms_) {
      s.num.push_back(t.coef.get_num() * (s.den / t.coef.get_den()));
      s.deg.push_back(mono::degree(t.mono));
    }
    return s;
  }

  /// Sum of +-(a * b) over the given triples, truncated above maxdeg. The
  /// inner loop is integer multiply-add over a common denominator.
  static Poly sum_of_products(const std::vector<std::tuple<bool, const Poly*, const Poly*>>& items, int maxdeg,
                              int nvars) {
    Poly r(nvars);
    std::unordered_map<const Poly*, Scaled> sc;
    auto get = [&](const Poly* p) -> const Scaled& {
      auto it = sc.find(p);
      if (it == sc.end()) it = sc.emplace(p, scaled(*p)).first;
      return it->second;
    };
    Int den = 1;
    for (const auto& [negate, pa, pb] : items) {
      check_same(*pa, r);
      check_same(*pb, r);
      if (pa->is_zero() || pb->is_zero()) continue;
      Int d = get(pa).den * get(pb).den;
      mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), d.get_mpz_t());
    }
    std::unordered_map<std::uint64_t, std::size_t> slot;
    std::vector<std::pair<std::uint64_t, Int>> acc;
    Int scale, lhs;
    for (const auto& [negate, pa, pb] : items) {
      if (pa->is_zero() || pb->is_zero()) continue;
      const Scaled& sa = get(pa);
      const Scaled& sb = get(pb);
      scale = den / (sa.den * sb.den);
      for (std::size_t ia = 0; ia < pa->terms_.size(); ++ia) {
        bool have_lhs = false;
        for (std::size_t j = 0; j < pb->terms_.size(); ++j) {
          if (sa.deg[ia] + sb.deg[j] > maxdeg) {
            if (maxdeg >= max_degree) fail(ErrorKind::dimension, "total degree exceeds 255");
            continue;
          }
          if (!have_lhs) {
            lhs = sa.num[ia] * scale;
            have_lhs = true;
          }
          auto [it, fresh] = slot.try_emplace(pa->terms_[ia].mono + pb->terms_[j].mono, acc.size());
          if (fresh) acc.emplace_back(it->first, Int(0));
          mpz_ptr cell = acc[it->second].second.get_mpz_t();
          if (negate) mpz_submul(cell, lhs.get_mpz_t(), sb.num[j].get_mpz_t());
          else mpz_addmul(cell, lhs.get_mpz_t(), sb.num[j].get_mpz_t());
        }
      }
    }
    std::sort(acc.begin(), acc.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    r.terms_.reserve(acc.size());
    for (auto& [m, c] : acc) {
      if (sgn(c) == 0) continue;
      Rat q(c, den);
      q.canonicalize();
      r.terms_.push_back({m, std::move(q)});
    }
    return r;
  }

  Poly truncated(int maxdeg) const {
    Poly r(nvars_);
    for (const auto& t : terms_)
      if (mono::degree(t.mono) <= maxdeg) r.terms_.push_back(t);
    return r;
  }

  Poly pow(int e, int maxdeg = max_degree) const {
    if (e < 0) fail(ErrorKind::dimension, "negative power");
    Poly r = constant(nvars_, 1);
    Poly base = *this;
    while (e > 0) {
      if (e & 1) r = mul_truncated(r, base, maxdeg);
      e >>= 1;
      if (e) base = mul_truncated(base, base, maxdeg);
    }
    return r;
  }

  /// Formal partial derivative with respect to x_{var+1} (0-based index).
  Poly partial(int var) const {
    check_var(var);
    Poly r(nvars_);
    for (const auto& t : terms_) {
      int e = mono::exponent(t.mono, var);
      if (e == 0) continue;
      r.terms_.push_back({t.mono - mono::unit(var), t.coef * e});
    }
    // Subtracting the same unit from every key preserves their order.
    return r;
  }

  Rat eval(std::span<const Rat> point) const {
    if (static_cast<int>(point.size()) != nvars_)
      fail(ErrorKind::dimension, "evaluation point length differs from nvars");
    Rat sum = 0;
    for (const auto& t : terms_) {
      Rat v = t.coef;
      for (int i = 0; i < nvars_ && sgn(v) != 0; ++i) {
        int e = mono::exponent(t.mono, i);
        if (e == 0) continue;
        Rat pw;
        mpz_pow_ui(pw.get_num_mpz_t(), point[static_cast<std::size_t>(i)].get_num_mpz_t(), static_cast<unsigned long>(e));
        mpz_pow_ui(pw.get_den_mpz_t(), point[static_cast<std::size_t>(i)].get_den_mpz_t(), static_cast<unsigned long>(e));
        v *= pw;
      }
      sum += v;
    }
    return sum;
  }

  /// p(images[0], ..., images[n-1]); all images share one nvars, which
  /// becomes the nvars of the result.
  Poly substitute(const std::vector<Poly>& images, int maxdeg = max_degree) const {
    if (static_cast<int>(images.size()) != nvars_)
      fail(ErrorKind::dimension, "substitution needs one image per variable");
    if (images.empty()) fail(ErrorKind::dimension, "empty substitution");
    int out_vars = images[0].nvars();
    for (const auto& im : images) if (im.nvars() != out_vars) fail(ErrorKind::dimension, "substitution images disagree on nvars");
    std::vector<std::vector<Poly>> powers(static_cast<std::size_t>(nvars_));
    auto power = [&](int var, int e) -> const Poly& {
      auto& cache = powers[static_cast<std::size_t>(var)];
      if (cache.empty()) cache.push_back(constant(out_vars, 1));
      while (static_cast<int>(cache.size()) <= e)
        cache.push_back(mul_truncated(cache.back(), images[static_cast<std::size_t>(var)], maxdeg));
      return cache[static_cast<std::size_t>(e)];
    };
    Poly r(out_vars);
    for (const auto& t : terms_) {
      Poly term = constant(out_vars, t.coef);
      for (int i = 0; i < nvars_ && !term.is_zero(); ++i) {
        int e = mono::exponent(t.mono, i);
        if (e) term = mul_truncated(term, power(i, e), maxdeg);
      }
      r += term;
    }
    return r;
  }

  /// p(A x) for a square rational matrix A of size nvars.
  Poly compose_linear(const RatMatrix& a, int maxdeg = max_degree) const {
    if (!a.square() || static_cast<int>(a.rows()) != nvars_)
      fail(ErrorKind::dimension, "compose_linear needs a square matrix of size nvars");
    std::vector<Poly> images;
    for (int i = 0; i < nvars_; ++i) {
      Poly row(nvars_);
      for (int j = 0; j < nvars_; ++j)
        row += variable(nvars_, j, a(static_cast<std::size_t>(i), static_cast<std::size_t>(j)));
      images.push_back(std::move(row));
    }
    return substitute(images, maxdeg);
  }

  /// Human-readable form, e.g. "3*x1^2 + x2 - 1/2*x1*x2". Terms are listed
  /// by descending total degree, ties by descending lex order.
  std::string to_string(const std::vector<std::string>& names = {}) const {
    if (terms_.empty()) return "0";
    std::vector<const Term*> order;
    for (const auto& t : terms_) order.push_back(&t);
    std::sort(order.begin(), order.end(), [](const Term* a, const Term* b) {
      int da = mono::degree(a->mono), db = mono::degree(b->mono);
      return da != db ? da > db : a->mono > b->mono;
    });
    std::string out;
    bool first = true;
    for (const Term* t : order) {
      Rat c = t->coef;
      bool neg = sgn(c) < 0;
      if (neg) c = -c;
      if (first) out += neg ? "-" : "";
      else out += neg ? " - " : " + ";
      first = false;
      std::string m;
      for (int i = 0; i < nvars_; ++i) {
        int e = mono::exponent(t->mono, i);
        if (!e) continue;
        if (!m.empty()) m += "*";
        m += var_name(names, i);
        if (e > 1) m += "^" + std::to_string(e);
      }
      if (m.empty()) out += c.get_str();
      else if (c == 1) out += m;
      else out += c.get_str() + "*" + m;
    }
    return out;
  }

  static std::string var_name(const std::vector<std::string>& names, int i) {
    if (i < static_cast<int>(names.size())) return names[static_cast<std::size_t>(i)];
    return "x" + std::to_string(i + 1);
  }

 private:
  static void check_nvars(int n) {
    if (n < 1 || n > max_vars) fail(ErrorKind::dimension, "nvars must be in 1..8");
  }
  void check_var(int var) const {
    if (var < 0 || var >= nvars_)
      fail(ErrorKind::index, "variable index " + std::to_string(var + 1) + " out of range 1.." + std::to_string(nvars_));
  }
  static void check_same(const Poly& a, const Poly& b) {
    if (a.nvars_ != b.nvars_)
      fail(ErrorKind::dimension, "nvars mismatch: " + std::to_string(a.nvars_) + " vs " + std::to_string(b.nvars_));
  }

  static Poly merge(const Poly& a, const Poly& b, bool subtract) {
    check_same(a, b);
    Poly r(a.nvars_);
    r.terms_.reserve(a.terms_.size() + b.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < a.terms_.size() || j < b.terms_.size()) {
      if (j == b.terms_.size() || (i < a.terms_.size() && a.terms_[i].mono < b.terms_[j].mono)) {
        r.terms_.push_back(a.terms_[i++]);
      } else if (i == a.terms_.size() || b.terms_[j].mono < a.terms_[i].mono) {
        r.terms_.push_back({b.terms_[j].mono, subtract ? Rat(-b.terms_[j].coef) : b.terms_[j].coef});
        ++j;
      } else {
        Rat c = subtract ? Rat(a.terms_[i].coef - b.terms_[j].coef) : Rat(a.terms_[i].coef + b.terms_[j].coef);
        if (sgn(c) != 0) r.terms_.push_back({a.terms_[i].mono, std::move(c)});
        ++i;
        ++j;
      }
    }
    return r;
  }

  int nvars_ = 1;
  std::vector<Term> terms_;  // strictly increasing mono, nonzero coef
};

/// Polynomial vector field; component i is the coefficient of d/dx_{i+1}.
struct VecField {
  std::vector<Poly> components;

  std::size_t size() const { return components.size(); }
  const Poly& operator[](std::size_t i) const { return components[i]; }

  static VecField constant(int nvars, const RatVector& v) {
    VecField f;
    for (const auto& c : v) f.components.push_back(Poly::constant(nvars, c));
    return f;
  }

  VecField operator-() const {
    VecField r = *this;
    for (auto& c : r.components) c = -c;
    return r;
  }

  RatVector at(std::span<const Rat> point) const {
    RatVector v;
    for (const auto& c : components) v.push_back(c.eval(point));
    return v;
  }

  RatVector at_origin() const {
    RatVector v;
    for (const auto& c : components) v.push_back(c.constant_term());
    return v;
  }
};

/// Directional derivative sum_i v_i * dp/dx_i, truncated above maxdeg.
inline Poly dir_deriv(const Poly& p, const VecField& v, int maxdeg = max_degree) {
  if (static_cast<int>(v.size()) != p.nvars())
    fail(ErrorKind::dimension, "vector field has " + std::to_string(v.size()) +
                                   " components for a polynomial in " + std::to_string(p.nvars()) + " variables");
  std::vector<Poly> partials;
  partials.reserve(static_cast<std::size_t>(p.nvars()));
  std::vector<std::tuple<bool, const Poly*, const Poly*>> items;
  for (int i = 0; i < p.nvars(); ++i) {
    partials.push_back(p.partial(i));
    items.emplace_back(false, &v[static_cast<std::size_t>(i)], &partials.back());
  }
  return Poly::sum_of_products(items, maxdeg, p.nvars());
}

inline Poly partial(const Poly& p, int var) { return p.partial(var); }

/// Gradient at a point as a rational vector.
inline RatVector gradient_at(const Poly& p, std::span<const Rat> point) {
  RatVector g;
  for (int i = 0; i < p.nvars(); ++i) g.push_back(p.partial(i).eval(point));
  return g;
}

/// Gradient at the origin, read off the linear coefficients.
inline RatVector gradient_at_origin(const Poly& p) {
  RatVector g(static_cast<std::size_t>(p.nvars()));
  for (const auto& t : p.terms())
    if (mono::degree(t.mono) == 1)
      for (int i = 0; i < p.nvars(); ++i)
        if (mono::exponent(t.mono, i)) g[static_cast<std::size_t>(i)] = t.coef;
  return g;
}

/// Hessian at the origin, read off the quadratic coefficients.
inline RatMatrix hessian_at_origin(const Poly& p) {
  auto n = static_cast<std::size_t>(p.nvars());
  RatMatrix h(n, n);
  for (const auto& t : p.terms()) {
    if (mono::degree(t.mono) != 2) continue;
    std::vector<std::size_t> vars;
    for (int i = 0; i < p.nvars(); ++i)
      for (int e = 0; e < mono::exponent(t.mono, i); ++e) vars.push_back(static_cast<std::size_t>(i));
    if (vars[0] == vars[1]) {
      h(vars[0], vars[0]) = 2 * t.coef;
    } else {
      h(vars[0], vars[1]) = t.coef;
      h(vars[1], vars[0]) = t.coef;
    }
  }
  return h;
}

/// Matrix of polynomials sharing one nvars.
class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(std::size_t rows, std::size_t cols, int nvars)
      : rows_(rows), cols_(cols), nvars_(nvars), a_(rows * cols, Poly(nvars)) {
    if (rows == 0 || cols == 0) fail(ErrorKind::dimension, "empty polynomial matrix");
  }

  static PolyMatrix identity(std::size_t n, int nvars) {
    PolyMatrix m(n, n, nvars);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Poly::constant(nvars, 1);
    return m;
  }

  static PolyMatrix diagonal(const std::vector<Poly>& d) {
    if (d.empty()) fail(ErrorKind::dimension, "empty diagonal");
    PolyMatrix m(d.size(), d.size(), d[0].nvars());
    for (std::size_t i = 0; i < d.size(); ++i) m.set(i, i, d[i]);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  int nvars() const { return nvars_; }
  bool square() const { return rows_ == cols_; }

  const Poly& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
  Poly& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }

  void set(std::size_t i, std::size_t j, Poly p) {
    if (p.nvars() != nvars_) fail(ErrorKind::dimension, "matrix entry nvars mismatch");
    a_[i * cols_ + j] = std::move(p);
  }

  friend bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }

  friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
    if (a.cols_ != b.rows_ || a.nvars_ != b.nvars_) fail(ErrorKind::dimension, "matrix product shape mismatch");
    PolyMatrix c(a.rows_, b.cols_, a.nvars_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t j = 0; j < b.cols_; ++j)
        for (std::size_t k = 0; k < a.cols_; ++k) c(i, j) += a(i, k) * b(k, j);
    return c;
  }

  PolyMatrix operator*(const Poly& s) const {
    PolyMatrix r = *this;
    for (auto& p : r.a_) p = p * s;
    return r;
  }

  RatMatrix at_origin() const {
    RatMatrix m(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) m(i, j) = (*this)(i, j).constant_term();
    return m;
  }

  RatMatrix at(std::span<const Rat> point) const {
    RatMatrix m(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) m(i, j) = (*this)(i, j).eval(point);
    return m;
  }

  /// Cofactor expansion along rows, memoized over column subsets.
  Poly det(int maxdeg = max_degree) const {
    require_square("determinant");
    std::vector<std::size_t> all(rows_);
    for (std::size_t i = 0; i < rows_; ++i) all[i] = i;
    auto layer = expand_rows(all, maxdeg);
    return layer[(std::size_t{1} << cols_) - 1];
  }

  /// minor(row, i) for every column i: determinant with `row` and column i
  /// deleted. One memoized pass serves all n minors.
  std::vector<Poly> row_minors(std::size_t row, int maxdeg = max_degree) const {
    require_square("minor");
    std::vector<Poly> out;
    if (rows_ == 1) {
      out.push_back(Poly::constant(nvars_, 1));
      return out;
    }
    std::vector<std::size_t> kept;
    for (std::size_t i = 0; i < rows_; ++i) if (i != row) kept.push_back(i);
    auto layer = expand_rows(kept, maxdeg);
    std::size_t full = (std::size_t{1} << cols_) - 1;
    for (std::size_t i = 0; i < cols_; ++i) out.push_back(layer[full & ~(std::size_t{1} << i)]);
    return out;
  }

  /// Column `col` of the adjugate: entry i is the (col, i) cofactor.
  std::vector<Poly> adjugate_column(std::size_t col, int maxdeg = max_degree) const {
    auto minors = row_minors(col, maxdeg);
    for (std::size_t i = 0; i < minors.size(); ++i)
      if ((i + col) % 2 == 1) minors[i] = -minors[i];
    return minors;
  }

  PolyMatrix adjugate(int maxdeg = max_degree) const {
    require_square("adjugate");
    PolyMatrix adj(rows_, cols_, nvars_);
    for (std::size_t j = 0; j < cols_; ++j) {
      auto column = adjugate_column(j, maxdeg);
      for (std::size_t i = 0; i < rows_; ++i) adj(i, j) = std::move(column[i]);
    }
    return adj;
  }

 private:
  void require_square(const char* what) const {
    if (!square()) fail(ErrorKind::dimension, std::string(what) + " of non-square matrix");
    if (cols_ > 16) fail(ErrorKind::dimension, "matrix too large for cofactor expansion");
  }

  // Returns det(rows[0..r), S) indexed by column bitmask S with |S| = r,
  // for r = rows.size(). Entries for other masks are unspecified.
  std::vector<Poly> expand_rows(const std::vector<std::size_t>& rows, int maxdeg) const {
    std::size_t nmask = std::size_t{1} << cols_;
    std::vector<Poly> cur(nmask, Poly(nvars_));
    cur[0] = Poly::constant(nvars_, 1);
    std::vector<std::size_t> masks_prev{0};
    for (std::size_t r = 0; r < rows.size(); ++r) {
      std::vector<Poly> next(nmask, Poly(nvars_));
      std::vector<std::size_t> masks_next;
      std::vector<bool> seen(nmask, false);
      for (std::size_t m : masks_prev)
        for (std::size_t c = 0; c < cols_; ++c)
          if (!(m >> c & 1) && !seen[m | (std::size_t{1} << c)]) {
            seen[m | (std::size_t{1} << c)] = true;
            masks_next.push_back(m | (std::size_t{1} << c));
          }
      for (std::size_t s : masks_next) {
        // Expand along the last added row: columns of s in increasing order;
        // the row occupies position r, column c sits at position idx.
        std::vector<std::tuple<bool, const Poly*, const Poly*>> items;
        std::size_t idx = 0;
        for (std::size_t c = 0; c < cols_; ++c) {
          if (!(s >> c & 1)) continue;
          items.emplace_back((r + idx) % 2 == 1, &(*this)(rows[r], c), &cur[s & ~(std::size_t{1} << c)]);
          ++idx;
        }
        next[s] = Poly::sum_of_products(items, maxdeg, nvars_);
      }
      cur = std::move(next);
      masks_prev = std::move(masks_next);
    }
    return cur;
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  int nvars_ = 1;
  std::vector<Poly> a_;
};

}  // namespace germlab

#endif  // GERMLAB_POLY_HPP
