#ifndef GERMLAB_ALGEBRAIC_HPP
#define GERMLAB_ALGEBRAIC_HPP

// Exact arithmetic in Q(alpha) for a real root alpha of a squarefree
// rational polynomial. Elements are polynomials in alpha reduced mod p;
// zero tests use gcd + Sturm counts, signs use interval refinement.

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "germlab/error.hpp"
#include "germlab/poly.hpp"
#include "germlab/univariate.hpp"

namespace germlab {

/// A real root of a squarefree polynomial with a shared, refinable interval.
class RealRoot {
 public:
  RealRoot(UPoly p, RootInterval iv) : p_(squarefree_part(p)), sturm_(p_), iv_(iv) {
    if (!iv_.exact && sturm_.count(iv_.lo, iv_.hi) != 1)
      fail(ErrorKind::precondition, "interval does not isolate a single root");
    if (iv_.exact && p_.sign_at(iv_.lo) != 0) fail(ErrorKind::precondition, "exact root is not a root");
  }

  const UPoly& poly() const { return p_; }
  const RootInterval& interval() const { return iv_; }
  bool exact() const { return iv_.exact; }

  /// Bisects the isolating interval once.
  void refine() {
    if (iv_.exact) return;
    Rat m = (iv_.lo + iv_.hi) / 2;
    if (p_.sign_at(m) == 0) iv_ = {m, m, true};
    else if (sturm_.count(iv_.lo, m) == 1) iv_.hi = m;
    else iv_.lo = m;
  }

  void refine_to(int bits) {
    Rat eps = Rat(1) / Rat(Int(1) << static_cast<unsigned>(bits));
    while (!iv_.exact && iv_.width() > eps) refine();
  }

  /// Sign of q(alpha).
  int sign_of(const UPoly& q) {
    if (q.is_zero()) return 0;
    if (iv_.exact) return q.sign_at(iv_.lo);
    // q(alpha) = 0 iff gcd(p, q) has a root in the isolating interval
    UPoly g = gcd(p_, q);
    if (g.degree() > 0 && SturmSequence(g).count(iv_.lo, iv_.hi) > 0) return 0;
    UPoly qs = squarefree_part(q);
    SturmSequence sq(qs);
    while (!iv_.exact && sq.count(iv_.lo, iv_.hi) > 0) refine();
    if (iv_.exact) return q.sign_at(iv_.lo);
    return q.sign_at(iv_.hi);
  }

  double approx() const { return to_double((iv_.lo + iv_.hi) / 2); }

 private:
  UPoly p_;
  SturmSequence sturm_;
  RootInterval iv_;
};

/// Element of Q(alpha) as a polynomial in alpha of degree < deg p.
class AlgNum {
 public:
  AlgNum() = default;
  AlgNum(std::shared_ptr<RealRoot> root, UPoly value) : root_(std::move(root)), v_(std::move(value)) { reduce(); }
  AlgNum(std::shared_ptr<RealRoot> root, const Rat& c) : root_(std::move(root)), v_(UPoly::constant(c)) {}

  static AlgNum generator(std::shared_ptr<RealRoot> root) { return AlgNum(std::move(root), UPoly::x()); }

  const UPoly& value() const { return v_; }
  const std::shared_ptr<RealRoot>& root() const { return root_; }

  int sign() const { return root_->sign_of(v_); }

  friend AlgNum operator+(const AlgNum& a, const AlgNum& b) { return {pick(a, b), a.v_ + b.v_}; }
  friend AlgNum operator-(const AlgNum& a, const AlgNum& b) { return {pick(a, b), a.v_ - b.v_}; }
  friend AlgNum operator*(const AlgNum& a, const AlgNum& b) { return {pick(a, b), a.v_ * b.v_}; }
  friend AlgNum operator*(const AlgNum& a, const Rat& c) { return {a.root_, a.v_ * c}; }
  AlgNum operator-() const { return {root_, -v_}; }

  std::string to_string() const { return v_.to_string("alpha"); }

 private:
  static std::shared_ptr<RealRoot> pick(const AlgNum& a, const AlgNum& b) {
    if (a.root_ && b.root_ && a.root_ != b.root_) fail(ErrorKind::precondition, "mixing different number fields");
    return a.root_ ? a.root_ : b.root_;
  }
  void reduce() {
    if (root_ && v_.degree() >= root_->poly().degree()) v_ = v_ % root_->poly();
  }

  std::shared_ptr<RealRoot> root_;
  UPoly v_;
};

inline int sgn(const AlgNum& a) { return a.sign(); }

/// A point of R^n whose coordinates lie in Q(alpha).
struct AlgPoint {
  std::shared_ptr<RealRoot> root;
  std::vector<UPoly> coords;  // coordinate i = coords[i](alpha)

  AlgNum coord(std::size_t i) const { return AlgNum(root, coords[i]); }
};

/// p evaluated at an algebraic point.
inline AlgNum eval(const Poly& p, const AlgPoint& pt) {
  if (static_cast<std::size_t>(p.nvars()) != pt.coords.size())
    fail(ErrorKind::dimension, "point length differs from number of variables");
  AlgNum zero(pt.root, Rat(0));
  std::vector<std::vector<AlgNum>> pows(pt.coords.size());
  auto power = [&](std::size_t i, int e) -> const AlgNum& {
    auto& v = pows[i];
    if (v.empty()) v.push_back(AlgNum(pt.root, Rat(1)));
    while (static_cast<int>(v.size()) <= e) v.push_back(v.back() * pt.coord(i));
    return v[static_cast<std::size_t>(e)];
  };
  UPoly acc;
  for (const auto& t : p.terms()) {
    auto e = p.exponents(t);
    AlgNum m(pt.root, t.coef);
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i]) m = m * power(i, e[i]);
    acc = acc + m.value();
  }
  return AlgNum(pt.root, acc);
}

}  // namespace germlab

#endif  // GERMLAB_ALGEBRAIC_HPP
