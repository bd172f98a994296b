#ifndef GERMLAB_GERM_HPP
#define GERMLAB_GERM_HPP

#include <string>
#include <utility>
#include <vector>

#include "germlab/error.hpp"
#include "germlab/linalg.hpp"
#include "germlab/poly.hpp"

namespace germlab {

/// Polynomial map-germ (R^n,0) -> (R^m,0) based at the origin.
class MapGerm {
 public:
  MapGerm() = default;

  /// Constant terms are subtracted so the germ condition f(0)=0 holds;
  /// constant_removed() reports whether that happened.
  MapGerm(int src_dim, std::vector<Poly> components, std::vector<std::string> names = {})
      : src_dim_(src_dim), components_(std::move(components)), names_(std::move(names)) {
    if (components_.empty()) fail(ErrorKind::dimension, "map-germ needs at least one component");
    for (auto& c : components_) {
      if (c.nvars() != src_dim_)
        fail(ErrorKind::dimension, "component has " + std::to_string(c.nvars()) +
                                       " variables, expected " + std::to_string(src_dim_));
      Rat c0 = c.constant_term();
      if (sgn(c0) != 0) {
        c -= Poly::constant(src_dim_, c0);
        constant_removed_ = true;
      }
    }
    if (!names_.empty() && static_cast<int>(names_.size()) != src_dim_)
      fail(ErrorKind::dimension, "variable name count differs from source dimension");
  }

  int src_dim() const { return src_dim_; }
  int tgt_dim() const { return static_cast<int>(components_.size()); }
  const std::vector<Poly>& components() const { return components_; }
  const Poly& operator[](std::size_t i) const { return components_[i]; }
  bool constant_removed() const { return constant_removed_; }
  const std::vector<std::string>& names() const { return names_; }

  std::vector<std::string> var_names() const {
    std::vector<std::string> out;
    for (int i = 0; i < src_dim_; ++i) out.push_back(Poly::var_name(names_, i));
    return out;
  }

  /// Equality of the maps; variable names are presentation only.
  friend bool operator==(const MapGerm& a, const MapGerm& b) {
    return a.src_dim_ == b.src_dim_ && a.components_ == b.components_;
  }

  MapGerm truncated(int maxdeg) const {
    std::vector<Poly> c;
    for (const auto& p : components_) c.push_back(p.truncated(maxdeg));
    return MapGerm(src_dim_, std::move(c), names_);
  }

  std::vector<std::string> component_strings() const {
    std::vector<std::string> out;
    for (const auto& c : components_) out.push_back(c.to_string(names_));
    return out;
  }

  std::string to_string() const {
    std::string s;
    for (std::size_t i = 0; i < components_.size(); ++i) {
      if (i) s += " ; ";
      s += components_[i].to_string(names_);
    }
    return s;
  }

 private:
  int src_dim_ = 1;
  std::vector<Poly> components_;
  std::vector<std::string> names_;
  bool constant_removed_ = false;
};

/// Jacobian (rows = components, columns = source variables).
inline PolyMatrix jacobian(const MapGerm& f) {
  PolyMatrix j(static_cast<std::size_t>(f.tgt_dim()), static_cast<std::size_t>(f.src_dim()), f.src_dim());
  for (int i = 0; i < f.tgt_dim(); ++i)
    for (int k = 0; k < f.src_dim(); ++k)
      j.set(static_cast<std::size_t>(i), static_cast<std::size_t>(k), f[static_cast<std::size_t>(i)].partial(k));
  return j;
}

struct GermAnalysis {
  PolyMatrix jacobian;
  Poly lambda;  // det of the Jacobian; zero polynomial when n != m
  int rank0 = 0;
  int corank0 = 0;
};

/// Jacobian, its determinant and the rank of df(0). With maxdeg set, the
/// Jacobian and lambda are jets: terms above that degree are dropped.
inline GermAnalysis analyze(const MapGerm& f, int maxdeg = max_degree) {
  GermAnalysis a;
  a.jacobian = jacobian(f);
  if (maxdeg < max_degree)
    for (std::size_t i = 0; i < a.jacobian.rows(); ++i)
      for (std::size_t j = 0; j < a.jacobian.cols(); ++j) a.jacobian(i, j) = a.jacobian(i, j).truncated(maxdeg);
  a.rank0 = static_cast<int>(a.jacobian.at_origin().rank());
  a.corank0 = f.src_dim() - a.rank0;
  a.lambda = f.src_dim() == f.tgt_dim() ? a.jacobian.det(maxdeg) : Poly(f.src_dim());
  return a;
}

struct NullField {
  VecField eta;
  std::size_t column = 0;  // adjugate column used
  bool flipped = false;    // negated so eta(0) has a positive leading entry
};

/// Kernel field of a corank-one equidimensional germ: the first column of
/// adj(J) that is nonzero at 0, oriented so the first nonzero entry of
/// eta(0) is positive. J * eta = +-lambda * e_column identically.
inline NullField null_field_from(const PolyMatrix& jac, int maxdeg = max_degree) {
  if (!jac.square()) fail(ErrorKind::dimension, "null field needs an equidimensional germ");
  auto j0 = jac.at_origin();
  if (static_cast<std::size_t>(j0.rank()) + 1 != j0.rows())
    fail(ErrorKind::not_corank_one, "not corank one (rank df(0) = " + std::to_string(j0.rank()) + ")");
  std::size_t n = jac.rows();
  // adj(J(0)) has rank one; pick its first nonzero column.
  std::size_t col = n;
  for (std::size_t c = 0; c < n && col == n; ++c) {
    for (std::size_t i = 0; i < n; ++i) {
      RatMatrix m(n - 1, n - 1);
      for (std::size_t r = 0, rr = 0; r < n; ++r) {
        if (r == c) continue;
        for (std::size_t k = 0, kk = 0; k < n; ++k) {
          if (k == i) continue;
          m(rr, kk++) = j0(r, k);
        }
        ++rr;
      }
      if (n == 1 || sgn(m.det()) != 0) {
        col = c;
        break;
      }
    }
  }
  NullField out;
  out.column = col;
  auto column = jac.adjugate_column(col, maxdeg);
  out.eta.components = std::move(column);
  for (const auto& c : out.eta.components) {
    int s = sgn(c.constant_term());
    if (s == 0) continue;
    if (s < 0) {
      out.eta = -out.eta;
      out.flipped = true;
    }
    break;
  }
  return out;
}

inline NullField null_field(const MapGerm& f, int maxdeg = max_degree) {
  if (f.src_dim() != f.tgt_dim()) fail(ErrorKind::dimension, "null field needs n = m");
  return null_field_from(analyze(f, maxdeg).jacobian, maxdeg);
}

/// g(x) = f(x + p) - f(p).
inline MapGerm translate(const MapGerm& f, std::span<const Rat> p) {
  if (static_cast<int>(p.size()) != f.src_dim())
    fail(ErrorKind::dimension, "translation vector length differs from source dimension");
  std::vector<Poly> images;
  for (int i = 0; i < f.src_dim(); ++i)
    images.push_back(Poly::variable(f.src_dim(), i) + Poly::constant(f.src_dim(), p[static_cast<std::size_t>(i)]));
  std::vector<Poly> comps;
  for (const auto& c : f.components()) comps.push_back(c.substitute(images));
  return MapGerm(f.src_dim(), std::move(comps), f.names());
}

/// B o f o A for linear A (source, n x n) and B (target, m x m).
inline MapGerm linear_change(const MapGerm& f, const RatMatrix& source, const RatMatrix& target,
                             int maxdeg = max_degree) {
  auto n = static_cast<std::size_t>(f.src_dim());
  auto m = static_cast<std::size_t>(f.tgt_dim());
  if (source.rows() != n || source.cols() != n || target.rows() != m || target.cols() != m)
    fail(ErrorKind::dimension, "linear change shape mismatch");
  std::vector<Poly> pulled;
  for (const auto& c : f.components()) pulled.push_back(c.compose_linear(source, maxdeg));
  std::vector<Poly> out;
  for (std::size_t i = 0; i < m; ++i) {
    Poly g(f.src_dim());
    for (std::size_t j = 0; j < m; ++j)
      if (sgn(target(i, j)) != 0) g += pulled[j] * target(i, j);
    out.push_back(std::move(g));
  }
  return MapGerm(f.src_dim(), std::move(out), f.names());
}

}  // namespace germlab

#endif  // GERMLAB_GERM_HPP
