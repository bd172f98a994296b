#ifndef GERMLAB_SIGMA20_HPP
#define GERMLAB_SIGMA20_HPP

// Hyperbolic and elliptic umbilics: corank-two germs R^4 -> R^4.

#include <string>
#include <utility>

#include "germlab/error.hpp"
#include "germlab/germ.hpp"
#include "germlab/label.hpp"
#include "germlab/morin.hpp"

namespace germlab {

enum class UmbilicKind { hyp, elli };

struct Sigma20Result {
  UmbilicKind kind = UmbilicKind::hyp;
  int eps1 = 0;
  int eps2 = 0;  // 0 for hyp
  Rat hess_det;   // det hess_(xi,eta) lambda (0)
  Rat big_det;    // det(grad xi g1, grad xi g2, grad eta g1, grad eta g2)(0)
  Rat trace;      // trace hess_(xi,eta) lambda (0)
  RatMatrix target;  // normalizing target change B
  RatVector xi, eta;
  ClassLabel label;
  CriteriaLog criteria;
};

/// B o f with B orientation preserving such that the first two components
/// have vanishing differential at 0. Rows 1-2 of B span the left kernel of
/// df(0); the rest are the first standard basis vectors completing a basis.
inline std::pair<MapGerm, RatMatrix> target_normalize(const MapGerm& f) {
  if (f.src_dim() != 4 || f.tgt_dim() != 4) fail(ErrorKind::dimension, "umbilic classifier needs a germ R^4 -> R^4");
  auto j0 = jacobian(f).at_origin();
  if (j0.rank() != 2) fail(ErrorKind::precondition, "rank df(0) = " + std::to_string(j0.rank()) + ", expected 2");
  auto left = j0.transpose().nullspace();
  std::vector<RatVector> rows = left;
  for (std::size_t i = 0; i < 4 && rows.size() < 4; ++i) {
    RatVector e(4);
    e[i] = 1;
    rows.push_back(e);
    RatMatrix probe = RatMatrix::from_columns(rows);
    if (probe.rank() < rows.size()) rows.pop_back();
  }
  RatMatrix b = RatMatrix::from_columns(rows).transpose();
  if (sgn(b.det()) < 0)
    for (std::size_t j = 0; j < 4; ++j) b(3, j) = -b(3, j);
  return {linear_change(f, RatMatrix::identity(4), b), b};
}

/// Criteria with a caller-supplied basis (xi, eta) of ker df(0).
inline Sigma20Result classify_sigma20_with(const MapGerm& f, const RatVector& xi_in, const RatVector& eta_in) {
  auto [g, b] = target_normalize(f);
  Sigma20Result r;
  r.target = b;
  auto j0 = jacobian(g).at_origin();
  if (xi_in.size() != 4 || eta_in.size() != 4) fail(ErrorKind::dimension, "kernel vectors need 4 entries");
  for (const auto* v : {&xi_in, &eta_in})
    for (const auto& x : j0 * *v)
      if (sgn(x) != 0) fail(ErrorKind::precondition, "xi and eta must lie in ker df(0)");
  if (RatMatrix::from_columns({xi_in, eta_in}).rank() != 2)
    fail(ErrorKind::precondition, "xi and eta must be independent");
  r.xi = xi_in;
  r.eta = eta_in;
  auto a = analyze(g.truncated(3), 2);
  RatMatrix hess = hessian_at_origin(a.lambda);
  RatMatrix h(2, 2);
  const RatVector* v[2] = {&r.xi, &r.eta};
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) {
      Rat s = 0;
      for (std::size_t p = 0; p < 4; ++p)
        for (std::size_t q = 0; q < 4; ++q) s += (*v[i])[p] * hess(p, q) * (*v[j])[q];
      h(i, j) = s;
    }
  r.hess_det = h.det();
  r.trace = h(0, 0) + h(1, 1);
  auto xi = VecField::constant(4, r.xi), eta = VecField::constant(4, r.eta);
  std::vector<RatVector> cols;
  for (const auto* fld : {&xi, &eta})
    for (std::size_t i = 0; i < 2; ++i) cols.push_back(gradient_at_origin(dir_deriv(g[i].truncated(2), *fld, 1)));
  r.big_det = RatMatrix::from_columns(cols).det();
  r.criteria = {{"det hess_(xi,eta) lambda", r.hess_det.get_str()},
                {"det(grad xi g1, grad xi g2, grad eta g1, grad eta g2)", r.big_det.get_str()}};
  const std::string degenerate = "degenerate Σ² germ (not stable)";
  if (sgn(r.hess_det) == 0 || sgn(r.big_det) == 0) fail(ErrorKind::degenerate, degenerate);
  if (sgn(r.hess_det) < 0) {
    r.kind = UmbilicKind::hyp;
    r.eps1 = -sgn(r.big_det);
    r.label = make_label(Family::sigma20_hyp, 4, 4, {r.eps1, 0});
    return r;
  }
  r.criteria.emplace_back("trace hess_(xi,eta) lambda", r.trace.get_str());
  if (sgn(r.trace) == 0) fail(ErrorKind::degenerate, degenerate);
  r.kind = UmbilicKind::elli;
  r.eps1 = sgn(r.big_det);
  r.eps2 = sgn(r.trace) * r.eps1;
  r.label = make_label(Family::sigma20_elli, 4, 4, {r.eps1, r.eps2});
  return r;
}

inline Sigma20Result classify_sigma20(const MapGerm& f) {
  auto [g, b] = target_normalize(f);
  auto ker = jacobian(g).at_origin().nullspace();
  return classify_sigma20_with(f, ker[0], ker[1]);
}

}  // namespace germlab

#endif  // GERMLAB_SIGMA20_HPP
