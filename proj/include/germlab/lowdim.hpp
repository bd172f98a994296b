#ifndef GERMLAB_LOWDIM_HPP
#define GERMLAB_LOWDIM_HPP

// Codimension-one germs R^2 -> R^2 (lips, beaks, planar swallowtail) and
// corank-one germs R^2 -> R^3 (Whitney umbrella, S1+-).

#include <string>
#include <utility>

#include "germlab/error.hpp"
#include "germlab/germ.hpp"
#include "germlab/label.hpp"
#include "germlab/morin.hpp"

namespace germlab {

struct LowdimResult {
  ClassLabel label;  // family unrecognized when no criterion holds
  CriteriaLog criteria;
  std::string message;
  bool recognized() const { return label.family != Family::unrecognized; }
};

struct FrameChoice {
  VecField xi;
  VecField eta;
};

namespace detail {

inline std::string str(const Rat& r) { return r.get_str(); }

/// Constant xi completing eta(0) = (a, b) by a quarter turn: xi = (-b, a),
/// so det[eta(0) xi] = a^2 + b^2 > 0.
inline VecField quarter_turn(const RatVector& e) { return VecField::constant(2, {-e[1], e[0]}); }

inline LowdimResult unrecognized(int n, int m, CriteriaLog log, std::string msg) {
  LowdimResult r;
  r.label = make_label(Family::unrecognized, n, m, {0, 0});
  r.criteria = std::move(log);
  r.message = std::move(msg);
  return r;
}

}  // namespace detail

/// Plane-to-plane germs. Fold and cusp are delegated to the Morin
/// recognizer; otherwise the lips / beaks / planar swallowtail criteria
/// are evaluated with the adjugate null field.
/// Same with a caller-supplied null field eta (nonzero at 0, tangent to
/// ker df along the singular set), e.g. a rescaled adjugate column.
inline LowdimResult classify_plane_with(const MapGerm& f, const VecField& eta) {
  if (f.src_dim() != 2 || f.tgt_dim() != 2) fail(ErrorKind::dimension, "plane classifier needs a germ R^2 -> R^2");
  auto m = try_recognize_morin_with(f, eta);
  if (m.status == MorinStatus::morin || m.status == MorinStatus::regular) {
    LowdimResult r;
    r.label = m.label;
    r.criteria = m.criteria;
    r.message = m.message;
    return r;
  }
  if (m.status == MorinStatus::not_corank_one) return detail::unrecognized(2, 2, m.criteria, m.message);

  auto a = analyze(f, 3);
  VecField e;
  for (const auto& c : eta.components) e.components.push_back(c.truncated(2));
  const Poly& lambda = a.lambda;
  Poly l1 = dir_deriv(lambda, e, 2);
  Poly l2 = dir_deriv(l1, e, 1);
  Poly l3 = dir_deriv(l2, e, 0);
  CriteriaLog log;
  auto dl = gradient_at_origin(lambda);
  log.emplace_back("d lambda", "(" + detail::str(dl[0]) + ", " + detail::str(dl[1]) + ")");

  int s2 = sgn(l2.constant_term());
  if (sgn(dl[0]) == 0 && sgn(dl[1]) == 0) {
    Rat hd = hessian_at_origin(lambda).det();
    log.emplace_back("det hess lambda", detail::str(hd));
    log.emplace_back("eta eta lambda", detail::str(l2.constant_term()));
    LowdimResult r;
    r.criteria = log;
    if (sgn(hd) > 0) {
      r.label = make_label(Family::lips, 2, 2, {s2, 0});
      return r;
    }
    if (sgn(hd) < 0 && s2 != 0) {
      r.label = make_label(Family::beaks, 2, 2, {s2, 0});
      return r;
    }
    return detail::unrecognized(2, 2, log, "d lambda = 0 but neither lips nor beaks criteria hold");
  }
  log.emplace_back("eta lambda", detail::str(l1.constant_term()));
  log.emplace_back("eta eta lambda", detail::str(l2.constant_term()));
  log.emplace_back("eta eta eta lambda", detail::str(l3.constant_term()));
  if (sgn(l1.constant_term()) == 0 && s2 == 0 && sgn(l3.constant_term()) != 0) {
    auto xi = detail::quarter_turn(e.at_origin());
    Rat xl = dir_deriv(lambda, xi, 0).constant_term();
    log.emplace_back("xi lambda", detail::str(xl));
    LowdimResult r;
    r.criteria = log;
    r.label = make_label(Family::planar_swallowtail, 2, 2, {sgn(xl) * sgn(l3.constant_term()), 0});
    return r;
  }
  return detail::unrecognized(2, 2, log, "no plane-to-plane criterion holds");
}

inline LowdimResult classify_plane(const MapGerm& f) {
  if (f.src_dim() != 2 || f.tgt_dim() != 2) fail(ErrorKind::dimension, "plane classifier needs a germ R^2 -> R^2");
  auto rank = jacobian(f).at_origin().rank();
  if (rank == 2) return classify_plane_with(f, VecField::constant(2, {Rat(1), Rat(0)}));
  if (rank == 0) return classify_plane_with(f, VecField::constant(2, {Rat(0), Rat(0)}));
  return classify_plane_with(f, null_field(f, 2).eta);
}

/// Kernel direction eta (constant, first entry positive) and xi = quarter
/// turn of eta for a corank-one germ R^2 -> R^3.
inline FrameChoice surface_frame(const MapGerm& f) {
  auto j0 = jacobian(f).at_origin();
  auto ker = j0.nullspace();
  if (ker.size() != 1) fail(ErrorKind::not_corank_one, "not corank one (corank " + std::to_string(ker.size()) + ")");
  return {detail::quarter_turn(ker[0]), VecField::constant(2, ker[0])};
}

/// w = det(xi f, eta f, eta eta f) truncated to degree 2.
inline Poly surface_w(const MapGerm& f, const FrameChoice& fr) {
  MapGerm g = f.truncated(4);
  PolyMatrix m(3, 3, 2);
  for (std::size_t i = 0; i < 3; ++i) {
    Poly ef = dir_deriv(g[i], fr.eta, 3);
    m.set(i, 0, dir_deriv(g[i], fr.xi, 2));
    m.set(i, 1, ef.truncated(2));
    m.set(i, 2, dir_deriv(ef, fr.eta, 2));
  }
  return m.det(2);
}

/// Plane-to-3-space germs of corank one.
/// Same with a caller-supplied frame: eta(0) spans ker df(0) and
/// det[eta(0) xi(0)] > 0.
inline LowdimResult classify_surface_with(const MapGerm& f, const FrameChoice& fr) {
  if (f.src_dim() != 2 || f.tgt_dim() != 3) fail(ErrorKind::dimension, "surface classifier needs a germ R^2 -> R^3");
  auto j0 = jacobian(f).at_origin();
  auto rank = j0.rank();
  if (rank == 2) {
    LowdimResult r;
    r.label = make_label(Family::regular, 2, 3, {0, 0});
    r.message = "df(0) has full rank";
    return r;
  }
  if (rank == 0) return detail::unrecognized(2, 3, {}, "not corank one (corank 2)");
  auto e0 = fr.eta.at_origin(), x0 = fr.xi.at_origin();
  auto img = j0 * e0;
  bool in_kernel = true;
  for (const auto& v : img) in_kernel = in_kernel && sgn(v) == 0;
  if (!in_kernel || sgn(e0[0] * x0[1] - e0[1] * x0[0]) <= 0)
    fail(ErrorKind::precondition, "frame needs eta(0) in ker df(0) and det[eta xi] > 0");
  Poly w = surface_w(f, fr);
  CriteriaLog log;
  auto dw = gradient_at_origin(w);
  log.emplace_back("d w", "(" + detail::str(dw[0]) + ", " + detail::str(dw[1]) + ")");
  LowdimResult r;
  if (sgn(dw[0]) != 0 || sgn(dw[1]) != 0) {
    r.criteria = log;
    r.label = make_label(Family::whitney_umbrella, 2, 3, {0, 0});
    return r;
  }
  Rat hd = hessian_at_origin(w).det();
  Rat eew = dir_deriv(dir_deriv(w, fr.eta, 1), fr.eta, 0).constant_term();
  log.emplace_back("det hess w", detail::str(hd));
  log.emplace_back("eta eta w", detail::str(eew));
  r.criteria = log;
  if (sgn(hd) < 0 && sgn(eew) != 0) {
    r.label = make_label(Family::s1_plus, 2, 3, {sgn(eew), 0});
    return r;
  }
  if (sgn(hd) > 0) {
    r.label = make_label(Family::s1_minus, 2, 3, {sgn(eew), 0});
    return r;
  }
  return detail::unrecognized(2, 3, log, "d w = 0 but S1 criteria fail");
}

inline LowdimResult classify_surface(const MapGerm& f) {
  if (f.src_dim() != 2 || f.tgt_dim() != 3) fail(ErrorKind::dimension, "surface classifier needs a germ R^2 -> R^3");
  if (jacobian(f).at_origin().rank() != 1) return classify_surface_with(f, {});
  return classify_surface_with(f, surface_frame(f));
}

}  // namespace germlab

#endif  // GERMLAB_LOWDIM_HPP
