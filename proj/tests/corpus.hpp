#ifndef GERMLAB_TESTS_CORPUS_HPP
#define GERMLAB_TESTS_CORPUS_HPP

// Thirty normal forms spanning the Morin, plane, surface and Sigma^2
// classifiers, plus the frame perturbations used by the eta properties.

#include <random>
#include <string>
#include <vector>

#include "germlab/germlab.hpp"

namespace corpus {

using namespace germlab;

struct Entry {
  std::string name;
  MapGerm germ;
};

inline std::vector<Entry> normal_forms_30() {
  namespace nf = germlab::normal_forms;
  std::vector<Entry> v;
  auto sgn_name = [](int e) { return std::string(e > 0 ? "+" : "-"); };
  for (int e : {1, -1}) v.push_back({"fold1" + sgn_name(e), nf::morin(1, 1, e)});
  for (int e : {1, -1}) v.push_back({"cusp" + sgn_name(e), nf::morin(2, 2, e, 1)});
  for (int e : {1, -1}) v.push_back({"swallowtail" + sgn_name(e), nf::morin(3, 3, 1, e)});
  for (int e1 : {1, -1})
    for (int e2 : {1, -1}) v.push_back({"butterfly" + sgn_name(e1) + sgn_name(e2), nf::morin(4, 4, e1, e2)});
  v.push_back({"fold3", nf::morin(1, 3, 1)});
  for (int e : {1, -1}) v.push_back({"cusp3" + sgn_name(e), nf::morin(2, 3, e, 1)});
  for (int e : {1, -1}) {
    v.push_back({"lips" + sgn_name(e), nf::lips(e)});
    v.push_back({"beaks" + sgn_name(e), nf::beaks(e)});
    v.push_back({"planar-swallowtail" + sgn_name(e), nf::planar_swallowtail(e)});
    v.push_back({"S1+" + sgn_name(e), nf::s1(1, e)});
    v.push_back({"S1-" + sgn_name(e), nf::s1(-1, e)});
  }
  v.push_back({"whitney-umbrella", nf::whitney_umbrella()});
  for (int e : {1, -1}) v.push_back({"sigma20-hyp" + sgn_name(e), nf::sigma20_hyp(e)});
  for (int e1 : {1, -1})
    for (int e2 : {1, -1}) v.push_back({"sigma20-elli" + sgn_name(e1) + sgn_name(e2), nf::sigma20_elli(e1, e2)});
  return v;
}

/// How the classifier's frame is altered before re-running the criteria.
enum class FrameOp { reverse, scale_constant, scale_function };

inline const char* to_string(FrameOp op) {
  switch (op) {
    case FrameOp::reverse: return "reverse";
    case FrameOp::scale_constant: return "scale 7/3";
    case FrameOp::scale_function: return "scale 2 + x1 + x2^2";
  }
  return "";
}

inline VecField alter(FrameOp op, const VecField& v, int nvars) {
  VecField out;
  Poly factor = Poly::constant(nvars, Rat(7, 3));
  if (op == FrameOp::reverse) factor = Poly::constant(nvars, Rat(-1));
  if (op == FrameOp::scale_function)
    factor = Poly::constant(nvars, Rat(2)) + Poly::variable(nvars, 0) +
             (nvars > 1 ? Poly::variable(nvars, 1).pow(2) : Poly(nvars));
  for (const auto& c : v.components) out.components.push_back(c * factor);
  return out;
}

inline RatVector alter(FrameOp op, const RatVector& v) {
  RatVector out = v;
  Rat c = op == FrameOp::reverse ? Rat(-1) : op == FrameOp::scale_constant ? Rat(7, 3) : Rat(2);
  for (auto& x : out) x *= c;
  return out;
}

/// Label computed with the classifier's own frame altered by `op`. For
/// the surface classifier xi follows eta so the frame stays positive; for
/// Sigma^2 germs the operation acts on eta with xi fixed.
inline ClassLabel label_with_frame(const MapGerm& f, FrameOp op) {
  int n = f.src_dim(), m = f.tgt_dim();
  if (n == 2 && m == 3) {
    auto fr = surface_frame(f);
    FrameChoice alt{alter(op, fr.xi, 2), alter(op, fr.eta, 2)};
    if (op == FrameOp::scale_function) alt.xi = fr.xi;
    return classify_surface_with(f, alt).label;
  }
  if (n == 4 && m == 4 && jacobian(f).at_origin().rank() == 2) {
    auto [g, b] = target_normalize(f);
    auto ker = jacobian(g).at_origin().nullspace();
    return classify_sigma20_with(f, ker[0], alter(op, ker[1])).label;
  }
  auto eta = alter(op, null_field(f).eta, n);
  if (n == 2) return classify_plane_with(f, eta).label;
  return recognize_morin_with(f, eta).label;
}

/// Random germ text with a declared variable list; never has a constant term.
inline std::string random_germ_text(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> nv(1, 4), nc(1, 4), nt(1, 4), e(0, 3), c(-12, 12), d(1, 5), v(0, 3);
  int n = nv(rng);
  std::string s = "vars: ";
  for (int i = 0; i < n; ++i) s += (i ? ", " : "") + std::string(i % 2 ? "y" : "x") + std::to_string(i + 1);
  s += " | ";
  int m = nc(rng);
  for (int k = 0; k < m; ++k) {
    if (k) s += " ; ";
    int terms = nt(rng);
    for (int t = 0; t < terms; ++t) {
      int num = c(rng), den = d(rng);
      if (num == 0) num = 1;
      s += t ? (num < 0 ? " - " : " + ") : (num < 0 ? "-" : "");
      s += std::to_string(std::abs(num));
      if (den > 1) s += "/" + std::to_string(den);
      bool any = false;
      for (int i = 0; i < n; ++i) {
        int ex = e(rng);
        if (ex == 0) continue;
        any = true;
        s += "*" + std::string(i % 2 ? "y" : "x") + std::to_string(i + 1);
        if (ex > 1) s += "^" + std::to_string(ex);
      }
      if (!any) s += "*" + std::string("x1") + "^" + std::to_string(1 + v(rng));
    }
  }
  return s;
}

}  // namespace corpus

#endif  // GERMLAB_TESTS_CORPUS_HPP
