#ifndef GERMLAB_CLASSIFY_HPP
#define GERMLAB_CLASSIFY_HPP

// Dispatch over all classifiers: Morin first, then the low-dimensional and
// umbilic criteria. Never throws for well-formed germs.

#include <optional>
#include <string>

#include "germlab/germ.hpp"
#include "germlab/label.hpp"
#include "germlab/lowdim.hpp"
#include "germlab/morin.hpp"
#include "germlab/sigma20.hpp"

namespace germlab {

struct Classification {
  ClassLabel label;
  std::string classifier;  // morin, plane, surface, sigma20, none
  CriteriaLog criteria;
  std::string message;
  std::optional<MorinInvariant> invariant;
  int k = 0;
  bool recognized() const { return label.family != Family::unrecognized; }
};

inline Classification classify(const MapGerm& f) {
  Classification c;
  int n = f.src_dim(), m = f.tgt_dim();
  auto none = [&](std::string msg) {
    c.label = make_label(Family::unrecognized, n, m, {0, 0});
    c.message = std::move(msg);
    return c;
  };
  if (n == 2 && m == 3) {
    c.classifier = "surface";
    auto r = classify_surface(f);
    c.label = r.label;
    c.criteria = r.criteria;
    c.message = r.message;
    return c;
  }
  if (n != m) {
    c.classifier = "none";
    return none("no classifier for germs R^" + std::to_string(n) + " -> R^" + std::to_string(m));
  }
  auto r = try_recognize_morin(f);
  c.classifier = "morin";
  c.criteria = r.criteria;
  if (r.status == MorinStatus::morin || r.status == MorinStatus::regular) {
    c.label = r.label;
    c.k = r.k;
    if (r.status == MorinStatus::morin) c.invariant = r.invariant;
    c.message = r.message;
    return c;
  }
  if (r.status == MorinStatus::degenerate && n == 2) {
    c.classifier = "plane";
    auto p = classify_plane(f);
    c.label = p.label;
    c.criteria = p.criteria;
    c.message = p.message;
    return c;
  }
  if (r.status == MorinStatus::not_corank_one && n == 4 && jacobian(f).at_origin().rank() == 2) {
    c.classifier = "sigma20";
    try {
      auto s = classify_sigma20(f);
      c.label = s.label;
      c.criteria = s.criteria;
      return c;
    } catch (const Error& e) {
      return none(e.what());
    }
  }
  return none(r.message);
}

}  // namespace germlab

#endif  // GERMLAB_CLASSIFY_HPP
