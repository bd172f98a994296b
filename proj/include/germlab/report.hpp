#ifndef GERMLAB_REPORT_HPP
#define GERMLAB_REPORT_HPP

// JSON renderings of classifications, perturbation reports and tables.
// Key order is fixed so output is byte-identical across runs.

#include <string>
#include <vector>

#include <json.hpp>

#include "germlab/classify.hpp"
#include "germlab/parse.hpp"
#include "germlab/perturb.hpp"

namespace germlab {

using Json = nlohmann::ordered_json;

inline Json sign_json(int s) { return s == 0 ? Json(nullptr) : Json(s); }

inline Json label_json(const ClassLabel& l) {
  Json j;
  j["family"] = l.name();
  j["k"] = l.k;
  j["eps1"] = sign_json(l.signs[0]);
  j["eps2"] = sign_json(l.signs[1]);
  j["text"] = l.text();
  j["normal_form"] = l.family == Family::unrecognized ? Json(nullptr) : Json(render_map(l.normal_form));
  return j;
}

inline Json invariant_json(const MorinInvariant& inv) {
  Json j;
  j["kind"] = to_string(inv.kind);
  j["values"] = inv.values;
  return j;
}

inline Json criteria_json(const CriteriaLog& log) {
  Json a = Json::array();
  for (const auto& [name, value] : log) a.push_back(Json{{"name", name}, {"value", value}});
  return a;
}

inline Json classification_json(const MapGerm& f, const Classification& c) {
  Json j;
  j["input"] = render_map(f);
  j["source_dim"] = f.src_dim();
  j["target_dim"] = f.tgt_dim();
  j["constant_removed"] = f.constant_removed();
  j["classifier"] = c.classifier;
  j["recognized"] = c.recognized();
  j["label"] = label_json(c.label);
  j["invariant"] = c.invariant ? invariant_json(*c.invariant) : Json(nullptr);
  j["criteria"] = criteria_json(c.criteria);
  j["message"] = c.message;
  return j;
}

inline Json rat_pair_json(const Rat& lo, const Rat& hi, int digits) {
  return Json{{"lo", lo.get_str()}, {"hi", hi.get_str()}, {"lo_decimal", to_decimal(lo, digits)},
              {"hi_decimal", to_decimal(hi, digits)}};
}

inline Json spec_json(const UnfoldingSpec& s) {
  Json j;
  j["family"] = to_string(s.family);
  j["n"] = s.n;
  if (s.family == UnfoldingFamily::A) j["l"] = s.l;
  Json p = Json::array();
  for (const auto& r : s.params) p.push_back(r.get_str());
  j["params"] = p;
  j["genotype"] = s.genotype();
  return j;
}

inline Json point_json(const MorinPoint& p, int digits) {
  Json j;
  j["parameter"] = p.parameter;
  j["exact"] = p.exact;
  if (p.exact) {
    Json loc = Json::array();
    for (const auto& r : p.location) loc.push_back(r.get_str());
    j["location"] = loc;
  } else {
    Json box = Json::array();
    for (const auto& [lo, hi] : p.box) box.push_back(rat_pair_json(lo, hi, digits));
    j["box"] = box;
    j["parameter_interval"] = rat_pair_json(p.parameter_interval.lo, p.parameter_interval.hi, digits);
  }
  j["defining_polynomial"] = p.defining_polynomial;
  j["k"] = p.k;
  j["verified"] = p.verified;
  j["invariant"] = p.verified ? invariant_json(p.invariant) : Json(nullptr);
  j["table_invariant"] = p.table_invariant;
  j["agrees"] = p.agrees;
  j["label"] = p.verified ? Json(p.label.text()) : Json(nullptr);
  if (!p.verified) j["message"] = p.message;
  return j;
}

inline Json perturbation_json(const PerturbationReport& r) {
  Json j;
  j["spec"] = spec_json(r.spec);
  j["c_f"] = r.c_f_bound;
  j["constraint"] = r.constraint;
  j["precision_bits"] = r.precision;
  j["stable"] = r.stable;
  j["count"] = r.count;
  int digits = r.precision * 3 / 10 + 1;
  Json pts = Json::array();
  for (const auto& p : r.points) pts.push_back(point_json(p, digits));
  j["points"] = pts;
  j["flags"] = r.flags;
  return j;
}

inline Json discrepancy_json(const Discrepancy& d) {
  return Json{{"name", d.name}, {"printed", d.printed}, {"derived", d.derived}, {"note", d.note}};
}

/// Reference parameters used by the tables: family A with qbar having l
/// simple rational roots, family B with t = +-1, family C at a grid point
/// where four Morin points appear.
inline std::vector<UnfoldingSpec> reference_specs() {
  std::vector<UnfoldingSpec> v;
  const int cn[] = {0, 0, 6, 10, 15, 21};
  for (int n = 2; n <= 5; ++n) {
    v.push_back({UnfoldingFamily::A, n, 2, {Rat(-1)}});
    v.push_back({UnfoldingFamily::A, n, 3, {Rat(0), Rat(-1)}});
    v.push_back({UnfoldingFamily::B, n, 2, {Rat(-cn[n])}});
    v.push_back({UnfoldingFamily::C, n, 2, {Rat(1), Rat(4)}});
  }
  return v;
}

inline Json tables_json(int precision = 40) {
  Json j;
  Json morin = Json::array();
  for (int n = 1; n <= 6; ++n)
    for (int k = 1; k <= n; ++k) {
      Json row;
      row["k"] = k;
      row["n"] = n;
      row["family"] = family_name(morin_family(k), k);
      row["classes"] = morin_class_count(k, n);
      MorinInvariant shape = morin_invariant_for(k, n, 1, 1, 1);
      row["invariant"] = to_string(shape.kind);
      morin.push_back(row);
    }
  j["morin_classes"] = morin;

  Json fams = Json::array();
  for (const auto& spec : reference_specs()) {
    auto rep = morin_points(spec, precision);
    Json row;
    row["spec"] = spec_json(spec);
    row["c_f"] = rep.c_f_bound;
    row["count"] = rep.count;
    row["printed_inv"] = printed_data(spec.family, spec.n).inv_display;
    Json pts = Json::array();
    bool all_agree = !rep.points.empty();
    for (const auto& p : rep.points) {
      Json pj;
      pj["parameter"] = p.parameter;
      pj["approx"] = to_decimal((p.parameter_interval.lo + p.parameter_interval.hi) / 2, 6);
      pj["invariant"] = p.invariant.values;
      pj["table_invariant"] = p.table_invariant;
      pj["agrees"] = p.agrees;
      all_agree = all_agree && p.agrees;
      pts.push_back(pj);
    }
    row["points"] = pts;
    row["all_agree"] = all_agree;
    fams.push_back(row);
  }
  j["families"] = fams;

  Json disc = Json::array();
  for (auto fam : {UnfoldingFamily::A, UnfoldingFamily::B, UnfoldingFamily::C})
    for (int n = 2; n <= 5; ++n)
      for (const auto& d : derive_family(fam, n).discrepancies) disc.push_back(discrepancy_json(d));
  j["discrepancies"] = disc;
  return j;
}

}  // namespace germlab

#endif  // GERMLAB_REPORT_HPP
