// germlab: classify map-germs up to A-isotopy and explore perturbations.
//
//   germlab classify "x1^3 + x1*x2 ; x2"
//   germlab classify -i samples/butterfly.germ --json
//   germlab verify -i samples/cusp.germ "cusp eps1=+1"
//   germlab perturb --family C --n 2 --params 1,4
//   germlab perturb --family A --n 2 --l 3 --grid "-2:2:1,-2:2:1"
//   germlab tables --json
//
// Exit codes: 0 ok, 1 verify mismatch, 2 parse/usage error, 3 unrecognized.

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "germlab/germlab.hpp"
#include "germlab/report.hpp"

using namespace germlab;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_mismatch = 1;
constexpr int exit_parse = 2;
constexpr int exit_unrecognized = 3;

std::string read_input(const std::string& path, const std::string& inline_text) {
  if (!inline_text.empty()) return inline_text;
  if (path.empty()) throw ParseError(1, 1, "no germ given (use -i FILE, -i - or an inline germ)");
  if (path == "-") return std::string(std::istreambuf_iterator<char>(std::cin), {});
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::parse, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void print_human(const MapGerm& f, const Classification& c) {
  std::cout << "germ:        " << render_map(f) << "\n";
  if (f.constant_removed()) std::cout << "note:        constant terms removed\n";
  std::cout << "classifier:  " << c.classifier << "\n";
  std::cout << "class:       " << c.label.text() << "\n";
  if (c.recognized()) std::cout << "normal form: " << render_map(c.label.normal_form) << "\n";
  if (c.invariant) {
    std::cout << "invariant:   " << to_string(c.invariant->kind) << " =";
    for (int v : c.invariant->values) std::cout << (v > 0 ? " +1" : " -1");
    std::cout << "\n";
  }
  if (!c.criteria.empty()) {
    std::cout << "criteria at 0:\n";
    for (const auto& [name, value] : c.criteria) std::cout << "  " << name << " = " << value << "\n";
  }
  if (!c.message.empty()) std::cout << "message:     " << c.message << "\n";
}

void print_report_human(const PerturbationReport& r) {
  std::cout << "family " << to_string(r.spec.family) << ", n = " << r.spec.n;
  if (r.spec.family == UnfoldingFamily::A) std::cout << ", l = " << r.spec.l;
  std::cout << ", u = (";
  for (std::size_t i = 0; i < r.spec.params.size(); ++i) std::cout << (i ? ", " : "") << r.spec.params[i].get_str();
  std::cout << ")\n";
  std::cout << "locus: " << r.constraint << "\n";
  std::cout << r.count << " n-Morin point(s), c(f) = " << r.c_f_bound << (r.stable ? "" : " [not stable]") << "\n";
  int digits = r.precision * 3 / 10 + 1;
  for (const auto& p : r.points) {
    std::cout << "  " << p.parameter << " ";
    if (p.exact) std::cout << "= " << p.parameter_interval.lo.get_str();
    else std::cout << "in (" << to_decimal(p.parameter_interval.lo, digits) << ", " << to_decimal(p.parameter_interval.hi, digits) << "]";
    std::cout << "  " << (p.verified ? p.label.text() : "NOT VERIFIED: " + p.message);
    std::cout << "  inv";
    for (int v : p.invariant.values) std::cout << (v > 0 ? " +" : " -");
    std::cout << "  table";
    for (int v : p.table_invariant) std::cout << (v > 0 ? " +" : v < 0 ? " -" : " 0");
    std::cout << (p.agrees ? "  agree" : "  DISAGREE") << "\n";
  }
  for (const auto& fl : r.flags) std::cout << "  flag: " << fl << "\n";
}

std::vector<Rat> parse_params(const std::string& s) {
  std::vector<Rat> out;
  if (s.empty()) return out;
  std::size_t start = 0;
  while (start <= s.size()) {
    std::size_t end = s.find(',', start);
    if (end == std::string::npos) end = s.size();
    out.push_back(parse_rat(s.substr(start, end - start)));
    start = end + 1;
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"germlab: A-isotopy classification of polynomial map-germs"};
  app.require_subcommand(1);

  std::string input, inline_germ, claim, family = "B", params, grid;
  bool json = false;
  std::optional<int> precision;
  int n = 2, l = 2;

  auto add_input = [&](CLI::App* c) {
    c->add_option("-i,--input", input, "germ file, or - for stdin");
    c->add_option("germ", inline_germ, "inline germ, e.g. \"x1^3 + x1*x2 ; x2\"");
    c->add_flag("--json", json, "JSON output");
  };
  auto* classify_cmd = app.add_subcommand("classify", "classify a germ");
  add_input(classify_cmd);

  auto* verify_cmd = app.add_subcommand("verify", "check a germ against a claimed class");
  verify_cmd->add_option("-i,--input", input, "germ file, or - for stdin");
  verify_cmd->add_option("-e,--germ", inline_germ, "inline germ");
  verify_cmd->add_option("label", claim, "claimed class, e.g. \"butterfly eps1=-1 eps2=-1\"")->required();
  verify_cmd->add_flag("--json", json, "JSON output");

  auto* perturb_cmd = app.add_subcommand("perturb", "Morin points of a perturbed family A/B/C germ");
  perturb_cmd->add_option("--family", family, "A, B or C")->check(CLI::IsMember({"A", "B", "C", "a", "b", "c"}));
  perturb_cmd->add_option("--n", n, "dimension, 2..5")->check(CLI::Range(2, 5));
  perturb_cmd->add_option("--l", l, "family A exponent, >= 2")->check(CLI::Range(2, 64));
  perturb_cmd->add_option("--params", params, "unfolding parameters u0,u1,... (rationals)");
  perturb_cmd->add_option("--grid", grid, "sweep grid lo:hi:step per parameter, comma separated");
  perturb_cmd->add_option("--precision", precision, "root isolation width exponent, 20..120")->check(CLI::Range(20, 120));
  perturb_cmd->add_flag("--json", json, "JSON output");

  auto* tables_cmd = app.add_subcommand("tables", "regenerate class-count and family tables");
  tables_cmd->add_option("--precision", precision, "root isolation width exponent, 20..120")->check(CLI::Range(20, 120));
  tables_cmd->add_flag("--json", json, "JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? exit_ok : exit_parse;
  }

  try {
    if (classify_cmd->parsed()) {
      MapGerm f = parse_map(read_input(input, inline_germ));
      auto c = classify(f);
      if (json) std::cout << classification_json(f, c).dump(2) << "\n";
      else print_human(f, c);
      return c.recognized() ? exit_ok : exit_unrecognized;
    }
    if (verify_cmd->parsed()) {
      MapGerm f = parse_map(read_input(input, inline_germ));
      auto claimed = parse_claimed_label(claim);
      auto c = classify(f);
      auto diff = label_diff(claimed, c.label);
      if (json) {
        Json j;
        j["claim"] = claim;
        j["computed"] = label_json(c.label);
        j["pass"] = diff.empty();
        j["diff"] = diff;
        j["criteria"] = criteria_json(c.criteria);
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << (diff.empty() ? "PASS " : "FAIL ") << c.label.text() << "\n";
        for (const auto& d : diff) std::cout << "  " << d << "\n";
        if (!diff.empty())
          for (const auto& [name, value] : c.criteria) std::cout << "  " << name << " = " << value << "\n";
      }
      return diff.empty() ? exit_ok : exit_mismatch;
    }
    int prec = precision ? *precision : default_precision();
    if (perturb_cmd->parsed()) {
      UnfoldingSpec spec{parse_family(family), n, l, {}};
      if (!grid.empty()) {
        auto s = sweep(spec, parse_grid(grid), prec);
        if (json) {
          Json j;
          j["max_count"] = s.max_count;
          Json arg = Json::array();
          for (const auto& r : s.argmax) arg.push_back(r.get_str());
          j["argmax"] = arg;
          j["c_f"] = spec.c_f();
          j["attains_c_f"] = s.attains_c_f;
          Json reps = Json::array();
          for (const auto& r : s.reports) reps.push_back(perturbation_json(r));
          j["reports"] = reps;
          std::cout << j.dump(2) << "\n";
        } else {
          for (const auto& r : s.reports) print_report_human(r);
          std::cout << "max count " << s.max_count << " at u = (";
          for (std::size_t i = 0; i < s.argmax.size(); ++i) std::cout << (i ? ", " : "") << s.argmax[i].get_str();
          std::cout << "), c(f) = " << spec.c_f() << (s.attains_c_f ? " attained" : " not attained") << "\n";
        }
        return exit_ok;
      }
      spec.params = parse_params(params);
      auto r = morin_points(spec, prec);
      if (json) std::cout << perturbation_json(r).dump(2) << "\n";
      else print_report_human(r);
      return exit_ok;
    }
    if (tables_cmd->parsed()) {
      auto j = tables_json(prec);
      if (json) {
        std::cout << j.dump(2) << "\n";
        return exit_ok;
      }
      std::cout << "Morin classes (k, n, #, invariant)\n";
      for (const auto& row : j["morin_classes"])
        std::cout << "  " << row["k"] << " " << row["n"] << " " << row["classes"] << "  "
                  << row["invariant"].get<std::string>() << "\n";
      std::cout << "Families at reference parameters\n";
      for (const auto& row : j["families"]) {
        std::cout << "  " << row["spec"]["family"].get<std::string>() << " n=" << row["spec"]["n"];
        if (row["spec"].contains("l")) std::cout << " l=" << row["spec"]["l"];
        std::cout << "  count " << row["count"] << "/" << row["c_f"] << "  inv " << row["printed_inv"].get<std::string>()
                  << (row["all_agree"].get<bool>() ? "  agree" : "  DISAGREE") << "\n";
      }
      std::cout << "Printed formulas that differ from the derivation\n";
      for (const auto& d : j["discrepancies"])
        std::cout << "  " << d["name"].get<std::string>() << ": printed " << d["printed"].get<std::string>()
                  << "; derived " << d["derived"].get<std::string>() << "\n";
      return exit_ok;
    }
  } catch (const Error& e) {
    std::cerr << "germlab: " << to_string(e.kind()) << ": " << e.what() << "\n";
    return e.kind() == ErrorKind::unrecognized ? exit_unrecognized : exit_parse;
  }
  return exit_ok;
}
