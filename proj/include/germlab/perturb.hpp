#ifndef GERMLAB_PERTURB_HPP
#define GERMLAB_PERTURB_HPP

// Versal unfoldings of the simple corank-one families A, B, C and the
// n-Morin points of their perturbations.

#include <cstdlib>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "germlab/algebraic.hpp"
#include "germlab/error.hpp"
#include "germlab/germ.hpp"
#include "germlab/morin.hpp"
#include "germlab/parse.hpp"
#include "germlab/univariate.hpp"

namespace germlab {

enum class UnfoldingFamily { A, B, C };

inline std::string to_string(UnfoldingFamily f) {
  switch (f) {
    case UnfoldingFamily::A: return "A";
    case UnfoldingFamily::B: return "B";
    case UnfoldingFamily::C: return "C";
  }
  return "?";
}

inline UnfoldingFamily parse_family(const std::string& s) {
  if (s == "A" || s == "a") return UnfoldingFamily::A;
  if (s == "B" || s == "b") return UnfoldingFamily::B;
  if (s == "C" || s == "c") return UnfoldingFamily::C;
  fail(ErrorKind::invalid_spec, "family must be A, B or C");
}

struct UnfoldingSpec {
  UnfoldingFamily family = UnfoldingFamily::B;
  int n = 2;
  int l = 2;  // family A only
  std::vector<Rat> params;

  std::size_t param_count() const {
    switch (family) {
      case UnfoldingFamily::A: return static_cast<std::size_t>(l - 1);
      case UnfoldingFamily::B: return 1;
      case UnfoldingFamily::C: return 2;
    }
    return 0;
  }

  void validate() const {
    if (n < 2 || n > 5) fail(ErrorKind::invalid_spec, "n must be in 2..5");
    if (family == UnfoldingFamily::A && (l < 2 || n + l - 1 > 64)) fail(ErrorKind::invalid_spec, "l must be >= 2");
    if (params.size() != param_count())
      fail(ErrorKind::invalid_spec, "family " + to_string(family) + " needs " + std::to_string(param_count()) +
                                        " parameters, got " + std::to_string(params.size()));
  }

  /// f1(t, 0, ..., 0) of the unperturbed germ.
  std::string genotype() const {
    return "t^" + std::to_string(family == UnfoldingFamily::A ? n + 1 : n + 2);
  }

  /// Maximal number of n-Morin points over stable perturbations.
  int c_f() const {
    switch (family) {
      case UnfoldingFamily::A: return l;
      case UnfoldingFamily::B: return 2;
      case UnfoldingFamily::C: return 4;
    }
    return 0;
  }

  /// Source variable names t, x2, ..., xn.
  std::vector<std::string> source_names() const {
    std::vector<std::string> v{"t"};
    for (int i = 2; i <= n; ++i) v.push_back("x" + std::to_string(i));
    return v;
  }

  std::vector<std::string> param_names() const {
    std::vector<std::string> v;
    for (std::size_t i = 0; i < param_count(); ++i) v.push_back("u" + std::to_string(i));
    return v;
  }
};

namespace perturb_detail {

/// Ring of source variables, optionally followed by symbolic parameters.
struct Ring {
  int n;
  int nparams;  // 0 when parameters are numeric
  int nvars() const { return n + nparams; }
  Poly var(int i) const { return Poly::variable(nvars(), i); }
  Poly t() const { return var(0); }
  Poly x(int j) const { return var(j - 1); }  // x2 .. xn
};

inline Poly param(const Ring& r, const UnfoldingSpec& s, std::size_t i) {
  if (r.nparams) return r.var(r.n + static_cast<int>(i));
  return Poly::constant(r.nvars(), s.params[i]);
}

inline Poly qbar(const Ring& r, const UnfoldingSpec& s) {
  Poly xn = r.x(s.n);
  Poly q = xn.pow(s.l);
  for (int i = 0; i + 2 <= s.l; ++i) q += param(r, s, static_cast<std::size_t>(i)) * xn.pow(i);
  return q;
}

inline Poly build_q(const Ring& r, const UnfoldingSpec& s) {
  int n = s.n;
  Poly t = r.t();
  Poly q(r.nvars());
  switch (s.family) {
    case UnfoldingFamily::A:
      q = t.pow(n + 1);
      for (int j = 1; j <= n - 2; ++j) q += r.x(j + 1) * t.pow(j);
      q += qbar(r, s) * t.pow(n - 1);
      break;
    case UnfoldingFamily::B:
      q = t.pow(n + 2);
      for (int j = 1; j <= n - 1; ++j) q += r.x(j + 1) * t.pow(j);
      q += param(r, s, 0) * t.pow(n);
      break;
    case UnfoldingFamily::C: {
      q = t.pow(n + 2);
      for (int j = 1; j <= n - 2; ++j) q += r.x(j + 1) * t.pow(j);
      Poly xn = r.x(n);
      q += (xn * xn + param(r, s, 0) + param(r, s, 1) * xn) * t.pow(n - 1);
      q += xn * t.pow(n);
      break;
    }
  }
  return q;
}

}  // namespace perturb_detail

/// F_u = (q(t, x, u), x2, ..., xn) at the spec's numeric parameters.
inline MapGerm build_unfolding(const UnfoldingSpec& spec) {
  spec.validate();
  perturb_detail::Ring r{spec.n, 0};
  std::vector<Poly> comps{perturb_detail::build_q(r, spec)};
  for (int j = 2; j <= spec.n; ++j) comps.push_back(r.x(j));
  return MapGerm(spec.n, std::move(comps), spec.source_names());
}

/// q with symbolic parameters: variables t, x2..xn, u0, ...
inline Poly symbolic_q(const UnfoldingSpec& spec) {
  int p = static_cast<int>(spec.param_count());
  if (spec.n + p > max_vars) fail(ErrorKind::invalid_spec, "too many variables for a symbolic unfolding");
  return perturb_detail::build_q({spec.n, p}, spec);
}

inline std::vector<std::string> symbolic_names(const UnfoldingSpec& spec) {
  auto v = spec.source_names();
  for (auto& u : spec.param_names()) v.push_back(u);
  return v;
}

// ---------------------------------------------------------------------------
// Elimination of lambda = eta lambda = ... = eta^{n-1} lambda = 0 with
// lambda = q_t and eta = d/dt.

struct Elimination {
  std::map<int, Poly> solved;    // variable index -> expression in the free variables
  std::vector<Poly> constraints; // leftover equations, free of solved variables
  std::vector<int> order;        // variables in the order they were solved
};

/// The n equations d^{j+1} q / dt^{j+1} = 0, j = 0..n-1.
inline std::vector<Poly> morin_equations(const Poly& q, int n) {
  std::vector<Poly> eqs;
  Poly d = q;
  for (int j = 0; j < n; ++j) {
    d = d.partial(0);
    eqs.push_back(d);
  }
  return eqs;
}

/// Triangular elimination: repeatedly picks an equation in which one of
/// `unknowns` (tried in the given order) occurs linearly with a constant
/// nonzero coefficient, solves for it and substitutes everywhere.
inline Elimination eliminate(std::vector<Poly> eqs, const std::vector<int>& unknowns) {
  Elimination out;
  if (eqs.empty()) return out;
  int nv = eqs[0].nvars();
  std::vector<bool> open(eqs.size(), true);
  bool progress = true;
  while (progress) {
    progress = false;
    for (int v : unknowns) {
      if (out.solved.count(v)) continue;
      for (std::size_t e = eqs.size(); e-- > 0;) {
        if (!open[e]) continue;
        Poly d = eqs[e].partial(v);
        if (d.is_zero() || d.degree() != 0) continue;
        // eqs[e] = c * x_v + rest
        Rat c = d.constant_term();
        Poly rest = eqs[e] - Poly::variable(nv, v) * c;
        Poly sol = rest * Rat(-1 / c);
        std::vector<Poly> images;
        for (int i = 0; i < nv; ++i) images.push_back(i == v ? sol : Poly::variable(nv, i));
        for (std::size_t k = 0; k < eqs.size(); ++k)
          if (open[k] && k != e) eqs[k] = eqs[k].substitute(images);
        for (auto& [var, expr] : out.solved) expr = expr.substitute(images);
        out.solved.emplace(v, sol);
        out.order.push_back(v);
        open[e] = false;
        progress = true;
        break;
      }
      if (progress) break;
    }
  }
  for (std::size_t e = 0; e < eqs.size(); ++e)
    if (open[e] && !eqs[e].is_zero()) out.constraints.push_back(eqs[e]);
  return out;
}

/// Unknowns tried xn, ..., x2 first, then t.
inline std::vector<int> elimination_order(int n) {
  std::vector<int> v;
  for (int i = n - 1; i >= 1; --i) v.push_back(i);
  v.push_back(0);
  return v;
}

inline Elimination eliminate_unfolding(const Poly& q, int n) {
  return eliminate(morin_equations(q, n), elimination_order(n));
}

/// Coefficient of var^d in p, as a polynomial in the remaining variables.
inline Poly coeff_in(const Poly& p, int var, int d) {
  Poly r(p.nvars());
  for (const auto& t : p.terms()) {
    auto e = p.exponents(t);
    if (e[static_cast<std::size_t>(var)] != d) continue;
    e[static_cast<std::size_t>(var)] = 0;
    r += Poly::monomial(p.nvars(), e, t.coef);
  }
  return r;
}

inline int degree_in(const Poly& p, int var) {
  int d = -1;
  for (const auto& t : p.terms()) d = std::max(d, p.exponents(t)[static_cast<std::size_t>(var)]);
  return d;
}

/// Remainder of p modulo m as polynomials in `var`; the leading coefficient
/// of m in var must be a nonzero constant.
inline Poly reduce_mod(Poly p, const Poly& m, int var) {
  int dm = degree_in(m, var);
  Poly lead = coeff_in(m, var, dm);
  if (lead.degree() != 0) fail(ErrorKind::precondition, "reduction needs a constant leading coefficient");
  Rat lc = lead.constant_term();
  for (int d = degree_in(p, var); d >= dm; d = degree_in(p, var)) {
    Poly c = coeff_in(p, var, d);
    p -= c * Poly::variable(p.nvars(), var).pow(d - dm) * m * Rat(1 / lc);
  }
  return p;
}

// ---------------------------------------------------------------------------
// Published tables: constraints, coordinate formulas and invariant formulas,
// transcribed verbatim so they can be checked against derivations.

struct PrintedFamilyData {
  std::optional<std::string> constraint;  // = 0
  std::vector<std::pair<std::string, std::string>> coords;  // variable, formula
  std::vector<std::string> inv;  // one entry per invariant slot
  std::string inv_display;
};

/// Family A formulas use the symbol qbar_x for the derivative of qbar in xn.
inline PrintedFamilyData printed_data(UnfoldingFamily fam, int n) {
  PrintedFamilyData d;
  switch (fam) {
    case UnfoldingFamily::A:
      switch (n) {
        case 2: d.inv = {"1"}; d.inv_display = "1"; break;
        case 3: d.inv = {"qbar_x"}; d.inv_display = "qbar_x3"; break;
        case 4: d.inv = {"1", "qbar_x"}; d.inv_display = "(1, qbar_x4)"; break;
        case 5: d.inv = {"qbar_x"}; d.inv_display = "qbar_x5"; break;
      }
      break;
    case UnfoldingFamily::B:
      switch (n) {
        case 2:
          d.constraint = "6*t^2 + u0";
          d.coords = {{"x2", "8*t^3"}};
          d.inv = {"t"};
          d.inv_display = "t";
          break;
        case 3:
          d.constraint = "10*t^2 + u0";
          d.coords = {{"x2", "105*t^4"}, {"x3", "-40*t^3"}};
          d.inv = {"t^2"};
          d.inv_display = "t^2";
          break;
        case 4:
          d.constraint = "15*t^2 + u0";
          d.coords = {{"x2", "24*t^5"}, {"x3", "-45*t^4"}, {"x4", "40*t^3"}};
          d.inv = {"t", "t"};
          d.inv_display = "(t, t)";
          break;
        case 5:
          d.constraint = "21*t^2 + u0";
          d.coords = {{"x2", "-35*t^6"}, {"x3", "84*t^5"}, {"x4", "-105*t^4"}, {"x5", "70*t^3"}};
          d.inv = {"t"};
          d.inv_display = "t";
          break;
      }
      break;
    case UnfoldingFamily::C:
      switch (n) {
        case 2:
          d.constraint = "36*t^4 - 8*t^3 - 6*u1*t^2 + u0";
          d.coords = {{"x2", "-6*t^2"}};
          d.inv = {"t"};
          d.inv_display = "t";
          break;
        case 3:
          d.constraint = "100*t^4 - 20*t^3 - 10*u1*t^2 + u0";
          d.coords = {{"x2", "25*t^4 - 200*t^5 + 20*u1*t^3 - 2*u0*t"}, {"x3", "-10*t^2"}};
          d.inv = {"-20*t^2 + 3*t + u1"};
          d.inv_display = "-20t^2+3t+u1";
          break;
        case 4:
          d.constraint = "255*t^4 - 40*t^3 - 15*t^2*u1 + u0";
          d.coords = {{"x2", "3*(225*t^6 - 32*t^5 - 15*t^4*u1 + u0*t^2)"},
                      {"x3", "-3*(225*t^5 - 25*t^4 - 15*t^3*u1 + t*u0)"},
                      {"x4", "-15*t^2"}};
          d.inv = {"t", "t*(30*t^2 - 4*t - u1)"};
          d.inv_display = "(t, t(30t^2-4t-u1))";
          break;
        case 5:
          d.constraint = "441*t^4 - 70*t^3 - 21*t^2*u1 + u0";
          d.coords = {{"x2", "-4*u0*t^3 + 84*u1*t^5 + 245*t^6 - 1764*t^7"},
                      {"x3", "2640*t^6 - 336*t^5 - 126*u1*t^4 + 6*u0*t^2"},
                      {"x4", "-1764*t^5 + 175*t^4 + 84*u1*t^3 - 4*u0*t"},
                      {"x5", "-21*t^2"}};
          d.inv = {"t*(-42*t^2 + 5*t + u1)"};
          d.inv_display = "t(-42t^2+5t+u1)";
          break;
      }
      break;
  }
  return d;
}

/// Invariant formula as a polynomial in the symbolic ring (t, x.., u..).
inline Poly printed_inv_poly(const UnfoldingSpec& spec, const std::string& formula) {
  auto names = symbolic_names(spec);
  if (formula == "qbar_x") {
    perturb_detail::Ring r{spec.n, static_cast<int>(spec.param_count())};
    return perturb_detail::qbar(r, spec).partial(spec.n - 1);
  }
  return parse_poly(formula, names);
}

/// Named disagreement between a printed formula and its re-derivation.
struct Discrepancy {
  std::string name;  // e.g. "C4.constraint", "B3.x2", "B4.inv"
  std::string printed;
  std::string derived;
  std::string note;
};

struct FamilyDerivation {
  UnfoldingFamily family;
  int n;
  std::string constraint;  // derived, rendered
  std::vector<std::pair<std::string, std::string>> coords;
  std::vector<Discrepancy> discrepancies;
};

/// Rescales p so that its leading coefficient in `var` is 1 (constant
/// leading coefficients only).
inline Poly normalized_in(const Poly& p, int var) {
  Poly lead = coeff_in(p, var, degree_in(p, var));
  if (lead.degree() != 0) return p;
  return p * Rat(1 / lead.constant_term());
}

/// Integer multiple of p with coprime coefficients, positive leading
/// coefficient in `var`. Used for display only.
inline Poly primitive_in(const Poly& p, int var) {
  Poly c = normalized_in(p, var);
  Int den = 1;
  for (const auto& t : c.terms()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), t.coef.get_den_mpz_t());
  c = c * Rat(den);
  Int g = 0;
  for (const auto& t : c.terms()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coef.get_num_mpz_t());
  return g == 0 ? c : c * Rat(Int(1), g);
}

/// Re-derives the n-Morin locus of a family symbolically and compares it
/// with the printed constraint and coordinate formulas.
inline FamilyDerivation derive_family(UnfoldingFamily fam, int n, int l = 2) {
  UnfoldingSpec spec{fam, n, l, {}};
  spec.params.assign(spec.param_count(), Rat(0));
  spec.validate();
  Poly q = symbolic_q(spec);
  auto names = symbolic_names(spec);
  auto el = eliminate_unfolding(q, n);
  FamilyDerivation out{fam, n, "", {}, {}};
  std::string tag = to_string(fam) + std::to_string(n);
  if (el.constraints.size() != 1) {
    out.discrepancies.push_back({tag + ".elimination", "", std::to_string(el.constraints.size()) + " constraints",
                                 "expected a single equation after elimination"});
    return out;
  }
  int free_var = fam == UnfoldingFamily::A ? n - 1 : 0;
  Poly c = normalized_in(el.constraints[0], free_var);
  out.constraint = primitive_in(c, free_var).to_string(names) + " = 0";
  for (int v = 0; v < n; ++v)
    if (el.solved.count(v)) out.coords.emplace_back(names[static_cast<std::size_t>(v)], el.solved.at(v).to_string(names));

  auto printed = printed_data(fam, n);
  if (fam == UnfoldingFamily::A) {
    // printed locus: t = x2 = ... = x_{n-1} = 0, qbar = 0
    perturb_detail::Ring r{n, static_cast<int>(spec.param_count())};
    Poly qb = normalized_in(perturb_detail::qbar(r, spec), free_var);
    if (!(qb == c)) out.discrepancies.push_back({tag + ".constraint", "qbar = 0", out.constraint, "locus differs"});
    for (int v = 0; v < n - 1; ++v)
      if (!el.solved.count(v) || !el.solved.at(v).is_zero())
        out.discrepancies.push_back({tag + "." + names[static_cast<std::size_t>(v)], "0",
                                     el.solved.count(v) ? el.solved.at(v).to_string(names) : "free", "coordinate differs"});
    return out;
  }
  Poly pc = normalized_in(parse_poly(*printed.constraint, names), 0);
  if (!(pc == c))
    out.discrepancies.push_back({tag + ".constraint", *printed.constraint + " = 0", out.constraint,
                                 "printed equation differs from the eliminated one"});
  for (const auto& [var, formula] : printed.coords) {
    int v = static_cast<int>(std::find(names.begin(), names.end(), var) - names.begin());
    Poly pf = parse_poly(formula, names);
    const Poly& df = el.solved.at(v);
    // compare on the locus: modulo the derived constraint
    if (!reduce_mod(pf - df, c, 0).is_zero())
      out.discrepancies.push_back({tag + "." + var, var + " = " + formula, var + " = " + df.to_string(names),
                                   "printed coordinate differs on the Morin locus"});
  }
  return out;
}

/// Residuals of lambda, eta lambda, ..., eta^{n-1} lambda along the printed
/// family-B parametrization (u0 eliminated through the printed constraint).
/// All zero iff the printed formulas describe n-Morin points.
inline std::vector<Poly> printed_parametrization_residuals(int n) {
  UnfoldingSpec spec{UnfoldingFamily::B, n, 2, {Rat(0)}};
  Poly q = symbolic_q(spec);
  auto names = symbolic_names(spec);
  auto printed = printed_data(UnfoldingFamily::B, n);
  int nv = q.nvars();
  std::vector<Poly> images;
  for (int i = 0; i < nv; ++i) images.push_back(Poly::variable(nv, i));
  for (const auto& [var, formula] : printed.coords) {
    int v = static_cast<int>(std::find(names.begin(), names.end(), var) - names.begin());
    images[static_cast<std::size_t>(v)] = parse_poly(formula, names);
  }
  // constraint c t^2 + u0 = 0  =>  u0 = -c t^2
  Poly con = parse_poly(*printed.constraint, names);
  images[static_cast<std::size_t>(n)] = Poly::variable(nv, n) - con;
  std::vector<Poly> out;
  for (const auto& e : morin_equations(q, n)) out.push_back(e.substitute(images));
  return out;
}

// ---------------------------------------------------------------------------
// Morin points.

namespace detail {

struct AlgEval {
  using Num = AlgNum;
  const AlgPoint* pt;
  Num value(const Poly& p) const { return eval(p, *pt); }
  std::vector<Num> gradient(const Poly& p) const {
    std::vector<Num> g;
    for (int i = 0; i < p.nvars(); ++i) g.push_back(eval(p.partial(i), *pt));
    return g;
  }
  int sign(const Num& x) const { return x.sign(); }
  Num zero() const { return AlgNum(pt->root, Rat(0)); }
  Num one() const { return AlgNum(pt->root, Rat(1)); }
  std::string describe(const Num& x) const {
    int s = x.sign();
    std::string sign = s > 0 ? "+" : s < 0 ? "-" : "0";
    return x.value().degree() <= 0 ? x.value().coeff(0).get_str() : "sign " + sign + " (" + x.to_string() + ")";
  }
};

}  // namespace detail

/// Morin criteria at an algebraic point, with the adjugate null field of
/// the full Jacobian (first column nonzero at the point).
inline MorinResult try_recognize_morin_at(const MapGerm& f, const AlgPoint& pt) {
  int n = f.src_dim();
  if (n != f.tgt_dim()) fail(ErrorKind::dimension, "Morin recognition needs n = m");
  auto jac = jacobian(f);
  detail::AlgEval ev{&pt};
  Poly lambda = jac.det();
  std::optional<VecField> eta;
  for (std::size_t c = 0; c < static_cast<std::size_t>(n) && !eta; ++c) {
    auto col = jac.adjugate_column(c);
    for (const auto& e : col) {
      int s = eval(e, pt).sign();
      if (s == 0) continue;
      VecField v{col};
      eta = s > 0 ? v : -v;
      break;
    }
  }
  if (!eta) {
    if (ev.value(lambda).sign() != 0) return detail::regular_result(n);
    MorinResult bad;
    bad.n = n;
    bad.status = MorinStatus::not_corank_one;
    bad.message = "not corank one at the point";
    return bad;
  }
  std::vector<Poly> L{lambda};
  for (int j = 1; j <= n; ++j) L.push_back(dir_deriv(L.back(), *eta));
  Poly eef1(n);
  if (n == 1) {
    Poly ef1 = dir_deriv(f[0], *eta);
    eef1 = dir_deriv(ef1, *eta);
  }
  return evaluate_morin(L, n, ev, &eef1);
}

inline int default_precision() {
  if (const char* env = std::getenv("GERMLAB_PRECISION")) {
    try {
      int p = std::stoi(env);
      if (p >= 20 && p <= 120) return p;
    } catch (...) {
    }
    fail(ErrorKind::invalid_spec, "GERMLAB_PRECISION must be an integer in [20, 120]");
  }
  return 40;
}

struct MorinPoint {
  bool exact = false;
  std::vector<Rat> location;                 // exact coordinates when `exact`
  std::vector<std::pair<Rat, Rat>> box;      // per-coordinate enclosing interval otherwise
  std::string parameter;                     // the free variable (t or xn)
  RootInterval parameter_interval;
  std::string defining_polynomial;           // constraint in the free variable
  int k = 0;
  MorinInvariant invariant;                  // from the classifier
  std::vector<int> table_invariant;          // printed inv formula signs
  ClassLabel label;
  bool verified = false;                     // classifier found k = n
  bool agrees = false;                       // table_invariant == invariant.values
  std::string message;
};

struct PerturbationReport {
  UnfoldingSpec spec;
  std::string constraint;                    // derived, numeric parameters
  std::vector<MorinPoint> points;
  int count = 0;
  int c_f_bound = 0;
  bool stable = true;
  std::vector<std::string> flags;
  int precision = 40;
};

namespace detail {

/// Interval hull of a univariate polynomial over a root interval, by
/// evaluating at refined endpoints; used only for reporting boxes.
inline std::pair<Rat, Rat> enclose(const UPoly& p, const RootInterval& iv) {
  // Coordinates in the families are monotone over tiny intervals away from
  // critical points; report endpoint values ordered.
  Rat a = p.eval(iv.lo), b = p.eval(iv.hi);
  if (a > b) std::swap(a, b);
  return {a, b};
}

}  // namespace detail

inline PerturbationReport morin_points(const UnfoldingSpec& spec, int precision = default_precision()) {
  spec.validate();
  if (precision < 20 || precision > 120) fail(ErrorKind::invalid_spec, "precision must be in [20, 120]");
  PerturbationReport rep;
  rep.spec = spec;
  rep.c_f_bound = spec.c_f();
  rep.precision = precision;
  MapGerm f = build_unfolding(spec);
  int n = spec.n;
  auto names = spec.source_names();
  auto el = eliminate_unfolding(f[0], n);
  if (el.constraints.size() != 1) {
    rep.stable = false;
    rep.flags.push_back("elimination left " + std::to_string(el.constraints.size()) + " equations");
    return rep;
  }
  int free_var = spec.family == UnfoldingFamily::A ? n - 1 : 0;
  UPoly con = UPoly::from_poly(el.constraints[0], free_var);
  rep.constraint = normalized_in(el.constraints[0], free_var).to_string(names) + " = 0";
  if (con.degree() <= 0) {
    rep.stable = false;
    rep.flags.push_back("degenerate locus: constraint is constant");
    return rep;
  }
  if (has_repeated_root(con)) {
    rep.stable = false;
    rep.flags.push_back("non-stable parameter: repeated root in " + rep.constraint);
  }
  UPoly sq = squarefree_part(con);
  // coordinates as univariate polynomials in the free variable
  std::vector<UPoly> coord_polys;
  for (int v = 0; v < n; ++v) {
    if (v == free_var) coord_polys.push_back(UPoly::x());
    else coord_polys.push_back(UPoly::from_poly(el.solved.at(v), free_var));
  }
  auto printed = printed_data(spec.family, n);
  std::vector<Poly> inv_polys;
  {
    // printed invariant formulas with the numeric parameters substituted
    int p = static_cast<int>(spec.param_count());
    std::vector<Poly> images;
    for (int i = 0; i < n; ++i) images.push_back(Poly::variable(n, i));
    for (int i = 0; i < p; ++i) images.push_back(Poly::constant(n, spec.params[static_cast<std::size_t>(i)]));
    for (const auto& fm : printed.inv) inv_polys.push_back(printed_inv_poly(spec, fm).substitute(images));
  }

  for (const auto& iv : real_roots(sq, precision)) {
    if (spec.family != UnfoldingFamily::A && iv.exact && sgn(iv.lo) == 0) {
      rep.flags.push_back("root t = 0 excluded");
      continue;
    }
    MorinPoint mp;
    mp.parameter = names[static_cast<std::size_t>(free_var)];
    mp.parameter_interval = iv;
    mp.defining_polynomial = sq.to_string(mp.parameter);
    auto root = std::make_shared<RealRoot>(sq, iv);
    AlgPoint pt{root, coord_polys};
    MorinResult r;
    if (iv.exact) {
      mp.exact = true;
      for (const auto& cp : coord_polys) mp.location.push_back(cp.eval(iv.lo));
      r = try_recognize_morin(translate(f, mp.location));
    } else {
      r = try_recognize_morin_at(f, pt);
      root->refine_to(precision);
      for (const auto& cp : coord_polys) mp.box.push_back(detail::enclose(cp, root->interval()));
      mp.parameter_interval = root->interval();
    }
    mp.k = r.k;
    mp.message = r.message;
    mp.verified = r.status == MorinStatus::morin && r.k == n;
    if (mp.verified) {
      mp.invariant = r.invariant;
      mp.label = r.label;
    }
    for (const auto& ip : inv_polys) mp.table_invariant.push_back(eval(ip, pt).sign());
    mp.agrees = mp.verified && mp.table_invariant == mp.invariant.values;
    if (!mp.verified) rep.flags.push_back("point failed the Morin criteria: " + r.message);
    rep.points.push_back(std::move(mp));
  }
  rep.count = 0;
  for (const auto& p : rep.points) rep.count += p.verified ? 1 : 0;
  if (rep.count > rep.c_f_bound) rep.flags.push_back("count exceeds c(f)");
  return rep;
}

/// One range "lo:hi:step" per parameter.
struct GridAxis {
  Rat lo, hi, step;
};

inline std::vector<GridAxis> parse_grid(const std::string& text) {
  std::vector<GridAxis> axes;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(',', start);
    if (end == std::string::npos) end = text.size();
    std::string part = text.substr(start, end - start);
    std::size_t c1 = part.find(':'), c2 = c1 == std::string::npos ? c1 : part.find(':', c1 + 1);
    if (c2 == std::string::npos) fail(ErrorKind::invalid_spec, "grid axis must be lo:hi:step, got '" + part + "'");
    GridAxis a{parse_rat(part.substr(0, c1)), parse_rat(part.substr(c1 + 1, c2 - c1 - 1)), parse_rat(part.substr(c2 + 1))};
    if (sgn(a.step) <= 0 || a.hi < a.lo) fail(ErrorKind::invalid_spec, "grid axis needs lo <= hi and step > 0");
    if ((a.hi - a.lo) / a.step > 10000) fail(ErrorKind::invalid_spec, "grid axis has too many points");
    axes.push_back(a);
    start = end + 1;
  }
  return axes;
}

struct SweepSummary {
  std::vector<PerturbationReport> reports;  // grid order, first axis slowest
  int max_count = 0;
  std::vector<Rat> argmax;                  // first grid point attaining max_count
  bool attains_c_f = false;
};

inline SweepSummary sweep(const UnfoldingSpec& tmpl, const std::vector<GridAxis>& grid,
                          int precision = default_precision()) {
  if (grid.size() != tmpl.param_count())
    fail(ErrorKind::invalid_spec, "grid needs one axis per parameter (" + std::to_string(tmpl.param_count()) + ")");
  SweepSummary s;
  std::vector<Rat> cur;
  for (const auto& a : grid) cur.push_back(a.lo);
  for (;;) {
    UnfoldingSpec spec = tmpl;
    spec.params = cur;
    auto rep = morin_points(spec, precision);
    if (rep.count > s.max_count || s.argmax.empty()) {
      s.argmax = cur;
      s.max_count = rep.count;
    }
    s.reports.push_back(std::move(rep));
    std::size_t i = grid.size();
    while (i-- > 0) {
      cur[i] += grid[i].step;
      if (cur[i] <= grid[i].hi) break;
      cur[i] = grid[i].lo;
    }
    if (i == static_cast<std::size_t>(-1)) break;
  }
  s.attains_c_f = s.max_count == tmpl.c_f();
  return s;
}

}  // namespace germlab

#endif  // GERMLAB_PERTURB_HPP
