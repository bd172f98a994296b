#ifndef GERMLAB_MORIN_HPP
#define GERMLAB_MORIN_HPP

// Recognition of k-Morin singularities and their A-isotopy invariants.
//
// With lambda = det df and eta a null vector field, f is k-Morin at p iff
//   lambda = eta lambda = ... = eta^{k-1} lambda = 0,  eta^k lambda != 0,
//   rank d(lambda, eta lambda, ..., eta^{k-1} lambda) = k        (at p).
// The isotopy class inside the A-orbit is then fixed by a (k, n)-dependent
// combination of sign(eta^k lambda) and sign det grad(lambda..eta^{n-1}lambda).

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "germlab/error.hpp"
#include "germlab/germ.hpp"
#include "germlab/label.hpp"

namespace germlab {

enum class MorinStatus { morin, regular, not_corank_one, degenerate };

/// Which combination of signs is the isotopy invariant for given (k, n).
enum class InvariantKind {
  none,                    // k < n, k odd: a single class
  eta_k_lambda,            // k < n even, or k = n = 2 mod 4
  grad_det,                // k = n = 1 mod 4, n > 1
  pair,                    // k = n = 0 mod 4: (eta^k lambda, det grad)
  product,                 // k = n = 3 mod 4: eta^k lambda * det grad
  fold_second_derivative,  // k = n = 1: eta^2 f1
};

inline std::string to_string(InvariantKind k) {
  switch (k) {
    case InvariantKind::none: return "none";
    case InvariantKind::eta_k_lambda: return "sign eta^k lambda";
    case InvariantKind::grad_det: return "sign det grad(lambda,...,eta^(n-1) lambda)";
    case InvariantKind::pair: return "(sign eta^k lambda, sign det grad(lambda,...,eta^(n-1) lambda))";
    case InvariantKind::product: return "sign(eta^k lambda * det grad(lambda,...,eta^(n-1) lambda))";
    case InvariantKind::fold_second_derivative: return "sign eta^2 f1";
  }
  return "none";
}

struct MorinInvariant {
  InvariantKind kind = InvariantKind::none;
  std::vector<int> values;

  friend bool operator==(const MorinInvariant&, const MorinInvariant&) = default;
};

/// Criteria values recorded for reports, in evaluation order.
using CriteriaLog = std::vector<std::pair<std::string, std::string>>;

struct MorinResult {
  MorinStatus status = MorinStatus::degenerate;
  int k = 0;
  int n = 0;
  int eta_k_lambda_sign = 0;
  std::optional<int> grad_det_sign;  // computed only when k = n
  std::optional<int> fold_sign;      // k = n = 1
  MorinInvariant invariant;
  ClassLabel label;
  CriteriaLog criteria;
  std::string message;
};

inline MorinInvariant morin_invariant_for(int k, int n, int eta_k_sign, std::optional<int> grad_det,
                                          std::optional<int> fold_sign) {
  MorinInvariant inv;
  auto need_det = [&]() {
    if (!grad_det) fail(ErrorKind::precondition, "det grad sign required when k = n");
    return *grad_det;
  };
  if (k < n) {
    if (k % 2 == 0) inv = {InvariantKind::eta_k_lambda, {eta_k_sign}};
    return inv;
  }
  if (n == 1) {
    if (!fold_sign) fail(ErrorKind::precondition, "eta^2 f1 sign required when k = n = 1");
    return {InvariantKind::fold_second_derivative, {*fold_sign}};
  }
  switch (n % 4) {
    case 0: return {InvariantKind::pair, {eta_k_sign, need_det()}};
    case 1: return {InvariantKind::grad_det, {need_det()}};
    case 2: return {InvariantKind::eta_k_lambda, {eta_k_sign}};
    default: return {InvariantKind::product, {eta_k_sign * need_det()}};
  }
}

/// (eps1, eps2) of the normal form f^k_{(eps1,eps2)} in the class selected by
/// the invariant; 0 marks a sign that is not an isotopy invariant.
inline SignPair morin_signs_for(const MorinInvariant& inv) {
  switch (inv.kind) {
    case InvariantKind::none: return {0, 0};
    case InvariantKind::eta_k_lambda: return {inv.values[0], 0};
    case InvariantKind::grad_det: return {inv.values[0], 0};
    case InvariantKind::fold_second_derivative: return {inv.values[0], 0};
    case InvariantKind::product: return {0, inv.values[0]};
    case InvariantKind::pair: {
      // (eps1*eps2, -eps2)
      int e2 = -inv.values[1];
      return {inv.values[0] * e2, e2};
    }
  }
  return {0, 0};
}

inline ClassLabel morin_label(int k, int n, const MorinInvariant& inv) {
  return make_label(morin_family(k), n, n, morin_signs_for(inv), k);
}

namespace detail {

/// Determinant over any commutative ring type by memoized cofactor expansion.
template <class Num>
Num ring_det(const std::vector<std::vector<Num>>& m, const Num& zero, const Num& one) {
  std::size_t n = m.size();
  if (n == 0) return one;
  std::size_t nmask = std::size_t{1} << n;
  std::vector<Num> cur(nmask, zero);
  cur[0] = one;
  for (std::size_t r = 0; r < n; ++r) {
    std::vector<Num> next(nmask, zero);
    for (std::size_t s = 0; s < nmask; ++s) {
      if (static_cast<std::size_t>(__builtin_popcountll(s)) != r + 1) continue;
      Num sum = zero;
      std::size_t idx = 0;
      for (std::size_t c = 0; c < n; ++c) {
        if (!(s >> c & 1)) continue;
        Num term = m[r][c] * cur[s & ~(std::size_t{1} << c)];
        if ((r + idx) % 2 == 1) sum = sum - term;
        else sum = sum + term;
        ++idx;
      }
      next[s] = sum;
    }
    cur = std::move(next);
  }
  return cur[nmask - 1];
}

/// Point evaluator for criteria at the origin of a jet.
struct OriginEval {
  using Num = Rat;
  Num value(const Poly& p) const { return p.constant_term(); }
  std::vector<Num> gradient(const Poly& p) const { return gradient_at_origin(p); }
  int sign(const Num& x) const { return sgn(x); }
  Num zero() const { return 0; }
  Num one() const { return 1; }
  std::string describe(const Num& x) const { return x.get_str(); }
};

}  // namespace detail

/// Evaluates the Morin criteria given the iterated derivatives
/// L[j] = eta^j lambda (j = 0..n) at a point supplied by `ev`.
/// `eta_eta_f1` is only consulted when n = 1.
template <class Eval>
MorinResult evaluate_morin(const std::vector<Poly>& L, int n, const Eval& ev,
                           const Poly* eta_eta_f1 = nullptr) {
  using Num = typename Eval::Num;
  MorinResult res;
  res.n = n;
  std::vector<Num> vals;
  for (const auto& p : L) vals.push_back(ev.value(p));
  res.criteria.emplace_back("lambda", ev.describe(vals[0]));
  if (ev.sign(vals[0]) != 0) {
    res.status = MorinStatus::regular;
    res.message = "lambda does not vanish: regular point";
    return res;
  }
  int k = 0;
  for (int j = 1; j <= n; ++j) {
    res.criteria.emplace_back("eta^" + std::to_string(j) + " lambda", ev.describe(vals[static_cast<std::size_t>(j)]));
    if (ev.sign(vals[static_cast<std::size_t>(j)]) != 0) {
      k = j;
      break;
    }
  }
  if (k == 0) {
    res.status = MorinStatus::degenerate;
    res.message = "not Morin (degenerate): eta^j lambda vanishes for all j <= n";
    return res;
  }
  res.k = k;
  res.eta_k_lambda_sign = ev.sign(vals[static_cast<std::size_t>(k)]);

  std::vector<std::vector<Num>> grads;
  for (int j = 0; j < (k == n ? n : k); ++j) grads.push_back(ev.gradient(L[static_cast<std::size_t>(j)]));

  bool full_rank = false;
  if (k == n) {
    Num d = detail::ring_det(grads, ev.zero(), ev.one());
    res.criteria.emplace_back("det grad(lambda..eta^" + std::to_string(n - 1) + " lambda)", ev.describe(d));
    int s = ev.sign(d);
    full_rank = s != 0;
    if (full_rank) res.grad_det_sign = s;
  } else {
    // rank k iff some k x k minor of the k x n gradient matrix is nonzero
    std::vector<int> cols(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) cols[static_cast<std::size_t>(i)] = i;
    while (!full_rank) {
      std::vector<std::vector<Num>> sub(static_cast<std::size_t>(k));
      for (int r = 0; r < k; ++r)
        for (int c : cols) sub[static_cast<std::size_t>(r)].push_back(grads[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]);
      if (ev.sign(detail::ring_det(sub, ev.zero(), ev.one())) != 0) full_rank = true;
      int i = k - 1;
      while (i >= 0 && cols[static_cast<std::size_t>(i)] == n - k + i) --i;
      if (i < 0) break;
      ++cols[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < k; ++j) cols[static_cast<std::size_t>(j)] = cols[static_cast<std::size_t>(j - 1)] + 1;
    }
    res.criteria.emplace_back("rank d(lambda..eta^" + std::to_string(k - 1) + " lambda)",
                              full_rank ? std::to_string(k) : "< " + std::to_string(k));
  }
  if (!full_rank) {
    res.status = MorinStatus::degenerate;
    res.message = "not Morin (degenerate): rank d(lambda,...,eta^" + std::to_string(k - 1) +
                  " lambda)(0) < " + std::to_string(k);
    return res;
  }
  if (n == 1) {
    if (!eta_eta_f1) fail(ErrorKind::precondition, "eta^2 f1 needed for n = 1");
    Num v = ev.value(*eta_eta_f1);
    res.criteria.emplace_back("eta^2 f1", ev.describe(v));
    res.fold_sign = ev.sign(v);
  }
  res.status = MorinStatus::morin;
  res.invariant = morin_invariant_for(k, n, res.eta_k_lambda_sign, res.grad_det_sign, res.fold_sign);
  res.label = morin_label(k, n, res.invariant);
  return res;
}

namespace detail {

inline MorinResult regular_result(int n) {
  MorinResult r;
  r.status = MorinStatus::regular;
  r.n = n;
  r.label = make_label(Family::regular, n, n, {0, 0});
  r.message = "df(0) has full rank";
  return r;
}

/// Iterated derivatives eta^j lambda for j = 0..n, each truncated to the
/// degree whose terms still influence values and gradients at 0.
inline std::vector<Poly> eta_tower(const Poly& lambda, const VecField& eta, int n) {
  std::vector<Poly> L;
  L.push_back(lambda.truncated(n));
  for (int j = 1; j <= n; ++j)
    L.push_back(dir_deriv(L.back(), eta, std::max(n - j, 0)));
  return L;
}

inline Poly eta_eta_first_component(const PolyMatrix& jac, const VecField& eta) {
  Poly eta_f1(jac.nvars());
  for (std::size_t i = 0; i < jac.cols(); ++i) eta_f1 += eta[i] * jac(0, i);
  return dir_deriv(eta_f1.truncated(1), eta, 0);
}

}  // namespace detail

/// Morin criteria at 0 using a caller-supplied null vector field. The field
/// must be nonzero at 0 and lie in ker df along the singular set; only the
/// conditions at 0 are checked here.
inline MorinResult try_recognize_morin_with(const MapGerm& f, const VecField& eta) {
  int n = f.src_dim();
  if (n != f.tgt_dim()) fail(ErrorKind::dimension, "Morin recognition needs n = m");
  if (static_cast<int>(eta.size()) != n) fail(ErrorKind::dimension, "null field length differs from n");
  auto a = analyze(f, n);
  if (a.corank0 == 0) return detail::regular_result(n);
  MorinResult bad;
  bad.n = n;
  if (a.corank0 >= 2) {
    bad.status = MorinStatus::not_corank_one;
    bad.message = "not corank one (corank " + std::to_string(a.corank0) + ")";
    return bad;
  }
  auto e0 = eta.at_origin();
  bool nonzero = false;
  for (const auto& x : e0) nonzero = nonzero || sgn(x) != 0;
  auto image = a.jacobian.at_origin() * e0;
  bool in_kernel = true;
  for (const auto& x : image) in_kernel = in_kernel && sgn(x) == 0;
  if (!nonzero || !in_kernel) fail(ErrorKind::precondition, "eta(0) must be a nonzero vector in ker df(0)");
  VecField jet;
  for (const auto& c : eta.components) jet.components.push_back(c.truncated(n - 1));
  auto L = detail::eta_tower(a.lambda, jet, n);
  Poly eef1 = n == 1 ? detail::eta_eta_first_component(a.jacobian, jet) : Poly(n);
  return evaluate_morin(L, n, detail::OriginEval{}, &eef1);
}

/// Morin criteria at 0 with the adjugate null field. Never throws for
/// non-Morin inputs; inspect status.
inline MorinResult try_recognize_morin(const MapGerm& f) {
  int n = f.src_dim();
  if (n != f.tgt_dim()) fail(ErrorKind::dimension, "Morin recognition needs n = m");
  auto a = analyze(f, n);
  if (a.corank0 == 0) return detail::regular_result(n);
  if (a.corank0 >= 2) {
    MorinResult bad;
    bad.n = n;
    bad.status = MorinStatus::not_corank_one;
    bad.message = "not corank one (corank " + std::to_string(a.corank0) + ")";
    return bad;
  }
  auto nf = null_field_from(a.jacobian, std::max(n - 1, 0));
  auto L = detail::eta_tower(a.lambda, nf.eta, n);
  Poly eef1 = n == 1 ? detail::eta_eta_first_component(a.jacobian, nf.eta) : Poly(n);
  return evaluate_morin(L, n, detail::OriginEval{}, &eef1);
}

inline MorinResult require_morin(MorinResult r) {
  switch (r.status) {
    case MorinStatus::morin:
    case MorinStatus::regular: return r;
    case MorinStatus::not_corank_one: fail(ErrorKind::not_corank_one, r.message);
    case MorinStatus::degenerate: fail(ErrorKind::degenerate, r.message);
  }
  return r;
}

/// Finds k and checks the rank condition. A regular germ comes back with
/// status regular and k = 0. Throws not_corank_one / degenerate.
inline MorinResult recognize_morin(const MapGerm& f) { return require_morin(try_recognize_morin(f)); }

inline MorinResult recognize_morin_with(const MapGerm& f, const VecField& eta) {
  return require_morin(try_recognize_morin_with(f, eta));
}

/// Invariants for a germ already known to be k-Morin.
inline MorinResult morin_invariants(const MapGerm& f, int k) {
  auto r = recognize_morin(f);
  if (r.status != MorinStatus::morin || r.k != k)
    fail(ErrorKind::precondition, "germ is not " + std::to_string(k) + "-Morin (found k = " + std::to_string(r.k) + ")");
  return r;
}

inline ClassLabel isotopy_class(const MapGerm& f) { return recognize_morin(f).label; }

/// Number of A-isotopy classes of k-Morin germs in C(n,n), by invariant shape.
inline int morin_class_count(int k, int n) {
  if (k < n) return k % 2 == 0 ? 2 : 1;
  return n % 4 == 0 ? 4 : 2;
}

}  // namespace germlab

#endif  // GERMLAB_MORIN_HPP
