#ifndef GERMLAB_LABEL_HPP
#define GERMLAB_LABEL_HPP

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "germlab/error.hpp"
#include "germlab/germ.hpp"

namespace germlab {

enum class Family {
  regular,
  fold,
  cusp,
  swallowtail,
  butterfly,
  morin,  // k >= 5
  lips,
  beaks,
  planar_swallowtail,
  whitney_umbrella,
  s1_plus,
  s1_minus,
  sigma20_hyp,
  sigma20_elli,
  unrecognized,
};

inline std::string family_name(Family f, int k = 0) {
  switch (f) {
    case Family::regular: return "regular";
    case Family::fold: return "fold";
    case Family::cusp: return "cusp";
    case Family::swallowtail: return "swallowtail";
    case Family::butterfly: return "butterfly";
    case Family::morin: return "morin-" + std::to_string(k);
    case Family::lips: return "lips";
    case Family::beaks: return "beaks";
    case Family::planar_swallowtail: return "planar-swallowtail";
    case Family::whitney_umbrella: return "whitney-umbrella";
    case Family::s1_plus: return "S1+";
    case Family::s1_minus: return "S1-";
    case Family::sigma20_hyp: return "sigma20-hyp";
    case Family::sigma20_elli: return "sigma20-elli";
    case Family::unrecognized: return "unrecognized";
  }
  return "unrecognized";
}

inline Family morin_family(int k) {
  switch (k) {
    case 1: return Family::fold;
    case 2: return Family::cusp;
    case 3: return Family::swallowtail;
    case 4: return Family::butterfly;
    default: return Family::morin;
  }
}

/// Sign slot of a label: +1, -1, or 0 when the sign is not an invariant.
using SignPair = std::array<int, 2>;

struct ClassLabel {
  Family family = Family::unrecognized;
  int k = 0;  // Morin order, 0 for non-Morin families
  int src_dim = 0;
  int tgt_dim = 0;
  SignPair signs{0, 0};
  MapGerm normal_form;

  std::string name() const { return family_name(family, k); }

  /// "butterfly eps1=-1 eps2=+1"; irrelevant signs are omitted.
  std::string text() const {
    std::string s = name();
    for (int i = 0; i < 2; ++i)
      if (signs[static_cast<std::size_t>(i)] != 0)
        s += " eps" + std::to_string(i + 1) + "=" + (signs[static_cast<std::size_t>(i)] > 0 ? "+1" : "-1");
    return s;
  }

  friend bool operator==(const ClassLabel& a, const ClassLabel& b) {
    return a.family == b.family && a.k == b.k && a.src_dim == b.src_dim && a.tgt_dim == b.tgt_dim &&
           a.signs == b.signs;
  }
  friend bool operator<(const ClassLabel& a, const ClassLabel& b) {
    auto key = [](const ClassLabel& l) {
      return std::tuple(static_cast<int>(l.family), l.k, l.src_dim, l.tgt_dim, l.signs[0], l.signs[1]);
    };
    return key(a) < key(b);
  }
};

namespace normal_forms {

inline Poly var(int n, int i) { return Poly::variable(n, i); }

/// The k-Morin representative in n variables with signs (e1, e2); for k = 1
/// only e1 is used: (e1*x1^2, x2, ..., xn).
inline MapGerm morin(int k, int n, int e1, int e2 = 1) {
  if (k < 1 || k > n) fail(ErrorKind::invalid_spec, "Morin normal form needs 1 <= k <= n");
  if (n > max_vars) fail(ErrorKind::invalid_spec, "too many variables");
  std::vector<Poly> c;
  Poly x1 = var(n, 0);
  if (k == 1) {
    c.push_back(x1 * x1 * Rat(e1));
    for (int i = 1; i < n; ++i) c.push_back(var(n, i));
    return MapGerm(n, std::move(c));
  }
  Poly inner = var(n, 1) * x1 * Rat(e2);
  for (int i = 3; i <= k; ++i) inner += var(n, i - 1) * x1.pow(i - 1);
  inner += x1.pow(k + 1);
  c.push_back(inner * Rat(e1));
  c.push_back(var(n, 1) * Rat(e2));
  for (int i = 2; i < n; ++i) c.push_back(var(n, i));
  return MapGerm(n, std::move(c));
}

inline MapGerm identity(int n, int m) {
  std::vector<Poly> c;
  for (int i = 0; i < m; ++i) c.push_back(i < n ? var(n, i) : Poly(n));
  return MapGerm(n, std::move(c));
}

inline MapGerm lips(int e) {
  Poly x1 = var(2, 0), x2 = var(2, 1);
  return MapGerm(2, {x1 * (x1 * x1 + x2 * x2) * Rat(e), x2});
}

inline MapGerm beaks(int e) {
  Poly x1 = var(2, 0), x2 = var(2, 1);
  return MapGerm(2, {x1 * (x1 * x1 - x2 * x2) * Rat(e), x2});
}

inline MapGerm planar_swallowtail(int e) {
  Poly x1 = var(2, 0), x2 = var(2, 1);
  return MapGerm(2, {x1 * x2 * Rat(e) + x1.pow(4), x2});
}

inline MapGerm whitney_umbrella() {
  Poly x1 = var(2, 0), x2 = var(2, 1);
  return MapGerm(2, {x1 * x1, x1 * x2, x2});
}

/// (x1^2, e*x1*(x1^2 + plus_minus*x2^2), x2).
inline MapGerm s1(int plus_minus, int e) {
  Poly x1 = var(2, 0), x2 = var(2, 1);
  return MapGerm(2, {x1 * x1, x1 * (x1 * x1 + x2 * x2 * Rat(plus_minus)) * Rat(e), x2});
}

inline MapGerm sigma20_hyp(int e1) {
  Poly x1 = var(4, 0), x2 = var(4, 1), x3 = var(4, 2), x4 = var(4, 3);
  return MapGerm(4, {x1 * x1 + x2 * x3, x2 * x2 + x1 * x4 * Rat(e1), x3, x4});
}

inline MapGerm sigma20_elli(int e1, int e2) {
  Poly x1 = var(4, 0), x2 = var(4, 1), x3 = var(4, 2), x4 = var(4, 3);
  return MapGerm(4, {x1 * x1 - x2 * x2 + x1 * x3 * Rat(e1) + x2 * x4,
                     x1 * x2 * Rat(e1) + x1 * x4 * Rat(e1) - x2 * x3, x3, x4 * Rat(e2)});
}

}  // namespace normal_forms

/// Label with the representative normal form attached.
inline ClassLabel make_label(Family family, int n, int m, SignPair signs, int k = 0) {
  ClassLabel l;
  l.family = family;
  l.k = k;
  l.src_dim = n;
  l.tgt_dim = m;
  l.signs = signs;
  auto e = [&](int i) { return signs[static_cast<std::size_t>(i)] == 0 ? 1 : signs[static_cast<std::size_t>(i)]; };
  switch (family) {
    case Family::regular: l.normal_form = normal_forms::identity(n, m); break;
    case Family::fold:
    case Family::cusp:
    case Family::swallowtail:
    case Family::butterfly:
    case Family::morin: l.normal_form = normal_forms::morin(k, n, e(0), e(1)); break;
    case Family::lips: l.normal_form = normal_forms::lips(e(0)); break;
    case Family::beaks: l.normal_form = normal_forms::beaks(e(0)); break;
    case Family::planar_swallowtail: l.normal_form = normal_forms::planar_swallowtail(e(0)); break;
    case Family::whitney_umbrella: l.normal_form = normal_forms::whitney_umbrella(); break;
    case Family::s1_plus: l.normal_form = normal_forms::s1(+1, e(0)); break;
    case Family::s1_minus: l.normal_form = normal_forms::s1(-1, e(0)); break;
    case Family::sigma20_hyp: l.normal_form = normal_forms::sigma20_hyp(e(0)); break;
    case Family::sigma20_elli: l.normal_form = normal_forms::sigma20_elli(e(0), e(1)); break;
    case Family::unrecognized: break;
  }
  return l;
}

/// Claimed label as typed by a user, e.g. "butterfly eps1=-1 eps2=-1",
/// "cusp ε₁=+1", "fold". Signs that are not given stay nullopt.
struct ClaimedLabel {
  std::string family;
  std::array<std::optional<int>, 2> signs;
};

inline ClaimedLabel parse_claimed_label(std::string_view text) {
  std::string s(text);
  // Normalize unicode spellings to ASCII.
  auto replace_all = [&](const std::string& from, const std::string& to) {
    for (std::size_t p = s.find(from); p != std::string::npos; p = s.find(from, p + to.size()))
      s.replace(p, from.size(), to);
  };
  replace_all("−", "-");  // minus sign
  replace_all("ε₁", "eps1");
  replace_all("ε₂", "eps2");
  replace_all("ε", "eps");
  replace_all("±", "+-");
  replace_all("Σ²⁰", "sigma20");
  replace_all("⁺", "+");
  replace_all("⁻", "-");

  ClaimedLabel out;
  std::size_t pos = 0;
  auto next_token = [&]() -> std::string {
    while (pos < s.size() && (s[pos] == ' ' || s[pos] == ',' || s[pos] == '\t')) ++pos;
    std::size_t start = pos;
    while (pos < s.size() && s[pos] != ' ' && s[pos] != ',' && s[pos] != '\t') ++pos;
    return s.substr(start, pos - start);
  };
  out.family = next_token();
  if (out.family.empty()) fail(ErrorKind::parse, "empty label");
  for (auto& ch : out.family)
    if (ch >= 'A' && ch <= 'Z' && out.family.rfind("S1", 0) != 0) ch = static_cast<char>(ch - 'A' + 'a');
  if (out.family == "s1+") out.family = "S1+";
  if (out.family == "s1-") out.family = "S1-";
  for (std::string tok = next_token(); !tok.empty(); tok = next_token()) {
    auto eq = tok.find('=');
    if (eq == std::string::npos) fail(ErrorKind::parse, "expected epsN=+-1 in label, got '" + tok + "'");
    std::string key = tok.substr(0, eq), val = tok.substr(eq + 1);
    int slot;
    if (key == "eps1" || key == "e1" || key == "eps") slot = 0;
    else if (key == "eps2" || key == "e2") slot = 1;
    else fail(ErrorKind::parse, "unknown sign key '" + key + "'");
    int v;
    if (val == "+1" || val == "1" || val == "+") v = 1;
    else if (val == "-1" || val == "-") v = -1;
    else fail(ErrorKind::parse, "sign must be +1 or -1, got '" + val + "'");
    out.signs[static_cast<std::size_t>(slot)] = v;
  }
  return out;
}

/// Human-readable differences between a claim and a computed label; empty
/// when they agree. Every sign relevant to the computed label must be given.
inline std::vector<std::string> label_diff(const ClaimedLabel& claim, const ClassLabel& actual) {
  std::vector<std::string> diff;
  if (claim.family != actual.name())
    diff.push_back("family: claimed " + claim.family + ", computed " + actual.name());
  for (std::size_t i = 0; i < 2; ++i) {
    std::string key = "eps" + std::to_string(i + 1);
    int a = actual.signs[i];
    const auto& c = claim.signs[i];
    auto show = [](int v) { return v > 0 ? std::string("+1") : v < 0 ? std::string("-1") : std::string("irrelevant"); };
    if (a == 0 && c) diff.push_back(key + ": claimed " + show(*c) + ", computed irrelevant");
    else if (a != 0 && !c) diff.push_back(key + ": not given, computed " + show(a));
    else if (a != 0 && *c != a) diff.push_back(key + ": claimed " + show(*c) + ", computed " + show(a));
  }
  return diff;
}

}  // namespace germlab

#endif  // GERMLAB_LABEL_HPP
