#ifndef GERMLAB_RATIONAL_HPP
#define GERMLAB_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>

#include "germlab/error.hpp"

namespace germlab {

/// Exact rational. GMP keeps it canonical (reduced, positive denominator)
/// as long as every value is built through the helpers below or arithmetic.
using Rat = mpq_class;
using Int = mpz_class;

inline int sign(const Rat& r) { return sgn(r); }

inline bool is_zero(const Rat& r) { return sgn(r) == 0; }

/// Parses "17", "-3", "5/7", "-10/4". Throws ErrorKind::parse on junk.
inline Rat parse_rat(std::string_view text) {
  std::string s(text);
  if (s.empty()) fail(ErrorKind::parse, "empty rational literal");
  auto slash = s.find('/');
  auto check_int = [&](const std::string& part) {
    std::size_t i = (!part.empty() && (part[0] == '-' || part[0] == '+')) ? 1 : 0;
    if (i >= part.size()) fail(ErrorKind::parse, "bad rational literal '" + s + "'");
    for (; i < part.size(); ++i)
      if (part[i] < '0' || part[i] > '9')
        fail(ErrorKind::parse, "bad rational literal '" + s + "'");
  };
  std::string num = s.substr(0, slash);
  if (!num.empty() && num[0] == '+') num.erase(0, 1);
  check_int(num);
  Rat r;
  if (slash == std::string::npos) {
    r = Rat(Int(num, 10));
  } else {
    std::string den = s.substr(slash + 1);
    check_int(den);
    Int d(den, 10);
    if (d == 0) fail(ErrorKind::parse, "zero denominator in '" + s + "'");
    r = Rat(Int(num, 10), d);
    r.canonicalize();
  }
  return r;
}

inline std::string to_string(const Rat& r) { return r.get_str(); }

/// Fixed-point decimal rendering, truncated toward -inf at `digits` places.
inline std::string to_decimal(const Rat& r, int digits = 15) {
  Int scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  Int scaled_num = r.get_num() * scale;
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), scaled_num.get_mpz_t(), r.get_den().get_mpz_t());
  bool neg = q < 0;
  Int mag = neg ? Int(-q) : q;
  std::string body = mag.get_str();
  if (digits > 0) {
    if (static_cast<int>(body.size()) <= digits)
      body.insert(0, static_cast<std::size_t>(digits + 1 - static_cast<int>(body.size())), '0');
    body.insert(body.size() - static_cast<std::size_t>(digits), ".");
  }
  return (neg ? "-" : "") + body;
}

inline double to_double(const Rat& r) { return r.get_d(); }

/// Exact square root when r is the square of a rational.
inline bool rational_sqrt(const Rat& r, Rat& out) {
  if (sgn(r) < 0) return false;
  if (!mpz_perfect_square_p(r.get_num().get_mpz_t()) ||
      !mpz_perfect_square_p(r.get_den().get_mpz_t()))
    return false;
  Int n, d;
  mpz_sqrt(n.get_mpz_t(), r.get_num().get_mpz_t());
  mpz_sqrt(d.get_mpz_t(), r.get_den().get_mpz_t());
  out = Rat(n, d);
  out.canonicalize();
  return true;
}

}  // namespace germlab

#endif  // GERMLAB_RATIONAL_HPP
