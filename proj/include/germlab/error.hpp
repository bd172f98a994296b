#ifndef GERMLAB_ERROR_HPP
#define GERMLAB_ERROR_HPP

#include <stdexcept>
#include <string>

namespace germlab {

enum class ErrorKind {
  dimension,       // nvars / shape mismatch
  index,           // variable index out of range
  not_corank_one,  // null field or Morin recognition on corank >= 2
  degenerate,      // criteria fail (rank condition, zero determinants)
  precondition,    // e.g. rank df(0) != 2 for sigma20
  parse,
  unrecognized,
  invalid_spec,
};

inline const char* to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::dimension: return "dimension error";
    case ErrorKind::index: return "index out of range";
    case ErrorKind::not_corank_one: return "not corank one";
    case ErrorKind::degenerate: return "degenerate";
    case ErrorKind::precondition: return "precondition violated";
    case ErrorKind::parse: return "parse error";
    case ErrorKind::unrecognized: return "unrecognized";
    case ErrorKind::invalid_spec: return "invalid spec";
  }
  return "error";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

}  // namespace germlab

#endif  // GERMLAB_ERROR_HPP
