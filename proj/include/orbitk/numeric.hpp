#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace orbitk {

using Int = mpz_class;
using Rat = mpq_class;

/// Error with a stable machine-readable code ("arity_mismatch",
/// "not_divisible", "not_symmetric", "resource_cap", ...).  The CLI maps
/// "resource_cap" to exit code 2 and everything else to exit code 1.
class Error : public std::runtime_error {
public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(message), code_(std::move(code)) {}

  const std::string& code() const { return code_; }

private:
  std::string code_;
};

inline Rat rat_from_string(const std::string& s) {
  Rat q;
  if (q.set_str(s, 10) != 0) throw Error("parse", "bad rational: " + s);
  q.canonicalize();
  return q;
}

inline std::string rat_to_string(const Rat& q) { return q.get_str(); }

}  // namespace orbitk
