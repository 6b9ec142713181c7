#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace k3lat {

// Expression templates off: arithmetic results are plain values, so they
// behave in initializer lists, ternaries, and auto deduction.
using Int = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                          boost::multiprecision::et_off>;
using Rat = boost::multiprecision::number<boost::multiprecision::cpp_rational_backend,
                                          boost::multiprecision::et_off>;

// Base class for every contract violation raised by the library.
// The CLI maps these to exit code 3.
struct ContractViolation : std::runtime_error {
  explicit ContractViolation(const std::string& msg) : std::runtime_error(msg) {}
};

struct DegenerateLattice : ContractViolation {
  explicit DegenerateLattice(const std::string& msg) : ContractViolation(msg) {}
};

struct SquareParameter : ContractViolation {
  explicit SquareParameter(const std::string& msg) : ContractViolation(msg) {}
};

struct NotSquareTwo : ContractViolation {
  explicit NotSquareTwo(const std::string& msg) : ContractViolation(msg) {}
};

struct AmbientMismatch : ContractViolation {
  explicit AmbientMismatch(const std::string& msg) : ContractViolation(msg) {}
};

inline int sign_of(const Int& x) { return x.sign(); }

// floor(sqrt(n)) for n >= 0.
inline Int isqrt(const Int& n) {
  if (n < 0) throw ContractViolation("isqrt of negative number");
  return boost::multiprecision::sqrt(n);
}

inline bool is_perfect_square(const Int& n) {
  if (n < 0) return false;
  Int r = isqrt(n);
  return r * r == n;
}

// Floor division (rounds toward -infinity), q may be negative.
inline Int floor_div(const Int& p, const Int& q) {
  if (q == 0) throw ContractViolation("floor_div by zero");
  Int d = p / q, r = p % q;
  if (r != 0 && ((r < 0) != (q < 0))) d -= 1;
  return d;
}

// Nonnegative residue of p mod m, m > 0.
inline Int mod_pos(const Int& p, const Int& m) {
  Int r = p % m;
  if (r < 0) r += m;
  return r;
}

inline Int gcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }

}  // namespace k3lat
