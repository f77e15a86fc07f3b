#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>

namespace linklab {

using cplx = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Raised when a computation cannot produce a meaningful result
/// (as opposed to a caller contract violation, which throws
/// std::invalid_argument). The CLI maps this to exit code 2.
class numeric_error : public std::runtime_error {
 public:
  explicit numeric_error(const std::string& what) : std::runtime_error(what) {}
};

inline void require(bool cond, const char* msg) {
  if (!cond) throw std::invalid_argument(msg);
}

inline bool is_power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

/// Wrap an angle to (-pi, pi].
inline double wrap_pm_pi(double a) {
  a = std::remainder(a, kTwoPi);  // (-pi, pi] up to the -pi boundary
  if (a <= -kPi) a += kTwoPi;
  return a;
}

/// Wrap a BPSK-ambiguous phase error to (-pi/2, pi/2].
inline double wrap_mod_pi(double a) {
  a -= kPi * std::round(a / kPi);
  if (a <= -kPi / 2) a += kPi;
  return a;
}

inline double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }
inline double linear_to_db(double x) { return 10.0 * std::log10(x); }

}  // namespace linklab
