#pragma once

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace netgame {

// 0-based vertex index. File formats and CLI output use 1-based ids; the
// translation happens at those boundaries only.
using Vertex = int;

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Invalid user input: malformed graph, bad roles, out-of-range options.
struct ValidationError : Error {
  using Error::Error;
};

// Malformed input file; the message carries the location.
struct ParseError : ValidationError {
  using ValidationError::ValidationError;
};

// The game admits no monitor vertex with bounded payoff.
struct InfeasibleGameError : Error {
  using Error::Error;
};

// Internal numeric failure (root refinement, LP pivoting, ...).
struct NumericError : Error {
  using Error::Error;
};

// The three distinguished vertices of one attack scenario.
struct VertexRole {
  Vertex target = 0;
  Vertex attack = 0;
  Vertex monitor = 0;
};

// Nonnegative extended real: a finite value or +infinity. Infinity is a
// tagged state; callers branch on is_finite() before arithmetic, so no
// magnitude sentinel can leak into computations.
class ExtReal {
 public:
  ExtReal() = default;
  ExtReal(double v) : v_(v) {}

  static ExtReal infinity() {
    return ExtReal(std::numeric_limits<double>::infinity());
  }

  bool is_finite() const { return std::isfinite(v_); }

  // Finite value; throws when called on +infinity.
  double value() const {
    if (!is_finite()) throw NumericError("ExtReal: +inf has no finite value");
    return v_;
  }

  // IEEE view (+inf allowed); for comparisons and printing only.
  double raw() const { return v_; }

  friend bool operator==(ExtReal a, ExtReal b) { return a.v_ == b.v_; }
  friend bool operator!=(ExtReal a, ExtReal b) { return a.v_ != b.v_; }
  friend bool operator<(ExtReal a, ExtReal b) { return a.v_ < b.v_; }
  friend bool operator<=(ExtReal a, ExtReal b) { return a.v_ <= b.v_; }
  friend bool operator>(ExtReal a, ExtReal b) { return a.v_ > b.v_; }
  friend bool operator>=(ExtReal a, ExtReal b) { return a.v_ >= b.v_; }

 private:
  double v_ = 0.0;
};

}  // namespace netgame
