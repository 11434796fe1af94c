#pragma once

#include "perisys/rational.hpp"

namespace perisys {

/// Nonzero real number stored as a sign and the natural log of its magnitude.
/// Products and quotients never overflow, which makes this the companion
/// representation for trajectories whose exact values grow without bound.
struct SignedLog {
  int sign = 1;        // +1 or -1
  double logmag = 0.0; // ln|value|

  friend bool operator==(const SignedLog&, const SignedLog&) = default;
};

enum class SlOp { mul, div };

SignedLog sl_combine(SlOp op, const SignedLog& u, const SignedLog& v);

inline SignedLog operator*(const SignedLog& u, const SignedLog& v) { return sl_combine(SlOp::mul, u, v); }
inline SignedLog operator/(const SignedLog& u, const SignedLog& v) { return sl_combine(SlOp::div, u, v); }

/// Converts an exact rational; throws ZeroValue for 0.
///
/// The log magnitude is evaluated from the top 64 bits of numerator and
/// denominator plus their bit lengths, so arbitrarily large integers never pass
/// through a floating-point conversion. Values within a factor of two of ±1 go
/// through log1p of the exact offset |r| - 1 to keep relative accuracy near 0.
SignedLog to_signed_log(const ExactRational& r);

}  // namespace perisys
