#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace ballbound {

/// Exact arbitrary-precision integer.
using Int = mpz_class;

/// Exact rational, always canonical (reduced, positive denominator).
using Rational = mpq_class;

/// Number of binary digits of |n|.  By convention bit_length(0) = 1, so the
/// value is never zero in a multiplicative position of a bound formula.
int bit_length(const Int& n);

Int ipow(const Int& base, unsigned long exp);

/// 2^exp as an Int; throws std::overflow_error when exp does not fit a
/// hardware word (such values cannot be materialized anyway).
Int pow2(const Int& exp);

std::string to_string(const Rational& q);
Rational rational_from_string(const std::string& text);

/// mantissa * 2^exponent2 with the mantissa odd; the exact value of a
/// radius^2 whose exponent may be far too large to materialize.
struct PowScaled {
    Int mantissa;   // odd, positive
    Int exponent2;  // >= 0

    PowScaled() : mantissa(0), exponent2(0) {}
    PowScaled(Int m, Int e);  // normalizes: factors all 2s of m into e

    bool is_zero() const { return mantissa == 0; }
    /// Materializes the exact integer; throws std::overflow_error when the
    /// exponent is impractically large.
    Int value() const;
    double log2() const;
    std::string to_string() const;  // "m*2^e"
};

/// Exact three-way comparison of a*2^x vs b*2^y without materializing the
/// shifts (bit-length banding decides once |x-y| exceeds the mantissa size).
int compare(const PowScaled& a, const PowScaled& b);

/// Exact comparison of a rational against mantissa*2^exponent2.
int compare(const Rational& q, const PowScaled& b);

inline bool operator==(const PowScaled& a, const PowScaled& b) { return compare(a, b) == 0; }
inline bool operator<=(const PowScaled& a, const PowScaled& b) { return compare(a, b) <= 0; }

}  // namespace ballbound
