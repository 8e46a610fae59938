#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace hjj {

using Scalar = mpq_class;

/// Parses "p" or "p/q" (optional sign, decimal digits only) into canonical form.
/// Throws InvalidInput on anything else, including a zero denominator.
Scalar parse_scalar(std::string_view text);

/// Canonical text: "p" for integers, "p/q" otherwise.
std::string to_string(const Scalar& x);

inline Scalar make_scalar(long num, long den = 1) {
    Scalar q(num, den);
    q.canonicalize();
    return q;
}

}  // namespace hjj
