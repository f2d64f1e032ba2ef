#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace coulomb {

/// Exact rational scalar. All engine arithmetic is tolerance-free.
using Scalar = mpq_class;

inline Scalar scalar_of(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("scalar: zero denominator");
    Scalar q(num, den);
    q.canonicalize();
    return q;
}

std::string scalar_to_string(const Scalar& q);

/// Parses "p" or "p/q" with optional sign. Throws on malformed input.
Scalar scalar_parse(const std::string& text);

}  // namespace coulomb
