#pragma once

#include <gmpxx.h>

#include <string>

#include "errors.hpp"

namespace schubert {

using Integer = mpz_class;
using Rational = mpq_class;

inline std::string to_string(const Integer& z) { return z.get_str(); }

inline std::string to_string(const Rational& q) { return q.get_str(); }

inline Integer to_integer(const Rational& q, const char* context) {
    if (q.get_den() != 1)
        throw InternalError(std::string(context) + ": non-integral value " + q.get_str());
    return q.get_num();
}

} // namespace schubert
