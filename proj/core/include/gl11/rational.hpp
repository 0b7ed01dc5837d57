#pragma once

#include <gmpxx.h>

#include <string>

namespace gl11 {

using Q = mpq_class;
using Z = mpz_class;

// Parses "3", "-3/2" or a terminating decimal such as "0.25" or "-1.5e-2".
Q parse_q(const std::string& text);

std::string to_string(const Q& x);

Z floor_q(const Q& x);

// x - m * floor(x / m), always in [0, m) for m > 0.
Q mod_q(const Q& x, const Q& m);

bool is_integer(const Q& x);

// Converts an integral rational to long; throws if not integral or too big.
long to_long(const Q& x);

double to_double(const Q& x);

}  // namespace gl11
