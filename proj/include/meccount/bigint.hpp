#pragma once

#include <gmpxx.h>

namespace meccount {

// Exact arbitrary-precision counts. MEC counts overflow 64 bits already for
// modest caterpillars, so every counter speaks BigInt from the start.
using BigInt = mpz_class;

}  // namespace meccount
