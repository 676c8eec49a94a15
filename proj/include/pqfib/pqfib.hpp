#pragma once

#include "pqfib/fourier.hpp"
#include "pqfib/gauss_hermite.hpp"
#include "pqfib/generating_functions.hpp"
#include "pqfib/hypergeometric.hpp"
#include "pqfib/polynomial.hpp"
#include "pqfib/polynomials.hpp"
#include "pqfib/pq_arithmetic.hpp"
#include "pqfib/scalar.hpp"
#include "pqfib/series.hpp"
#include "pqfib/verify.hpp"

namespace pqfib {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace pqfib
