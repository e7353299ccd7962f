#pragma once

// Umbrella header.

#include "chebconv/binom_triangle.hpp"
#include "chebconv/chebyshev.hpp"
#include "chebconv/contfrac.hpp"
#include "chebconv/errors.hpp"
#include "chebconv/exact.hpp"
#include "chebconv/identities.hpp"
#include "chebconv/io.hpp"
#include "chebconv/ratfunc.hpp"
#include "chebconv/surd.hpp"
