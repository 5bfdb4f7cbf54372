#pragma once

// Twisted Hurwitz numbers by three independent models (transposition-sequence
// enumeration, twisted cut-and-join exponentiation, zonal closed form) plus
// ribbon-decomposition surface analysis.

#include "cutjoin.hpp"      // IWYU pragma: export
#include "enumeration.hpp"  // IWYU pragma: export
#include "jack.hpp"         // IWYU pragma: export
#include "numeric.hpp"      // IWYU pragma: export
#include "partition.hpp"    // IWYU pragma: export
#include "permutation.hpp"  // IWYU pragma: export
#include "pseries.hpp"      // IWYU pragma: export
#include "surgery.hpp"      // IWYU pragma: export
