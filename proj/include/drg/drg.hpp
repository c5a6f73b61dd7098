#ifndef DRG_DRG_HPP
#define DRG_DRG_HPP

// Umbrella header for the whole library.

#include "automorphisms.hpp"
#include "catalog.hpp"
#include "error.hpp"
#include "expansion.hpp"
#include "feasibility.hpp"
#include "graph.hpp"
#include "imprimitive.hpp"
#include "intersection_array.hpp"
#include "json_io.hpp"
#include "motion_bounds.hpp"
#include "numeric.hpp"
#include "parameters.hpp"
#include "spectrum.hpp"
#include "tradeoff.hpp"
#include "tridiagonal_eigen.hpp"
#include "verify.hpp"

#endif  // DRG_DRG_HPP
