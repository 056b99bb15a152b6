/**
 * Umbrella header.
 */
#ifndef BETTI_THERMO_HPP
#define BETTI_THERMO_HPP

#include "cech.hpp"
#include "complex.hpp"
#include "density.hpp"
#include "homology.hpp"
#include "io.hpp"
#include "limits.hpp"
#include "metric.hpp"
#include "miniball.hpp"
#include "neighbor_grid.hpp"
#include "point_cloud.hpp"
#include "pointproc.hpp"
#include "records.hpp"
#include "replicates.hpp"
#include "rng.hpp"

#endif
