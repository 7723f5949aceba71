#ifndef ADER1D_ADER1D_HPP
#define ADER1D_ADER1D_HPP

// One-dimensional hyperbolic balance-law solvers: fully discrete one-step
// finite volume schemes of orders 2-5 built on GRP-based reconstructions
// (central and nonlinear variants), a WENO comparison reconstruction, and a
// fully discrete DG scheme, all sharing a locally implicit space-time
// predictor and classical Riemann solvers at time integration points.

#include "ader1d/config.hpp"
#include "ader1d/csv.hpp"
#include "ader1d/driver.hpp"
#include "ader1d/errors.hpp"
#include "ader1d/grid.hpp"
#include "ader1d/models.hpp"
#include "ader1d/polynomial.hpp"
#include "ader1d/predictor.hpp"
#include "ader1d/quadrature.hpp"
#include "ader1d/reconstruction.hpp"
#include "ader1d/riemann.hpp"
#include "ader1d/schemes.hpp"
#include "ader1d/testcases.hpp"

#endif
