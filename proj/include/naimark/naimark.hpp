#pragma once

// Umbrella header: the two-by-two Lorentz representation, Wigner little
// groups, polarization optics, Poincare-sphere geometry, Monte Carlo and
// outer-product validators, and the pipeline DSL.

#include "naimark/errors.hpp"
#include "naimark/lorentz.hpp"
#include "naimark/mat2.hpp"
#include "naimark/oracle.hpp"
#include "naimark/pipeline.hpp"
#include "naimark/polarization.hpp"
#include "naimark/sphere.hpp"
#include "naimark/wigner.hpp"
