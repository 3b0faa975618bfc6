// distrecon.hpp - umbrella header.

#ifndef DISTRECON_DISTRECON_HPP
#define DISTRECON_DISTRECON_HPP

#include "distrecon/analysis.hpp"
#include "distrecon/error.hpp"
#include "distrecon/experiment.hpp"
#include "distrecon/generators.hpp"
#include "distrecon/graph.hpp"
#include "distrecon/oracle.hpp"
#include "distrecon/reconstruct.hpp"
#include "distrecon/rng.hpp"

#endif  // DISTRECON_DISTRECON_HPP
