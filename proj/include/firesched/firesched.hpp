#pragma once

// UAV wildfire suppression: analytic circular fire growth, two-part route
// chromosomes, schedule evaluation with deadline feasibility, a genetic
// optimizer, reference heuristics, an ODE/enumeration oracle, and a
// Monte-Carlo campaign runner.

#include "firesched/baselines.hpp"
#include "firesched/chromosome.hpp"
#include "firesched/fire_model.hpp"
#include "firesched/ga.hpp"
#include "firesched/geometry.hpp"
#include "firesched/montecarlo.hpp"
#include "firesched/oracle.hpp"
#include "firesched/plan_io.hpp"
#include "firesched/rng.hpp"
#include "firesched/scenario.hpp"
#include "firesched/scheduling.hpp"
#include "firesched/svg.hpp"
