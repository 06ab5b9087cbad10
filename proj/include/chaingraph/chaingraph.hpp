#pragma once

// Umbrella header for the chaingraph library.

#include "chaingraph/rational.hpp"
#include "chaingraph/quadratic.hpp"
#include "chaingraph/graph.hpp"
#include "chaingraph/enumerate.hpp"
#include "chaingraph/exact_matrix.hpp"
#include "chaingraph/spectrum.hpp"
#include "chaingraph/staircase.hpp"
#include "chaingraph/patterns.hpp"
#include "chaingraph/downer.hpp"
#include "chaingraph/search.hpp"
