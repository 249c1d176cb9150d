/**
 * Umbrella header: first discrete homology of graphs over Z/2 by the
 * cellular, edge-graph and cubical methods, plus generators and the
 * benchmark harness.
 */
#pragma once

#include "dhomology/bench.hpp"
#include "dhomology/cellular.hpp"
#include "dhomology/cubical.hpp"
#include "dhomology/cycles.hpp"
#include "dhomology/edge_graph.hpp"
#include "dhomology/errors.hpp"
#include "dhomology/generators.hpp"
#include "dhomology/gf2_matrix.hpp"
#include "dhomology/graph.hpp"
