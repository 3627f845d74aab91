#pragma once

#include "analysis.hpp"
#include "bench.hpp"
#include "crown.hpp"
#include "error.hpp"
#include "generate.hpp"
#include "graph.hpp"
#include "graph_io.hpp"
#include "kernel.hpp"
#include "oracle.hpp"
#include "packing.hpp"
#include "solver.hpp"
