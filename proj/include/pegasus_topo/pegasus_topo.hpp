#pragma once

#include "pegasus_topo/analysis.hpp"
#include "pegasus_topo/chimera.hpp"
#include "pegasus_topo/coords.hpp"
#include "pegasus_topo/edge.hpp"
#include "pegasus_topo/errors.hpp"
#include "pegasus_topo/graph.hpp"
#include "pegasus_topo/io.hpp"
#include "pegasus_topo/pegasus.hpp"
#include "pegasus_topo/render.hpp"
