#pragma once

#include "isolab/graph.hpp"

// Standard small graphs. Labels follow the usual conventions: K_{1,k} has
// center 0, P_n is the path 0-1-...-(n-1), C_n closes that path with (n-1,0).
namespace isolab::graphs {

Graph complete(int n);
Graph path(int n);
Graph cycle(int n);
Graph star(int leaves);
/// Triangle 0,1,2 plus pendant vertex 3 attached to 0.
Graph paw();

}  // namespace isolab::graphs
