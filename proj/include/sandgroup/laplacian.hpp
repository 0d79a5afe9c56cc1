#pragma once

#include "sandgroup/graph.hpp"
#include "sandgroup/matrix.hpp"

namespace sandgroup {

/// Degree on the diagonal, minus the edge multiplicity elsewhere.
IntMatrix laplacian(const MultiGraph& g);

/// Laplacian with row and column q removed.
IntMatrix reduced_laplacian(const MultiGraph& g, int q);

/// Matrix-tree count, det of the reduced Laplacian at vertex 0.
Integer spanning_tree_count(const MultiGraph& g);

}  // namespace sandgroup
