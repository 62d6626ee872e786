// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "pathwl/complex.hpp"
#include "pathwl/graph.hpp"

namespace pathwl {

/// Path complex over simple paths of length <= max_dim.
///
/// Dimension p holds every simple path with p+1 vertices, oriented so the
/// first vertex is smaller than the last. Members are discovered by DFS from
/// each start vertex in increasing order, visiting neighbours in sorted order;
/// ids follow discovery order within each dimension.
///
/// Boundary of a p-path: the canonical forms of the single-vertex deletions
/// that remain walks in the graph (see BoundaryMode). Both end truncations are
/// always present, so the complex is truncation-closed.
///
/// Throws CapExceededError when the total member count would pass
/// `options.member_cap`.
HigherOrderComplex lift_path_complex(const SimpleGraph &g, int max_dim,
                                     const LiftOptions &options = {});

/// Clique (simplicial) complex: dimension p holds the (p+1)-cliques as sorted
/// vertex sets; boundaries are all facets.
HigherOrderComplex lift_clique_complex(const SimpleGraph &g, int max_dim,
                                       const LiftOptions &options = {});

/// Ring (cell) complex capped at dimension 2: vertices, edges and one 2-cell
/// per induced (chordless) cycle of length 3..max_ring. A 2-cell's boundary
/// is its edge set. Throws InputError when max_ring < 3.
HigherOrderComplex lift_ring_complex(const SimpleGraph &g, int max_ring,
                                     const LiftOptions &options = {});

/// Dispatch used by the CLI and the benchmark harness. `param` is max_dim for
/// path and simplex liftings and max_ring for cell liftings.
HigherOrderComplex lift(const SimpleGraph &g, ComplexKind kind, int param,
                        const LiftOptions &options = {});

}  // namespace pathwl
