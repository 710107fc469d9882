#pragma once

#include "tdats/diagram.hpp"

namespace tdats {

/// q-Wasserstein distance between the dim-p points of two diagrams under the
/// L-infinity ground metric, with diagonal projections available for
/// unmatched points.  Solved exactly via optimal assignment.
double wasserstein(const PersistenceDiagram& a, const PersistenceDiagram& b, int q, int dim);

/// Bottleneck distance (the q = infinity limit): minimal over matchings of
/// the largest matched cost.  Exact on the candidate cost set.
double bottleneck(const PersistenceDiagram& a, const PersistenceDiagram& b, int dim);

}  // namespace tdats
