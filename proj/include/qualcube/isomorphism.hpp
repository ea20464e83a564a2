#pragma once

#include "qualcube/dataset.hpp"

namespace qualcube::rdf {

// True iff one bijection over blank-node labels maps a onto b exactly,
// graph components included. Exhaustive backtracking with signature
// pruning; meant as a test oracle for small datasets, not a canonicalizer.
bool isomorphic(const QuadDataset& a, const QuadDataset& b);

}  // namespace qualcube::rdf
