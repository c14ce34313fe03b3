#pragma once

// Exact finite representations of the four classical spaces used throughout:
// c0 / l1 (SparseSeq), L1 / L-infinity (StepFunction), C[0,1] (PLFunction)
// and M[0,1] (Measure), with their norms and duality pairings.

#include "birkhoff/interval_set.hpp"
#include "birkhoff/measure.hpp"
#include "birkhoff/pl_function.hpp"
#include "birkhoff/rational.hpp"
#include "birkhoff/sparse_seq.hpp"
#include "birkhoff/step_function.hpp"
