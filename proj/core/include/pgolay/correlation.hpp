#pragma once

#include <vector>

#include "pgolay/core.hpp"

namespace pgolay {

/// Periodic autocorrelation values; values[s] = PAF_A(s) for s in [0, v).
struct PafVector {
    int v = 0;
    std::vector<int> values;
};

/// Nonperiodic autocorrelation values; values[s] = NAF_A(s) for s in [0, v).
/// NAF(s) vanishes for s >= v and is not stored.
struct NafVector {
    int v = 0;
    std::vector<int> values;
};

PafVector paf(const BinarySequence& a);
NafVector naf(const BinarySequence& a);

/// Squared DFT magnitudes |sum_j a_j w^(jk)|^2 for k = 0 .. floor(v/2),
/// w = exp(2*pi*i/v). The upper half of the spectrum mirrors this one.
std::vector<double> psd(const BinarySequence& a);

/// True iff psd[k] <= 2v + slack for every k in [1, floor(v/2)].
bool psd_test(const BinarySequence& a, double slack = 1e-6);

}  // namespace pgolay
