#pragma once

#include <utility>
#include <vector>

#include "pgolay/core.hpp"

namespace pgolay {

/// Multiplicities of the nonzero differences generated inside the blocks:
/// counts[c-1] = number of ordered pairs (a, b), a != b, within a single
/// block with a - b = c (mod v), summed over blocks.
struct DifferenceMultiplicity {
    int v = 0;
    std::vector<int> counts;  // length v-1, difference c at counts[c-1]

    bool operator==(const DifferenceMultiplicity&) const = default;
};

DifferenceMultiplicity difference_multiplicities(int v, const std::vector<SubsetZv>& blocks);

/// True iff every nonzero difference occurs exactly lambda times.
bool is_sds(int v, const std::vector<SubsetZv>& blocks, long long lambda);

/// Verifies that (x, y) defines a periodic Golay pair. Runs the PAF
/// cancellation check and the SDS check (with lambda derived from the block
/// sizes) independently and insists they agree before constructing the pair.
/// Throws not_complementary (with the offending shift) or
/// parameter_infeasible (odd length > 1, mismatched moduli).
PeriodicGolayPair verify_periodic_golay_pair(const SubsetZv& x, const SubsetZv& y);
PeriodicGolayPair verify_periodic_golay_pair(const BinarySequence& a, const BinarySequence& b);

/// Canonical form of a pair of blocks under the elementary transforms:
/// independent cyclic shifts of each block, negation of each block
/// (e -> -e mod v), block swap, and multiplication of both blocks by a
/// common unit. Constant on orbits of that transform group and
/// idempotent. This is a deduplication key only; it deliberately does not
/// implement the literature's full equivalence classification, so callers
/// must label classes "elementary-inequivalent", never "inequivalent".
std::pair<SubsetZv, SubsetZv> elementary_canonical_form(const SubsetZv& x, const SubsetZv& y);

}  // namespace pgolay
