#pragma once

#include <vector>

#include "pgolay/core.hpp"

namespace pgolay {

/// A subgroup of the units of Z_v, acting on Z_v by multiplication.
class UnitSubgroup {
public:
    UnitSubgroup(int v, std::vector<int> elements);  // elements must already be closed

    int modulus() const { return v_; }
    int order() const { return static_cast<int>(elements_.size()); }
    const std::vector<int>& elements() const { return elements_; }

    bool operator==(const UnitSubgroup&) const = default;

private:
    int v_;
    std::vector<int> elements_;
};

/// The partition of all of Z_v into H-orbits. Non-units (0 and elements
/// sharing a factor with v) get orbits too; the fixed points of H show up
/// in published index sets, so they must be enumerable.
/// Each orbit's canonical representative is its smallest element, and
/// orbits are listed in increasing representative order.
class OrbitTable {
public:
    OrbitTable(UnitSubgroup subgroup, std::vector<SubsetZv> orbits, std::vector<int> rep_of);

    int modulus() const { return subgroup_.modulus(); }
    const UnitSubgroup& subgroup() const { return subgroup_; }
    const std::vector<SubsetZv>& orbits() const { return orbits_; }
    int representative_of(int element) const { return rep_of_[static_cast<std::size_t>(element)]; }

    /// Index into orbits() for a canonical representative; throws
    /// not_a_representative for anything else.
    int orbit_index_of(int rep) const;

private:
    UnitSubgroup subgroup_;
    std::vector<SubsetZv> orbits_;
    std::vector<int> rep_of_;        // element -> smallest element of its orbit
    std::vector<int> orbit_index_;   // element -> orbit position, -1 if not a rep
};

/// Smallest subgroup of Z_v^* containing the generators.
UnitSubgroup close_subgroup(int v, const std::vector<int>& generators);

OrbitTable orbit_partition(const UnitSubgroup& h);

/// Union of the orbits named by canonical representatives.
SubsetZv expand_index_set(const OrbitTable& table, const std::vector<int>& reps);

/// Inverse of expand_index_set; throws not_orbit_union if x cuts an orbit.
std::vector<int> compress_to_index_set(const OrbitTable& table, const SubsetZv& x);

/// The image u*x mod v of a subset under a unit. Plumbing shared by the
/// translate stage and the equivalence transforms.
SubsetZv multiply_subset(const SubsetZv& x, int unit);

/// The translate x + c mod v.
SubsetZv shift_subset(const SubsetZv& x, int c);

}  // namespace pgolay
