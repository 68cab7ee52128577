#include "pgolay/orbits.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace pgolay {

namespace {

int gcd_int(int a, int b) {
    while (b != 0) {
        int t = a % b;
        a = b;
        b = t;
    }
    return a;
}

}  // namespace

UnitSubgroup::UnitSubgroup(int v, std::vector<int> elements)
    : v_(v), elements_(std::move(elements)) {
    if (v_ <= 0) {
        throw Error(errc::invalid_argument, "modulus must be positive");
    }
    std::sort(elements_.begin(), elements_.end());
    if (elements_.empty() || elements_.front() != 1 % v_) {
        throw Error(errc::invalid_argument, "subgroup must contain 1");
    }
    for (int e : elements_) {
        if (e < 0 || e >= v_ || gcd_int(e == 0 ? v_ : e, v_) != 1) {
            throw Error(errc::not_a_unit, std::to_string(e) + " is not a unit mod " +
                                              std::to_string(v_));
        }
    }
    // Closure check; generator input goes through close_subgroup, so this is
    // only guarding direct construction.
    std::set<int> members(elements_.begin(), elements_.end());
    for (int a : elements_) {
        for (int b : elements_) {
            if (!members.count(static_cast<int>(static_cast<long long>(a) * b % v_))) {
                throw Error(errc::invalid_argument, "element list is not closed under product");
            }
        }
    }
}

UnitSubgroup close_subgroup(int v, const std::vector<int>& generators) {
    if (v <= 0) {
        throw Error(errc::invalid_argument, "modulus must be positive");
    }
    for (int g : generators) {
        if (g < 1 || g >= v || gcd_int(g, v) != 1) {
            if (v == 1 && g == 0) continue;  // Z_1 has the single unit 0 = 1
            throw Error(errc::not_a_unit,
                        "generator " + std::to_string(g) + " is not a unit mod " +
                            std::to_string(v));
        }
    }
    std::set<int> members{1 % v};
    std::vector<int> work(members.begin(), members.end());
    for (int g : generators) {
        if (members.insert(g).second) {
            work.push_back(g);
        }
    }
    while (!work.empty()) {
        const int a = work.back();
        work.pop_back();
        std::vector<int> snapshot(members.begin(), members.end());
        for (int b : snapshot) {
            const int p = static_cast<int>(static_cast<long long>(a) * b % v);
            if (members.insert(p).second) {
                work.push_back(p);
            }
        }
    }
    return UnitSubgroup(v, std::vector<int>(members.begin(), members.end()));
}

OrbitTable::OrbitTable(UnitSubgroup subgroup, std::vector<SubsetZv> orbits, std::vector<int> rep_of)
    : subgroup_(std::move(subgroup)), orbits_(std::move(orbits)), rep_of_(std::move(rep_of)) {
    orbit_index_.assign(rep_of_.size(), -1);
    for (std::size_t i = 0; i < orbits_.size(); ++i) {
        orbit_index_[static_cast<std::size_t>(orbits_[i].elements().front())] =
            static_cast<int>(i);
    }
}

int OrbitTable::orbit_index_of(int rep) const {
    if (rep < 0 || rep >= modulus() || orbit_index_[static_cast<std::size_t>(rep)] < 0) {
        throw Error(errc::not_a_representative,
                    std::to_string(rep) + " is not the smallest element of an orbit mod " +
                        std::to_string(modulus()));
    }
    return orbit_index_[static_cast<std::size_t>(rep)];
}

OrbitTable orbit_partition(const UnitSubgroup& h) {
    const int v = h.modulus();
    std::vector<int> rep_of(static_cast<std::size_t>(v), -1);
    std::vector<SubsetZv> orbits;
    for (int j = 0; j < v; ++j) {
        if (rep_of[static_cast<std::size_t>(j)] >= 0) {
            continue;
        }
        std::set<int> orbit;
        for (int u : h.elements()) {
            orbit.insert(static_cast<int>(static_cast<long long>(u) * j % v));
        }
        // Ascending scan means j is the smallest element of a fresh orbit.
        for (int e : orbit) {
            rep_of[static_cast<std::size_t>(e)] = j;
        }
        orbits.emplace_back(v, std::vector<int>(orbit.begin(), orbit.end()));
    }
    return OrbitTable(h, std::move(orbits), std::move(rep_of));
}

SubsetZv expand_index_set(const OrbitTable& table, const std::vector<int>& reps) {
    std::vector<int> elements;
    std::set<int> seen;
    for (int rep : reps) {
        if (!seen.insert(rep).second) {
            throw Error(errc::duplicate_index, "representative " + std::to_string(rep) +
                                                   " listed twice");
        }
        const SubsetZv& orbit = table.orbits()[static_cast<std::size_t>(table.orbit_index_of(rep))];
        elements.insert(elements.end(), orbit.elements().begin(), orbit.elements().end());
    }
    return SubsetZv(table.modulus(), std::move(elements));
}

std::vector<int> compress_to_index_set(const OrbitTable& table, const SubsetZv& x) {
    if (x.modulus() != table.modulus()) {
        throw Error(errc::incompatible_moduli,
                    std::to_string(x.modulus()) + " vs " + std::to_string(table.modulus()));
    }
    std::vector<int> reps;
    std::vector<int> hit_count;  // per collected rep, parallel to reps
    std::vector<int> rep_slot(static_cast<std::size_t>(table.modulus()), -1);
    for (int e : x.elements()) {
        const int rep = table.representative_of(e);
        int slot = rep_slot[static_cast<std::size_t>(rep)];
        if (slot < 0) {
            slot = static_cast<int>(reps.size());
            rep_slot[static_cast<std::size_t>(rep)] = slot;
            reps.push_back(rep);
            hit_count.push_back(0);
        }
        ++hit_count[static_cast<std::size_t>(slot)];
    }
    for (std::size_t i = 0; i < reps.size(); ++i) {
        const SubsetZv& orbit =
            table.orbits()[static_cast<std::size_t>(table.orbit_index_of(reps[i]))];
        if (hit_count[i] != orbit.size()) {
            throw Error(errc::not_orbit_union,
                        "subset covers " + std::to_string(hit_count[i]) + " of " +
                            std::to_string(orbit.size()) + " elements of orbit of " +
                            std::to_string(reps[i]));
        }
    }
    std::sort(reps.begin(), reps.end());
    return reps;
}

SubsetZv multiply_subset(const SubsetZv& x, int unit) {
    const int v = x.modulus();
    const int u = ((unit % v) + v) % v;
    if (gcd_int(u == 0 ? v : u, v) != 1) {
        throw Error(errc::not_a_unit, std::to_string(unit) + " is not a unit mod " +
                                          std::to_string(v));
    }
    std::vector<int> elements;
    elements.reserve(x.elements().size());
    for (int e : x.elements()) {
        elements.push_back(static_cast<int>(static_cast<long long>(u) * e % v));
    }
    return SubsetZv(v, std::move(elements));
}

SubsetZv shift_subset(const SubsetZv& x, int c) {
    const int v = x.modulus();
    const int d = ((c % v) + v) % v;
    std::vector<int> elements;
    elements.reserve(x.elements().size());
    for (int e : x.elements()) {
        int t = e + d;
        if (t >= v) t -= v;
        elements.push_back(t);
    }
    return SubsetZv(v, std::move(elements));
}

}  // namespace pgolay
