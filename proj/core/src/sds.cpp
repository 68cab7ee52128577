#include "pgolay/sds.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "pgolay/correlation.hpp"
#include "pgolay/orbits.hpp"

namespace pgolay {

DifferenceMultiplicity difference_multiplicities(int v, const std::vector<SubsetZv>& blocks) {
    DifferenceMultiplicity out;
    out.v = v;
    out.counts.assign(static_cast<std::size_t>(v > 0 ? v - 1 : 0), 0);
    for (const SubsetZv& block : blocks) {
        if (block.modulus() != v) {
            throw Error(errc::incompatible_moduli,
                        std::to_string(block.modulus()) + " vs " + std::to_string(v));
        }
        const std::vector<int>& e = block.elements();
        for (std::size_t i = 0; i < e.size(); ++i) {
            for (std::size_t j = 0; j < e.size(); ++j) {
                if (i == j) continue;
                int c = e[i] - e[j];
                if (c < 0) c += v;
                ++out.counts[static_cast<std::size_t>(c - 1)];
            }
        }
    }
    return out;
}

bool is_sds(int v, const std::vector<SubsetZv>& blocks, long long lambda) {
    if (lambda < 0) {
        return false;
    }
    const DifferenceMultiplicity d = difference_multiplicities(v, blocks);
    return std::all_of(d.counts.begin(), d.counts.end(),
                       [lambda](int c) { return c == lambda; });
}

PeriodicGolayPair verify_periodic_golay_pair(const SubsetZv& x, const SubsetZv& y) {
    if (x.modulus() != y.modulus()) {
        throw Error(errc::parameter_infeasible,
                    "mismatched moduli " + std::to_string(x.modulus()) + " vs " +
                        std::to_string(y.modulus()));
    }
    const int v = x.modulus();
    BinarySequence a = sequence_from_subset(x);
    BinarySequence b = sequence_from_subset(y);
    if (v == 1) {
        // No nonzero shifts and no nonzero differences; every pair qualifies.
        return PeriodicGolayPair(std::move(a), std::move(b));
    }
    if (v % 2 != 0) {
        throw Error(errc::parameter_infeasible,
                    "odd length v = " + std::to_string(v) + " admits no periodic Golay pair");
    }

    const PafVector pa = paf(a);
    const PafVector pb = paf(b);
    int offending_shift = 0;
    for (int s = 1; s < v; ++s) {
        if (pa.values[static_cast<std::size_t>(s)] + pb.values[static_cast<std::size_t>(s)] != 0) {
            offending_shift = s;
            break;
        }
    }
    const bool paf_ok = offending_shift == 0;

    const long long lambda = static_cast<long long>(x.size()) + y.size() - v / 2;
    const bool sds_ok = is_sds(v, {x, y}, lambda);

    if (paf_ok != sds_ok) {
        throw Error(errc::internal, "PAF and SDS verification routes disagree at v = " +
                                        std::to_string(v));
    }
    if (!paf_ok) {
        throw Error(errc::not_complementary,
                    "PAF_A(s) + PAF_B(s) = " +
                        std::to_string(pa.values[static_cast<std::size_t>(offending_shift)] +
                                       pb.values[static_cast<std::size_t>(offending_shift)]) +
                        " at shift s = " + std::to_string(offending_shift));
    }
    return PeriodicGolayPair(std::move(a), std::move(b));
}

PeriodicGolayPair verify_periodic_golay_pair(const BinarySequence& a, const BinarySequence& b) {
    return verify_periodic_golay_pair(subset_from_sequence(a), subset_from_sequence(b));
}

namespace {

// Lexicographically least sorted translate of a sorted element list.
std::vector<int> min_shift(const std::vector<int>& elements, int v) {
    if (elements.empty()) {
        return {};
    }
    const int k = static_cast<int>(elements.size());
    std::vector<int> best;
    std::vector<int> current(static_cast<std::size_t>(k));
    for (int c = 0; c < v; ++c) {
        // Shifted-by-c set, sorted: elements split at the wrap point v - c.
        const auto wrap = std::lower_bound(elements.begin(), elements.end(), v - c);
        std::size_t pos = 0;
        for (auto it = wrap; it != elements.end(); ++it) {
            current[pos++] = *it + c - v;
        }
        for (auto it = elements.begin(); it != wrap; ++it) {
            current[pos++] = *it + c;
        }
        if (best.empty() || current < best) {
            best = current;
        }
    }
    return best;
}

std::vector<int> units_of(int v) {
    std::vector<int> units;
    for (int u = 1; u < v; ++u) {
        if (std::gcd(u, v) == 1) {
            units.push_back(u);
        }
    }
    if (v == 1) {
        units.push_back(0);  // the only residue; acts as the identity
    }
    return units;
}

}  // namespace

std::pair<SubsetZv, SubsetZv> elementary_canonical_form(const SubsetZv& x, const SubsetZv& y) {
    if (x.modulus() != y.modulus()) {
        throw Error(errc::incompatible_moduli,
                    std::to_string(x.modulus()) + " vs " + std::to_string(y.modulus()));
    }
    const int v = x.modulus();
    const std::vector<int> units = units_of(v);

    // The transform group factors as: optional swap, then per-block unit
    // multiplication with units (w1, w2) satisfying w2 = +/- w1, then
    // independent per-block shifts. Shifts are minimized per block, so it is
    // enough to scan swap x units x signs and cache the min-shift form of
    // u * block for each unit u.
    std::vector<std::vector<int>> ms_x(units.size());
    std::vector<std::vector<int>> ms_y(units.size());
    for (std::size_t i = 0; i < units.size(); ++i) {
        ms_x[i] = min_shift(multiply_subset(x, units[i]).elements(), v);
        ms_y[i] = min_shift(multiply_subset(y, units[i]).elements(), v);
    }
    std::vector<int> unit_slot(static_cast<std::size_t>(v == 1 ? 1 : v), -1);
    for (std::size_t i = 0; i < units.size(); ++i) {
        unit_slot[static_cast<std::size_t>(units[i])] = static_cast<int>(i);
    }
    const auto negate_slot = [&](int slot) {
        const int u = units[static_cast<std::size_t>(slot)];
        const int nu = v == 1 ? 0 : (v - u) % v;
        return unit_slot[static_cast<std::size_t>(nu)];
    };

    const std::vector<int>* best_first = nullptr;
    const std::vector<int>* best_second = nullptr;
    for (int swap = 0; swap < 2; ++swap) {
        const auto& first_forms = swap ? ms_y : ms_x;
        const auto& second_forms = swap ? ms_x : ms_y;
        for (std::size_t i = 0; i < units.size(); ++i) {
            const int ni = negate_slot(static_cast<int>(i));
            for (int s1 = 0; s1 < 2; ++s1) {
                const std::vector<int>& f1 = first_forms[static_cast<std::size_t>(
                    s1 ? ni : static_cast<int>(i))];
                for (int s2 = 0; s2 < 2; ++s2) {
                    const std::vector<int>& f2 = second_forms[static_cast<std::size_t>(
                        s2 ? ni : static_cast<int>(i))];
                    if (best_first == nullptr || f1 < *best_first ||
                        (f1 == *best_first && f2 < *best_second)) {
                        best_first = &f1;
                        best_second = &f2;
                    }
                }
            }
        }
    }
    return {SubsetZv(v, *best_first), SubsetZv(v, *best_second)};
}

}  // namespace pgolay
