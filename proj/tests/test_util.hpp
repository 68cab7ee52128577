#pragma once

#include <algorithm>
#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "pgolay/core.hpp"
#include "pgolay/correlation.hpp"

// Shared helpers and independent oracles for the test suites. Everything in
// here must stay independent of the implementation path it is used to check:
// oracles are brute-force only.

namespace testutil {

inline std::string data_path(const std::string& rel) {
    return std::string(PGOLAY_DATA_DIR) + "/" + rel;
}

inline pgolay::BinarySequence random_sequence(std::mt19937& rng, int v) {
    std::vector<int> entries(static_cast<std::size_t>(v));
    std::bernoulli_distribution coin(0.5);
    for (int& e : entries) {
        e = coin(rng) ? 1 : -1;
    }
    return pgolay::BinarySequence(std::move(entries));
}

inline pgolay::SubsetZv random_subset(std::mt19937& rng, int v) {
    std::vector<int> elements;
    std::bernoulli_distribution coin(0.5);
    for (int e = 0; e < v; ++e) {
        if (coin(rng)) {
            elements.push_back(e);
        }
    }
    return pgolay::SubsetZv(v, std::move(elements));
}

inline pgolay::SubsetZv random_subset_of_size(std::mt19937& rng, int v, int k) {
    std::vector<int> all(static_cast<std::size_t>(v));
    for (int i = 0; i < v; ++i) all[static_cast<std::size_t>(i)] = i;
    std::shuffle(all.begin(), all.end(), rng);
    all.resize(static_cast<std::size_t>(k));
    return pgolay::SubsetZv(v, std::move(all));
}

// Brute-force two-squares oracle: scan all a <= b with a^2 + b^2 = n.
inline bool sum_of_two_squares_brute(long long n) {
    for (long long a = 0; a * a * 2 <= n; ++a) {
        const long long rest = n - a * a;
        const long long b = static_cast<long long>(std::sqrt(static_cast<double>(rest)));
        for (long long c = std::max(0LL, b - 1); c <= b + 1; ++c) {
            if (c * c == rest) return true;
        }
    }
    return false;
}

// Independent complementarity oracle: direct PAF summation over sequences.
inline bool paf_complementary(const pgolay::SubsetZv& x, const pgolay::SubsetZv& y) {
    const auto pa = pgolay::paf(pgolay::sequence_from_subset(x));
    const auto pb = pgolay::paf(pgolay::sequence_from_subset(y));
    for (std::size_t s = 1; s < pa.values.size(); ++s) {
        if (pa.values[s] + pb.values[s] != 0) return false;
    }
    return true;
}

// Exhaustive oracle: every (X, Y) subset pair of Z_v whose sizes match
// {r, s} (as a multiset) and whose PAFs cancel. Feasible for v <= ~12.
inline std::vector<std::pair<pgolay::SubsetZv, pgolay::SubsetZv>> all_pairs_brute(int v, int r,
                                                                                  int s) {
    std::vector<std::pair<pgolay::SubsetZv, pgolay::SubsetZv>> out;
    const unsigned top = 1u << v;
    // Precompute PAF vectors per bitmask.
    std::vector<std::vector<int>> pafs(top);
    std::vector<int> sizes(top);
    for (unsigned m = 0; m < top; ++m) {
        std::vector<int> entries(static_cast<std::size_t>(v));
        int size = 0;
        for (int i = 0; i < v; ++i) {
            const bool in = (m >> i) & 1u;
            entries[static_cast<std::size_t>(i)] = in ? -1 : 1;
            size += in;
        }
        pafs[m] = pgolay::paf(pgolay::BinarySequence(std::move(entries))).values;
        sizes[m] = size;
    }
    const auto subset_of = [v](unsigned m) {
        std::vector<int> elements;
        for (int i = 0; i < v; ++i) {
            if ((m >> i) & 1u) elements.push_back(i);
        }
        return pgolay::SubsetZv(v, std::move(elements));
    };
    for (unsigned mx = 0; mx < top; ++mx) {
        for (unsigned my = 0; my < top; ++my) {
            if (!((sizes[mx] == r && sizes[my] == s) || (sizes[mx] == s && sizes[my] == r))) {
                continue;
            }
            bool ok = true;
            for (int t = 1; t < v && ok; ++t) {
                ok = pafs[mx][static_cast<std::size_t>(t)] +
                         pafs[my][static_cast<std::size_t>(t)] ==
                     0;
            }
            if (ok) {
                out.emplace_back(subset_of(mx), subset_of(my));
            }
        }
    }
    return out;
}

}  // namespace testutil
