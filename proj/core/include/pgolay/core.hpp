#pragma once

#include <utility>
#include <vector>

#include "pgolay/error.hpp"

namespace pgolay {

class SubsetZv;
class PeriodicGolayPair;

/// A {+1,-1} sequence of length v. Immutable after construction.
class BinarySequence {
public:
    explicit BinarySequence(std::vector<int> entries);

    static BinarySequence all_ones(int v);

    int length() const { return static_cast<int>(entries_.size()); }
    int operator[](int i) const { return entries_[static_cast<std::size_t>(i)]; }
    const std::vector<int>& entries() const { return entries_; }

    bool operator==(const BinarySequence&) const = default;

private:
    std::vector<int> entries_;
};

/// A subset of Z_v, stored as a strictly increasing element list.
class SubsetZv {
public:
    SubsetZv(int v, std::vector<int> elements);

    int modulus() const { return v_; }
    int size() const { return static_cast<int>(elements_.size()); }
    bool contains(int e) const;
    const std::vector<int>& elements() const { return elements_; }

    bool operator==(const SubsetZv&) const = default;

private:
    int v_;
    std::vector<int> elements_;
};

/// SDS parameter tuple (v; k_1,...,k_t; lambda) with the derived n.
/// Construction checks the feasibility identity
///     lambda * (v-1) == sum k_i * (k_i - 1),
/// which Definition-level SDS parameters must satisfy.
struct SdsParams {
    int v = 0;
    std::vector<int> block_sizes;
    int lambda = 0;
    int n = 0;  // sum k_i - lambda

    static SdsParams create(int v, std::vector<int> block_sizes, int lambda);
};

/// A verified pair of sequences whose periodic autocorrelations cancel at
/// every nonzero shift. Only the verifying factory can construct one.
class PeriodicGolayPair {
public:
    const BinarySequence& a() const { return a_; }
    const BinarySequence& b() const { return b_; }
    int length() const { return a_.length(); }

private:
    PeriodicGolayPair(BinarySequence a, BinarySequence b)
        : a_(std::move(a)), b_(std::move(b)) {}

    friend PeriodicGolayPair verify_periodic_golay_pair(const SubsetZv& x, const SubsetZv& y);

    BinarySequence a_;
    BinarySequence b_;
};

/// Entry i is -1 iff i is in the subset, +1 otherwise.
BinarySequence sequence_from_subset(const SubsetZv& x);

/// Exact inverse of sequence_from_subset.
SubsetZv subset_from_sequence(const BinarySequence& a);

/// Pair parameters (v; |x|, |y|; lambda) with lambda = |x| + |y| - v/2.
/// Rejects odd v, negative lambda, and parameter sets violating the
/// feasibility identity (equivalently, (v-2r)^2 + (v-2s)^2 != 2v).
SdsParams derive_pair_params(const SubsetZv& x, const SubsetZv& y);

/// For two-block parameters returns (a, b) = (v - 2r, v - 2s) after
/// confirming a^2 + b^2 == 2v; throws decomposition_fails otherwise.
std::pair<int, int> check_square_decomposition(const SdsParams& params);

}  // namespace pgolay
