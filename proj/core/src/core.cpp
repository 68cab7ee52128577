#include "pgolay/core.hpp"

#include <algorithm>
#include <string>

namespace pgolay {

BinarySequence::BinarySequence(std::vector<int> entries) : entries_(std::move(entries)) {
    if (entries_.empty()) {
        throw Error(errc::invalid_argument, "binary sequence must have positive length");
    }
    for (int e : entries_) {
        if (e != 1 && e != -1) {
            throw Error(errc::invalid_argument,
                        "binary sequence entry must be +1 or -1, got " + std::to_string(e));
        }
    }
}

BinarySequence BinarySequence::all_ones(int v) {
    return BinarySequence(std::vector<int>(static_cast<std::size_t>(v), 1));
}

SubsetZv::SubsetZv(int v, std::vector<int> elements) : v_(v), elements_(std::move(elements)) {
    if (v_ <= 0) {
        throw Error(errc::invalid_argument, "modulus must be positive");
    }
    std::sort(elements_.begin(), elements_.end());
    for (std::size_t i = 0; i < elements_.size(); ++i) {
        if (elements_[i] < 0 || elements_[i] >= v_) {
            throw Error(errc::invalid_argument,
                        "element " + std::to_string(elements_[i]) + " outside [0, " +
                            std::to_string(v_) + ")");
        }
        if (i > 0 && elements_[i] == elements_[i - 1]) {
            throw Error(errc::invalid_argument,
                        "duplicate element " + std::to_string(elements_[i]));
        }
    }
}

bool SubsetZv::contains(int e) const {
    return std::binary_search(elements_.begin(), elements_.end(), e);
}

SdsParams SdsParams::create(int v, std::vector<int> block_sizes, int lambda) {
    if (v <= 0) {
        throw Error(errc::invalid_argument, "modulus must be positive");
    }
    if (lambda < 0) {
        throw Error(errc::negative_lambda, "lambda = " + std::to_string(lambda));
    }
    long long pair_sum = 0;
    long long size_sum = 0;
    for (int k : block_sizes) {
        if (k <= 0) {
            throw Error(errc::invalid_argument, "block sizes must be positive");
        }
        pair_sum += static_cast<long long>(k) * (k - 1);
        size_sum += k;
    }
    if (static_cast<long long>(lambda) * (v - 1) != pair_sum) {
        throw Error(errc::parameter_infeasible,
                    "lambda*(v-1) = " + std::to_string(static_cast<long long>(lambda) * (v - 1)) +
                        " but sum k_i*(k_i-1) = " + std::to_string(pair_sum));
    }
    SdsParams params;
    params.v = v;
    params.block_sizes = std::move(block_sizes);
    params.lambda = lambda;
    params.n = static_cast<int>(size_sum - lambda);
    return params;
}

BinarySequence sequence_from_subset(const SubsetZv& x) {
    std::vector<int> entries(static_cast<std::size_t>(x.modulus()), 1);
    for (int e : x.elements()) {
        entries[static_cast<std::size_t>(e)] = -1;
    }
    return BinarySequence(std::move(entries));
}

SubsetZv subset_from_sequence(const BinarySequence& a) {
    std::vector<int> elements;
    for (int i = 0; i < a.length(); ++i) {
        if (a[i] == -1) {
            elements.push_back(i);
        }
    }
    return SubsetZv(a.length(), std::move(elements));
}

SdsParams derive_pair_params(const SubsetZv& x, const SubsetZv& y) {
    if (x.modulus() != y.modulus()) {
        throw Error(errc::incompatible_moduli,
                    std::to_string(x.modulus()) + " vs " + std::to_string(y.modulus()));
    }
    const int v = x.modulus();
    if (v % 2 != 0) {
        throw Error(errc::odd_length, "v = " + std::to_string(v) +
                                          " cannot be a periodic Golay parameter set");
    }
    const int lambda = x.size() + y.size() - v / 2;
    if (lambda < 0) {
        throw Error(errc::negative_lambda, "lambda = " + std::to_string(lambda));
    }
    return SdsParams::create(v, {x.size(), y.size()}, lambda);
}

std::pair<int, int> check_square_decomposition(const SdsParams& params) {
    if (params.block_sizes.size() != 2) {
        throw Error(errc::invalid_argument, "expected exactly two blocks, got " +
                                                std::to_string(params.block_sizes.size()));
    }
    const int a = params.v - 2 * params.block_sizes[0];
    const int b = params.v - 2 * params.block_sizes[1];
    const long long lhs = static_cast<long long>(a) * a + static_cast<long long>(b) * b;
    if (lhs != 2LL * params.v) {
        throw Error(errc::decomposition_fails,
                    "a^2+b^2 = " + std::to_string(lhs) + " != 2v = " + std::to_string(2 * params.v));
    }
    return {a, b};
}

}  // namespace pgolay
