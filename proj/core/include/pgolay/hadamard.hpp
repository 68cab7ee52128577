#pragma once

#include <iosfwd>
#include <vector>

#include "pgolay/core.hpp"

namespace pgolay {

/// Dense square matrix with entries restricted to {+1, -1}.
class SquareMatrix {
public:
    SquareMatrix(int order, std::vector<int> entries);  // row-major

    int order() const { return order_; }
    int at(int i, int j) const { return entries_[static_cast<std::size_t>(i) * order_ + j]; }
    const std::vector<int>& entries() const { return entries_; }

    bool operator==(const SquareMatrix&) const = default;

private:
    int order_;
    std::vector<int> entries_;
};

/// Circulant matrix whose row i is the cyclic right-shift of a by i.
SquareMatrix circulant(const BinarySequence& a);

/// The order-2v block matrix [[C_A, C_B], [-C_B^t, C_A^t]] of a verified
/// pair; always Hadamard.
SquareMatrix build_hadamard(const PeriodicGolayPair& pair);

/// Exact integer check of M * M^t == order * I.
bool is_hadamard(const SquareMatrix& m);

// Text export: one row per line, '+'/'-' per entry. CSV variant uses
// comma-separated +1/-1 integers.
void write_matrix_pm(std::ostream& out, const SquareMatrix& m);
void write_matrix_csv(std::ostream& out, const SquareMatrix& m);
SquareMatrix read_matrix_pm(std::istream& in);

}  // namespace pgolay
