#include "pgolay/hadamard.hpp"

#include <istream>
#include <ostream>
#include <string>

namespace pgolay {

SquareMatrix::SquareMatrix(int order, std::vector<int> entries)
    : order_(order), entries_(std::move(entries)) {
    if (order_ <= 0) {
        throw Error(errc::invalid_argument, "order must be positive");
    }
    if (entries_.size() != static_cast<std::size_t>(order_) * order_) {
        throw Error(errc::invalid_argument, "entry count does not match order");
    }
    for (int e : entries_) {
        if (e != 1 && e != -1) {
            throw Error(errc::invalid_argument, "matrix entries must be +1 or -1");
        }
    }
}

SquareMatrix circulant(const BinarySequence& a) {
    const int v = a.length();
    std::vector<int> entries(static_cast<std::size_t>(v) * v);
    for (int i = 0; i < v; ++i) {
        for (int j = 0; j < v; ++j) {
            int t = j - i;
            if (t < 0) t += v;
            entries[static_cast<std::size_t>(i) * v + j] = a[t];
        }
    }
    return SquareMatrix(v, std::move(entries));
}

SquareMatrix build_hadamard(const PeriodicGolayPair& pair) {
    const int v = pair.length();
    const int n = 2 * v;
    const BinarySequence& a = pair.a();
    const BinarySequence& b = pair.b();
    std::vector<int> entries(static_cast<std::size_t>(n) * n);
    const auto put = [&](int i, int j, int value) {
        entries[static_cast<std::size_t>(i) * n + j] = value;
    };
    for (int i = 0; i < v; ++i) {
        for (int j = 0; j < v; ++j) {
            int fwd = j - i;
            if (fwd < 0) fwd += v;
            int rev = i - j;
            if (rev < 0) rev += v;
            put(i, j, a[fwd]);              // C_A
            put(i, v + j, b[fwd]);          // C_B
            put(v + i, j, -b[rev]);         // -C_B^t
            put(v + i, v + j, a[rev]);      // C_A^t
        }
    }
    return SquareMatrix(n, std::move(entries));
}

bool is_hadamard(const SquareMatrix& m) {
    const int n = m.order();
    const std::vector<int>& e = m.entries();
    for (int i = 0; i < n; ++i) {
        for (int j = i; j < n; ++j) {
            long long dot = 0;
            const int* row_i = e.data() + static_cast<std::size_t>(i) * n;
            const int* row_j = e.data() + static_cast<std::size_t>(j) * n;
            for (int k = 0; k < n; ++k) {
                dot += static_cast<long long>(row_i[k]) * row_j[k];
            }
            if (dot != (i == j ? static_cast<long long>(n) : 0LL)) {
                return false;
            }
        }
    }
    return true;
}

void write_matrix_pm(std::ostream& out, const SquareMatrix& m) {
    const int n = m.order();
    std::string line(static_cast<std::size_t>(n), ' ');
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            line[static_cast<std::size_t>(j)] = m.at(i, j) > 0 ? '+' : '-';
        }
        out << line << '\n';
    }
}

void write_matrix_csv(std::ostream& out, const SquareMatrix& m) {
    const int n = m.order();
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (j > 0) out << ',';
            out << m.at(i, j);
        }
        out << '\n';
    }
}

SquareMatrix read_matrix_pm(std::istream& in) {
    std::vector<int> entries;
    std::string line;
    std::size_t order = 0;
    std::size_t rows = 0;
    while (std::getline(in, line)) {
        if (line.empty()) {
            continue;
        }
        if (order == 0) {
            order = line.size();
        } else if (line.size() != order) {
            throw Error(errc::parse_error, "ragged matrix row");
        }
        for (char c : line) {
            if (c == '+') {
                entries.push_back(1);
            } else if (c == '-') {
                entries.push_back(-1);
            } else {
                throw Error(errc::parse_error, std::string("unexpected character '") + c + "'");
            }
        }
        ++rows;
    }
    if (rows == 0 || rows != order) {
        throw Error(errc::parse_error, "matrix is not square");
    }
    return SquareMatrix(static_cast<int>(order), std::move(entries));
}

}  // namespace pgolay
