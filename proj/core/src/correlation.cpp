#include "pgolay/correlation.hpp"

#include <cmath>
#include <numbers>

namespace pgolay {

PafVector paf(const BinarySequence& a) {
    const int v = a.length();
    PafVector out;
    out.v = v;
    out.values.resize(static_cast<std::size_t>(v));
    for (int s = 0; s < v; ++s) {
        int acc = 0;
        for (int i = 0; i < v; ++i) {
            int j = i + s;
            if (j >= v) j -= v;
            acc += a[i] * a[j];
        }
        out.values[static_cast<std::size_t>(s)] = acc;
    }
    return out;
}

NafVector naf(const BinarySequence& a) {
    const int v = a.length();
    NafVector out;
    out.v = v;
    out.values.resize(static_cast<std::size_t>(v));
    for (int s = 0; s < v; ++s) {
        int acc = 0;
        for (int i = 0; i + s < v; ++i) {
            acc += a[i] * a[i + s];
        }
        out.values[static_cast<std::size_t>(s)] = acc;
    }
    return out;
}

std::vector<double> psd(const BinarySequence& a) {
    const int v = a.length();
    // One table entry per residue jk mod v keeps the arguments small and the
    // mirrored spectrum exactly symmetric.
    std::vector<double> cos_table(static_cast<std::size_t>(v));
    std::vector<double> sin_table(static_cast<std::size_t>(v));
    for (int t = 0; t < v; ++t) {
        const double angle = 2.0 * std::numbers::pi * t / v;
        cos_table[static_cast<std::size_t>(t)] = std::cos(angle);
        sin_table[static_cast<std::size_t>(t)] = std::sin(angle);
    }
    std::vector<double> out(static_cast<std::size_t>(v / 2) + 1);
    for (int k = 0; k <= v / 2; ++k) {
        double re = 0.0;
        double im = 0.0;
        int t = 0;
        for (int j = 0; j < v; ++j) {
            re += a[j] * cos_table[static_cast<std::size_t>(t)];
            im += a[j] * sin_table[static_cast<std::size_t>(t)];
            t += k;
            if (t >= v) t -= v;
        }
        out[static_cast<std::size_t>(k)] = re * re + im * im;
    }
    return out;
}

bool psd_test(const BinarySequence& a, double slack) {
    const int v = a.length();
    const double bound = 2.0 * v + slack;
    const std::vector<double> values = psd(a);
    for (std::size_t k = 1; k < values.size(); ++k) {
        if (values[k] > bound) {
            return false;
        }
    }
    return true;
}

}  // namespace pgolay
