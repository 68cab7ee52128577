#include "pgolay/conditions.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "pgolay/error.hpp"

namespace pgolay {

namespace {

constexpr long long max_supported = 1000000;

// Known periodic Golay numbers that are not of Golay-number form: the seven
// lengths settled as periodic-but-not-Golay plus the directly constructed
// lengths 122, 164, 202, 226 (whether the latter are Golay numbers is open).
constexpr std::array<int, 11> known_periodic_base = {34, 50, 58,  68,  72,  74,
                                                     82, 122, 164, 202, 226};

void check_range(long long v) {
    if (v < 1) {
        throw Error(errc::invalid_argument, "v must be >= 1");
    }
    if (v > max_supported) {
        throw Error(errc::invalid_argument,
                    "v = " + std::to_string(v) + " exceeds supported range 10^6");
    }
}

}  // namespace

const char* known_status_name(KnownStatus status) noexcept {
    switch (status) {
        case KnownStatus::golay: return "golay";
        case KnownStatus::periodic_only: return "periodic_only";
        case KnownStatus::excluded: return "excluded";
        case KnownStatus::open: return "open";
    }
    return "?";
}

std::vector<std::pair<long long, int>> factorize(long long v) {
    check_range(v);
    std::vector<std::pair<long long, int>> factors;
    for (long long p = 2; p * p <= v; ++p) {
        if (v % p == 0) {
            int e = 0;
            while (v % p == 0) {
                v /= p;
                ++e;
            }
            factors.emplace_back(p, e);
        }
    }
    if (v > 1) {
        factors.emplace_back(v, 1);
    }
    return factors;
}

bool is_sum_of_two_squares(long long v) {
    for (const auto& [p, e] : factorize(v)) {
        if (p % 4 == 3 && e % 2 != 0) {
            return false;
        }
    }
    return true;
}

bool eks_golay_exclusion(long long v) {
    for (const auto& [p, e] : factorize(v)) {
        if (p % 4 == 3) {
            return true;
        }
    }
    return false;
}

bool arasu_xiang_test(long long v) {
    if (v < 2) {
        throw Error(errc::invalid_argument, "v must be >= 2");
    }
    for (const auto& [p, t] : factorize(v)) {
        if (p % 4 != 3) {
            continue;
        }
        if (t % 2 != 0) {
            throw Error(errc::odd_exponent,
                        "prime " + std::to_string(p) + " divides v = " + std::to_string(v) +
                            " to the odd power " + std::to_string(t) +
                            "; v already fails the two-squares condition");
        }
        long long u = v;
        long long half_power = 1;
        for (int i = 0; i < t; ++i) {
            u /= p;
        }
        for (int i = 0; i < t / 2; ++i) {
            half_power *= p;
        }
        if (u < 2 * half_power) {
            return false;
        }
    }
    return true;
}

bool is_golay_number_form(long long v) {
    check_range(v);
    int e2 = 0;
    int e5 = 0;
    int e13 = 0;
    while (v % 2 == 0) { v /= 2; ++e2; }
    while (v % 5 == 0) { v /= 5; ++e5; }
    while (v % 13 == 0) { v /= 13; ++e13; }
    // 2^a 5^b 13^c = 2^alpha 10^beta 26^gamma needs alpha = a - b - c >= 0.
    return v == 1 && e2 >= e5 + e13;
}

bool is_known_periodic_golay(long long v) {
    check_range(v);
    for (int d : known_periodic_base) {
        if (v % d == 0 && is_golay_number_form(v / d)) {
            return true;
        }
    }
    return false;
}

LengthVerdict classify_length(int v) {
    check_range(v);
    LengthVerdict verdict;
    verdict.v = v;
    verdict.even = v % 2 == 0;
    verdict.two_squares = is_sum_of_two_squares(v);
    verdict.eks_golay_possible = !eks_golay_exclusion(v);
    if (v < 2 || !verdict.two_squares) {
        // The Arasu-Xiang bound is only stated for even exponents; odd
        // exponents are already rejected by the two-squares condition.
        verdict.arasu_xiang_pass = true;
    } else {
        verdict.arasu_xiang_pass = arasu_xiang_test(v);
    }

    if (is_golay_number_form(v)) {
        verdict.known_status = KnownStatus::golay;
    } else if (is_known_periodic_golay(v)) {
        verdict.known_status = KnownStatus::periodic_only;
    } else if (!verdict.even || !verdict.two_squares || !verdict.arasu_xiang_pass) {
        verdict.known_status = KnownStatus::excluded;
    } else {
        verdict.known_status = KnownStatus::open;
    }
    return verdict;
}

std::vector<int> open_candidates(int range_end) {
    check_range(range_end);
    std::vector<int> out;
    for (int v = 1; v <= range_end; ++v) {
        if (classify_length(v).known_status == KnownStatus::open) {
            out.push_back(v);
        }
    }
    return out;
}

}  // namespace pgolay
