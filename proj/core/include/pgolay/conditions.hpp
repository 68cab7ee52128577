#pragma once

#include <cstdint>
#include <vector>

namespace pgolay {

enum class KnownStatus { golay, periodic_only, excluded, open };

const char* known_status_name(KnownStatus status) noexcept;

/// Per-length classification against the necessary conditions for the
/// existence of a periodic Golay pair.
struct LengthVerdict {
    int v = 0;
    bool even = false;
    bool two_squares = false;
    bool eks_golay_possible = false;  // no prime factor p = 3 (mod 4)
    bool arasu_xiang_pass = false;    // vacuously true when not applicable
    KnownStatus known_status = KnownStatus::open;
};

/// Trial-division factorization as (prime, exponent) pairs, ascending.
/// Supported range: v <= 10^6.
std::vector<std::pair<long long, int>> factorize(long long v);

/// True iff v = a^2 + b^2 for some integers a, b >= 0; decided by the
/// even-exponent criterion on primes p = 3 (mod 4).
bool is_sum_of_two_squares(long long v);

/// True iff v is divisible by some prime p = 3 (mod 4), i.e. v is excluded
/// as a Golay number by the Eliahou-Kervaire-Saffari condition.
bool eks_golay_exclusion(long long v);

/// Arasu-Xiang necessary condition for periodic Golay numbers: for every
/// prime p = 3 (mod 4) with p^t || v and u = v / p^t, require
/// u >= 2 * p^(t/2). Returns false when some prime violates the bound.
/// Throws odd_exponent when t is odd for some such p; that case is already
/// settled by the two-squares condition and callers should report it there.
bool arasu_xiang_test(long long v);

/// True iff v = 2^alpha * 10^beta * 26^gamma for nonnegative exponents —
/// the form of every known Golay number.
bool is_golay_number_form(long long v);

/// True iff v is a known periodic Golay number that is not of Golay-number
/// form: one of the directly constructed lengths
/// {34, 50, 58, 68, 72, 74, 82, 122, 164, 202, 226}, or a product of one of
/// those with a Golay number (products of a Golay and a periodic Golay
/// number are periodic Golay numbers).
bool is_known_periodic_golay(long long v);

LengthVerdict classify_length(int v);

/// All v <= range_end passing evenness, two-squares and Arasu-Xiang whose
/// status is still open (not of Golay form, not a known periodic Golay
/// length). For range_end = 300 this is a 16-element list.
std::vector<int> open_candidates(int range_end);

}  // namespace pgolay
