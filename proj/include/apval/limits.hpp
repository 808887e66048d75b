#pragma once

#include <cstdint>

namespace apval {

/// Resource ceilings for the search and sieve routines. Values are
/// configurable (CLI `--config`), but must be set before any concurrent
/// use: the struct is initialize-once, read-many.
struct Limits {
    std::uint64_t sieve_bound = 1'000'000'000;          ///< primes_up_to / nth_prime ceiling
    std::uint64_t factor_bound = 1'000'000'000'000;     ///< trial-division factorization ceiling
    std::uint64_t dense_smooth_bound = 100'000'000;     ///< dense smooth-sieve ceiling
    std::uint64_t exact_reciprocal_bound = 1'000'000;   ///< exact rational reciprocal sums
    std::uint64_t class_budget = 531'441;               ///< max m^r in a partition (3^12)
    std::uint64_t ap_free_bound = 30;                   ///< exhaustive AP-free search ceiling
};

Limits& limits();

} // namespace apval
