#pragma once

#include "apval/numeric.hpp"

#include <cstdint>
#include <functional>
#include <vector>

namespace apval {

/// Primes in [2, bound], ascending. Throws bound_error above the
/// configured sieve ceiling.
std::vector<std::uint64_t> primes_up_to(std::uint64_t bound);

/// The j-th prime, 1-indexed (nth_prime(1) == 2). Throws domain_error for
/// j == 0 and bound_error when p_j would exceed the sieve ceiling.
std::uint64_t nth_prime(std::uint64_t j);

/// Streams the primes in [2, bound] in ascending order through `fn`.
/// Segmented; memory stays O(sqrt(bound) + segment).
void for_each_prime(std::uint64_t bound, const std::function<void(std::uint64_t)>& fn);

/// Shared ascending table of the primes below 10^6, built once on first
/// use; the factorization routines read it concurrently afterwards.
const std::vector<std::uint32_t>& small_primes();

bool is_prime(const Int& n);

} // namespace apval
