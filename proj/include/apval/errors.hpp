#pragma once

#include <stdexcept>
#include <string>

namespace apval {

/// Base class for every fault raised by the library.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Mathematically invalid input: zero denominator, non-prime where a prime
/// is required, argument outside an operation's domain, duplicate places.
struct domain_error : error {
    using error::error;
};

/// A configured resource limit was exceeded (sieve range, factorization
/// bound, class budget, exhaustive-search ceiling).
struct bound_error : error {
    using error::error;
};

} // namespace apval
