#pragma once

#include <cstdint>
#include <vector>

namespace wolst {

// Deterministic Miller-Rabin for the full 64-bit range.
bool is_prime(std::uint64_t n);

// All primes strictly below limit, ascending. Empty for limit <= 2.
std::vector<std::uint64_t> prime_sieve(std::uint64_t limit);

} // namespace wolst
