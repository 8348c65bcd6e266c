#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace cmlv {

uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t m);
uint64_t powmod_u64(uint64_t a, uint64_t e, uint64_t m);

// Deterministic Miller-Rabin over the full 64-bit range.
bool is_prime_u64(uint64_t n);

// Trial division + Brent's rho; exponents collected, factors ascending.
std::vector<std::pair<uint64_t, int>> factor_u64(uint64_t n);

// Smallest square root of -1 modulo a prime p = 1 (mod 4),
// i.e. the one in (0, p/2).
uint64_t sqrt_minus_one_u64(uint64_t p);

}  // namespace cmlv
