#pragma once

#include <cstdint>
#include <map>
#include <vector>

namespace dioph {

// Modular arithmetic on uint64_t; moduli up to 2^61 so products fit __int128.
inline uint64_t mulmod(uint64_t a, uint64_t b, uint64_t m) {
    return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

uint64_t powmod(uint64_t base, uint64_t exp, uint64_t m);
uint64_t invmod(uint64_t a, uint64_t m);  // m prime, a != 0 mod m

bool is_prime_u64(uint64_t n);

/// Prime factorization of n >= 1 (Pollard-Brent rho, exact for all 64-bit inputs).
std::map<uint64_t, int> factor_u64(uint64_t n);

}  // namespace dioph
