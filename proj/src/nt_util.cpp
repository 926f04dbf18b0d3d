#include "dioph/nt_util.hpp"

#include <numeric>
#include <stdexcept>

namespace dioph {

uint64_t powmod(uint64_t base, uint64_t exp, uint64_t m) {
    if (m == 1) return 0;
    uint64_t r = 1;
    base %= m;
    while (exp) {
        if (exp & 1) r = mulmod(r, base, m);
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    return r;
}

uint64_t invmod(uint64_t a, uint64_t m) {
    a %= m;
    if (a == 0) throw std::domain_error("invmod: zero residue");
    return powmod(a, m - 2, m);
}

bool is_prime_u64(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // Deterministic witness set for 64-bit integers.
    for (uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 0; i < s - 1; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

namespace {

// One Brent round with increment c; 0 means "try another c".
uint64_t brent_round(uint64_t n, uint64_t c) {
    auto step = [&](uint64_t v) { return (mulmod(v, v, n) + c) % n; };
    uint64_t x = 2, y = 2, d = 1, q = 1, ys = 2;
    const uint64_t block = 128, give_up = 1ull << 23;
    for (uint64_t r = 1; d == 1; r <<= 1) {
        if (r > give_up) return 0;
        x = y;
        for (uint64_t i = 0; i < r; ++i) y = step(y);
        for (uint64_t k = 0; k < r && d == 1; k += block) {
            ys = y;
            uint64_t lim = std::min(block, r - k);
            for (uint64_t i = 0; i < lim; ++i) {
                y = step(y);
                uint64_t diff = x > y ? x - y : y - x;
                q = mulmod(q, diff, n);
            }
            d = std::gcd(q ? q : n, n);
        }
    }
    if (d == n) {
        // The block multiplied several factors together; redo it singly.
        do {
            ys = step(ys);
            uint64_t diff = x > ys ? x - ys : ys - x;
            d = std::gcd(diff ? diff : n, n);
        } while (d == 1);
    }
    return d == n ? 0 : d;
}

uint64_t pollard_brent(uint64_t n) {
    if ((n & 1) == 0) return 2;
    for (uint64_t c = 1;; ++c) {
        uint64_t d = brent_round(n, c);
        if (d) return d;
    }
}

void factor_rec(uint64_t n, std::map<uint64_t, int>& out) {
    if (n == 1) return;
    if (is_prime_u64(n)) {
        ++out[n];
        return;
    }
    uint64_t d = pollard_brent(n);
    factor_rec(d, out);
    factor_rec(n / d, out);
}

}  // namespace

std::map<uint64_t, int> factor_u64(uint64_t n) {
    if (n == 0) throw std::domain_error("factor_u64: zero");
    std::map<uint64_t, int> out;
    for (uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull}) {
        while (n % p == 0) {
            ++out[p];
            n /= p;
        }
    }
    factor_rec(n, out);
    return out;
}

}  // namespace dioph
