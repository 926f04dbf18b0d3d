#include "dioph/local.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <set>

#include "dioph/nt_util.hpp"

namespace dioph {

namespace {

// p-adic valuation and unit part.
std::pair<unsigned long, Int> split_valuation(const Int& n, uint64_t p) {
    Int unit;
    Int f(static_cast<unsigned long>(p));
    unsigned long val = mpz_remove(unit.get_mpz_t(), n.get_mpz_t(), f.get_mpz_t());
    return {val, unit};
}

int legendre_mpz(const Int& a, uint64_t p) {
    Int pz(static_cast<unsigned long>(p));
    return mpz_legendre(a.get_mpz_t(), pz.get_mpz_t());
}

// (u-1)/2 mod 2 and (u^2-1)/8 mod 2 for odd u.
int eps2(const Int& u) { return mpz_fdiv_ui(u.get_mpz_t(), 4) == 3 ? 1 : 0; }
int omega2(const Int& u) {
    unsigned long r = mpz_fdiv_ui(u.get_mpz_t(), 8);
    return (r == 3 || r == 5) ? 1 : 0;
}

}  // namespace

int hilbert_symbol(const Rat& a, const Rat& b, const Place& place) {
    if (a.is_zero() || b.is_zero()) throw std::domain_error("hilbert_symbol: zero argument");
    // num*den lies in the same square class as the rational itself.
    Int A = a.num() * a.den();
    Int B = b.num() * b.den();
    if (place.infinite) return (A < 0 && B < 0) ? -1 : 1;
    uint64_t p = place.p;
    if (!is_prime_u64(p)) throw std::invalid_argument("hilbert_symbol: place is not prime");
    auto [alpha, u] = split_valuation(A, p);
    auto [beta, w] = split_valuation(B, p);
    if (p == 2) {
        int e = eps2(u) * eps2(w) + static_cast<int>(alpha % 2) * omega2(w) +
                static_cast<int>(beta % 2) * omega2(u);
        return e % 2 ? -1 : 1;
    }
    int sign = 1;
    if ((alpha % 2) && (beta % 2) && p % 4 == 3) sign = -sign;
    if (beta % 2) sign *= legendre_mpz(u, p);
    if (alpha % 2) sign *= legendre_mpz(w, p);
    return sign;
}

namespace {

struct NormalizedConic {
    std::array<int64_t, 3> coeff;
    std::array<Rat, 3> back;  // witness of normalized form times this solves the original
};

int64_t to_i64(const Int& v) {
    // Stay clear of INT64_MIN so negation and abs are safe, and keep the
    // factorization fast.
    if (!v.fits_slong_p() || v <= std::numeric_limits<long>::min())
        throw std::invalid_argument("conic coefficient exceeds the supported 64-bit range");
    return v.get_si();
}

// Removes the square part: v = v0 * s^2 with v0 squarefree. Returns (v0, s).
std::pair<int64_t, int64_t> squarefree_part(int64_t v) {
    uint64_t m = static_cast<uint64_t>(v < 0 ? -v : v);
    int64_t core = v < 0 ? -1 : 1;
    int64_t root = 1;
    for (const auto& [q, e] : factor_u64(m)) {
        for (int i = 0; i < e / 2; ++i) root *= static_cast<int64_t>(q);
        if (e % 2) core *= static_cast<int64_t>(q);
    }
    return {core, root};
}

NormalizedConic normalize_conic(const Int& a, const Int& b, const Int& c) {
    NormalizedConic n;
    n.coeff = {to_i64(a), to_i64(b), to_i64(c)};
    n.back = {Rat(1), Rat(1), Rat(1)};
    int64_t g = std::abs(std::gcd(std::gcd(n.coeff[0], n.coeff[1]), n.coeff[2]));
    for (auto& v : n.coeff) v /= g;
    for (int i = 0; i < 3; ++i) {
        auto [core, root] = squarefree_part(n.coeff[i]);
        n.coeff[i] = core;
        n.back[i] /= Rat(root);
    }
    // Make the coefficients pairwise coprime: if q divides two of them, move
    // it onto the third (substituting q Z' for Z drops the total valuation).
    bool changed = true;
    while (changed) {
        changed = false;
        for (int i = 0; i < 3 && !changed; ++i) {
            int j = (i + 1) % 3, k = (i + 2) % 3;
            int64_t q = std::abs(std::gcd(n.coeff[i], n.coeff[j]));
            if (q == 1) continue;
            // q squarefree; pick one prime factor at a time
            int64_t f = static_cast<int64_t>(factor_u64(static_cast<uint64_t>(q)).begin()->first);
            n.coeff[i] /= f;
            n.coeff[j] /= f;
            n.coeff[k] *= f;
            n.back[k] *= Rat(f);
            changed = true;
        }
    }
    return n;
}

std::vector<Place> conic_places(const std::array<int64_t, 3>& c) {
    std::set<uint64_t> primes{2};
    for (int64_t v : c)
        for (const auto& [q, e] : factor_u64(static_cast<uint64_t>(std::abs(v)))) primes.insert(q);
    std::vector<Place> out{Place::at_infinity()};
    for (uint64_t q : primes) out.push_back(Place::prime(q));
    return out;
}

// Search within the Holzer bounds |X| <= sqrt|bc|, |Y| <= sqrt|ac|; a soluble
// normalized form always has a solution in that box.
std::array<Int, 3> conic_witness(const std::array<int64_t, 3>& c) {
    Int A(static_cast<long>(c[0])), B(static_cast<long>(c[1])), C(static_cast<long>(c[2]));
    auto floor_sqrt = [](Int v) {
        if (v < 0) v = -v;
        Int r;
        mpz_sqrt(r.get_mpz_t(), v.get_mpz_t());
        return r;
    };
    Int bx = floor_sqrt(B * C) + 1;
    Int by = floor_sqrt(A * C) + 1;
    for (Int x = 0; x <= bx; ++x) {
        for (Int y = (x == 0 ? 1 : 0); y <= by; ++y) {
            Int t = -(A * x * x + B * y * y);
            if (t % C != 0) continue;
            Int s = t / C;
            auto z = exact_isqrt(s);
            if (z) return {x, y, *z};
        }
    }
    throw std::logic_error("conic_witness: no solution inside the Holzer box");
}

}  // namespace

ConicCertificate conic_soluble(const Int& a, const Int& b, const Int& c) {
    if (a == 0 || b == 0 || c == 0)
        throw std::invalid_argument("conic_soluble: zero coefficient");
    NormalizedConic n = normalize_conic(a, b, c);
    ConicCertificate cert;
    cert.normalized = {Int(static_cast<long>(n.coeff[0])), Int(static_cast<long>(n.coeff[1])),
                       Int(static_cast<long>(n.coeff[2]))};
    Rat A(cert.normalized.a), B(cert.normalized.b), C(cert.normalized.c);
    for (const Place& place : conic_places(n.coeff)) {
        if (hilbert_symbol(-A * C, -B * C, place) == -1) cert.obstructions.push_back(place);
    }
    cert.soluble = cert.obstructions.empty();
    if (!cert.soluble) return cert;

    std::array<Int, 3> w = conic_witness(n.coeff);
    // Map back through the normalization and clear to a primitive tuple.
    std::array<Rat, 3> wr;
    Int den(1);
    for (int i = 0; i < 3; ++i) {
        wr[i] = Rat(w[i]) * n.back[i];
        den = lcm(den, wr[i].den());
    }
    Int g = 0;
    for (int i = 0; i < 3; ++i) {
        cert.witness[i] = wr[i].num() * (den / wr[i].den());
        g = gcd(g, cert.witness[i]);
    }
    for (auto& v : cert.witness) v /= g;
    for (auto& v : cert.witness)
        if (v < 0) v = -v;  // signs are immaterial in a diagonal form
    Rat check = Rat(a) * Rat(cert.witness[0]).pow(2) + Rat(b) * Rat(cert.witness[1]).pow(2) +
                Rat(c) * Rat(cert.witness[2]).pow(2);
    if (!check.is_zero()) throw std::logic_error("conic_soluble: witness fails verification");
    return cert;
}

namespace {

// Integer model of one equation: d^2 * (a x^2 + b x + c) with d the lcm of
// the three denominators, reduced mod m.
std::array<uint64_t, 3> integral_form_mod(const Rat& a, const Rat& b, const Rat& c, uint64_t m) {
    Int d = lcm(lcm(a.den(), b.den()), c.den());
    Int d2 = d * d;
    auto red = [&](const Rat& q) {
        Int v = d2 / q.den() * q.num() % m;
        if (v < 0) v += m;
        return mpz_get_ui(v.get_mpz_t());
    };
    return {red(a), red(b), red(c)};
}

}  // namespace

PadicVerdict padic_insoluble_system(const DoubleEquation& de, uint64_t prime, int k) {
    if (!is_prime_u64(prime)) throw std::invalid_argument("padic_insoluble_system: not a prime");
    if (k < 1) throw std::invalid_argument("padic_insoluble_system: depth must be positive");
    uint64_t m = 1;
    for (int i = 0; i < k; ++i) {
        if (m > (1ull << 40) / prime) return PadicVerdict::Unknown;  // modulus out of reach
        m *= prime;
    }
    if (m > 20000) return PadicVerdict::Unknown;  // keep the pair scan bounded
    auto f1 = integral_form_mod(de.a1, de.b1, de.c1, m);
    auto f2 = integral_form_mod(de.a2, de.b2, de.c2, m);
    std::vector<uint8_t> is_square(m, 0);
    for (uint64_t w = 0; w < m; ++w) is_square[(w * w) % m] = 1;
    // A primitive p-adic solution has X or Z a unit: if p divided both, the
    // two quadratic forms would push p into U and V as well. Any solution
    // reduces mod p^k to an admissible pair with both forms squares.
    for (uint64_t x = 0; x < m; ++x) {
        for (uint64_t z = 0; z < m; ++z) {
            if (x % prime == 0 && z % prime == 0) continue;
            uint64_t xx = (x * x) % m, xz = (x * z) % m, zz = (z * z) % m;
            uint64_t s1 = (f1[0] * xx + f1[1] * xz + f1[2] * zz) % m;
            if (!is_square[s1]) continue;
            uint64_t s2 = (f2[0] * xx + f2[1] * xz + f2[2] * zz) % m;
            if (is_square[s2]) return PadicVerdict::Unknown;
        }
    }
    return PadicVerdict::Insoluble;
}

}  // namespace dioph
