#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace dioph {

// Arbitrary-precision integer. GMP supplies the substrate; everything built
// on top of it in this library is exact.
using Int = mpz_class;

Int gcd(const Int& a, const Int& b);
Int lcm(const Int& a, const Int& b);

/// Exact rational number, always in canonical form: den > 0, gcd(|num|, den) = 1,
/// and zero is 0/1. Canonical form makes equality structural.
class Rat {
public:
    Rat() : num_(0), den_(1) {}
    Rat(long n) : num_(n), den_(1) {}
    Rat(int n) : num_(n), den_(1) {}
    Rat(const Int& n) : num_(n), den_(1) {}
    Rat(Int num, Int den);
    Rat(long num, long den) : Rat(Int(num), Int(den)) {}

    /// Parses "p/q" or "p" (q > 0 not required; sign is normalized).
    static Rat parse(std::string_view s);

    const Int& num() const { return num_; }
    const Int& den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }
    bool is_positive() const { return num_ > 0; }
    bool is_negative() const { return num_ < 0; }
    int sign() const { return sgn(num_); }

    Rat abs() const;
    Rat inverse() const;

    /// Integer exponent; negative exponents invert (zero base rejected).
    Rat pow(long e) const;

    bool is_square() const;
    /// Exact nonnegative square root, if the value is a rational square.
    std::optional<Rat> sqrt() const;
    /// Exact cube root, if it exists (sign follows the argument).
    std::optional<Rat> cbrt() const;

    std::string str() const;

    Rat operator-() const;
    Rat& operator+=(const Rat& o);
    Rat& operator-=(const Rat& o);
    Rat& operator*=(const Rat& o);
    Rat& operator/=(const Rat& o);

    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

    friend bool operator==(const Rat& a, const Rat& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rat& a, const Rat& b);

private:
    void canonicalize();

    Int num_;
    Int den_;  // > 0
};

std::ostream& operator<<(std::ostream& os, const Rat& r);

/// Exact integer square root of a perfect square; nullopt otherwise (n >= 0).
std::optional<Int> exact_isqrt(const Int& n);

}  // namespace dioph
