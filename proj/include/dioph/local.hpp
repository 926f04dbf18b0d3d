#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "dioph/double_equation.hpp"
#include "dioph/rat.hpp"

namespace dioph {

/// A place of Q: a finite prime or the real place.
struct Place {
    bool infinite = false;
    uint64_t p = 0;

    static Place at_infinity() { return {true, 0}; }
    static Place prime(uint64_t q) { return {false, q}; }
    std::string str() const { return infinite ? "infinity" : std::to_string(p); }
    friend bool operator==(const Place&, const Place&) = default;
};

/// Hilbert symbol (a, b) at the given place, in {+1, -1}. Both arguments
/// must be nonzero; the place must be a prime or infinity.
int hilbert_symbol(const Rat& a, const Rat& b, const Place& place);

/// Diagonal ternary form a X^2 + b Y^2 + c Z^2 = 0 with nonzero integer
/// coefficients, squarefree and pairwise coprime after normalization.
struct DiagConic {
    Int a, b, c;
};

struct ConicCertificate {
    bool soluble = false;
    DiagConic normalized;
    std::array<Int, 3> witness{};       // satisfies the *original* form when soluble
    std::vector<Place> obstructions;    // every place where the form has no point
};

/// Decides solubility of a X^2 + b Y^2 + c Z^2 = 0 over Q. When soluble, the
/// certificate carries an exact nonzero witness; when not, the full list of
/// obstructing places. Coefficients must be nonzero and fit in a signed
/// 64-bit word (they get factored).
ConicCertificate conic_soluble(const Int& a, const Int& b, const Int& c);

enum class PadicVerdict { Insoluble, Unknown };

/// One-sided p-adic certificate for a double equation: "Insoluble" only when
/// the exhaustive primitive search mod prime^k (points at infinity included)
/// rules out every candidate; otherwise "Unknown". Solubility itself is
/// certified elsewhere by explicit points.
PadicVerdict padic_insoluble_system(const DoubleEquation& de, uint64_t prime, int k);

}  // namespace dioph
