#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dioph/rat.hpp"

namespace dioph {

/// Univariate polynomial over the rationals, coefficients lowest degree first.
/// The zero polynomial has an empty coefficient list; otherwise the leading
/// coefficient is nonzero.
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Rat> coeffs, std::string var = "x");
    static UniPoly constant(const Rat& c, std::string var = "x");
    /// c0 + c1 x + c2 x^2 + ...
    static UniPoly of(std::initializer_list<Rat> coeffs, std::string var = "x");

    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    bool is_zero() const { return c_.empty(); }
    const Rat& coeff(int i) const;
    const Rat& leading() const;
    const std::string& var() const { return var_; }
    const std::vector<Rat>& coeffs() const { return c_; }

    Rat eval(const Rat& x) const;
    UniPoly derivative() const;

    UniPoly operator-() const;
    friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator*(const Rat& s, const UniPoly& a);
    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }

    /// Content c such that *this = c * primitive_part(), with the primitive
    /// part having coprime integer coefficients and positive leading one.
    Rat content() const;
    UniPoly primitive_part() const;

    /// Monic gcd over Q (zero polynomial if both are zero).
    static UniPoly gcd(UniPoly a, UniPoly b);
    bool squarefree() const;

    std::string str() const;

private:
    void trim();

    std::vector<Rat> c_;
    std::string var_ = "x";
};

/// All rational roots of a polynomial of degree <= 2, with multiplicity.
/// An empty list is a valid answer (irrational or complex roots).
std::vector<Rat> quad_roots(const UniPoly& p);

/// Splits a degree <= 2 polynomial into two factors of degree <= 1 over Q,
/// absent when the quadratic is irreducible over the rationals.
std::optional<std::pair<UniPoly, UniPoly>> factor_difference(const UniPoly& d);

/// Polynomial over a prime field, residues in [0, p).
class ModPoly {
public:
    ModPoly(std::vector<uint64_t> coeffs, uint64_t p);
    /// Reduces a rational polynomial mod p; throws if p divides a denominator.
    static ModPoly reduce(const UniPoly& f, uint64_t p);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    uint64_t modulus() const { return p_; }
    const std::vector<uint64_t>& coeffs() const { return c_; }

    uint64_t eval(uint64_t x) const;
    ModPoly derivative() const;
    static ModPoly gcd(ModPoly a, ModPoly b);

private:
    void trim();

    std::vector<uint64_t> c_;
    uint64_t p_;
};

/// True iff the reduction of f mod p has no repeated roots, i.e.
/// gcd(f mod p, f' mod p) is constant. Throws if p divides a denominator
/// of f or if p is not a prime below 2^61.
bool squarefree_mod_p(const UniPoly& f, uint64_t p);

/// Multivariate polynomial: exponent vectors (aligned with the variable list)
/// mapped to nonzero rational coefficients.
class MultiPoly {
public:
    explicit MultiPoly(std::vector<std::string> vars);
    static MultiPoly variable(const std::vector<std::string>& vars, const std::string& name);
    static MultiPoly constant(const std::vector<std::string>& vars, const Rat& c);

    MultiPoly& add_term(std::vector<int> exps, const Rat& coeff);

    const std::vector<std::string>& vars() const { return vars_; }
    const std::map<std::vector<int>, Rat>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    /// Evaluates at the given coordinates; throws if a used variable is
    /// missing. Extra coordinates are ignored.
    Rat eval(const std::map<std::string, Rat>& values) const;

    MultiPoly pow(int e) const;
    MultiPoly operator-() const;
    friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);

    std::string str() const;

private:
    std::vector<std::string> vars_;
    std::map<std::vector<int>, Rat> terms_;
};

}  // namespace dioph
