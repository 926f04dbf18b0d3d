#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dioph/poly.hpp"
#include "dioph/rat.hpp"

namespace dioph {

class CurvePoint;

/// A pair of quadratics in one unknown that must simultaneously be squares:
///   a1 x^2 + b1 x + c1 = u^2
///   a2 x^2 + b2 x + c2 = v^2
/// The two polynomials may not be proportional (that system is degenerate).
struct DoubleEquation {
    Rat a1, b1, c1;
    Rat a2, b2, c2;

    DoubleEquation(Rat a1_, Rat b1_, Rat c1_, Rat a2_, Rat b2_, Rat c2_);

    UniPoly p1() const { return UniPoly({c1, b1, a1}); }
    UniPoly p2() const { return UniPoly({c2, b2, a2}); }

    /// Exact membership, valid for affine points and points at infinity.
    bool contains(const CurvePoint& p) const;
};

enum class HeathCase { I, II, III, Other };

std::string to_string(HeathCase c);

struct DoubleEqClass {
    HeathCase heath_case = HeathCase::Other;
    int genus = 0;                 // 1 exactly when smooth
    bool smooth = false;           // deg(p1 p2) in {3,4} and p1 p2 squarefree
    bool reducible = false;        // the curve splits into components over Q-bar
    bool first_order = false;      // a1 = a2 = 0
    bool difference_factorable = false;
    std::optional<Rat> alpha1;     // rational square root of a1, when one exists
    std::optional<Rat> alpha2;
};

DoubleEqClass classify(const DoubleEquation& de);

/// A point on the curve cut out by a DoubleEquation, stored projectively as
/// (X : U : V : Z) with coprime integer coordinates and the first nonzero
/// coordinate positive. Affine accessors reject points at infinity.
class CurvePoint {
public:
    static CurvePoint affine(const Rat& x, const Rat& u, const Rat& v);
    static CurvePoint projective(Int x, Int u, Int v, Int z);

    bool at_infinity() const { return h_[3] == 0; }
    Rat x() const { return affine_coord(0); }
    Rat u() const { return affine_coord(1); }
    Rat v() const { return affine_coord(2); }
    const std::array<Int, 4>& coords() const { return h_; }

    /// Largest |coordinate| of the primitive projective tuple (a crude height).
    Int height() const;

    std::string str() const;

    friend bool operator==(const CurvePoint& a, const CurvePoint& b) { return a.h_ == b.h_; }

private:
    CurvePoint() = default;
    Rat affine_coord(size_t i) const;

    std::array<Int, 4> h_;
};

/// A split of a difference-of-squares quadric into two factors of degree at
/// most one, together with the pencil parameter: the secant line is
///   (first square root sum)  = scale * f1,
///   (first square root diff) = scale^-1 * f2,
/// and f1 * f2 must reproduce the factored side exactly.
struct FactorPair {
    UniPoly f1, f2;
    Rat scale;

    static FactorPair checked(UniPoly f1, UniPoly f2, Rat scale, const UniPoly& product);
};

/// Outcome of a secant-method solve: a finite point, a point at infinity
/// (the method's line meets the curve again only there), or a typed
/// method-inapplicable verdict. Precondition violations throw instead.
struct SolveResult {
    enum class Status { Point, AtInfinity, Inapplicable };
    Status status = Status::Inapplicable;
    std::optional<CurvePoint> point;
    std::string reason;

    static SolveResult finite(CurvePoint p);
    static SolveResult infinity(CurvePoint p);
    static SolveResult inapplicable(std::string why);
};

/// The product split for a constant difference p1 - p2: chooses the squares
/// ((f+g)/2)^2 and ((f-g)/2)^2. Requires a1 = a2 = 0, b1 = b2, and a factor
/// pair with f*g = +-(c1-c2), f != +-g.
CurvePoint solve_genus0(const DoubleEquation& de, const Rat& f, const Rat& g);

/// a1 = a2 a nonzero square: line through the rational point at infinity
/// (1 : alpha : alpha : 0), secant parameter 2*alpha/(b1-b2).
SolveResult solve_case_i(const DoubleEquation& de, const DoubleEqClass& cls);

/// a1 a nonzero square, a2 = 0: after scaling the second equation so the
/// constant terms agree, v is forced constant and x solves a linear equation.
SolveResult solve_case_ii(const DoubleEquation& de, const DoubleEqClass& cls);

/// Classifies and dispatches to the applicable solver. The factor pair is
/// consumed only by the genus-zero route.
SolveResult solve_auto(const DoubleEquation& de,
                       const std::optional<std::pair<Rat, Rat>>& factors = std::nullopt);

/// One step of the secant construction: the line through P on the quadric
/// v0^2 u^2 - u0^2 v^2 = (x - x0) h(x) meets the curve in exactly one other
/// point, found by comparing coefficients of the quadratic with known root x0.
/// P may be a point at infinity (both leading coefficients must then be
/// nonzero squares); the caller's choice of P fixes all sign conventions.
SolveResult fermat_step(const DoubleEquation& de, const CurvePoint& p);

/// (1 - (-3)^n) / 4: the multiple of the base divisor reached after n steps.
/// Satisfies c_0 = 0 and c_{n+1} = 1 - 3 c_n.
Int fermat_coefficient(long n);

/// The 2 or 4 rational points at infinity (1 : +-alpha1 : +-alpha2 : 0),
/// empty unless both leading coefficients are rational squares.
std::vector<CurvePoint> points_at_infinity(const DoubleEquation& de);

/// Coordinatewise reduction of the primitive projective tuple. Requires good
/// reduction: p1 p2 stays squarefree of full degree mod the prime.
std::array<uint64_t, 4> reduce_point_mod_p(const DoubleEquation& de, const CurvePoint& p,
                                           uint64_t prime);

/// Equality of projective tuples over F_p (after scaling by the inverse of
/// the first nonzero coordinate).
bool proj_tuple_eq_mod_p(const std::array<uint64_t, 4>& a, const std::array<uint64_t, 4>& b,
                         uint64_t prime);

}  // namespace dioph
