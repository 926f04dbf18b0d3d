#pragma once

#include <map>
#include <string>
#include <utility>

#include "dioph/rat.hpp"
#include "dioph/surface.hpp"

namespace dioph {

/// Birational parametrization of the II20 surface:
///   x = (mu^2 - lambda^4) / (4 lambda^3 - 4 lambda mu + 1),
///   y = 2 lambda x + lambda^2,  u = x + lambda,  v = 2 lambda x + mu.
RatPoint ii20_param(const Rat& lambda, const Rat& mu);

/// Inverse of ii20_param: lambda = u - x, mu = v - 2 lambda x.
std::pair<Rat, Rat> ii20_inverse(const RatPoint& p);

/// Product/sum pair P = (4r^4+1)a^2, S = 4r^2a^2 with square witnesses for
/// S, P+S and P-S.
struct Ii31ProductSum {
    Rat product;       // P
    Rat sum;           // S
    Rat sum_root;      // 2ra
    Rat plus_root;     // (2r^2+1)a, squares to P+S
    Rat minus_root;    // (2r^2-1)a, squares to P-S
};
Ii31ProductSum ii31_ps(const Rat& a, const Rat& r);

/// Full parametrization of the II31 surface from the fibre parameter lambda
/// and the base-conic parameter a.
RatPoint ii31_param(const Rat& lambda, const Rat& a);

/// Section of the III17 genus-one fibration:
///   x = (16t^2+1)/(16t^4-8t^2), y = 9/(16t^2-8), and matching u, v, w.
RatPoint iii17_sigma(const Rat& t);

/// Section of the base-changed IV18 fibration: x = 1/(2t^3), y = t^6 - x^3,
/// u = t^2, v = x^3 + t^6.
RatPoint iv18_section(const Rat& t);

/// Solves the IV32 fibre over t0 for the split l0 * m0 of
/// (t0^4-1)((n-1)t0^2-n-1). Returns parts x, y, z summing to n, with u, v
/// the witnesses for xy-z and xy+z.
RatPoint iv32_solve_fibre(const Rat& t0, const Rat& n, const Rat& l0, const Rat& m0);

/// Rational curve on the V29 surface through a Pythagorean triple p^2+q^2=c^2:
/// (x, y, z, w) = (pq/c, p, q, |x^2 - (p^2+q^2)|). The triple is scaled to a
/// primitive integer one first.
RatPoint v29_curve(const Rat& p, const Rat& q, const Rat& c);

/// Dispatch by problem id with named parameters (lambda, mu, a, r, t, t0, n,
/// l0, m0, p, q, c as each engine requires). Throws invalid_argument for
/// missing parameters, domain_error for excluded values.
RatPoint run_engine(Problem problem, const std::map<std::string, Rat>& params);

}  // namespace dioph
