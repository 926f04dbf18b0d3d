#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dioph/poly.hpp"
#include "dioph/rat.hpp"

namespace dioph {

/// A labeled tuple of rationals; the universal currency of solutions.
using RatPoint = std::map<std::string, Rat>;

enum class Problem { II20, II31, III17, IV18, IV32, V29 };

Problem problem_from_string(const std::string& s);
std::string to_string(Problem p);

/// A named system of polynomial equations in labeled variables. Weights are
/// all 1 except the V29 model, where w scales with the square of the scalar.
struct SurfaceModel {
    std::string name;
    std::vector<std::string> vars;
    std::vector<int> weights;
    std::vector<MultiPoly> equations;
    std::vector<std::string> witnesses;  // variables solvable from square/cube roots
    std::map<std::string, Rat> constants;
};

/// The canonical model for one of the six problems. The given number n is
/// only consulted by IV32 (the model is regenerated per n).
SurfaceModel make_model(Problem p, const Rat& n = Rat(6));

/// True iff every equation vanishes exactly at P. Coordinates not used by
/// the model are ignored; a missing coordinate is an error.
bool membership(const SurfaceModel& s, const RatPoint& p);

/// The base coordinate(s) of the model's fibration at P (pair-valued for
/// II31). Throws on the indeterminacy locus and for V29, which carries no
/// fibration.
std::vector<Rat> fibration_value(const SurfaceModel& s, const RatPoint& p);

/// Completes a partial point by extracting exact square/cube roots for the
/// witness variables; absent when some required root is irrational or a
/// witness-free equation already fails. Square-root witnesses are returned
/// nonnegative.
std::optional<RatPoint> witness_solve(const SurfaceModel& s, RatPoint partial);

/// True iff all coordinates of the point are strictly positive (the form of
/// solution the original problems ask for).
bool all_positive(const RatPoint& p);

}  // namespace dioph
