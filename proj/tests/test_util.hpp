#pragma once

#include <random>

#include "dioph/double_equation.hpp"
#include "dioph/rat.hpp"

namespace dioph::testutil {

inline std::mt19937_64& rng() {
    static std::mt19937_64 gen(0x0d10ffu);
    return gen;
}

inline long random_long(long lo, long hi) {
    std::uniform_int_distribution<long> d(lo, hi);
    return d(rng());
}

inline Rat random_rat(long height = 1000) {
    return Rat(random_long(-height, height), random_long(1, height));
}

inline Rat random_nonzero_rat(long height = 1000) {
    Rat r;
    do {
        r = random_rat(height);
    } while (r.is_zero());
    return r;
}

// Smoothness of the projective system by the Jacobian criterion, phrased in
// closed form: a singular point is either a double root of one homogenized
// quadratic (that form's gradient vanishes there) or a common root of both
// (Euler's identity forces the two gradient rows to be parallel there).
inline bool jacobian_smooth(const DoubleEquation& de) {
    auto disc_h = [](const Rat& a, const Rat& b, const Rat& c) { return b * b - Rat(4) * a * c; };
    if (disc_h(de.a1, de.b1, de.c1).is_zero()) return false;
    if (disc_h(de.a2, de.b2, de.c2).is_zero()) return false;
    Rat res = (de.a1 * de.c2 - de.a2 * de.c1).pow(2) -
              (de.a1 * de.b2 - de.a2 * de.b1) * (de.b1 * de.c2 - de.b2 * de.c1);
    return !res.is_zero();
}

inline DoubleEquation random_double_equation(long height = 9) {
    while (true) {
        try {
            return DoubleEquation(Rat(random_long(-height, height)),
                                  Rat(random_long(-height, height)),
                                  Rat(random_long(-height, height)),
                                  Rat(random_long(-height, height)),
                                  Rat(random_long(-height, height)),
                                  Rat(random_long(-height, height)));
        } catch (const std::invalid_argument&) {
            // zero or proportional draw; try again
        }
    }
}

// A smooth genus-one system carrying the given affine point (u0, v0 nonzero).
inline std::pair<DoubleEquation, CurvePoint> planted_smooth_instance() {
    while (true) {
        Rat x0 = random_rat(9);
        Rat u0 = random_nonzero_rat(9);
        Rat v0 = random_nonzero_rat(9);
        Rat a1(random_long(-9, 9)), b1(random_long(-9, 9));
        Rat a2(random_long(-9, 9)), b2(random_long(-9, 9));
        Rat c1 = u0 * u0 - a1 * x0 * x0 - b1 * x0;
        Rat c2 = v0 * v0 - a2 * x0 * x0 - b2 * x0;
        try {
            DoubleEquation de(a1, b1, c1, a2, b2, c2);
            if (!classify(de).smooth) continue;
            CurvePoint p = CurvePoint::affine(x0, u0, v0);
            if (!de.contains(p)) continue;
            return {de, p};
        } catch (const std::invalid_argument&) {
        }
    }
}

}  // namespace dioph::testutil
