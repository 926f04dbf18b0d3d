#include "dioph/parametrize.hpp"

#include <stdexcept>

namespace dioph {

namespace {

void verify_on(Problem problem, const RatPoint& p, const Rat& n = Rat(6)) {
    if (!membership(make_model(problem, n), p))
        throw std::logic_error(to_string(problem) + " engine output fails membership");
}

const Rat& need(const std::map<std::string, Rat>& params, const std::string& name) {
    auto it = params.find(name);
    if (it == params.end()) throw std::invalid_argument("missing parameter --" + name);
    return it->second;
}

}  // namespace

RatPoint ii20_param(const Rat& lambda, const Rat& mu) {
    Rat den = Rat(4) * lambda.pow(3) - Rat(4) * lambda * mu + Rat(1);
    if (den.is_zero()) throw std::domain_error("ii20_param: indeterminacy (denominator vanishes)");
    Rat x = (mu * mu - lambda.pow(4)) / den;
    Rat y = Rat(2) * lambda * x + lambda * lambda;
    RatPoint p{{"x", x}, {"y", y}, {"u", x + lambda}, {"v", Rat(2) * lambda * x + mu}};
    verify_on(Problem::II20, p);
    return p;
}

std::pair<Rat, Rat> ii20_inverse(const RatPoint& p) {
    Rat lambda = p.at("u") - p.at("x");
    Rat mu = p.at("v") - Rat(2) * lambda * p.at("x");
    return {lambda, mu};
}

Ii31ProductSum ii31_ps(const Rat& a, const Rat& r) {
    if (a.is_zero() || r.is_zero()) throw std::domain_error("ii31_ps: parameters must be nonzero");
    Rat a2 = a * a, r2 = r * r;
    Ii31ProductSum out;
    out.product = (Rat(4) * r2 * r2 + Rat(1)) * a2;
    out.sum = Rat(4) * r2 * a2;
    out.sum_root = Rat(2) * r * a;
    out.plus_root = (Rat(2) * r2 + Rat(1)) * a;
    out.minus_root = (Rat(2) * r2 - Rat(1)) * a;
    return out;
}

RatPoint ii31_param(const Rat& lambda, const Rat& a) {
    if (lambda.is_zero() || a.is_zero())
        throw std::domain_error("ii31_param: parameters must be nonzero");
    Rat inv2a = (Rat(2) * a).inverse();
    Rat q = a * a + inv2a * inv2a;           // a^2 + 1/(4a^2)
    Rat m = a + inv2a, n = a - inv2a;        // point on the base conic m^2 - n^2 = 2
    Rat x = lambda * lambda + q;
    Rat u = x / lambda;
    RatPoint p{{"x", x}, {"y", q * x / (lambda * lambda)}, {"u", u}, {"v", m * u}, {"w", n * u}};
    verify_on(Problem::II31, p);
    return p;
}

RatPoint iii17_sigma(const Rat& t) {
    Rat t2 = t * t;
    Rat dx = Rat(16) * t2 * t2 - Rat(8) * t2;     // 16t^4 - 8t^2
    Rat dy = Rat(16) * t2 - Rat(8);               // 16t^2 - 8
    Rat du = Rat(16) * t2 * t - Rat(8) * t;       // 16t^3 - 8t
    if (t.is_zero() || dx.is_zero() || dy.is_zero() || du.is_zero())
        throw std::domain_error("iii17_sigma: excluded parameter value");
    RatPoint p{
        {"x", (Rat(16) * t2 + Rat(1)) / dx},
        {"y", Rat(9) / dy},
        {"u", (Rat(20) * t2 - Rat(1)) / du},
        {"v", (Rat(16) * t2 + Rat(1)) / du},
        {"w", (Rat(12) * t2 + Rat(3)) / du},
    };
    verify_on(Problem::III17, p);
    return p;
}

RatPoint iv18_section(const Rat& t) {
    if (t.is_zero()) throw std::domain_error("iv18_section: t must be nonzero");
    Rat x = (Rat(2) * t.pow(3)).inverse();
    Rat t6 = t.pow(6);
    Rat x3 = x.pow(3);
    RatPoint p{{"x", x}, {"y", t6 - x3}, {"u", t * t}, {"v", x3 + t6}};
    verify_on(Problem::IV18, p);
    return p;
}

RatPoint iv32_solve_fibre(const Rat& t0, const Rat& n, const Rat& l0, const Rat& m0) {
    if (t0.is_zero() || t0 == Rat(1) || t0 == Rat(-1))
        throw std::domain_error("iv32_solve_fibre: t0 must avoid {0, 1, -1}");
    Rat t2 = t0 * t0;
    Rat base = (n - Rat(1)) * t2 - n - Rat(1);     // (n-1)t0^2 - n - 1
    Rat rhs = (t2 * t2 - Rat(1)) * base;           // (t0^4 - 1) * base
    if (!(l0 * m0 == rhs))
        throw std::domain_error("iv32_solve_fibre: factor product does not match " + rhs.str());
    if (l0 == m0 || l0 == -m0)
        throw std::domain_error("iv32_solve_fibre: degenerate factor pair (l0 = +-m0)");
    Rat y = (t2 + Rat(1)) / (t2 - Rat(1));
    Rat uf = (l0 + m0) / (Rat(2) * t0);            // witness of the scaled first fibre equation
    Rat vf = (l0 - m0) * Rat(1, 2);
    Rat big = (t2 + Rat(1)) * base;                // constant term of the fibre system
    Rat z = (big - uf * uf) / (Rat(2) * (t2 - Rat(1)));
    Rat x = n - y - z;
    Rat scale = (t2 - Rat(1)).inverse();
    // xy + z = (uf * scale)^2 and xy - z = (vf * scale)^2.
    RatPoint p{{"x", x}, {"y", y}, {"z", z}, {"u", vf * scale}, {"v", uf * scale}};
    verify_on(Problem::IV32, p, n);
    if (!(x + y + z == n)) throw std::logic_error("iv32_solve_fibre: parts do not sum to n");
    return p;
}

RatPoint v29_curve(const Rat& p, const Rat& q, const Rat& c) {
    if (c.is_zero()) throw std::domain_error("v29_curve: c must be nonzero");
    if (!(p * p + q * q == c * c))
        throw std::domain_error("v29_curve: (p, q, c) is not a Pythagorean triple");
    // Scale to a primitive integer triple with c > 0.
    Int d = lcm(lcm(p.den(), q.den()), c.den());
    Int pi = p.num() * (d / p.den());
    Int qi = q.num() * (d / q.den());
    Int ci = c.num() * (d / c.den());
    Int g = gcd(gcd(pi, qi), ci);
    Rat pp(pi / g), qq(qi / g), cc(ci / g);
    if (cc.is_negative()) cc = -cc;
    Rat x = pp * qq / cc;
    Rat w = x * x - (pp * pp + qq * qq);
    if (w.is_negative()) w = -w;
    RatPoint pt{{"x", x}, {"y", pp}, {"z", qq}, {"w", w}};
    verify_on(Problem::V29, pt);
    return pt;
}

RatPoint run_engine(Problem problem, const std::map<std::string, Rat>& params) {
    switch (problem) {
        case Problem::II20: return ii20_param(need(params, "lambda"), need(params, "mu"));
        case Problem::II31: return ii31_param(need(params, "lambda"), need(params, "a"));
        case Problem::III17: return iii17_sigma(need(params, "t"));
        case Problem::IV18: return iv18_section(need(params, "t"));
        case Problem::IV32: {
            auto it = params.find("n");
            Rat n = it == params.end() ? Rat(6) : it->second;
            const Rat& t0 = need(params, "t0");
            if (params.count("l0") || params.count("m0"))
                return iv32_solve_fibre(t0, n, need(params, "l0"), need(params, "m0"));
            // Default splitter: the whole product times 1.
            Rat t2 = t0 * t0;
            Rat rhs = (t2 * t2 - Rat(1)) * ((n - Rat(1)) * t2 - n - Rat(1));
            return iv32_solve_fibre(t0, n, rhs, Rat(1));
        }
        case Problem::V29:
            return v29_curve(need(params, "p"), need(params, "q"), need(params, "c"));
    }
    throw std::invalid_argument("run_engine: unknown problem");
}

}  // namespace dioph
