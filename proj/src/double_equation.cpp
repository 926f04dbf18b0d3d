#include "dioph/double_equation.hpp"

#include <algorithm>
#include <sstream>

#include "dioph/nt_util.hpp"

namespace dioph {

namespace {

bool proportional(const Rat& a1, const Rat& b1, const Rat& c1, const Rat& a2, const Rat& b2,
                  const Rat& c2) {
    return a1 * b2 == a2 * b1 && a1 * c2 == a2 * c1 && b1 * c2 == b2 * c1;
}

}  // namespace

DoubleEquation::DoubleEquation(Rat a1_, Rat b1_, Rat c1_, Rat a2_, Rat b2_, Rat c2_)
    : a1(std::move(a1_)),
      b1(std::move(b1_)),
      c1(std::move(c1_)),
      a2(std::move(a2_)),
      b2(std::move(b2_)),
      c2(std::move(c2_)) {
    bool zero1 = a1.is_zero() && b1.is_zero() && c1.is_zero();
    bool zero2 = a2.is_zero() && b2.is_zero() && c2.is_zero();
    if (zero1 || zero2)
        throw std::invalid_argument("DoubleEquation: an equation is identically zero");
    if (proportional(a1, b1, c1, a2, b2, c2))
        throw std::invalid_argument("DoubleEquation: the two quadratics are proportional");
}

bool DoubleEquation::contains(const CurvePoint& p) const {
    const auto& h = p.coords();
    Rat X(h[0]), U(h[1]), V(h[2]), Z(h[3]);
    Rat q1 = a1 * X * X + b1 * X * Z + c1 * Z * Z;
    Rat q2 = a2 * X * X + b2 * X * Z + c2 * Z * Z;
    return q1 == U * U && q2 == V * V;
}

std::string to_string(HeathCase c) {
    switch (c) {
        case HeathCase::I: return "I";
        case HeathCase::II: return "II";
        case HeathCase::III: return "III";
        default: return "other";
    }
}

DoubleEqClass classify(const DoubleEquation& de) {
    DoubleEqClass cls;
    if (!de.a1.is_negative()) cls.alpha1 = de.a1.sqrt();
    if (!de.a2.is_negative()) cls.alpha2 = de.a2.sqrt();

    if (de.a1 == de.a2 && !de.a1.is_zero() && cls.alpha1)
        cls.heath_case = HeathCase::I;
    else if (!de.a1.is_zero() && cls.alpha1 && de.a2.is_zero())
        cls.heath_case = HeathCase::II;
    else if (de.c1.is_zero() && de.c2.is_zero())
        cls.heath_case = HeathCase::III;
    else
        cls.heath_case = HeathCase::Other;

    cls.first_order = de.a1.is_zero() && de.a2.is_zero();

    UniPoly p1 = de.p1(), p2 = de.p2();
    UniPoly prod = p1 * p2;
    cls.smooth = (prod.degree() == 3 || prod.degree() == 4) && prod.squarefree();
    cls.genus = cls.smooth ? 1 : 0;
    cls.reducible = p1.degree() < 1 || p2.degree() < 1 || !p1.squarefree() || !p2.squarefree();
    cls.difference_factorable = factor_difference(p1 - p2).has_value();
    return cls;
}

CurvePoint CurvePoint::affine(const Rat& x, const Rat& u, const Rat& v) {
    Int d = lcm(lcm(x.den(), u.den()), v.den());
    return projective(x.num() * (d / x.den()), u.num() * (d / u.den()), v.num() * (d / v.den()),
                      d);
}

CurvePoint CurvePoint::projective(Int x, Int u, Int v, Int z) {
    CurvePoint p;
    p.h_ = {std::move(x), std::move(u), std::move(v), std::move(z)};
    Int g = 0;
    for (const auto& c : p.h_) g = dioph::gcd(g, c);
    if (g == 0) throw std::invalid_argument("CurvePoint: all projective coordinates are zero");
    for (auto& c : p.h_) c /= g;
    for (const auto& c : p.h_) {
        if (c == 0) continue;
        if (c < 0)
            for (auto& d : p.h_) d = -d;
        break;
    }
    return p;
}

Rat CurvePoint::affine_coord(size_t i) const {
    if (at_infinity()) throw std::domain_error("CurvePoint: affine coordinate of a point at infinity");
    return Rat(h_[i], h_[3]);
}

Int CurvePoint::height() const {
    Int h = 0;
    for (const auto& c : h_) {
        Int a = c < 0 ? Int(-c) : c;
        if (a > h) h = a;
    }
    return h;
}

std::string CurvePoint::str() const {
    std::ostringstream os;
    os << "(" << h_[0] << ":" << h_[1] << ":" << h_[2] << ":" << h_[3] << ")";
    return os.str();
}

SolveResult SolveResult::finite(CurvePoint p) {
    return {Status::Point, std::move(p), {}};
}

SolveResult SolveResult::infinity(CurvePoint p) {
    return {Status::AtInfinity, std::move(p), {}};
}

SolveResult SolveResult::inapplicable(std::string why) {
    return {Status::Inapplicable, std::nullopt, std::move(why)};
}

FactorPair FactorPair::checked(UniPoly f1, UniPoly f2, Rat scale, const UniPoly& product) {
    if (scale.is_zero()) throw std::domain_error("FactorPair: zero scale");
    if (!(f1 * f2 == product))
        throw std::domain_error("FactorPair: factors do not multiply to the quadric side");
    return {std::move(f1), std::move(f2), std::move(scale)};
}

namespace {

// The two linear combinations cut out by the secant line of a factor pair:
// sum = scale*f1, diff = scale^-1*f2, so the halves recover the square roots.
std::pair<UniPoly, UniPoly> line_halves(const FactorPair& fp) {
    Rat half(1, 2);
    UniPoly sum = fp.scale * fp.f1;
    UniPoly diff = fp.scale.inverse() * fp.f2;
    return {half * (sum + diff), half * (sum - diff)};
}

}  // namespace

CurvePoint solve_genus0(const DoubleEquation& de, const Rat& f, const Rat& g) {
    if (!de.a1.is_zero() || !de.a2.is_zero())
        throw std::invalid_argument("solve_genus0: quadratic terms must vanish");
    if (!(de.b1 == de.b2))
        throw std::domain_error("solve_genus0: difference p1 - p2 is not constant");
    if (f == g || f == -g)
        throw std::domain_error("solve_genus0: degenerate factor split (f = +-g)");
    Rat diff = de.c1 - de.c2;  // nonzero, else the equations coincide
    Rat prod = f * g;
    bool straight = prod == diff;
    if (!straight && !(prod == -diff))
        throw std::domain_error("solve_genus0: factor product does not match the difference");
    // The pair splits u^2 - v^2 = p1 - p2, or v^2 - u^2 when it matches the
    // negated difference.
    FactorPair fp = FactorPair::checked(UniPoly::constant(f), UniPoly::constant(g), Rat(1),
                                        straight ? de.p1() - de.p2() : de.p2() - de.p1());
    auto [sum_half, diff_half] = line_halves(fp);
    Rat u = straight ? sum_half.coeff(0) : diff_half.coeff(0);
    Rat v = straight ? diff_half.coeff(0) : sum_half.coeff(0);
    if (de.b1.is_zero())
        throw std::domain_error("solve_genus0: first equation has no linear term");
    Rat x = (u * u - de.c1) / de.b1;
    CurvePoint p = CurvePoint::affine(x, u, v);
    if (!de.contains(p)) throw std::logic_error("solve_genus0: solution fails verification");
    return p;
}

SolveResult solve_case_i(const DoubleEquation& de, const DoubleEqClass& cls) {
    if (cls.heath_case != HeathCase::I)
        throw std::invalid_argument("solve_case_i: not a case I system");
    const Rat alpha = *cls.alpha1;
    Rat m1 = de.b1 - de.b2;
    if (m1.is_zero())
        throw std::domain_error("solve_case_i: b1 = b2 leaves no secant parameter");
    Rat n1 = de.c1 - de.c2;
    // n2 = 1 normalization; lambda makes the leading coefficient of u^2 hit a1.
    Rat lambda = Rat(2) * alpha / m1;
    FactorPair fp = FactorPair::checked(UniPoly({n1, m1}), UniPoly::constant(Rat(1)), lambda,
                                        de.p1() - de.p2());
    auto [u_line, v_line] = line_halves(fp);
    UniPoly residue = u_line * u_line - de.p1();
    if (residue.degree() > 1) throw std::logic_error("solve_case_i: quadratic term survived");
    if (residue.degree() < 1) {
        if (residue.is_zero())
            return SolveResult::inapplicable("secant line lies on the curve (reducible system)");
        Int d = alpha.den();
        return SolveResult::infinity(CurvePoint::projective(d, alpha.num(), alpha.num(), 0));
    }
    Rat x = -residue.coeff(0) / residue.coeff(1);
    CurvePoint p = CurvePoint::affine(x, u_line.eval(x), v_line.eval(x));
    if (!de.contains(p)) throw std::logic_error("solve_case_i: solution fails verification");
    return SolveResult::finite(p);
}

SolveResult solve_case_ii(const DoubleEquation& de, const DoubleEqClass& cls) {
    if (cls.heath_case != HeathCase::II)
        throw std::invalid_argument("solve_case_ii: not a case II system");
    const Rat alpha = *cls.alpha1;
    Rat scale_root(1);
    if (!(de.c1 == de.c2)) {
        if (de.c2.is_zero())
            throw std::domain_error("solve_case_ii: cannot scale second equation (c2 = 0)");
        auto sr = (de.c1 / de.c2).sqrt();
        if (!sr)
            throw std::domain_error(
                "solve_case_ii: c1/c2 is not a rational square; constant terms cannot be matched");
        scale_root = *sr;
    }
    // Scaled second equation (scale_root * v)^2 = p2s with matching constant.
    UniPoly p2s = (scale_root * scale_root) * de.p2();
    Rat b2s = p2s.coeff(1);
    FactorPair fp = FactorPair::checked(
        UniPoly({(de.b1 - b2s) / alpha, alpha}), UniPoly({Rat(0), alpha}), Rat(1),
        de.p1() - p2s);
    auto [u_line, v_line] = line_halves(fp);
    if (v_line.degree() > 0) throw std::logic_error("solve_case_ii: v is not constant");
    Rat v_scaled = v_line.coeff(0);
    UniPoly residue = v_line * v_line - p2s;
    if (residue.degree() < 1) {
        if (residue.is_zero())
            return SolveResult::inapplicable("secant line lies on the curve (reducible system)");
        Int d = alpha.den();
        return SolveResult::infinity(CurvePoint::projective(d, alpha.num(), 0, 0));
    }
    Rat x = -residue.coeff(0) / residue.coeff(1);
    CurvePoint p = CurvePoint::affine(x, u_line.eval(x), v_scaled / scale_root);
    if (!de.contains(p)) throw std::logic_error("solve_case_ii: solution fails verification");
    return SolveResult::finite(p);
}

SolveResult solve_auto(const DoubleEquation& de,
                       const std::optional<std::pair<Rat, Rat>>& factors) {
    DoubleEqClass cls = classify(de);
    if (cls.first_order) {
        if (!(de.b1 == de.b2))
            return SolveResult::inapplicable(
                "first-order system with non-constant difference");
        if (!factors)
            return SolveResult::inapplicable(
                "first-order system needs an explicit factor pair for the constant difference");
        return SolveResult::finite(solve_genus0(de, factors->first, factors->second));
    }
    switch (cls.heath_case) {
        case HeathCase::I: return solve_case_i(de, cls);
        case HeathCase::II: return solve_case_ii(de, cls);
        case HeathCase::III:
            return SolveResult::inapplicable(
                "c1 = c2 = 0 reduces to a plane conic; the secant method does not apply");
        default:
            break;
    }
    if (!cls.difference_factorable)
        return SolveResult::inapplicable(
            "difference of the quadratics is irreducible over Q (no rational line on the quadric)");
    return SolveResult::inapplicable(
        "no secant parameter makes the equation for x linear (leading coefficients unusable)");
}

namespace {

// The secant line through P splits the combination quadric as
// (s2 u + s1 v)(s2 u - s1 v) = f1 f2; recover u(x) and v(x) from the halves.
std::pair<UniPoly, UniPoly> secant_lines(const FactorPair& fp, const Rat& s1, const Rat& s2) {
    auto [sum_half, diff_half] = line_halves(fp);
    return {s2.inverse() * sum_half, s1.inverse() * diff_half};
}

SolveResult fermat_step_infinite(const DoubleEquation& de, const CurvePoint& p) {
    const auto& h = p.coords();
    Rat u_inf(h[1], h[0]);
    Rat v_inf(h[2], h[0]);
    if (u_inf.is_zero() || v_inf.is_zero())
        throw std::domain_error("fermat_step: degenerate secant (a coordinate of P vanishes)");
    // a2 u^2 - a1 v^2 = (v_inf u + u_inf v)(v_inf u - u_inf v) = m x + n on the curve.
    Rat m = de.a2 * de.b1 - de.a1 * de.b2;
    Rat n = de.a2 * de.c1 - de.a1 * de.c2;
    if (m.is_zero()) throw std::domain_error("fermat_step: tangential degeneracy (m = 0)");
    Rat lambda = Rat(2) * u_inf * v_inf / m;
    FactorPair fp = FactorPair::checked(UniPoly({n, m}), UniPoly::constant(Rat(1)), lambda,
                                        de.a2 * de.p1() - de.a1 * de.p2());
    auto [u_line, v_line] = secant_lines(fp, u_inf, v_inf);
    // The quadratic term of u^2 - p1 cancels by the choice of lambda.
    UniPoly q = u_line * u_line - de.p1();
    if (q.degree() > 1) throw std::logic_error("fermat_step: quadratic term failed to cancel");
    if (q.is_zero()) throw std::logic_error("fermat_step: line lies on the curve");
    if (q.degree() == 0) return SolveResult::infinity(p);  // tangent at P
    Rat x = -q.coeff(0) / q.coeff(1);
    CurvePoint r = CurvePoint::affine(x, u_line.eval(x), v_line.eval(x));
    if (!de.contains(r)) throw std::logic_error("fermat_step: output fails verification");
    return SolveResult::finite(r);
}

}  // namespace

SolveResult fermat_step(const DoubleEquation& de, const CurvePoint& p) {
    if (!de.contains(p)) throw std::invalid_argument("fermat_step: point is not on the curve");
    if (p.at_infinity()) return fermat_step_infinite(de, p);

    Rat x0 = p.x(), u0 = p.u(), v0 = p.v();
    if (u0.is_zero() || v0.is_zero())
        throw std::domain_error("fermat_step: degenerate secant (u0 or v0 vanishes)");
    Rat l = v0 * v0 * de.a1 - u0 * u0 * de.a2;
    Rat m = v0 * v0 * de.b1 - u0 * u0 * de.b2;
    // The combination v0^2 p1 - u0^2 p2 vanishes at x0, so it factors as
    // (x - x0) h(x) with h(x) = l x + m + l x0.
    Rat h0 = m + l * x0;
    Rat h_at_x0 = l * x0 + h0;
    if (h_at_x0.is_zero()) throw std::domain_error("fermat_step: tangential degeneracy (h(x0) = 0)");
    Rat lambda = Rat(2) * u0 * v0 / h_at_x0;
    FactorPair fp = FactorPair::checked(UniPoly({h0, l}), UniPoly({-x0, Rat(1)}), lambda,
                                        v0 * v0 * de.p1() - u0 * u0 * de.p2());
    auto [u_line, v_line] = secant_lines(fp, u0, v0);
    UniPoly q = u_line * u_line - de.p1();
    if (q.is_zero()) throw std::logic_error("fermat_step: line lies on the curve");
    if (q.degree() <= 1) {
        // Second intersection escaped to infinity along the line.
        Rat xa = u_line.coeff(1), xv = v_line.coeff(1);
        Int d = lcm(xa.den(), xv.den());
        return SolveResult::infinity(
            CurvePoint::projective(d, xa.num() * (d / xa.den()), xv.num() * (d / xv.den()), 0));
    }
    // x0 is one root; Vieta reads the other off the coefficient sum.
    Rat x1 = -q.coeff(1) / q.coeff(2) - x0;
    CurvePoint r = CurvePoint::affine(x1, u_line.eval(x1), v_line.eval(x1));
    if (!de.contains(r)) throw std::logic_error("fermat_step: output fails verification");
    return SolveResult::finite(r);
}

Int fermat_coefficient(long n) {
    if (n < 0) throw std::invalid_argument("fermat_coefficient: n must be nonnegative");
    Int t;
    mpz_ui_pow_ui(t.get_mpz_t(), 3, static_cast<unsigned long>(n));
    if (n % 2 == 1) t = -t;
    return (1 - t) / 4;
}

std::vector<CurvePoint> points_at_infinity(const DoubleEquation& de) {
    DoubleEqClass cls = classify(de);
    std::vector<CurvePoint> pts;
    if (!cls.alpha1 || !cls.alpha2) return pts;
    Rat a1 = *cls.alpha1, a2 = *cls.alpha2;
    Int d = lcm(a1.den(), a2.den());
    Int n1 = a1.num() * (d / a1.den());
    Int n2 = a2.num() * (d / a2.den());
    for (int s1 : {1, -1}) {
        for (int s2 : {1, -1}) {
            CurvePoint p = CurvePoint::projective(d, s1 * n1, s2 * n2, 0);
            if (std::find(pts.begin(), pts.end(), p) == pts.end()) pts.push_back(p);
        }
    }
    return pts;
}

std::array<uint64_t, 4> reduce_point_mod_p(const DoubleEquation& de, const CurvePoint& p,
                                           uint64_t prime) {
    UniPoly prod = de.p1() * de.p2();
    if (!squarefree_mod_p(prod, prime))
        throw std::domain_error("reduce_point_mod_p: bad reduction (repeated roots mod p)");
    if (ModPoly::reduce(prod, prime).degree() != prod.degree())
        throw std::domain_error("reduce_point_mod_p: bad reduction (degree drops mod p)");
    std::array<uint64_t, 4> out{};
    for (size_t i = 0; i < 4; ++i) {
        Int r = p.coords()[i] % prime;
        if (r < 0) r += prime;
        out[i] = mpz_get_ui(r.get_mpz_t());
    }
    return out;
}

bool proj_tuple_eq_mod_p(const std::array<uint64_t, 4>& a, const std::array<uint64_t, 4>& b,
                         uint64_t prime) {
    auto normalize = [&](std::array<uint64_t, 4> t) {
        for (auto& c : t) c %= prime;
        for (const auto& c : t) {
            if (c == 0) continue;
            uint64_t inv = invmod(c, prime);
            for (auto& d : t) d = mulmod(d, inv, prime);
            break;
        }
        return t;
    };
    return normalize(a) == normalize(b);
}

}  // namespace dioph
