#include "dioph/surface.hpp"

#include <algorithm>
#include <stdexcept>

namespace dioph {

Problem problem_from_string(const std::string& s) {
    if (s == "II20" || s == "ii20") return Problem::II20;
    if (s == "II31" || s == "ii31") return Problem::II31;
    if (s == "III17" || s == "iii17") return Problem::III17;
    if (s == "IV18" || s == "iv18") return Problem::IV18;
    if (s == "IV32" || s == "iv32") return Problem::IV32;
    if (s == "V29" || s == "v29") return Problem::V29;
    throw std::invalid_argument("unknown problem identifier: " + s);
}

std::string to_string(Problem p) {
    switch (p) {
        case Problem::II20: return "II20";
        case Problem::II31: return "II31";
        case Problem::III17: return "III17";
        case Problem::IV18: return "IV18";
        case Problem::IV32: return "IV32";
        case Problem::V29: return "V29";
    }
    return "?";
}

namespace {

MultiPoly v(const std::vector<std::string>& vars, const std::string& name) {
    return MultiPoly::variable(vars, name);
}

MultiPoly k(const std::vector<std::string>& vars, const Rat& c) {
    return MultiPoly::constant(vars, c);
}

}  // namespace

SurfaceModel make_model(Problem p, const Rat& n) {
    SurfaceModel m;
    m.name = to_string(p);
    switch (p) {
        case Problem::II20: {
            // x^2 + y = u^2,  x + y^2 = v^2
            m.vars = {"x", "y", "u", "v"};
            m.weights = {1, 1, 1, 1};
            auto& V = m.vars;
            m.equations = {
                v(V, "x").pow(2) + v(V, "y") - v(V, "u").pow(2),
                v(V, "x") + v(V, "y").pow(2) - v(V, "v").pow(2),
            };
            m.witnesses = {"u", "v"};
            break;
        }
        case Problem::II31: {
            // x + y = u^2,  xy + x + y = v^2,  xy - x - y = w^2
            m.vars = {"x", "y", "u", "v", "w"};
            m.weights = {1, 1, 1, 1, 1};
            auto& V = m.vars;
            MultiPoly sum = v(V, "x") + v(V, "y");
            MultiPoly prod = v(V, "x") * v(V, "y");
            m.equations = {
                sum - v(V, "u").pow(2),
                prod + sum - v(V, "v").pow(2),
                prod - sum - v(V, "w").pow(2),
            };
            m.witnesses = {"u", "v", "w"};
            break;
        }
        case Problem::III17: {
            // xy + x + y = u^2,  xy + x = v^2,  xy + y = w^2
            m.vars = {"x", "y", "u", "v", "w"};
            m.weights = {1, 1, 1, 1, 1};
            auto& V = m.vars;
            MultiPoly prod = v(V, "x") * v(V, "y");
            m.equations = {
                prod + v(V, "x") + v(V, "y") - v(V, "u").pow(2),
                prod + v(V, "x") - v(V, "v").pow(2),
                prod + v(V, "y") - v(V, "w").pow(2),
            };
            m.witnesses = {"u", "v", "w"};
            break;
        }
        case Problem::IV18: {
            // x^3 + y = u^3,  x + y^2 = v^2
            m.vars = {"x", "y", "u", "v"};
            m.weights = {1, 1, 1, 1};
            auto& V = m.vars;
            m.equations = {
                v(V, "x").pow(3) + v(V, "y") - v(V, "u").pow(3),
                v(V, "x") + v(V, "y").pow(2) - v(V, "v").pow(2),
            };
            m.witnesses = {"u", "v"};
            break;
        }
        case Problem::IV32: {
            // With z = n - x - y eliminated:
            //   xy + x + y - n = u^2   (this is xy - z)
            //   xy - x - y + n = v^2   (this is xy + z)
            m.vars = {"x", "y", "u", "v"};
            m.weights = {1, 1, 1, 1};
            auto& V = m.vars;
            MultiPoly prod = v(V, "x") * v(V, "y");
            MultiPoly sum = v(V, "x") + v(V, "y");
            m.equations = {
                prod + sum - k(V, n) - v(V, "u").pow(2),
                prod - sum + k(V, n) - v(V, "v").pow(2),
            };
            m.witnesses = {"u", "v"};
            m.constants["n"] = n;
            break;
        }
        case Problem::V29: {
            // x^4 + y^4 + z^4 = w^2 in P(1,1,1,2)
            m.vars = {"x", "y", "z", "w"};
            m.weights = {1, 1, 1, 2};
            auto& V = m.vars;
            m.equations = {
                v(V, "x").pow(4) + v(V, "y").pow(4) + v(V, "z").pow(4) - v(V, "w").pow(2),
            };
            m.witnesses = {"w"};
            break;
        }
    }
    return m;
}

bool membership(const SurfaceModel& s, const RatPoint& p) {
    for (const auto& name : s.vars) {
        if (!p.count(name))
            throw std::invalid_argument("membership: missing coordinate " + name);
    }
    for (const auto& eq : s.equations) {
        if (!eq.eval(p).is_zero()) return false;
    }
    return true;
}

namespace {

const Rat& coord(const RatPoint& p, const std::string& name) {
    auto it = p.find(name);
    if (it == p.end()) throw std::invalid_argument("missing coordinate " + name);
    return it->second;
}

Rat ratio(const RatPoint& p, const std::string& num, const std::string& den) {
    const Rat& d = coord(p, den);
    if (d.is_zero())
        throw std::domain_error("fibration_value: indeterminacy locus (" + den + " = 0)");
    return coord(p, num) / d;
}

}  // namespace

std::vector<Rat> fibration_value(const SurfaceModel& s, const RatPoint& p) {
    if (s.name == "II20") return {coord(p, "u") - coord(p, "x")};
    if (s.name == "II31") return {ratio(p, "v", "u"), ratio(p, "w", "u")};
    if (s.name == "III17") return {ratio(p, "v", "x")};
    if (s.name == "IV18") return {coord(p, "u")};
    if (s.name == "IV32") return {coord(p, "y")};
    throw std::domain_error("fibration_value: no fibration for model " + s.name);
}

std::optional<RatPoint> witness_solve(const SurfaceModel& s, RatPoint partial) {
    for (const auto& eq : s.equations) {
        // Find the unknown witness variables this equation uses.
        std::vector<size_t> unknown;
        for (size_t i = 0; i < s.vars.size(); ++i) {
            const std::string& name = s.vars[i];
            bool used = std::any_of(eq.terms().begin(), eq.terms().end(),
                                    [&](const auto& t) { return t.first[i] != 0; });
            if (!used || partial.count(name)) continue;
            if (std::find(s.witnesses.begin(), s.witnesses.end(), name) == s.witnesses.end())
                throw std::invalid_argument("witness_solve: non-witness coordinate " + name +
                                            " missing");
            unknown.push_back(i);
        }
        if (unknown.empty()) {
            if (!eq.eval(partial).is_zero()) return std::nullopt;
            continue;
        }
        if (unknown.size() > 1) return std::nullopt;  // underdetermined
        size_t vi = unknown[0];
        // The witness must occur in a single term c * w^k.
        int power = 0;
        Rat coeff;
        MultiPoly rest(eq.vars());
        for (const auto& [exps, c] : eq.terms()) {
            if (exps[vi] == 0) {
                rest.add_term(exps, c);
                continue;
            }
            if (power != 0) return std::nullopt;  // witness appears twice
            bool pure = true;
            for (size_t j = 0; j < exps.size(); ++j)
                if (j != vi && exps[j] != 0) pure = false;
            if (!pure) return std::nullopt;
            power = exps[vi];
            coeff = c;
        }
        // c * w^k + rest = 0  =>  w^k = -rest / c
        Rat target = -rest.eval(partial) / coeff;
        std::optional<Rat> w;
        if (power == 2)
            w = target.sqrt();
        else if (power == 3)
            w = target.cbrt();
        else
            return std::nullopt;
        if (!w) return std::nullopt;
        partial[s.vars[vi]] = *w;
    }
    if (!membership(s, partial)) return std::nullopt;
    return partial;
}

bool all_positive(const RatPoint& p) {
    return std::all_of(p.begin(), p.end(), [](const auto& kv) { return kv.second.is_positive(); });
}

}  // namespace dioph
