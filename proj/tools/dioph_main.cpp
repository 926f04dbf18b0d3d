// dioph: batch front end for the Diophantus surface engines.
//
// Subcommands: param, verify, doubleeq, conic, reduce. Every emitted point is
// re-verified through exact membership before printing; reports are JSON on
// stdout, deterministic byte-for-byte (timing goes to stderr).
//
// Exit codes: 0 success, 2 method inapplicable / no solution / verification
// failure, 3 invalid input.

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "dioph/double_equation.hpp"
#include "dioph/local.hpp"
#include "dioph/model_json.hpp"
#include "dioph/parametrize.hpp"
#include "dioph/surface.hpp"

namespace {

using dioph::CurvePoint;
using dioph::DoubleEquation;
using dioph::Int;
using dioph::Problem;
using dioph::Rat;
using dioph::RatPoint;
using json = nlohmann::ordered_json;

constexpr int kExitInapplicable = 2;
constexpr int kExitInvalidInput = 3;

int hensel_depth() {
    const char* env = std::getenv("DIOPH_PRECISION");
    if (!env) return 6;
    int k = std::atoi(env);
    if (k < 1 || k > 12) throw std::invalid_argument("DIOPH_PRECISION must be in 1..12");
    return k;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : s) {
        if (ch == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    out.push_back(cur);
    return out;
}

std::vector<Rat> parse_rat_list(const std::string& s, size_t expect) {
    auto parts = split(s, ',');
    if (expect && parts.size() != expect)
        throw std::invalid_argument("expected " + std::to_string(expect) +
                                    " comma-separated rationals, got '" + s + "'");
    std::vector<Rat> out;
    for (const auto& p : parts) out.push_back(Rat::parse(p));
    return out;
}

RatPoint parse_named_point(const std::string& s) {
    RatPoint p;
    for (const auto& item : split(s, ',')) {
        auto eq = item.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("point coordinates must be name=value pairs: '" + item + "'");
        std::string name = item.substr(0, eq);
        while (!name.empty() && name.front() == ' ') name.erase(name.begin());
        while (!name.empty() && name.back() == ' ') name.pop_back();
        p[name] = Rat::parse(item.substr(eq + 1));
    }
    return p;
}

json point_to_json(const RatPoint& p, const std::vector<std::string>& order) {
    json j = json::object();
    for (const auto& name : order) {
        auto it = p.find(name);
        if (it != p.end()) j[name] = it->second.str();
    }
    for (const auto& [name, value] : p) {
        if (!j.contains(name)) j[name] = value.str();
    }
    return j;
}

json verify_equations(const dioph::SurfaceModel& model, const RatPoint& p, bool& all_ok) {
    json v = json::object();
    all_ok = true;
    for (size_t i = 0; i < model.equations.size(); ++i) {
        bool ok = model.equations[i].eval(p).is_zero();
        v["eq" + std::to_string(i + 1)] = ok;
        all_ok = all_ok && ok;
    }
    return v;
}

std::string proj_str(const std::array<uint64_t, 4>& t) {
    std::ostringstream os;
    os << "(" << t[0] << ":" << t[1] << ":" << t[2] << ":" << t[3] << ")";
    return os.str();
}

json curve_point_json(const CurvePoint& p) {
    json j = json::object();
    j["projective"] = p.str();
    if (!p.at_infinity()) {
        j["x"] = p.x().str();
        j["u"] = p.u().str();
        j["v"] = p.v().str();
    }
    return j;
}

struct Report {
    std::string command;
    json inputs = json::object();
    json outputs = json::object();
    json verified;
    std::string error;
    int exit_code = 0;

    int emit(std::ostream& os) const {
        json j;
        j["command"] = command;
        j["inputs"] = inputs;
        if (!error.empty()) j["error"] = error;
        if (!outputs.empty()) j["outputs"] = outputs;
        if (!verified.is_null()) j["verified"] = verified;
        j["exit_code"] = exit_code;
        os << j.dump(2) << "\n";
        return exit_code;
    }
};

// ---- param ---------------------------------------------------------------

int cmd_param(const std::string& problem_name, const std::map<std::string, std::string>& flags,
              bool positive_filter, std::ostream& os) {
    Report rep;
    rep.command = "param";
    rep.inputs["problem"] = problem_name;
    for (const auto& [k, v] : flags) rep.inputs[k] = v;
    if (positive_filter) rep.inputs["positive"] = true;
    try {
        Problem problem = dioph::problem_from_string(problem_name);
        std::map<std::string, Rat> params;
        for (const auto& [k, v] : flags) params[k] = Rat::parse(v);
        RatPoint point = dioph::run_engine(problem, params);
        Rat n = params.count("n") ? params.at("n") : Rat(6);
        auto model = dioph::make_model(problem, n);
        rep.outputs["point"] = point_to_json(point, model.vars);
        bool positive = dioph::all_positive(point);
        rep.outputs["positive"] = positive;
        bool ok = false;
        rep.verified = verify_equations(model, point, ok);
        if (!ok) {
            rep.error = "membership verification failed";
            rep.exit_code = kExitInapplicable;
        } else if (positive_filter && !positive) {
            rep.error = "point is not positive in all coordinates";
            rep.exit_code = kExitInapplicable;
        }
    } catch (const std::domain_error& e) {
        rep.error = e.what();
        rep.exit_code = kExitInapplicable;
    } catch (const std::invalid_argument& e) {
        rep.error = e.what();
        rep.exit_code = kExitInvalidInput;
    }
    return rep.emit(os);
}

// ---- verify ----------------------------------------------------------------

int cmd_verify(const std::string& problem_name, const std::string& point_str,
               bool solve_witnesses, const std::string& n_str, std::ostream& os) {
    Report rep;
    rep.command = "verify";
    rep.inputs["problem"] = problem_name;
    rep.inputs["point"] = point_str;
    try {
        Problem problem = dioph::problem_from_string(problem_name);
        Rat n = n_str.empty() ? Rat(6) : Rat::parse(n_str);
        auto model = dioph::make_model(problem, n);
        RatPoint point = parse_named_point(point_str);
        if (solve_witnesses) {
            auto completed = dioph::witness_solve(model, point);
            if (!completed) {
                rep.error = "no rational witness completion exists";
                rep.exit_code = kExitInapplicable;
                return rep.emit(os);
            }
            point = *completed;
        }
        rep.outputs["point"] = point_to_json(point, model.vars);
        rep.outputs["positive"] = dioph::all_positive(point);
        bool ok = false;
        rep.verified = verify_equations(model, point, ok);
        if (!ok) {
            rep.error = "point is not on the surface";
            rep.exit_code = kExitInapplicable;
        }
    } catch (const std::domain_error& e) {
        rep.error = e.what();
        rep.exit_code = kExitInapplicable;
    } catch (const std::invalid_argument& e) {
        rep.error = e.what();
        rep.exit_code = kExitInvalidInput;
    }
    return rep.emit(os);
}

// ---- doubleeq --------------------------------------------------------------

json classification_json(const dioph::DoubleEqClass& cls) {
    json j;
    j["heath_case"] = dioph::to_string(cls.heath_case);
    j["genus"] = cls.genus;
    j["smooth"] = cls.smooth;
    j["reducible"] = cls.reducible;
    j["first_order"] = cls.first_order;
    j["difference_factorable"] = cls.difference_factorable;
    j["alpha1"] = cls.alpha1 ? json(cls.alpha1->str()) : json(nullptr);
    j["alpha2"] = cls.alpha2 ? json(cls.alpha2->str()) : json(nullptr);
    return j;
}

json obstruction_report(const DoubleEquation& de) {
    json obs = json::array();
    int depth = hensel_depth();
    for (uint64_t p : {2ull, 3ull}) {
        if (dioph::padic_insoluble_system(de, p, depth) == dioph::PadicVerdict::Insoluble)
            obs.push_back(std::to_string(p) + "-adically insoluble at depth " +
                          std::to_string(depth));
    }
    return obs;
}

int cmd_doubleeq(const std::string& coeffs, const std::string& action,
                 const std::string& factors_str, int steps, const std::string& from,
                 std::ostream& os) {
    Report rep;
    rep.command = "doubleeq";
    rep.inputs["coefficients"] = coeffs;
    rep.inputs["action"] = action;
    try {
        auto c = parse_rat_list(coeffs, 6);
        DoubleEquation de(c[0], c[1], c[2], c[3], c[4], c[5]);
        if (action == "classify") {
            rep.outputs["classification"] = classification_json(dioph::classify(de));
            return rep.emit(os);
        }
        if (action == "solve") {
            std::optional<std::pair<Rat, Rat>> factors;
            if (!factors_str.empty()) {
                rep.inputs["factors"] = factors_str;
                auto f = parse_rat_list(factors_str, 2);
                factors = std::make_pair(f[0], f[1]);
            }
            auto result = dioph::solve_auto(de, factors);
            if (result.status == dioph::SolveResult::Status::Inapplicable) {
                rep.error = result.reason;
                rep.outputs["local_obstructions"] = obstruction_report(de);
                rep.exit_code = kExitInapplicable;
                return rep.emit(os);
            }
            const CurvePoint& p = *result.point;
            rep.outputs["point"] = curve_point_json(p);
            rep.outputs["at_infinity"] = result.status == dioph::SolveResult::Status::AtInfinity;
            rep.verified = json::object();
            rep.verified["on_curve"] = de.contains(p);
            if (!rep.verified["on_curve"].get<bool>()) {
                rep.error = "verification failed";
                rep.exit_code = kExitInapplicable;
            }
            return rep.emit(os);
        }
        if (action == "iterate") {
            if (steps < 1) throw std::invalid_argument("iterate requires --steps >= 1");
            CurvePoint p = [&]() {
                if (!from.empty()) {
                    auto a = parse_rat_list(from, 0);
                    if (a.size() == 3) return CurvePoint::affine(a[0], a[1], a[2]);
                    if (a.size() == 4) {
                        for (const auto& r : a)
                            if (!r.is_integer())
                                throw std::invalid_argument(
                                    "projective coordinates must be integers");
                        return CurvePoint::projective(a[0].num(), a[1].num(), a[2].num(),
                                                      a[3].num());
                    }
                    throw std::invalid_argument("--from expects x,u,v or X,U,V,Z");
                }
                auto inf = dioph::points_at_infinity(de);
                if (inf.empty())
                    throw std::domain_error(
                        "no rational point at infinity (leading coefficients are not both "
                        "squares); supply --from");
                return inf.front();
            }();
            if (!de.contains(p)) throw std::domain_error("starting point is not on the curve");
            rep.inputs["start"] = p.str();
            json iterates = json::array();
            json coeff_table = json::array();
            coeff_table.push_back(dioph::fermat_coefficient(0).get_str());
            bool all_ok = true;
            for (int i = 1; i <= steps; ++i) {
                auto step = dioph::fermat_step(de, p);
                if (step.status == dioph::SolveResult::Status::Inapplicable)
                    throw std::domain_error("iteration stalled: " + step.reason);
                p = *step.point;
                json it = curve_point_json(p);
                bool ok = de.contains(p);
                it["on_curve"] = ok;
                all_ok = all_ok && ok;
                iterates.push_back(it);
                coeff_table.push_back(dioph::fermat_coefficient(i).get_str());
            }
            rep.outputs["iterates"] = iterates;
            rep.outputs["fermat_coefficients"] = coeff_table;
            rep.verified = all_ok;
            if (!all_ok) {
                rep.error = "an iterate failed verification";
                rep.exit_code = kExitInapplicable;
            }
            return rep.emit(os);
        }
        throw std::invalid_argument("unknown action '" + action +
                                    "' (expected classify, solve, or iterate)");
    } catch (const std::domain_error& e) {
        rep.error = e.what();
        rep.exit_code = kExitInapplicable;
    } catch (const std::invalid_argument& e) {
        rep.error = e.what();
        rep.exit_code = kExitInvalidInput;
    }
    return rep.emit(os);
}

// ---- conic -----------------------------------------------------------------

int cmd_conic(const std::string& a_str, const std::string& b_str, const std::string& c_str,
              std::ostream& os) {
    Report rep;
    rep.command = "conic";
    rep.inputs["a"] = a_str;
    rep.inputs["b"] = b_str;
    rep.inputs["c"] = c_str;
    try {
        auto parse_int = [](const std::string& s) {
            Rat r = Rat::parse(s);
            if (!r.is_integer()) throw std::invalid_argument("conic coefficients must be integers");
            return r.num();
        };
        auto cert = dioph::conic_soluble(parse_int(a_str), parse_int(b_str), parse_int(c_str));
        rep.outputs["normalized"] = json::array(
            {cert.normalized.a.get_str(), cert.normalized.b.get_str(), cert.normalized.c.get_str()});
        rep.outputs["soluble"] = cert.soluble;
        if (cert.soluble) {
            rep.outputs["witness"] = json::array({cert.witness[0].get_str(),
                                                  cert.witness[1].get_str(),
                                                  cert.witness[2].get_str()});
            rep.verified = true;
        } else {
            json obs = json::array();
            for (const auto& pl : cert.obstructions) obs.push_back(pl.str());
            rep.outputs["obstructions"] = obs;
            rep.exit_code = kExitInapplicable;
            rep.error = "no rational solution";
        }
    } catch (const std::domain_error& e) {
        rep.error = e.what();
        rep.exit_code = kExitInapplicable;
    } catch (const std::invalid_argument& e) {
        rep.error = e.what();
        rep.exit_code = kExitInvalidInput;
    }
    return rep.emit(os);
}

// ---- reduce ----------------------------------------------------------------

int cmd_reduce(const std::string& coeffs, const std::string& point_str, uint64_t prime,
               std::ostream& os) {
    Report rep;
    rep.command = "reduce";
    rep.inputs["coefficients"] = coeffs;
    rep.inputs["point"] = point_str;
    rep.inputs["prime"] = std::to_string(prime);
    try {
        auto c = parse_rat_list(coeffs, 6);
        DoubleEquation de(c[0], c[1], c[2], c[3], c[4], c[5]);
        auto parts = parse_rat_list(point_str, 0);
        CurvePoint p = [&]() {
            if (parts.size() == 3) return CurvePoint::affine(parts[0], parts[1], parts[2]);
            if (parts.size() == 4) {
                for (const auto& r : parts)
                    if (!r.is_integer())
                        throw std::invalid_argument("projective coordinates must be integers");
                return CurvePoint::projective(parts[0].num(), parts[1].num(), parts[2].num(),
                                              parts[3].num());
            }
            throw std::invalid_argument("--point expects x,u,v or X,U,V,Z");
        }();
        if (!de.contains(p)) throw std::domain_error("point is not on the curve");
        auto reduced = dioph::reduce_point_mod_p(de, p, prime);
        rep.outputs["reduced"] = proj_str(reduced);
        json matches = json(nullptr);
        for (const auto& inf : dioph::points_at_infinity(de)) {
            auto ri = dioph::reduce_point_mod_p(de, inf, prime);
            if (dioph::proj_tuple_eq_mod_p(reduced, ri, prime)) {
                matches = inf.str();
                break;
            }
        }
        rep.outputs["matches_point_at_infinity"] = matches;
        rep.verified = true;
    } catch (const std::domain_error& e) {
        rep.error = e.what();
        rep.exit_code = kExitInapplicable;
    } catch (const std::invalid_argument& e) {
        rep.error = e.what();
        rep.exit_code = kExitInvalidInput;
    }
    return rep.emit(os);
}

// ---- driver ----------------------------------------------------------------

int run_command(const std::string& commandline, std::ostream& os) {
    CLI::App app{"exact-arithmetic engines for the six Diophantus surfaces", "dioph"};
    app.require_subcommand(1);

    // param
    auto* param = app.add_subcommand("param", "run a parametrization engine");
    std::string problem;
    param->add_option("problem", problem, "problem id: II20 II31 III17 IV18 IV32 V29")->required();
    std::map<std::string, std::string> flag_vals;
    bool positive = false;
    for (const char* name :
         {"lambda", "mu", "a", "r", "t", "t0", "n", "l0", "m0", "p", "q", "c"}) {
        param->add_option_function<std::string>(
            std::string("--") + name,
            [&flag_vals, name](const std::string& v) { flag_vals[name] = v; },
            "engine parameter (rational, e.g. 3/13)");
    }
    param->add_flag("--positive", positive, "require an all-positive point");

    // verify
    auto* verify = app.add_subcommand("verify", "check membership of a point");
    std::string verify_problem, verify_point, verify_n;
    bool solve_witnesses = false;
    verify->add_option("problem", verify_problem)->required();
    verify->add_option("--point", verify_point, "name=value pairs, comma separated")->required();
    verify->add_option("--n", verify_n, "given number for IV32");
    verify->add_flag("--witnesses", solve_witnesses, "solve for missing square/cube witnesses");

    // doubleeq
    auto* deq = app.add_subcommand("doubleeq", "classify or solve a double equation");
    std::string de_coeffs, de_action, de_factors, de_from;
    int de_steps = 0;
    deq->add_option("--c", de_coeffs, "a1,b1,c1,a2,b2,c2")->required();
    deq->add_option("action", de_action, "classify | solve | iterate")->required();
    deq->add_option("--factors", de_factors, "factor pair f,g for the genus-0 method");
    deq->add_option("--steps", de_steps, "number of secant iterations");
    deq->add_option("--from", de_from, "starting point x,u,v (default: point at infinity)");

    // conic
    auto* conic = app.add_subcommand("conic", "solubility of a X^2 + b Y^2 + c Z^2 = 0");
    std::string ca, cb, cc;
    conic->add_option("a", ca)->required();
    conic->add_option("b", cb)->required();
    conic->add_option("c", cc)->required();

    // reduce
    auto* reduce = app.add_subcommand("reduce", "reduce a curve point modulo a good prime");
    std::string red_coeffs, red_point;
    uint64_t red_prime = 0;
    reduce->add_option("--c", red_coeffs, "a1,b1,c1,a2,b2,c2")->required();
    reduce->add_option("--point", red_point, "x,u,v affine or X,U,V,Z projective")->required();
    reduce->add_option("--prime", red_prime, "prime of good reduction")->required();

    try {
        app.parse(commandline, false);
    } catch (const CLI::CallForHelp& e) {
        std::cout << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return kExitInvalidInput;
    }

    auto started = std::chrono::steady_clock::now();
    int code = 0;
    if (param->parsed()) code = cmd_param(problem, flag_vals, positive, os);
    else if (verify->parsed()) code = cmd_verify(verify_problem, verify_point, solve_witnesses, verify_n, os);
    else if (deq->parsed()) code = cmd_doubleeq(de_coeffs, de_action, de_factors, de_steps, de_from, os);
    else if (conic->parsed()) code = cmd_conic(ca, cb, cc, os);
    else if (reduce->parsed()) code = cmd_reduce(red_coeffs, red_point, red_prime, os);
    auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::steady_clock::now() - started);
    std::cerr << "# timing_ms=" << elapsed.count() << "\n";
    return code;
}

}  // namespace

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    if (args.size() >= 2 && args[0] == "--batch") {
        std::ifstream in(args[1]);
        if (!in) {
            std::cerr << "cannot open batch file " << args[1] << "\n";
            return kExitInvalidInput;
        }
        int worst = 0;
        std::string line;
        while (std::getline(in, line)) {
            if (line.empty() || line[0] == '#') continue;
            worst = std::max(worst, run_command(line, std::cout));
        }
        return worst;
    }
    std::ostringstream joined;
    for (size_t i = 0; i < args.size(); ++i) {
        if (i) joined << " ";
        bool needs_quotes = args[i].find(' ') != std::string::npos;
        if (needs_quotes) joined << '"' << args[i] << '"';
        else joined << args[i];
    }
    return run_command(joined.str(), std::cout);
}
