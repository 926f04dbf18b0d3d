#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "dioph/double_equation.hpp"
#include "dioph/local.hpp"
#include "dioph/model_json.hpp"
#include "dioph/parametrize.hpp"
#include "dioph/surface.hpp"

namespace py = pybind11;
using namespace dioph;

namespace {

Rat to_rat(py::handle h) {
    if (py::isinstance<Rat>(h)) return h.cast<Rat>();
    if (py::isinstance<py::int_>(h)) return Rat::parse(py::str(h).cast<std::string>());
    if (py::isinstance<py::str>(h)) return Rat::parse(h.cast<std::string>());
    throw py::type_error("expected int, str like 'p/q', or Rat");
}

py::int_ to_pyint(const Int& v) {
    return py::reinterpret_steal<py::int_>(
        PyLong_FromString(v.get_str().c_str(), nullptr, 10));
}

RatPoint to_point(const py::dict& d) {
    RatPoint p;
    for (auto item : d) p[item.first.cast<std::string>()] = to_rat(item.second);
    return p;
}

py::dict from_point(const RatPoint& p) {
    py::dict d;
    for (const auto& [name, value] : p) d[py::str(name)] = value;
    return d;
}

std::map<std::string, Rat> to_params(const py::dict& d) {
    std::map<std::string, Rat> m;
    for (auto item : d) m[item.first.cast<std::string>()] = to_rat(item.second);
    return m;
}

py::dict classification_dict(const DoubleEqClass& cls) {
    py::dict d;
    d["heath_case"] = to_string(cls.heath_case);
    d["genus"] = cls.genus;
    d["smooth"] = cls.smooth;
    d["reducible"] = cls.reducible;
    d["first_order"] = cls.first_order;
    d["difference_factorable"] = cls.difference_factorable;
    d["alpha1"] = cls.alpha1 ? py::cast(*cls.alpha1) : py::none().cast<py::object>();
    d["alpha2"] = cls.alpha2 ? py::cast(*cls.alpha2) : py::none().cast<py::object>();
    return d;
}

py::dict solve_result_dict(const SolveResult& r) {
    py::dict d;
    switch (r.status) {
        case SolveResult::Status::Point: d["status"] = "point"; break;
        case SolveResult::Status::AtInfinity: d["status"] = "at_infinity"; break;
        case SolveResult::Status::Inapplicable: d["status"] = "inapplicable"; break;
    }
    d["point"] = r.point ? py::cast(*r.point) : py::none().cast<py::object>();
    d["reason"] = r.reason;
    return d;
}

Place to_place(py::handle h) {
    if (py::isinstance<py::str>(h)) {
        auto s = h.cast<std::string>();
        if (s == "infinity" || s == "inf") return Place::at_infinity();
        return Place::prime(std::stoull(s));
    }
    return Place::prime(h.cast<uint64_t>());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact-arithmetic engines for the rational-point constructions on the six "
              "Diophantus surfaces (II.20, II.31, III.17, IV.18, IV.32, V.29).";

    py::class_<Rat>(m, "Rat")
        .def(py::init([](py::handle h) { return to_rat(h); }))
        .def(py::init([](py::handle n, py::handle d) { return to_rat(n) / to_rat(d); }))
        .def_property_readonly("num", [](const Rat& r) { return to_pyint(r.num()); })
        .def_property_readonly("den", [](const Rat& r) { return to_pyint(r.den()); })
        .def("is_square", &Rat::is_square)
        .def("sqrt", [](const Rat& r) -> py::object {
            auto s = r.sqrt();
            return s ? py::cast(*s) : py::none();
        })
        .def("__add__", [](const Rat& a, py::handle b) { return a + to_rat(b); })
        .def("__radd__", [](const Rat& a, py::handle b) { return to_rat(b) + a; })
        .def("__sub__", [](const Rat& a, py::handle b) { return a - to_rat(b); })
        .def("__rsub__", [](const Rat& a, py::handle b) { return to_rat(b) - a; })
        .def("__mul__", [](const Rat& a, py::handle b) { return a * to_rat(b); })
        .def("__rmul__", [](const Rat& a, py::handle b) { return to_rat(b) * a; })
        .def("__truediv__", [](const Rat& a, py::handle b) { return a / to_rat(b); })
        .def("__rtruediv__", [](const Rat& a, py::handle b) { return to_rat(b) / a; })
        .def("__neg__", [](const Rat& a) { return -a; })
        .def("__pow__", [](const Rat& a, long e) { return a.pow(e); })
        .def("__eq__", [](const Rat& a, py::handle b) { return a == to_rat(b); })
        .def("__lt__", [](const Rat& a, py::handle b) { return a < to_rat(b); })
        .def("__le__", [](const Rat& a, py::handle b) { return a <= to_rat(b); })
        .def("__hash__", [](const Rat& a) { return py::hash(py::str(a.str())); })
        .def("__str__", &Rat::str)
        .def("__repr__", [](const Rat& a) { return "Rat('" + a.str() + "')"; });

    py::class_<CurvePoint>(m, "CurvePoint")
        .def_static("affine",
                    [](py::handle x, py::handle u, py::handle v) {
                        return CurvePoint::affine(to_rat(x), to_rat(u), to_rat(v));
                    })
        .def_static("projective",
                    [](py::handle x, py::handle u, py::handle v, py::handle z) {
                        return CurvePoint::projective(to_rat(x).num(), to_rat(u).num(),
                                                      to_rat(v).num(), to_rat(z).num());
                    })
        .def_property_readonly("at_infinity", &CurvePoint::at_infinity)
        .def_property_readonly("x", &CurvePoint::x)
        .def_property_readonly("u", &CurvePoint::u)
        .def_property_readonly("v", &CurvePoint::v)
        .def_property_readonly("coords",
                               [](const CurvePoint& p) {
                                   py::tuple t(4);
                                   for (size_t i = 0; i < 4; ++i) t[i] = to_pyint(p.coords()[i]);
                                   return t;
                               })
        .def("height", [](const CurvePoint& p) { return to_pyint(p.height()); })
        .def("__eq__", [](const CurvePoint& a, const CurvePoint& b) { return a == b; })
        .def("__repr__", [](const CurvePoint& p) { return "CurvePoint" + p.str(); })
        .def("__str__", &CurvePoint::str);

    py::class_<DoubleEquation>(m, "DoubleEquation")
        .def(py::init([](py::handle a1, py::handle b1, py::handle c1, py::handle a2,
                         py::handle b2, py::handle c2) {
            return DoubleEquation(to_rat(a1), to_rat(b1), to_rat(c1), to_rat(a2), to_rat(b2),
                                  to_rat(c2));
        }))
        .def("contains", &DoubleEquation::contains)
        .def("classify", [](const DoubleEquation& de) { return classification_dict(classify(de)); })
        .def(
            "solve",
            [](const DoubleEquation& de, py::object factors) {
                std::optional<std::pair<Rat, Rat>> f;
                if (!factors.is_none()) {
                    auto t = factors.cast<py::tuple>();
                    f = std::make_pair(to_rat(t[0]), to_rat(t[1]));
                }
                return solve_result_dict(solve_auto(de, f));
            },
            py::arg("factors") = py::none())
        .def("fermat_step",
             [](const DoubleEquation& de, const CurvePoint& p) {
                 return solve_result_dict(fermat_step(de, p));
             })
        .def("points_at_infinity", [](const DoubleEquation& de) { return points_at_infinity(de); })
        .def("reduce_point",
             [](const DoubleEquation& de, const CurvePoint& p, uint64_t prime) {
                 auto t = reduce_point_mod_p(de, p, prime);
                 return py::make_tuple(t[0], t[1], t[2], t[3]);
             });

    m.def("fermat_coefficient", [](long n) { return to_pyint(fermat_coefficient(n)); });

    m.def("ii20_param",
          [](py::handle l, py::handle mu) { return from_point(ii20_param(to_rat(l), to_rat(mu))); });
    m.def("ii20_inverse", [](const py::dict& p) {
        auto [l, mu] = ii20_inverse(to_point(p));
        return py::make_tuple(l, mu);
    });
    m.def("ii31_ps", [](py::handle a, py::handle r) {
        auto ps = ii31_ps(to_rat(a), to_rat(r));
        py::dict d;
        d["P"] = ps.product;
        d["S"] = ps.sum;
        d["sum_root"] = ps.sum_root;
        d["plus_root"] = ps.plus_root;
        d["minus_root"] = ps.minus_root;
        return d;
    });
    m.def("ii31_param",
          [](py::handle l, py::handle a) { return from_point(ii31_param(to_rat(l), to_rat(a))); });
    m.def("iii17_sigma", [](py::handle t) { return from_point(iii17_sigma(to_rat(t))); });
    m.def("iv18_section", [](py::handle t) { return from_point(iv18_section(to_rat(t))); });
    m.def("iv32_solve_fibre", [](py::handle t0, py::handle n, py::handle l0, py::handle m0) {
        return from_point(iv32_solve_fibre(to_rat(t0), to_rat(n), to_rat(l0), to_rat(m0)));
    });
    m.def("v29_curve", [](py::handle p, py::handle q, py::handle c) {
        return from_point(v29_curve(to_rat(p), to_rat(q), to_rat(c)));
    });
    m.def(
        "run_engine",
        [](const std::string& problem, const py::dict& params) {
            return from_point(run_engine(problem_from_string(problem), to_params(params)));
        },
        py::arg("problem"), py::arg("params"));

    m.def(
        "membership",
        [](const std::string& problem, const py::dict& point, py::handle n) {
            return membership(make_model(problem_from_string(problem), to_rat(n)), to_point(point));
        },
        py::arg("problem"), py::arg("point"), py::arg("n") = py::int_(6));
    m.def(
        "witness_solve",
        [](const std::string& problem, const py::dict& partial, py::handle n) -> py::object {
            auto full =
                witness_solve(make_model(problem_from_string(problem), to_rat(n)), to_point(partial));
            if (!full) return py::none();
            return from_point(*full);
        },
        py::arg("problem"), py::arg("partial"), py::arg("n") = py::int_(6));
    m.def(
        "fibration_value",
        [](const std::string& problem, const py::dict& point, py::handle n) {
            return fibration_value(make_model(problem_from_string(problem), to_rat(n)),
                                   to_point(point));
        },
        py::arg("problem"), py::arg("point"), py::arg("n") = py::int_(6));
    m.def(
        "model_json",
        [](const std::string& problem, py::handle n) {
            return model_to_json(make_model(problem_from_string(problem), to_rat(n))).dump();
        },
        py::arg("problem"), py::arg("n") = py::int_(6));

    m.def("hilbert_symbol", [](py::handle a, py::handle b, py::handle place) {
        return hilbert_symbol(to_rat(a), to_rat(b), to_place(place));
    });
    m.def("conic_soluble", [](py::handle a, py::handle b, py::handle c) {
        auto cert = conic_soluble(to_rat(a).num(), to_rat(b).num(), to_rat(c).num());
        py::dict d;
        d["soluble"] = cert.soluble;
        d["normalized"] = py::make_tuple(to_pyint(cert.normalized.a), to_pyint(cert.normalized.b),
                                         to_pyint(cert.normalized.c));
        if (cert.soluble) {
            d["witness"] = py::make_tuple(to_pyint(cert.witness[0]), to_pyint(cert.witness[1]),
                                          to_pyint(cert.witness[2]));
        } else {
            py::list obs;
            for (const auto& pl : cert.obstructions) obs.append(pl.str());
            d["obstructions"] = obs;
        }
        return d;
    });
    m.def(
        "padic_insoluble_system",
        [](const DoubleEquation& de, uint64_t prime, int k) {
            return padic_insoluble_system(de, prime, k) == PadicVerdict::Insoluble
                       ? "insoluble"
                       : "unknown";
        },
        py::arg("de"), py::arg("prime"), py::arg("k") = 6);
}
