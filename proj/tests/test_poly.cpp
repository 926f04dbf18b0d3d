#include <algorithm>
#include <doctest.h>

#include "dioph/poly.hpp"
#include "test_util.hpp"

using dioph::ModPoly;
using dioph::MultiPoly;
using dioph::Rat;
using dioph::UniPoly;
using dioph::testutil::random_long;
using dioph::testutil::random_rat;

TEST_CASE("univariate basics") {
    UniPoly p = UniPoly::of({Rat(-1), Rat(0), Rat(4)});  // 4x^2 - 1
    CHECK(p.degree() == 2);
    CHECK(p.eval(Rat(1, 2)) == Rat(0));
    CHECK(p.derivative() == UniPoly::of({Rat(0), Rat(8)}));
    CHECK((p * p).degree() == 4);
    CHECK(UniPoly::of({Rat(1), Rat(1)}) - UniPoly::of({Rat(1), Rat(1)}) == UniPoly());
    CHECK(UniPoly().is_zero());
    CHECK(p.str() == "4*x^2 - 1");
}

TEST_CASE("gcd and squarefree over Q") {
    UniPoly a = UniPoly::of({Rat(-1), Rat(0), Rat(1)});          // x^2 - 1
    UniPoly b = UniPoly::of({Rat(1), Rat(1)});                   // x + 1
    CHECK(UniPoly::gcd(a, b) == b);
    CHECK(a.squarefree());
    CHECK(!(b * b).squarefree());
    CHECK((a * b).squarefree() == false);  // (x+1)^2 divides
}

TEST_CASE("quad_roots examples") {
    CHECK(quad_roots(UniPoly::of({Rat(-1), Rat(0), Rat(1)})) ==
          std::vector<Rat>{Rat(1), Rat(-1)});
    CHECK(quad_roots(UniPoly::of({Rat(4), Rat(16)})) == std::vector<Rat>{Rat(-1, 4)});
    CHECK(quad_roots(UniPoly::of({Rat(1), Rat(0), Rat(3)})).empty());
    CHECK(quad_roots(UniPoly::of({Rat(5)})).empty());
    CHECK_THROWS_AS(quad_roots(UniPoly()), std::domain_error);
    CHECK_THROWS_AS(quad_roots(UniPoly::of({Rat(0), Rat(0), Rat(0), Rat(1)})),
                    std::invalid_argument);
}

TEST_CASE("quad_roots recovers planted rational roots") {
    for (int i = 0; i < 1000; ++i) {
        Rat r1 = random_rat(30), r2 = random_rat(30);
        UniPoly p = UniPoly::of({r1 * r2, -(r1 + r2), Rat(1)});
        auto roots = quad_roots(p);
        REQUIRE(roots.size() == 2);
        CHECK(p.eval(roots[0]).is_zero());
        CHECK(p.eval(roots[1]).is_zero());
        std::vector<Rat> expect{r1, r2}, got = roots;
        auto lt = [](const Rat& a, const Rat& b) { return a < b; };
        std::sort(expect.begin(), expect.end(), lt);
        std::sort(got.begin(), got.end(), lt);
        CHECK(expect == got);
    }
}

TEST_CASE("factor_difference examples") {
    auto f = factor_difference(UniPoly::of({Rat(4), Rat(16)}));  // 16x + 4
    REQUIRE(f);
    CHECK(f->first == UniPoly::of({Rat(1), Rat(4)}));
    CHECK(f->second == UniPoly::of({Rat(4)}));

    auto g = factor_difference(UniPoly::of({Rat(0), Rat(1)}));  // x
    REQUIRE(g);
    CHECK(g->first == UniPoly::of({Rat(0), Rat(1)}));
    CHECK(g->second == UniPoly::of({Rat(1)}));

    auto h = factor_difference(UniPoly::of({Rat(-2), Rat(0), Rat(2)}));  // 2x^2 - 2
    REQUIRE(h);
    CHECK(h->first * h->second == UniPoly::of({Rat(-2), Rat(0), Rat(2)}));
    CHECK(h->first.degree() <= 1);
    CHECK(h->second.degree() <= 1);

    CHECK(!factor_difference(UniPoly::of({Rat(1), Rat(0), Rat(1)})));   // x^2 + 1
    CHECK(!factor_difference(UniPoly::of({Rat(-2), Rat(0), Rat(1)})));  // x^2 - 2
}

TEST_CASE("factor_difference round trip and absence criterion") {
    for (int i = 0; i < 300; ++i) {
        UniPoly d = UniPoly::of({random_rat(20), random_rat(20), random_rat(20)});
        if (d.is_zero()) continue;
        auto f = factor_difference(d);
        if (f) {
            CHECK(f->first * f->second == d);
        } else {
            REQUIRE(d.degree() == 2);
            CHECK(quad_roots(d).empty());
        }
    }
}

TEST_CASE("squarefree_mod_p") {
    // product of the two fibre quadratics at t = 2
    UniPoly p1 = UniPoly::of({Rat(-1), Rat(4), Rat(4)});
    UniPoly p2 = UniPoly::of({Rat(-1), Rat(3), Rat(4)});
    CHECK(squarefree_mod_p(p1 * p2, 7));
    CHECK(!squarefree_mod_p(p2, 5));  // discriminant 25
    CHECK(!squarefree_mod_p(UniPoly::of({Rat(0), Rat(0), Rat(1)}), 3));
    CHECK(squarefree_mod_p(UniPoly::of({Rat(1), Rat(1)}), 5));
    CHECK_THROWS_AS(squarefree_mod_p(UniPoly::of({Rat(1, 5), Rat(1)}), 5), std::domain_error);
    CHECK_THROWS_AS(squarefree_mod_p(p1, 6), std::invalid_argument);
    // reduction that vanishes identically
    CHECK(!squarefree_mod_p(UniPoly::of({Rat(0), Rat(3)}), 3));
}

TEST_CASE("mod-p polynomial arithmetic") {
    ModPoly f = ModPoly::reduce(UniPoly::of({Rat(-1), Rat(0), Rat(1)}), 7);  // x^2 - 1
    CHECK(f.degree() == 2);
    CHECK(f.eval(1) == 0);
    CHECK(f.eval(6) == 0);
    CHECK(f.eval(2) == 3);
    ModPoly g = ModPoly::reduce(UniPoly::of({Rat(1), Rat(1)}), 7);  // x + 1
    CHECK(ModPoly::gcd(f, g).degree() == 1);
    // 1/2 mod 7 = 4
    ModPoly h = ModPoly::reduce(UniPoly::of({Rat(1, 2)}), 7);
    CHECK(h.coeffs() == std::vector<uint64_t>{4});
}

TEST_CASE("multivariate evaluation") {
    std::vector<std::string> vars{"x", "y", "u"};
    MultiPoly eq = MultiPoly::variable(vars, "x").pow(2) + MultiPoly::variable(vars, "y") -
                   MultiPoly::variable(vars, "u").pow(2);
    std::map<std::string, Rat> point{
        {"x", Rat(3, 13)}, {"y", Rat(19, 13)}, {"u", Rat(16, 13)}, {"extra", Rat(5)}};
    CHECK(eq.eval(point).is_zero());
    point["y"] = Rat(1);
    CHECK(!eq.eval(point).is_zero());
    point.erase("u");
    CHECK_THROWS_AS(eq.eval(point), std::invalid_argument);

    MultiPoly zero = eq - eq;
    CHECK(zero.is_zero());
    CHECK_THROWS_AS(MultiPoly::variable(vars, "zz"), std::invalid_argument);
}

TEST_CASE("multivariate products collect terms") {
    std::vector<std::string> vars{"x", "y"};
    MultiPoly x = MultiPoly::variable(vars, "x");
    MultiPoly y = MultiPoly::variable(vars, "y");
    MultiPoly p = (x + y) * (x - y);
    MultiPoly q = x.pow(2) - y.pow(2);
    CHECK((p - q).is_zero());
    for (int i = 0; i < 50; ++i) {
        std::map<std::string, Rat> v{{"x", random_rat(50)}, {"y", random_rat(50)}};
        CHECK(p.eval(v) == q.eval(v));
    }
}
