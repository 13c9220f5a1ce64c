#include <doctest.h>

#include <string>
#include <vector>

#include "apolar/antipolar.hpp"
#include "apolar/catalecticant.hpp"
#include "apolar/parse.hpp"
#include "apolar/quartic_scan.hpp"
#include "oracles.hpp"

using namespace apolar;

namespace {

const char* kWorkedFormText =
    "4*x^2*z^2 + 6*x^2*z*w + 2*x^2*w^2 + 8*x*y*z^2 + 7*x*y*z*w + 5*x*y*w^2 + "
    "3*y^2*z^2 + 7*y^2*z*w + 2*y^2*w^2";

GradedForm worked_form() { return parse_form(kWorkedFormText); }

GradedForm quartic(const char* text) { return parse_form(text, FormMode::Ternary); }

std::vector<Rational> pt4(long long a, long long b, long long c, long long d) {
    return {Rational(a), Rational(b), Rational(c), Rational(d)};
}

}  // namespace

TEST_CASE("worked antipolar form of a (2,2) form") {
    GradedForm f = worked_form();
    AntipolarForm omega = antipolar(f, Multidegree{1, 1});

    CHECK(omega.point_ring.names() == std::vector<std::string>{"s1", "s2", "t1", "t2"});
    CHECK(omega.det_phi == Rational(-4751));
    CHECK(omega.B == Multidegree{1, 1});
    CHECK(omega.source == f);

    std::vector<std::pair<Exponents, Rational>> expect = {
        {{2, 0, 2, 0}, -1728}, {{2, 0, 1, 1}, 80},    {{2, 0, 0, 2}, -4400},
        {{1, 1, 2, 0}, -1104}, {{1, 1, 1, 1}, 12272}, {{1, 1, 0, 2}, -2048},
        {{0, 2, 2, 0}, -1760}, {{0, 2, 1, 1}, -2144}, {{0, 2, 0, 2}, -1344}};
    CHECK(omega.form == GradedForm::form(omega.point_ring, expect, Multidegree{2, 2}));

    CHECK(antipolar_eval(omega, pt4(1, 0, 1, 0)) == Rational(-1728));
    CHECK(antipolar_eval(omega, pt4(0, 1, 0, 1)) == omega.form.eval(pt4(0, 1, 0, 1)));
    CHECK_THROWS_AS(antipolar_eval(omega, {Rational(1), Rational(0), Rational(1)}),
                    dimension_error&);
}

TEST_CASE("antipolar evaluation equals the determinant update") {
    SUBCASE("product of two projective lines") {
        GradedForm f = worked_form();
        Multidegree B{1, 1};
        AntipolarForm omega = antipolar(f, B);
        Rational base = omega.det_phi;
        for (long long p1 = -1; p1 <= 2; ++p1)
            for (long long p2 = -1; p2 <= 2; ++p2)
                for (long long q1 = -1; q1 <= 2; ++q1)
                    for (long long q2 = -1; q2 <= 2; ++q2) {
                        if (p1 == 0 && p2 == 0) continue;
                        if (q1 == 0 && q2 == 0) continue;
                        auto pt = pt4(p1, p2, q1, q2);
                        GradedForm bumped = f + point_power(f.ring(), B, pt);
                        Rational lhs = antipolar_eval(omega, pt);
                        Rational rhs = det_exact(catalecticant(bumped, B).matrix) - base;
                        CHECK(lhs == rhs);
                    }
    }

    SUBCASE("ternary quadric") {
        GradedForm f = parse_form("x^2 + y^2 + z^2", FormMode::Ternary);
        AntipolarForm omega = antipolar(f, Multidegree{1});
        CHECK(omega.det_phi == Rational(8));
        CHECK(omega.point_ring.names() == std::vector<std::string>{"a", "b", "c"});
        GradedForm expect = GradedForm::form(
            omega.point_ring, {{{2, 0, 0}, 8}, {{0, 2, 0}, 8}, {{0, 0, 2}, 8}},
            Multidegree{2});
        CHECK(omega.form == expect);
        for (long long a = -1; a <= 2; ++a)
            for (long long b = -1; b <= 2; ++b)
                for (long long c = -1; c <= 2; ++c) {
                    if (a == 0 && b == 0 && c == 0) continue;
                    std::vector<Rational> pt{Rational(a), Rational(b), Rational(c)};
                    GradedForm bumped = f + point_power(f.ring(), Multidegree{1}, pt);
                    CHECK(antipolar_eval(omega, pt) ==
                          det_exact(catalecticant(bumped, Multidegree{1}).matrix) -
                              Rational(8));
                }
    }

    SUBCASE("binary quartic") {
        GradedForm f = parse_form("x^4 + x^2*y^2 + y^4", FormMode::Binary);
        AntipolarForm omega = antipolar(f, Multidegree{2});
        CHECK(omega.det_phi == Rational(2240));
        CHECK(omega.point_ring.names() == std::vector<std::string>{"a", "b"});
        for (long long a = -2; a <= 2; ++a)
            for (long long b = -2; b <= 2; ++b) {
                if (a == 0 && b == 0) continue;
                std::vector<Rational> pt{Rational(a), Rational(b)};
                GradedForm bumped = f + point_power(f.ring(), Multidegree{2}, pt);
                CHECK(antipolar_eval(omega, pt) ==
                      det_exact(catalecticant(bumped, Multidegree{2}).matrix) -
                          Rational(2240));
            }
    }
}

TEST_CASE("membership in the forbidden locus") {
    GradedForm frs =
        parse_form("-x^2*z^2 - x^2*z*w - 3*x*y*z^2 - x*y*z*w - 2*y^2*z*w");
    AntipolarForm omega = antipolar(frs, Multidegree{1, 1});
    CHECK(omega.det_phi == Rational(49));
    CHECK(antipolar_eval(omega, pt4(1, 0, 1, 0)) == Rational(0));
    CHECK(rs_membership(frs, Multidegree{1, 1}, pt4(1, 0, 1, 0)));
    CHECK(forbidden_certificate(frs, Multidegree{1, 1}, pt4(1, 0, 1, 0)) ==
          ForbiddenStatus::FORBIDDEN_CANDIDATE);

    GradedForm f = worked_form();
    CHECK_FALSE(rs_membership(f, Multidegree{1, 1}, pt4(1, 0, 1, 0)));
    CHECK(forbidden_certificate(f, Multidegree{1, 1}, pt4(1, 0, 1, 0)) ==
          ForbiddenStatus::NOT_DECIDED);

    CHECK(std::string(to_string(ForbiddenStatus::FORBIDDEN_CANDIDATE)) ==
          "FORBIDDEN_CANDIDATE");
    CHECK(std::string(to_string(ForbiddenStatus::NOT_DECIDED)) == "NOT_DECIDED");
}

TEST_CASE("antipolar preconditions") {
    CHECK_THROWS_AS(antipolar(parse_form("x^2*z^2"), Multidegree{1, 1}),
                    singular_catalecticant_error&);
    CHECK_THROWS_AS(antipolar(worked_form(), Multidegree{1, 2}), shape_error&);
    CHECK_THROWS_AS(antipolar(worked_form(), Multidegree{2, 1}),
                    unsupported_ambient_error&);
    CHECK_THROWS_AS(
        antipolar(GradedForm::zero(VariableBlock::p1xp1(), Multidegree{2, 2}),
                  Multidegree{1, 1}),
        degenerate_input_error&);
    CHECK_THROWS_AS(antipolar(quartic("x^4 + y^4 + z^4"), Multidegree{1, 1}),
                    order_error&);
}

TEST_CASE("quartic scan: corank one with a perfect-square kernel conic") {
    GradedForm f5 = quartic("(x+y)^4 + (x^3 + y^3)*z");
    QuarticScanReport rep = forbidden_scan_quartic(f5);

    CHECK(rep.rank_Cf == 5);
    CHECK(rep.det_Cf == Rational(0));

    VariableBlock cring({3}, {"a", "b", "c"});
    REQUIRE(rep.nullspace_conditions.size() == 1);
    CHECK(rep.nullspace_conditions[0] ==
          GradedForm::form(cring, {{{0, 0, 2}, 1}}, Multidegree{2}));

    REQUIRE(rep.annotations.size() == 1);
    CHECK(rep.annotations[0] ==
          "kernel generated by the square of a linear form: rank 7 (Kleppe, Thm 3.6)");

    VariableBlock dring({3, 1}, {"a", "b", "c", "lambda"});
    CHECK(rep.delta_poly ==
          GradedForm::form(dring, {{{0, 0, 4, 1}, 746496}}, Multidegree{4, 1}));
}

TEST_CASE("quartic scan: classification by kernel dimension") {
    VariableBlock cring({3}, {"a", "b", "c"});
    auto cond = [&](std::vector<std::pair<Exponents, Rational>> t) {
        return GradedForm::form(cring, t, Multidegree{2});
    };
    GradedForm two_ab = cond({{{1, 1, 0}, 2}});
    GradedForm two_ac = cond({{{1, 0, 1}, 2}});
    GradedForm two_bc = cond({{{0, 1, 1}, 2}});

    SUBCASE("invertible middle catalecticant") {
        QuarticScanReport rep = forbidden_scan_quartic(
            quartic("x^4 + y^4 + z^4 + x^2*y^2 + y^2*z^2 + z^2*x^2"));
        CHECK(rep.rank_Cf == 6);
        CHECK(rep.det_Cf == Rational(819200));
        CHECK(rep.nullspace_conditions.empty());
        REQUIRE(rep.annotations.size() == 1);
        CHECK(rep.annotations[0] ==
              "kernel dimension 0: invertible middle catalecticant, rank 6 "
              "(Kleppe, Thm 3.7)");
    }

    SUBCASE("corank one with a non-degenerate kernel conic") {
        QuarticScanReport rep = forbidden_scan_quartic(
            quartic("x^4 + x^3*z + z^4 + y^4 + y^3*z + x*z^3"));
        CHECK(rep.rank_Cf == 5);
        CHECK(rep.det_Cf == Rational(0));
        REQUIRE(rep.nullspace_conditions.size() == 1);
        CHECK(rep.nullspace_conditions[0] == two_ab);
        REQUIRE(rep.annotations.size() == 1);
        CHECK(rep.annotations[0] ==
              "one-dimensional kernel: rank determined by the kernel conic "
              "(Kleppe, Thm 3.2)");
    }

    SUBCASE("corank two") {
        QuarticScanReport rep =
            forbidden_scan_quartic(quartic("x^4 + y^4 + z^4 + x^2*y^2"));
        CHECK(rep.rank_Cf == 4);
        REQUIRE(rep.nullspace_conditions.size() == 2);
        CHECK(rep.nullspace_conditions[0] == two_ac);
        CHECK(rep.nullspace_conditions[1] == two_bc);
        REQUIRE(rep.annotations.size() == 1);
        CHECK(rep.annotations[0] == "two-dimensional kernel: rank 4 or 6 (Kleppe, Thm 3.2)");
    }

    SUBCASE("kernel dimension three") {
        QuarticScanReport rep = forbidden_scan_quartic(quartic("x^4 + y^4 + z^4"));
        CHECK(rep.rank_Cf == 3);
        REQUIRE(rep.nullspace_conditions.size() == 3);
        CHECK(rep.nullspace_conditions[0] == two_ab);
        CHECK(rep.nullspace_conditions[1] == two_ac);
        CHECK(rep.nullspace_conditions[2] == two_bc);
        REQUIRE(rep.annotations.size() == 1);
        CHECK(rep.annotations[0] ==
              "kernel dimension 3: middle catalecticant rank at most 3");
    }

    SUBCASE("reducible quartic with a triple structure") {
        QuarticScanReport rep = forbidden_scan_quartic(quartic("x*y^3 + y^2*z^2"));
        CHECK(rep.rank_Cf == 3);
        CHECK(rep.delta_poly.is_zero());
        REQUIRE(rep.nullspace_conditions.size() == 3);
        CHECK(rep.nullspace_conditions[0] == cond({{{2, 0, 0}, 1}}));
        CHECK(rep.nullspace_conditions[1] == two_ac);
        CHECK(rep.nullspace_conditions[2] ==
              cond({{{1, 1, 0}, 4}, {{0, 0, 2}, -3}}));
        // all conditions vanish at (0,1,0) but not all at (1,1,1)
        std::vector<Rational> singular_pt{0, 1, 0}, generic_pt{1, 1, 1};
        bool all_vanish = true, any_nonzero = false;
        for (const auto& c : rep.nullspace_conditions) {
            if (c.eval(singular_pt) != 0) all_vanish = false;
            if (c.eval(generic_pt) != 0) any_nonzero = true;
        }
        CHECK(all_vanish);
        CHECK(any_nonzero);
    }
}

TEST_CASE("scan delta polynomial equals the pencil determinant difference") {
    for (const char* text : {"x^4 + y^4 + z^4 + x^2*y^2 + y^2*z^2 + z^2*x^2",
                             "(x+y)^4 + (x^3 + y^3)*z", "x*y^3 + y^2*z^2"}) {
        GradedForm f = quartic(text);
        QuarticScanReport rep = forbidden_scan_quartic(f);
        for (long long a = -1; a <= 1; ++a)
            for (long long b = -1; b <= 1; ++b)
                for (long long c = -1; c <= 2; ++c) {
                    if (a == 0 && b == 0 && c == 0) continue;
                    for (long long lam : {1LL, -2LL}) {
                        std::vector<Rational> dir{Rational(a), Rational(b), Rational(c)};
                        GradedForm bumped =
                            f + point_power(f.ring(), Multidegree{2}, dir) * Rational(lam);
                        Rational rhs =
                            det_exact(catalecticant(bumped, Multidegree{2}).matrix) -
                            rep.det_Cf;
                        Rational lhs = rep.delta_poly.eval(
                            {Rational(a), Rational(b), Rational(c), Rational(lam)});
                        CHECK(lhs == rhs);
                    }
                }
    }
}

TEST_CASE("the kernel direction survives every pencil step") {
    GradedForm f5 = quartic("(x+y)^4 + (x^3 + y^3)*z");
    GradedForm y4 = quartic("y^4");
    std::vector<Rational> lams{Rational(5), Rational(-2), Rational(1, 3)};
    for (const auto& lam : lams) {
        GradedForm g = f5 + y4 * lam;
        auto ker = catalecticant(g, Multidegree{2}).operator_kernel();
        REQUIRE(ker.size() == 1);
        CHECK(ker[0] == std::vector<Rational>{0, 0, 0, 0, 0, 1});
    }
}

TEST_CASE("scan preconditions") {
    CHECK_THROWS_AS(forbidden_scan_quartic(
                        GradedForm::zero(VariableBlock::ternary(), Multidegree{4})),
                    degenerate_input_error&);
    CHECK_THROWS_AS(forbidden_scan_quartic(worked_form()), unsupported_ambient_error&);
    CHECK_THROWS_AS(forbidden_scan_quartic(quartic("x^3 + y^3 + z^3")), degree_error&);
}
