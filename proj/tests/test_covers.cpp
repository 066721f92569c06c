#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dp5/cohomology.hpp"
#include "dp5/covers.hpp"
#include "test_util.hpp"

using namespace dp5;

namespace {

Rational r(long p, long q = 1) { return Rational(p, q); }

DivisorClass std_class(const char* s) { return parse_class(s, Basis::Standard, configuration(ConfigId::General)); }

BoundClass curve_bound(const char* s, ConfigId id) { return {parse_class(s, Basis::Curve, configuration(id)), id}; }

}  // namespace

TEST_CASE("double cover over a Sigma half-class") {
    // M = K_S - phi^*g2 - E'_2 corresponds to m = (e2 + e4)/2.
    QDivisorClass m = r(1, 2) * to_q(std_class("e2+e4"));
    auto s = DoubleCoverScenario::from_sigma_class(1, m);
    CHECK(s.m_dot_k == 2);
    CHECK(s.m_sq == -2);
    CHECK(s.kpm_sq() == 7);
    s.pg_bound_class = BoundClass{line_class(), ConfigId::General};
    auto inv = double_cover_invariants(s);
    CHECK(inv.chi == 2);
    CHECK(inv.k_sq == 14);
    CHECK(inv.pg_lower == 3);
    REQUIRE(inv.q_lower);
    CHECK(*inv.q_lower == 2);
    REQUIRE(inv.albanese_ok);
    CHECK_FALSE(*inv.albanese_ok);
}

TEST_CASE("second half-class scenario") {
    QDivisorClass m = r(1, 2) * to_q(std_class("l-e1+e4"));
    auto s = DoubleCoverScenario::from_sigma_class(1, m);
    s.pg_bound_class = BoundClass{line_class(), ConfigId::General};
    auto inv = double_cover_invariants(s);
    CHECK(inv.chi == 3);
    CHECK(inv.pg_lower >= 3);
    CHECK(inv.k_sq == 20);
}

TEST_CASE("trivial branch") {
    DoubleCoverScenario s;
    auto inv = double_cover_invariants(s);
    CHECK(inv.chi == 2);
    CHECK(inv.k_sq == 10);
    CHECK(inv.pg_lower == 0);
}

TEST_CASE("branch family with D.K = 2") {
    for (long dsq = -8; dsq <= -4; ++dsq) {
        auto s = DoubleCoverScenario::from_branch(1, 2, dsq);
        auto inv = double_cover_invariants(s);
        CHECK(inv.chi == 2 + (1 + r(dsq, 4)) / 2);
        CHECK(inv.chi_integral == (dsq == -4));
        if (dsq == -4) {
            CHECK(inv.k_sq == 12);
            CHECK_FALSE(albanese_gate(12, 2));
        }
    }
    auto s = DoubleCoverScenario::from_branch(1, 2, -4);
    s.pg_bound_class = curve_bound("l", ConfigId::P1);
    CHECK(double_cover_invariants(s).pg_lower == 3);
}

TEST_CASE("remaining branch scenarios") {
    // reduced branch inside (-2)-curves only
    for (long zsq : {0L, -2L}) {
        auto inv = double_cover_invariants(DoubleCoverScenario::from_branch(1, 0, zsq));
        CHECK(inv.chi == 2 + r(zsq, 8));
    }
    // fibre plus (-2)-curves
    for (long zsq : {0L, -2L, -4L}) {
        auto inv = double_cover_invariants(DoubleCoverScenario::from_branch(1, 4, zsq));
        CHECK(inv.chi_integral == (zsq == 0));
        if (zsq == 0) CHECK(inv.chi == 3);
    }
    auto p2 = DoubleCoverScenario::from_branch(1, 4, 0);
    p2.pg_bound_class = curve_bound("2l-e1-e2-e3-e4", ConfigId::P2);
    CHECK(double_cover_invariants(p2).pg_lower == 3);
    DoubleCoverScenario torsion;
    torsion.pg_bound_class = curve_bound("l-e4", ConfigId::P2);
    auto t = double_cover_invariants(torsion);
    CHECK(t.chi == 2);
    CHECK(t.pg_lower == 2);
    // the three listed strict-transform solutions all give D^2 = 4 for D = L4 + E3 + Z''
    struct Sol { long e3sq, zsq, e3z; };
    for (auto sol : {Sol{0, -2, 0}, Sol{-2, 0, 0}, Sol{-4, -2, 2}}) {
        long dsq = 2 + 2 * 2 + sol.zsq + sol.e3sq + 2 * sol.e3z;
        CHECK(dsq == 4);
        auto s = DoubleCoverScenario::from_branch(1, 6, dsq);
        s.pg_bound_class = curve_bound("2l-e1-e2-e3-e4", ConfigId::P3);
        auto inv = double_cover_invariants(s);
        CHECK(inv.chi == 4);
        CHECK(inv.pg_lower >= 4);
    }
    for (long zsq : {0L, -2L}) {
        auto s = DoubleCoverScenario::from_branch(1, 4, 2 + zsq);
        s.pg_bound_class = curve_bound("2l-e1-2e2-2e3-e4", ConfigId::P3);
        auto inv = double_cover_invariants(s);
        if (zsq == -2) CHECK(inv.chi == 3);
        else CHECK_FALSE(inv.chi_integral);
        CHECK(inv.pg_lower == 3);
    }
}

TEST_CASE("linearity of the double cover formula") {
    Rng rng(3);
    for (int t = 0; t < 100; ++t) {
        DoubleCoverScenario a, b, sum;
        a.chi_base = uniform(rng, -3, 3);
        a.m_dot_k = uniform(rng, -9, 9);
        a.m_sq = uniform(rng, -9, 9);
        b.chi_base = uniform(rng, -3, 3);
        b.m_dot_k = uniform(rng, -9, 9);
        b.m_sq = uniform(rng, -9, 9);
        sum.chi_base = a.chi_base + b.chi_base;
        sum.m_dot_k = a.m_dot_k + b.m_dot_k;
        sum.m_sq = a.m_sq + b.m_sq;
        CHECK(double_cover_invariants(sum).chi ==
              double_cover_invariants(a).chi + double_cover_invariants(b).chi);
    }
}

TEST_CASE("albanese gate") {
    CHECK_FALSE(albanese_gate(14, 2));
    CHECK(albanese_gate(16, 2));
    CHECK_FALSE(albanese_gate(12, 2));
    CHECK(albanese_gate(0, 0));
    CHECK_THROWS_AS(albanese_gate(5, -1), std::invalid_argument);
}

TEST_CASE("bidouble invariants") {
    auto b = burniat_data();
    CHECK(b.branch() == Integer(-3) * canonical_class());
    CHECK(b.total(0) == std_class("3l-3e1-e2+e3-e4"));
    CHECK(b.total(1) == std_class("3l+e1-3e2-e3-e4"));
    CHECK(b.total(2) == std_class("3l-e1+e2-3e3-e4"));
    auto inv = bidouble_invariants(b);
    CHECK(inv.pg == 0);
    CHECK(inv.q == 0);
    CHECK(inv.k_sq == 5);
    CHECK(inv.bicanonical_is_cover);
    CHECK(inv.chi == inv.pg - inv.q + 1);
    auto second = second_bidouble_data();
    CHECK(second.total(0) == std_class("l-e1+e2+e3+e4"));
    CHECK(second.total(2) == std_class("5l-3e1-e2-3e3-3e4"));
    auto inv2 = bidouble_invariants(second);
    CHECK(inv2.pg == 0);
    CHECK(inv2.q == 0);
    CHECK(inv2.k_sq == 5);
    CHECK(inv2.bicanonical_is_cover);
}

TEST_CASE("bidouble degenerate and parity") {
    BidoubleData empty;
    auto inv = bidouble_invariants(empty);
    CHECK(inv.k_sq == 20);
    CHECK(inv.pg == 0);
    BidoubleData bad;
    bad.d[0] = {exceptional(1)};
    try {
        bidouble_invariants(bad);
        FAIL("expected parity failure");
    } catch (const ParityError& e) {
        CHECK((e.pair == std::pair<int, int>{1, 2} || e.pair == std::pair<int, int>{1, 3}));
    }
}

TEST_CASE("ramification check") {
    CHECK_FALSE(ramification_check(-2, -2));
    CHECK_FALSE(ramification_check(r(-4, 3), r(-4, 3)));
    CHECK(ramification_check(0, -2));
    CHECK_THROWS_AS(ramification_check(0, 0), std::invalid_argument);
    for (long x = -5; x <= 5; ++x)
        for (long s = -5; s < 0; ++s) {
            if (ramification_check(x, s)) CHECK(ramification_check(x + 1, s));
            if (ramification_check(x, s) && s > -5) CHECK(ramification_check(x, s - 1));
        }
}

TEST_CASE("ramification numbers from lattice data") {
    // A1 case: four half-fibres of |l1| against e1.
    SigmaClass l1{std_class("l-e1"), ConfigId::P1}, e1{exceptional(1), ConfigId::P1};
    auto a = ardp_numbers({{r(2), l1}}, e1);
    CHECK(a.residual_dot_pullback == -2);
    CHECK(a.pullback_sq == -2);
    CHECK_FALSE(ramification_check(a.residual_dot_pullback, a.pullback_sq));
    // A2 case: three half-fibres plus half of phi^*e2.
    SigmaClass m{std_class("l-e1"), ConfigId::P4}, f1{exceptional(1), ConfigId::P4}, f2{exceptional(2), ConfigId::P4};
    auto b = ardp_numbers({{r(3, 2), m}, {r(1, 2), f2}}, f1);
    CHECK(b.residual_dot_pullback == r(-4, 3));
    CHECK(b.pullback_sq == r(-4, 3));
    CHECK_FALSE(ramification_check(b.residual_dot_pullback, b.pullback_sq));
    CHECK(hurwitz_ramification_multiple() == 3);
}

TEST_CASE("surface numerology") {
    auto a = surface_numerology(1, 5);
    CHECK(a.euler == 7);
    CHECK(a.h2 == 5);
    CHECK(a.max_disjoint_minus4 == 2);
    auto b = surface_numerology(1, 6);
    CHECK(b.euler == 6);
    CHECK(b.h2 == 4);
    CHECK(b.max_disjoint_minus4 == 1);
    CHECK(surface_numerology(2, 5).euler == 19);
}
