#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dp5/contraction.hpp"
#include "test_util.hpp"

using namespace dp5;

namespace {

SigmaClass sc(const char* curve_literal, ConfigId id) {
    return {parse_class(curve_literal, Basis::Curve, configuration(id)), id};
}

QDivisorClass qc(const char* curve_literal, ConfigId id) {
    return parse_qclass(curve_literal, Basis::Curve, configuration(id));
}

Rational r(long p, long q = 1) { return Rational(p, q); }

}  // namespace

TEST_CASE("displayed pullbacks, P4") {
    // l3 = l-e3-e4, c = l-e1-e2-2e3-2e4 (curve basis), e3 is the (-2)-curve of the chain.
    auto l3 = sc("l-e3-e4", ConfigId::P4);
    QDivisorClass expect = to_q(l3.rep) + r(2, 3) * qc("e3", ConfigId::P4) + r(1, 3) * to_q(make_class(1, -1, -1, -1, 0));
    CHECK(mumford_pullback(l3) == expect);
    CHECK(format_pullback(l3) == "l-e3-e4+1/3c+2/3e3");
    auto e4 = sc("e4", ConfigId::P4);
    CHECK(format_pullback(e4) == "e4+1/3c+2/3e3");
    auto e1 = sc("e1", ConfigId::P4);
    auto e2 = sc("e2", ConfigId::P4);
    CHECK(sigma_intersect(e1, e1) == r(-1, 3));
    CHECK(sigma_intersect(l3, e1) == r(1, 3));
    CHECK(sigma_intersect(e2, e1) == r(2, 3));
}

TEST_CASE("displayed pullbacks, P3") {
    auto l4 = sc("l-e4", ConfigId::P3);
    CHECK(format_pullback(l4) == "l-e4+1/2c");
    auto l1 = sc("l-e1-e2-e3", ConfigId::P3);
    CHECK(format_pullback(l1) == "l-e1-e2-e3+2/3e1+1/3e2");
    CHECK(sigma_intersect(l4, l4) == r(1, 2));
    CHECK(sigma_intersect(l1, l1) == r(2, 3));
    auto e3 = sc("e3", ConfigId::P3);
    CHECK(sigma_intersect(e3, e3) == r(1, 6));
}

TEST_CASE("displayed pullbacks, P5 and P6") {
    auto l2 = sc("l-e2-e3-e4", ConfigId::P5);
    CHECK(format_pullback(l2) == "l-e2-e3-e4+1/4c+3/4e2+1/2e3");
    CHECK(mumford_pullback(l2) == qc("5/4l-1/4e1-1/2e2-e3-3/2e4", ConfigId::P5));
    CHECK(sigma_intersect(l2, l2) == r(3, 4));
    auto e4 = sc("e4", ConfigId::P5), e1 = sc("e1", ConfigId::P5);
    CHECK(sigma_intersect(e4, e4) == 0);
    CHECK(sigma_intersect(e4, e1) == r(1, 2));
    auto l1 = sc("l-e1-e2-e3-e4", ConfigId::P6);
    CHECK(sigma_intersect(l1, l1) == r(4, 5));
}

TEST_CASE("singularity types") {
    using V = std::vector<std::string>;
    CHECK(singularity_types(configuration(ConfigId::General)).empty());
    CHECK(singularity_types(configuration(ConfigId::P1)) == V{"A1"});
    CHECK(singularity_types(configuration(ConfigId::P2)) == V{"A1", "A1"});
    CHECK(singularity_types(configuration(ConfigId::P3)) == V{"A1", "A2"});
    CHECK(singularity_types(configuration(ConfigId::P4)) == V{"A2"});
    CHECK(singularity_types(configuration(ConfigId::P5)) == V{"A3"});
    CHECK(singularity_types(configuration(ConfigId::P6)) == V{"A4"});
}

TEST_CASE("general configuration: pullback is the representative") {
    Rng rng(1);
    for (int t = 0; t < 50; ++t) {
        auto d = random_class(rng, 5);
        CHECK(mumford_pullback({d, ConfigId::General}) == to_q(d));
    }
}

TEST_CASE("pullback is orthogonal to every (-2)-curve") {
    Rng rng(77);
    for (auto id : all_configs()) {
        const auto& cfg = configuration(id);
        auto theta = minus_two_curves(cfg);
        for (int t = 0; t < 1000; ++t) {
            SigmaClass s{random_class(rng, 10), id};
            auto p = mumford_pullback(s);
            for (const auto& th : theta) CHECK(intersect(p, to_q(th.cls)) == 0);
            CHECK(pushes_forward_to(p, s));
        }
    }
}

TEST_CASE("anticanonical class needs no correction") {
    Rng rng(12);
    for (auto id : all_configs()) {
        SigmaClass mk{-canonical_class(), id};
        CHECK(mumford_pullback(mk) == to_q(-canonical_class()));
        CHECK(sigma_intersect(mk, mk) == 5);
        for (int t = 0; t < 100; ++t) {
            SigmaClass s{random_class(rng, 6), id};
            CHECK(sigma_intersect(mk, s) == Rational(intersect(-canonical_class(), s.rep)));
        }
    }
}

TEST_CASE("denominators divide the discriminant of each component") {
    // A_k has discriminant k+1; P2 and P3 mix components, so use the lcm of the parts.
    const long disc[] = {1, 2, 2, 6, 3, 4, 5};
    Rng rng(31);
    for (auto id : all_configs())
        for (int t = 0; t < 200; ++t) {
            auto terms = mumford_pullback_terms({random_class(rng, 8), id});
            for (const auto& x : terms.theta_coeffs) CHECK(disc[static_cast<int>(id)] % denom(x) == 0);
        }
}

TEST_CASE("representative independence") {
    Rng rng(55);
    for (auto id : all_configs()) {
        auto theta = minus_two_curves(configuration(id));
        if (theta.empty()) continue;
        for (int t = 0; t < 200; ++t) {
            SigmaClass s{random_class(rng, 6), id}, u{random_class(rng, 6), id};
            SigmaClass s2 = s;
            s2.rep += Integer(uniform(rng, -3, 3)) * theta[static_cast<std::size_t>(uniform(rng, 0, theta.size() - 1))].cls;
            CHECK(sigma_intersect(s, u) == sigma_intersect(s2, u));
            CHECK(mumford_pullback(s) == mumford_pullback(s2));
        }
    }
}
