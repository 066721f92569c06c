#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dp5/curve_geometry.hpp"
#include "dp5/symmetry.hpp"
#include "test_util.hpp"

#include <algorithm>

using namespace dp5;

namespace {

DivisorClass c(const char* s) { return parse_class(s, Basis::Standard, configuration(ConfigId::General)); }

std::array<int, 4> random_perm(Rng& rng) {
    std::array<int, 4> p{1, 2, 3, 4};
    std::shuffle(p.begin(), p.end(), rng);
    return p;
}

std::array<int, 4> compose(const std::array<int, 4>& s, const std::array<int, 4>& t) {
    std::array<int, 4> r{};
    for (int i = 0; i < 4; ++i) r[i] = s[t[i] - 1];
    return r;
}

}  // namespace

TEST_CASE("permutation automorphisms") {
    CHECK(perm_automorphism({1, 2, 3, 4}) == LatticeAutomorphism::identity());
    auto s = transposition(3, 4);
    CHECK(s.apply(c("e3")) == c("e4"));
    CHECK(s.apply(c("e4")) == c("e3"));
    CHECK(s.apply(c("5l-e1-2e2-3e3-4e4")) == c("5l-e1-2e2-4e3-3e4"));
    Rng rng(6);
    for (int t = 0; t < 50; ++t) {
        auto p = random_perm(rng);
        CHECK(perm_automorphism(p).apply(-canonical_class()) == -canonical_class());
        auto q = random_perm(rng);
        CHECK(perm_automorphism(compose(p, q)) == perm_automorphism(p) * perm_automorphism(q));
    }
    CHECK_THROWS_AS(perm_automorphism({1, 1, 3, 4}), std::invalid_argument);
}

TEST_CASE("cremona automorphism") {
    auto tau = cremona_automorphism({1, 2, 3});
    CHECK(tau.apply(line_class()) == c("2l-e1-e2-e3"));
    CHECK(tau * tau == LatticeAutomorphism::identity());
    CHECK(tau.apply(c("2l-e1-e2-e3-e4")) == c("l-e4"));
    CHECK(tau.apply(c("e1")) == c("l-e2-e3"));
    CHECK(tau.apply(c("e4")) == c("e4"));
    CHECK_THROWS_AS(cremona_automorphism({1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(cremona_automorphism({1, 2, 2}), std::invalid_argument);
    // other bases agree with conjugation by a transposition
    auto s = transposition(3, 4);
    CHECK(cremona_automorphism({1, 2, 4}) == s * tau * s);
    auto s14 = transposition(1, 4);
    CHECK(cremona_automorphism({2, 3, 4}) == s14 * tau * s14);
}

TEST_CASE("group of order 120") {
    auto group = generate_group();
    CHECK(group.size() == 120);
    CHECK(std::find(group.begin(), group.end(), LatticeAutomorphism::identity()) != group.end());
    auto lines = minus_one_classes();
    std::sort(lines.begin(), lines.end());
    for (const auto& g : group) {
        CHECK(g.preserves_form());
        CHECK(g.fixes_canonical());
        std::vector<DivisorClass> img;
        for (const auto& l : lines) img.push_back(g.apply(l));
        std::sort(img.begin(), img.end());
        CHECK(img == lines);
    }
}

TEST_CASE("gram identity as a matrix equation") {
    // g^T J g = J, J = diag(1,-1,-1,-1,-1)
    const long j[5] = {1, -1, -1, -1, -1};
    for (const auto& g : generate_group())
        for (int a = 0; a < 5; ++a)
            for (int b = 0; b < 5; ++b) {
                Integer s = 0;
                for (int k = 0; k < 5; ++k) s += g.m[k][a] * j[k] * g.m[k][b];
                CHECK(s == (a == b ? j[a] : 0));
            }
}

TEST_CASE("transitivity on lines and orbits") {
    auto r = verify_fact_3_5();
    CHECK(r.transitive_on_lines);
    CHECK(r.stabilizer_transitive_on_disjoint);
    CHECK(r.transitive_on_disjoint_pairs);
    auto orbits = line_orbits(generate_group());
    REQUIRE(orbits.size() == 1);
    CHECK(orbits[0].size() == 10);
    std::vector<LatticeAutomorphism> s4;
    for (int i = 1; i <= 4; ++i)
        for (int j = i + 1; j <= 4; ++j) s4.push_back(transposition(i, j));
    // closure of transpositions alone: orbits {e_i} and {l-e_i-e_j}
    std::set<LatticeAutomorphism> sub{LatticeAutomorphism::identity()};
    for (bool grew = true; grew;) {
        grew = false;
        for (auto g : std::vector<LatticeAutomorphism>(sub.begin(), sub.end()))
            for (const auto& h : s4) grew |= sub.insert(h * g).second;
    }
    CHECK(sub.size() == 24);
    auto o = line_orbits({sub.begin(), sub.end()});
    CHECK(o.size() == 2);
}

TEST_CASE("transport of the second example") {
    auto tau = cremona_automorphism({1, 2, 3});
    auto step1 = transport_cover_data(second_bidouble_data(), tau);
    CHECK(step1.total(0) == c("3l-3e1-e2-e3+e4"));
    CHECK(step1.total(1) == c("3l+e1-3e2-e3-e4"));
    CHECK(step1.total(2) == c("3l-e1+e2-e3-3e4"));
    auto step2 = transport_cover_data(step1, transposition(3, 4));
    CHECK(step2.total(0) == c("3l-3e1-e2+e3-e4"));
    CHECK(step2.total(1) == c("3l+e1-3e2-e3-e4"));
    CHECK(step2.total(2) == c("3l-e1+e2-3e3-e4"));
    CHECK(same_family(step2, burniat_data()));
    CHECK_FALSE(same_family(second_bidouble_data(), burniat_data()));
    CHECK(same_family(transport_cover_data(burniat_data(), LatticeAutomorphism::identity()), burniat_data()));
}

TEST_CASE("transport preserves pairings among branch components") {
    auto data = second_bidouble_data();
    std::vector<DivisorClass> comps;
    for (int i = 0; i < 3; ++i) comps.insert(comps.end(), data.d[i].begin(), data.d[i].end());
    for (const auto& g : generate_group()) {
        auto moved = transport_cover_data(data, g);
        std::vector<DivisorClass> m;
        for (int i = 0; i < 3; ++i) m.insert(m.end(), moved.d[i].begin(), moved.d[i].end());
        for (std::size_t a = 0; a < comps.size(); ++a)
            for (std::size_t b = 0; b < comps.size(); ++b) CHECK(intersect(m[a], m[b]) == intersect(comps[a], comps[b]));
    }
}
