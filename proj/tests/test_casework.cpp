#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dp5/casework.hpp"
#include "dp5/curve_geometry.hpp"
#include "dp5/parse_error.hpp"
#include "test_util.hpp"

#include <algorithm>
#include <chrono>
#include <set>

using namespace dp5;

namespace {

SolutionRow row(std::vector<long> z, long l2, long le, long e2, long ez) { return {std::move(z), l2, le, e2, ez}; }

std::set<SolutionRow> as_set(const std::vector<SolutionRow>& v) { return {v.begin(), v.end()}; }

bool contains(const std::vector<SolutionRow>& v, const SolutionRow& r) {
    return std::find(v.begin(), v.end(), r) != v.end();
}

// Box scan that only consults the post-hoc validator.
std::set<SolutionRow> box_oracle(TableCase c, long bound) {
    const auto sys = ConstraintSystem::of(c);
    std::set<SolutionRow> out;
    std::vector<long> z(sys.chain_length, 1);
    for (;;) {
        for (long l2 : {0L, 2L})
            for (long e2 : {-2L, -4L, -6L})
                for (long le = 0; le <= 6; ++le) {
                    SolutionRow r{z, l2, le, e2, 4 - e2 - 2 * le};
                    if (sys.admits(r)) out.insert(r);
                }
        int i = sys.chain_length - 1;
        while (i >= 0 && z[i] == bound) z[i--] = 1;
        if (i < 0) break;
        ++z[i];
    }
    return out;
}

const DiffEntry* find_entry(const std::vector<DiffEntry>& v, const SolutionRow& r) {
    for (const auto& e : v)
        if (e.row == r) return &e;
    return nullptr;
}

bool has_note(const DiffEntry& e, const std::string& needle) {
    return std::any_of(e.notes.begin(), e.notes.end(), [&](const std::string& n) { return n.find(needle) != std::string::npos; });
}

DivisorClass sc(const char* s) { return parse_class(s, Basis::Standard, configuration(ConfigId::General)); }

}  // namespace

TEST_CASE("p4 table") {
    auto t0 = std::chrono::steady_clock::now();
    auto rows = enumerate_table_p4();
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
    CHECK(ms < 1000);
    CHECK(rows.size() == 12);
    CHECK(contains(rows, row({2, 1}, 2, 2, -2, 2)));
    CHECK(contains(rows, row({4, 3}, 0, 0, -6, 10)));
    auto printed = printed_table(TableCase::P4);
    CHECK(printed.size() == 12);
    CHECK(as_set(rows) == as_set(printed));
    auto d = diff_tables(TableCase::P4, rows, printed);
    CHECK(d.matched.size() == 12);
    CHECK(d.only_in_printed.empty());
    CHECK(d.only_in_enumerator.empty());
}

TEST_CASE("generator and validator agree on the whole box") {
    for (auto c : {TableCase::P4, TableCase::P5, TableCase::P6}) {
        auto rows = enumerate_table(c);
        for (const auto& r : rows) CHECK(ConstraintSystem::of(c).admits(r));
        CHECK(as_set(rows) == box_oracle(c, 16));
    }
}

TEST_CASE("saturation") {
    for (auto c : {TableCase::P4, TableCase::P5, TableCase::P6}) CHECK(enumerate_table(c, 32) == enumerate_table(c, 16));
}

TEST_CASE("p5 table") {
    auto rows = enumerate_table_p5();
    CHECK(contains(rows, row({1, 1, 1}, 2, 4, -6, 2)));
    CHECK(contains(rows, row({4, 4, 3}, 0, 0, -6, 10)));
    CHECK_FALSE(contains(rows, row({3, 2, 1}, 3, 0, -4, 8)));
    auto printed = printed_table(TableCase::P5);
    CHECK(printed.size() == 20);
    auto d = diff_tables(TableCase::P5, rows, printed);
    auto* bad_l = find_entry(d.only_in_printed, row({3, 2, 1}, 3, 0, -4, 8));
    REQUIRE(bad_l);
    CHECK(has_note(*bad_l, "L^2 in {0,2}"));
    // the derived E.Z column of this printed row disagrees with 4 - E^2 - 2L.E = 6
    auto* bad_ez = find_entry(d.only_in_printed, row({3, 4, 3}, 0, 1, -4, 2));
    REQUIRE(bad_ez);
    CHECK(has_note(*bad_ez, "E.Z column"));
    CHECK(contains(rows, row({3, 4, 3}, 0, 1, -4, 6)));
    CHECK(d.matched.size() == 18);
    CHECK(d.only_in_printed.size() == 2);
    CHECK(d.matched.size() + d.only_in_enumerator.size() == rows.size());
    for (const auto& e : d.only_in_enumerator) CHECK(has_note(e, "satisfies all constraints"));
}

TEST_CASE("p6 table") {
    auto rows = enumerate_table_p6();
    CHECK(contains(rows, row({1, 2, 2, 1}, 2, 3, -4, 2)));
    CHECK(contains(rows, row({1, 1, 1, 1}, 2, 4, -6, 2)));
    auto printed = printed_table(TableCase::P6);
    CHECK(printed.size() == 43);
    auto d = diff_tables(TableCase::P6, rows, printed);
    CHECK(d.matched.size() >= 40);
    for (const auto& e : d.only_in_printed) CHECK_FALSE(e.notes.empty());
    for (const auto& e : d.only_in_enumerator) CHECK(has_note(e, "satisfies all constraints"));
    auto* mirror = find_entry(d.only_in_enumerator, row({2, 4, 3, 2}, 0, 2, -2, 2));
    if (mirror) CHECK(has_note(*mirror, "mirror"));
}

TEST_CASE("hand-substituted rows") {
    // 4 + 1 - 2 = 3 = 10 - 4 - 4 + 1
    CHECK(ConstraintSystem::of(TableCase::P4).admits(row({2, 1}, 2, 2, -2, 2)));
    // 1 = 10 - 4 - 8 + 3
    CHECK(ConstraintSystem::of(TableCase::P5).admits(row({1, 1, 1}, 2, 4, -6, 2)));
    // 1 + 4 + 4 + 1 - 2 - 4 - 2 = 2 = 10 - 4 - 6 + 2
    CHECK(ConstraintSystem::of(TableCase::P6).admits(row({1, 2, 2, 1}, 2, 3, -4, 2)));
    auto v = ConstraintSystem::of(TableCase::P4).violated(row({1, 2}, 2, 2, -2, 2));
    CHECK(std::find(v.begin(), v.end(), "b <= a <= 2b") != v.end());
    CHECK_THROWS_AS(ConstraintSystem::of(TableCase::P5).make_row({3, 2, 1}, 3, 0, -4), std::domain_error);
    CHECK(ConstraintSystem::of(TableCase::P4).make_row({2, 1}, 2, 2, -2).e_dot_z == 2);
}

TEST_CASE("table csv") {
    auto rows = enumerate_table_p6();
    CHECK(parse_table_csv(TableCase::P6, table_to_csv(TableCase::P6, rows)) == rows);
    try {
        parse_table_csv(TableCase::P4, "a,b,L_sq,L_dot_E,E_sq,E_dot_Z\n2,1,2,2,-2,2\n2,x,2,2,-2,2\n");
        FAIL("expected parse error");
    } catch (const ParseError& e) {
        CHECK(e.line == 3);
        CHECK(e.field == "b");
    }
    CHECK_THROWS_AS(parse_table_csv(TableCase::P4, "a,b,c\n"), ParseError);
    CHECK_THROWS_AS(parse_table_csv(TableCase::P4, "a,b,L_sq,L_dot_E,E_sq,E_dot_Z\n1,2,3\n"), ParseError);
}

TEST_CASE("negative definite graphs") {
    CHECK(negative_definite_graphs(0).size() == 1);
    CHECK(negative_definite_graphs(1).size() == 1);
    CHECK(negative_definite_graphs(2).size() == 2);
    // 3A1, A2+A1, A3
    CHECK(negative_definite_graphs(3).size() == 3);
    // 4A1, A2+2A1, 2A2, A3+A1, A4, D4
    std::set<std::string> four;
    for (const auto& g : negative_definite_graphs(4)) four.insert(graph_pattern(g));
    CHECK(four == std::set<std::string>{"4A1", "2A1+A2", "2A2", "A1+A3", "A4", "D4"});
}

TEST_CASE("preimage search") {
    // (phi^*e1)^2 = 4 * (-1/3), index 3
    CHECK(preimage_configuration_search(2, Rational(-4, 3), 3) == std::vector<std::string>{"A2"});
    CHECK(preimage_configuration_search(4, Rational(16, 5), 5) == std::vector<std::string>{"A4"});
    CHECK(preimage_configuration_search(0, Rational(0), 1) == std::vector<std::string>{"0"});

    PreimageQuery two;
    two.max_curves = 3;
    two.cartier_index = 4;
    two.targets = {{Rational(-1)}, {Rational(0)}};
    two.cross = {{Rational(-1), Rational(2)}, {Rational(2), Rational(0)}};
    CHECK(feasible_patterns(two) == std::vector<std::string>{"2A1", "A3"});

    // one target alone leaves an extra 3A1 pattern
    auto single = preimage_configuration_search(3, Rational(-1), 4);
    CHECK(single == std::vector<std::string>{"2A1", "3A1", "A3"});
}

TEST_CASE("strict transforms over an A2 point") {
    PreimageQuery q;
    q.max_curves = 2;
    q.cartier_index = 3;
    q.targets = {{Rational(2, 3)}};
    std::set<std::tuple<long, long, long>> got;
    for (const auto& s : preimage_search(q))
        if (s.pattern == "A2") {
            got.insert({to_long(s.e_sq[0]), s.e_dot_theta[0][0], s.e_dot_theta[0][1]});
            // 3 x reproduces the integral Z
            for (const auto& x : s.coeffs[0]) CHECK(is_integral(3 * x));
        }
    std::set<std::tuple<long, long, long>> want{{0, 1, 0}, {0, 0, 1}, {-2, 2, 0}, {-2, 0, 2}, {-4, 2, 1}, {-4, 1, 2}};
    CHECK(got == want);
}

TEST_CASE("decompositions") {
    const auto& g = configuration(ConfigId::General);
    CHECK(decompose_class(DivisorClass{}, minus_one_classes(), 3, g) == std::vector<std::vector<DivisorClass>>{{}});

    auto lines = minus_one_classes();
    auto l_e4 = decompose_class(sc("l-e4"), lines, 2, g);
    CHECK(l_e4.size() == 3);
    for (const auto& m : l_e4) {
        REQUIRE(m.size() == 2);
        CHECK(m[0] + m[1] == sc("l-e4"));
    }

    // hand count: pairings of {1,2,3,4} into two lines plus e4, or two lines sharing a point plus that e_i
    CHECK(decompose_class(sc("2l-e1-e2-e3"), lines, 3, g).size() == 6);

    auto pool = nef_effective_classes(g, 1, 4);
    auto split = decompose_class(-canonical_class(), pool, 2, g);
    std::set<std::vector<DivisorClass>> want;
    auto add = [&](DivisorClass a, DivisorClass b) {
        std::vector<DivisorClass> v{a, b};
        std::sort(v.begin(), v.end());
        want.insert(v);
    };
    add(sc("l"), sc("2l-e1-e2-e3-e4"));
    add(sc("l-e1"), sc("2l-e2-e3-e4"));
    add(sc("l-e2"), sc("2l-e1-e3-e4"));
    add(sc("l-e3"), sc("2l-e1-e2-e4"));
    add(sc("l-e4"), sc("2l-e1-e2-e3"));
    CHECK(std::set<std::vector<DivisorClass>>(split.begin(), split.end()) == want);
    CHECK(split.size() == 5);
}

TEST_CASE("decompose is invariant under reordering parts") {
    const auto& g = configuration(ConfigId::General);
    auto lines = minus_one_classes();
    auto base = decompose_class(sc("2l-e1-e2-e3"), lines, 3, g);
    Rng rng(5);
    for (int t = 0; t < 10; ++t) {
        auto p = lines;
        std::shuffle(p.begin(), p.end(), rng);
        p.push_back(p.front());
        CHECK(decompose_class(sc("2l-e1-e2-e3"), p, 3, g) == base);
    }
    CHECK_THROWS_AS(decompose_class(sc("l"), {sc("e1-e2")}, 2, g), std::invalid_argument);
}
