#include "dp5/golden.hpp"

#include "dp5/casework.hpp"
#include "dp5/cohomology.hpp"
#include "dp5/contraction.hpp"
#include "dp5/covers.hpp"
#include "dp5/curve_geometry.hpp"
#include "dp5/symmetry.hpp"

#include <algorithm>
#include <filesystem>
#include <functional>
#include <set>
#include <sstream>

namespace dp5 {

namespace {

json rational_json(const Rational& r) {
    if (is_integral(r)) return json(to_string(numer(r)));
    return json(to_string(r));
}

std::optional<Rational> as_rational(const json& j) {
    try {
        if (j.is_number_integer()) return Rational(j.get<long>());
        if (j.is_string()) return parse_rational(j.get<std::string>());
    } catch (const std::exception&) {
    }
    return std::nullopt;
}

bool json_matches(const json& want, const json& got) {
    auto a = as_rational(want), b = as_rational(got);
    if (a && b) return *a == *b;
    return want == got;
}

std::string dump(const json& j) { return j.dump(); }

void compare(const std::string& where, const json& want, const json& got, std::vector<std::string>& out) {
    if (!json_matches(want, got)) out.push_back(where + ": expected " + dump(want) + ", got " + dump(got));
}

json diff_entries_json(const std::vector<DiffEntry>& v) {
    json arr = json::array();
    for (const auto& e : v) arr.push_back({{"row", row_to_json(e.row)}, {"notes", e.notes}});
    return arr;
}

}  // namespace

ScenarioReport evaluate_scenario(const Scenario& s) {
    ScenarioReport rep;
    rep.result = {{"kind", s.kind}, {"name", s.name}};
    const json& ex = s.expect;
    if (s.kind == "double_cover") {
        json members = json::array();
        for (const auto& c : s.covers) {
            auto inv = double_cover_invariants(c);
            json m{{"m_dot_k", rational_json(c.m_dot_k)},
                   {"m_sq", rational_json(c.m_sq)},
                   {"k_plus_m_sq", rational_json(c.kpm_sq())},
                   {"chi", rational_json(inv.chi)},
                   {"chi_integral", inv.chi_integral},
                   {"k_sq", rational_json(inv.k_sq)},
                   {"pg_lower", to_string(inv.pg_lower)}};
            if (inv.q_lower) m["q_lower"] = to_string(*inv.q_lower);
            if (inv.albanese_ok) m["albanese_ok"] = *inv.albanese_ok;
            members.push_back(m);
        }
        rep.result["members"] = members;
        if (ex.is_object())
            for (auto it = ex.begin(); it != ex.end(); ++it) {
                for (std::size_t i = 0; i < members.size(); ++i) {
                    const json& want = it.value().is_array() ? it.value().at(std::min(i, it.value().size() - 1)) : it.value();
                    const std::string where = s.name + "[" + std::to_string(i) + "]." + it.key();
                    if (!members[i].contains(it.key()))
                        rep.mismatches.push_back(where + ": not computed");
                    else
                        compare(where, want, members[i][it.key()], rep.mismatches);
                }
                if (it.value().is_array() && it.value().size() != members.size())
                    rep.mismatches.push_back(s.name + "." + it.key() + ": expected " + std::to_string(it.value().size()) +
                                             " values for " + std::to_string(members.size()) + " members");
            }
    } else if (s.kind == "bidouble") {
        const auto& b = *s.bidouble;
        auto inv = bidouble_invariants(b);
        json totals = json::array();
        for (int i = 0; i < 3; ++i) totals.push_back(format_class(b.total(i), Basis::Standard, configuration(b.cfg)));
        rep.result.update({{"pg", to_string(inv.pg)},
                           {"q", to_string(inv.q)},
                           {"k_sq", to_string(inv.k_sq)},
                           {"chi", to_string(inv.chi)},
                           {"bicanonical_is_cover", inv.bicanonical_is_cover},
                           {"totals", totals},
                           {"branch_is_minus_3K", b.branch() == Integer(-3) * canonical_class()}});
        if (ex.is_object())
            for (auto it = ex.begin(); it != ex.end(); ++it) {
                if (!rep.result.contains(it.key()))
                    rep.mismatches.push_back(s.name + "." + it.key() + ": not computed");
                else
                    compare(s.name + "." + it.key(), it.value(), rep.result[it.key()], rep.mismatches);
            }
    } else if (s.kind == "constraint_table") {
        const TableCase c = *s.table;
        auto rows = enumerate_table(c);
        std::string path = s.printed_path.empty() ? "tables/" + table_case_name(c) + ".csv" : s.printed_path;
        if (!std::filesystem::path(path).is_absolute()) path = data_path(path);
        auto printed = load_table_csv(c, path);
        auto d = diff_tables(c, rows, printed);
        bool explained = true;
        for (const auto& e : d.only_in_printed) explained = explained && !e.notes.empty();
        rep.result.update({{"case", table_case_name(c)},
                           {"rows", rows.size()},
                           {"printed", printed.size()},
                           {"matched", d.matched.size()},
                           {"only_in_printed", diff_entries_json(d.only_in_printed)},
                           {"only_in_enumerator", diff_entries_json(d.only_in_enumerator)},
                           {"all_mismatches_explained", explained}});
        if (ex.is_object())
            for (auto it = ex.begin(); it != ex.end(); ++it) {
                json got;
                if (it.key() == "only_in_printed" || it.key() == "only_in_enumerator")
                    got = rep.result[it.key()].size();
                else if (rep.result.contains(it.key()))
                    got = rep.result[it.key()];
                else {
                    rep.mismatches.push_back(s.name + "." + it.key() + ": not computed");
                    continue;
                }
                compare(s.name + "." + it.key(), it.value(), got, rep.mismatches);
            }
    }
    return rep;
}

std::vector<std::string> bundled_scenarios() {
    std::vector<std::string> out;
    const std::filesystem::path dir = data_path("scenarios");
    if (!std::filesystem::exists(dir)) return out;
    for (const auto& e : std::filesystem::directory_iterator(dir))
        if (e.path().extension() == ".json") out.push_back("scenarios/" + e.path().filename().string());
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

struct Suite {
    std::vector<GoldenCheck> checks;

    void add(const std::string& module, const std::string& desc, const std::function<bool(std::string&)>& f) {
        std::string detail;
        bool ok = false;
        try {
            ok = f(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        checks.push_back({module, desc, ok, detail});
    }
    void eq(const std::string& module, const std::string& desc, const std::function<std::string()>& got,
            const std::string& want) {
        add(module, desc, [&](std::string& d) {
            auto g = got();
            d = "got " + g;
            return g == want;
        });
    }
};

const SurfaceConfiguration& cfg(ConfigId id) { return configuration(id); }

DivisorClass cls(const char* s, ConfigId id = ConfigId::General, Basis b = Basis::Curve) {
    return parse_class(s, b, configuration(id));
}

std::string join(const std::vector<std::string>& v) {
    std::string out;
    for (const auto& s : v) out += (out.empty() ? "" : ",") + s;
    return "{" + out + "}";
}

std::string curve_set(const std::vector<DivisorClass>& v, ConfigId id) {
    std::vector<std::string> s;
    for (const auto& c : v) s.push_back(format_class(c, Basis::Curve, cfg(id)));
    std::sort(s.begin(), s.end());
    return join(s);
}

std::string h0s(const char* lit, ConfigId id) { return to_string(h0(cls(lit, id), cfg(id))); }

std::string sigma_sq(const char* a, const char* b, ConfigId id) {
    return to_string(sigma_intersect({cls(a, id), id}, {cls(b, id), id}));
}

bool contains_row(const std::vector<SolutionRow>& v, SolutionRow r) { return std::find(v.begin(), v.end(), r) != v.end(); }

void lattice_checks(Suite& s) {
    const std::string m = "picard_lattice";
    s.eq(m, "(-K)^2 = 5", [] { return to_string(intersect(canonical_class(), canonical_class())); }, "5");
    s.eq(m, "K = (-3,1,1,1,1) on GENERAL", [] { return format_class(canonical_class(), Basis::Standard, cfg(ConfigId::General)); },
         "-3l+e1+e2+e3+e4");
    s.eq(m, "-K in P2 curve basis", [] { return format_class(-canonical_class(), Basis::Curve, cfg(ConfigId::P2)); },
         "3l-e1-e2-2e3-e4");
    s.eq(m, "collinear line in P2 curve basis",
         [] { return format_class(make_class(1, -1, -1, -1, 0), Basis::Curve, cfg(ConfigId::P2)); }, "l-e1-e2-2e3");
    s.eq(m, "collinear line in P6 curve basis",
         [] { return format_class(make_class(1, -1, -1, -1, 0), Basis::Curve, cfg(ConfigId::P6)); }, "l-e1-2e2-3e3-3e4");
    s.eq(m, "chi(3l-e1-e2-e3) = 7", [] { return to_string(riemann_roch_chi(cls("3l-e1-e2-e3"))); }, "7");
}

void curve_checks(Suite& s) {
    const std::string m = "curve_geometry";
    s.eq(m, "P1 (-2)-curves", [] {
        std::vector<DivisorClass> v;
        for (const auto& c : minus_two_curves(cfg(ConfigId::P1))) v.push_back(c.cls);
        return curve_set(v, ConfigId::General);
    }, "{l-e1-e2-e3}");
    s.add(m, "P6 (-2)-curves form a chain of 4", [](std::string& d) {
        auto t = minus_two_curves(cfg(ConfigId::P6));
        d = std::to_string(t.size()) + " curves";
        if (t.size() != 4) return false;
        std::vector<std::vector<int>> adj(4, std::vector<int>(4, 0));
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j)
                if (i != j) adj[i][j] = static_cast<int>(intersect(t[i].cls, t[j].cls));
        auto comps = ade_components(adj);
        d += ", " + (comps.empty() ? std::string("none") : comps.front());
        return comps == std::vector<std::string>{"A4"};
    });
    s.add(m, "GENERAL: 10 (-1)-curves, each meeting exactly 3 others", [](std::string& d) {
        auto v = minus_one_curves(cfg(ConfigId::General));
        d = std::to_string(v.size()) + " curves";
        if (v.size() != 10) return false;
        for (const auto& a : v) {
            int k = 0;
            for (const auto& b : v) k += intersect(a.cls, b.cls) == 1;
            if (k != 3) return false;
        }
        return true;
    });
    s.add(m, "GENERAL incidence graph is 3-regular", [](std::string&) {
        auto g = incidence_graph(cfg(ConfigId::General));
        if (g.size() != 10) return false;
        for (const auto& row : g)
            if (std::count(row.begin(), row.end(), Integer(1)) != 3) return false;
        return true;
    });
    s.add(m, "l-e1-e2 is irreducible on GENERAL", [](std::string&) { return is_irreducible(cls("l-e1-e2"), cfg(ConfigId::General)); });
    const std::pair<ConfigId, const char*> rulings[] = {{ConfigId::P1, "{l-e1,l-e2,l-e3}"}, {ConfigId::P2, "{l-e1}"},
                                                        {ConfigId::P3, "{}"},                {ConfigId::P4, "{l-e1,l-e2}"},
                                                        {ConfigId::P5, "{l-e1}"},            {ConfigId::P6, "{}"}};
    for (const auto& [id, want] : rulings)
        s.eq(m, "rulings orthogonal to (-2)-curves on " + config_name(id),
             [id = id] { return curve_set(ruling_classes(cfg(id), true), id); }, want);
}

void cohomology_checks(Suite& s) {
    const std::string m = "cohomology";
    s.eq(m, "h0(3l-e1-e2-e3) = 7", [] { return h0s("3l-e1-e2-e3", ConfigId::General); }, "7");
    s.eq(m, "h0(-K) = 6", [] { return to_string(h0(-canonical_class(), cfg(ConfigId::General))); }, "6");
    for (auto id : all_configs()) s.eq(m, "h0(l-e4) = 2 on " + config_name(id), [id] { return h0s("l-e4", id); }, "2");
    s.eq(m, "h0(2l-e1-e2-e3-e4) = 3 on P2", [] { return h0s("2l-e1-e2-e3-e4", ConfigId::P2); }, "3");
    s.eq(m, "h0(2l-e1-e2-e3-e4) = 4 on P3", [] { return h0s("2l-e1-e2-e3-e4", ConfigId::P3); }, "4");
    s.eq(m, "h0(2l-e1-2e2-2e3-e4) = 3 on P3", [] { return h0s("2l-e1-2e2-2e3-e4", ConfigId::P3); }, "3");
    s.eq(m, "h0(2l-e2-e3-2e4) = 4 on P5", [] { return h0s("2l-e2-e3-2e4", ConfigId::P5); }, "4");
    s.add(m, "l+e1-e2-e3-e4 is not effective", [](std::string&) { return !is_effective(cls("l+e1-e2-e3-e4"), cfg(ConfigId::General)); });
    s.add(m, "collinear line is effective on P1",
          [](std::string&) { return is_effective(make_class(1, -1, -1, -1, 0), cfg(ConfigId::P1)); });
    s.add(m, "no class with h0 >= 2 and -K - 2D effective within bound 3", [](std::string& d) {
        auto v = verify_lemma_4_5(3);
        d = std::to_string(v.size()) + " counterexamples";
        return v.empty();
    });
}

void contraction_checks(Suite& s) {
    const std::string m = "contraction";
    auto fp = [](const char* lit, ConfigId id) { return format_pullback({cls(lit, id), id}); };
    s.eq(m, "P4 pullback of l3", [&] { return fp("l-e3-e4", ConfigId::P4); }, "l-e3-e4+1/3c+2/3e3");
    s.eq(m, "P4 pullback of e4", [&] { return fp("e4", ConfigId::P4); }, "e4+1/3c+2/3e3");
    s.eq(m, "P3 pullback of l4", [&] { return fp("l-e4", ConfigId::P3); }, "l-e4+1/2c");
    s.eq(m, "P3 pullback of l1", [&] { return fp("l-e1-e2-e3", ConfigId::P3); }, "l-e1-e2-e3+2/3e1+1/3e2");
    s.eq(m, "P5 pullback of l2", [&] { return fp("l-e2-e3-e4", ConfigId::P5); }, "l-e2-e3-e4+1/4c+3/4e2+1/2e3");
    struct Q {
        const char *a, *b;
        ConfigId id;
        const char* want;
    };
    for (const auto& q : {Q{"e1", "e1", ConfigId::P4, "-1/3"}, Q{"l-e3-e4", "e1", ConfigId::P4, "1/3"},
                          Q{"e2", "e1", ConfigId::P4, "2/3"}, Q{"l-e4", "l-e4", ConfigId::P3, "1/2"},
                          Q{"l-e1-e2-e3", "l-e1-e2-e3", ConfigId::P3, "2/3"}, Q{"e3", "e3", ConfigId::P3, "1/6"},
                          Q{"l-e2-e3-e4", "l-e2-e3-e4", ConfigId::P5, "3/4"}, Q{"e4", "e4", ConfigId::P5, "0"},
                          Q{"e4", "e1", ConfigId::P5, "1/2"}, Q{"l-e1-e2-e3-e4", "l-e1-e2-e3-e4", ConfigId::P6, "4/5"}})
        s.eq(m, config_name(q.id) + " Sigma-intersection " + q.a + " . " + q.b, [q] { return sigma_sq(q.a, q.b, q.id); }, q.want);
    const std::pair<ConfigId, const char*> types[] = {{ConfigId::P1, "{A1}"}, {ConfigId::P2, "{A1,A1}"},
                                                      {ConfigId::P3, "{A1,A2}"}, {ConfigId::P4, "{A2}"},
                                                      {ConfigId::P5, "{A3}"}, {ConfigId::P6, "{A4}"}};
    for (const auto& [id, want] : types)
        s.eq(m, "singularities of " + config_name(id), [id = id] { return join(singularity_types(cfg(id))); }, want);
}

void symmetry_checks(Suite& s) {
    const std::string m = "symmetry";
    auto std_fmt = [](const DivisorClass& d) { return format_class(d, Basis::Standard, cfg(ConfigId::General)); };
    s.eq(m, "(34) swaps e3 and e4", [&] { return std_fmt(transposition(3, 4).apply(cls("l-2e3-5e4"))); }, "l-5e3-2e4");
    s.eq(m, "quadratic transformation at 1,2,3 sends l", [&] { return std_fmt(cremona_automorphism({1, 2, 3}).apply(line_class())); },
         "2l-e1-e2-e3");
    s.eq(m, "quadratic transformation at 1,2,3 sends the conic class",
         [&] { return std_fmt(cremona_automorphism({1, 2, 3}).apply(cls("2l-e1-e2-e3-e4"))); }, "l-e4");
    s.eq(m, "automorphism group order", [] { return std::to_string(generate_group().size()); }, "120");
    s.add(m, "transitivity triple on lines", [](std::string& d) {
        auto r = verify_fact_3_5();
        d = std::to_string(r.transitive_on_lines) + std::to_string(r.stabilizer_transitive_on_disjoint) +
            std::to_string(r.transitive_on_disjoint_pairs);
        return r.transitive_on_lines && r.stabilizer_transitive_on_disjoint && r.transitive_on_disjoint_pairs;
    });
    s.eq(m, "second family D3 under the quadratic transformation",
         [&] { return std_fmt(transport_cover_data(second_bidouble_data(), cremona_automorphism({1, 2, 3})).total(2)); },
         "3l-e1+e2-e3-3e4");
    s.add(m, "second family transported onto the first", [&](std::string& d) {
        auto t = transport_cover_data(transport_cover_data(second_bidouble_data(), cremona_automorphism({1, 2, 3})),
                                      transposition(3, 4));
        std::set<std::string> got, want{"3l-3e1-e2+e3-e4", "3l+e1-3e2-e3-e4", "3l-e1+e2-3e3-e4"};
        for (int i = 0; i < 3; ++i) got.insert(std_fmt(t.total(i)));
        d = "same family: " + std::to_string(same_family(t, burniat_data()));
        return got == want && same_family(t, burniat_data());
    });
}

void cover_checks(Suite& s) {
    const std::string m = "covers";
    s.add(m, "albanese gate (14, 2) fails", [](std::string&) { return !albanese_gate(14, 2); });
    s.add(m, "albanese gate (12, 2) fails", [](std::string&) { return !albanese_gate(12, 2); });
    s.add(m, "first bidouble family: (0, 0, 5, bicanonical)", [](std::string&) {
        auto i = bidouble_invariants(burniat_data());
        return i.pg == 0 && i.q == 0 && i.k_sq == 5 && i.bicanonical_is_cover;
    });
    s.add(m, "second bidouble family: (0, 0, 5, bicanonical)", [](std::string&) {
        auto i = bidouble_invariants(second_bidouble_data());
        return i.pg == 0 && i.q == 0 && i.k_sq == 5 && i.bicanonical_is_cover;
    });
    s.add(m, "ramification check (-2, -2) fails", [](std::string&) { return !ramification_check(-2, -2); });
    s.add(m, "ramification check (-4/3, -4/3) fails",
          [](std::string&) { return !ramification_check(Rational(-4, 3), Rational(-4, 3)); });
    s.add(m, "A1 ramification numbers from lattice data", [](std::string& d) {
        auto a = ardp_numbers({{Rational(2), {cls("l-e1"), ConfigId::P1}}}, {exceptional(1), ConfigId::P1});
        d = to_string(a.residual_dot_pullback) + " vs " + to_string(a.pullback_sq);
        return a.residual_dot_pullback == -2 && a.pullback_sq == -2;
    });
    s.add(m, "A2 ramification numbers from lattice data", [](std::string& d) {
        auto a = ardp_numbers({{Rational(3, 2), {cls("l-e1"), ConfigId::P4}}, {Rational(1, 2), {exceptional(2), ConfigId::P4}}},
                              {exceptional(1), ConfigId::P4});
        d = to_string(a.residual_dot_pullback) + " vs " + to_string(a.pullback_sq);
        return a.residual_dot_pullback == Rational(-4, 3) && a.pullback_sq == Rational(-4, 3);
    });
    s.add(m, "numerology (1, 5) -> (7, 5, 2)", [](std::string&) {
        auto n = surface_numerology(1, 5);
        return n.euler == 7 && n.h2 == 5 && n.max_disjoint_minus4 == 2;
    });
    for (const auto& f : bundled_scenarios()) {
        s.add(m, "scenario " + f, [&f](std::string& d) {
            auto rep = evaluate_scenario(load_scenario(data_path(f)));
            for (const auto& x : rep.mismatches) d += (d.empty() ? "" : "; ") + x;
            return rep.mismatches.empty() && !rep.result.empty();
        });
    }
}

void casework_checks(Suite& s) {
    const std::string m = "casework";
    s.add(m, "p4 table: 12 rows equal to the printed table", [](std::string& d) {
        auto rows = enumerate_table_p4();
        auto printed = printed_table(TableCase::P4);
        d = std::to_string(rows.size()) + " rows";
        return rows.size() == 12 && std::set<SolutionRow>(rows.begin(), rows.end()) == std::set<SolutionRow>(printed.begin(), printed.end()) &&
               contains_row(rows, {{2, 1}, 2, 2, -2, 2}) && contains_row(rows, {{4, 3}, 0, 0, -6, 10});
    });
    s.add(m, "p5 table: reference rows present, L^2 = 3 row absent", [](std::string&) {
        auto rows = enumerate_table_p5();
        return contains_row(rows, {{1, 1, 1}, 2, 4, -6, 2}) && contains_row(rows, {{4, 4, 3}, 0, 0, -6, 10}) &&
               !contains_row(rows, {{3, 2, 1}, 3, 0, -4, 8});
    });
    s.add(m, "p6 table: reference rows present", [](std::string&) {
        auto rows = enumerate_table_p6();
        return contains_row(rows, {{1, 2, 2, 1}, 2, 3, -4, 2}) && contains_row(rows, {{1, 1, 1, 1}, 2, 4, -6, 2});
    });
    for (auto c : {TableCase::P5, TableCase::P6})
        s.add(m, table_case_name(c) + " diff names a reason for every mismatch", [c](std::string& d) {
            auto diff = diff_tables(c, enumerate_table(c), printed_table(c));
            d = std::to_string(diff.matched.size()) + " matched";
            for (const auto& e : diff.only_in_printed)
                if (e.notes.empty()) return false;
            for (const auto& e : diff.only_in_enumerator)
                if (e.notes.empty()) return false;
            return true;
        });
    s.eq(m, "pullback square -4/3 over two curves of index 3",
         [] { return join(preimage_configuration_search(2, Rational(-4, 3), 3)); }, "{A2}");
    s.eq(m, "two strict transforms over an index 4 point", [] {
        PreimageQuery q;
        q.max_curves = 3;
        q.cartier_index = 4;
        q.targets = {{Rational(-1)}, {Rational(0)}};
        q.cross = {{Rational(-1), Rational(2)}, {Rational(2), Rational(0)}};
        return join(feasible_patterns(q));
    }, "{2A1,A3}");
    s.eq(m, "pullback square 16/5 over four curves of index 5",
         [] { return join(preimage_configuration_search(4, Rational(16, 5), 5)); }, "{A4}");
    s.eq(m, "-K into two nef parts",
         [] {
             const auto& g = cfg(ConfigId::General);
             std::vector<std::string> out;
             for (const auto& v : decompose_class(-canonical_class(), nef_effective_classes(g, 1, 4), 2, g)) {
                 std::vector<std::string> parts;
                 for (const auto& p : v) parts.push_back(format_class(p, Basis::Standard, g));
                 std::sort(parts.begin(), parts.end());
                 out.push_back(parts[0] + "+" + parts[1]);
             }
             std::sort(out.begin(), out.end());
             return join(out);
         },
         "{2l-e1-e2-e3+l-e4,2l-e1-e2-e3-e4+l,2l-e1-e2-e4+l-e3,2l-e1-e3-e4+l-e2,2l-e2-e3-e4+l-e1}");
    s.eq(m, "l-e4 into two lines",
         [] { return std::to_string(decompose_class(cls("l-e4"), minus_one_classes(), 2, cfg(ConfigId::General)).size()); }, "3");
}

}  // namespace

std::vector<GoldenCheck> run_golden_suite() {
    Suite s;
    lattice_checks(s);
    curve_checks(s);
    cohomology_checks(s);
    contraction_checks(s);
    symmetry_checks(s);
    cover_checks(s);
    casework_checks(s);
    return s.checks;
}

}  // namespace dp5
