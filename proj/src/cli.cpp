#include "dp5/cli.hpp"

#include "dp5/casework.hpp"
#include "dp5/cohomology.hpp"
#include "dp5/contraction.hpp"
#include "dp5/curve_geometry.hpp"
#include "dp5/golden.hpp"
#include "dp5/serialization.hpp"
#include "dp5/symmetry.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <functional>
#include <iomanip>
#include <sstream>

namespace dp5 {

namespace {

enum class Format { Text, Json, Csv };

struct Common {
    std::string format = "text";
    std::string config = "GENERAL";

    Format fmt() const { return format == "json" ? Format::Json : format == "csv" ? Format::Csv : Format::Text; }
    ConfigId cfg() const { return parse_config(config); }
};

void add_common(CLI::App* app, Common& c) {
    app->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}))->capture_default_str();
    app->add_option("--config", c.config, "GENERAL or P1..P6")
        ->check([](const std::string& s) {
            try {
                parse_config(s);
                return std::string();
            } catch (const std::exception& e) {
                return std::string(e.what());
            }
        })
        ->capture_default_str();
}

/// Thrown for malformed inputs given on the command line.
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

DivisorClass read_class(const std::string& lit, Basis basis, ConfigId id) {
    try {
        return parse_class(lit, basis, configuration(id));
    } catch (const std::exception& e) {
        throw InputError("cannot read class '" + lit + "': " + e.what());
    }
}

std::string csv_cell(const json& v) {
    std::string s = v.is_string() ? v.get<std::string>() : v.dump();
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char ch : s) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
    return q + "\"";
}

void flatten(const json& j, const std::string& prefix, std::vector<std::pair<std::string, json>>& out) {
    if (j.is_object()) {
        for (auto it = j.begin(); it != j.end(); ++it) flatten(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), out);
    } else if (j.is_array() && std::any_of(j.begin(), j.end(), [](const json& x) { return x.is_structured(); })) {
        for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "[" + std::to_string(i) + "]", out);
    } else {
        out.emplace_back(prefix, j);
    }
}

/// key,value rows for documents without a natural table shape
std::string json_to_csv(const json& j) {
    std::vector<std::pair<std::string, json>> rows;
    flatten(j, "", rows);
    std::ostringstream os;
    os << "key,value\n";
    for (const auto& [k, v] : rows) os << csv_cell(k) << "," << csv_cell(v) << "\n";
    return os.str();
}

void emit(std::ostream& out, Format f, const json& j, const std::function<void()>& text) {
    if (f == Format::Json)
        out << j.dump(2) << "\n";
    else if (f == Format::Csv)
        out << json_to_csv(j);
    else
        text();
}

std::string cls_str(const DivisorClass& d, ConfigId id) { return format_class(d, Basis::Curve, configuration(id)); }

json class_list(const std::vector<DivisorClass>& v, ConfigId id) {
    json a = json::array();
    for (const auto& c : v) a.push_back(class_to_json(c, Basis::Curve, id));
    return a;
}

int cmd_curves(const Common& c, std::ostream& out) {
    const ConfigId id = c.cfg();
    const auto& cfg = configuration(id);
    auto curves = negative_curves(cfg);
    auto graph = incidence_graph(cfg);
    auto rulings = ruling_classes(cfg, true);
    auto types = singularity_types(cfg);
    json j{{"config", config_name(id)}, {"singularities", types}};
    json cj = json::array();
    for (const auto& n : curves)
        cj.push_back({{"class", class_to_json(n.cls, Basis::Curve, id)},
                      {"literal", cls_str(n.cls, id)},
                      {"self_intersection", n.kind == CurveKind::MinusOne ? -1 : -2}});
    j["curves"] = cj;
    json g = json::array();
    for (const auto& row : graph) {
        json r = json::array();
        for (const auto& x : row) r.push_back(to_long(x));
        g.push_back(r);
    }
    j["incidence"] = g;
    j["rulings_orthogonal"] = class_list(rulings, id);
    if (c.fmt() == Format::Csv) {
        out << "index,literal,self_intersection\n";
        for (std::size_t i = 0; i < curves.size(); ++i)
            out << i << "," << cls_str(curves[i].cls, id) << "," << (curves[i].kind == CurveKind::MinusOne ? -1 : -2) << "\n";
        return 0;
    }
    emit(out, c.fmt(), j, [&] {
        out << "config " << config_name(id) << "\n";
        for (std::size_t i = 0; i < curves.size(); ++i)
            out << std::setw(3) << i << "  " << std::setw(3) << (curves[i].kind == CurveKind::MinusOne ? -1 : -2) << "  "
                << cls_str(curves[i].cls, id) << "\n";
        out << "incidence\n";
        for (const auto& row : graph) {
            out << "    ";
            for (const auto& x : row) out << std::setw(3) << x;
            out << "\n";
        }
        out << "singularities:";
        for (const auto& t : types) out << " " << t;
        out << (types.empty() ? " none\n" : "\n");
        out << "rulings orthogonal to (-2)-curves:";
        for (const auto& r : rulings) out << " " << cls_str(r, id);
        out << (rulings.empty() ? " none\n" : "\n");
    });
    return 0;
}

int cmd_h0(const Common& c, const std::string& lit, const std::string& basis, std::ostream& out) {
    const ConfigId id = c.cfg();
    auto d = read_class(lit, parse_basis(basis), id);
    auto r = h0_with_trace(d, configuration(id));
    json trace = json::array();
    for (const auto& s : r.trace)
        trace.push_back({{"curve", cls_str(s.curve, id)}, {"multiplicity", to_string(s.multiplicity)}});
    json j{{"class", class_to_json(d, Basis::Curve, id)},
           {"h0", to_string(r.value)},
           {"moving", class_to_json(r.moving, Basis::Curve, id)},
           {"trace", trace}};
    if (c.fmt() == Format::Csv) {
        out << "config,class,h0\n" << config_name(id) << "," << cls_str(d, id) << "," << r.value << "\n";
        return 0;
    }
    emit(out, c.fmt(), j, [&] { out << r.value << "\n"; });
    return 0;
}

int cmd_pullback(const Common& c, const std::string& lit, const std::string& with, const std::string& basis, std::ostream& out) {
    const ConfigId id = c.cfg();
    const Basis b = parse_basis(basis);
    SigmaClass s{read_class(lit, b, id), id};
    auto terms = mumford_pullback_terms(s);
    json coeffs = json::array();
    for (const auto& x : terms.theta_coeffs) coeffs.push_back(to_string(x));
    json j{{"class", class_to_json(s.rep, Basis::Curve, id)},
           {"pullback", class_to_json(terms.cls, Basis::Curve, id)},
           {"theta_coeffs", coeffs},
           {"display", format_pullback(s)},
           {"self_intersection", to_string(sigma_intersect(s, s))}};
    std::string pairing;
    if (!with.empty()) {
        SigmaClass t{read_class(with, b, id), id};
        pairing = to_string(sigma_intersect(s, t));
        j["with"] = class_to_json(t.rep, Basis::Curve, id);
        j["intersection"] = pairing;
    }
    emit(out, c.fmt(), j, [&] {
        out << format_pullback(s) << "\n";
        out << "self-intersection " << to_string(sigma_intersect(s, s)) << "\n";
        if (!with.empty()) out << "intersection with " << with << " " << pairing << "\n";
    });
    return 0;
}

int cmd_orbits(const Common& c, std::ostream& out) {
    auto group = generate_group();
    auto orbits = line_orbits(group);
    auto fact = verify_fact_3_5();
    std::vector<LatticeAutomorphism> perms;
    for (const auto& g : group)
        if (g.apply(line_class()) == line_class()) perms.push_back(g);
    auto perm_orbits = line_orbits(perms);
    auto orbit_json = [](const std::vector<std::vector<DivisorClass>>& o) {
        json a = json::array();
        for (const auto& orb : o) {
            json x = json::array();
            for (const auto& d : orb) x.push_back(format_class(d, Basis::Standard, configuration(ConfigId::General)));
            a.push_back(x);
        }
        return a;
    };
    json j{{"order", group.size()},
           {"line_orbits", orbit_json(orbits)},
           {"permutation_subgroup_order", perms.size()},
           {"permutation_subgroup_orbits", orbit_json(perm_orbits)},
           {"transitive_on_lines", fact.transitive_on_lines},
           {"stabilizer_transitive_on_disjoint", fact.stabilizer_transitive_on_disjoint},
           {"transitive_on_disjoint_pairs", fact.transitive_on_disjoint_pairs}};
    emit(out, c.fmt(), j, [&] {
        out << "group order " << group.size() << "\n";
        out << "orbits on lines: " << orbits.size() << " (sizes";
        for (const auto& o : orbits) out << " " << o.size();
        out << ")\n";
        out << "permutation subgroup order " << perms.size() << ", orbits on lines: " << perm_orbits.size() << "\n";
        out << "transitive on lines: " << std::boolalpha << fact.transitive_on_lines << "\n";
        out << "stabilizer transitive on disjoint lines: " << fact.stabilizer_transitive_on_disjoint << "\n";
        out << "transitive on disjoint pairs: " << fact.transitive_on_disjoint_pairs << "\n";
    });
    return 0;
}

LatticeAutomorphism named_automorphism(const std::string& name) {
    auto digits = [&](std::size_t from) {
        std::vector<int> v;
        for (std::size_t i = from; i < name.size(); ++i) {
            if (name[i] < '1' || name[i] > '4') throw InputError("bad automorphism '" + name + "'");
            v.push_back(name[i] - '0');
        }
        return v;
    };
    if (name == "tau") return cremona_automorphism({1, 2, 3});
    if (name.rfind("cremona:", 0) == 0) {
        auto v = digits(8);
        try {
            return cremona_automorphism(v);
        } catch (const std::invalid_argument& e) {
            throw InputError(e.what());
        }
    }
    if (name.rfind("swap:", 0) == 0) {
        auto v = digits(5);
        if (v.size() != 2 || v[0] == v[1]) throw InputError("bad transposition '" + name + "'");
        return transposition(v[0], v[1]);
    }
    if (name.rfind("perm:", 0) == 0) {
        auto v = digits(5);
        std::array<int, 4> s{};
        if (v.size() != 4) throw InputError("bad permutation '" + name + "'");
        std::copy(v.begin(), v.end(), s.begin());
        auto sorted = v;
        std::sort(sorted.begin(), sorted.end());
        if (sorted != std::vector<int>{1, 2, 3, 4}) throw InputError("bad permutation '" + name + "'");
        return perm_automorphism(s);
    }
    throw InputError("unknown automorphism '" + name + "' (use tau, cremona:ijk, swap:ij, perm:abcd)");
}

int cmd_transport(const Common& c, const std::string& file, const std::vector<std::string>& apply, const std::string& compare,
                  std::ostream& out) {
    auto s = load_scenario(file);
    if (!s.bidouble) throw InputError("transport needs a bidouble scenario");
    BidoubleData b = *s.bidouble;
    for (const auto& name : apply) b = transport_cover_data(b, named_automorphism(name));
    json j = bidouble_to_json(b, s.name);
    json totals = json::array();
    for (int i = 0; i < 3; ++i) totals.push_back(format_class(b.total(i), Basis::Standard, configuration(b.cfg)));
    j["totals"] = totals;
    int code = 0;
    if (!compare.empty()) {
        auto other = load_scenario(compare);
        if (!other.bidouble) throw InputError("comparison scenario is not a bidouble scenario");
        bool same = same_family(b, *other.bidouble);
        j["same_family"] = same;
        code = same ? 0 : 1;
    }
    emit(out, c.fmt(), j, [&] {
        for (int i = 0; i < 3; ++i) {
            out << "D" << i + 1 << " = " << totals[i].get<std::string>() << " :";
            for (const auto& d : b.d[i]) out << " " << format_class(d, Basis::Standard, configuration(b.cfg));
            out << "\n";
        }
        if (j.contains("same_family")) out << "same family: " << std::boolalpha << j["same_family"].get<bool>() << "\n";
    });
    return code;
}

int cmd_cover(const Common& c, const std::string& file, std::ostream& out, std::ostream& err) {
    auto s = load_scenario(file);
    auto rep = evaluate_scenario(s);
    rep.result["mismatches"] = rep.mismatches;
    emit(out, c.fmt(), rep.result, [&] {
        out << s.kind << ": " << s.name << "\n";
        if (rep.result.contains("members")) {
            for (const auto& m : rep.result["members"]) {
                out << "  chi " << m["chi"].get<std::string>() << (m["chi_integral"].get<bool>() ? "" : " (not integral)")
                    << ", K^2 " << m["k_sq"].get<std::string>() << ", pg >= " << m["pg_lower"].get<std::string>();
                if (m.contains("q_lower")) out << ", q >= " << m["q_lower"].get<std::string>();
                if (m.contains("albanese_ok")) out << ", albanese gate " << (m["albanese_ok"].get<bool>() ? "holds" : "fails");
                out << "\n";
            }
        } else {
            for (auto it = rep.result.begin(); it != rep.result.end(); ++it)
                if (it.key() != "kind" && it.key() != "name" && it.key() != "mismatches" && !it.value().is_structured())
                    out << "  " << it.key() << " " << (it.value().is_string() ? it.value().get<std::string>() : it.value().dump()) << "\n";
        }
    });
    for (const auto& m : rep.mismatches) err << "mismatch: " << m << "\n";
    return rep.mismatches.empty() ? 0 : 1;
}

int cmd_tables(const Common& c, const std::string& which, long bound, const std::string& printed_file, bool no_diff,
               std::ostream& out) {
    TableCase tc;
    try {
        tc = parse_table_case(which);
    } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
    }
    auto rows = enumerate_table(tc, bound);
    auto printed = printed_file.empty() ? printed_table(tc) : load_table_csv(tc, printed_file);
    auto d = diff_tables(tc, rows, printed);
    if (c.fmt() == Format::Json) {
        json r = json::array();
        for (const auto& row : rows) r.push_back(row_to_json(row));
        auto entries = [](const std::vector<DiffEntry>& v) {
            json a = json::array();
            for (const auto& e : v) a.push_back({{"row", row_to_json(e.row)}, {"notes", e.notes}});
            return a;
        };
        json j{{"case", table_case_name(tc)}, {"columns", ConstraintSystem::of(tc).column_names()}, {"rows", r}};
        if (!no_diff)
            j["diff"] = {{"matched", d.matched.size()},
                         {"only_in_printed", entries(d.only_in_printed)},
                         {"only_in_enumerator", entries(d.only_in_enumerator)}};
        out << j.dump(2) << "\n";
        return 0;
    }
    out << table_to_csv(tc, rows);
    if (!no_diff) {
        std::istringstream is(format_diff(d));
        std::string line;
        out << "\n";
        while (std::getline(is, line)) out << "# " << line << "\n";
    }
    return 0;
}

int cmd_decompose(const Common& c, const std::string& lit, const std::string& basis, const std::string& parts_sel, int max_parts,
                  std::ostream& out) {
    const ConfigId id = c.cfg();
    const auto& cfg = configuration(id);
    const Basis b = parse_basis(basis);
    auto target = read_class(lit, b, id);
    std::vector<DivisorClass> parts;
    if (parts_sel == "lines") {
        for (const auto& n : minus_one_curves(cfg)) parts.push_back(n.cls);
    } else if (parts_sel == "negative") {
        for (const auto& n : negative_curves(cfg)) parts.push_back(n.cls);
    } else if (parts_sel == "nef") {
        long deg = to_long(intersect(target, -canonical_class()));
        parts = nef_effective_classes(cfg, 1, std::max(1L, deg - 1));
    } else {
        std::istringstream is(parts_sel);
        std::string item;
        while (std::getline(is, item, ',')) parts.push_back(read_class(item, b, id));
    }
    std::vector<std::vector<DivisorClass>> res;
    try {
        res = decompose_class(target, parts, max_parts, cfg);
    } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
    }
    json arr = json::array();
    for (const auto& m : res) arr.push_back(class_list(m, id));
    json j{{"target", class_to_json(target, Basis::Curve, id)}, {"count", res.size()}, {"decompositions", arr}};
    auto line = [&](const std::vector<DivisorClass>& m) {
        std::string s;
        for (const auto& p : m) s += (s.empty() ? "" : " + ") + cls_str(p, id);
        return s.empty() ? std::string("(empty)") : s;
    };
    if (c.fmt() == Format::Csv) {
        out << "index,parts\n";
        for (std::size_t i = 0; i < res.size(); ++i) out << i << "," << csv_cell(line(res[i])) << "\n";
        return 0;
    }
    emit(out, c.fmt(), j, [&] {
        out << res.size() << " decompositions\n";
        for (const auto& m : res) out << "  " << line(m) << "\n";
    });
    return 0;
}

int cmd_verify(const Common& c, std::ostream& out) {
    auto t0 = std::chrono::steady_clock::now();
    auto checks = run_golden_suite();
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::size_t failed = 0;
    json arr = json::array();
    for (const auto& ch : checks) {
        failed += !ch.pass;
        arr.push_back({{"module", ch.module}, {"check", ch.description}, {"pass", ch.pass}, {"detail", ch.detail}});
    }
    json j{{"checks", arr}, {"total", checks.size()}, {"failed", failed}, {"seconds", secs}};
    if (c.fmt() == Format::Csv) {
        out << "module,check,pass,detail\n";
        for (const auto& ch : checks)
            out << csv_cell(ch.module) << "," << csv_cell(ch.description) << "," << (ch.pass ? "true" : "false") << ","
                << csv_cell(ch.detail) << "\n";
    } else {
        emit(out, c.fmt(), j, [&] {
            for (const auto& ch : checks) {
                out << (ch.pass ? "PASS " : "FAIL ") << ch.module << ": " << ch.description;
                if (!ch.pass && !ch.detail.empty()) out << " (" << ch.detail << ")";
                out << "\n";
            }
            out << checks.size() - failed << "/" << checks.size() << " checks passed in " << std::fixed << std::setprecision(2)
                << secs << " s\n";
        });
    }
    return failed == 0 ? 0 : 1;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Lattice computations on quintic del Pezzo surfaces and their degenerations", "dp5"};
    app.require_subcommand(1);
    Common common;

    auto* curves = app.add_subcommand("curves", "Negative curves, incidence matrix and singularities");
    add_common(curves, common);

    std::string cls_lit, basis = "curve", with;
    auto* h0 = app.add_subcommand("h0", "Dimension of the linear system of a class");
    add_common(h0, common);
    h0->add_option("--class", cls_lit, "Class literal such as 2l-e1-e2-e3-e4")->required();
    h0->add_option("--basis", basis, "standard or curve")->check(CLI::IsMember({"standard", "curve"}))->capture_default_str();

    auto* pullback = app.add_subcommand("pullback", "Rational pullback through the contraction of (-2)-curves");
    add_common(pullback, common);
    pullback->add_option("--class", cls_lit, "Representative upstairs")->required();
    pullback->add_option("--with", with, "Second class to intersect with");
    pullback->add_option("--basis", basis, "standard or curve")->check(CLI::IsMember({"standard", "curve"}))->capture_default_str();

    auto* orbits = app.add_subcommand("orbits", "Automorphism group of the lattice and its action on lines");
    add_common(orbits, common);

    std::string scenario, compare;
    std::vector<std::string> apply;
    auto* transport = app.add_subcommand("transport", "Apply lattice automorphisms to bidouble cover data");
    add_common(transport, common);
    transport->add_option("--scenario", scenario, "Bidouble scenario file")->required();
    transport->add_option("--apply", apply, "Automorphisms applied left to right: tau, cremona:ijk, swap:ij, perm:abcd")
        ->required()
        ->delimiter(',');
    transport->add_option("--compare", compare, "Scenario to compare families with");

    auto* cover = app.add_subcommand("cover", "Invariants of a double or bidouble cover scenario");
    add_common(cover, common);
    cover->add_option("--scenario", scenario, "Scenario file")->required();

    std::string table_case, printed;
    long bound = 16;
    bool no_diff = false;
    auto* tables = app.add_subcommand("tables", "Enumerate a solution table and diff it against the printed copy");
    add_common(tables, common);
    tables->add_option("--case", table_case, "p4, p5 or p6")->required();
    tables->add_option("--bound", bound, "Largest coefficient scanned")->check(CLI::Range(1L, 64L))->capture_default_str();
    tables->add_option("--printed", printed, "Printed table CSV (defaults to the bundled copy)");
    tables->add_flag("--no-diff", no_diff, "Skip the diff report");

    std::string parts = "lines";
    int max_parts = 2;
    auto* decompose = app.add_subcommand("decompose", "Write a class as a sum of parts");
    add_common(decompose, common);
    decompose->add_option("--class", cls_lit, "Target class")->required();
    decompose->add_option("--basis", basis, "standard or curve")->check(CLI::IsMember({"standard", "curve"}))->capture_default_str();
    decompose->add_option("--parts", parts, "lines, negative, nef, or a comma-separated list of classes")->capture_default_str();
    decompose->add_option("--max-parts", max_parts, "Largest number of parts")->check(CLI::Range(0, 8))->capture_default_str();

    auto* verify = app.add_subcommand("verify", "Run the golden suite");
    add_common(verify, common);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n" << app.help();
        return 2;
    }

    try {
        if (curves->parsed()) return cmd_curves(common, out);
        if (h0->parsed()) return cmd_h0(common, cls_lit, basis, out);
        if (pullback->parsed()) return cmd_pullback(common, cls_lit, with, basis, out);
        if (orbits->parsed()) return cmd_orbits(common, out);
        if (transport->parsed()) return cmd_transport(common, scenario, apply, compare, out);
        if (cover->parsed()) return cmd_cover(common, scenario, out, err);
        if (tables->parsed()) return cmd_tables(common, table_case, bound, printed, no_diff, out);
        if (decompose->parsed()) return cmd_decompose(common, cls_lit, basis, parts, max_parts, out);
        if (verify->parsed()) return cmd_verify(common, out);
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return 3;
    } catch (const InputError& e) {
        err << "input error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    }
    err << app.help();
    return 2;
}

}  // namespace dp5
