#include "dp5/casework.hpp"

#include "dp5/cohomology.hpp"
#include "dp5/contraction.hpp"
#include "dp5/curve_geometry.hpp"
#include "dp5/linalg.hpp"
#include "dp5/parse_error.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace dp5 {

TableCase parse_table_case(const std::string& s) {
    std::string t;
    for (char ch : s) t += static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
    if (t == "p4") return TableCase::P4;
    if (t == "p5") return TableCase::P5;
    if (t == "p6") return TableCase::P6;
    throw std::invalid_argument("unknown table case: " + s);
}

std::string table_case_name(TableCase c) {
    switch (c) {
        case TableCase::P4: return "p4";
        case TableCase::P5: return "p5";
        case TableCase::P6: return "p6";
    }
    return "?";
}

std::string format_row(const SolutionRow& r) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < r.z.size(); ++i) os << (i ? "," : "") << r.z[i];
    os << " | " << r.l_sq << "," << r.l_dot_e << "," << r.e_sq << "," << r.e_dot_z << ")";
    return os.str();
}

ConstraintSystem ConstraintSystem::of(TableCase c) {
    switch (c) {
        case TableCase::P4: return {c, 2, 8, 0, true};
        case TableCase::P5: return {c, 3, 10, 5, false};
        case TableCase::P6: return {c, 4, 0, 0, false};
    }
    throw std::invalid_argument("bad table case");
}

std::vector<std::string> ConstraintSystem::column_names() const {
    static const char* letters[] = {"a", "b", "c", "d"};
    std::vector<std::string> out(letters, letters + chain_length);
    for (const char* s : {"L_sq", "L_dot_E", "E_sq", "E_dot_Z"}) out.emplace_back(s);
    return out;
}

std::vector<std::string> ConstraintSystem::violated(const SolutionRow& r) const {
    std::vector<std::string> bad;
    if (static_cast<int>(r.z.size()) != chain_length) {
        bad.push_back("number of z coefficients = " + std::to_string(chain_length));
        return bad;
    }
    const auto& z = r.z;
    const long L2 = r.l_sq, LE = r.l_dot_e, E2 = r.e_sq;
    if (std::any_of(z.begin(), z.end(), [](long v) { return v <= 0; })) bad.push_back("z coefficients positive");
    if (L2 != 0 && L2 != 2) bad.push_back("L^2 in {0,2}");
    if (E2 != -2 && E2 != -4 && E2 != -6) bad.push_back("E^2 in {-2,-4,-6}");
    if (LE < 0) bad.push_back("L.E >= 0");
    if (l_dot_e_cap > 0 && LE >= l_dot_e_cap) bad.push_back("L.E < " + std::to_string(l_dot_e_cap));
    if (require_lz_positive && 8 - 2 * L2 - LE <= 0) bad.push_back("L.Z = 8 - 2L^2 - L.E > 0");
    if (4 - E2 - 2 * LE <= 0) bad.push_back("E.Z = 4 - E^2 - 2L.E > 0");
    if (r.e_dot_z != 4 - E2 - 2 * LE) bad.push_back("E.Z column = 4 - E^2 - 2L.E");

    const long rhs2 = 20 - 4 * L2 - 4 * LE - E2;  // twice the right-hand side
    long lhs = 0;
    std::string form;
    switch (which) {
        case TableCase::P4:
            lhs = z[0] * z[0] + z[1] * z[1] - z[0] * z[1];
            form = "a^2 + b^2 - ab";
            break;
        case TableCase::P5:
            lhs = z[0] * z[0] + z[1] * z[1] + z[2] * z[2] - z[0] * z[1] - z[1] * z[2];
            form = "a^2 + b^2 + c^2 - ab - bc";
            break;
        case TableCase::P6:
            lhs = z[0] * z[0] + z[1] * z[1] + z[2] * z[2] + z[3] * z[3] - z[0] * z[1] - z[1] * z[2] - z[2] * z[3];
            form = "a^2 + b^2 + c^2 + d^2 - ab - bc - cd";
            break;
    }
    if (2 * lhs != rhs2) bad.push_back(form + " = 10 - 2L^2 - 2L.E - E^2/2");

    if (min_coeff_cap > 0 && *std::min_element(z.begin(), z.end()) > min_coeff_cap)
        bad.push_back(std::string(which == TableCase::P4 ? "min{a,b}" : "min{a,b,c}") +
                      " <= " + std::to_string(min_coeff_cap));
    switch (which) {
        case TableCase::P4:
            if (!(z[1] <= z[0] && z[0] <= 2 * z[1])) bad.push_back("b <= a <= 2b");
            break;
        case TableCase::P5:
            if (z[0] < z[2]) bad.push_back("a >= c");
            if (2 * z[0] < z[1]) bad.push_back("2a >= b");
            if (2 * z[1] < z[0] + z[2]) bad.push_back("2b >= a + c");
            if (2 * z[2] < z[1]) bad.push_back("2c >= b");
            break;
        case TableCase::P6:
            if (z[0] < z[3]) bad.push_back("a >= d");
            if (2 * z[0] < z[1]) bad.push_back("2a >= b");
            if (2 * z[1] < z[0] + z[2]) bad.push_back("2b >= a + c");
            if (2 * z[2] < z[1] + z[3]) bad.push_back("2c >= b + d");
            if (2 * z[3] < z[2]) bad.push_back("2d >= c");
            break;
    }
    return bad;
}

SolutionRow ConstraintSystem::make_row(std::vector<long> z, long l_sq, long l_dot_e, long e_sq) const {
    SolutionRow r{std::move(z), l_sq, l_dot_e, e_sq, 4 - e_sq - 2 * l_dot_e};
    auto bad = violated(r);
    if (!bad.empty()) throw std::domain_error("row " + format_row(r) + " violates " + bad.front());
    return r;
}

std::vector<SolutionRow> enumerate_table(TableCase c, long bound) {
    if (bound < 1) throw std::invalid_argument("bound must be positive");
    const auto sys = ConstraintSystem::of(c);
    const int n = sys.chain_length;
    std::vector<SolutionRow> out;
    std::vector<long> z(n, 1);
    for (;;) {
        // Zθ_i <= 0 for the A_n chain, i.e. the Cartan matrix applied to z is non-negative
        bool chain_ok = true;
        long q2 = 0;  // z^T C z
        for (int i = 0; i < n; ++i) {
            long ci = 2 * z[i] - (i > 0 ? z[i - 1] : 0) - (i + 1 < n ? z[i + 1] : 0);
            chain_ok = chain_ok && ci >= 0;
            q2 += z[i] * ci;
        }
        bool tie_ok = z.front() >= z.back();
        bool min_ok = sys.min_coeff_cap == 0 || *std::min_element(z.begin(), z.end()) <= sys.min_coeff_cap;
        if (chain_ok && tie_ok && min_ok) {
            for (long l_sq : {0L, 2L})
                for (long e_sq : {-2L, -4L, -6L})
                    for (long le = 0; 4 - e_sq - 2 * le > 0; ++le) {
                        if (sys.l_dot_e_cap > 0 && le >= sys.l_dot_e_cap) continue;
                        if (sys.require_lz_positive && 8 - 2 * l_sq - le <= 0) continue;
                        // z^T C z / 2 = 10 - 2L^2 - 2LE - E^2/2
                        if (q2 != 20 - 4 * l_sq - 4 * le - e_sq) continue;
                        out.push_back(sys.make_row(z, l_sq, le, e_sq));
                    }
        }
        int i = n - 1;
        while (i >= 0 && z[i] == bound) z[i--] = 1;
        if (i < 0) break;
        ++z[i];
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<SolutionRow> enumerate_table_p4(long bound) { return enumerate_table(TableCase::P4, bound); }
std::vector<SolutionRow> enumerate_table_p5(long bound) { return enumerate_table(TableCase::P5, bound); }
std::vector<SolutionRow> enumerate_table_p6(long bound) { return enumerate_table(TableCase::P6, bound); }

namespace {

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> out;
    std::string cell;
    std::istringstream is(line);
    while (std::getline(is, cell, ',')) out.push_back(trim(cell));
    if (!line.empty() && line.back() == ',') out.emplace_back();
    return out;
}

long parse_cell(const std::string& s, int line, const std::string& field) {
    try {
        std::size_t used = 0;
        long v = std::stol(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw ParseError(line, field, "expected an integer, got '" + s + "'");
    }
}

}  // namespace

std::vector<SolutionRow> parse_table_csv(TableCase c, const std::string& text) {
    const auto sys = ConstraintSystem::of(c);
    const auto cols = sys.column_names();
    std::istringstream is(text);
    std::string line;
    int lineno = 0;
    bool header = false;
    std::vector<SolutionRow> rows;
    while (std::getline(is, line)) {
        ++lineno;
        if (trim(line).empty()) continue;
        auto cells = split_csv(trim(line));
        if (!header) {
            for (std::size_t i = 0; i < cols.size(); ++i)
                if (i >= cells.size() || cells[i] != cols[i])
                    throw ParseError(lineno, i < cols.size() ? cols[i] : "", "unexpected header");
            if (cells.size() != cols.size()) throw ParseError(lineno, cells.back(), "unexpected header column");
            header = true;
            continue;
        }
        if (cells.size() != cols.size())
            throw ParseError(lineno, cells.size() < cols.size() ? cols[cells.size()] : cols.back(),
                             "expected " + std::to_string(cols.size()) + " fields");
        SolutionRow r;
        const int n = sys.chain_length;
        for (int i = 0; i < n; ++i) r.z.push_back(parse_cell(cells[i], lineno, cols[i]));
        r.l_sq = parse_cell(cells[n], lineno, cols[n]);
        r.l_dot_e = parse_cell(cells[n + 1], lineno, cols[n + 1]);
        r.e_sq = parse_cell(cells[n + 2], lineno, cols[n + 2]);
        r.e_dot_z = parse_cell(cells[n + 3], lineno, cols[n + 3]);
        rows.push_back(std::move(r));
    }
    if (!header) throw ParseError(lineno, "", "missing header");
    return rows;
}

std::vector<SolutionRow> load_table_csv(TableCase c, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_table_csv(c, ss.str());
}

std::string table_to_csv(TableCase c, const std::vector<SolutionRow>& rows) {
    const auto cols = ConstraintSystem::of(c).column_names();
    std::ostringstream os;
    for (std::size_t i = 0; i < cols.size(); ++i) os << (i ? "," : "") << cols[i];
    os << "\n";
    for (const auto& r : rows) {
        for (long v : r.z) os << v << ",";
        os << r.l_sq << "," << r.l_dot_e << "," << r.e_sq << "," << r.e_dot_z << "\n";
    }
    return os.str();
}

std::vector<SolutionRow> printed_table(TableCase c) {
    return load_table_csv(c, std::string(DP5_DATA_DIR) + "/tables/" + table_case_name(c) + ".csv");
}

TableDiff diff_tables(TableCase c, const std::vector<SolutionRow>& enumerated, const std::vector<SolutionRow>& printed) {
    const auto sys = ConstraintSystem::of(c);
    TableDiff d;
    std::multiset<SolutionRow> pool(enumerated.begin(), enumerated.end());
    std::set<SolutionRow> seen_printed;
    auto same_data = [](const SolutionRow& a, const SolutionRow& b) {
        return a.z == b.z && a.l_sq == b.l_sq && a.l_dot_e == b.l_dot_e && a.e_sq == b.e_sq;
    };
    for (const auto& r : printed) {
        bool dup = !seen_printed.insert(r).second;
        auto it = pool.find(r);
        if (it != pool.end()) {
            pool.erase(it);
            d.matched.push_back(r);
            continue;
        }
        DiffEntry e{r, {}};
        if (dup) e.notes.push_back("duplicate of an earlier printed row");
        auto bad = sys.violated(r);
        for (auto& b : bad) e.notes.push_back("violates " + b);
        if (!dup && bad.empty()) e.notes.push_back("satisfies all constraints");
        for (const auto& q : enumerated)
            if (same_data(q, r) && !(q == r)) e.notes.push_back("enumerator has " + format_row(q));
        d.only_in_printed.push_back(std::move(e));
    }
    for (const auto& r : pool) {
        DiffEntry e{r, {"satisfies all constraints"}};
        SolutionRow mirror = r;
        std::reverse(mirror.z.begin(), mirror.z.end());
        if (!(mirror == r) && seen_printed.count(mirror)) e.notes.push_back("mirror of printed row " + format_row(mirror));
        for (const auto& p : printed)
            if (same_data(p, r) && !(p == r)) e.notes.push_back("printed as " + format_row(p));
        d.only_in_enumerator.push_back(std::move(e));
    }
    std::sort(d.matched.begin(), d.matched.end());
    return d;
}

std::string format_diff(const TableDiff& d) {
    std::ostringstream os;
    os << "matched: " << d.matched.size() << "\n";
    os << "only in printed: " << d.only_in_printed.size() << "\n";
    for (const auto& e : d.only_in_printed) {
        os << "  " << format_row(e.row);
        for (const auto& n : e.notes) os << "; " << n;
        os << "\n";
    }
    os << "only in enumerator: " << d.only_in_enumerator.size() << "\n";
    for (const auto& e : d.only_in_enumerator) {
        os << "  " << format_row(e.row);
        for (const auto& n : e.notes) os << "; " << n;
        os << "\n";
    }
    return os.str();
}

namespace {

using Graph = std::vector<std::vector<int>>;

RMatrix cartan(const Graph& g) {
    const auto n = g.size();
    RMatrix m(n, RVector(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m[i][j] = i == j ? Rational(2) : Rational(-g[i][j]);
    return m;
}

bool positive_definite(const RMatrix& m) {
    for (std::size_t k = 1; k <= m.size(); ++k) {
        RMatrix lead(k, RVector(k));
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) lead[i][j] = m[i][j];
        if (determinant(lead) <= 0) return false;
    }
    return true;
}

std::vector<int> canonical_code(const Graph& g) {
    const int n = static_cast<int>(g.size());
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::vector<int> best;
    do {
        std::vector<int> code;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) code.push_back(g[p[i]][p[j]]);
        if (best.empty() || code < best) best = code;
    } while (std::next_permutation(p.begin(), p.end()));
    return best;
}

}  // namespace

std::vector<Graph> negative_definite_graphs(int n) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
    std::set<std::vector<int>> seen;
    std::vector<Graph> out;
    for (unsigned long mask = 0; mask < (1UL << pairs.size()); ++mask) {
        Graph g(n, std::vector<int>(n, 0));
        for (std::size_t b = 0; b < pairs.size(); ++b)
            if (mask >> b & 1UL) g[pairs[b].first][pairs[b].second] = g[pairs[b].second][pairs[b].first] = 1;
        if (!positive_definite(cartan(g))) continue;
        if (!seen.insert(canonical_code(g)).second) continue;
        out.push_back(std::move(g));
    }
    return out;
}

std::string graph_pattern(const Graph& adj) {
    auto labels = ade_components(adj);
    if (labels.empty()) return "0";
    std::map<std::string, int> count;
    for (const auto& l : labels) ++count[l];
    std::string out;
    for (const auto& [l, k] : count) {
        if (!out.empty()) out += "+";
        out += (k > 1 ? std::to_string(k) : "") + l;
    }
    return out;
}

namespace {

struct TargetSolution {
    std::vector<long> k;
    RVector x;
    Integer e_sq;
};

std::vector<TargetSolution> target_solutions(const RMatrix& inv, long max_degree, const Rational& t,
                                             const PreimageQuery& q) {
    const std::size_t n = inv.size();
    std::vector<TargetSolution> out;
    // k^T C^{-1} k >= |k|^2 / (2 + max degree), and k^T C^{-1} k = T - E^2 <= T - e_sq_min
    Rational budget = Rational(2 + max_degree) * (t - q.e_sq_min);
    if (budget < 0) return out;
    const long kmax = to_long(floor(budget));
    std::vector<long> k(n, 0);
    std::function<void(std::size_t, long)> rec = [&](std::size_t i, long used) {
        if (i == n) {
            RVector x(n);
            for (std::size_t a = 0; a < n; ++a)
                for (std::size_t b = 0; b < n; ++b) x[a] += inv[a][b] * k[b];
            Rational kx = 0;
            for (std::size_t a = 0; a < n; ++a) {
                if (x[a] <= 0 || q.cartier_index % to_long(denom(x[a])) != 0) return;
                kx += x[a] * k[a];
            }
            Rational e_sq = t - kx;
            if (!is_integral(e_sq)) return;
            Integer e = numer(e_sq);
            if (e < q.e_sq_min || (e - q.k_dot_e) % 2 != 0) return;
            out.push_back({k, x, e});
            return;
        }
        for (long v = 0; used + v * v <= kmax; ++v) {
            k[i] = v;
            rec(i + 1, used + v * v);
        }
        k[i] = 0;
    };
    rec(0, 0);
    return out;
}

}  // namespace

std::vector<PreimageSolution> preimage_search(const PreimageQuery& q) {
    if (q.targets.empty()) throw std::invalid_argument("preimage search needs a target");
    if (q.cartier_index < 1) throw std::invalid_argument("Cartier index must be positive");
    const std::size_t m = q.targets.size();
    if (m > 1 && q.cross.size() != m) throw std::invalid_argument("cross matrix must be targets x targets");
    std::vector<PreimageSolution> out;
    for (int n = 0; n <= q.max_curves; ++n) {
        for (const auto& g : negative_definite_graphs(n)) {
            RMatrix inv = n ? inverse(cartan(g)) : RMatrix{};
            long max_degree = 0;
            for (const auto& row : g) max_degree = std::max<long>(max_degree, std::accumulate(row.begin(), row.end(), 0L));
            std::vector<std::vector<TargetSolution>> per(m);
            for (std::size_t a = 0; a < m; ++a) per[a] = target_solutions(inv, max_degree, q.targets[a].self_sq, q);
            const std::string pattern = graph_pattern(g);
            std::vector<std::size_t> pick(m, 0);
            std::function<void(std::size_t)> rec = [&](std::size_t a) {
                if (a == m) {
                    for (std::size_t i = 0; i < m; ++i)
                        for (std::size_t j = i + 1; j < m; ++j) {
                            // E_i.E_j = (phi^*e_i).(phi^*e_j) - k_i^T x_j
                            Rational v = q.cross[i][j];
                            for (std::size_t s = 0; s < static_cast<std::size_t>(n); ++s)
                                v -= per[i][pick[i]].k[s] * per[j][pick[j]].x[s];
                            if (!is_integral(v) || v < 0) return;
                        }
                    PreimageSolution sol{g, pattern, {}, {}, {}};
                    for (std::size_t i = 0; i < m; ++i) {
                        sol.e_dot_theta.push_back(per[i][pick[i]].k);
                        sol.coeffs.push_back(per[i][pick[i]].x);
                        sol.e_sq.push_back(per[i][pick[i]].e_sq);
                    }
                    out.push_back(std::move(sol));
                    return;
                }
                for (pick[a] = 0; pick[a] < per[a].size(); ++pick[a]) rec(a + 1);
            };
            rec(0);
        }
    }
    return out;
}

std::vector<std::string> feasible_patterns(const PreimageQuery& q) {
    std::set<std::string> s;
    for (const auto& sol : preimage_search(q)) s.insert(sol.pattern);
    return {s.begin(), s.end()};
}

std::vector<std::string> preimage_configuration_search(int chain_bound, const Rational& target_sq,
                                                       long coefficient_denominator_bound) {
    PreimageQuery q;
    q.max_curves = chain_bound;
    q.targets = {{target_sq}};
    q.cartier_index = coefficient_denominator_bound;
    return feasible_patterns(q);
}

std::vector<std::vector<DivisorClass>> decompose_class(const DivisorClass& target, std::vector<DivisorClass> parts,
                                                       int max_parts, const SurfaceConfiguration& cfg) {
    if (max_parts < 0) throw std::invalid_argument("max_parts must be non-negative");
    std::sort(parts.begin(), parts.end());
    parts.erase(std::unique(parts.begin(), parts.end()), parts.end());
    for (const auto& p : parts) {
        if (p.is_zero()) throw std::invalid_argument("zero class among parts");
        if (!is_effective(p, cfg)) throw std::invalid_argument("part " + format_class(p, Basis::Standard, cfg) + " is not effective");
    }
    std::vector<std::vector<DivisorClass>> out;
    std::vector<DivisorClass> cur;
    std::function<void(std::size_t, const DivisorClass&)> rec = [&](std::size_t from, const DivisorClass& rest) {
        if (rest.is_zero()) out.push_back(cur);
        if (static_cast<int>(cur.size()) == max_parts) return;
        for (std::size_t i = from; i < parts.size(); ++i) {
            cur.push_back(parts[i]);
            rec(i, rest - parts[i]);
            cur.pop_back();
        }
    };
    rec(0, target);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<DivisorClass> nef_effective_classes(const SurfaceConfiguration& cfg, long lo, long hi) {
    // nef d has 0 <= d.l <= -K.d and -d.l <= d.e_i standard coefficient <= 0
    const auto curves = negative_curves(cfg);
    const DivisorClass mk = -canonical_class();
    std::vector<DivisorClass> out;
    for (long a = 0; a <= hi; ++a)
        for (long b1 = -a; b1 <= 0; ++b1)
            for (long b2 = -a; b2 <= 0; ++b2)
                for (long b3 = -a; b3 <= 0; ++b3)
                    for (long b4 = -a; b4 <= 0; ++b4) {
                        auto d = make_class(a, b1, b2, b3, b4);
                        Integer deg = intersect(d, mk);
                        if (deg < lo || deg > hi) continue;
                        bool nef = std::all_of(curves.begin(), curves.end(),
                                               [&](const NegativeCurve& c) { return intersect(d, c.cls) >= 0; });
                        if (nef && is_effective(d, cfg)) out.push_back(d);
                    }
    return out;
}

}  // namespace dp5
