#pragma once

#include "dp5/arith.hpp"
#include "dp5/picard_lattice.hpp"

#include <compare>
#include <string>
#include <vector>

namespace dp5 {

enum class TableCase { P4, P5, P6 };

TableCase parse_table_case(const std::string& s);
std::string table_case_name(TableCase c);

/// One row of a solution table: Z = sum z_i theta_i and the intersection numbers of L and E.
struct SolutionRow {
    std::vector<long> z;
    long l_sq = 0;
    long l_dot_e = 0;
    long e_sq = 0;
    long e_dot_z = 0;

    auto operator<=>(const SolutionRow&) const = default;
    bool operator==(const SolutionRow&) const = default;
};

std::string format_row(const SolutionRow& r);

/**
 * The Diophantine system behind one table.
 * The generator and violated() are separate code paths on purpose.
 */
struct ConstraintSystem {
    TableCase which;
    int chain_length;
    /// upper bound on the smallest z coefficient, 0 for none
    long min_coeff_cap;
    /// strict upper bound on L.E, 0 for none
    long l_dot_e_cap;
    bool require_lz_positive;

    static ConstraintSystem of(TableCase c);

    /// Names of every constraint the row fails; empty iff the row is a solution.
    std::vector<std::string> violated(const SolutionRow& r) const;
    bool admits(const SolutionRow& r) const { return violated(r).empty(); }

    /// Builds a row with E.Z derived, throwing std::domain_error unless admitted.
    SolutionRow make_row(std::vector<long> z, long l_sq, long l_dot_e, long e_sq) const;

    std::vector<std::string> column_names() const;
};

/// All rows with z coefficients in [1, bound], sorted lexicographically.
std::vector<SolutionRow> enumerate_table(TableCase c, long bound = 16);
std::vector<SolutionRow> enumerate_table_p4(long bound = 16);
std::vector<SolutionRow> enumerate_table_p5(long bound = 16);
std::vector<SolutionRow> enumerate_table_p6(long bound = 16);

/// Reads a printed table in CSV form; header line required.
std::vector<SolutionRow> load_table_csv(TableCase c, const std::string& path);
std::vector<SolutionRow> parse_table_csv(TableCase c, const std::string& text);
std::string table_to_csv(TableCase c, const std::vector<SolutionRow>& rows);

/// Printed table shipped in the data directory.
std::vector<SolutionRow> printed_table(TableCase c);

struct DiffEntry {
    SolutionRow row;
    std::vector<std::string> notes;
};

struct TableDiff {
    std::vector<SolutionRow> matched;
    std::vector<DiffEntry> only_in_printed;
    std::vector<DiffEntry> only_in_enumerator;
};

TableDiff diff_tables(TableCase c, const std::vector<SolutionRow>& enumerated, const std::vector<SolutionRow>& printed);
std::string format_diff(const TableDiff& d);

/// Strict transform E of a curve through the point, with (phi^*e)^2 = self_sq.
struct PreimageTarget {
    Rational self_sq;
};

struct PreimageQuery {
    int max_curves = 0;
    std::vector<PreimageTarget> targets;
    /// cross[a][b] = (phi^*e_a).(phi^*e_b) for a != b; may be empty for one target
    std::vector<std::vector<Rational>> cross;
    /// every pullback coefficient must have denominator dividing this
    long cartier_index = 1;
    long k_dot_e = 2;
    long e_sq_min = -6;
};

struct PreimageSolution {
    /// 0/1 incidence matrix of the (-2)-curves
    std::vector<std::vector<int>> adjacency;
    std::string pattern;
    /// per target: E.theta_i, pullback coefficients, E^2
    std::vector<std::vector<long>> e_dot_theta;
    std::vector<std::vector<Rational>> coeffs;
    std::vector<Integer> e_sq;
};

/// Negative definite 0/1 incidence graphs on n vertices, one per isomorphism class.
std::vector<std::vector<std::vector<int>>> negative_definite_graphs(int n);

/// ADE pattern label of a graph, e.g. "A3" or "2A1"; "0" for the empty graph.
std::string graph_pattern(const std::vector<std::vector<int>>& adj);

/// Every integral solution of the query, in graph then lexicographic order.
std::vector<PreimageSolution> preimage_search(const PreimageQuery& q);

/// Sorted distinct patterns admitting at least one solution.
std::vector<std::string> feasible_patterns(const PreimageQuery& q);

/// Single target with K.E = 2 and E^2 >= -6.
std::vector<std::string> preimage_configuration_search(int chain_bound, const Rational& target_sq,
                                                       long coefficient_denominator_bound);

/// Multisets (sorted) of parts, at most max_parts of them, summing to target.
std::vector<std::vector<DivisorClass>> decompose_class(const DivisorClass& target, std::vector<DivisorClass> parts,
                                                       int max_parts, const SurfaceConfiguration& cfg);

/// Effective classes pairing non-negatively with all negative curves, with -K.d in [lo, hi].
std::vector<DivisorClass> nef_effective_classes(const SurfaceConfiguration& cfg, long lo, long hi);

}  // namespace dp5
