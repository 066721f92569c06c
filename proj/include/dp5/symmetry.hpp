#pragma once

#include "dp5/covers.hpp"
#include "dp5/picard_lattice.hpp"

#include <array>
#include <set>
#include <vector>

namespace dp5 {

/// Integer 5x5 matrix acting on standard-basis coefficient columns.
struct LatticeAutomorphism {
    std::array<std::array<Integer, 5>, 5> m{};

    static LatticeAutomorphism identity();
    DivisorClass apply(const DivisorClass& d) const;
    QDivisorClass apply(const QDivisorClass& d) const;
    /// (a * b)(x) = a(b(x)).
    friend LatticeAutomorphism operator*(const LatticeAutomorphism& a, const LatticeAutomorphism& b);
    friend bool operator==(const LatticeAutomorphism& a, const LatticeAutomorphism& b) { return a.m == b.m; }
    friend bool operator<(const LatticeAutomorphism& a, const LatticeAutomorphism& b) { return a.m < b.m; }

    bool preserves_form() const;
    bool fixes_canonical() const;
};

/// s[i-1] = s(i); sends e_i to e_{s(i)} and fixes L.
LatticeAutomorphism perm_automorphism(const std::array<int, 4>& s);
LatticeAutomorphism transposition(int i, int j);
/// Quadratic transformation centred at the three points of base.
LatticeAutomorphism cremona_automorphism(const std::vector<int>& base);

std::vector<LatticeAutomorphism> generate_group();

struct Fact35Report {
    bool transitive_on_lines;
    bool stabilizer_transitive_on_disjoint;
    bool transitive_on_disjoint_pairs;
};

Fact35Report verify_fact_3_5();

/// Orbits of a group on the 10 lines, each as a sorted class list.
std::vector<std::vector<DivisorClass>> line_orbits(const std::vector<LatticeAutomorphism>& group);

BidoubleData transport_cover_data(const BidoubleData& data, const LatticeAutomorphism& g);

}  // namespace dp5
