#pragma once

#include "dp5/contraction.hpp"
#include "dp5/picard_lattice.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace dp5 {

struct BoundClass {
    DivisorClass cls;
    ConfigId cfg;
};

/**
 * Numbers of a double cover Y -> S branched on D = 2M.
 * K_S^2 defaults to 5; (K_S + M)^2 is derived unless given.
 */
struct DoubleCoverScenario {
    std::string name;
    Integer chi_base = 1;
    Rational m_dot_k = 0;
    Rational m_sq = 0;
    Rational k_sq = 5;
    std::optional<Rational> k_plus_m_sq;
    std::optional<BoundClass> pg_bound_class;

    Rational kpm_sq() const;

    /// M = D/2 with D.K_S and D^2 given.
    static DoubleCoverScenario from_branch(Integer chi_base, Rational d_dot_k, Rational d_sq);
    /// M = phi^*(m) for a degree-4 map S -> Sigma with 2K_S = phi^*(-K): M.K_S = 2 m.(-K), M^2 = 4 m^2.
    static DoubleCoverScenario from_sigma_class(Integer chi_base, const QDivisorClass& m);
};

struct DoubleCoverInvariants {
    Rational chi;
    Rational k_sq;
    Integer pg_lower;
    bool chi_integral;
    /// pg_lower + 1 - chi, when chi is integral.
    std::optional<Integer> q_lower;
    /// albanese_gate(K_Y^2, q_lower) when both are integral and q_lower >= 0.
    std::optional<bool> albanese_ok;
};

DoubleCoverInvariants double_cover_invariants(const DoubleCoverScenario& s);

bool albanese_gate(const Integer& k_y_sq, const Integer& q_y);

class ParityError : public std::invalid_argument {
public:
    ParityError(int j, int k)
        : std::invalid_argument("D" + std::to_string(j) + " + D" + std::to_string(k) + " is not divisible by 2"),
          pair(j, k) {}
    std::pair<int, int> pair;
};

struct BidoubleData {
    std::vector<DivisorClass> d[3];
    ConfigId cfg = ConfigId::General;

    DivisorClass total(int i) const;
    DivisorClass branch() const;
    /// L_i = (D_j + D_k)/2; throws ParityError.
    DivisorClass l_class(int i) const;
};

struct BidoubleInvariants {
    Integer pg;
    Integer q;
    Integer k_sq;
    bool bicanonical_is_cover;
    Integer chi;
};

BidoubleInvariants bidouble_invariants(const BidoubleData& b);

/// Equal up to permuting the three indices, each D_i compared as a multiset of classes.
bool same_family(const BidoubleData& a, const BidoubleData& b);

/// The two bundled bidouble examples, GENERAL configuration.
BidoubleData burniat_data();
BidoubleData second_bidouble_data();

/// Throws std::invalid_argument unless pullback_sq < 0.
bool ramification_check(const Rational& rprime_dot_pullback, const Rational& pullback_sq);

struct SurfaceNumbers {
    Integer euler;
    Integer h2;
    Integer max_disjoint_minus4;
};

SurfaceNumbers surface_numerology(const Integer& chi, const Integer& k_sq);

/// Ramification R = 3K_S of a degree-4 bicanonical map; returns 3.
int hurwitz_ramification_multiple();

struct RamificationTerm {
    Rational coeff;  // the component is coeff * phi^*(cls)
    SigmaClass cls;
};

struct ArdpNumbers {
    Rational residual_dot_pullback;
    Rational pullback_sq;
};

/// (R - sum of terms).phi^*(e) and (phi^*e)^2 for the degree-4 map with R = 3K_S.
ArdpNumbers ardp_numbers(const std::vector<RamificationTerm>& part, const SigmaClass& e);

}  // namespace dp5
