#include "dp5/covers.hpp"

#include "dp5/cohomology.hpp"

#include <algorithm>
#include <array>

namespace dp5 {

Rational DoubleCoverScenario::kpm_sq() const {
    if (k_plus_m_sq) return *k_plus_m_sq;
    return k_sq + 2 * m_dot_k + m_sq;
}

DoubleCoverScenario DoubleCoverScenario::from_branch(Integer chi_base, Rational d_dot_k, Rational d_sq) {
    DoubleCoverScenario s;
    s.chi_base = std::move(chi_base);
    s.m_dot_k = d_dot_k / 2;
    s.m_sq = d_sq / 4;
    return s;
}

DoubleCoverScenario DoubleCoverScenario::from_sigma_class(Integer chi_base, const QDivisorClass& m) {
    DoubleCoverScenario s;
    s.chi_base = std::move(chi_base);
    s.m_dot_k = 2 * intersect(m, to_q(-canonical_class()));
    s.m_sq = 4 * intersect(m, m);
    return s;
}

DoubleCoverInvariants double_cover_invariants(const DoubleCoverScenario& s) {
    DoubleCoverInvariants out;
    out.chi = 2 * Rational(s.chi_base) + (s.m_dot_k + s.m_sq) / 2;
    out.k_sq = 2 * s.kpm_sq();
    out.pg_lower = 0;
    if (s.pg_bound_class) out.pg_lower = h0(s.pg_bound_class->cls, configuration(s.pg_bound_class->cfg));
    out.chi_integral = is_integral(out.chi);
    if (out.chi_integral) {
        out.q_lower = out.pg_lower + 1 - numer(out.chi);
        if (is_integral(out.k_sq) && *out.q_lower >= 0) out.albanese_ok = albanese_gate(numer(out.k_sq), *out.q_lower);
    }
    return out;
}

bool albanese_gate(const Integer& k_y_sq, const Integer& q_y) {
    if (q_y < 0) throw std::invalid_argument("irregularity must be non-negative");
    return k_y_sq >= 16 * (q_y - 1);
}

DivisorClass BidoubleData::total(int i) const {
    DivisorClass s;
    for (const auto& c : d[i]) s += c;
    return s;
}

DivisorClass BidoubleData::branch() const { return total(0) + total(1) + total(2); }

DivisorClass BidoubleData::l_class(int i) const {
    int j = (i + 1) % 3, k = (i + 2) % 3;
    DivisorClass s = total(j) + total(k);
    for (std::size_t n = 0; n < 5; ++n)
        if (s[n] % 2 != 0) throw ParityError(std::min(j, k) + 1, std::max(j, k) + 1);
    for (std::size_t n = 0; n < 5; ++n) s[n] /= 2;
    return s;
}

BidoubleInvariants bidouble_invariants(const BidoubleData& b) {
    const auto& cfg = configuration(b.cfg);
    const DivisorClass k = canonical_class();
    BidoubleInvariants out{0, 0, 0, true, 0};
    DivisorClass twice = Integer(2) * k + b.branch();
    out.k_sq = intersect(twice, twice);
    Integer twice_chi = 8;  // 2 * 4 * chi(O_Sigma)
    for (int i = 0; i < 3; ++i) {
        DivisorClass li = b.l_class(i);
        twice_chi += intersect(li, k + li);
        out.pg += h0(k + li, cfg);
        if (h0(-k - li, cfg) != 0) out.bicanonical_is_cover = false;
    }
    if (twice_chi % 2 != 0) throw std::logic_error("non-integral holomorphic Euler characteristic");
    out.chi = twice_chi / 2;
    out.q = out.pg + 1 - out.chi;
    return out;
}

bool same_family(const BidoubleData& a, const BidoubleData& b) {
    if (a.cfg != b.cfg) return false;
    auto sorted = [](std::vector<DivisorClass> v) {
        std::sort(v.begin(), v.end());
        return v;
    };
    std::array<std::vector<DivisorClass>, 3> x, y;
    for (int i = 0; i < 3; ++i) {
        x[i] = sorted(a.d[i]);
        y[i] = sorted(b.d[i]);
    }
    std::array<int, 3> p{0, 1, 2};
    do {
        if (x[0] == y[p[0]] && x[1] == y[p[1]] && x[2] == y[p[2]]) return true;
    } while (std::next_permutation(p.begin(), p.end()));
    return false;
}

BidoubleData burniat_data() {
    auto c = [](const char* s) { return parse_class(s, Basis::Standard, configuration(ConfigId::General)); };
    BidoubleData b;
    b.d[0] = {c("e3"), c("l-e1-e2"), c("l-e1-e4"), c("l-e1")};
    b.d[1] = {c("e1"), c("l-e2-e3"), c("l-e2-e4"), c("l-e2")};
    b.d[2] = {c("e2"), c("l-e1-e3"), c("l-e3-e4"), c("l-e3")};
    return b;
}

BidoubleData second_bidouble_data() {
    auto c = [](const char* s) { return parse_class(s, Basis::Standard, configuration(ConfigId::General)); };
    BidoubleData b;
    b.d[0] = {c("l-e1"), c("e2"), c("e3"), c("e4")};
    b.d[1] = {c("e1"), c("l-e2-e3"), c("l-e2-e4"), c("l-e2")};
    b.d[2] = {c("l-e1-e3"), c("l-e1-e4"), c("l-e3-e4"), c("2l-e1-e2-e3-e4")};
    return b;
}

bool ramification_check(const Rational& x, const Rational& s) {
    if (s >= 0) throw std::invalid_argument("ramification_check needs a negative self-intersection");
    return x > s;
}

SurfaceNumbers surface_numerology(const Integer& chi, const Integer& k_sq) {
    SurfaceNumbers n;
    n.euler = 12 * chi - k_sq;
    n.h2 = n.euler - 2;
    n.max_disjoint_minus4 = floor_div(4 * (3 * n.euler - k_sq), Integer(25));
    return n;
}

int hurwitz_ramification_multiple() {
    // K_S = phi^*K_Sigma + R and 2K_S = -phi^*K_Sigma give R = K_S + 2K_S.
    return 3;
}

ArdpNumbers ardp_numbers(const std::vector<RamificationTerm>& part, const SigmaClass& e) {
    const SigmaClass mk{-canonical_class(), e.cfg};
    Rational sigma_side = Rational(3, 2) * sigma_intersect(mk, e);
    for (const auto& t : part) sigma_side -= t.coeff * sigma_intersect(t.cls, e);
    return {4 * sigma_side, 4 * sigma_intersect(e, e)};
}

}  // namespace dp5
