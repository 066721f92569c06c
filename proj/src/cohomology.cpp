#include "dp5/cohomology.hpp"

#include "dp5/curve_geometry.hpp"
#include "dp5/linalg.hpp"

namespace dp5 {

namespace {
constexpr int kIterationCap = 10000;
}

bool is_minus_two_combination(const DivisorClass& d, const SurfaceConfiguration& cfg) {
    if (d.is_zero()) return true;
    auto theta = minus_two_curves(cfg);
    if (theta.empty()) return false;
    const std::size_t n = theta.size();
    RMatrix g(n, RVector(n));
    RVector rhs(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) g[i][j] = Rational(intersect(theta[i].cls, theta[j].cls));
        rhs[i] = Rational(intersect(d, theta[i].cls));
    }
    auto x = solve(g, rhs);
    if (!x) throw std::logic_error("(-2) Gram matrix is singular");
    QDivisorClass sum;
    for (std::size_t i = 0; i < n; ++i) {
        if ((*x)[i] < 0 || !is_integral((*x)[i])) return false;
        sum += (*x)[i] * to_q(theta[i].cls);
    }
    return sum == to_q(d);
}

H0Result h0_with_trace(const DivisorClass& d0, const SurfaceConfiguration& cfg) {
    const DivisorClass mk = -canonical_class();
    H0Result r{0, {}, d0};
    DivisorClass& d = r.moving;
    if (intersect(d, mk) < 0) return r;
    const auto curves = negative_curves(cfg);
    for (int iter = 0;; ++iter) {
        if (iter >= kIterationCap) throw ReductionFault("h0 reduction exceeded iteration cap", r.trace);
        const NegativeCurve* hit = nullptr;
        Integer dc;
        for (const auto& c : curves) {
            dc = intersect(d, c.cls);
            if (dc < 0) {
                hit = &c;
                break;
            }
        }
        if (!hit) break;
        Integer m = ceil_div(dc, intersect(hit->cls, hit->cls));
        d -= m * hit->cls;
        r.trace.push_back({hit->cls, m});
        if (intersect(d, mk) < 0) return r;
    }
    Integer dk = intersect(d, mk);
    if (dk > 0)
        r.value = riemann_roch_chi(d);
    else
        r.value = is_minus_two_combination(d, cfg) ? 1 : 0;
    return r;
}

Integer h0(const DivisorClass& d, const SurfaceConfiguration& cfg) { return h0_with_trace(d, cfg).value; }

bool is_effective(const DivisorClass& d, const SurfaceConfiguration& cfg) { return h0(d, cfg) >= 1; }

std::vector<DivisorClass> verify_lemma_4_5(int bound, bool require_effective_residual) {
    if (bound < 1) throw std::invalid_argument("coefficient bound must be positive");
    const auto& g = configuration(ConfigId::General);
    const DivisorClass mk = -canonical_class();
    std::vector<DivisorClass> out;
    for (long a = -bound; a <= bound; ++a)
        for (long b1 = -bound; b1 <= bound; ++b1)
            for (long b2 = -bound; b2 <= bound; ++b2)
                for (long b3 = -bound; b3 <= bound; ++b3)
                    for (long b4 = -bound; b4 <= bound; ++b4) {
                        auto d = make_class(a, b1, b2, b3, b4);
                        if (h0(d, g) <= 1) continue;
                        if (require_effective_residual && !is_effective(mk - Integer(2) * d, g)) continue;
                        out.push_back(d);
                    }
    return out;
}

}  // namespace dp5
