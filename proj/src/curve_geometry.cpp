#include "dp5/curve_geometry.hpp"

#include "dp5/cohomology.hpp"

#include <algorithm>
#include <stdexcept>

namespace dp5 {

namespace {

DivisorClass collinearity_class(const SurfaceConfiguration& cfg) {
    DivisorClass c = line_class();
    for (int i : cfg.collinear_set) c -= exceptional(i);
    return c;
}

std::vector<NegativeCurve> compute_minus_two(const SurfaceConfiguration& cfg) {
    std::vector<NegativeCurve> out;
    if (cfg.collinear_set.size() == 3) out.push_back({collinearity_class(cfg), CurveKind::MinusTwo});
    for (const auto& ch : cfg.near_chains)
        for (std::size_t k = 0; k + 1 < ch.size(); ++k)
            out.push_back({exceptional(ch[k]) - exceptional(ch[k + 1]), CurveKind::MinusTwo});
    return out;
}

bool pairs_nonnegative(const DivisorClass& d, const std::vector<NegativeCurve>& curves) {
    for (const auto& t : curves)
        if (!(t.cls == d) && intersect(d, t.cls) < 0) return false;
    return true;
}

std::vector<NegativeCurve> compute_minus_one(const SurfaceConfiguration& cfg) {
    auto theta = compute_minus_two(cfg);
    std::vector<NegativeCurve> out;
    for (const auto& c : minus_one_classes())
        if (pairs_nonnegative(c, theta)) out.push_back({c, CurveKind::MinusOne});
    return out;
}

template <class F>
const std::vector<NegativeCurve>& memo(ConfigId id, F compute) {
    // Built once per configuration; static initialization is thread-safe.
    static const std::vector<std::vector<NegativeCurve>> cache = [&] {
        std::vector<std::vector<NegativeCurve>> v;
        for (auto c : all_configs()) v.push_back(compute(configuration(c)));
        return v;
    }();
    return cache[static_cast<int>(id)];
}

}  // namespace

std::vector<DivisorClass> minus_one_classes() {
    std::vector<DivisorClass> out;
    for (int i = 1; i <= 4; ++i) out.push_back(exceptional(i));
    for (int i = 1; i <= 4; ++i)
        for (int j = i + 1; j <= 4; ++j) out.push_back(line_class() - exceptional(i) - exceptional(j));
    return out;
}

std::vector<DivisorClass> root_classes() {
    std::vector<DivisorClass> out;
    const auto k = canonical_class();
    for (long a = -2; a <= 2; ++a)
        for (long b1 = -2; b1 <= 2; ++b1)
            for (long b2 = -2; b2 <= 2; ++b2)
                for (long b3 = -2; b3 <= 2; ++b3)
                    for (long b4 = -2; b4 <= 2; ++b4) {
                        auto d = make_class(a, b1, b2, b3, b4);
                        if (intersect(d, d) == -2 && intersect(d, k) == 0) out.push_back(d);
                    }
    return out;
}

std::vector<NegativeCurve> minus_two_curves(const SurfaceConfiguration& cfg) {
    return memo(cfg.id, [](const SurfaceConfiguration& c) { return compute_minus_two(c); });
}

std::vector<NegativeCurve> minus_one_curves(const SurfaceConfiguration& cfg) {
    return memo(cfg.id, [](const SurfaceConfiguration& c) { return compute_minus_one(c); });
}

std::vector<NegativeCurve> negative_curves(const SurfaceConfiguration& cfg) {
    auto out = minus_one_curves(cfg);
    auto two = minus_two_curves(cfg);
    out.insert(out.end(), two.begin(), two.end());
    return out;
}

std::vector<std::vector<Integer>> incidence_graph(const SurfaceConfiguration& cfg) {
    auto curves = negative_curves(cfg);
    std::vector<std::vector<Integer>> m(curves.size(), std::vector<Integer>(curves.size()));
    for (std::size_t i = 0; i < curves.size(); ++i)
        for (std::size_t j = 0; j < curves.size(); ++j) m[i][j] = intersect(curves[i].cls, curves[j].cls);
    return m;
}

bool is_irreducible(const DivisorClass& d, const SurfaceConfiguration& cfg) {
    Integer sq = intersect(d, d), dk = intersect(d, canonical_class());
    bool minus_one = sq == -1 && dk == -1;
    bool minus_two = sq == -2 && dk == 0;
    if (!minus_one && !minus_two) throw std::invalid_argument("is_irreducible expects a (-1)- or (-2)-class");
    if (!is_effective(d, cfg)) return false;
    return pairs_nonnegative(d, negative_curves(cfg));
}

std::vector<DivisorClass> ruling_classes(const SurfaceConfiguration& cfg, bool require_minus_two_orthogonal) {
    // f^2 = 0 and -K.f = 2 force 1 <= a <= 2 and |b_i| <= a by Cauchy-Schwarz; scan a wider box.
    const auto mk = -canonical_class();
    const auto curves = negative_curves(cfg);
    std::vector<DivisorClass> out;
    for (long a = 0; a <= 3; ++a)
        for (long b1 = -3; b1 <= 3; ++b1)
            for (long b2 = -3; b2 <= 3; ++b2)
                for (long b3 = -3; b3 <= 3; ++b3)
                    for (long b4 = -3; b4 <= 3; ++b4) {
                        auto f = make_class(a, b1, b2, b3, b4);
                        if (intersect(f, f) != 0 || intersect(f, mk) != 2) continue;
                        bool ok = std::all_of(curves.begin(), curves.end(),
                                              [&](const NegativeCurve& c) { return intersect(f, c.cls) >= 0; });
                        if (!ok) continue;
                        if (require_minus_two_orthogonal) {
                            for (const auto& c : curves)
                                if (c.kind == CurveKind::MinusTwo && intersect(f, c.cls) != 0) ok = false;
                            if (!ok) continue;
                        }
                        if (h0(f, cfg) >= 2) out.push_back(f);
                    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace dp5
