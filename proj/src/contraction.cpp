#include "dp5/contraction.hpp"

#include "dp5/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace dp5 {

namespace {

RMatrix theta_gram(const std::vector<NegativeCurve>& theta) {
    RMatrix g(theta.size(), RVector(theta.size()));
    for (std::size_t i = 0; i < theta.size(); ++i)
        for (std::size_t j = 0; j < theta.size(); ++j) g[i][j] = Rational(intersect(theta[i].cls, theta[j].cls));
    return g;
}

}  // namespace

PullbackTerms mumford_pullback_terms(const SigmaClass& s) {
    const auto& cfg = configuration(s.cfg);
    auto theta = minus_two_curves(cfg);
    PullbackTerms out{to_q(s.rep), {}};
    if (theta.empty()) return out;
    RVector rhs(theta.size());
    for (std::size_t j = 0; j < theta.size(); ++j) rhs[j] = -Rational(intersect(s.rep, theta[j].cls));
    auto x = solve(theta_gram(theta), rhs);
    if (!x) throw std::logic_error("(-2) Gram matrix is singular");
    out.theta_coeffs = *x;
    for (std::size_t j = 0; j < theta.size(); ++j) out.cls += (*x)[j] * to_q(theta[j].cls);
    return out;
}

QDivisorClass mumford_pullback(const SigmaClass& s) { return mumford_pullback_terms(s).cls; }

Rational sigma_intersect(const SigmaClass& s, const SigmaClass& t) {
    if (s.cfg != t.cfg) throw std::invalid_argument("sigma_intersect: configurations differ");
    return intersect(mumford_pullback(s), mumford_pullback(t));
}

bool pushes_forward_to(const QDivisorClass& q, const SigmaClass& s) {
    auto theta = minus_two_curves(configuration(s.cfg));
    QDivisorClass diff = q - to_q(s.rep);
    if (theta.empty()) return diff.is_zero();
    RVector rhs(theta.size());
    for (std::size_t j = 0; j < theta.size(); ++j) rhs[j] = intersect(diff, to_q(theta[j].cls));
    auto x = solve(theta_gram(theta), rhs);
    QDivisorClass span;
    for (std::size_t j = 0; j < theta.size(); ++j) span += (*x)[j] * to_q(theta[j].cls);
    return span == diff;
}

std::vector<std::string> ade_components(const std::vector<std::vector<int>>& adj) {
    const std::size_t n = adj.size();
    std::vector<int> comp(n, -1);
    std::vector<std::string> labels;
    for (std::size_t s = 0; s < n; ++s) {
        if (comp[s] >= 0) continue;
        std::vector<std::size_t> members{s}, stack{s};
        comp[s] = static_cast<int>(labels.size());
        while (!stack.empty()) {
            auto u = stack.back();
            stack.pop_back();
            for (std::size_t v = 0; v < n; ++v)
                if (comp[v] < 0 && adj[u][v] > 0) {
                    comp[v] = comp[s];
                    members.push_back(v);
                    stack.push_back(v);
                }
        }
        std::vector<int> degree;
        for (auto u : members) {
            int d = 0;
            for (auto v : members)
                if (u != v && adj[u][v] > 0) ++d;
            degree.push_back(d);
        }
        const auto k = members.size();
        int branch = static_cast<int>(std::count(degree.begin(), degree.end(), 3));
        if (branch == 0) {
            labels.push_back("A" + std::to_string(k));
        } else {
            // one trivalent vertex with arms p <= q <= r
            std::size_t centre = 0;
            while (degree[centre] != 3) ++centre;
            std::vector<int> arms;
            for (auto v : members) {
                if (v == members[centre] || adj[members[centre]][v] <= 0) continue;
                int len = 1;
                std::size_t prev = members[centre], cur = v;
                for (;;) {
                    std::size_t nxt = n;
                    for (auto w : members)
                        if (w != prev && w != cur && adj[cur][w] > 0) nxt = w;
                    if (nxt == n) break;
                    prev = cur;
                    cur = nxt;
                    ++len;
                }
                arms.push_back(len);
            }
            std::sort(arms.begin(), arms.end());
            labels.push_back((arms[1] == 1 ? "D" : "E") + std::to_string(k));
        }
    }
    std::sort(labels.begin(), labels.end());
    return labels;
}

std::vector<std::string> singularity_types(const SurfaceConfiguration& cfg) {
    auto theta = minus_two_curves(cfg);
    std::vector<std::vector<int>> adj(theta.size(), std::vector<int>(theta.size(), 0));
    for (std::size_t u = 0; u < theta.size(); ++u)
        for (std::size_t v = 0; v < theta.size(); ++v)
            if (u != v && intersect(theta[u].cls, theta[v].cls) > 0) adj[u][v] = 1;
    return ade_components(adj);
}

std::string theta_label(const DivisorClass& theta, const SurfaceConfiguration& cfg) {
    for (int i = 1; i <= 4; ++i)
        if (curve_basis_vector(i, cfg) == theta) return "e" + std::to_string(i);
    DivisorClass c = line_class();
    for (int i : cfg.collinear_set) c -= exceptional(i);
    if (cfg.collinear_set.size() == 3 && c == theta) return "c";
    return format_class(theta, Basis::Curve, cfg);
}

std::string format_pullback(const SigmaClass& s) {
    const auto& cfg = configuration(s.cfg);
    auto terms = mumford_pullback_terms(s);
    auto theta = minus_two_curves(cfg);
    std::string out = format_class(s.rep, Basis::Curve, cfg);
    for (std::size_t j = 0; j < theta.size(); ++j) {
        const Rational& x = terms.theta_coeffs[j];
        if (x == 0) continue;
        Rational a = x < 0 ? Rational(-x) : x;
        out += x < 0 ? "-" : "+";
        if (a != 1) out += to_string(a);
        out += theta_label(theta[j].cls, cfg);
    }
    return out;
}

}  // namespace dp5
