#include "dp5/symmetry.hpp"

#include "dp5/curve_geometry.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace dp5 {

LatticeAutomorphism LatticeAutomorphism::identity() {
    LatticeAutomorphism g;
    for (int i = 0; i < 5; ++i) g.m[i][i] = 1;
    return g;
}

DivisorClass LatticeAutomorphism::apply(const DivisorClass& d) const {
    DivisorClass out;
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) out[i] += m[i][j] * d[j];
    return out;
}

QDivisorClass LatticeAutomorphism::apply(const QDivisorClass& d) const {
    QDivisorClass out;
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) out[i] += Rational(m[i][j]) * d[j];
    return out;
}

LatticeAutomorphism operator*(const LatticeAutomorphism& a, const LatticeAutomorphism& b) {
    LatticeAutomorphism c;
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j)
            for (int k = 0; k < 5; ++k) c.m[i][j] += a.m[i][k] * b.m[k][j];
    return c;
}

bool LatticeAutomorphism::preserves_form() const {
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) {
            DivisorClass a, b;
            a[i] = 1;
            b[j] = 1;
            if (intersect(apply(a), apply(b)) != intersect(a, b)) return false;
        }
    return true;
}

bool LatticeAutomorphism::fixes_canonical() const { return apply(canonical_class()) == canonical_class(); }

LatticeAutomorphism perm_automorphism(const std::array<int, 4>& s) {
    std::array<int, 4> sorted = s;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != std::array<int, 4>{1, 2, 3, 4}) throw std::invalid_argument("not a permutation of {1,2,3,4}");
    LatticeAutomorphism g;
    g.m[0][0] = 1;
    for (int i = 1; i <= 4; ++i) g.m[s[i - 1]][i] = 1;
    return g;
}

LatticeAutomorphism transposition(int i, int j) {
    std::array<int, 4> s{1, 2, 3, 4};
    std::swap(s.at(i - 1), s.at(j - 1));
    return perm_automorphism(s);
}

LatticeAutomorphism cremona_automorphism(const std::vector<int>& base) {
    std::vector<int> b = base;
    std::sort(b.begin(), b.end());
    if (b.size() != 3 || std::unique(b.begin(), b.end()) != b.end() || b.front() < 1 || b.back() > 4)
        throw std::invalid_argument("cremona base must be a 3-subset of {1,2,3,4}");
    LatticeAutomorphism g;
    auto set_col = [&](int col, const DivisorClass& img) {
        for (int r = 0; r < 5; ++r) g.m[r][col] = img[r];
    };
    DivisorClass l2 = Integer(2) * line_class();
    for (int i : b) l2 -= exceptional(i);
    set_col(0, l2);
    for (int i = 1; i <= 4; ++i) {
        if (std::find(b.begin(), b.end(), i) == b.end()) {
            set_col(i, exceptional(i));
            continue;
        }
        DivisorClass img = line_class();
        for (int j : b)
            if (j != i) img -= exceptional(j);
        set_col(i, img);
    }
    return g;
}

std::vector<LatticeAutomorphism> generate_group() {
    std::vector<LatticeAutomorphism> gens;
    for (int i = 1; i <= 4; ++i)
        for (int j = i + 1; j <= 4; ++j) gens.push_back(transposition(i, j));
    for (int skip = 1; skip <= 4; ++skip) {
        std::vector<int> base;
        for (int i = 1; i <= 4; ++i)
            if (i != skip) base.push_back(i);
        gens.push_back(cremona_automorphism(base));
    }
    std::set<LatticeAutomorphism> seen{LatticeAutomorphism::identity()};
    std::vector<LatticeAutomorphism> frontier{LatticeAutomorphism::identity()};
    while (!frontier.empty()) {
        std::vector<LatticeAutomorphism> next;
        for (const auto& g : frontier)
            for (const auto& h : gens) {
                auto gh = h * g;
                if (seen.insert(gh).second) {
                    if (seen.size() > 1000) throw std::runtime_error("group closure exceeded 1000 elements");
                    next.push_back(gh);
                }
            }
        frontier = std::move(next);
    }
    return {seen.begin(), seen.end()};
}

namespace {

int line_index(const std::vector<DivisorClass>& lines, const DivisorClass& c) {
    auto it = std::find(lines.begin(), lines.end(), c);
    if (it == lines.end()) throw std::logic_error("automorphism does not permute the lines");
    return static_cast<int>(it - lines.begin());
}

}  // namespace

std::vector<std::vector<DivisorClass>> line_orbits(const std::vector<LatticeAutomorphism>& group) {
    auto lines = minus_one_classes();
    std::vector<int> orbit_of(lines.size(), -1);
    std::vector<std::vector<DivisorClass>> out;
    for (std::size_t i = 0; i < lines.size(); ++i) {
        if (orbit_of[i] >= 0) continue;
        std::vector<DivisorClass> orbit;
        for (const auto& g : group) {
            int j = line_index(lines, g.apply(lines[i]));
            if (orbit_of[j] < 0) {
                orbit_of[j] = static_cast<int>(out.size());
                orbit.push_back(lines[j]);
            }
        }
        std::sort(orbit.begin(), orbit.end());
        out.push_back(orbit);
    }
    return out;
}

Fact35Report verify_fact_3_5() {
    const auto group = generate_group();
    const auto lines = minus_one_classes();
    const int n = static_cast<int>(lines.size());
    // image[g][i] = index of g(line i)
    std::vector<std::vector<int>> image;
    for (const auto& g : group) {
        std::vector<int> row;
        for (const auto& c : lines) row.push_back(line_index(lines, g.apply(c)));
        image.push_back(row);
    }
    Fact35Report r{true, true, true};
    for (int j = 0; j < n; ++j) {
        bool hit = std::any_of(image.begin(), image.end(), [&](const std::vector<int>& im) { return im[0] == j; });
        r.transitive_on_lines = r.transitive_on_lines && hit;
    }
    for (int c = 0; c < n; ++c) {
        std::vector<int> disjoint;
        for (int j = 0; j < n; ++j)
            if (j != c && intersect(lines[c], lines[j]) == 0) disjoint.push_back(j);
        for (int c2 : disjoint) {
            bool hit = false;
            for (const auto& im : image)
                if (im[c] == c && im[disjoint[0]] == c2) hit = true;
            r.stabilizer_transitive_on_disjoint = r.stabilizer_transitive_on_disjoint && hit;
        }
    }
    std::vector<std::pair<int, int>> pairs;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (a != b && intersect(lines[a], lines[b]) == 0) pairs.push_back({a, b});
    for (const auto& p : pairs) {
        bool hit = false;
        for (const auto& im : image)
            if (im[pairs[0].first] == p.first && im[pairs[0].second] == p.second) hit = true;
        r.transitive_on_disjoint_pairs = r.transitive_on_disjoint_pairs && hit;
    }
    return r;
}

BidoubleData transport_cover_data(const BidoubleData& data, const LatticeAutomorphism& g) {
    BidoubleData out;
    out.cfg = data.cfg;
    for (int i = 0; i < 3; ++i)
        for (const auto& c : data.d[i]) out.d[i].push_back(g.apply(c));
    return out;
}

}  // namespace dp5
