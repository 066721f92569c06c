#include "dp5/picard_lattice.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace dp5 {

namespace {

const std::vector<SurfaceConfiguration>& table() {
    static const std::vector<SurfaceConfiguration> t = {
        {ConfigId::General, {}, {}},
        {ConfigId::P1, {1, 2, 3}, {}},
        {ConfigId::P2, {1, 2, 3}, {{2, 3}}},
        {ConfigId::P3, {1, 2, 3}, {{1, 2, 3}}},
        {ConfigId::P4, {1, 2, 3}, {{3, 4}}},
        {ConfigId::P5, {1, 2, 3}, {{2, 3, 4}}},
        {ConfigId::P6, {1, 2, 3}, {{1, 2, 3, 4}}},
    };
    return t;
}

}  // namespace

std::string config_name(ConfigId id) {
    static const char* names[] = {"GENERAL", "P1", "P2", "P3", "P4", "P5", "P6"};
    return names[static_cast<int>(id)];
}

std::string SurfaceConfiguration::name() const { return config_name(id); }

int SurfaceConfiguration::next(int i) const {
    for (const auto& ch : near_chains)
        for (std::size_t k = 0; k + 1 < ch.size(); ++k)
            if (ch[k] == i) return ch[k + 1];
    return 0;
}

int SurfaceConfiguration::prev(int i) const {
    for (const auto& ch : near_chains)
        for (std::size_t k = 1; k < ch.size(); ++k)
            if (ch[k] == i) return ch[k - 1];
    return 0;
}

const SurfaceConfiguration& configuration(ConfigId id) { return table()[static_cast<int>(id)]; }

const std::vector<ConfigId>& all_configs() {
    static const std::vector<ConfigId> ids = {ConfigId::General, ConfigId::P1, ConfigId::P2, ConfigId::P3,
                                              ConfigId::P4,      ConfigId::P5, ConfigId::P6};
    return ids;
}

ConfigId parse_config(std::string_view name) {
    std::string s(name);
    for (auto& ch : s) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
    for (auto id : all_configs())
        if (config_name(id) == s) return id;
    throw std::invalid_argument("unknown configuration: " + std::string(name));
}

QDivisorClass to_q(const DivisorClass& d) {
    QDivisorClass q;
    for (std::size_t i = 0; i < 5; ++i) q[i] = Rational(d[i]);
    return q;
}

DivisorClass to_integral(const QDivisorClass& q) {
    DivisorClass d;
    for (std::size_t i = 0; i < 5; ++i) {
        if (!is_integral(q[i])) throw std::domain_error("class has non-integral coefficient " + to_string(q[i]));
        d[i] = numer(q[i]);
    }
    return d;
}

DivisorClass make_class(long c0, long c1, long c2, long c3, long c4) {
    return DivisorClass(Integer(c0), Integer(c1), Integer(c2), Integer(c3), Integer(c4));
}

DivisorClass line_class() { return make_class(1, 0, 0, 0, 0); }

DivisorClass exceptional(int i) {
    if (i < 1 || i > 4) throw std::out_of_range("exceptional index must be 1..4");
    DivisorClass d;
    d[i] = 1;
    return d;
}

template <class T>
static T pairing(const ClassVec<T>& a, const ClassVec<T>& b) {
    T s = a[0] * b[0];
    for (std::size_t i = 1; i < 5; ++i) s -= a[i] * b[i];
    return s;
}

Integer intersect(const DivisorClass& a, const DivisorClass& b) { return pairing(a, b); }
Rational intersect(const QDivisorClass& a, const QDivisorClass& b) { return pairing(a, b); }

DivisorClass canonical_class() { return make_class(-3, 1, 1, 1, 1); }
DivisorClass canonical_class(const SurfaceConfiguration&) { return canonical_class(); }

Integer riemann_roch_chi(const DivisorClass& d) {
    Integer twice = intersect(d, d) - intersect(d, canonical_class());
    if (twice % 2 != 0) throw std::logic_error("parity violation in Riemann-Roch");
    return 1 + twice / 2;
}

std::array<std::array<Integer, 5>, 5> curve_basis_matrix(const SurfaceConfiguration& cfg) {
    std::array<std::array<Integer, 5>, 5> m{};
    for (int j = 0; j < 5; ++j) {
        DivisorClass ej;
        ej[j] = 1;
        auto col = to_curve_basis(ej, cfg);
        for (int i = 0; i < 5; ++i) m[i][j] = col[i];
    }
    return m;
}

DivisorClass curve_basis_vector(int i, const SurfaceConfiguration& cfg) {
    std::array<Integer, 5> v{};
    v.at(i) = 1;
    return from_curve_basis(v, cfg);
}

static const char* kSymbols[5] = {"l", "e1", "e2", "e3", "e4"};

std::string format_coeffs(const std::array<Rational, 5>& v) {
    std::string out;
    for (int i = 0; i < 5; ++i) {
        const Rational& x = v[i];
        if (x == 0) continue;
        Rational a = x < 0 ? Rational(-x) : x;
        if (x < 0)
            out += "-";
        else if (!out.empty())
            out += "+";
        if (a != 1) out += to_string(a);
        out += kSymbols[i];
    }
    return out.empty() ? "0" : out;
}

std::string format_coeffs(const std::array<Integer, 5>& v) {
    std::array<Rational, 5> r;
    for (int i = 0; i < 5; ++i) r[i] = Rational(v[i]);
    return format_coeffs(r);
}

std::array<Rational, 5> parse_coeffs(std::string_view text) {
    std::string s;
    for (char ch : text) s += static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
    if (s.empty()) throw std::invalid_argument("empty class literal");
    std::array<Rational, 5> v{};
    if (s == "0") return v;
    std::size_t i = 0;
    bool first = true;
    while (i < s.size()) {
        bool neg = false;
        if (s[i] == '+' || s[i] == '-') {
            neg = s[i] == '-';
            ++i;
        } else if (!first) {
            throw std::invalid_argument("expected '+' or '-' in class literal: " + std::string(text));
        }
        first = false;
        std::size_t start = i;
        while (i < s.size() && (std::isdigit(static_cast<unsigned char>(s[i])) || s[i] == '/')) ++i;
        Rational coef = 1;
        if (i > start) coef = parse_rational(std::string_view(s).substr(start, i - start));
        int idx = -1;
        if (i < s.size() && s[i] == 'l') {
            idx = 0;
            ++i;
        } else if (i + 1 < s.size() && s[i] == 'e' && s[i + 1] >= '1' && s[i + 1] <= '4') {
            idx = s[i + 1] - '0';
            i += 2;
        }
        if (idx < 0) throw std::invalid_argument("malformed class literal: " + std::string(text));
        v[idx] += neg ? Rational(-coef) : coef;
    }
    return v;
}

QDivisorClass parse_qclass(std::string_view s, Basis basis, const SurfaceConfiguration& cfg) {
    auto v = parse_coeffs(s);
    return basis == Basis::Standard ? QDivisorClass(v) : from_curve_basis(v, cfg);
}

DivisorClass parse_class(std::string_view s, Basis basis, const SurfaceConfiguration& cfg) {
    return to_integral(parse_qclass(s, basis, cfg));
}

std::string format_class(const QDivisorClass& d, Basis basis, const SurfaceConfiguration& cfg) {
    return format_coeffs(basis == Basis::Standard ? d.c : to_curve_basis(d, cfg));
}

std::string format_class(const DivisorClass& d, Basis basis, const SurfaceConfiguration& cfg) {
    return format_coeffs(basis == Basis::Standard ? d.c : to_curve_basis(d, cfg));
}

}  // namespace dp5
