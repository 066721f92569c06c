#pragma once

#include "dp5/arith.hpp"

#include <array>
#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace dp5 {

enum class ConfigId { General, P1, P2, P3, P4, P5, P6 };

enum class Basis { Standard, Curve };

/**
 * Point configuration of the four blown-up points. Points are 1-based.
 * A chain lists points in order, each infinitely near the previous one.
 */
struct SurfaceConfiguration {
    ConfigId id;
    std::vector<int> collinear_set;
    std::vector<std::vector<int>> near_chains;

    std::string name() const;
    /// Point immediately infinitely near to i, or 0.
    int next(int i) const;
    /// Point that i is immediately infinitely near to, or 0.
    int prev(int i) const;
};

const SurfaceConfiguration& configuration(ConfigId id);
const std::vector<ConfigId>& all_configs();
/// Accepts GENERAL, P1..P6 (case-insensitive); throws std::invalid_argument.
ConfigId parse_config(std::string_view name);
std::string config_name(ConfigId id);

/// Coefficients of c0*L + c1*e1 + ... + c4*e4.
template <class T>
struct ClassVec {
    std::array<T, 5> c{};

    ClassVec() = default;
    explicit ClassVec(std::array<T, 5> v) : c(std::move(v)) {}
    ClassVec(T c0, T c1, T c2, T c3, T c4) : c{std::move(c0), std::move(c1), std::move(c2), std::move(c3), std::move(c4)} {}

    T& operator[](std::size_t i) { return c[i]; }
    const T& operator[](std::size_t i) const { return c[i]; }

    ClassVec& operator+=(const ClassVec& o) {
        for (std::size_t i = 0; i < 5; ++i) c[i] += o.c[i];
        return *this;
    }
    ClassVec& operator-=(const ClassVec& o) {
        for (std::size_t i = 0; i < 5; ++i) c[i] -= o.c[i];
        return *this;
    }
    friend ClassVec operator+(ClassVec a, const ClassVec& b) { return a += b; }
    friend ClassVec operator-(ClassVec a, const ClassVec& b) { return a -= b; }
    friend ClassVec operator-(ClassVec a) {
        for (auto& x : a.c) x = -x;
        return a;
    }
    friend ClassVec operator*(const T& k, ClassVec a) {
        for (auto& x : a.c) x *= k;
        return a;
    }
    friend bool operator==(const ClassVec& a, const ClassVec& b) { return a.c == b.c; }
    friend bool operator<(const ClassVec& a, const ClassVec& b) { return a.c < b.c; }

    bool is_zero() const {
        for (const auto& x : c)
            if (x != 0) return false;
        return true;
    }
};

using DivisorClass = ClassVec<Integer>;
using QDivisorClass = ClassVec<Rational>;

QDivisorClass to_q(const DivisorClass& d);
/// Throws std::domain_error if some coefficient is not an integer.
DivisorClass to_integral(const QDivisorClass& q);

DivisorClass make_class(long c0, long c1, long c2, long c3, long c4);
DivisorClass line_class();
DivisorClass exceptional(int i);

Integer intersect(const DivisorClass& a, const DivisorClass& b);
Rational intersect(const QDivisorClass& a, const QDivisorClass& b);

/// Same standard-basis vector for every configuration.
DivisorClass canonical_class(const SurfaceConfiguration& cfg);
DivisorClass canonical_class();

Integer riemann_roch_chi(const DivisorClass& d);

template <class T>
std::array<T, 5> to_curve_basis(const ClassVec<T>& d, const SurfaceConfiguration& cfg) {
    std::array<T, 5> v = d.c;
    for (const auto& chain : cfg.near_chains)
        for (std::size_t k = 1; k < chain.size(); ++k) v[chain[k]] += v[chain[k - 1]];
    return v;
}

template <class T>
ClassVec<T> from_curve_basis(const std::array<T, 5>& v, const SurfaceConfiguration& cfg) {
    ClassVec<T> d(v);
    for (const auto& chain : cfg.near_chains)
        for (std::size_t k = 1; k < chain.size(); ++k) d[chain[k]] = v[chain[k]] - v[chain[k - 1]];
    return d;
}

/// Change of basis matrix M with curve = M * standard.
std::array<std::array<Integer, 5>, 5> curve_basis_matrix(const SurfaceConfiguration& cfg);

/// Standard-basis class of the i-th curve basis vector (0 = l, 1..4 = e_i).
DivisorClass curve_basis_vector(int i, const SurfaceConfiguration& cfg);

/// Paper-style literal such as "3l-e1-e2-e3-e4" or "l+2/3e3".
std::string format_coeffs(const std::array<Rational, 5>& v);
std::string format_coeffs(const std::array<Integer, 5>& v);
/// Whitespace-free, case-insensitive; throws std::invalid_argument.
std::array<Rational, 5> parse_coeffs(std::string_view s);

/// Parse a literal in the given basis and return the standard-basis class.
DivisorClass parse_class(std::string_view s, Basis basis, const SurfaceConfiguration& cfg);
QDivisorClass parse_qclass(std::string_view s, Basis basis, const SurfaceConfiguration& cfg);
std::string format_class(const DivisorClass& d, Basis basis, const SurfaceConfiguration& cfg);
std::string format_class(const QDivisorClass& d, Basis basis, const SurfaceConfiguration& cfg);

}  // namespace dp5
