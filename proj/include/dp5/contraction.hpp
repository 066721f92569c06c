#pragma once

#include "dp5/curve_geometry.hpp"
#include "dp5/picard_lattice.hpp"

#include <string>
#include <vector>

namespace dp5 {

/// Class on the contracted surface, named by a representative upstairs.
struct SigmaClass {
    DivisorClass rep;
    ConfigId cfg;
};

struct PullbackTerms {
    QDivisorClass cls;
    /// Coefficient of each (-2)-curve, in minus_two_curves(cfg) order.
    std::vector<Rational> theta_coeffs;
};

PullbackTerms mumford_pullback_terms(const SigmaClass& s);
QDivisorClass mumford_pullback(const SigmaClass& s);
Rational sigma_intersect(const SigmaClass& s, const SigmaClass& t);

/// True iff q - rep(s) lies in the rational span of the (-2)-curves.
bool pushes_forward_to(const QDivisorClass& q, const SigmaClass& s);

/// Sorted ADE labels of the components of a graph given by its adjacency matrix.
std::vector<std::string> ade_components(const std::vector<std::vector<int>>& adj);

/// One label per connected component of the (-2)-curve graph, e.g. "A2".
std::vector<std::string> singularity_types(const SurfaceConfiguration& cfg);

/// Name of a (-2)-curve in curve-basis notation: "c" or "e2" etc.
std::string theta_label(const DivisorClass& theta, const SurfaceConfiguration& cfg);

/// Renders a pullback as "rep+2/3e3+1/3c" with rep in curve basis.
std::string format_pullback(const SigmaClass& s);

}  // namespace dp5
